#pragma once

#include "endo/lattice.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace endo {

/// Raised for malformed or inconsistent root-theoretic input.
class RootDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reduced root datum on an ambient torus of rank `rank()`.
///
/// Characters and cocharacters are integer vectors in dual bases, so the
/// pairing <alpha, lambda> is the plain dot product. The simple roots need
/// not span the character lattice: an endoscopic group carries the same
/// ambient torus as G with a smaller root system.
class RootDatum {
 public:
  /// Closes the simple system under simple reflections and checks every
  /// structural invariant. `form` is the Weyl-invariant form on the
  /// cocharacter space (integer Gram matrix).
  RootDatum(std::string label, std::size_t rank, std::vector<IntVector> simple_roots,
            std::vector<IntVector> simple_coroots, IntMatrix form);

  const std::string& label() const { return label_; }
  std::size_t rank() const { return rank_; }
  std::size_t semisimple_rank() const { return simple_roots_.size(); }

  const std::vector<IntVector>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVector>& simple_coroots() const { return simple_coroots_; }
  /// All roots; positive roots first, then their negatives in the same order.
  const std::vector<IntVector>& roots() const { return roots_; }
  const std::vector<IntVector>& coroots() const { return coroots_; }
  /// Coefficients of each root in the simple-root basis.
  const std::vector<IntVector>& root_coefficients() const { return coefficients_; }
  const IntMatrix& invariant_form() const { return form_; }

  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive_roots() const { return roots_.size() / 2; }
  bool is_positive(std::size_t root_index) const { return root_index < num_positive_roots(); }

  /// Index of a root given by character coordinates.
  std::optional<std::size_t> find_root(const IntVector& root) const;
  std::size_t negative_of(std::size_t root_index) const;

  /// A_ij = <alpha_i, alpha_j^vee>.
  IntMatrix cartan_matrix() const;

  /// Reflection in root `root_index`, acting on cocharacters.
  IntMatrix reflection(std::size_t root_index) const;
  IntMatrix simple_reflection(std::size_t i) const;

  /// True when the coroots span the cocharacter lattice.
  bool simply_connected() const;

 private:
  std::string label_;
  std::size_t rank_;
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<IntVector> coefficients_;
  IntMatrix form_;
  std::map<IntVector, std::size_t> index_;
};

/// Builds the simply connected datum for a Cartan type such as "A2", "C2",
/// "G2" or a product "A1xA1". Cocharacter coordinates are taken in the
/// simple-coroot basis, character coordinates in the fundamental-weight basis.
RootDatum build_root_datum(const std::string& type);

/// Invariant form normalized so that short coroots have squared length 2.
IntMatrix default_invariant_form(const IntMatrix& cartan);

struct WeylElement {
  IntMatrix matrix;        // action on cocharacters
  std::vector<int> word;   // reduced word in simple reflections (cache only)

  bool operator==(const WeylElement& rhs) const { return matrix == rhs.matrix; }
};

inline constexpr std::size_t kDefaultWeylCap = 1'000'000;

/// All Weyl group elements ordered by (length, lexicographic reduced word);
/// element 0 is the identity.
std::vector<WeylElement> enumerate_weyl(const RootDatum& datum,
                                        std::size_t cap = kDefaultWeylCap);

/// Closure of a generating set under composition, in discovery order starting
/// with the identity.
std::vector<WeylElement> generate_group(std::size_t rank, const std::vector<IntMatrix>& generators,
                                        std::size_t cap = kDefaultWeylCap);

int weyl_sign(const WeylElement& w);

/// Transpose-inverse action of w on a character vector.
IntVector act_on_character(const IntMatrix& w, const IntVector& character);

IntMatrix inverse_of(const IntMatrix& w);

enum class CosetSide { left, right };

/// One representative per coset gH (left) or Hg (right), in group order.
std::vector<WeylElement> coset_representatives(const std::vector<WeylElement>& group,
                                               const std::vector<WeylElement>& subgroup,
                                               CosetSide side = CosetSide::left);

bool contains(const std::vector<WeylElement>& group, const IntMatrix& m);

}  // namespace endo
