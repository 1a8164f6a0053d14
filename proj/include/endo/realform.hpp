#pragma once

#include "endo/rootdata.hpp"

#include <complex>
#include <string>
#include <vector>

namespace endo {

enum class Grade : int { compact = 0, noncompact = 1 };

/// Compact/noncompact labels on the roots of an elliptic Cartan.
class RealFormGrading {
 public:
  /// Extends the simple-root labels additively to every root.
  RealFormGrading(RootDatum datum, std::vector<Grade> simple_grades);

  const RootDatum& datum() const { return datum_; }
  const std::vector<Grade>& simple_grades() const { return simple_; }
  Grade grade(std::size_t root_index) const { return grades_.at(root_index); }
  bool is_compact(std::size_t root_index) const { return grade(root_index) == Grade::compact; }

  std::size_t num_compact_roots() const;
  std::size_t num_noncompact_roots() const;

 private:
  RootDatum datum_;
  std::vector<Grade> simple_;
  std::vector<Grade> grades_;
};

RealFormGrading build_grading(const RootDatum& datum, const std::vector<Grade>& simple_grades);

struct DimensionProfile {
  int dim_g = 0;
  int dim_t = 0;
  int dim_k = 0;
  int dim_g_over_t = 0;
  int dim_g_over_k = 0;
};

DimensionProfile dimension_profile(const RealFormGrading& grading);

/// exp(i*pi*k/4), stored exactly as k mod 8.
class EighthRoot {
 public:
  constexpr EighthRoot() = default;
  constexpr explicit EighthRoot(int k) : k_(((k % 8) + 8) % 8) {}

  constexpr int exponent() const { return k_; }
  std::complex<double> value() const;
  std::string to_string() const;

  constexpr EighthRoot operator*(EighthRoot rhs) const { return EighthRoot(k_ + rhs.k_); }
  constexpr EighthRoot inverse() const { return EighthRoot(-k_); }
  constexpr bool operator==(const EighthRoot&) const = default;

 private:
  int k_ = 0;
};

/// Weil constant of a real quadratic form of signature (p, q): exp(i*pi*(p-q)/4).
EighthRoot weil_constant(int p, int q);
/// Weil constant of g(R) from its grading: p = dim p, q = dim k.
EighthRoot weil_constant(const DimensionProfile& profile);

/// (-i)^{dim(g/t)/2} (-1)^{dim(g/k)/2}; throws if either dimension is odd.
EighthRoot prefactor(const DimensionProfile& profile);

/// True when w permutes the roots and keeps every root's grade.
bool preserves_grading(const RealFormGrading& grading, const IntMatrix& w);

/// Subgroup generated by compact-root reflections and validated extras.
std::vector<WeylElement> real_weyl_group(const RealFormGrading& grading,
                                         const std::vector<WeylElement>& extra_generators = {});

/// Class in X_* / 2X_* of n_w^{-1} sigma(n_w) for every element of `weyl`
/// (which must be the output of enumerate_weyl on the grading's datum).
/// Checks the cocycle rule on every (w, s_i) pair.
std::vector<IntVector> inv_cocycle(const RealFormGrading& grading, const std::vector<WeylElement>& weyl);

/// Elements of `weyl` with vanishing inv class.
std::vector<WeylElement> inv_kernel(const RealFormGrading& grading, const std::vector<WeylElement>& weyl);

/// Reduce entries into {0, 1}.
IntVector mod2(IntVector v);

}  // namespace endo
