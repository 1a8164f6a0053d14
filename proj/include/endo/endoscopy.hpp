#pragma once

#include "endo/cohomology.hpp"
#include "endo/realform.hpp"
#include "endo/rootdata.hpp"

#include <complex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace endo {

using Vec = std::vector<double>;

class EndoscopyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an element lies on (or within tolerance of) a root wall.
class NonRegularError : public EndoscopyError {
 public:
  using EndoscopyError::EndoscopyError;
};

inline constexpr double kWallTolerance = 1e-9;
inline constexpr double kDiagramTolerance = 1e-9;

enum class HGalois { elliptic, split };

struct EndoscopicOptions {
  std::vector<Grade> h_grades;
  /// Galois action on the center of the dual of H (elliptic: -1, split: +1).
  HGalois h_galois = HGalois::elliptic;
  /// Explicit Sigma_H (character coordinates); must equal the kernel of s when given.
  std::optional<std::vector<IntVector>> h_roots;
  /// Extra real Weyl generators on the G side, as words in simple reflections.
  std::vector<std::vector<int>> real_weyl_extras;
  /// Extra real Weyl generators on the H side, as words in the simple reflections of H.
  std::vector<std::vector<int>> h_real_weyl_extras;
};

struct EllipticityCheck {
  bool elliptic = false;
  int invariant_center_rank_h = 0;  // rank of the Galois-fixed identity component of Z(H^)
  int center_rank_g = 0;            // rank of the identity component of Z(G^)
  std::string evidence;
};

/// An elliptic endoscopic datum for quasi-split G over R on its elliptic Cartan.
class EndoscopicDatum {
 public:
  EndoscopicDatum(const RealFormGrading& grading_g, RationalVector s_phases, const EndoscopicOptions& options);

  const RootDatum& g() const { return grading_g_.datum(); }
  const RootDatum& h() const { return grading_h_.datum(); }
  const RealFormGrading& grading_g() const { return grading_g_; }
  const RealFormGrading& grading_h() const { return grading_h_; }
  const RationalVector& s_phases() const { return s_phases_; }
  /// s(alpha^vee) = (-1)^{<mu, alpha^vee>}.
  const IntVector& s_exponents() const { return mu_; }

  /// Indices into g().roots() of the roots of H.
  const std::vector<std::size_t>& h_root_indices() const { return h_roots_; }
  bool in_h(std::size_t g_root_index) const { return in_h_.at(g_root_index); }
  /// Positive roots of G outside H.
  const std::vector<std::size_t>& outside_roots() const { return outside_; }

  const std::vector<WeylElement>& weyl_g() const { return weyl_g_; }
  const std::vector<WeylElement>& weyl_h() const { return weyl_h_; }
  const std::vector<WeylElement>& real_weyl_g() const { return real_weyl_g_; }
  const std::vector<WeylElement>& real_weyl_h() const { return real_weyl_h_; }
  /// inv(w) in X_*/2X_* for w = weyl_g()[j].
  const IntVector& inv_g(std::size_t j) const { return inv_g_.at(j); }
  /// Index of each W^H element inside weyl_g().
  const std::vector<std::size_t>& weyl_embedding() const { return embedding_; }

  const RealTorus& torus() const { return torus_; }
  const DualComponentCharacter& kappa() const { return kappa_; }
  const QuotientTorus& u_torus() const { return u_; }
  const TateGroup& h1_t() const { return h1_t_; }
  const TateGroup& h1_u() const { return h1_u_; }
  const DualComponentCharacter& s_u() const { return s_u_; }
  const EllipticityCheck& ellipticity() const { return ellipticity_; }

  std::optional<std::size_t> weyl_index(const IntMatrix& m) const;

 private:
  RealFormGrading grading_g_;
  RealFormGrading grading_h_;
  RationalVector s_phases_;
  IntVector mu_;
  std::vector<std::size_t> h_roots_;
  std::vector<bool> in_h_;
  std::vector<std::size_t> outside_;
  std::vector<WeylElement> weyl_g_, weyl_h_, real_weyl_g_, real_weyl_h_;
  std::vector<IntVector> inv_g_;
  std::vector<std::size_t> embedding_;
  std::map<IntMatrix, std::size_t> weyl_index_;
  RealTorus torus_;
  DualComponentCharacter kappa_;
  QuotientTorus u_;
  TateGroup h1_t_;
  TateGroup h1_u_;
  DualComponentCharacter s_u_;
  EllipticityCheck ellipticity_;
};

EndoscopicDatum build_endoscopic_datum(const RealFormGrading& grading_g, const RationalVector& s_phases,
                                       const EndoscopicOptions& options);

/// The ellipticity test on dual centers, computed from lattices.
EllipticityCheck check_ellipticity(const RootDatum& g, const std::vector<IntVector>& h_coroots, HGalois h_galois);

/// Throws EndoscopyError naming the closedness invariant if the coroots of
/// the given roots are not closed under negation and addition inside G.
void require_closed_subsystem(const RootDatum& g, const std::vector<std::size_t>& root_indices);

/// <alpha, v> for every root of the datum.
Vec root_values(const RootDatum& d, const Vec& v);
/// Throws NonRegularError if some |<alpha, v>| < tol * max(1, |v|).
void require_regular(const RootDatum& d, const Vec& v, const std::string& what, double tol = kWallTolerance);
bool is_regular(const RootDatum& d, const Vec& v, double tol = kWallTolerance);

Vec act(const IntMatrix& w, const Vec& v);

struct Diagram {
  std::size_t w_index = 0;  // into datum.weyl_g()
  Vec x_h;
  Vec x_g;
};

/// Smallest w (in the fixed enumeration order) with w * eta(x_h) = x_g.
std::optional<Diagram> build_diagram(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g);

/// a(alpha) = i * r(alpha) for positive alpha, a(-alpha) = -a(alpha).
class ADatum {
 public:
  explicit ADatum(std::vector<Rational> r_positive);
  static ADatum standard(const RootDatum& g);
  static ADatum random(const RootDatum& g, std::mt19937_64& rng);

  /// r such that a(root) = i r.
  Rational r(const RootDatum& g, std::size_t root_index) const;
  const std::vector<Rational>& r_positive() const { return r_; }

 private:
  std::vector<Rational> r_;
};

int delta_I(const EndoscopicDatum& datum, const Diagram& d, const ADatum& a);
int delta_II(const EndoscopicDatum& datum, const Diagram& d, const ADatum& a);
int delta_III(const EndoscopicDatum& datum, const Diagram& d, const Diagram& base);

struct TransferFactor {
  bool has_diagram = false;
  std::size_t w_index = 0;
  int delta_I_ratio = 0;
  int delta_II_ratio = 0;
  int delta_III = 0;
  std::complex<double> value = 0.0;
};

struct BasePoint {
  Diagram diagram;
  std::complex<double> value = 1.0;
};

BasePoint make_base_point(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g,
                          std::complex<double> value = 1.0);

TransferFactor transfer_factor(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g, const BasePoint& base,
                               const ADatum& a);
TransferFactor transfer_factor(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g, const BasePoint& base);

/// One w * x_g per coset in W^G(R) \ W^G.
std::vector<Vec> stable_orbit_representatives(const EndoscopicDatum& datum, const Vec& x_g);
/// eta^{-1}(w * x_g) for one w per coset in W^H(R) \ W^G.
std::vector<Vec> matching_h_orbits(const EndoscopicDatum& datum, const Vec& x_g);
/// |W^H| / |W^H(R)|.
std::size_t stable_class_size_h(const EndoscopicDatum& datum, const Vec& x_h);

}  // namespace endo
