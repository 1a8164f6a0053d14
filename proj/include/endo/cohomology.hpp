#pragma once

#include "endo/lattice.hpp"

#include <stdexcept>
#include <vector>

namespace endo {

class CohomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cocharacter lattice Z^n with a Galois involution sigma.
class RealTorus {
 public:
  explicit RealTorus(IntMatrix involution);
  /// sigma = -1: the anisotropic (compact) torus of rank n.
  static RealTorus compact(std::size_t rank);

  std::size_t rank() const { return sigma_.rows(); }
  const IntMatrix& involution() const { return sigma_; }

 private:
  IntMatrix sigma_;
};

/// A point of T(C) = X_* (x) C^x in coordinates z_j = m_j * exp(2 pi i theta_j),
/// with theta in Q/Z (signs folded in as 1/2) and m a positive rational.
struct TorusPoint {
  RationalVector phase;
  RationalVector magnitude;

  static TorusPoint identity(std::size_t rank);
  /// Coordinates given as nonzero rationals.
  static TorusPoint from_real(const RationalVector& values);
  static TorusPoint from_phases(const RationalVector& phases);
};

/// A finite group ker(1 + s) / im(1 - s) for an involution s on Z^n,
/// presented through a Smith reduction.
class TateGroup {
 public:
  explicit TateGroup(const IntMatrix& involution);

  std::size_t lattice_rank() const { return sigma_.rows(); }
  const IntMatrix& involution() const { return sigma_; }
  /// Elementary divisors greater than one.
  const IntVector& divisors() const { return divisors_; }
  Int order() const;

  bool in_kernel(const IntVector& x) const;
  /// Canonical coordinates (entry i in [0, divisors()[i])) of x in ker(1 + s).
  IntVector coordinates(const IntVector& x) const;
  /// Lattice vector representing the class with the given coordinates.
  IntVector representative(const IntVector& coords) const;
  const std::vector<IntVector>& generators() const { return generators_; }
  /// All classes as canonical coordinate vectors.
  std::vector<IntVector> elements() const;

 private:
  IntMatrix sigma_;
  IntMatrix kernel_;       // n x r, columns span ker(1 + s)
  IntMatrix kernel_left_;  // r x n, kernel_left_ * kernel_ = I
  IntMatrix u_;            // Smith left transform on kernel coordinates
  IntMatrix u_inv_;
  std::size_t first_ = 0;  // index of first divisor > 1
  IntVector divisors_;
  std::vector<IntVector> generators_;
};

struct CohomologyClass {
  IntVector coords;
  IntVector representative;  // element of ker(1 + sigma) in X_*
  bool is_zero() const { return endo::is_zero(coords); }
};

struct DualComponentCharacter {
  IntVector coords;
  IntVector representative;  // element of ker(1 + sigma^T) in X^*
  bool is_trivial() const { return endo::is_zero(coords); }
};

/// H^1(R, T) = ker(1 + sigma) / im(1 - sigma) on X_*.
TateGroup h1(const RealTorus& torus);
/// pi_0 of the Galois invariants of the dual torus: the same quotient on X^*.
TateGroup dual_component_group(const RealTorus& torus);

/// True when t * sigma(t) = 1 exactly.
bool is_cocycle(const RealTorus& torus, const TorusPoint& t);
TorusPoint boundary(const RealTorus& torus, const TorusPoint& s);
TorusPoint multiply(const TorusPoint& a, const TorusPoint& b);

CohomologyClass cocycle_class(const RealTorus& torus, const TorusPoint& cocycle);
CohomologyClass class_of(const RealTorus& torus, const IntVector& representative);

/// kappa from an element s of the dual torus given by phases s(e_j) = exp(2 pi i phi_j).
DualComponentCharacter kappa_from_s(const RealTorus& torus, const RationalVector& s_phases);
DualComponentCharacter kappa_of(const RealTorus& torus, const IntVector& representative);

/// (-1)^{<lambda, mu>} on representatives.
int tate_nakayama_pair(const CohomologyClass& cls, const DualComponentCharacter& kappa);
bool pairing_is_nondegenerate(const RealTorus& torus);

struct QuotientTorus {
  RealTorus torus;
  std::vector<RationalVector> basis;  // new lattice basis in old coordinates

  /// Coordinates in the new basis of an old-coordinate point; throws if not in the lattice.
  IntVector cocharacter_coords(const RationalVector& x) const;
  /// Coordinates of a character of the old torus that is integral on the new lattice.
  IntVector character_coords(const IntVector& nu) const;
};

/// Lattice Z^n + span(points) with the induced involution.
QuotientTorus quotient_torus_lattice(const RealTorus& torus, const std::vector<RationalVector>& points);

/// Center of a simply connected group: points p mod Z^n with A p integral,
/// where the rows of A are the simple roots.
std::vector<RationalVector> center_points(const IntMatrix& simple_roots);

}  // namespace endo
