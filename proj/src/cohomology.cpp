#include "endo/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace endo {

namespace {

using RationalMatrix = std::vector<RationalVector>;

Rational rational_pow(Rational base, Int e) {
  if (e < 0) {
    base = Rational(1) / base;
    e = -e;
  }
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

RationalVector mat_apply(const IntMatrix& m, const RationalVector& v) {
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += Rational(m(r, c)) * v[c];
  return out;
}

RationalVector mat_apply(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size(), Rational(0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

RationalMatrix rational_matrix_inverse(const RationalMatrix& m) {
  Int denom = 1;
  for (const auto& row : m)
    for (const auto& x : row) denom = std::lcm(denom, x.denominator());
  IntMatrix scaled(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) scaled(r, c) = (m[r][c] * denom).numerator();
  RationalMatrix inv = rational_inverse(scaled);
  for (auto& row : inv)
    for (auto& x : row) x *= denom;
  return inv;
}

bool integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.denominator() == 1; });
}

IntVector to_int(const RationalVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].numerator();
  return out;
}

RationalVector reduce(RationalVector v) {
  for (auto& x : v) x = frac(x);
  return v;
}

Int mod(Int a, Int m) { return ((a % m) + m) % m; }

}  // namespace

RealTorus::RealTorus(IntMatrix involution) : sigma_(std::move(involution)) {
  if (sigma_.rows() != sigma_.cols()) throw CohomologyError("involution must be square");
  if (!(sigma_ * sigma_).is_identity()) throw CohomologyError("sigma^2 is not the identity: " + sigma_.to_string());
}

RealTorus RealTorus::compact(std::size_t rank) {
  IntMatrix s(rank, rank);
  for (std::size_t i = 0; i < rank; ++i) s(i, i) = -1;
  return RealTorus(s);
}

TorusPoint TorusPoint::identity(std::size_t rank) {
  return {RationalVector(rank, Rational(0)), RationalVector(rank, Rational(1))};
}

TorusPoint TorusPoint::from_real(const RationalVector& values) {
  TorusPoint t = identity(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == Rational(0)) throw CohomologyError("torus coordinate must be nonzero");
    t.phase[i] = values[i] < Rational(0) ? Rational(1, 2) : Rational(0);
    t.magnitude[i] = values[i] < Rational(0) ? -values[i] : values[i];
  }
  return t;
}

TorusPoint TorusPoint::from_phases(const RationalVector& phases) {
  TorusPoint t = identity(phases.size());
  t.phase = reduce(phases);
  return t;
}

TateGroup::TateGroup(const IntMatrix& involution) : sigma_(involution) {
  const std::size_t n = sigma_.rows();
  const IntMatrix id = IntMatrix::identity(n);
  const SmithForm ks = smith_normal_form(id + sigma_);
  const std::size_t rk = ks.divisors().size();
  const std::size_t r = n - rk;
  const IntMatrix v_inv = unimodular_inverse(ks.v);
  kernel_ = IntMatrix(n, r);
  kernel_left_ = IntMatrix(r, n);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      kernel_(i, j) = ks.v(i, rk + j);
      kernel_left_(j, i) = v_inv(rk + j, i);
    }

  // im(1 - s) in kernel coordinates, then the quotient via a second reduction.
  const IntMatrix image = kernel_left_ * (id - sigma_);
  const SmithForm qs = smith_normal_form(image);
  const IntVector d = qs.divisors();
  if (d.size() != r) throw CohomologyError("ker(1+s)/im(1-s) is not finite");
  u_ = qs.u;
  u_inv_ = unimodular_inverse(u_);
  first_ = 0;
  while (first_ < d.size() && d[first_] == 1) ++first_;
  divisors_.assign(d.begin() + static_cast<std::ptrdiff_t>(first_), d.end());
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    IntVector e(divisors_.size(), 0);
    e[i] = 1;
    generators_.push_back(representative(e));
  }
}

Int TateGroup::order() const {
  return std::accumulate(divisors_.begin(), divisors_.end(), Int{1}, std::multiplies<>());
}

bool TateGroup::in_kernel(const IntVector& x) const {
  return is_zero((IntMatrix::identity(lattice_rank()) + sigma_) * x);
}

IntVector TateGroup::coordinates(const IntVector& x) const {
  if (x.size() != lattice_rank()) throw CohomologyError("vector length does not match lattice rank");
  if (!in_kernel(x)) throw CohomologyError("vector is not in ker(1 + sigma)");
  const IntVector y = u_ * (kernel_left_ * x);
  IntVector out(divisors_.size());
  for (std::size_t i = 0; i < divisors_.size(); ++i) out[i] = mod(y[first_ + i], divisors_[i]);
  return out;
}

IntVector TateGroup::representative(const IntVector& coords) const {
  if (coords.size() != divisors_.size()) throw CohomologyError("class coordinates have wrong length");
  IntVector y(kernel_.cols(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) y[first_ + i] = mod(coords[i], divisors_[i]);
  return kernel_ * (u_inv_ * y);
}

std::vector<IntVector> TateGroup::elements() const {
  std::vector<IntVector> out{IntVector(divisors_.size(), 0)};
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    std::vector<IntVector> next;
    for (const auto& e : out)
      for (Int k = 0; k < divisors_[i]; ++k) {
        IntVector f = e;
        f[i] = k;
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

TateGroup h1(const RealTorus& torus) { return TateGroup(torus.involution()); }

TateGroup dual_component_group(const RealTorus& torus) { return TateGroup(torus.involution().transpose()); }

bool is_cocycle(const RealTorus& torus, const TorusPoint& t) {
  const IntMatrix& s = torus.involution();
  const std::size_t n = torus.rank();
  if (t.phase.size() != n || t.magnitude.size() != n) throw CohomologyError("torus point has wrong rank");
  // phase of t * sigma(t) is theta - s theta (conjugation negates phases)
  const RationalVector sp = mat_apply(s, t.phase);
  for (std::size_t i = 0; i < n; ++i)
    if ((t.phase[i] - sp[i]).denominator() != 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Rational m = t.magnitude[i];
    for (std::size_t j = 0; j < n; ++j) m *= rational_pow(t.magnitude[j], s(i, j));
    if (m != Rational(1)) return false;
  }
  return true;
}

TorusPoint multiply(const TorusPoint& a, const TorusPoint& b) {
  if (a.phase.size() != b.phase.size()) throw CohomologyError("torus points have different ranks");
  TorusPoint out = a;
  for (std::size_t i = 0; i < a.phase.size(); ++i) {
    out.phase[i] = frac(a.phase[i] + b.phase[i]);
    out.magnitude[i] = a.magnitude[i] * b.magnitude[i];
  }
  return out;
}

TorusPoint boundary(const RealTorus& torus, const TorusPoint& s) {
  const IntMatrix& sig = torus.involution();
  const std::size_t n = torus.rank();
  // s * sigma(s)^{-1}
  TorusPoint out = TorusPoint::identity(n);
  const RationalVector sp = mat_apply(sig, s.phase);
  for (std::size_t i = 0; i < n; ++i) {
    out.phase[i] = frac(s.phase[i] + sp[i]);
    Rational m = s.magnitude[i];
    for (std::size_t j = 0; j < n; ++j) m *= rational_pow(s.magnitude[j], -sig(i, j));
    out.magnitude[i] = m;
  }
  return out;
}

CohomologyClass class_of(const RealTorus& torus, const IntVector& representative) {
  const TateGroup g = h1(torus);
  CohomologyClass c;
  c.coords = g.coordinates(representative);
  c.representative = g.representative(c.coords);
  return c;
}

CohomologyClass cocycle_class(const RealTorus& torus, const TorusPoint& cocycle) {
  if (!is_cocycle(torus, cocycle)) throw CohomologyError("cocycle condition t * sigma(t) = 1 fails");
  const IntMatrix one_minus = IntMatrix::identity(torus.rank()) - torus.involution();
  return class_of(torus, to_int(mat_apply(one_minus, cocycle.phase)));
}

DualComponentCharacter kappa_of(const RealTorus& torus, const IntVector& representative) {
  const TateGroup g = dual_component_group(torus);
  DualComponentCharacter k;
  k.coords = g.coordinates(representative);
  k.representative = g.representative(k.coords);
  return k;
}

DualComponentCharacter kappa_from_s(const RealTorus& torus, const RationalVector& s_phases) {
  if (s_phases.size() != torus.rank()) throw CohomologyError("s has wrong rank");
  for (const auto& p : s_phases)
    if ((p * 2).denominator() != 1) throw CohomologyError("s is not 2-torsion");
  const IntMatrix st = torus.involution().transpose();
  const RationalVector moved = mat_apply(IntMatrix::identity(torus.rank()) - st, s_phases);
  if (!integral(moved)) throw CohomologyError("s is not Galois-fixed: kernel condition fails");
  return kappa_of(torus, to_int(moved));
}

int tate_nakayama_pair(const CohomologyClass& cls, const DualComponentCharacter& kappa) {
  if (cls.representative.size() != kappa.representative.size())
    throw CohomologyError("class and kappa live on incompatible tori");
  return (dot(cls.representative, kappa.representative) % 2 == 0) ? 1 : -1;
}

bool pairing_is_nondegenerate(const RealTorus& torus) {
  const TateGroup g = h1(torus);
  const TateGroup d = dual_component_group(torus);
  if (g.order() != d.order()) return false;
  for (const auto& x : g.elements()) {
    if (is_zero(x)) continue;
    const CohomologyClass c{x, g.representative(x)};
    bool detected = false;
    for (const auto& y : d.elements())
      if (tate_nakayama_pair(c, DualComponentCharacter{y, d.representative(y)}) == -1) detected = true;
    if (!detected) return false;
  }
  return true;
}

IntVector QuotientTorus::cocharacter_coords(const RationalVector& x) const {
  RationalMatrix bt(basis.size(), RationalVector(basis.size()));
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) bt[r][c] = basis[c][r];
  const RationalVector c = mat_apply(rational_matrix_inverse(bt), x);
  if (!integral(c)) throw CohomologyError("point is not in the quotient lattice");
  return to_int(c);
}

IntVector QuotientTorus::character_coords(const IntVector& nu) const {
  RationalVector out(basis.size(), Rational(0));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < nu.size(); ++j) out[k] += basis[k][j] * nu[j];
  if (!integral(out)) throw CohomologyError("character is not integral on the quotient lattice");
  return to_int(out);
}

QuotientTorus quotient_torus_lattice(const RealTorus& torus, const std::vector<RationalVector>& points) {
  const std::size_t n = torus.rank();
  std::set<RationalVector> group{RationalVector(n, Rational(0))};
  for (const auto& p : points) {
    if (p.size() != n) throw CohomologyError("subgroup point has wrong rank");
    group.insert(reduce(p));
  }
  for (const auto& p : group) {
    if (!group.count(reduce(mat_apply(torus.involution(), p)))) throw CohomologyError("subgroup is not sigma-stable");
    for (const auto& q : group) {
      RationalVector s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = p[i] + q[i];
      if (!group.count(reduce(s))) throw CohomologyError("subgroup is not closed under the group law");
    }
  }
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    gens.push_back(e);
  }
  gens.insert(gens.end(), group.begin(), group.end());
  std::vector<RationalVector> basis = lattice_basis(gens);

  // sigma in the new basis: (B^T)^{-1} sigma B^T
  RationalMatrix bt(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) bt[r][c] = basis[c][r];
  const RationalMatrix bt_inv = rational_matrix_inverse(bt);
  IntMatrix sigma_new(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const RationalVector image = mat_apply(bt_inv, mat_apply(torus.involution(), basis[c]));
    if (!integral(image)) throw CohomologyError("involution does not preserve the quotient lattice");
    for (std::size_t r = 0; r < n; ++r) sigma_new(r, c) = image[r].numerator();
  }
  return QuotientTorus{RealTorus(sigma_new), std::move(basis)};
}

std::vector<RationalVector> center_points(const IntMatrix& simple_roots) {
  const std::size_t n = simple_roots.rows();
  if (n != simple_roots.cols()) throw CohomologyError("center needs a square simple-root matrix");
  const SmithForm s = smith_normal_form(simple_roots);
  const IntVector d = s.divisors();
  if (d.size() != n) throw CohomologyError("simple roots are linearly dependent");
  // A p integral  <=>  q = V^{-1} p has q_i in (1/d_i) Z
  std::set<RationalVector> found;
  IntVector k(n, 0);
  for (;;) {
    RationalVector q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = Rational(k[i], d[i]);
    found.insert(reduce(mat_apply(s.v, q)));
    std::size_t i = 0;
    while (i < n && ++k[i] == d[i]) k[i++] = 0;
    if (i == n) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace endo
