#include "endo/endoscopy.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace endo {

namespace {

IntVector s_exponents_of(const RootDatum& g, const RationalVector& s_phases) {
  if (s_phases.size() != g.rank())
    throw EndoscopyError("s has " + std::to_string(s_phases.size()) + " entries, expected " + std::to_string(g.rank()));
  IntVector mu(s_phases.size());
  for (std::size_t j = 0; j < s_phases.size(); ++j) {
    const Rational twice = s_phases[j] * 2;
    if (twice.denominator() != 1) throw EndoscopyError("s does not have order dividing 2");
    mu[j] = ((twice.numerator() % 2) + 2) % 2;
  }
  return mu;
}

std::vector<std::size_t> kernel_roots(const RootDatum& g, const IntVector& mu) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < g.num_roots(); ++a)
    if (dot(mu, g.coroots()[a]) % 2 == 0) out.push_back(a);
  return out;
}

RealFormGrading make_h_grading(const RealFormGrading& grading_g, const RationalVector& s_phases,
                               const EndoscopicOptions& options) {
  const RootDatum& g = grading_g.datum();
  const IntVector mu = s_exponents_of(g, s_phases);
  const std::vector<std::size_t> roots = kernel_roots(g, mu);

  if (options.h_roots) {
    std::set<std::size_t> given;
    for (const auto& r : *options.h_roots) {
      const auto idx = g.find_root(r);
      if (!idx) throw EndoscopyError("h_roots entry is not a root of G");
      given.insert(*idx);
    }
    require_closed_subsystem(g, {given.begin(), given.end()});
    if (given != std::set<std::size_t>(roots.begin(), roots.end()))
      throw EndoscopyError("h_roots must equal {alpha : s(alpha^vee) = 1}");
  }
  require_closed_subsystem(g, roots);

  // Simple roots of H: positive H roots whose reflection permutes the other positive H roots.
  std::set<std::size_t> positive;
  for (auto a : roots)
    if (g.is_positive(a)) positive.insert(a);
  std::vector<IntVector> simple, simple_co;
  for (auto a : positive) {
    bool is_simple = true;
    for (auto b : positive) {
      if (b == a) continue;
      const IntVector image = g.reflection(a).transpose() * g.roots()[b];  // s_a acts on characters by its transpose
      const auto idx = g.find_root(image);
      if (!idx || !positive.count(*idx)) {
        is_simple = false;
        break;
      }
    }
    if (is_simple) {
      simple.push_back(g.roots()[a]);
      simple_co.push_back(g.coroots()[a]);
    }
  }
  RootDatum h("H", g.rank(), simple, simple_co, g.invariant_form());
  if (h.num_roots() != roots.size()) throw EndoscopyError("simple system of H does not regenerate Sigma_H");
  if (options.h_grades.size() != h.semisimple_rank())
    throw EndoscopyError("h_grading needs " + std::to_string(h.semisimple_rank()) + " labels, got " +
                         std::to_string(options.h_grades.size()));
  return RealFormGrading(std::move(h), options.h_grades);
}

QuotientTorus make_u(const RootDatum& g) {
  const std::size_t n = g.rank();
  IntMatrix a(g.semisimple_rank(), n);
  for (std::size_t i = 0; i < g.semisimple_rank(); ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = g.simple_roots()[i][j];
  std::vector<RationalVector> anti;
  for (const auto& p : center_points(a)) {
    RationalVector q(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
      q[j] = p[j];
      q[n + j] = -p[j];
    }
    anti.push_back(std::move(q));
  }
  return quotient_torus_lattice(RealTorus::compact(2 * n), anti);
}

std::set<IntMatrix> as_set(const std::vector<WeylElement>& v) {
  std::set<IntMatrix> out;
  for (const auto& w : v) out.insert(w.matrix);
  return out;
}

Rational rational_pow(Rational base, Int e) {
  if (e < 0) {
    base = Rational(1) / base;
    e = -e;
  }
  Rational out(1);
  for (Int k = 0; k < e; ++k) out *= base;
  return out;
}

double norm_inf(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

EndoscopicDatum::EndoscopicDatum(const RealFormGrading& grading_g, RationalVector s_phases,
                                 const EndoscopicOptions& options)
    : grading_g_(grading_g),
      grading_h_(make_h_grading(grading_g, s_phases, options)),
      s_phases_(std::move(s_phases)),
      mu_(s_exponents_of(grading_g.datum(), s_phases_)),
      torus_(RealTorus::compact(grading_g.datum().rank())),
      kappa_(kappa_from_s(torus_, s_phases_)),
      u_(make_u(grading_g.datum())),
      h1_t_(h1(torus_)),
      h1_u_(h1(u_.torus)) {
  const RootDatum& gd = g();
  const std::size_t n = gd.rank();
  if (!gd.simply_connected()) throw EndoscopyError("G must be semisimple and simply connected");

  h_roots_ = kernel_roots(gd, mu_);
  in_h_.assign(gd.num_roots(), false);
  for (auto a : h_roots_) in_h_[a] = true;
  for (std::size_t a = 0; a < gd.num_positive_roots(); ++a)
    if (!in_h_[a]) outside_.push_back(a);

  weyl_g_ = enumerate_weyl(gd);
  weyl_h_ = enumerate_weyl(h());
  for (std::size_t j = 0; j < weyl_g_.size(); ++j) weyl_index_.emplace(weyl_g_[j].matrix, j);
  for (const auto& u : weyl_h_) {
    const auto idx = weyl_index(u.matrix);
    if (!idx) throw EndoscopyError("W^H does not embed in W^G");
    embedding_.push_back(*idx);
  }

  auto words_to_elements = [](const RootDatum& d, const std::vector<std::vector<int>>& words) {
    std::vector<WeylElement> out;
    for (const auto& word : words) {
      IntMatrix m = IntMatrix::identity(d.rank());
      for (int i : word) {
        if (i < 0 || static_cast<std::size_t>(i) >= d.semisimple_rank())
          throw EndoscopyError("real Weyl extra uses an unknown simple reflection index");
        m = m * d.simple_reflection(static_cast<std::size_t>(i));
      }
      out.push_back({m, word});
    }
    return out;
  };
  real_weyl_g_ = real_weyl_group(grading_g_, words_to_elements(gd, options.real_weyl_extras));
  real_weyl_h_ = real_weyl_group(grading_h_, words_to_elements(h(), options.h_real_weyl_extras));

  inv_g_ = inv_cocycle(grading_g_, weyl_g_);
  if (as_set(real_weyl_g_) != as_set(inv_kernel(grading_g_, weyl_g_)))
    throw EndoscopyError("real Weyl group of G is not certified: it differs from the kernel of inv");
  if (as_set(real_weyl_h_) != as_set(inv_kernel(grading_h_, weyl_h_)))
    throw EndoscopyError("real Weyl group of H is not certified: it differs from the kernel of inv");

  IntVector nu(2 * n);
  for (std::size_t j = 0; j < n; ++j) nu[j] = nu[n + j] = kappa_.representative[j];
  s_u_ = kappa_of(u_.torus, u_.character_coords(nu));

  std::vector<IntVector> h_coroots;
  for (auto a : h_roots_) h_coroots.push_back(gd.coroots()[a]);
  ellipticity_ = check_ellipticity(gd, h_coroots, options.h_galois);
}

std::optional<std::size_t> EndoscopicDatum::weyl_index(const IntMatrix& m) const {
  const auto it = weyl_index_.find(m);
  if (it == weyl_index_.end()) return std::nullopt;
  return it->second;
}

EndoscopicDatum build_endoscopic_datum(const RealFormGrading& grading_g, const RationalVector& s_phases,
                                       const EndoscopicOptions& options) {
  return EndoscopicDatum(grading_g, s_phases, options);
}

void require_closed_subsystem(const RootDatum& g, const std::vector<std::size_t>& root_indices) {
  std::set<IntVector> coroots;
  for (auto a : root_indices) coroots.insert(g.coroots().at(a));
  std::set<IntVector> all(g.coroots().begin(), g.coroots().end());
  for (const auto& c : coroots) {
    if (!coroots.count(negate(c)))
      throw EndoscopyError("closedness invariant violated: Sigma_H is not closed under negation");
    for (const auto& d : coroots) {
      const IntVector sum = add(c, d);
      if (all.count(sum) && !coroots.count(sum))
        throw EndoscopyError("closedness invariant violated: coroots of Sigma_H are not closed under addition");
    }
  }
}

EllipticityCheck check_ellipticity(const RootDatum& g, const std::vector<IntVector>& h_coroots, HGalois h_galois) {
  const std::size_t n = g.rank();
  auto center_lattice = [&](const std::vector<IntVector>& coroots) {
    // cocharacters of the identity component of the dual center: lambda in X^* with <lambda, coroot> = 0
    if (coroots.empty()) return IntMatrix::identity(n);
    return integer_kernel(IntMatrix::from_rows(coroots));
  };
  const IntMatrix zh = center_lattice(h_coroots);
  const IntMatrix zg = center_lattice(g.coroots());

  EllipticityCheck out;
  out.center_rank_g = static_cast<int>(zg.cols());
  // Galois acts on the center of the dual of H by -1 (elliptic) or +1 (split).
  const IntMatrix fixed = h_galois == HGalois::split ? zh : IntMatrix(n, 0);
  out.invariant_center_rank_h = static_cast<int>(fixed.cols());
  bool contained = true;
  for (std::size_t c = 0; c < fixed.cols(); ++c)
    for (const auto& co : g.coroots())
      if (dot(fixed.col(c), co) != 0) contained = false;
  out.elliptic = contained;
  std::ostringstream os;
  os << "identity component of the Galois-fixed center of the dual of H has rank " << out.invariant_center_rank_h
     << "; identity component of the center of the dual of G has rank " << out.center_rank_g << "; containment "
     << (contained ? "holds" : "fails");
  out.evidence = os.str();
  return out;
}

Vec act(const IntMatrix& w, const Vec& v) {
  Vec out(w.rows(), 0.0);
  for (std::size_t r = 0; r < w.rows(); ++r)
    for (std::size_t c = 0; c < w.cols(); ++c) out[r] += static_cast<double>(w(r, c)) * v[c];
  return out;
}

Vec root_values(const RootDatum& d, const Vec& v) {
  if (v.size() != d.rank()) throw EndoscopyError("vector has wrong rank");
  Vec out;
  out.reserve(d.num_roots());
  for (const auto& r : d.roots()) {
    double s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<double>(r[j]) * v[j];
    out.push_back(s);
  }
  return out;
}

bool is_regular(const RootDatum& d, const Vec& v, double tol) {
  const double scale = std::max(1.0, norm_inf(v));
  for (double x : root_values(d, v))
    if (!(std::abs(x) >= tol * scale)) return false;
  return true;
}

void require_regular(const RootDatum& d, const Vec& v, const std::string& what, double tol) {
  if (!is_regular(d, v, tol)) throw NonRegularError(what + " is not regular: it lies on a root wall");
}

std::optional<Diagram> build_diagram(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g) {
  require_regular(datum.g(), x_h, "x_h (G*-regularity)");
  require_regular(datum.g(), x_g, "x_g");
  const double tol = kDiagramTolerance * std::max(1.0, norm_inf(x_g));
  for (std::size_t j = 0; j < datum.weyl_g().size(); ++j) {
    const Vec y = act(datum.weyl_g()[j].matrix, x_h);
    double err = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) err = std::max(err, std::abs(y[k] - x_g[k]));
    if (err <= tol) return Diagram{j, x_h, x_g};
  }
  return std::nullopt;
}

ADatum::ADatum(std::vector<Rational> r_positive) : r_(std::move(r_positive)) {
  for (const auto& x : r_)
    if (x == Rational(0)) throw EndoscopyError("a-data must be nonzero");
}

ADatum ADatum::standard(const RootDatum& g) { return ADatum(std::vector<Rational>(g.num_positive_roots(), Rational(1))); }

ADatum ADatum::random(const RootDatum& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> num(1, 9), sign(0, 1);
  std::vector<Rational> r;
  for (std::size_t a = 0; a < g.num_positive_roots(); ++a) {
    const Int p = num(rng), q = num(rng);
    r.emplace_back(sign(rng) ? p : -p, q);
  }
  return ADatum(std::move(r));
}

Rational ADatum::r(const RootDatum& g, std::size_t root_index) const {
  if (r_.size() != g.num_positive_roots()) throw EndoscopyError("a-data does not match the root datum");
  return g.is_positive(root_index) ? r_.at(root_index) : -r_.at(g.negative_of(root_index));
}

int delta_I(const EndoscopicDatum& datum, const Diagram&, const ADatum& a) {
  // tau = prod_{alpha > 0} alpha^vee(a_alpha / i): phases carry the signs,
  // magnitudes the absolute values.
  const RootDatum& g = datum.g();
  const std::size_t n = g.rank();
  TorusPoint tau = TorusPoint::identity(n);
  for (std::size_t al = 0; al < g.num_positive_roots(); ++al) {
    const Rational r = a.r(g, al);
    const Rational mag = r < Rational(0) ? -r : r;
    const IntVector& co = g.coroots()[al];
    TorusPoint f = TorusPoint::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
      f.phase[j] = frac(Rational(co[j]) * (r < Rational(0) ? Rational(1, 2) : Rational(0)));
      f.magnitude[j] = rational_pow(mag, co[j]);
    }
    tau = multiply(tau, f);
  }
  if (!is_cocycle(datum.torus(), tau)) throw EndoscopyError("Delta_I: a-data cocycle condition fails");
  const IntMatrix one_minus = IntMatrix::identity(n) - datum.torus().involution();
  IntVector lambda(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational x(0);
    for (std::size_t k = 0; k < n; ++k) x += Rational(one_minus(j, k)) * tau.phase[k];
    lambda[j] = x.numerator();
  }
  const TateGroup& grp = datum.h1_t();
  const IntVector coords = grp.coordinates(lambda);
  return tate_nakayama_pair(CohomologyClass{coords, grp.representative(coords)}, datum.kappa());
}

int delta_II(const EndoscopicDatum& datum, const Diagram& d, const ADatum& a) {
  const RootDatum& g = datum.g();
  const Vec values = root_values(g, d.x_h);
  int sign = 1;
  for (auto b : datum.outside_roots()) {
    const double q = values[b] / boost::rational_cast<double>(a.r(g, b));
    if (q == 0.0) throw NonRegularError("Delta_II: root vanishes on x_h");
    if (q < 0) sign = -sign;
  }
  return sign;
}

int delta_III(const EndoscopicDatum& datum, const Diagram& d, const Diagram& base) {
  const std::size_t n = datum.g().rank();
  const IntVector& inv_d = datum.inv_g(d.w_index);
  const IntVector& inv_b = datum.inv_g(base.w_index);
  RationalVector lambda(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    lambda[j] = inv_d[j];
    lambda[n + j] = inv_b[j];
  }
  const TateGroup& grp = datum.h1_u();
  const IntVector coords = grp.coordinates(datum.u_torus().cocharacter_coords(lambda));
  return tate_nakayama_pair(CohomologyClass{coords, grp.representative(coords)}, datum.s_u());
}

BasePoint make_base_point(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g, std::complex<double> value) {
  if (value == 0.0) throw EndoscopyError("base transfer-factor value must be nonzero");
  const auto d = build_diagram(datum, x_h, x_g);
  if (!d || d->w_index != 0) throw EndoscopyError("base point must admit a diagram with w = identity");
  return BasePoint{*d, value};
}

TransferFactor transfer_factor(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g, const BasePoint& base,
                               const ADatum& a) {
  TransferFactor out;
  const auto d = build_diagram(datum, x_h, x_g);
  if (!d) return out;
  out.has_diagram = true;
  out.w_index = d->w_index;
  out.delta_I_ratio = delta_I(datum, *d, a) * delta_I(datum, base.diagram, a);
  out.delta_II_ratio = delta_II(datum, *d, a) * delta_II(datum, base.diagram, a);
  out.delta_III = delta_III(datum, *d, base.diagram);
  out.value = base.value * static_cast<double>(out.delta_I_ratio * out.delta_II_ratio * out.delta_III);
  return out;
}

TransferFactor transfer_factor(const EndoscopicDatum& datum, const Vec& x_h, const Vec& x_g, const BasePoint& base) {
  return transfer_factor(datum, x_h, x_g, base, ADatum::standard(datum.g()));
}

std::vector<Vec> stable_orbit_representatives(const EndoscopicDatum& datum, const Vec& x_g) {
  require_regular(datum.g(), x_g, "x_g");
  std::vector<Vec> out;
  for (const auto& w : coset_representatives(datum.weyl_g(), datum.real_weyl_g(), CosetSide::right))
    out.push_back(act(w.matrix, x_g));
  return out;
}

std::vector<Vec> matching_h_orbits(const EndoscopicDatum& datum, const Vec& x_g) {
  require_regular(datum.g(), x_g, "x_g");
  std::vector<Vec> out;
  for (const auto& w : coset_representatives(datum.weyl_g(), datum.real_weyl_h(), CosetSide::right))
    out.push_back(act(w.matrix, x_g));
  return out;
}

std::size_t stable_class_size_h(const EndoscopicDatum& datum, const Vec& x_h) {
  require_regular(datum.g(), x_h, "x_h (G*-regularity)");
  return datum.weyl_h().size() / datum.real_weyl_h().size();
}

}  // namespace endo
