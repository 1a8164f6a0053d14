#include "endo/distributions.hpp"

#include <algorithm>
#include <cmath>

namespace endo {

namespace {

Complex d_over_pi(const RootDatum& d, const Vec& v) { return discriminant_sqrt(d, v) / pi_positive(d, v); }

Complex expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

int sign_of(double x) { return x < 0 ? -1 : 1; }

}  // namespace

Problem make_problem(EndoscopicDatum datum, const Vec& base_h, const Vec& base_g, double form_scale,
                     Complex base_value) {
  if (!(form_scale > 0.0)) throw EndoscopyError("form_scale must be positive");
  BasePoint base = make_base_point(datum, base_h, base_g, base_value);
  const DimensionProfile pg = dimension_profile(datum.grading_g());
  const DimensionProfile ph = dimension_profile(datum.grading_h());
  ADatum a = ADatum::standard(datum.g());
  return Problem{std::move(datum),  std::move(base),    form_scale,        std::move(a),
                 weil_constant(pg), weil_constant(ph), prefactor(pg), prefactor(ph)};
}

Problem with_base_value(const Problem& p, Complex value) {
  if (value == 0.0) throw EndoscopyError("base transfer-factor value must be nonzero");
  Problem q = p;
  q.base.value = value;
  return q;
}

double discriminant_sqrt(const RootDatum& d, const Vec& v) {
  const Vec values = root_values(d, v);
  double prod = 1.0;
  for (std::size_t a = 0; a < d.num_positive_roots(); ++a) {
    if (values[a] == 0.0) throw NonRegularError("discriminant vanishes: element is not regular");
    prod *= std::abs(values[a]);
  }
  return prod;
}

Complex pi_positive(const RootDatum& d, const Vec& v) {
  const Vec values = root_values(d, v);
  Complex prod = 1.0;
  for (std::size_t a = 0; a < d.num_positive_roots(); ++a) prod *= Complex(0.0, values[a]);
  return prod;
}

double form_value(const RootDatum& d, double form_scale, const Vec& u, const Vec& v) {
  const IntMatrix& b = d.invariant_form();
  double s = 0.0;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) s += u[r] * static_cast<double>(b(r, c)) * v[c];
  return form_scale * s;
}

KernelValue rossmann_kernel(const RealFormGrading& grading, const std::vector<WeylElement>& real_weyl,
                            double form_scale, const Vec& x, const Vec& y) {
  const RootDatum& d = grading.datum();
  require_regular(d, x, "kernel argument x");
  require_regular(d, y, "kernel argument y");
  const Complex outer = prefactor(dimension_profile(grading)).value() * d_over_pi(d, x) * d_over_pi(d, y);
  KernelValue k{0.0, {}};
  for (std::size_t j = 0; j < real_weyl.size(); ++j) {
    // e^{i<wX, Y>} with <iu, iv> = -B(u, v)
    const Complex term = outer * static_cast<double>(weyl_sign(real_weyl[j])) *
                         expi(-form_value(d, form_scale, act(real_weyl[j].matrix, x), y));
    k.terms.emplace_back(j, term);
    k.value += term;
  }
  return k;
}

KernelValue rossmann_kernel_g(const Problem& p, const Vec& x, const Vec& y) {
  return rossmann_kernel(p.datum.grading_g(), p.datum.real_weyl_g(), p.form_scale, x, y);
}

KernelValue rossmann_kernel_h(const Problem& p, const Vec& x, const Vec& y) {
  return rossmann_kernel(p.datum.grading_h(), p.datum.real_weyl_h(), p.form_scale, x, y);
}

Complex d_gh(const Problem& p, const Vec& x_h, const Vec& x_g) {
  const auto& weyl = p.datum.weyl_g();
  Complex sum = 0.0;
  for (const auto& w : weyl) {
    const Vec x = act(w.matrix, x_h);  // w * eta(x_h)
    const TransferFactor tf = transfer_factor(p.datum, x_h, x, p.base, p.a);
    if (!tf.has_diagram) continue;
    sum += tf.value * rossmann_kernel_g(p, x, x_g).value;
  }
  return p.gamma_g.value() * sum / static_cast<double>(p.datum.real_weyl_g().size());
}

Complex d_tilde_gh(const Problem& p, const Vec& x_h, const Vec& x_g) {
  const auto& wg = p.datum.weyl_g();
  const auto& wh = p.datum.weyl_h();
  Complex sum = 0.0;
  for (const auto& w : wg) {
    const Vec y = act(w.matrix, x_g);  // eta^{-1}(w * x_g)
    const TransferFactor tf = transfer_factor(p.datum, y, x_g, p.base, p.a);
    if (!tf.has_diagram) continue;
    for (const auto& u : wh) sum += tf.value * rossmann_kernel_h(p, act(u.matrix, x_h), y).value;
  }
  const double norm = static_cast<double>(p.datum.real_weyl_h().size() * wh.size());
  return p.gamma_h.value() * sum / norm;
}

Complex d_term(const Problem& p, const Vec& x_h, const Vec& x_g, std::size_t w_index) {
  const RootDatum& g = p.datum.g();
  const Vec x = act(p.datum.weyl_g().at(w_index).matrix, x_h);
  const TransferFactor tf = transfer_factor(p.datum, x_h, x, p.base, p.a);
  if (!tf.has_diagram) return 0.0;
  return p.gamma_g.value() * p.prefactor_g.value() * d_over_pi(g, x_g) * tf.value * d_over_pi(g, x) *
         expi(-form_value(g, p.form_scale, x, x_g));
}

Complex d_tilde_term(const Problem& p, const Vec& x_h, const Vec& x_g, std::size_t w_index) {
  const RootDatum& h = p.datum.h();
  const Vec y = act(p.datum.weyl_g().at(w_index).matrix, x_g);
  const TransferFactor tf = transfer_factor(p.datum, y, x_g, p.base, p.a);
  if (!tf.has_diagram) return 0.0;
  return p.gamma_h.value() * p.prefactor_h.value() * d_over_pi(h, x_h) * tf.value * d_over_pi(h, y) *
         expi(-form_value(h, p.form_scale, x_h, y));
}

std::size_t inverse_index(const EndoscopicDatum& datum, std::size_t w_index) {
  const auto idx = datum.weyl_index(inverse_of(datum.weyl_g().at(w_index).matrix));
  if (!idx) throw EndoscopyError("Weyl group is not closed under inversion");
  return *idx;
}

IdentityReport verify_identity(const Problem& p, const Vec& x_h, const Vec& x_g, double tolerance) {
  if (!p.datum.ellipticity().elliptic)
    throw EndoscopyError("datum is not elliptic: " + p.datum.ellipticity().evidence);
  require_regular(p.datum.g(), x_h, "x_h (G*-regularity)");
  require_regular(p.datum.g(), x_g, "x_g");
  IdentityReport r;
  r.x_h = x_h;
  r.x_g = x_g;
  r.lhs = d_gh(p, x_h, x_g);
  r.rhs = d_tilde_gh(p, x_h, x_g);
  r.abs_error = std::abs(r.lhs - r.rhs);
  bool terms_ok = true;
  for (std::size_t j = 0; j < p.datum.weyl_g().size(); ++j) {
    TermComparison t;
    t.w_index = j;
    t.d_term = d_term(p, x_h, x_g, j);
    t.d_tilde_term = d_tilde_term(p, x_h, x_g, inverse_index(p.datum, j));
    t.deviation = std::abs(t.d_term - t.d_tilde_term);
    r.termwise_max_deviation = std::max(r.termwise_max_deviation, t.deviation);
    terms_ok = terms_ok && t.deviation <= tolerance;
    r.termwise.push_back(t);
  }
  r.pass = r.abs_error <= tolerance && terms_ok;
  return r;
}

DeltaIIRatioReport delta_ii_ratio_check(const Problem& p, const Vec& x_h, const Vec& x_g, std::size_t w_index) {
  const EndoscopicDatum& dat = p.datum;
  const RootDatum& g = dat.g();
  const IntMatrix& w = dat.weyl_g().at(w_index).matrix;
  const Vec wx = act(w, x_h);
  const Vec y = act(inverse_of(w), x_g);
  const auto d1 = build_diagram(dat, x_h, wx);
  const auto d2 = build_diagram(dat, y, x_g);
  if (!d1 || !d2) throw EndoscopyError("Delta_II ratio check: missing diagram");

  DeltaIIRatioReport out;
  out.lhs = delta_II(dat, *d1, p.a) * delta_II(dat, *d2, p.a);
  const Vec at_wx = root_values(g, wx);
  const Vec at_xg = root_values(g, x_g);
  out.rhs = 1;
  for (auto b : dat.outside_roots()) out.rhs *= sign_of(at_wx[b]) * sign_of(at_xg[b]);

  // alpha(y) = (w alpha)(x_g) for every root of H
  out.restriction_ok = true;
  const double scale = std::max(1.0, std::abs(*std::max_element(x_g.begin(), x_g.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  })));
  for (const auto& alpha : dat.h().roots()) {
    const IntVector walpha = act_on_character(w, alpha);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      lhs += static_cast<double>(alpha[j]) * y[j];
      rhs += static_cast<double>(walpha[j]) * x_g[j];
    }
    if (std::abs(lhs - rhs) > 1e-9 * scale) out.restriction_ok = false;
  }
  out.pass = out.lhs == out.rhs && out.restriction_ok;
  return out;
}

}  // namespace endo
