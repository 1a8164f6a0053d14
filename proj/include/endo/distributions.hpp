#pragma once

#include "endo/endoscopy.hpp"

#include <complex>
#include <vector>

namespace endo {

using Complex = std::complex<double>;

/// Everything needed to evaluate both sides of the identity.
struct Problem {
  EndoscopicDatum datum;
  BasePoint base;
  double form_scale = 1.0;
  ADatum a;
  EighthRoot gamma_g, gamma_h, prefactor_g, prefactor_h;
};

Problem make_problem(EndoscopicDatum datum, const Vec& base_h, const Vec& base_g, double form_scale = 1.0,
                     Complex base_value = 1.0);

/// Copy of `p` with the base transfer-factor value replaced.
Problem with_base_value(const Problem& p, Complex value);

double discriminant_sqrt(const RootDatum& d, const Vec& v);
Complex pi_positive(const RootDatum& d, const Vec& v);

/// B(u, v) scaled by form_scale.
double form_value(const RootDatum& d, double form_scale, const Vec& u, const Vec& v);

struct KernelValue {
  Complex value;
  std::vector<std::pair<std::size_t, Complex>> terms;  // (index into the real Weyl group, contribution)
};

/// Rossmann's kernel on the elliptic Cartan of the real form given by `grading`.
KernelValue rossmann_kernel(const RealFormGrading& grading, const std::vector<WeylElement>& real_weyl,
                            double form_scale, const Vec& x, const Vec& y);
KernelValue rossmann_kernel_g(const Problem& p, const Vec& x, const Vec& y);
KernelValue rossmann_kernel_h(const Problem& p, const Vec& x, const Vec& y);

Complex d_gh(const Problem& p, const Vec& x_h, const Vec& x_g);
Complex d_tilde_gh(const Problem& p, const Vec& x_h, const Vec& x_g);

/// The w-summand of D and of D-tilde in their collapsed single-sum forms.
Complex d_term(const Problem& p, const Vec& x_h, const Vec& x_g, std::size_t w_index);
Complex d_tilde_term(const Problem& p, const Vec& x_h, const Vec& x_g, std::size_t w_index);

struct TermComparison {
  std::size_t w_index = 0;
  Complex d_term;        // w-term of D
  Complex d_tilde_term;  // w^{-1}-term of D-tilde
  double deviation = 0.0;
};

struct IdentityReport {
  Vec x_h, x_g;
  Complex lhs, rhs;
  double abs_error = 0.0;
  std::vector<TermComparison> termwise;
  double termwise_max_deviation = 0.0;
  bool pass = false;
};

IdentityReport verify_identity(const Problem& p, const Vec& x_h, const Vec& x_g, double tolerance);

struct DeltaIIRatioReport {
  int lhs = 0;  // Delta_II(x_h, w X) / Delta_II(y, x_g)
  int rhs = 0;  // product of sign(alpha(w X) / alpha(x_g)) over roots outside H
  bool restriction_ok = false;
  bool pass = false;
};

DeltaIIRatioReport delta_ii_ratio_check(const Problem& p, const Vec& x_h, const Vec& x_g, std::size_t w_index);

/// Index of w^{-1} in the Weyl enumeration of G.
std::size_t inverse_index(const EndoscopicDatum& datum, std::size_t w_index);

}  // namespace endo
