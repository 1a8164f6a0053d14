#include "endo/realform.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace endo {

RealFormGrading::RealFormGrading(RootDatum datum, std::vector<Grade> simple_grades)
    : datum_(std::move(datum)), simple_(std::move(simple_grades)) {
  if (simple_.size() != datum_.semisimple_rank())
    throw RootDataError("grading needs one label per simple root (got " + std::to_string(simple_.size()) +
                        ", expected " + std::to_string(datum_.semisimple_rank()) + ")");
  for (const auto& coeff : datum_.root_coefficients()) {
    Int parity = 0;
    for (std::size_t i = 0; i < coeff.size(); ++i) parity += coeff[i] * static_cast<Int>(simple_[i]);
    grades_.push_back(((parity % 2) + 2) % 2 ? Grade::noncompact : Grade::compact);
  }
  // Additivity and symmetry are automatic for the parity rule; check anyway.
  const auto& roots = datum_.roots();
  for (std::size_t a = 0; a < roots.size(); ++a) {
    if (grades_[a] != grades_[datum_.negative_of(a)]) throw RootDataError("grading is not symmetric");
    for (std::size_t b = 0; b < roots.size(); ++b) {
      const auto sum = datum_.find_root(add(roots[a], roots[b]));
      if (sum && (static_cast<int>(grades_[*sum]) != (static_cast<int>(grades_[a]) ^ static_cast<int>(grades_[b]))))
        throw RootDataError("grading is not additive");
    }
  }
}

std::size_t RealFormGrading::num_compact_roots() const {
  std::size_t n = 0;
  for (auto g : grades_) n += g == Grade::compact;
  return n;
}

std::size_t RealFormGrading::num_noncompact_roots() const { return grades_.size() - num_compact_roots(); }

RealFormGrading build_grading(const RootDatum& datum, const std::vector<Grade>& simple_grades) {
  return RealFormGrading(datum, simple_grades);
}

DimensionProfile dimension_profile(const RealFormGrading& grading) {
  DimensionProfile p;
  p.dim_t = static_cast<int>(grading.datum().rank());
  p.dim_g_over_t = static_cast<int>(grading.datum().num_roots());
  p.dim_g = p.dim_t + p.dim_g_over_t;
  p.dim_k = p.dim_t + static_cast<int>(grading.num_compact_roots());
  p.dim_g_over_k = static_cast<int>(grading.num_noncompact_roots());
  return p;
}

std::complex<double> EighthRoot::value() const {
  switch (k_) {
    case 0: return {1.0, 0.0};
    case 2: return {0.0, 1.0};
    case 4: return {-1.0, 0.0};
    case 6: return {0.0, -1.0};
    default: {
      const double h = std::numbers::sqrt2 / 2.0;
      const double re = (k_ == 1 || k_ == 7) ? h : -h;
      const double im = (k_ == 1 || k_ == 3) ? h : -h;
      return {re, im};
    }
  }
}

std::string EighthRoot::to_string() const {
  static const char* names[] = {"1", "exp(i*pi/4)", "i", "exp(3i*pi/4)", "-1", "exp(5i*pi/4)", "-i", "exp(7i*pi/4)"};
  return names[k_];
}

EighthRoot weil_constant(int p, int q) { return EighthRoot(p - q); }

EighthRoot weil_constant(const DimensionProfile& profile) {
  return weil_constant(profile.dim_g_over_k, profile.dim_k);
}

EighthRoot prefactor(const DimensionProfile& profile) {
  if (profile.dim_g_over_t % 2 != 0) throw RootDataError("dim(g/t) is odd: not a valid elliptic grading");
  if (profile.dim_g_over_k % 2 != 0) throw RootDataError("dim(g/k) is odd: not a valid elliptic grading");
  // (-i)^{a} = exp(-i*pi*2a/4), (-1)^{b} = exp(i*pi*4b/4)
  return EighthRoot(-profile.dim_g_over_t + 2 * profile.dim_g_over_k);
}

bool preserves_grading(const RealFormGrading& grading, const IntMatrix& w) {
  const RootDatum& d = grading.datum();
  if (w.rows() != d.rank() || w.cols() != d.rank()) return false;
  for (std::size_t a = 0; a < d.num_roots(); ++a) {
    const auto image = d.find_root(act_on_character(w, d.roots()[a]));
    if (!image || grading.grade(*image) != grading.grade(a)) return false;
  }
  return true;
}

std::vector<WeylElement> real_weyl_group(const RealFormGrading& grading,
                                         const std::vector<WeylElement>& extra_generators) {
  const RootDatum& d = grading.datum();
  std::vector<IntMatrix> gens;
  for (std::size_t a = 0; a < d.num_positive_roots(); ++a)
    if (grading.is_compact(a)) gens.push_back(d.reflection(a));
  for (const auto& x : extra_generators) {
    if (!preserves_grading(grading, x.matrix))
      throw RootDataError("extra real Weyl generator " + x.matrix.to_string() + " does not preserve the grading");
    gens.push_back(x.matrix);
  }
  return generate_group(d.rank(), gens);
}

IntVector mod2(IntVector v) {
  for (auto& x : v) x = ((x % 2) + 2) % 2;
  return v;
}

std::vector<IntVector> inv_cocycle(const RealFormGrading& grading, const std::vector<WeylElement>& weyl) {
  const RootDatum& d = grading.datum();
  const std::size_t k = d.semisimple_rank();
  std::map<IntMatrix, std::size_t> index;
  for (std::size_t j = 0; j < weyl.size(); ++j) index.emplace(weyl[j].matrix, j);

  std::vector<IntMatrix> refl;
  std::vector<IntVector> step;  // inv(s_i)
  for (std::size_t i = 0; i < k; ++i) {
    refl.push_back(d.simple_reflection(i));
    IntVector c = d.simple_coroots()[i];
    if (grading.simple_grades()[i] == Grade::compact) c.assign(c.size(), 0);
    step.push_back(mod2(c));
  }
  // inv(w s_i) = s_i inv(w) + inv(s_i)
  auto extend = [&](const IntVector& inv_w, std::size_t i) { return mod2(add(refl[i] * inv_w, step[i])); };

  std::vector<IntVector> inv(weyl.size());
  std::vector<bool> known(weyl.size(), false);
  if (weyl.empty() || !weyl.front().matrix.is_identity()) throw RootDataError("Weyl list must start at the identity");
  inv[0] = IntVector(d.rank(), 0);
  known[0] = true;
  for (std::size_t j = 0; j < weyl.size(); ++j) {
    if (!known[j]) throw RootDataError("Weyl list is not in breadth-first order");
    for (std::size_t i = 0; i < k; ++i) {
      const auto it = index.find(weyl[j].matrix * refl[i]);
      if (it == index.end()) throw RootDataError("Weyl list is not closed under simple reflections");
      const IntVector next = extend(inv[j], i);
      if (!known[it->second]) {
        inv[it->second] = next;
        known[it->second] = true;
      } else if (inv[it->second] != next) {
        throw RootDataError("inv cocycle is inconsistent at " + weyl[j].matrix.to_string());
      }
    }
  }
  return inv;
}

std::vector<WeylElement> inv_kernel(const RealFormGrading& grading, const std::vector<WeylElement>& weyl) {
  const auto inv = inv_cocycle(grading, weyl);
  std::vector<WeylElement> out;
  for (std::size_t j = 0; j < weyl.size(); ++j)
    if (is_zero(inv[j])) out.push_back(weyl[j]);
  return out;
}

}  // namespace endo
