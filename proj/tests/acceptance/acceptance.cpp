#include "endo/report.hpp"
#include "endo/scenario.hpp"

#include "../oracle/cohomology_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace endo;

namespace {

constexpr double kTol = 1e-12;

const std::vector<std::string> kScenarios = {"sl2_endoscopy", "su2_trivial", "a1xa1_endoscopy", "c2_endoscopy"};

Problem load(const std::string& name) {
  return build_problem(load_scenario(std::string(ENDO_SOURCE_DIR) + "/scenarios/" + name + ".scn"));
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome ac1() {
  const Problem p = load("sl2_endoscopy");
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1);
  std::size_t ok = 0;
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Vec xh = sample_regular(p.datum.g(), rng), xg = sample_regular(p.datum.g(), rng);
    const double err = std::abs(d_gh(p, xh, xg) - d_tilde_gh(p, xh, xg));
    worst = std::max(worst, err);
    ok += err <= kTol;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = ok == 1000 && secs < 5.0;
  o.detail = "sl2_endoscopy " + std::to_string(ok) + "/1000 pairs within 1e-12, max |D - D~| = " + num(worst) +
             ", runtime " + num(secs) + " s (limit 5 s)";
  return o;
}

Outcome ac2() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::ostringstream os;
  for (const auto& name : kScenarios) {
    const Problem p = load(name);
    double worst = 0.0;
    std::size_t checked = 0;
    for (int k = 0; k < 200; ++k) {
      const Vec xh = sample_regular(p.datum.g(), rng), xg = sample_regular(p.datum.g(), rng);
      for (std::size_t w = 0; w < p.datum.weyl_g().size(); ++w) {
        const Complex a = d_term(p, xh, xg, w);
        const Complex b = d_tilde_term(p, xh, xg, inverse_index(p.datum, w));
        worst = std::max(worst, std::abs(a - b));
        ++checked;
      }
    }
    o.pass = o.pass && worst <= kTol;
    os << name << " " << checked << " terms max dev " << num(worst) << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome ac3() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::ostringstream os;
  for (const auto& name : kScenarios) {
    const Problem p = load(name);
    std::size_t bad = 0, total = 0;
    for (int k = 0; k < 100; ++k) {
      const Vec xh = sample_regular(p.datum.g(), rng), xg = sample_regular(p.datum.g(), rng);
      for (std::size_t w = 0; w < p.datum.weyl_g().size(); ++w) {
        const DeltaIIRatioReport r = delta_ii_ratio_check(p, xh, xg, w);
        bad += !(r.pass && r.lhs == r.rhs);
        ++total;
      }
    }
    o.pass = o.pass && bad == 0;
    os << name << " " << total - bad << "/" << total << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome ac4() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::ostringstream os;
  for (const auto& name : kScenarios) {
    const Problem p = load(name);
    const double bound = static_cast<double>(p.datum.real_weyl_g().size());
    double sym = 0.0, inv = 0.0, mod = 0.0;
    for (int k = 0; k < 10000; ++k) {
      const Vec x = sample_regular(p.datum.g(), rng), y = sample_regular(p.datum.g(), rng);
      const Complex v = rossmann_kernel_g(p, x, y).value;
      sym = std::max(sym, std::abs(v - rossmann_kernel_g(p, y, x).value));
      for (const auto& w : p.datum.real_weyl_g())
        inv = std::max(inv, std::abs(rossmann_kernel_g(p, act(w.matrix, x), y).value - v));
      mod = std::max(mod, std::abs(v));
    }
    o.pass = o.pass && sym <= kTol && inv <= kTol && mod <= bound + kTol;
    os << name << " sym " << num(sym) << " inv " << num(inv) << " max|i| " << num(mod) << " <= " << bound << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome ac5() {
  std::size_t agree = 0;
  const auto lattices = oracle::involution_matrix();
  for (const auto& sigma : lattices) {
    const RealTorus t(sigma);
    const oracle::BruteForce bf(sigma);
    bool ok = static_cast<std::size_t>(h1(t).order()) == bf.class_count();
    std::vector<IntVector> coords;
    for (const auto& th : bf.cocycles) coords.push_back(cocycle_class(t, TorusPoint::from_phases(th)).coords);
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = i; j < coords.size(); ++j)
        ok = ok && (coords[i] == coords[j]) == bf.cohomologous(bf.cocycles[i], bf.cocycles[j]);
    const TateGroup dual = dual_component_group(t);
    ok = ok && static_cast<std::size_t>(dual.order()) == oracle::BruteForce(sigma.transpose()).class_count();
    for (const auto& kc : dual.elements()) {
      const IntVector mu = dual.representative(kc);
      const DualComponentCharacter kappa = kappa_of(t, mu);
      for (const auto& th : bf.cocycles)
        ok = ok && tate_nakayama_pair(cocycle_class(t, TorusPoint::from_phases(th)), kappa) ==
                       oracle::evaluate_character(mu, th);
    }
    agree += ok;
  }
  Outcome o;
  o.pass = lattices.size() == 27 && agree == lattices.size();
  o.detail = std::to_string(agree) + "/" + std::to_string(lattices.size()) +
             " lattices: h1 order, class separation and pairing agree with the brute-force oracle";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::ostringstream os;
  for (const auto& name : kScenarios) {
    const Problem p = load(name);
    const EighthRoot g = p.gamma_g * p.prefactor_g, h = p.gamma_h * p.prefactor_h;
    const bool eq = g == h;
    o.pass = o.pass && eq;
    os << name << " " << g.to_string() << (eq ? " == " : " != ") << h.to_string() << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> radius(0.1, 10.0), angle(-M_PI, M_PI);
  std::ostringstream os;
  for (const auto& name : kScenarios) {
    const Problem p = load(name);
    double worst = 0.0;
    std::size_t flips = 0;
    for (int k = 0; k < 100; ++k) {
      const Complex c = std::polar(radius(rng), angle(rng));
      const Problem q = with_base_value(p, c);
      const Vec xh = sample_regular(p.datum.g(), rng), xg = sample_regular(p.datum.g(), rng);
      const IdentityReport a = verify_identity(p, xh, xg, kTol);
      const IdentityReport b = verify_identity(q, xh, xg, kTol);
      flips += a.pass != b.pass;
      worst = std::max({worst, std::abs(b.lhs - c * a.lhs), std::abs(b.rhs - c * a.rhs)});
    }
    o.pass = o.pass && flips == 0 && worst <= kTol;
    os << name << " flag changes " << flips << " max scaling dev " << num(worst) << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome ac8() {
  Outcome o;
  std::ostringstream os;
  struct Expect {
    const char* name;
    std::size_t stable, matching;
  };
  for (const auto& e : {Expect{"sl2_endoscopy", 2, 2}, Expect{"su2_trivial", 1, 1}}) {
    const Problem p = load(e.name);
    const Vec x{0.83};
    const std::size_t s = stable_orbit_representatives(p.datum, x).size();
    const std::size_t m = matching_h_orbits(p.datum, x).size();
    o.pass = o.pass && s == e.stable && m == e.matching;
    os << e.name << " stable " << s << " (expect " << e.stable << ") matching " << m << " (expect " << e.matching
       << "); ";
  }
  o.detail = os.str();
  return o;
}

Outcome ac9() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::ostringstream os;
  for (const auto& name : kScenarios) {
    const Problem p = load(name);
    std::vector<ADatum> data;
    for (int k = 0; k < 20; ++k) data.push_back(ADatum::random(p.datum.g(), rng));
    std::size_t mismatches = 0, compared = 0;
    for (int k = 0; k < 20; ++k) {
      const Vec xh = sample_regular(p.datum.g(), rng);
      for (const auto& w : p.datum.weyl_g()) {
        const Vec xg = act(w.matrix, xh);
        const Complex ref = transfer_factor(p.datum, xh, xg, p.base).value;
        for (const auto& a : data) {
          mismatches += transfer_factor(p.datum, xh, xg, p.base, a).value != ref;
          ++compared;
        }
      }
    }
    o.pass = o.pass && mismatches == 0;
    os << name << " " << compared - mismatches << "/" << compared << " identical; ";
  }
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("error: ") + ex.what()};
    }
    if (o.detail.size() >= 2 && o.detail.compare(o.detail.size() - 2, 2, "; ") == 0) o.detail.resize(o.detail.size() - 2);
    failed += !o.pass;
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
  }
  std::cout << (9 - failed) << "/9 criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
