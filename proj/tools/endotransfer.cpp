#include "endo/report.hpp"
#include "endo/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>

using namespace endo;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string vec_text(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + num(v[i]);
  return out + "]";
}

std::string int_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string word_text(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int s : w) out += "s" + std::to_string(s);
  return out;
}

std::string complex_text(Complex z) {
  return num(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + num(std::abs(z.imag())) + "i";
}

double default_tolerance() {
  if (const char* env = std::getenv("ENDOTRANSFER_TOL")) {
    char* end = nullptr;
    const double t = std::strtod(env, &end);
    if (end != env && *end == '\0' && t > 0.0) return t;
    std::cerr << "warning: ignoring invalid ENDOTRANSFER_TOL='" << env << "'\n";
  }
  return kDefaultTolerance;
}

int cmd_verify(const std::string& path, std::size_t samples, std::uint64_t seed, double tol, const std::string& fmt) {
  const Scenario sc = load_scenario(path);
  const Problem p = build_problem(sc);
  const RunReport r = run_verify(p, sc.name, samples, seed, tol);
  std::cout << emit_report(r, fmt == "machine" ? ReportFormat::machine : ReportFormat::human);
  return r.all_pass() ? 0 : kExitFail;
}

int cmd_factors(const std::string& path, const std::string& xh_text, const std::string& xg_text) {
  const Scenario sc = load_scenario(path);
  const Problem p = build_problem(sc);
  const auto& d = p.datum;
  const Vec x_h = parse_vector(xh_text), x_g = parse_vector(xg_text);
  if (x_h.size() != d.g().rank() || x_g.size() != d.g().rank())
    throw std::invalid_argument("vectors need " + std::to_string(d.g().rank()) + " coordinates");
  require_regular(d.g(), x_h, "x_h");
  require_regular(d.g(), x_g, "x_g");

  std::cout << "scenario  " << sc.name << "\n";
  std::cout << "x_h       " << vec_text(x_h) << "\n";
  std::cout << "x_g       " << vec_text(x_g) << "\n";
  const TransferFactor tf = transfer_factor(d, x_h, x_g, p.base, p.a);
  if (!tf.has_diagram) {
    std::cout << "diagram   none (x_g is not stably conjugate to the image of x_h)\n";
    std::cout << "Delta     " << complex_text(0.0) << "\n";
    return 0;
  }
  const auto diagram = build_diagram(d, x_h, x_g);
  std::cout << "diagram   w = " << word_text(d.weyl_g()[tf.w_index].word) << "\n";
  std::cout << "Delta_I   " << delta_I(d, *diagram, p.a) << "  (ratio to base " << tf.delta_I_ratio << ")\n";
  std::cout << "Delta_II  " << delta_II(d, *diagram, p.a) << "  (ratio to base " << tf.delta_II_ratio << ")\n";
  std::cout << "Delta_III " << tf.delta_III << "\n";
  std::cout << "Delta     " << complex_text(tf.value) << "\n";
  return 0;
}

int cmd_orbits(const std::string& path, const std::string& xg_text) {
  const Scenario sc = load_scenario(path);
  const EndoscopicDatum d = build_datum(sc);
  const Vec x_g = parse_vector(xg_text);
  if (x_g.size() != d.g().rank()) throw std::invalid_argument("x_g needs " + std::to_string(d.g().rank()) + " coordinates");
  require_regular(d.g(), x_g, "x_g");

  const auto stable = stable_orbit_representatives(d, x_g);
  const auto matching = matching_h_orbits(d, x_g);
  std::cout << "scenario  " << sc.name << "\n";
  std::cout << "|W^G| = " << d.weyl_g().size() << "  |W^G(R)| = " << d.real_weyl_g().size()
            << "  |W^H| = " << d.weyl_h().size() << "  |W^H(R)| = " << d.real_weyl_h().size() << "\n";
  std::cout << "\nG(R)-orbits in the stable class of x_g: " << stable.size() << " = |W^G(R) \\ W^G|\n";
  for (std::size_t i = 0; i < stable.size(); ++i) std::cout << "  " << i << "  " << vec_text(stable[i]) << "\n";
  std::cout << "\nH(R)-orbits matching x_g: " << matching.size() << " = |W^H(R) \\ W^G|\n";
  for (std::size_t i = 0; i < matching.size(); ++i) std::cout << "  " << i << "  " << vec_text(matching[i]) << "\n";
  return 0;
}

int cmd_h1(const std::string& path) {
  const LatticeSpec spec = load_lattice(path);
  RealTorus torus(spec.sigma);
  if (!spec.subgroup.empty()) torus = quotient_torus_lattice(torus, spec.subgroup).torus;
  const TateGroup g = h1(torus);
  const TateGroup dual = dual_component_group(torus);

  auto describe = [](const TateGroup& t) {
    std::string out;
    for (Int q : t.divisors()) out += (out.empty() ? "" : " x ") + ("Z/" + std::to_string(q));
    return out.empty() ? std::string("trivial") : out;
  };
  std::cout << "sigma\n" << torus.involution().to_string() << "\n";
  std::cout << "H^1(R, T) = " << describe(g) << "  (order " << g.order() << ")\n";
  std::cout << "pi_0(T^Gamma dual) = " << describe(dual) << "  (order " << dual.order() << ")\n";

  const auto classes = g.elements();
  const auto chars = dual.elements();
  std::cout << "\nclasses\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    std::cout << "  c" << i << "  coords " << int_text(classes[i]) << "  rep " << int_text(g.representative(classes[i])) << "\n";
  std::cout << "characters\n";
  for (std::size_t j = 0; j < chars.size(); ++j)
    std::cout << "  k" << j << "  coords " << int_text(chars[j]) << "  rep " << int_text(dual.representative(chars[j])) << "\n";

  char cell[32];
  std::cout << "\npairing\n     ";
  for (std::size_t j = 0; j < chars.size(); ++j) {
    std::snprintf(cell, sizeof cell, "%4s", ("k" + std::to_string(j)).c_str());
    std::cout << cell;
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::snprintf(cell, sizeof cell, "  %-3s", ("c" + std::to_string(i)).c_str());
    std::cout << cell;
    const CohomologyClass c = class_of(torus, g.representative(classes[i]));
    for (const auto& k : chars) {
      std::snprintf(cell, sizeof cell, "%4d", tate_nakayama_pair(c, kappa_of(torus, dual.representative(k))));
      std::cout << cell;
    }
    std::cout << "\n";
  }
  std::cout << "nondegenerate " << (pairing_is_nondegenerate(torus) ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endoscopic transfer factors for real Lie algebras and the Fourier transform identity"};
  app.require_subcommand(1);

  std::string scenario, lattice, fmt = "human", xh, xg;
  std::size_t samples = 100;
  std::uint64_t seed = 42;
  double tol = default_tolerance();

  auto* verify = app.add_subcommand("verify", "check D = D~ on random regular elliptic pairs");
  verify->add_option("scenario", scenario, "scenario file")->required()->check(CLI::ExistingFile);
  verify->add_option("--samples", samples, "number of pairs")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--tol", tol, "absolute tolerance (default from ENDOTRANSFER_TOL or 1e-12)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", fmt, "output format")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();

  auto* factors = app.add_subcommand("factors", "print Delta_I, Delta_II, Delta_III and Delta");
  factors->add_option("scenario", scenario, "scenario file")->required()->check(CLI::ExistingFile);
  factors->add_option("--xh", xh, "H-side element")->required();
  factors->add_option("--xg", xg, "G-side element")->required();

  auto* orbits = app.add_subcommand("orbits", "enumerate the orbits in a stable class and the matching H-orbits");
  orbits->add_option("scenario", scenario, "scenario file")->required()->check(CLI::ExistingFile);
  orbits->add_option("--xg", xg, "G-side element")->required();

  auto* h1cmd = app.add_subcommand("h1", "print H^1(R, T) and the Tate-Nakayama pairing table");
  h1cmd->add_option("lattice", lattice, "lattice file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(scenario, samples, seed, tol, fmt);
    if (*factors) return cmd_factors(scenario, xh, xg);
    if (*orbits) return cmd_orbits(scenario, xg);
    if (*h1cmd) return cmd_h1(lattice);
  } catch (const ScenarioError& ex) {
    for (const auto& m : ex.messages()) std::cerr << "error: " << m << "\n";
    return kExitInput;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
