#include "endo/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace endo {

namespace {

using ojson = nlohmann::ordered_json;

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

std::string complex_text(Complex z) { return num(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + num(std::abs(z.imag())) + "i"; }

double norm2(const Vec& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::size_t RunReport::pass_count() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.pass;
  return n;
}

double RunReport::max_abs_error() const {
  double m = 0.0;
  for (const auto& r : records) m = std::max(m, r.abs_error);
  return m;
}

Vec sample_regular(const RootDatum& d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-kSampleBox, kSampleBox);
  for (;;) {
    Vec v(d.rank());
    for (auto& x : v) x = coord(rng);
    const double margin = kWallMargin * norm2(v);
    bool ok = margin > 0.0;
    for (double a : root_values(d, v))
      if (std::abs(a) < margin) ok = false;
    if (ok) return v;
  }
}

std::vector<std::pair<std::string, std::string>> convention_block(const Problem& p) {
  std::ostringstream base;
  base << "x_h=" << vec_text(p.base.diagram.x_h) << " x_g=" << vec_text(p.base.diagram.x_g)
       << " value=" << complex_text(p.base.value);
  return {
      {"fourier_kernel", "exp(i<X,Y>) with <iu,iv> = -form_scale*B(u,v)"},
      {"invariant_form", "short coroots have B-length^2 = 2 in each simple factor; form_scale=" + num(p.form_scale)},
      {"a_data", "a(alpha) = i on positive roots, a(-alpha) = -i"},
      {"base_point", base.str()},
      {"measure", "orbit sums over all of W(G) weighted by 1/|W(G)(R)|; kernel has no 1/|W(R)| factor"},
      {"pairing", "(-1)^<lambda,mu> on ker(1+sigma)/im(1-sigma) x ker(1+sigma^T)/im(1-sigma^T)"},
      {"delta_III", "pairing on U = (T x T)/{(z,z^-1) : z in Z(G)} with s_U = (s, s)"},
      {"weil_constant", "exp(i*pi*(dim p - dim k)/4)"},
      {"gamma_g", p.gamma_g.to_string()},
      {"gamma_h", p.gamma_h.to_string()},
      {"prefactor_g", p.prefactor_g.to_string()},
      {"prefactor_h", p.prefactor_h.to_string()},
  };
}

RunReport run_verify(const Problem& p, const std::string& name, std::size_t samples, std::uint64_t seed,
                     double tolerance) {
  if (!p.datum.ellipticity().elliptic)
    throw EndoscopyError("refusing non-elliptic datum (the identity is only checked on elliptic data): " +
                         p.datum.ellipticity().evidence);
  RunReport r;
  r.scenario = name;
  r.samples = samples;
  r.seed = seed;
  r.tolerance = tolerance;
  r.conventions = convention_block(p);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const Vec x_h = sample_regular(p.datum.g(), rng);
    const Vec x_g = sample_regular(p.datum.g(), rng);
    const IdentityReport id = verify_identity(p, x_h, x_g, tolerance);
    r.records.push_back({x_h, x_g, id.lhs, id.rhs, id.abs_error, id.termwise_max_deviation, id.pass});
  }
  return r;
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::machine) {
    ojson header;
    header["format"] = "endotransfer-report";
    header["version"] = report.version;
    header["scenario"] = report.scenario;
    header["samples"] = report.samples;
    header["seed"] = report.seed;
    header["tolerance"] = report.tolerance;
    ojson conv = ojson::object();
    for (const auto& [k, v] : report.conventions) conv[k] = v;
    header["conventions"] = conv;
    os << header.dump() << '\n';
    for (const auto& r : report.records) {
      ojson rec;
      rec["xh"] = r.x_h;
      rec["xg"] = r.x_g;
      rec["lhs"] = {r.lhs.real(), r.lhs.imag()};
      rec["rhs"] = {r.rhs.real(), r.rhs.imag()};
      rec["abs_error"] = r.abs_error;
      rec["termwise_max_deviation"] = r.termwise_max_deviation;
      rec["pass"] = r.pass;
      os << rec.dump() << '\n';
    }
    ojson summary;
    summary["summary"] = {{"pairs", report.records.size()},
                          {"pass_count", report.pass_count()},
                          {"max_abs_error", report.max_abs_error()}};
    os << summary.dump() << '\n';
    return os.str();
  }

  os << "scenario   " << report.scenario << "\n";
  os << "samples    " << report.samples << "  seed " << report.seed << "  tolerance " << num(report.tolerance) << "\n";
  for (const auto& [k, v] : report.conventions) os << "  " << k << ": " << v << "\n";
  os << "\n";
  char line[512];
  std::snprintf(line, sizeof line, "%5s  %-48s  %-48s  %-24s  %-24s  %s\n", "#", "D(x_h, x_g)", "D~(x_h, x_g)",
                "|D - D~|", "termwise max dev", "pass");
  os << line;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    std::snprintf(line, sizeof line, "%5zu  %-48s  %-48s  %-24s  %-24s  %s\n", i, complex_text(r.lhs).c_str(),
                  complex_text(r.rhs).c_str(), num(r.abs_error).c_str(), num(r.termwise_max_deviation).c_str(),
                  r.pass ? "yes" : "NO");
    os << line;
  }
  os << "\n" << report.pass_count() << "/" << report.records.size() << " pairs pass; max |D - D~| = "
     << num(report.max_abs_error()) << "\n";
  return os.str();
}

RunReport parse_report(const std::string& text) {
  RunReport r;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const ojson j = ojson::parse(line);
    if (!have_header) {
      if (j.value("format", "") != "endotransfer-report") throw std::runtime_error("not an endotransfer report");
      r.version = j.at("version").get<int>();
      if (r.version != kReportVersion) throw std::runtime_error("unsupported report version");
      r.scenario = j.at("scenario").get<std::string>();
      r.samples = j.at("samples").get<std::size_t>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.tolerance = j.at("tolerance").get<double>();
      for (const auto& [k, v] : j.at("conventions").items()) r.conventions.emplace_back(k, v.get<std::string>());
      have_header = true;
      continue;
    }
    if (j.contains("summary")) continue;
    PairRecord rec;
    rec.x_h = j.at("xh").get<Vec>();
    rec.x_g = j.at("xg").get<Vec>();
    rec.lhs = {j.at("lhs")[0].get<double>(), j.at("lhs")[1].get<double>()};
    rec.rhs = {j.at("rhs")[0].get<double>(), j.at("rhs")[1].get<double>()};
    rec.abs_error = j.at("abs_error").get<double>();
    rec.termwise_max_deviation = j.at("termwise_max_deviation").get<double>();
    rec.pass = j.at("pass").get<bool>();
    r.records.push_back(std::move(rec));
  }
  if (!have_header) throw std::runtime_error("report has no header");
  return r;
}

}  // namespace endo
