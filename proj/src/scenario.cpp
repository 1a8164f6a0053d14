#include "endo/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace endo {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split_groups(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ';'))
    if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::vector<Grade> parse_grades(const std::string& text) {
  std::vector<Grade> out;
  for (const auto& tok : split_tokens(text)) {
    std::string t = tok;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "c" || t == "compact") out.push_back(Grade::compact);
    else if (t == "n" || t == "noncompact") out.push_back(Grade::noncompact);
    else throw std::invalid_argument("grade '" + tok + "' is not one of c, n, compact, noncompact");
  }
  return out;
}

std::vector<std::vector<int>> parse_words(const std::string& text) {
  std::vector<std::vector<int>> out;
  for (const auto& group : split_groups(text)) {
    std::vector<int> word;
    for (const auto& tok : split_tokens(group)) word.push_back(std::stoi(tok));
    out.push_back(std::move(word));
  }
  return out;
}

std::vector<IntVector> parse_int_vectors(const std::string& text) {
  std::vector<IntVector> out;
  for (const auto& group : split_groups(text)) {
    IntVector v;
    for (const auto& tok : split_tokens(group)) v.push_back(std::stoll(tok));
    out.push_back(std::move(v));
  }
  return out;
}

const std::set<std::string> kScenarioKeys = {
    "name",       "g_type",           "grading_g",           "s_character",     "grading_h",      "h_galois",
    "h_roots",    "real_weyl_extras", "h_real_weyl_extras", "form_scale",      "base_point.x_h", "base_point.x_g"};

}  // namespace

ScenarioError::ScenarioError(std::vector<std::string> messages)
    : std::runtime_error(join(messages, "\n")), messages_(std::move(messages)) {}

const KeyValueFile::Entry* KeyValueFile::find(const std::string& key) const {
  const auto it = entries.find(key);
  return it == entries.end() ? nullptr : &it->second;
}

KeyValueFile parse_key_values(const std::string& text) {
  KeyValueFile file;
  std::vector<std::string> errors;
  std::istringstream is(text);
  std::string raw, section;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const std::string content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) continue;
    if (content.front() == '[') {
      if (content.back() != ']' || content.size() < 3) {
        errors.push_back("line " + std::to_string(line) + ": malformed section header");
        continue;
      }
      section = trim(content.substr(1, content.size() - 2));
      continue;
    }
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(line) + ": expected 'key = value'");
      continue;
    }
    const std::string key = trim(content.substr(0, eq));
    if (key.empty()) {
      errors.push_back("line " + std::to_string(line) + ": empty key");
      continue;
    }
    const std::string full = section.empty() ? key : section + "." + key;
    if (file.entries.count(full)) {
      errors.push_back("line " + std::to_string(line) + ": duplicate key '" + full + "'");
      continue;
    }
    file.entries[full] = {trim(content.substr(eq + 1)), line};
  }
  if (!errors.empty()) throw ScenarioError(errors);
  return file;
}

Rational parse_rational(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw std::invalid_argument("empty number");
  std::size_t pos = 0;
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const Int num = std::stoll(t.substr(0, slash), &pos);
    if (pos != slash) throw std::invalid_argument("malformed rational '" + t + "'");
    const std::string den_text = t.substr(slash + 1);
    const Int den = std::stoll(den_text, &pos);
    if (pos != den_text.size() || den == 0) throw std::invalid_argument("malformed rational '" + t + "'");
    return Rational(num, den);
  }
  if (const auto dot = t.find('.'); dot != std::string::npos) {
    const bool negative = t.front() == '-';
    const std::string int_part = t.substr(negative || t.front() == '+' ? 1 : 0, dot - (negative || t.front() == '+' ? 1 : 0));
    const std::string frac_part = t.substr(dot + 1);
    const std::string digits = int_part + frac_part;
    if (digits.empty() || frac_part.size() > 15 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed decimal '" + t + "'");
    Int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const Rational r(std::stoll(digits), scale);
    return negative ? -r : r;
  }
  const Int v = std::stoll(t, &pos);
  if (pos != t.size()) throw std::invalid_argument("malformed integer '" + t + "'");
  return Rational(v);
}

RationalVector parse_rational_vector(const std::string& text) {
  RationalVector out;
  for (const auto& tok : split_tokens(text)) out.push_back(parse_rational(tok));
  return out;
}

Vec parse_vector(const std::string& text) {
  Vec out;
  for (const auto& tok : split_tokens(text)) {
    if (tok.find('/') != std::string::npos) {
      out.push_back(boost::rational_cast<double>(parse_rational(tok)));
      continue;
    }
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("malformed number '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Vec to_double(const RationalVector& v) {
  Vec out;
  for (const auto& x : v) out.push_back(boost::rational_cast<double>(x));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

EndoscopicDatum build_datum(const Scenario& sc) {
  const RootDatum g = build_root_datum(sc.g_type);
  RationalVector phases;
  for (int s : sc.s_character) phases.push_back(s == 1 ? Rational(0) : Rational(1, 2));
  EndoscopicOptions opt;
  opt.h_grades = sc.grading_h;
  opt.h_galois = sc.h_galois;
  opt.h_roots = sc.h_roots;
  opt.real_weyl_extras = sc.real_weyl_extras;
  opt.h_real_weyl_extras = sc.h_real_weyl_extras;
  return EndoscopicDatum(RealFormGrading(g, sc.grading_g), phases, opt);
}

Problem build_problem(const Scenario& sc) {
  return make_problem(build_datum(sc), to_double(sc.base_h), to_double(sc.base_g),
                      boost::rational_cast<double>(sc.form_scale));
}

Scenario parse_scenario(const std::string& text) {
  const KeyValueFile kv = parse_key_values(text);
  std::vector<std::string> errors;
  auto at = [&](const std::string& key) {
    const auto* e = kv.find(key);
    return e ? "line " + std::to_string(e->line) + ": " : std::string();
  };
  for (const auto& [key, entry] : kv.entries)
    if (!kScenarioKeys.count(key)) errors.push_back("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
  for (const char* key : {"name", "g_type", "grading_g", "s_character", "grading_h", "base_point.x_h", "base_point.x_g"})
    if (!kv.find(key)) errors.push_back(std::string("missing required key '") + key + "'");
  if (!errors.empty()) throw ScenarioError(errors);

  Scenario sc;
  auto guarded = [&](const std::string& key, auto&& fn) {
    try {
      fn(kv.find(key)->value);
    } catch (const std::exception& ex) {
      errors.push_back(at(key) + key + ": " + ex.what());
    }
  };
  sc.name = kv.find("name")->value;
  sc.g_type = kv.find("g_type")->value;
  guarded("grading_g", [&](const std::string& v) { sc.grading_g = parse_grades(v); });
  guarded("grading_h", [&](const std::string& v) { sc.grading_h = parse_grades(v); });
  guarded("s_character", [&](const std::string& v) {
    for (const auto& tok : split_tokens(v)) {
      const int s = std::stoi(tok);
      if (s != 1 && s != -1) throw std::invalid_argument("entries must be +1 or -1");
      sc.s_character.push_back(s);
    }
  });
  if (kv.find("h_galois"))
    guarded("h_galois", [&](const std::string& v) {
      if (v == "elliptic") sc.h_galois = HGalois::elliptic;
      else if (v == "split") sc.h_galois = HGalois::split;
      else throw std::invalid_argument("must be 'elliptic' or 'split'");
    });
  if (kv.find("h_roots")) guarded("h_roots", [&](const std::string& v) { sc.h_roots = parse_int_vectors(v); });
  if (kv.find("real_weyl_extras"))
    guarded("real_weyl_extras", [&](const std::string& v) { sc.real_weyl_extras = parse_words(v); });
  if (kv.find("h_real_weyl_extras"))
    guarded("h_real_weyl_extras", [&](const std::string& v) { sc.h_real_weyl_extras = parse_words(v); });
  if (kv.find("form_scale"))
    guarded("form_scale", [&](const std::string& v) {
      sc.form_scale = parse_rational(v);
      if (sc.form_scale <= Rational(0)) throw std::invalid_argument("must be positive");
    });
  guarded("base_point.x_h", [&](const std::string& v) { sc.base_h = parse_rational_vector(v); });
  guarded("base_point.x_g", [&](const std::string& v) { sc.base_g = parse_rational_vector(v); });
  if (!errors.empty()) throw ScenarioError(errors);

  // Structural validation through the library invariants.
  std::optional<RootDatum> g;
  try {
    g.emplace(build_root_datum(sc.g_type));
  } catch (const std::exception& ex) {
    throw ScenarioError({at("g_type") + "g_type: " + ex.what()});
  }
  const std::size_t n = g->rank();
  if (sc.grading_g.size() != g->semisimple_rank())
    errors.push_back(at("grading_g") + "grading_g needs " + std::to_string(g->semisimple_rank()) + " labels");
  if (sc.s_character.size() != n) errors.push_back(at("s_character") + "s_character needs " + std::to_string(n) + " entries");
  if (sc.base_h.size() != n) errors.push_back(at("base_point.x_h") + "base point x_h needs " + std::to_string(n) + " entries");
  if (sc.base_g.size() != n) errors.push_back(at("base_point.x_g") + "base point x_g needs " + std::to_string(n) + " entries");
  if (!errors.empty()) throw ScenarioError(errors);

  std::optional<EndoscopicDatum> datum;
  try {
    datum.emplace(build_datum(sc));
  } catch (const std::exception& ex) {
    const std::string what = ex.what();
    std::string key = "s_character";
    if (what.find("h_roots") != std::string::npos || (sc.h_roots && what.find("closedness") != std::string::npos))
      key = "h_roots";
    else if (what.find("h_grading") != std::string::npos || what.find("of H") != std::string::npos)
      key = "grading_h";
    else if (what.find("real Weyl") != std::string::npos)
      key = kv.find("real_weyl_extras") ? "real_weyl_extras" : "grading_g";
    throw ScenarioError({at(key) + what});
  }
  const Vec bh = to_double(sc.base_h), bg = to_double(sc.base_g);
  if (!is_regular(datum->g(), bh)) errors.push_back(at("base_point.x_h") + "regularity invariant: base point x_h lies on a root wall");
  if (!is_regular(datum->g(), bg)) errors.push_back(at("base_point.x_g") + "regularity invariant: base point x_g lies on a root wall");
  if (!errors.empty()) throw ScenarioError(errors);
  try {
    build_problem(sc);
  } catch (const std::exception& ex) {
    throw ScenarioError({at("base_point.x_g") + ex.what()});
  }
  return sc;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

LatticeSpec parse_lattice(const std::string& text) {
  const KeyValueFile kv = parse_key_values(text);
  std::vector<std::string> errors;
  for (const auto& [key, entry] : kv.entries)
    if (key != "sigma" && key != "subgroup")
      errors.push_back("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
  const auto* s = kv.find("sigma");
  if (!s) errors.push_back("missing required key 'sigma'");
  if (!errors.empty()) throw ScenarioError(errors);
  LatticeSpec spec;
  try {
    spec.sigma = IntMatrix::from_rows(parse_int_vectors(s->value));
    RealTorus check(spec.sigma);
    if (const auto* sub = kv.find("subgroup"))
      for (const auto& group : split_groups(sub->value)) spec.subgroup.push_back(parse_rational_vector(group));
  } catch (const std::exception& ex) {
    throw ScenarioError({"line " + std::to_string(s->line) + ": " + ex.what()});
  }
  return spec;
}

LatticeSpec load_lattice(const std::string& path) { return parse_lattice(read_file(path)); }

}  // namespace endo
