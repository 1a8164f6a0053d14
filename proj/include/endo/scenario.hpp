#pragma once

#include "endo/distributions.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace endo {

/// Validation failure; every message carries the offending line number when known.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

/// Line-oriented `key = value` text with `[section]` headers. Keys inside a
/// section are stored as "section.key".
struct KeyValueFile {
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::map<std::string, Entry> entries;

  const Entry* find(const std::string& key) const;
};

KeyValueFile parse_key_values(const std::string& text);

struct Scenario {
  std::string name;
  std::string g_type;
  std::vector<Grade> grading_g;
  std::vector<int> s_character;  // +-1 on simple coroots
  std::vector<Grade> grading_h;
  HGalois h_galois = HGalois::elliptic;
  std::optional<std::vector<IntVector>> h_roots;
  std::vector<std::vector<int>> real_weyl_extras;
  std::vector<std::vector<int>> h_real_weyl_extras;
  RationalVector base_h;
  RationalVector base_g;
  Rational form_scale{1};
};

/// Parses and validates; the resulting scenario always builds a Problem.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

EndoscopicDatum build_datum(const Scenario& sc);
Problem build_problem(const Scenario& sc);

/// A lattice with involution, optionally enlarged by a finite subgroup.
struct LatticeSpec {
  IntMatrix sigma;
  std::vector<RationalVector> subgroup;
};

LatticeSpec parse_lattice(const std::string& text);
LatticeSpec load_lattice(const std::string& path);

/// Numeric helpers shared with the command line.
Rational parse_rational(const std::string& token);
RationalVector parse_rational_vector(const std::string& text);
Vec parse_vector(const std::string& text);
Vec to_double(const RationalVector& v);

std::string read_file(const std::string& path);

}  // namespace endo
