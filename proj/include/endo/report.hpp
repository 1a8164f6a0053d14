#pragma once

#include "endo/distributions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace endo {

inline constexpr int kReportVersion = 1;
inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr double kSampleBox = 3.0;
inline constexpr double kWallMargin = 1e-3;

struct PairRecord {
  Vec x_h, x_g;
  Complex lhs, rhs;
  double abs_error = 0.0;
  double termwise_max_deviation = 0.0;
  bool pass = false;
};

struct RunReport {
  int version = kReportVersion;
  std::string scenario;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::vector<std::pair<std::string, std::string>> conventions;
  std::vector<PairRecord> records;

  std::size_t pass_count() const;
  double max_abs_error() const;
  bool all_pass() const { return pass_count() == records.size(); }
};

/// Uniform sample in [-3, 3]^rank, redrawn until min |<alpha, v>| >= 1e-3 |v|.
Vec sample_regular(const RootDatum& d, std::mt19937_64& rng);

/// Deterministic given the seed; refuses non-elliptic data.
RunReport run_verify(const Problem& p, const std::string& name, std::size_t samples, std::uint64_t seed,
                     double tolerance);

std::vector<std::pair<std::string, std::string>> convention_block(const Problem& p);

enum class ReportFormat { human, machine };

std::string emit_report(const RunReport& report, ReportFormat format);
/// Inverse of the machine format.
RunReport parse_report(const std::string& text);

}  // namespace endo
