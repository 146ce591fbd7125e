#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddca/admissible.hpp"

namespace ddca {

enum class CheckStatus { pass, fail, skipped };
std::string status_name(CheckStatus s);

struct Check {
  std::string id;
  std::string paper_ref;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
  std::string residual;  // set on failure
  double elapsed_ms = 0;
};

struct SuiteConfig {
  std::string suite;
  int max_degree = 0;  // 0: per-suite default
  std::optional<int> rank;
  std::string k = "symbolic";
  std::string lambda = "symbolic";
  CertMode mode = CertMode::full;
  std::uint64_t seed = 1;
  int threads = 1;
  int max_length = 8;
  std::size_t term_budget = 4'000'000;
  std::vector<std::string> models;  // rank-table
  std::optional<TIndex> m1, m2;     // structure-constants
  std::optional<std::filesystem::path> cache_dir;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  std::map<std::string, std::string> params;
  std::string version;
  // rank-table columns, keyed by model name
  std::map<std::string, std::vector<int>> columns;
  bool failed(bool strict = false) const;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument on an unknown suite or a malformed parameter.
VerificationReport run_suite(const SuiteConfig& cfg);
std::string paper_ref_for(const std::string& suite);

enum class ReportFormat { json, csv, text };
ReportFormat report_format_from_name(const std::string& name);
std::string emit(const VerificationReport& r, ReportFormat f);
std::string emit_all(const std::vector<VerificationReport>& rs, ReportFormat f);
// FNV-1a over the JSON report with elapsed times removed.
std::string report_digest(const VerificationReport& r);

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ddca
