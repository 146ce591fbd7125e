#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ddca/suites.hpp"

using namespace ddca;

namespace {

int write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    return 3;
  }
  out << text;
  return out ? 0 : 3;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed double current algebra verification driver"};
  app.require_subcommand(1);

  SuiteConfig cfg;
  std::string format = "text", cache_dir, out_path, mode = "full";
  bool strict = false;
  if (const char* env = std::getenv("DDCA_CACHE_DIR")) cache_dir = env;
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker count (checks currently run sequentially)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "structure constant cache (default $DDCA_CACHE_DIR)");
  app.add_flag("--strict", strict, "treat skipped checks as failures");

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  verify->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-degree", cfg.max_degree, "degree or weight bound")->check(CLI::PositiveNumber);
  int rank = 0;
  verify->add_option("--rank", rank, "single rank n")->check(CLI::PositiveNumber);
  verify->add_option("--k", cfg.k, "rational or 'symbolic'")->capture_default_str();
  verify->add_option("--lambda", cfg.lambda, "rational or 'symbolic' (type B)")->capture_default_str();
  verify->add_option("--mode", mode, "full or sample-and-fit")
      ->check(CLI::IsMember({"full", "sample-and-fit"}))
      ->capture_default_str();
  verify->add_option("--max-length", cfg.max_length, "word length bound (rank-table)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  std::string models;
  verify->add_option("--models", models, "comma-separated rank models (rank-table)");
  verify->add_option("--budget", cfg.term_budget, "term budget")->capture_default_str();
  verify->add_option("--out", out_path, "output file (default stdout)");

  auto* sc = app.add_subcommand("structure-constants", "T-basis coordinates of T(m1) T(m2)");
  std::string m1, m2;
  sc->add_option("--m1", m1, "T-index, e.g. \"(1,0),(0,2)^2\"")->required();
  sc->add_option("--m2", m2, "T-index")->required();
  sc->add_option("--out", out_path, "output file (default stdout)");
  sc->add_option("--budget", cfg.term_budget, "term budget")->capture_default_str();

  auto* rt = app.add_subcommand("rank-table", "word rank columns over p, f, r");
  std::string presentation = "pfr";
  rt->add_option("--presentation", presentation, "pfr, or pfrK to adjoin K as a generator")
      ->check(CLI::IsMember({"pfr", "pfrK"}))
      ->capture_default_str();
  rt->add_option("--models", models, "comma-separated: upo, weyl, ddca, ddca-n3, broken, broken4")
      ->default_str("upo,weyl,ddca-n3,broken");
  rt->add_option("--max-length", cfg.max_length, "word length bound")->check(CLI::PositiveNumber)->capture_default_str();
  rt->add_option("--out", out_path, "output file (default stdout)");

  auto* rep = app.add_subcommand("report", "run every suite");
  bool all = false;
  rep->add_flag("--all", all, "run all suites")->required();
  rep->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (rank) cfg.rank = rank;
  if (!cache_dir.empty()) cfg.cache_dir = std::filesystem::path(cache_dir);
  cfg.mode = mode == "full" ? CertMode::full : CertMode::sample_and_fit;
  const ReportFormat fmt = report_format_from_name(format);

  try {
    if (!models.empty()) cfg.models = split(models, ',');
    if (*verify) {
      VerificationReport r = run_suite(cfg);
      int io = write_out(emit(r, fmt), out_path);
      return io ? io : (r.failed(strict) ? 1 : 0);
    }
    if (*sc) {
      cfg.suite = "structure-constants";
      cfg.m1 = TIndex::parse(m1);
      cfg.m2 = TIndex::parse(m2);
      VerificationReport r = run_suite(cfg);
      const Check& c = r.checks.at(0);
      if (c.status != CheckStatus::pass) {
        std::cerr << status_name(c.status) << ": " << c.detail << "\n";
        return c.status == CheckStatus::skipped && !strict ? 0 : 1;
      }
      return write_out(fmt == ReportFormat::json ? c.detail + "\n" : emit(r, fmt), out_path);
    }
    if (*rt) {
      cfg.suite = "rank-table";
      if (cfg.models.empty()) cfg.models = split("upo,weyl,ddca-n3,broken", ',');
      if (presentation == "pfrK")
        for (auto& m : cfg.models) m += "+K";
      VerificationReport r = run_suite(cfg);
      int io = write_out(emit(r, fmt), out_path);
      return io ? io : (r.failed(strict) ? 1 : 0);
    }
    if (*rep) {
      std::vector<VerificationReport> rs;
      bool failed = false;
      for (const auto& name : suite_names()) {
        SuiteConfig c = cfg;
        c.suite = name;
        rs.push_back(run_suite(c));
        failed = failed || rs.back().failed(strict);
        std::cerr << name << ": " << (rs.back().failed(strict) ? "fail" : "ok") << "\n";
      }
      int io = write_out(emit_all(rs, fmt), out_path);
      return io ? io : (failed ? 1 : 0);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
