#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recolle/recolle.hpp"

namespace {

constexpr int kConfigError = 2;

std::size_t budget_from_env(std::size_t fallback) {
  const char* raw = std::getenv("RECOLLE_BUDGET");
  if (!raw || !*raw) return fallback;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(raw, &pos, 0);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != std::string(raw).size() || v == 0)
    throw recolle::suites::ConfigError("RECOLLE_BUDGET must be a positive integer");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using recolle::suites::SuiteConfig;
  CLI::App app{"Recollements of F2 quiver representations: suites and reports"};
  app.set_version_flag("--version", "recolle 1.0");

  std::string command;
  SuiteConfig cfg;
  std::string json_path;
  std::string format = "text";
  std::string object_text;
  std::size_t degree = 0;

  app.add_option("command", command, "verify | counterexample | mv | derived | ext | classify")
      ->required()
      ->check(CLI::IsMember({"verify", "counterexample", "mv", "derived", "ext", "classify"}));
  app.add_option("--example", cfg.example, "quad-free | quad-vect | product | semidirect (mv only)")
      ->capture_default_str();
  app.add_option("--max-dim", cfg.max_dim, "dimension bounds for A at the two vertices")
      ->expected(2)
      ->capture_default_str();
  app.add_option("--max-dim-aa", cfg.max_dim_aa, "dimension bound for A''")->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--json", json_path, "write the JSON report here");
  app.add_option("--format", format, "stdout format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--functor", cfg.functor, "derived: i^* i^! i_* j_! j^* j_* r")->capture_default_str();
  app.add_option("--object", object_text, "derived: object in the source category as JSON, e.g. {\"dims\":{\"v1\":1,\"v2\":0}}");
  auto* deg = app.add_option("--degree", degree, "derived: degree n");
  app.add_flag("--right", cfg.right, "derived: right derived functor instead of left");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    cfg.budget = budget_from_env(cfg.budget);
    if (deg->count() > 0) cfg.degree = degree;
    if (!object_text.empty()) {
      try {
        cfg.object = nlohmann::json::parse(object_text);
      } catch (const nlohmann::json::parse_error& e) {
        throw recolle::suites::ConfigError(std::string("--object: ") + e.what());
      }
    }
    const auto report = recolle::suites::run(command, cfg);
    const auto j = report.to_json();
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw recolle::suites::ConfigError("cannot write " + json_path);
      out << j.dump(2) << "\n";
    }
    if (format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << report.to_text();
    return report.exit_code();
  } catch (const recolle::suites::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const recolle::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  }
}
