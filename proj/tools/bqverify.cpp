#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bqdirac/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Residual checks for the vector representation of Dirac spinors"};
  app.require_subcommand(1);

  bqdirac::SuiteConfig cfg;
  std::string suite = "all";
  std::string report;
  auto* verify = app.add_subcommand("verify", "run identity suites");
  verify->add_option("--suite", suite, "algebra|basis|triality|dynamics|transform|mass|all")->required();
  verify->add_option("--trials", cfg.trials, "random trials per record")->required();
  verify->add_option("--seed", cfg.seed, "64-bit seed")->required();
  verify->add_option("--tol", cfg.tol, "residual tolerance")->required();
  verify->add_option("--report", report, "write the JSON report here");
  verify->add_option("--threads", cfg.threads, "worker threads (0: all cores)");

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "print a reference table");
  demo->add_option("name", demo_name, "eq29_slots|e_units_table|rest_frame_K|loop_phase")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*demo) {
    try {
      std::cout << bqdirac::demo(demo_name);
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << '\n';
      return 2;
    }
    return 0;
  }

  const auto parsed = bqdirac::parse_suite(suite);
  if (!parsed) {
    std::cerr << "unknown suite: " << suite << '\n';
    return 2;
  }
  cfg.suite = *parsed;
  if (!report.empty()) cfg.report_path = report;

  bqdirac::SuiteReport rep;
  try {
    rep = bqdirac::run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  std::cout << bqdirac::format_text(rep);
  if (cfg.report_path) {
    try {
      bqdirac::write_report(rep, *cfg.report_path);
    } catch (const std::exception& e) {
      std::cerr << e.what() << '\n';
      return 2;
    }
  }
  return rep.pass ? 0 : 1;
}
