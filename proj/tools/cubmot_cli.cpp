// Command-line front end: runs verification suites and writes JSON and
// markdown reports. Exit code 0 = all checks pass, 1 = a check failed,
// 2 = bad configuration or arguments.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cubmot/config.hpp"
#include "cubmot/error.hpp"
#include "cubmot/suites.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for cubic fourfolds, K3 surfaces and their motives"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // accept the global flags after the subcommand too

  std::optional<std::string> config, gram;
  std::optional<std::uint64_t> seed;
  std::string out = "reports";
  app.add_option("--config", config, "JSON config file");
  app.add_option("--out", out, "output directory for <suite>.json and <suite>.md")->capture_default_str();
  app.add_option("--seed,--random-seed", seed, "seed for randomized suites");
  app.add_option("--gram", gram, "primitive Gram: default | random | PATH");

  std::vector<std::string> names = cubmot::suite_names();
  for (const auto& n : names) app.add_subcommand(n, "run the " + n + " suite");
  app.add_subcommand("all", "run every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cubmot::SuiteOptions opts;
  try {
    opts = cubmot::load_options(config, gram, seed);
  } catch (const cubmot::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }

  std::string chosen = app.get_subcommands().front()->get_name();
  std::vector<std::string> run = chosen == "all" ? names : std::vector<std::string>{chosen};
  std::vector<cubmot::SuiteReport> reports;
  try {
    for (const auto& n : run) {
      reports.push_back(cubmot::run_suite(n, opts));
      const auto& r = reports.back();
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks.size() << " checks, " << r.seconds
                << " s)\n";
      for (const auto& c : r.checks)
        if (!c.passed) std::cout << "  failed: " << c.id << " -- " << c.detail << "\n";
    }
  } catch (const cubmot::Error& e) {
    std::cerr << to_string(e.kind()) << " error: " << e.what() << "\n";
    return e.kind() == cubmot::ErrorKind::config ? 2 : 1;
  }

  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) {
    std::cerr << "cannot create " << out << ": " << ec.message() << "\n";
    return 2;
  }
  std::ofstream(fs::path(out) / (chosen + ".json")) << cubmot::report_json(reports, opts) << "\n";
  std::ofstream(fs::path(out) / (chosen + ".md")) << cubmot::report_markdown(reports, opts);

  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}
