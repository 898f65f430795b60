#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubmot/matrix.hpp"

namespace cubmot {

struct CheckRecord {
  std::string id;
  std::string anchor;  // the mathematical statement the check is a shadow of
  int criterion = 0;   // acceptance criterion number
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  Matrix gram;         // primary primitive Gram
  Matrix second_gram;  // a second, distinct Gram for form-independence checks
  std::uint64_t seed = 20240601;
  int witt_instances = 200;
  int gamma_instances = 20;
  int gamma_max_alg = 3;

  static SuiteOptions defaults();
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  double seconds = 0;
  /// Suite-specific payload, already serialized as a JSON object string.
  std::string data_json = "{}";

  bool passed() const;
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

std::string report_json(const std::vector<SuiteReport>& reports, const SuiteOptions& opts);
std::string report_markdown(const std::vector<SuiteReport>& reports, const SuiteOptions& opts);

}  // namespace cubmot
