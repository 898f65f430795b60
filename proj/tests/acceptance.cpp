// Runs every suite with default options and prints one line per acceptance
// criterion. Exit status is nonzero if any criterion fails or runs too long.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "cubmot/suites.hpp"

using namespace cubmot;

namespace {

struct Criterion {
  int number;
  const char* name;
  double limit_s;
};

const std::vector<Criterion> kCriteria = {
    {1, "Chern/Todd pipeline", 1},
    {2, "Mukai table vs Hilbert polynomial", 1},
    {3, "lambda classes and span", 1},
    {4, "Chow-Kunneth projector suite", 5},
    {5, "mutation kernel identities", 30},
    {6, "small-diagonal remainder P", 60},
    {7, "Euler consistency negative test", 60},
    {8, "equivariant Witt, randomized", 60},
    {9, "Gamma certificates and corruption", 120},
    {10, "cubic-K3 transcendental certificates", 30},
};

}  // namespace

int main() {
  SuiteOptions opts = SuiteOptions::defaults();
  std::map<int, bool> ok;
  std::map<int, double> secs;
  std::map<int, std::string> failed;
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, opts);
    for (const auto& c : r.checks) {
      if (!ok.contains(c.criterion)) ok[c.criterion] = true;
      ok[c.criterion] = ok[c.criterion] && c.passed;
      secs[c.criterion] = r.seconds;
      if (!c.passed && failed[c.criterion].empty()) failed[c.criterion] = c.id + (c.detail.empty() ? "" : ": " + c.detail);
    }
  }
  int bad = 0;
  for (const auto& c : kCriteria) {
    bool has = ok.contains(c.number);
    bool in_time = secs[c.number] < c.limit_s;
    bool pass = has && ok[c.number] && in_time;
    std::printf("[%s] %2d %-40s %7.3f s (limit %g s)", pass ? "PASS" : "FAIL", c.number, c.name, secs[c.number],
                c.limit_s);
    if (!has) std::printf("  no checks recorded");
    else if (!ok[c.number]) std::printf("  %s", failed[c.number].c_str());
    else if (!in_time) std::printf("  over time limit");
    std::printf("\n");
    bad += pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - bad, kCriteria.size());
  return bad == 0 ? 0 : 1;
}
