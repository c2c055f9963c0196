// Acceptance gate: one PASS/FAIL line per criterion, plus elapsed time
// against the runtime budget. Exit status is non-zero if any line fails.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "primeage/verify.hpp"

using namespace primeage;

namespace {

// Runtime budgets in seconds, by criterion.
constexpr double kBudget[] = {0, 10, 30, 120, 1200, 1800, 300, 10, 300, 900, 600, 3600};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  verify::Config cfg;
  bool all = true;
  auto t = clock::now();
  double shared_census = 0;

  auto line = [&](int id, bool pass, double seconds, const std::string& title, const std::string& detail) {
    const bool in_time = seconds <= kBudget[id];
    all = all && pass && in_time;
    std::cout << (pass && in_time ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << title << "  ["
              << std::fixed << std::setprecision(1) << seconds << " s / " << kBudget[id] << " s]  " << detail
              << std::endl;
  };
  auto lap = [&] {
    const auto now = clock::now();
    const double s = std::chrono::duration<double>(now - t).count();
    t = now;
    return s;
  };

  std::vector<verify::CriterionResult> first;
  first = verify::run_all(cfg, [&](const verify::CriterionResult& r) {
    double s = lap();
    if (r.id == 4) {
      shared_census = s;
    } else if (r.id == 5) {
      s += shared_census;  // 4 and 5 share one generation; budget 5 covers both
    }
    line(r.id, r.pass, s, r.title, r.detail);
  });

  // Determinism: a second run with the same seed renders the same bytes.
  lap();
  const std::string a = verify::render(cfg, first);
  const std::string b = verify::render(cfg, verify::run_all(cfg));
  line(11, a == b, lap(), "determinism", a == b ? "two runs, identical reports" : "reports differ");

  return all ? 0 : 1;
}
