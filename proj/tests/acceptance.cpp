// One line per acceptance criterion. Every comparison is exact; the only
// tolerance is the wall-clock limit on each criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "qtab/verify.hpp"

using namespace qtab;

namespace {

struct Part {
  std::string suite, filter;
};

struct Criterion {
  int number;
  std::string name;
  std::vector<Part> parts;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden generating functions", {{"goldens", ""}}, 1},
      {2, "BSV tableaux of rectangles, ab <= 16", {{"thm-syt", "thm-syt/rect:"}}, 60},
      {3, "BSV plane partitions and row refinements", {{"thm-pp", ""}, {"thm-syt", "refined"}}, 120},
      {4, "q-toggle-symmetry of uni/rpp/lin/rk", {{"toggle-symmetry", ""}}, 120},
      {5, "m-weight ensembles and factorization", {{"m-weight", ""}}, 120},
      {6, "toggle solver constants and inconsistency", {{"solver", ""}}, 600},
      {7, "Motzkin paths, Catalan and Narayana", {{"paths", ""}}, 60},
      {8, "explicit toggle bijection", {{"appendix", ""}}, 120},
      {9, "hook length formulas", {{"hooks", ""}}, 60},
  };

  VerifyOptions options;
  options.jobs = std::max(1U, std::thread::hardware_concurrency());

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::size_t passed = 0, total = 0;
    std::string first_failure;
    for (const auto& part : c.parts) {
      VerifyOptions o = options;
      o.filter = part.filter;
      VerificationReport r = run_suite(part.suite, o);
      for (const auto& check : r.checks) {
        ++total;
        if (check.pass)
          ++passed;
        else if (first_failure.empty())
          first_failure = check.id + (check.detail.empty() ? "" : " (" + check.detail + ")");
      }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool ok = total > 0 && passed == total && in_time;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %-44s %zu/%zu checks  %.2f s (limit %.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.name.c_str(), passed, total, seconds, c.limit_seconds, in_time ? "" : "  over time",
                first_failure.empty() ? "" : ("  first failure: " + first_failure).c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
