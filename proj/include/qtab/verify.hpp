#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qtab/poset.hpp"

namespace qtab {

struct CheckResult {
  std::string id;
  std::string anchor;  // which identity or property the check exercises
  bool pass = false;
  std::string lhs, rhs;  // filled on mismatch
  std::string detail;
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
};

/// Unset fields fall back to each suite's own defaults.
struct VerifyOptions {
  std::optional<unsigned> max_boxes, max_a, max_b, max_m, max_l;
  unsigned degree_cap = 20;
  unsigned jobs = 1;
  /// Only checks whose id contains this substring run.
  std::string filter;
};

struct Check {
  std::string id;
  std::string anchor;
  std::function<CheckResult()> run;
};

const std::vector<std::string>& suite_names();
/// Throws UnknownFamily for an unknown suite name.
std::vector<Check> build_suite(const std::string& suite, const VerifyOptions& options);
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options);
std::string report_to_json(const std::vector<VerificationReport>& reports);
std::string report_to_text(const VerificationReport& report);

/// All Young diagrams with 1..max_boxes boxes, then the shifted staircases
/// of size 2 and 3 and the propellers D(2), D(3).
std::vector<Poset> standard_corpus(unsigned max_boxes);

}  // namespace qtab
