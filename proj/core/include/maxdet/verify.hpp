#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxdet {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  double elapsed_seconds = 0.0;
  std::vector<CheckLine> checks;
};

struct VerificationOptions {
  int search_threads = 1;
};

/// Runs the full reproduction suite: reference bound values, the greedy
/// schedule data, exact determinants of the fixed matrices, exhaustive
/// search certification and the consistency properties, each with its
/// stated tolerance and runtime limit.
std::vector<CriterionResult> run_verification(const VerificationOptions& options = {});

/// One line per criterion; failing check lines are always printed, and all
/// check lines when verbose.
void print_verification(const std::vector<CriterionResult>& results,
                        std::ostream& out, bool verbose = false);

bool all_passed(const std::vector<CriterionResult>& results);

/// Machine-readable one-object summary {criteria: [...], passed, failed}.
std::string verification_to_json(const std::vector<CriterionResult>& results);

}  // namespace maxdet
