#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace procat::procli {

// One acceptance criterion run on a seeded corpus. Any library error inside a case, including
// BudgetExhausted, counts as a failure of that case.
struct SuiteResult {
  int criterion = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // the first few messages
  std::vector<std::string> notes;
  double seconds = 0;
  bool passed() const { return failed == 0; }
};

inline constexpr int kCriteria = 8;

// InvalidArgument for a criterion outside 1..kCriteria.
SuiteResult run_criterion(int criterion, std::uint64_t seed);
std::vector<SuiteResult> run_suites(std::uint64_t seed);

// "PASS 1 reedy: 201 cases, 0 failed" followed by indented failures and notes; the timing is
// appended only when asked, so that equal seeds give equal output by default.
std::string to_text(const SuiteResult& r, bool with_time = false);
// Same content, without timings.
nlohmann::json to_json(const SuiteResult& r);

}  // namespace procat::procli
