#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mvkit {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  std::ostream* log = nullptr;  // progress messages, if set
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

// "PASS 3 title: detail (1.2 s)"
std::string format_result(const CriterionResult& r);

}  // namespace mvkit
