#pragma once

#include "eiscoh/numerics.hpp"

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace eiscoh {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  int bits = 384;
  std::uint64_t seed = 0;
  // Empty means all criteria.
  std::vector<int> only;
};

constexpr int kCriteriaCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
// Runs the selected criteria, printing one line per criterion as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream* progress = nullptr);
std::string format_result(const CriterionResult& r);

// Table 1 value of G2(L_O) as a string fraction.
std::string table1_value(long d);

}  // namespace eiscoh
