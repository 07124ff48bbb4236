#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamistrat/json_io.hpp"

namespace lamistrat {

struct AcceptanceOptions {
  std::uint64_t seed = 0;
  int samples = 1000;  // random vectors per fixture for flip soundness
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::int64_t checks = 0;
  std::vector<std::string> failures;  // first few, for the report
  Json details = Json::object();
};

inline constexpr int kCriterionCount = 9;

// Runs one criterion (1..9). Never throws; errors become failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

Json criterion_to_json(const CriterionResult& r);

}  // namespace lamistrat
