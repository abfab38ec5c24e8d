#pragma once

#include "abwords/report_io.hpp"

namespace abw {

enum class ReproStatus { pass, fail, inconclusive };

struct RunReport {
  std::string target;
  ReproStatus status = ReproStatus::fail;
  Json observed;
  Json expected;
  double runtime_ms = 0.0;
};

// Registered target ids, in canonical order.
const std::vector<std::string>& reproduce_targets();

// Runs one target and compares observed against expected values exactly.
// A CapacityError during the run yields status inconclusive.
RunReport run_reproduce(const std::string& target, const StabilizationPolicy& pol = {});

Json to_json(const RunReport& r);

}  // namespace abw
