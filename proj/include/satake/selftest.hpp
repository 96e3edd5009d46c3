#pragma once

// Invariant suite over Satake diagrams: validation, the automorphism and
// matrix identities for eps and theta^T, nonnegativity of the c coefficients,
// restricted-root bookkeeping and the weight action.

#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "satake/satake.hpp"

namespace satake {

struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

class SelfTestReport {
 public:
  CheckResult& check(const std::string& name);
  const std::deque<CheckResult>& checks() const { return checks_; }
  bool ok() const;
  std::size_t failure_count() const;

 private:
  std::deque<CheckResult> checks_;  // stable references
};

/// Runs every per-diagram invariant on d, labelling failures with `label`.
void check_diagram_invariants(const SatakeDiagram& d, const std::string& label, SelfTestReport& report);

/// Per-diagram invariants over every record, plus catalogue-level checks
/// (unique names, round trip of the text format).
SelfTestReport run_invariant_suite(std::span<const RealFormRecord> records);

}  // namespace satake
