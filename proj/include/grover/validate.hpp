#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grover {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // deterministic for a given seed/options (no clocks)
};

struct ValidateOptions {
  std::uint64_t seed = 12345;
  int n_max = 8;              // largest full-register size exercised (2..k_max_qubits)
  double perturbation = 0.0;  // test seam: offset added to closed-form P in the
                              // oracle-equivalence check; keep 0 in real runs
};

/// The full self-check suite: closed forms vs both oracles, algebraic
/// invariants, and the headline threshold numbers. Deterministic for a given
/// options struct.
std::vector<CheckResult> run_validation(const ValidateOptions& opts);

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace grover
