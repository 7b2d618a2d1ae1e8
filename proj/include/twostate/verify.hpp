#pragma once

// Invariant suite run by `twostate verify`.

#include <cstddef>
#include <string>
#include <vector>

#include "twostate/parallel.hpp"
#include "twostate/rng.hpp"

namespace twostate {

struct VerifyOptions {
  std::size_t theta_steps = 181;
  std::size_t alpha_steps = 101;
  std::size_t samples = 1'000'000;
  RngSeed seed{};
  // Added to the optimized classical fidelity inside the checks. Non-zero only
  // to confirm that the harness notices a broken formula.
  double tamper = 0.0;
  Execution execution = Execution::kParallel;
};

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  double deviation = 0.0;  // measured worst-case violation or distance
  double tolerance = 0.0;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace twostate
