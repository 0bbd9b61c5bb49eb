#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lpa {

struct SelfTestResult {
  bool ok = true;
  std::vector<std::string> lines;
};

/// Deterministic invariant suite (ring axioms, confluence, grading laws,
/// groupoid dictionary, profile oracle, witness soundness). The seed feeds
/// every randomized check so failures reproduce.
SelfTestResult run_selftest(std::uint64_t seed);

}  // namespace lpa
