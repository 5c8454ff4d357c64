#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace galcov {

struct PropertyResult {
  std::string name;
  int trials = 0;
  bool passed = true;
  std::string detail;  // first counterexample
};

/// Randomized self-consistency checks: braid relations and inverse
/// cancellation under the Artin action, half twists permuting their
/// endpoints, the Smith divisibility chain and determinant, and closed coset
/// tables satisfying every relator. Deterministic for a given seed.
std::vector<PropertyResult> run_properties(std::uint64_t seed, int trials);

}  // namespace galcov
