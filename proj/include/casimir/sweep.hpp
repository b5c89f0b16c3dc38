#pragma once

// Exhaustive checks over families of stable representations: closed form against
// the direct Gram-matrix sum, the linear-iff-balanced theorem, and the perfect-square
// shape of the 1/N coefficient.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "casimir/young.hpp"

namespace casimir {

/// All distinct canonical stable reps with k <= k_max and every label in [0, bound],
/// sorted.
std::vector<StableRep> enumerate_stable_reps(int k_max, Label bound);

struct SweepSummary {
  std::size_t reps = 0;
  /// (rep, n) pairs evaluated; n below a rep's stable range is skipped.
  std::size_t evaluations = 0;
  std::size_t balanced = 0;
  std::size_t linear = 0;
  std::size_t oracle_mismatches = 0;
  std::size_t theorem_violations = 0;
  std::size_t square_violations = 0;
  /// First few violation descriptions, in rep order.
  std::vector<std::string> messages;

  bool passed() const {
    return oracle_mismatches == 0 && theorem_violations == 0 && square_violations == 0;
  }
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

inline constexpr std::size_t kMaxSweepMessages = 16;

/// Reps split across OpenMP threads; the summary does not depend on the schedule.
SweepSummary stable_sweep(std::span<const StableRep> reps, std::span<const int> n_values);
SweepSummary stable_sweep_serial(std::span<const StableRep> reps, std::span<const int> n_values);

}  // namespace casimir
