#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"

namespace collatz3k {

enum class TerminationStatus {
  ReachedTarget,       // orbit hit 3^k within the budget
  BudgetExhausted,     // budget ran out first
  CycleWithoutTarget,  // orbit revisited a value without passing 3^k
};

std::string_view to_string(TerminationStatus status);

// Materialized orbit prefix. terms[0] is the start value; when status is
// ReachedTarget, terms[stopping_time] == 3^k and iteration stopped there.
struct Trajectory {
  Natural start;
  unsigned k = 0;
  std::vector<Natural> terms;
  TerminationStatus status = TerminationStatus::BudgetExhausted;
  std::uint64_t stopping_time = 0;  // meaningful iff status == ReachedTarget
};

// Parity shape of the first l terms: m odd terms, d[0] even terms before
// the first odd one, d[i] even terms after the i-th odd one (d[m] cut off
// at the prefix boundary). Always sum(d) == l - m and d.size() == m + 1.
struct OddEvenProfile {
  std::uint64_t l = 0;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> d;
};

struct CycleReport {
  bool found = false;
  std::vector<Natural> members;  // listed from the entry value, in orbit order
  std::uint64_t length = 0;
  std::uint64_t steps_used = 0;
};

// Constant-memory fold over an orbit; used by the sweep verifier and the
// large spot checks, where materializing terms would dominate the cost.
struct TrajectorySummary {
  TerminationStatus status = TerminationStatus::BudgetExhausted;
  std::uint64_t stopping_time = 0;  // iff ReachedTarget
  std::uint64_t steps_used = 0;
  std::uint64_t odd_count = 0;  // odd terms seen, including start and target
  std::uint64_t peak_bits = 0;
  // Second-to-last term before the target (terms[t-2]); absent when t < 2.
  std::optional<Natural> entry_predecessor;
};

// One application of the map. Rejects n = 0 (the orbit of 0 never reaches
// a power of three and the parity formulas assume positive values).
Natural step(const Natural& n, const Params& params);

// Iterates until the target is reached, a value repeats, or the budget is
// spent, materializing every term. budget counts map applications.
Trajectory trajectory(const Natural& n, const Params& params,
                      std::uint64_t budget);

// Same dynamics as trajectory() but streaming: no terms are stored and no
// repeat detection is done (a repeat just runs the budget out). Small
// values advance in machine words and escalate to big integers only when
// 3n + 3^k would overflow.
TrajectorySummary stream_trajectory(const Natural& n, const Params& params,
                                    std::uint64_t budget);

// Parity profile of the first l terms of a materialized trajectory.
// Requires 1 <= l <= terms.size().
OddEvenProfile parity_profile(const Trajectory& traj, std::uint64_t l);

// Largest v with 3^v | n. Requires n >= 1.
std::uint64_t three_adic_valuation(const Natural& n);

// Brent's algorithm over the orbit of n; budget counts map applications
// across all phases. Members are listed from the cycle entry point.
CycleReport detect_cycle(const Natural& n, const Params& params,
                         std::uint64_t budget);

}  // namespace collatz3k
