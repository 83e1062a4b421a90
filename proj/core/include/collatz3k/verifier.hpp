#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collatz3k/dynamics.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"

namespace collatz3k {

struct SweepConfig {
  unsigned k = 0;
  Natural start = 1;
  Natural end = 1;
  std::uint64_t budget = 0;      // 0 = default_step_budget(end)
  std::uint64_t chunk_size = 65536;
  unsigned parallelism = 0;      // 0 = hardware concurrency
  std::string checkpoint_path;   // empty = run without checkpointing
  // Stop after committing this many chunks (0 = no limit). Exists so tests
  // and operators can interrupt a sweep at a deterministic point and then
  // resume it from the checkpoint.
  std::uint64_t max_chunks_per_run = 0;
};

struct SweepFailure {
  Natural n;
  TerminationStatus status = TerminationStatus::BudgetExhausted;
};

struct ChunkResult {
  Natural first;
  Natural last;
  std::uint64_t verified = 0;
  std::vector<SweepFailure> failures;
  std::optional<std::uint64_t> max_t;
  Natural max_t_n;  // smallest attaining value; meaningful iff max_t
  std::uint64_t odd_max = 0;
  double elapsed_s = 0.0;
};

struct VerificationReport {
  // Configuration echo.
  unsigned k = 0;
  Natural start;
  Natural end;
  std::uint64_t budget = 0;
  std::uint64_t chunk_size = 0;

  // Aggregates over all committed chunks (including ones replayed from a
  // checkpoint on resume).
  std::uint64_t verified = 0;
  std::uint64_t budget_exhausted = 0;
  std::uint64_t cycle_without_target = 0;
  std::optional<std::uint64_t> max_t;
  Natural max_t_n;
  std::vector<ChunkResult> chunks;
  bool completed = false;

  // Execution details; ignored by equivalent_ignoring_timing.
  unsigned parallelism = 1;
  std::string checkpoint_path;
  double wall_elapsed_s = 0.0;
  double processing_elapsed_s = 0.0;  // sum of per-chunk elapsed times
  double throughput = 0.0;            // verified / processing_elapsed_s
};

// Verifies every n in [first, last] with a fixed budget. Failures are
// re-examined with cycle detection so a genuine closed loop that avoids
// 3^k is reported as CycleWithoutTarget rather than a spent budget.
ChunkResult verify_chunk(const Params& params, const Natural& first,
                         const Natural& last, std::uint64_t budget);

// Chunked sweep over [start, end]: workers claim chunks from a shared
// counter, results are committed strictly in range order, and each commit
// appends one durable checkpoint line. A sweep interrupted between commits
// resumes from the checkpoint and produces a report identical (up to
// timing) to an uninterrupted run.
VerificationReport run_sweep(const SweepConfig& cfg);

// Equality on everything except timing and execution details.
bool equivalent_ignoring_timing(const VerificationReport& a,
                                const VerificationReport& b);

struct SpotCheckResult {
  TerminationStatus status = TerminationStatus::BudgetExhausted;
  std::optional<std::uint64_t> t;
  std::uint64_t steps_used = 0;
  std::uint64_t odd_count = 0;  // meaningful iff the target was reached
  std::uint64_t peak_bits = 0;
};

// Streams the orbit of one (typically huge) value. budget = 0 selects the
// per-value default.
SpotCheckResult spot_check_large(const Natural& n, const Params& params,
                                 std::uint64_t budget = 0);

}  // namespace collatz3k
