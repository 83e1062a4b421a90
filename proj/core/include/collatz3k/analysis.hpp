#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"

namespace collatz3k {

// How an orbit enters the terminal period-3 cycle {3^k, 4*3^k, 2*3^k},
// decided by the term two steps before arrival:
//   Standard  — terms[t-2] == 4 * 3^k (entered through the doubling arc)
//   Shortcut  — terms[t-2] == 3^(k-1), possible only for k >= 1
//   Short     — t < 2, no such term exists
//   None      — the orbit did not reach 3^k within its budget
enum class CycleTag { Standard, Shortcut, Short, None };

std::string_view to_string(CycleTag tag);

struct AnalysisRow {
  Natural n;
  unsigned k = 0;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> odd_count;
  CycleTag tag = CycleTag::None;
};

// budget = 0 selects the per-value default budget in all functions below.

std::optional<std::uint64_t> total_stopping_time(const Natural& n,
                                                 const Params& params,
                                                 std::uint64_t budget = 0);

// Number of odd terms among the t+1 terms up to and including the target
// (3^k itself is odd, so the count is at least 1).
std::optional<std::uint64_t> odd_term_count(const Natural& n,
                                            const Params& params,
                                            std::uint64_t budget = 0);

CycleTag classify_cycle_entry(const Natural& n, const Params& params,
                              std::uint64_t budget = 0);

// Rows for every n in [lo, hi], ascending.
std::vector<AnalysisRow> figure_dataset(const Natural& lo, const Natural& hi,
                                        const Params& params,
                                        std::uint64_t budget = 0);

struct GroupEntry {
  Natural n;
  std::uint64_t odd_count = 0;
  CycleTag tag = CycleTag::None;
};

// Terminating values of [lo, hi] bucketed by total stopping time; values
// that do not resolve within the budget are omitted. Entries within a
// bucket are ascending in n.
std::map<std::uint64_t, std::vector<GroupEntry>> group_by_stopping_time(
    const Natural& lo, const Natural& hi, const Params& params,
    std::uint64_t budget = 0);

}  // namespace collatz3k
