#include "collatz3k/analysis.hpp"

#include <stdexcept>

#include "collatz3k/dynamics.hpp"
#include "collatz3k/errors.hpp"

namespace collatz3k {

namespace {

std::uint64_t resolve_budget(const Natural& n, std::uint64_t budget) {
  return budget != 0 ? budget : default_step_budget(n);
}

CycleTag classify_summary(const TrajectorySummary& summary,
                          const Params& params) {
  if (summary.status != TerminationStatus::ReachedTarget) return CycleTag::None;
  if (summary.stopping_time < 2) return CycleTag::Short;
  const Natural& entry = *summary.entry_predecessor;
  if (entry == 4 * params.target()) return CycleTag::Standard;
  if (params.k() >= 1 && entry == pow3(params.k() - 1)) return CycleTag::Shortcut;
  throw InternalInvariantError(
      "cycle entry predecessor " + to_decimal(entry) +
      " matches neither 4*3^k nor 3^(k-1) at k=" + std::to_string(params.k()));
}

AnalysisRow row_from_summary(const Natural& n, const Params& params,
                             const TrajectorySummary& summary) {
  AnalysisRow row;
  row.n = n;
  row.k = params.k();
  if (summary.status == TerminationStatus::ReachedTarget) {
    row.t = summary.stopping_time;
    row.odd_count = summary.odd_count;
  }
  row.tag = classify_summary(summary, params);
  return row;
}

}  // namespace

std::string_view to_string(CycleTag tag) {
  switch (tag) {
    case CycleTag::Standard:
      return "Standard";
    case CycleTag::Shortcut:
      return "Shortcut";
    case CycleTag::Short:
      return "Short";
    case CycleTag::None:
      return "None";
  }
  return "unknown";
}

std::optional<std::uint64_t> total_stopping_time(const Natural& n,
                                                 const Params& params,
                                                 std::uint64_t budget) {
  const auto summary = stream_trajectory(n, params, resolve_budget(n, budget));
  if (summary.status != TerminationStatus::ReachedTarget) return std::nullopt;
  return summary.stopping_time;
}

std::optional<std::uint64_t> odd_term_count(const Natural& n,
                                            const Params& params,
                                            std::uint64_t budget) {
  const auto summary = stream_trajectory(n, params, resolve_budget(n, budget));
  if (summary.status != TerminationStatus::ReachedTarget) return std::nullopt;
  return summary.odd_count;
}

CycleTag classify_cycle_entry(const Natural& n, const Params& params,
                              std::uint64_t budget) {
  const auto summary = stream_trajectory(n, params, resolve_budget(n, budget));
  return classify_summary(summary, params);
}

std::vector<AnalysisRow> figure_dataset(const Natural& lo, const Natural& hi,
                                        const Params& params,
                                        std::uint64_t budget) {
  if (lo < 1) throw std::invalid_argument("figure_dataset: lo must be positive");
  std::vector<AnalysisRow> rows;
  for (Natural n = lo; n <= hi; ++n) {
    const auto summary = stream_trajectory(n, params, resolve_budget(n, budget));
    rows.push_back(row_from_summary(n, params, summary));
  }
  return rows;
}

std::map<std::uint64_t, std::vector<GroupEntry>> group_by_stopping_time(
    const Natural& lo, const Natural& hi, const Params& params,
    std::uint64_t budget) {
  if (lo < 1)
    throw std::invalid_argument("group_by_stopping_time: lo must be positive");
  std::map<std::uint64_t, std::vector<GroupEntry>> groups;
  for (Natural n = lo; n <= hi; ++n) {
    const auto summary = stream_trajectory(n, params, resolve_budget(n, budget));
    if (summary.status != TerminationStatus::ReachedTarget) continue;
    groups[summary.stopping_time].push_back(
        GroupEntry{n, summary.odd_count, classify_summary(summary, params)});
  }
  return groups;
}

}  // namespace collatz3k
