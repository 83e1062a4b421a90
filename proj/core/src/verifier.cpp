#include "collatz3k/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <ctime>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "collatz3k/checkpoint.hpp"

namespace collatz3k {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void commit_chunk(VerificationReport& rep, ChunkResult chunk) {
  rep.verified += chunk.verified;
  for (const auto& f : chunk.failures) {
    if (f.status == TerminationStatus::CycleWithoutTarget)
      ++rep.cycle_without_target;
    else
      ++rep.budget_exhausted;
  }
  if (chunk.max_t && (!rep.max_t || *chunk.max_t > *rep.max_t)) {
    rep.max_t = chunk.max_t;
    rep.max_t_n = chunk.max_t_n;
  }
  rep.processing_elapsed_s += chunk.elapsed_s;
  rep.chunks.push_back(std::move(chunk));
}

CheckpointRecord make_record(const VerificationReport& rep,
                             const ChunkResult& chunk) {
  CheckpointRecord rec;
  rec.k = rep.k;
  rec.start = rep.start;
  rec.end = rep.end;
  rec.budget = rep.budget;
  rec.chunk_size = rep.chunk_size;
  rec.next_start = chunk.last + 1;
  rec.verified_through = chunk.last;
  rec.max_t = rep.max_t;
  if (rep.max_t) rec.max_t_n = rep.max_t_n;
  rec.timestamp = utc_timestamp();
  rec.chunk = chunk;
  return rec;
}

}  // namespace

ChunkResult verify_chunk(const Params& params, const Natural& first,
                         const Natural& last, std::uint64_t budget) {
  if (first < 1 || last < first)
    throw std::invalid_argument("verify_chunk: need 1 <= first <= last");
  if (budget == 0) throw std::invalid_argument("verify_chunk: budget must be positive");
  const auto t0 = Clock::now();
  ChunkResult res;
  res.first = first;
  res.last = last;
  for (Natural n = first; n <= last; ++n) {
    const auto summary = stream_trajectory(n, params, budget);
    if (summary.status == TerminationStatus::ReachedTarget) {
      ++res.verified;
      if (!res.max_t || summary.stopping_time > *res.max_t) {
        res.max_t = summary.stopping_time;
        res.max_t_n = n;
      }
      res.odd_max = std::max(res.odd_max, summary.odd_count);
    } else {
      res.failures.push_back(SweepFailure{n, summary.status});
    }
  }
  // The streaming pass cannot tell a spent budget from a closed loop, so
  // re-examine the stragglers.
  for (auto& failure : res.failures) {
    const auto cycle = detect_cycle(failure.n, params, budget);
    const bool misses_target =
        cycle.found && std::find(cycle.members.begin(), cycle.members.end(),
                                 params.target()) == cycle.members.end();
    failure.status = misses_target ? TerminationStatus::CycleWithoutTarget
                                   : TerminationStatus::BudgetExhausted;
  }
  res.elapsed_s = seconds_since(t0);
  return res;
}

VerificationReport run_sweep(const SweepConfig& cfg) {
  if (cfg.start < 1 || cfg.end < cfg.start)
    throw std::invalid_argument("run_sweep: need 1 <= start <= end");
  if (cfg.chunk_size == 0)
    throw std::invalid_argument("run_sweep: chunk_size must be positive");

  const auto t0 = Clock::now();
  const Params params(cfg.k);
  const std::uint64_t budget =
      cfg.budget != 0 ? cfg.budget : default_step_budget(cfg.end);
  const unsigned parallelism =
      cfg.parallelism != 0
          ? cfg.parallelism
          : std::max(1u, std::thread::hardware_concurrency());

  const Natural span = cfg.end - cfg.start + 1;
  const Natural chunk_count_z = (span + cfg.chunk_size - 1) / cfg.chunk_size;
  if (!chunk_count_z.fits_ulong_p())
    throw std::invalid_argument("run_sweep: range produces too many chunks");
  const std::uint64_t chunk_count = chunk_count_z.get_ui();

  VerificationReport rep;
  rep.k = cfg.k;
  rep.start = cfg.start;
  rep.end = cfg.end;
  rep.budget = budget;
  rep.chunk_size = cfg.chunk_size;
  rep.parallelism = parallelism;
  rep.checkpoint_path = cfg.checkpoint_path;

  auto chunk_first = [&](std::uint64_t i) {
    return Natural(cfg.start + Natural(i) * cfg.chunk_size);
  };
  auto chunk_last = [&](std::uint64_t i) {
    Natural last = chunk_first(i) + (cfg.chunk_size - 1);
    return last > cfg.end ? cfg.end : last;
  };

  std::uint64_t resume_from = 0;
  if (!cfg.checkpoint_path.empty()) {
    SweepConfig persisted = cfg;
    persisted.budget = budget;  // checkpoints always store the resolved budget
    if (auto resumed = load_checkpoint(cfg.checkpoint_path, persisted)) {
      for (auto& chunk : resumed->chunks) commit_chunk(rep, std::move(chunk));
      resume_from = rep.chunks.size();
    }
  }

  std::optional<CheckpointWriter> writer;
  if (!cfg.checkpoint_path.empty()) writer.emplace(cfg.checkpoint_path);

  std::uint64_t committed_now = 0;
  auto commit_and_log = [&](ChunkResult chunk) {
    commit_chunk(rep, std::move(chunk));
    if (writer) writer->append(make_record(rep, rep.chunks.back()));
    ++committed_now;
  };
  auto hit_run_limit = [&]() {
    return cfg.max_chunks_per_run != 0 &&
           committed_now >= cfg.max_chunks_per_run;
  };

  if (parallelism <= 1) {
    for (std::uint64_t i = resume_from; i < chunk_count && !hit_run_limit();
         ++i)
      commit_and_log(verify_chunk(params, chunk_first(i), chunk_last(i), budget));
  } else {
    std::atomic<std::uint64_t> next{resume_from};
    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, ChunkResult> done;
    std::exception_ptr worker_error;

    auto work = [&] {
      try {
        while (!stop.load(std::memory_order_relaxed)) {
          const std::uint64_t i = next.fetch_add(1);
          if (i >= chunk_count) break;
          ChunkResult chunk =
              verify_chunk(params, chunk_first(i), chunk_last(i), budget);
          {
            std::lock_guard<std::mutex> lock(mu);
            done.emplace(i, std::move(chunk));
          }
          cv.notify_all();
        }
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(mu);
          if (!worker_error) worker_error = std::current_exception();
        }
        stop.store(true);
        cv.notify_all();
      }
    };

    {
      std::vector<std::jthread> pool;
      pool.reserve(parallelism);
      for (unsigned i = 0; i < parallelism; ++i) pool.emplace_back(work);

      for (std::uint64_t i = resume_from; i < chunk_count; ++i) {
        if (hit_run_limit()) break;
        ChunkResult chunk;
        {
          std::unique_lock<std::mutex> lock(mu);
          cv.wait(lock, [&] { return done.count(i) != 0 || worker_error; });
          if (worker_error) break;
          chunk = std::move(done.at(i));
          done.erase(i);
        }
        commit_and_log(std::move(chunk));
      }
      stop.store(true);
    }
    if (worker_error) std::rethrow_exception(worker_error);
  }

  rep.completed = resume_from + committed_now == chunk_count;
  rep.wall_elapsed_s = seconds_since(t0);
  rep.throughput = rep.processing_elapsed_s > 0.0
                       ? static_cast<double>(rep.verified) / rep.processing_elapsed_s
                       : 0.0;
  return rep;
}

bool equivalent_ignoring_timing(const VerificationReport& a,
                                const VerificationReport& b) {
  auto chunk_eq = [](const ChunkResult& x, const ChunkResult& y) {
    if (x.first != y.first || x.last != y.last || x.verified != y.verified ||
        x.max_t != y.max_t || x.odd_max != y.odd_max)
      return false;
    if (x.max_t && x.max_t_n != y.max_t_n) return false;
    if (x.failures.size() != y.failures.size()) return false;
    for (std::size_t i = 0; i < x.failures.size(); ++i)
      if (x.failures[i].n != y.failures[i].n ||
          x.failures[i].status != y.failures[i].status)
        return false;
    return true;
  };

  if (a.k != b.k || a.start != b.start || a.end != b.end ||
      a.budget != b.budget || a.chunk_size != b.chunk_size)
    return false;
  if (a.verified != b.verified || a.budget_exhausted != b.budget_exhausted ||
      a.cycle_without_target != b.cycle_without_target || a.max_t != b.max_t)
    return false;
  if (a.max_t && a.max_t_n != b.max_t_n) return false;
  if (a.completed != b.completed) return false;
  if (a.chunks.size() != b.chunks.size()) return false;
  for (std::size_t i = 0; i < a.chunks.size(); ++i)
    if (!chunk_eq(a.chunks[i], b.chunks[i])) return false;
  return true;
}

SpotCheckResult spot_check_large(const Natural& n, const Params& params,
                                 std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("spot_check_large: n must be positive");
  const std::uint64_t resolved =
      budget != 0 ? budget : default_step_budget(n);
  const auto summary = stream_trajectory(n, params, resolved);
  SpotCheckResult res;
  res.status = summary.status;
  res.steps_used = summary.steps_used;
  res.peak_bits = summary.peak_bits;
  if (summary.status == TerminationStatus::ReachedTarget) {
    res.t = summary.stopping_time;
    res.odd_count = summary.odd_count;
  }
  return res;
}

}  // namespace collatz3k
