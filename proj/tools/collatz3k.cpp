#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "collatz3k/analysis.hpp"
#include "collatz3k/checkpoint.hpp"
#include "collatz3k/dynamics.hpp"
#include "collatz3k/errors.hpp"
#include "collatz3k/formulas.hpp"
#include "collatz3k/io.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/verifier.hpp"

namespace {

using namespace collatz3k;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

// Writes to stdout unless --output was given.
struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file.open(path);
    if (!file) {
      std::cerr << "cannot open output file '" << path << "'\n";
      return false;
    }
    out = &file;
    return true;
  }

  bool finish() {
    out->flush();
    return !out->fail();
  }
};

OutputFormat format_of(const std::string& text) {
  return *parse_output_format(text);  // option values are pre-validated
}

int run_seq(const std::string& n_text, unsigned k, std::uint64_t budget,
            const std::string& format, const std::string& output) {
  const Natural n = parse_natural(n_text);
  if (n < 1) {
    std::cerr << "seq: n must be >= 1\n";
    return kExitUsage;
  }
  const Params params(k);
  const std::uint64_t resolved = budget != 0 ? budget : default_step_budget(n);
  const Trajectory traj = trajectory(n, params, resolved);

  Sink sink;
  if (!sink.open(output)) return kExitIo;
  write_sequence(*sink.out, traj, format_of(format));
  if (!sink.finish()) {
    std::cerr << "seq: write failed\n";
    return kExitIo;
  }
  switch (traj.status) {
    case TerminationStatus::ReachedTarget:
      if (traj.stopping_time == 0)
        std::cerr << "n equals 3^k; total stopping time is 0\n";
      return kExitOk;
    case TerminationStatus::BudgetExhausted:
      std::cerr << "seq: budget of " << resolved
                << " steps exhausted before reaching 3^k\n";
      return kExitBudget;
    case TerminationStatus::CycleWithoutTarget:
      std::cerr << "seq: orbit entered a cycle that does not contain 3^k\n";
      return kExitVerificationFailed;
  }
  return kExitOk;
}

int run_table(std::vector<unsigned> ks, unsigned n_max, std::uint64_t budget,
              const std::string& format, const std::string& output) {
  if (ks.empty()) ks = {0, 1, 2, 3, 4};
  Sink sink;
  if (!sink.open(output)) return kExitIo;
  *sink.out << render_term_table(ks, n_max, format_of(format), budget);
  if (!sink.finish()) {
    std::cerr << "table: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_figdata(std::vector<unsigned> ks, std::vector<std::string> window_texts,
                std::uint64_t budget, const std::string& format,
                const std::string& output) {
  if (ks.empty()) ks = {0, 1, 2};
  if (window_texts.empty()) window_texts = {"1:100", "500:600", "900:1000"};

  std::vector<Window> windows;
  for (const auto& text : window_texts) {
    const auto window = parse_window(text);
    if (!window) {
      std::cerr << "figdata: bad window '" << text
                << "' (expected LO:HI with 1 <= LO <= HI)\n";
      return kExitUsage;
    }
    windows.push_back(*window);
  }

  std::vector<FigdataSection> sections;
  for (unsigned k : ks) {
    const Params params(k);
    for (const auto& window : windows) {
      FigdataSection section;
      section.k = k;
      section.window = window;
      section.rows = figure_dataset(window.lo, window.hi, params, budget);
      sections.push_back(std::move(section));
    }
  }

  Sink sink;
  if (!sink.open(output)) return kExitIo;
  write_figdata(*sink.out, sections, format_of(format));
  if (!sink.finish()) {
    std::cerr << "figdata: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_check(unsigned k, const std::string& start_text,
              const std::string& end_text, std::uint64_t budget) {
  const Natural start = parse_natural(start_text);
  const Natural end = parse_natural(end_text);
  if (start < 1 || end < start) {
    std::cerr << "check: need 1 <= start <= end\n";
    return kExitUsage;
  }
  const Params params(k);

  std::uint64_t checked = 0, mismatches = 0, unresolved = 0;
  for (Natural n = start; n <= end; ++n) {
    const std::uint64_t resolved =
        budget != 0 ? budget : default_step_budget(n);
    const Trajectory traj = trajectory(n, params, resolved);
    if (traj.status != TerminationStatus::ReachedTarget) {
      std::cerr << "check: n=" << to_decimal(n) << " unresolved ("
                << to_string(traj.status) << ")\n";
      ++unresolved;
      continue;
    }

    bool bad = false;
    OddEvenProfile profile;
    profile.d.push_back(0);
    for (std::uint64_t l = 1; l <= traj.stopping_time && !bad; ++l) {
      if (is_odd(traj.terms[l - 1])) {
        ++profile.m;
        profile.d.push_back(0);
      } else {
        ++profile.d.back();
      }
      profile.l = l;
      try {
        if (eval_term_formula(n, params, profile) != traj.terms[l]) bad = true;
      } catch (const std::exception&) {
        bad = true;
      }
    }
    if (!bad) {
      try {
        // After the loop the profile covers the full orbit (or is the empty
        // profile when t = 0, for which the formula still gives t = 0).
        if (total_stopping_time_formula(n, params, profile) !=
            traj.stopping_time)
          bad = true;
      } catch (const std::exception&) {
        bad = true;
      }
    }
    if (bad) {
      std::cerr << "check: n=" << to_decimal(n) << " formula mismatch\n";
      ++mismatches;
    }
    ++checked;
  }

  std::cout << "checked " << checked << " values: " << mismatches
            << " mismatches, " << unresolved << " unresolved\n";
  return (mismatches == 0 && unresolved == 0) ? kExitOk
                                              : kExitVerificationFailed;
}

int run_verify(unsigned k, const std::string& start_text,
               const std::string& end_text, std::uint64_t budget,
               std::uint64_t chunk, unsigned jobs,
               const std::string& checkpoint, const std::string& format,
               const std::string& output) {
  SweepConfig cfg;
  cfg.k = k;
  cfg.start = parse_natural(start_text);
  cfg.end = parse_natural(end_text);
  cfg.budget = budget;
  cfg.chunk_size = chunk;
  cfg.parallelism = jobs;
  cfg.checkpoint_path = checkpoint;

  const VerificationReport report = run_sweep(cfg);

  Sink sink;
  if (!sink.open(output)) return kExitIo;
  *sink.out << render_report(report, format_of(format));
  if (!sink.finish()) {
    std::cerr << "verify: write failed\n";
    return kExitIo;
  }

  const std::uint64_t failures =
      report.budget_exhausted + report.cycle_without_target;
  if (failures > 0) {
    const Params params(k);
    std::uint64_t dumped = 0;
    for (const auto& chunk_result : report.chunks) {
      for (const auto& failure : chunk_result.failures) {
        if (dumped == 10) break;
        std::cerr << "failure n=" << to_decimal(failure.n) << " ("
                  << to_string(failure.status) << "): ";
        const Trajectory traj = trajectory(failure.n, params, report.budget);
        const std::size_t shown = std::min<std::size_t>(traj.terms.size(), 1000);
        for (std::size_t i = 0; i < shown; ++i) {
          if (i > 0) std::cerr << ',';
          std::cerr << to_decimal(traj.terms[i]);
        }
        if (shown < traj.terms.size())
          std::cerr << ",... (" << traj.terms.size() - shown << " more)";
        std::cerr << "\n";
        ++dumped;
      }
      if (dumped == 10) break;
    }
    if (failures > dumped)
      std::cerr << failures - dumped << " further failures not shown\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int run_spot(const std::string& n_text, unsigned k, std::uint64_t budget,
             const std::string& format, const std::string& output) {
  const Natural n = parse_natural(n_text);
  if (n < 1) {
    std::cerr << "spot: n must be >= 1\n";
    return kExitUsage;
  }
  const Params params(k);
  const SpotCheckResult result = spot_check_large(n, params, budget);

  Sink sink;
  if (!sink.open(output)) return kExitIo;
  *sink.out << render_spot(n, k, result, format_of(format));
  if (!sink.finish()) {
    std::cerr << "spot: write failed\n";
    return kExitIo;
  }
  if (result.status != TerminationStatus::ReachedTarget) {
    std::cerr << "spot: did not reach 3^k within the budget\n";
    return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbits of the 3n+3^k maps: sequences, closed forms, sweeps"};
  app.require_subcommand(1);
  const auto format_check = CLI::IsMember({"table", "csv", "json"});
  const auto k_range = CLI::Range(0u, 10000u);

  std::string seq_n, seq_format = "table", seq_output;
  unsigned seq_k = 0;
  std::uint64_t seq_budget = 0;
  auto* seq = app.add_subcommand("seq", "Print the orbit of one value");
  seq->add_option("--n", seq_n, "start value (decimal or [M*]2^E[+D|-D])")
      ->required();
  seq->add_option("--k", seq_k, "exponent in the 3n+3^k map")->check(k_range);
  seq->add_option("--budget", seq_budget, "max steps, 0 = auto");
  seq->add_option("--format", seq_format, "table|csv|json")->check(format_check);
  seq->add_option("--output", seq_output, "write to a file instead of stdout");

  std::vector<unsigned> table_ks;
  unsigned table_n_max = 17;
  std::uint64_t table_budget = 0;
  std::string table_format = "table", table_output;
  auto* table = app.add_subcommand("table", "Render term columns for n = 1..n_max");
  table->add_option("--k", table_ks, "k values (default 0 1 2 3 4)")
      ->check(k_range)
      ->delimiter(',');
  table->add_option("--n-max", table_n_max, "largest start value")
      ->check(CLI::Range(1u, 100000u));
  table->add_option("--budget", table_budget, "max steps per column, 0 = auto");
  table->add_option("--format", table_format, "table|csv|json")->check(format_check);
  table->add_option("--output", table_output, "write to a file instead of stdout");

  std::vector<unsigned> fig_ks;
  std::vector<std::string> fig_windows;
  std::uint64_t fig_budget = 0;
  std::string fig_format = "csv", fig_output;
  auto* figdata = app.add_subcommand(
      "figdata", "Stopping time, odd count and cycle tag per start value");
  figdata->add_option("--k", fig_ks, "k values (default 0 1 2)")
      ->check(k_range)
      ->delimiter(',');
  figdata->add_option("--window", fig_windows,
                      "ranges LO:HI (default 1:100 500:600 900:1000)");
  figdata->add_option("--budget", fig_budget, "max steps per value, 0 = auto");
  figdata->add_option("--format", fig_format, "table|csv|json")->check(format_check);
  figdata->add_option("--output", fig_output, "write to a file instead of stdout");

  unsigned check_k = 0;
  std::string check_start, check_end;
  std::uint64_t check_budget = 0;
  auto* check = app.add_subcommand(
      "check", "Compare iterated terms against the closed forms");
  check->add_option("--k", check_k, "exponent in the 3n+3^k map")->check(k_range);
  check->add_option("--start", check_start, "first value")->required();
  check->add_option("--end", check_end, "last value")->required();
  check->add_option("--budget", check_budget, "max steps per value, 0 = auto");

  unsigned verify_k = 0, verify_jobs = 0;
  std::string verify_start, verify_end, verify_checkpoint;
  std::string verify_format = "table", verify_output;
  std::uint64_t verify_budget = 0, verify_chunk = 65536;
  auto* verify = app.add_subcommand(
      "verify", "Sweep a range and verify every orbit reaches 3^k");
  verify->add_option("--k", verify_k, "exponent in the 3n+3^k map")->check(k_range);
  verify->add_option("--start", verify_start, "first value")->required();
  verify->add_option("--end", verify_end, "last value")->required();
  verify->add_option("--budget", verify_budget, "max steps per value, 0 = auto");
  verify->add_option("--chunk", verify_chunk, "values per work chunk")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32));
  verify->add_option("--jobs", verify_jobs, "worker threads, 0 = all cores");
  verify->add_option("--checkpoint", verify_checkpoint,
                     "checkpoint file for interrupt/resume");
  verify->add_option("--format", verify_format, "table|csv|json")->check(format_check);
  verify->add_option("--output", verify_output, "write to a file instead of stdout");

  std::string spot_n, spot_format = "table", spot_output;
  unsigned spot_k = 0;
  std::uint64_t spot_budget = 0;
  auto* spot = app.add_subcommand(
      "spot", "Stream one (typically huge) orbit without storing terms");
  spot->add_option("--n", spot_n, "start value (decimal or [M*]2^E[+D|-D])")
      ->required();
  spot->add_option("--k", spot_k, "exponent in the 3n+3^k map")->check(k_range);
  spot->add_option("--budget", spot_budget, "max steps, 0 = auto");
  spot->add_option("--format", spot_format, "table|csv|json")->check(format_check);
  spot->add_option("--output", spot_output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (seq->parsed())
      return run_seq(seq_n, seq_k, seq_budget, seq_format, seq_output);
    if (table->parsed())
      return run_table(table_ks, table_n_max, table_budget, table_format,
                       table_output);
    if (figdata->parsed())
      return run_figdata(fig_ks, fig_windows, fig_budget, fig_format,
                         fig_output);
    if (check->parsed())
      return run_check(check_k, check_start, check_end, check_budget);
    if (verify->parsed())
      return run_verify(verify_k, verify_start, verify_end, verify_budget,
                        verify_chunk, verify_jobs, verify_checkpoint,
                        verify_format, verify_output);
    if (spot->parsed())
      return run_spot(spot_n, spot_k, spot_budget, spot_format, spot_output);
  } catch (const CheckpointMismatchError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckpointIoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
