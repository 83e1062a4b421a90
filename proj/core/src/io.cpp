#include "collatz3k/io.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "json_detail.hpp"

namespace collatz3k {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string window_text(const Window& w) {
  return to_decimal(w.lo) + ":" + to_decimal(w.hi);
}

json row_to_json(const AnalysisRow& row) {
  return json{{"n", to_decimal(row.n)},
              {"k", row.k},
              {"t", row.t ? json(*row.t) : json(nullptr)},
              {"odd_count", row.odd_count ? json(*row.odd_count) : json(nullptr)},
              {"tag", std::string(to_string(row.tag))}};
}

// Right-justifies every column except a left-justified final one; used for
// the human-readable listings.
std::string align_rows(const std::vector<std::vector<std::string>>& rows) {
  std::size_t ncols = 0;
  for (const auto& row : rows) ncols = std::max(ncols, row.size());
  std::vector<std::size_t> widths(ncols, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      if (c + 1 == ncols) {
        line += row[c];
      } else {
        line.append(widths[c] - row[c].size(), ' ');
        line += row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

json report_to_json(const VerificationReport& report) {
  json chunks = json::array();
  for (const auto& chunk : report.chunks)
    chunks.push_back(detail::chunk_to_json(chunk));
  return json{
      {"k", report.k},
      {"start", to_decimal(report.start)},
      {"end", to_decimal(report.end)},
      {"budget", report.budget},
      {"chunk_size", report.chunk_size},
      {"verified", report.verified},
      {"budget_exhausted", report.budget_exhausted},
      {"cycle_without_target", report.cycle_without_target},
      {"max_t", report.max_t ? json(*report.max_t) : json(nullptr)},
      {"max_t_n", report.max_t ? to_decimal(report.max_t_n) : ""},
      {"completed", report.completed},
      {"chunks", std::move(chunks)},
      {"execution",
       {{"parallelism", report.parallelism},
        {"checkpoint_path", report.checkpoint_path},
        {"wall_elapsed_s", report.wall_elapsed_s},
        {"processing_elapsed_s", report.processing_elapsed_s},
        {"throughput", report.throughput}}}};
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  return std::nullopt;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_quote(fields[i]);
  }
  out << '\n';
}

std::optional<Window> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    Window w;
    w.lo = parse_natural(text.substr(0, colon));
    w.hi = parse_natural(text.substr(colon + 1));
    if (w.lo < 1 || w.hi < w.lo) return std::nullopt;
    return w;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

void write_figdata(std::ostream& out,
                   const std::vector<FigdataSection>& sections,
                   OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: {
      out << "# schema: figdata/1\n";
      out << "n,t,odd_count,tag\n";
      for (const auto& section : sections) {
        out << "# k=" << section.k << " window=" << window_text(section.window)
            << "\n";
        for (const auto& row : section.rows) {
          std::vector<std::string> fields{
              to_decimal(row.n),
              row.t ? std::to_string(*row.t) : "",
              row.odd_count ? std::to_string(*row.odd_count) : "",
              std::string(to_string(row.tag))};
          write_csv_row(out, fields);
        }
      }
      return;
    }
    case OutputFormat::Json: {
      json datasets = json::array();
      for (const auto& section : sections) {
        json rows = json::array();
        for (const auto& row : section.rows) rows.push_back(row_to_json(row));
        datasets.push_back(json{{"k", section.k},
                                {"window",
                                 {{"lo", to_decimal(section.window.lo)},
                                  {"hi", to_decimal(section.window.hi)}}},
                                {"rows", std::move(rows)}});
      }
      out << json{{"schema", "figdata/1"}, {"datasets", std::move(datasets)}}
                 .dump(2)
          << "\n";
      return;
    }
    case OutputFormat::Table: {
      bool first = true;
      for (const auto& section : sections) {
        if (!first) out << "\n";
        first = false;
        out << "k=" << section.k << " window=" << window_text(section.window)
            << "\n";
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"n", "t", "odd_count", "tag"});
        for (const auto& row : section.rows)
          rows.push_back({to_decimal(row.n),
                          row.t ? std::to_string(*row.t) : "-",
                          row.odd_count ? std::to_string(*row.odd_count) : "-",
                          std::string(to_string(row.tag))});
        out << align_rows(rows);
      }
      return;
    }
  }
}

void write_sequence(std::ostream& out, const Trajectory& traj,
                    OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: {
      if (traj.terms.size() <= 1) return;
      for (std::size_t i = 1; i < traj.terms.size(); ++i) {
        if (i > 1) out << ',';
        out << to_decimal(traj.terms[i]);
      }
      out << '\n';
      return;
    }
    case OutputFormat::Csv: {
      out << "step,term\n";
      for (std::size_t i = 0; i < traj.terms.size(); ++i)
        write_csv_row(out, {std::to_string(i), to_decimal(traj.terms[i])});
      return;
    }
    case OutputFormat::Json: {
      json terms = json::array();
      for (const auto& term : traj.terms) terms.push_back(to_decimal(term));
      json j{{"n", to_decimal(traj.start)},
             {"k", traj.k},
             {"status", std::string(to_string(traj.status))},
             {"terms", std::move(terms)}};
      if (traj.status == TerminationStatus::ReachedTarget)
        j["t"] = traj.stopping_time;
      out << j.dump(2) << "\n";
      return;
    }
  }
}

std::string render_report(const VerificationReport& report,
                          OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      return report_to_json(report).dump(2) + "\n";
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "# sweep k=" << report.k << " start=" << to_decimal(report.start)
          << " end=" << to_decimal(report.end) << " budget=" << report.budget
          << " chunk_size=" << report.chunk_size
          << " completed=" << (report.completed ? "true" : "false") << "\n";
      out << "first,last,verified,budget_exhausted,cycle_without_target,max_t,"
             "max_t_n,odd_max\n";
      for (const auto& chunk : report.chunks) {
        std::uint64_t exhausted = 0, cycled = 0;
        for (const auto& f : chunk.failures) {
          if (f.status == TerminationStatus::CycleWithoutTarget)
            ++cycled;
          else
            ++exhausted;
        }
        write_csv_row(out, {to_decimal(chunk.first), to_decimal(chunk.last),
                            std::to_string(chunk.verified),
                            std::to_string(exhausted), std::to_string(cycled),
                            chunk.max_t ? std::to_string(*chunk.max_t) : "",
                            chunk.max_t ? to_decimal(chunk.max_t_n) : "",
                            std::to_string(chunk.odd_max)});
      }
      return out.str();
    }
    case OutputFormat::Table: {
      std::ostringstream out;
      out << "sweep k=" << report.k << " range=[" << to_decimal(report.start)
          << "," << to_decimal(report.end) << "] budget=" << report.budget
          << " chunk_size=" << report.chunk_size << "\n";
      out << "verified " << report.verified << "  budget_exhausted "
          << report.budget_exhausted << "  cycle_without_target "
          << report.cycle_without_target << "\n";
      if (report.max_t)
        out << "max_t " << *report.max_t << " at n="
            << to_decimal(report.max_t_n) << "\n";
      out << "chunks " << report.chunks.size() << "  completed "
          << (report.completed ? "yes" : "no") << "\n";
      out << "parallelism " << report.parallelism << "  wall "
          << report.wall_elapsed_s << "s  throughput " << report.throughput
          << " n/s\n";
      return out.str();
    }
  }
  return {};
}

std::string render_spot(const Natural& n, unsigned k,
                        const SpotCheckResult& result, OutputFormat format) {
  const bool reached = result.status == TerminationStatus::ReachedTarget;
  switch (format) {
    case OutputFormat::Json: {
      json j{{"n", to_decimal(n)},
             {"n_bits", bit_length(n)},
             {"k", k},
             {"status", std::string(to_string(result.status))},
             {"t", result.t ? json(*result.t) : json(nullptr)},
             {"steps_used", result.steps_used},
             {"peak_bits", result.peak_bits}};
      if (reached) j["odd_count"] = result.odd_count;
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "n_bits,k,status,t,steps_used,odd_count,peak_bits\n";
      write_csv_row(out,
                    {std::to_string(bit_length(n)), std::to_string(k),
                     std::string(to_string(result.status)),
                     result.t ? std::to_string(*result.t) : "",
                     std::to_string(result.steps_used),
                     reached ? std::to_string(result.odd_count) : "",
                     std::to_string(result.peak_bits)});
      return out.str();
    }
    case OutputFormat::Table: {
      std::ostringstream out;
      out << "n has " << bit_length(n) << " bits, k=" << k << "\n";
      out << "status " << to_string(result.status) << "\n";
      if (result.t) out << "t " << *result.t << "\n";
      out << "steps_used " << result.steps_used << "\n";
      if (reached) out << "odd_count " << result.odd_count << "\n";
      out << "peak_bits " << result.peak_bits << "\n";
      return out.str();
    }
  }
  return {};
}

std::string render_term_table(const std::vector<unsigned>& ks, unsigned n_max,
                              OutputFormat format, std::uint64_t budget) {
  std::vector<TableBlock> blocks;
  blocks.reserve(ks.size());
  for (unsigned k : ks) blocks.push_back(build_table_block(k, n_max, budget));

  switch (format) {
    case OutputFormat::Table:
      return render_table_text(blocks);
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "k,n,step,term\n";
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t n = 0; n < blocks[b].columns.size(); ++n) {
          const auto& col = blocks[b].columns[n];
          for (std::size_t s = 0; s < col.size(); ++s)
            write_csv_row(out, {std::to_string(ks[b]), std::to_string(n + 1),
                                std::to_string(s + 1), col[s]});
        }
      }
      return out.str();
    }
    case OutputFormat::Json: {
      json jblocks = json::array();
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        json cols = json::array();
        for (const auto& col : blocks[b].columns) {
          json jcol = json::array();
          for (const auto& cell : col) jcol.push_back(cell);
          cols.push_back(std::move(jcol));
        }
        jblocks.push_back(json{{"k", ks[b]},
                               {"label", blocks[b].label},
                               {"columns", std::move(cols)}});
      }
      return json{{"blocks", std::move(jblocks)}}.dump(2) + "\n";
    }
  }
  return {};
}

}  // namespace collatz3k
