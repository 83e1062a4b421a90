#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "collatz3k/analysis.hpp"
#include "collatz3k/dynamics.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/table.hpp"
#include "collatz3k/verifier.hpp"

namespace collatz3k {

enum class OutputFormat { Table, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view text);

// RFC 4180 quoting. The values this project emits never need quotes, but
// the writer stays general.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

struct Window {
  Natural lo;
  Natural hi;
};

// "A:B" with A <= B; either bound may use the power-of-two expression
// grammar of parse_natural.
std::optional<Window> parse_window(const std::string& text);

struct FigdataSection {
  unsigned k = 0;
  Window window;
  std::vector<AnalysisRow> rows;
};

// Csv: one "n,t,odd_count,tag" header, then per-section "# k=K window=A:B"
// comment lines before the rows; unresolved values leave t and odd_count
// empty. Json: an object with a "datasets" array. Table: aligned columns.
void write_figdata(std::ostream& out, const std::vector<FigdataSection>& sections,
                   OutputFormat format);

// Csv: "step,term" rows starting at the start value (step 0).
// Table: the generated terms (excluding the start) on one comma-joined
// line. Json: object with status, stopping time and the full term list.
void write_sequence(std::ostream& out, const Trajectory& traj,
                    OutputFormat format);

std::string render_report(const VerificationReport& report,
                          OutputFormat format);

std::string render_spot(const Natural& n, unsigned k,
                        const SpotCheckResult& result, OutputFormat format);

// Multi-block term table in the requested format. Csv emits
// "k,n,step,term" rows; Json mirrors the block structure.
std::string render_term_table(const std::vector<unsigned>& ks, unsigned n_max,
                              OutputFormat format, std::uint64_t budget);

}  // namespace collatz3k
