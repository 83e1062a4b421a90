#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace collatz3k {

// The reference term table covers k = 0..4 and n = 1..17. Each printed
// column continues a fixed number of terms past the first arrival at 3^k,
// so the column depths are presentation data, not derivable from the
// dynamics alone.
constexpr unsigned kReferenceTableMaxK = 4;
constexpr unsigned kReferenceTableMaxN = 17;

// Printed depth of column n in block k; 0 outside the reference grid.
int reference_column_terms(unsigned k, unsigned n);

// One rendered block: a "3n+c" label and per-start-value term columns
// (already stringified, possibly ragged).
struct TableBlock {
  std::string label;
  std::vector<std::vector<std::string>> columns;
};

// Fixed-layout text rendering: header row "n 1 2 ...", right-justified
// cells, two-space gutters, trailing blanks stripped, one blank line
// between blocks.
std::string render_table_text(const std::vector<TableBlock>& blocks);

// Terms of n = 1..n_max under parameter k. Columns inside the reference
// grid reproduce the printed depths; outside it they run to the first
// arrival at 3^k (and are truncated at the budget otherwise).
TableBlock build_table_block(unsigned k, unsigned n_max, std::uint64_t budget);

}  // namespace collatz3k
