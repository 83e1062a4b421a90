#include "collatz3k/table.hpp"

#include <array>

#include "collatz3k/dynamics.hpp"
#include "collatz3k/natural.hpp"
#include "collatz3k/params.hpp"

namespace collatz3k {

namespace {

// Printed depth of each reference column, k = 0..4 (rows) by n = 1..17.
constexpr std::array<std::array<int, kReferenceTableMaxN>, kReferenceTableMaxK + 1>
    kReferenceColumnTerms{{
        {{3, 4, 10, 5, 8, 11, 19, 6, 22, 9, 17, 12, 12, 20, 20, 7, 15}},
        {{5, 6, 3, 7, 12, 4, 7, 8, 10, 13, 13, 5, 21, 8, 8, 9, 24}},
        {{8, 9, 5, 10, 9, 6, 14, 11, 6, 10, 9, 7, 10, 15, 12, 12, 15}},
        {{11, 12, 8, 13, 16, 9, 13, 14, 8, 17, 12, 10, 11, 14, 9, 15, 12}},
        {{16, 17, 11, 18, 17, 12, 14, 19, 8, 18, 19, 13, 20, 15, 16, 20, 15}},
    }};

}  // namespace

int reference_column_terms(unsigned k, unsigned n) {
  if (k > kReferenceTableMaxK || n < 1 || n > kReferenceTableMaxN) return 0;
  return kReferenceColumnTerms[k][n - 1];
}

std::string render_table_text(const std::vector<TableBlock>& blocks) {
  std::string out;
  bool first_block = true;
  for (const auto& block : blocks) {
    if (!first_block) out += '\n';
    first_block = false;

    const std::size_t ncols = block.columns.size();
    std::size_t nrows = 0;
    for (const auto& col : block.columns) nrows = std::max(nrows, col.size());

    std::vector<std::vector<std::string>> grid;
    grid.reserve(nrows + 1);
    std::vector<std::string> header;
    header.push_back("n");
    for (std::size_t j = 1; j <= ncols; ++j) header.push_back(std::to_string(j));
    grid.push_back(std::move(header));
    for (std::size_t r = 0; r < nrows; ++r) {
      std::vector<std::string> row;
      row.emplace_back();
      for (const auto& col : block.columns)
        row.push_back(r < col.size() ? col[r] : "");
      grid.push_back(std::move(row));
    }

    std::vector<std::size_t> widths(ncols + 1, 0);
    for (const auto& row : grid)
      for (std::size_t c = 0; c <= ncols; ++c)
        widths[c] = std::max(widths[c], row[c].size());

    out += block.label;
    out += '\n';
    for (const auto& row : grid) {
      std::string line;
      for (std::size_t c = 0; c <= ncols; ++c) {
        if (c > 0) line += "  ";
        line.append(widths[c] - row[c].size(), ' ');
        line += row[c];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
  }
  return out;
}

TableBlock build_table_block(unsigned k, unsigned n_max, std::uint64_t budget) {
  const Params params(k);
  TableBlock block;
  block.label = "3n+" + to_decimal(params.addend());
  block.columns.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<std::string> column;
    const int fixed_terms = reference_column_terms(k, n);
    Natural cur(n);
    if (fixed_terms > 0) {
      for (int i = 0; i < fixed_terms; ++i) {
        cur = step(cur, params);
        column.push_back(to_decimal(cur));
      }
    } else {
      const std::uint64_t cap =
          budget != 0 ? budget : default_step_budget(cur);
      for (std::uint64_t i = 0; i < cap && cur != params.target(); ++i) {
        cur = step(cur, params);
        column.push_back(to_decimal(cur));
      }
    }
    block.columns.push_back(std::move(column));
  }
  return block;
}

}  // namespace collatz3k
