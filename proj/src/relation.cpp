#include "relana/relation.hpp"

#include <map>
#include <set>
#include <string>

#include "relana/errors.hpp"

namespace relana {

void validate_pattern(const PatternSpec& spec) {
  if (spec.n < 1) throw ValueError("pattern N must be >= 1");
  if (spec.n > 63) throw ValueError("pattern N too large (max 63)");
  if (spec.n < 64 && (spec.members >> spec.n) != 0)
    throw ValueError("pattern E not a subset of {1..N}");
}

namespace {

void check_labels(const std::vector<std::string>& labels, std::size_t n,
                  const char* axis) {
  if (labels.empty()) return;
  if (labels.size() != n)
    throw DimensionError(std::string(axis) + " label count mismatch");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw ValueError(std::string(axis) + " labels not unique");
}

}  // namespace

BitRelation BitRelation::build(std::size_t n_rows, std::size_t n_cols,
                               const std::vector<std::uint8_t>& entries,
                               std::vector<std::string> row_labels,
                               std::vector<std::string> col_labels) {
  if (entries.size() != n_rows * n_cols)
    throw DimensionError("entry count " + std::to_string(entries.size()) +
                         " does not match " + std::to_string(n_rows) + "x" +
                         std::to_string(n_cols));
  for (auto e : entries)
    if (e > 1) throw ValueError("non-binary entry");
  check_labels(row_labels, n_rows, "row");
  check_labels(col_labels, n_cols, "col");

  BitRelation rel;
  rel.n_rows_ = n_rows;
  rel.n_cols_ = n_cols;
  rel.col_bits_.assign(n_cols, BitVec(n_rows));
  rel.row_bits_.assign(n_rows, BitVec(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i)
    for (std::size_t j = 0; j < n_cols; ++j)
      if (entries[i * n_cols + j]) {
        rel.col_bits_[j].set(i);
        rel.row_bits_[i].set(j);
      }
  rel.row_labels_ = std::move(row_labels);
  rel.col_labels_ = std::move(col_labels);
  return rel;
}

BitRelation BitRelation::make(
    std::size_t n_rows, std::size_t n_cols,
    const std::function<bool(std::size_t, std::size_t)>& fn,
    std::vector<std::string> row_labels, std::vector<std::string> col_labels) {
  std::vector<std::uint8_t> entries(n_rows * n_cols);
  for (std::size_t i = 0; i < n_rows; ++i)
    for (std::size_t j = 0; j < n_cols; ++j)
      entries[i * n_cols + j] = fn(i, j) ? 1 : 0;
  return build(n_rows, n_cols, entries, std::move(row_labels),
               std::move(col_labels));
}

void check_row_seq(const BitRelation& rel, const RowSeq& rows) {
  std::set<std::size_t> seen;
  for (auto r : rows.idx) {
    if (r >= rel.n_rows()) throw IndexError("row index out of range");
    if (!seen.insert(r).second) throw IndexError("repeated row index");
  }
}

Word trace(const BitRelation& rel, const RowSeq& rows, std::size_t col) {
  check_row_seq(rel, rows);
  if (col >= rel.n_cols()) throw IndexError("column index out of range");
  Word w(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    w[i] = rel.at(rows[i], col) ? 1 : 0;
  return w;
}

BitRelation select_rows(const BitRelation& rel, const RowSeq& rows) {
  check_row_seq(rel, rows);
  std::vector<std::uint8_t> entries(rows.size() * rel.n_cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rel.n_cols(); ++j)
      entries[i * rel.n_cols() + j] = rel.at(rows[i], j) ? 1 : 0;
  std::vector<std::string> row_labels;
  if (!rel.row_labels().empty())
    for (auto r : rows.idx) row_labels.push_back(rel.row_labels()[r]);
  return BitRelation::build(rows.size(), rel.n_cols(), entries, row_labels,
                            rel.col_labels());
}

TypeSpace project_types(const BitRelation& rel, const RowSeq& rows) {
  check_row_seq(rel, rows);
  TypeSpace ts;
  ts.base_rows = rows;
  std::map<Word, std::size_t> index_of;
  for (std::size_t c = 0; c < rel.n_cols(); ++c) {
    Word w(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      w[i] = rel.at(rows[i], c) ? 1 : 0;
    auto [it, inserted] = index_of.try_emplace(std::move(w), ts.types.size());
    if (inserted) {
      ts.types.push_back(it->first);
      ts.multiplicity.push_back(1);
      ts.representative.push_back(c);
    } else {
      ++ts.multiplicity[it->second];
    }
  }
  return ts;
}

}  // namespace relana
