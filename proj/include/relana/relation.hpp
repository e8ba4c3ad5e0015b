#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "relana/bitvec.hpp"

namespace relana {

// Trace of one column along a row sequence (0/1 values, order significant).
using Word = std::vector<std::uint8_t>;

// Ordered list of distinct row indices into a BitRelation.
struct RowSeq {
  std::vector<std::size_t> idx;

  static RowSeq identity(std::size_t n) {
    RowSeq s;
    s.idx.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.idx[i] = i;
    return s;
  }

  std::size_t size() const { return idx.size(); }
  std::size_t operator[](std::size_t i) const { return idx[i]; }
  bool empty() const { return idx.empty(); }
};

// Pattern (N, E) with E a subset of {1..N}. Bit i-1 of `members` set <=> i in E.
// The characteristic word has a 1 at position i exactly when i is in E.
struct PatternSpec {
  int n = 1;
  std::uint64_t members = 0;

  bool contains(int pos_1based) const {
    return (members >> (pos_1based - 1)) & 1u;
  }
  Word char_word() const {
    Word w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = contains(i) ? 1 : 0;
    return w;
  }
  // positions of E as 1-based list (report/display form)
  std::vector<int> members_list() const {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }
  friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

void validate_pattern(const PatternSpec& spec);

// Immutable finite 0/1 relation with dual bit packing: one bitset per column
// over rows (column probes) and one per row over columns (pattern joins).
class BitRelation {
 public:
  static BitRelation build(std::size_t n_rows, std::size_t n_cols,
                           const std::vector<std::uint8_t>& entries,
                           std::vector<std::string> row_labels = {},
                           std::vector<std::string> col_labels = {});

  // entries via generator fn(i, j) -> bool
  static BitRelation make(std::size_t n_rows, std::size_t n_cols,
                          const std::function<bool(std::size_t, std::size_t)>& fn,
                          std::vector<std::string> row_labels = {},
                          std::vector<std::string> col_labels = {});

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }

  bool at(std::size_t r, std::size_t c) const { return col_bits_[c].test(r); }

  // bitset over rows where column c holds
  const BitVec& col_bits(std::size_t c) const { return col_bits_[c]; }
  // bitset over columns holding at row r
  const BitVec& row_bits(std::size_t r) const { return row_bits_[r]; }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  friend bool operator==(const BitRelation& a, const BitRelation& b) {
    return a.n_rows_ == b.n_rows_ && a.n_cols_ == b.n_cols_ &&
           a.col_bits_ == b.col_bits_ && a.row_labels_ == b.row_labels_ &&
           a.col_labels_ == b.col_labels_;
  }

 private:
  BitRelation() = default;

  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<BitVec> col_bits_;
  std::vector<BitVec> row_bits_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Deduplicated column traces over a row set; only realized types, in first
// occurrence order. representative[t] is the least source column of type t.
struct TypeSpace {
  RowSeq base_rows;
  std::vector<Word> types;
  std::vector<std::size_t> multiplicity;
  std::vector<std::size_t> representative;

  std::size_t count() const { return types.size(); }
};

// throws IndexError unless every index is in range and indices are distinct
void check_row_seq(const BitRelation& rel, const RowSeq& rows);

Word trace(const BitRelation& rel, const RowSeq& rows, std::size_t col);

TypeSpace project_types(const BitRelation& rel, const RowSeq& rows);

// relation whose i-th row is rows[i] of rel (labels carried along)
BitRelation select_rows(const BitRelation& rel, const RowSeq& rows);

}  // namespace relana
