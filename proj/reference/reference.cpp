#include "relana/reference.hpp"

#include <algorithm>
#include <set>

namespace relana::ref {

namespace {

bool next_combination(std::vector<std::size_t>& comb, std::size_t m) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] != i + m - k) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  return comb;
}

bool tuple_matches(const BitRelation& rel, const RowSeq& rows,
                   const std::vector<std::size_t>& tuple, std::size_t col,
                   const PatternSpec& spec) {
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    const bool want = spec.contains(static_cast<int>(j) + 1);
    if (rel.at(rows[tuple[j]], col) != want) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<std::vector<std::size_t>, std::size_t>>
pattern_realized_enum(const BitRelation& rel, const RowSeq& rows,
                      const PatternSpec& spec) {
  const std::size_t n = static_cast<std::size_t>(spec.n);
  if (rows.size() < n) return std::nullopt;
  std::vector<std::size_t> tuple = first_combination(n);
  do {
    for (std::size_t c = 0; c < rel.n_cols(); ++c)
      if (tuple_matches(rel, rows, tuple, c, spec)) return {{tuple, c}};
  } while (next_combination(tuple, rows.size()));
  return std::nullopt;
}

bool pattern_avoided_enum(const BitRelation& rel, const RowSeq& rows,
                          const PatternSpec& spec) {
  return !pattern_realized_enum(rel, rows, spec).has_value();
}

std::optional<PatternSpec> find_avoided_pattern_enum(const BitRelation& rel,
                                                     const RowSeq& rows,
                                                     int max_n) {
  for (int n = 1; n <= max_n; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (pattern_avoided_enum(rel, rows, PatternSpec{n, mask}))
        return PatternSpec{n, mask};
  return std::nullopt;
}

std::size_t alternation_max_enum(const BitRelation& rel, const RowSeq& rows) {
  std::size_t best = 0;
  for (std::size_t c = 0; c < rel.n_cols(); ++c) {
    std::size_t s = 0;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      s += rel.at(rows[i], c) != rel.at(rows[i + 1], c);
    best = std::max(best, s);
  }
  return best;
}

bool has_ladder_enum(const BitRelation& rel, const RowSeq& rows,
                     std::size_t k) {
  if (k == 0) return true;
  if (rows.size() < k) return false;
  std::vector<std::size_t> tuple = first_combination(k);
  do {
    bool all = true;
    for (std::size_t q = 0; q < k && all; ++q) {
      bool found = false;
      for (std::size_t c = 0; c < rel.n_cols() && !found; ++c) {
        bool match = true;
        for (std::size_t p = 0; p < k; ++p)
          if (rel.at(rows[tuple[p]], c) != (p < q)) {
            match = false;
            break;
          }
        found = match;
      }
      all = found;
    }
    if (all) return true;
  } while (next_combination(tuple, rows.size()));
  return false;
}

std::size_t ladder_index_enum(const BitRelation& rel, std::size_t max_k) {
  const RowSeq rows = RowSeq::identity(rel.n_rows());
  std::size_t best = 0;
  for (std::size_t k = 1; k <= max_k && k <= rel.n_rows(); ++k)
    if (has_ladder_enum(rel, rows, k)) best = k;
  return best;
}

bool shattered_enum(const BitRelation& rel,
                    const std::vector<std::size_t>& set) {
  const std::size_t d = set.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    bool found = false;
    for (std::size_t c = 0; c < rel.n_cols() && !found; ++c) {
      bool match = true;
      for (std::size_t i = 0; i < d; ++i)
        if (rel.at(set[i], c) != (((mask >> i) & 1u) != 0)) {
          match = false;
          break;
        }
      found = match;
    }
    if (!found) return false;
  }
  return true;
}

std::size_t vc_dimension_enum(const BitRelation& rel, std::size_t max_d) {
  if (rel.n_cols() == 0) return 0;
  std::size_t best = 0;
  for (std::size_t d = 1; d <= max_d && d <= rel.n_rows(); ++d) {
    std::vector<std::size_t> set = first_combination(d);
    bool any = false;
    do {
      if (shattered_enum(rel, set)) {
        any = true;
        break;
      }
    } while (next_combination(set, rel.n_rows()));
    if (any) best = d;
  }
  return best;
}

namespace {

std::set<std::vector<std::uint8_t>> tuple_type(
    const BitRelation& rel, const RowSeq& rows,
    const std::vector<std::size_t>& tuple) {
  std::set<std::vector<std::uint8_t>> type;
  for (std::size_t c = 0; c < rel.n_cols(); ++c) {
    std::vector<std::uint8_t> w(tuple.size());
    for (std::size_t j = 0; j < tuple.size(); ++j)
      w[j] = rel.at(rows[tuple[j]], c) ? 1 : 0;
    type.insert(std::move(w));
  }
  return type;
}

}  // namespace

bool is_indiscernible_enum(const BitRelation& rel, const RowSeq& rows, int n) {
  const std::size_t k = static_cast<std::size_t>(n);
  if (rows.size() < k) return true;
  std::vector<std::size_t> tuple = first_combination(k);
  const auto base = tuple_type(rel, rows, tuple);
  while (next_combination(tuple, rows.size()))
    if (tuple_type(rel, rows, tuple) != base) return false;
  return true;
}

std::size_t max_homogeneous_len_enum(const BitRelation& rel,
                                     const RowSeq& rows, int n,
                                     std::size_t min_len) {
  const std::size_t m = rows.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size < min_len || size <= best) continue;
    RowSeq sub;
    for (std::size_t p = 0; p < m; ++p)
      if ((mask >> p) & 1u) sub.idx.push_back(rows[p]);
    if (is_indiscernible_enum(rel, sub, n)) best = size;
  }
  return best;
}

bool exists_ladder2_enum(const BitRelation& rel, const RowSeq& row_seq,
                         const RowSeq& col_seq) {
  for (std::size_t p1 = 0; p1 < row_seq.size(); ++p1)
    for (std::size_t p2 = p1 + 1; p2 < row_seq.size(); ++p2)
      for (auto c1 : col_seq.idx)
        for (auto c2 : col_seq.idx) {
          if (rel.at(row_seq[p1], c1) || rel.at(row_seq[p2], c1)) continue;
          if (rel.at(row_seq[p1], c2) && !rel.at(row_seq[p2], c2)) return true;
        }
  return false;
}

}  // namespace relana::ref
