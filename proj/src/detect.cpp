#include "relana/detect.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "relana/errors.hpp"

namespace relana {

namespace {

// greedy left-to-right subsequence match; the matched positions are the
// lexicographically least realizing tuple for this column
bool greedy_match(const BitRelation& rel, const RowSeq& rows, std::size_t col,
                  const Word& pat, std::vector<std::size_t>* positions) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < rows.size() && j < pat.size(); ++i) {
    if (rel.at(rows[i], col) == (pat[j] != 0)) {
      if (positions) positions->push_back(i);
      ++j;
    }
  }
  return j == pat.size();
}

// columns whose trace on the given relation rows equals `word`
std::optional<std::size_t> exact_trace_column(
    const BitRelation& rel, const std::vector<std::size_t>& rel_rows,
    const Word& word) {
  BitVec cand(rel.n_cols(), true);
  for (std::size_t i = 0; i < rel_rows.size(); ++i) {
    if (word[i])
      cand &= rel.row_bits(rel_rows[i]);
    else
      cand.and_not(rel.row_bits(rel_rows[i]));
    if (cand.none()) return std::nullopt;
  }
  std::size_t c = cand.find_first();
  if (c == BitVec::npos) return std::nullopt;
  return c;
}

}  // namespace

Word SwapWitness::unrealized_word() const {
  Word w(eta0.size() + 2);
  std::size_t src = 0;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (p == static_cast<std::size_t>(i0))
      w[p - 1] = 0;
    else if (p == static_cast<std::size_t>(i0) + 1)
      w[p - 1] = 1;
    else
      w[p - 1] = eta0[src++];
  }
  return w;
}

Word SwapWitness::realized_word() const {
  Word w = unrealized_word();
  w[static_cast<std::size_t>(i0) - 1] = 1;
  w[static_cast<std::size_t>(i0)] = 0;
  return w;
}

std::optional<std::size_t> pattern_realized(
    const BitRelation& rel, const RowSeq& rows,
    const std::vector<std::size_t>& positions, const PatternSpec& spec) {
  validate_pattern(spec);
  check_row_seq(rel, rows);
  if (positions.size() != static_cast<std::size_t>(spec.n))
    throw ValueError("tuple arity does not match pattern N");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= rows.size()) throw IndexError("tuple position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw ValueError("tuple positions must be strictly increasing");
  }
  std::vector<std::size_t> rel_rows(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i)
    rel_rows[i] = rows[positions[i]];
  return exact_trace_column(rel, rel_rows, spec.char_word());
}

AvoidanceResult pattern_avoided(const BitRelation& rel, const RowSeq& rows,
                                const PatternSpec& spec) {
  validate_pattern(spec);
  check_row_seq(rel, rows);
  AvoidanceResult res;
  if (rows.size() < static_cast<std::size_t>(spec.n)) return res;  // vacuous

  const Word pat = spec.char_word();
  const std::size_t n_cols = rel.n_cols();
  std::vector<std::uint8_t> matched(n_cols, 0);
  std::vector<std::vector<std::size_t>> tuples(n_cols);

#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < n_cols; ++c) {
    std::vector<std::size_t> pos;
    if (greedy_match(rel, rows, c, pat, &pos)) {
      matched[c] = 1;
      tuples[c] = std::move(pos);
    }
  }

  std::size_t best = BitVec::npos;
  for (std::size_t c = 0; c < n_cols; ++c) {
    if (!matched[c]) continue;
    if (best == BitVec::npos || tuples[c] < tuples[best]) best = c;
  }
  if (best == BitVec::npos) return res;
  res.avoided = false;
  res.counterexample = AvoidanceCounterexample{tuples[best], best};
  return res;
}

std::optional<PatternSpec> find_avoided_pattern(const BitRelation& rel,
                                                const RowSeq& rows, int max_n) {
  if (max_n < 1) throw ValueError("max_n must be >= 1");
  check_row_seq(rel, rows);
  for (int n = 1; n <= max_n; ++n) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < top; ++mask) {
      PatternSpec spec{n, mask};
      if (pattern_avoided(rel, rows, spec).avoided) return spec;
    }
  }
  return std::nullopt;
}

AlternationResult alternation_sum(const BitRelation& rel, const RowSeq& rows) {
  check_row_seq(rel, rows);
  if (rows.empty()) throw ValueError("alternation_sum needs at least one row");
  AlternationResult res;
  res.per_column.assign(rel.n_cols(), 0);

#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < rel.n_cols(); ++c) {
    std::size_t s = 0;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      s += rel.at(rows[i], c) != rel.at(rows[i + 1], c);
    res.per_column[c] = s;
  }
  for (auto s : res.per_column) res.max_sum = std::max(res.max_sum, s);
  return res;
}

// ---------------------------------------------------------------------------
// Ladder search. Depth-first over increasing row positions. At depth t the
// sets S[j] hold the columns still usable as staircase j+1 (1 on positions
// < j+1, 0 from j+1 on) and `all_ones` the columns that are 1 on every chosen
// row. The search is serial so node counts and witnesses never depend on the
// worker count.
// ---------------------------------------------------------------------------

namespace {

struct LadderSearch {
  const BitRelation& rel;
  const RowSeq& rows;
  std::size_t max_k;
  std::uint64_t budget;

  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::size_t best = 0;
  std::vector<std::size_t> best_rows;
  std::vector<std::size_t> best_cols;
  std::vector<std::size_t> stack;

  bool done() const { return out_of_budget || best >= max_k; }

  void dfs(const std::vector<BitVec>& staircases, const BitVec& all_ones,
           std::size_t next_pos) {
    const std::size_t depth = stack.size();
    if (depth >= max_k) return;
    for (std::size_t p = next_pos; p < rows.size(); ++p) {
      if (done()) return;
      if (nodes >= budget) {
        out_of_budget = true;
        return;
      }
      ++nodes;

      const BitVec& row = rel.row_bits(rows[p]);
      std::vector<BitVec> next(depth + 1, BitVec{});
      bool ok = true;
      for (std::size_t j = 0; j < depth; ++j) {
        next[j] = staircases[j];
        next[j].and_not(row);
        if (next[j].none()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        next[depth] = all_ones;
        next[depth].and_not(row);
        ok = next[depth].any();
      }
      if (!ok) continue;

      BitVec next_ones = all_ones;
      next_ones &= row;
      stack.push_back(p);
      if (stack.size() > best) {
        best = stack.size();
        best_rows = stack;
        best_cols.resize(best);
        for (std::size_t j = 0; j < best; ++j)
          best_cols[j] = next[j].find_first();
      }
      dfs(next, next_ones, p + 1);
      stack.pop_back();
      if (done()) return;
    }
  }
};

}  // namespace

LadderResult ladder_index_over(const BitRelation& rel, const RowSeq& rows,
                               std::size_t max_k, std::uint64_t budget) {
  check_row_seq(rel, rows);
  LadderResult res;
  res.stats.budget = budget;
  if (max_k == 0) return res;

  LadderSearch search{rel, rows, max_k, budget};
  search.dfs({}, BitVec(rel.n_cols(), true), 0);

  res.k = search.best;
  res.stats.nodes = search.nodes;
  res.stats.complete = !search.out_of_budget || search.best >= max_k;
  if (search.best > 0)
    res.witness = LadderWitness{search.best_rows, search.best_cols};
  return res;
}

LadderResult ladder_index(const BitRelation& rel, std::size_t max_k,
                          std::uint64_t budget) {
  return ladder_index_over(rel, RowSeq::identity(rel.n_rows()), max_k, budget);
}

// ---------------------------------------------------------------------------
// VC dimension. Level-synchronous: level d holds every shattered set of size
// d in lexicographic order; candidates for d+1 extend a shattered set past
// its maximum (sound and complete since subsets of shattered sets are
// shattered). Candidate evaluation is data-parallel; merges are by index.
// ---------------------------------------------------------------------------

namespace {

bool set_shattered(const BitRelation& rel, const std::vector<std::size_t>& set) {
  const std::size_t d = set.size();
  const std::size_t want = std::size_t{1} << d;
  if (rel.n_cols() < want) return false;
  std::vector<char> seen(want, 0);
  std::size_t found = 0;
  for (std::size_t c = 0; c < rel.n_cols(); ++c) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (rel.at(set[i], c)) mask |= std::size_t{1} << i;
    if (!seen[mask]) {
      seen[mask] = 1;
      if (++found == want) return true;
    }
  }
  return found == want;
}

}  // namespace

VCResult vc_dimension(const BitRelation& rel, std::size_t max_d,
                      std::uint64_t budget) {
  VCResult res;
  res.stats.budget = budget;
  if (rel.n_cols() == 0) return res;  // nothing shattered, not even the empty set

  res.witness = ShatterWitness{{}, {0}};
  std::vector<std::vector<std::size_t>> level{{}};

  for (std::size_t d = 1; d <= max_d && !level.empty(); ++d) {
    if (rel.n_cols() < (std::size_t{1} << d)) break;

    // candidate index space: prefix sums over extensions of each level set
    std::vector<std::size_t> offset(level.size() + 1, 0);
    for (std::size_t s = 0; s < level.size(); ++s) {
      const std::size_t lo = level[s].empty() ? 0 : level[s].back() + 1;
      offset[s + 1] = offset[s] + (rel.n_rows() - std::min(rel.n_rows(), lo));
    }
    const std::size_t total = offset.back();
    std::size_t evaluate = total;
    if (res.stats.nodes + total > budget) {
      evaluate = budget - std::min<std::uint64_t>(budget, res.stats.nodes);
      res.stats.complete = false;
    }

    std::vector<std::uint8_t> hit(evaluate, 0);
#pragma omp parallel for schedule(static)
    for (std::size_t idx = 0; idx < evaluate; ++idx) {
      const std::size_t s =
          static_cast<std::size_t>(
              std::upper_bound(offset.begin(), offset.end(), idx) -
              offset.begin()) -
          1;
      const std::size_t lo = level[s].empty() ? 0 : level[s].back() + 1;
      std::vector<std::size_t> cand = level[s];
      cand.push_back(lo + (idx - offset[s]));
      hit[idx] = set_shattered(rel, cand) ? 1 : 0;
    }
    res.stats.nodes += evaluate;

    std::vector<std::vector<std::size_t>> next;
    for (std::size_t idx = 0; idx < evaluate; ++idx) {
      if (!hit[idx]) continue;
      const std::size_t s =
          static_cast<std::size_t>(
              std::upper_bound(offset.begin(), offset.end(), idx) -
              offset.begin()) -
          1;
      const std::size_t lo = level[s].empty() ? 0 : level[s].back() + 1;
      std::vector<std::size_t> cand = level[s];
      cand.push_back(lo + (idx - offset[s]));
      next.push_back(std::move(cand));
    }

    if (!next.empty()) {
      res.d = d;
      const auto& rows = next.front();
      ShatterWitness w;
      w.rows = rows;
      w.realizers.resize(std::size_t{1} << d);
      for (std::size_t mask = 0; mask < w.realizers.size(); ++mask) {
        Word want(d);
        for (std::size_t i = 0; i < d; ++i) want[i] = (mask >> i) & 1u;
        auto c = exact_trace_column(rel, rows, want);
        w.realizers[mask] = *c;
      }
      res.witness = std::move(w);
    }
    if (!res.stats.complete) break;
    level = std::move(next);
  }
  return res;
}

// ---------------------------------------------------------------------------
// SOP-guarantee
// ---------------------------------------------------------------------------

namespace {

// enumerate ladder row tuples of exactly `depth` positions in lexicographic
// order, invoking visit(tuple) until it returns true
struct LadderTupleEnum {
  const BitRelation& rel;
  const RowSeq& rows;
  std::size_t depth;
  std::vector<std::size_t> stack;
  bool found = false;
  std::vector<std::size_t> result;

  template <typename Visit>
  void dfs(const std::vector<BitVec>& staircases, const BitVec& all_ones,
           std::size_t next_pos, Visit&& visit) {
    if (found) return;
    if (stack.size() == depth) {
      if (visit(stack)) {
        found = true;
        result = stack;
      }
      return;
    }
    for (std::size_t p = next_pos; p < rows.size() && !found; ++p) {
      const BitVec& row = rel.row_bits(rows[p]);
      std::vector<BitVec> next(stack.size() + 1, BitVec{});
      bool ok = true;
      for (std::size_t j = 0; j < stack.size(); ++j) {
        next[j] = staircases[j];
        next[j].and_not(row);
        if (next[j].none()) {
          ok = false;
          break;
        }
      }
      if (ok) {
        next[stack.size()] = all_ones;
        next[stack.size()].and_not(row);
        ok = next[stack.size()].any();
      }
      if (!ok) continue;
      BitVec next_ones = all_ones;
      next_ones &= row;
      stack.push_back(p);
      dfs(next, next_ones, p + 1, visit);
      stack.pop_back();
    }
  }
};

}  // namespace

std::optional<SOPGuaranteeWitness> sop_guarantee(const BitRelation& rel,
                                                 const RowSeq& rows, int max_n,
                                                 std::size_t ladder_depth) {
  if (ladder_depth < 2) throw ValueError("ladder_depth must be >= 2");
  if (max_n < 1) throw ValueError("max_n must be >= 1");
  check_row_seq(rel, rows);
  if (rows.size() < ladder_depth) return std::nullopt;

  // only non-vacuous patterns certify anything on a tuple of this length
  const int eff_max_n = std::min<int>(max_n, static_cast<int>(ladder_depth));

  std::optional<PatternSpec> pattern;
  LadderTupleEnum e{rel, rows, ladder_depth};
  e.dfs({}, BitVec(rel.n_cols(), true), 0,
        [&](const std::vector<std::size_t>& tuple) {
          RowSeq sub;
          sub.idx.reserve(tuple.size());
          for (auto p : tuple) sub.idx.push_back(rows[p]);
          pattern = find_avoided_pattern(rel, sub, eff_max_n);
          return pattern.has_value();
        });
  if (!e.found) return std::nullopt;

  SOPGuaranteeWitness w;
  w.pattern = *pattern;
  for (auto p : e.result) w.rows.idx.push_back(rows[p]);
  for (std::size_t n = 1; n <= ladder_depth; ++n) {
    LadderWitness lw;
    std::vector<std::size_t> prefix(w.rows.idx.begin(),
                                    w.rows.idx.begin() + n);
    for (std::size_t j = 1; j <= n; ++j) {
      lw.row_pos.push_back(j - 1);
      Word want(n);
      for (std::size_t i = 0; i < n; ++i) want[i] = i < j - 1 ? 1 : 0;
      lw.cols.push_back(*exact_trace_column(rel, prefix, want));
    }
    w.ladders.push_back(std::move(lw));
  }
  return w;
}

std::optional<std::size_t> first_column_containing(const BitRelation& rel,
                                                   const RowSeq& rows,
                                                   const Word& word) {
  for (std::size_t c = 0; c < rel.n_cols(); ++c)
    if (greedy_match(rel, rows, c, word, nullptr)) return c;
  return std::nullopt;
}

SwapWitness extract_sop_formula_witness(const BitRelation& rel,
                                        const RowSeq& rows,
                                        const PatternSpec& spec) {
  validate_pattern(spec);
  check_row_seq(rel, rows);

  const Word eta = spec.char_word();
  if (first_column_containing(rel, rows, eta))
    throw PatternNotAvoidedError("pattern (N,E) is realized on the given rows");

  const std::size_t ones = static_cast<std::size_t>(std::popcount(spec.members));
  Word staircase(eta.size());
  for (std::size_t i = 0; i < staircase.size(); ++i)
    staircase[i] = i < ones ? 1 : 0;
  if (!first_column_containing(rel, rows, staircase))
    throw NoLadderError("no column realizes the staircase pattern");

  Word v = eta;
  while (v != staircase) {
    std::size_t i = 0;
    while (!(v[i] == 0 && v[i + 1] == 1)) ++i;
    Word next = v;
    next[i] = 1;
    next[i + 1] = 0;
    if (auto col = first_column_containing(rel, rows, next)) {
      SwapWitness w;
      w.i0 = static_cast<int>(i) + 1;
      for (std::size_t p = 0; p < v.size(); ++p)
        if (p != i && p != i + 1) w.eta0.push_back(v[p]);
      w.consistent_col = *col;
      return w;
    }
    v = std::move(next);
  }
  throw Error("swap walk reached a realized staircase without a flip");
}

PatternType pattern_type(const BitRelation& rel, const RowSeq& rows,
                         const std::vector<std::size_t>& positions) {
  check_row_seq(rel, rows);
  if (positions.empty() || positions.size() > 63)
    throw ValueError("tuple arity must be in 1..63");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] >= rows.size()) throw IndexError("tuple position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      throw ValueError("tuple positions must be strictly increasing");
  }
  PatternType t;
  t.n = static_cast<int>(positions.size());
  std::vector<std::uint64_t> masks(rel.n_cols());
  for (std::size_t c = 0; c < rel.n_cols(); ++c) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < positions.size(); ++j)
      if (rel.at(rows[positions[j]], c)) m |= std::uint64_t{1} << j;
    masks[c] = m;
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  t.realized = std::move(masks);
  return t;
}

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

}  // namespace

IndiscernibilityResult is_indiscernible(const BitRelation& rel,
                                        const RowSeq& rows, int n) {
  check_row_seq(rel, rows);
  if (n < 1) throw ValueError("N must be >= 1");
  if (rows.size() < static_cast<std::size_t>(n))
    throw ValueError("need |rows| >= N");

  IndiscernibilityResult res;
  auto comb = first_combination(static_cast<std::size_t>(n));
  const auto base_tuple = comb;
  const PatternType base = pattern_type(rel, rows, comb);
  while (next_combination(comb, rows.size())) {
    if (!(pattern_type(rel, rows, comb) == base)) {
      res.indiscernible = false;
      res.counterexample = {base_tuple, comb};
      return res;
    }
  }
  return res;
}

namespace {

// homogeneity test against a precomputed per-N-tuple type id table would be
// overkill in general; for N = 2 (the common case) pair ids make the subset
// scan cheap
struct PairTypeTable {
  std::size_t m = 0;
  std::vector<std::uint32_t> id;  // (p,q) p<q -> realized-mask set (16 values)

  static PairTypeTable build(const BitRelation& rel, const RowSeq& rows) {
    PairTypeTable t;
    t.m = rows.size();
    t.id.assign(t.m * t.m, 0);
    for (std::size_t p = 0; p < t.m; ++p)
      for (std::size_t q = p + 1; q < t.m; ++q) {
        std::uint32_t set = 0;
        for (std::size_t c = 0; c < rel.n_cols(); ++c) {
          std::uint32_t mask = (rel.at(rows[p], c) ? 1u : 0u) |
                               (rel.at(rows[q], c) ? 2u : 0u);
          set |= 1u << mask;
        }
        t.id[p * t.m + q] = set;
      }
    return t;
  }

  bool homogeneous(const std::vector<std::size_t>& subset) const {
    if (subset.size() < 2) return true;
    const std::uint32_t first = id[subset[0] * m + subset[1]];
    for (std::size_t a = 0; a < subset.size(); ++a)
      for (std::size_t b = a + 1; b < subset.size(); ++b)
        if (id[subset[a] * m + subset[b]] != first) return false;
    return true;
  }
};

}  // namespace

RowSeq ramsey_subsequence(const BitRelation& rel, const RowSeq& rows, int n,
                          std::size_t min_len, bool exhaustive) {
  check_row_seq(rel, rows);
  if (n < 1) throw ValueError("N must be >= 1");
  if (min_len < static_cast<std::size_t>(n))
    throw ValueError("min_len must be >= N");
  if (min_len > rows.size())
    throw NotFoundError("min_len exceeds the sequence length");

  std::optional<PairTypeTable> pairs;
  if (n == 2) pairs = PairTypeTable::build(rel, rows);

  auto homogeneous = [&](const std::vector<std::size_t>& subset) {
    if (pairs) return pairs->homogeneous(subset);
    RowSeq sub;
    for (auto p : subset) sub.idx.push_back(rows[p]);
    if (sub.size() < static_cast<std::size_t>(n)) return true;
    return is_indiscernible(rel, sub, n).indiscernible;
  };

  const std::size_t hi = exhaustive ? rows.size() : min_len;
  const std::size_t block = 4096;
  for (std::size_t size = hi; size >= min_len; --size) {
    std::vector<std::size_t> comb = first_combination(size);
    bool more = true;
    while (more) {
      std::vector<std::vector<std::size_t>> batch;
      batch.reserve(block);
      do {
        batch.push_back(comb);
        more = next_combination(comb, rows.size());
      } while (more && batch.size() < block);

      std::vector<std::uint8_t> hit(batch.size(), 0);
#pragma omp parallel for schedule(static)
      for (std::size_t i = 0; i < batch.size(); ++i)
        hit[i] = homogeneous(batch[i]) ? 1 : 0;

      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (!hit[i]) continue;
        RowSeq out;
        for (auto p : batch[i]) out.idx.push_back(rows[p]);
        return out;
      }
    }
    if (size == min_len) break;
  }
  throw NotFoundError("no homogeneous subsequence of the requested length");
}

// ---------------------------------------------------------------------------
// Witness verification
// ---------------------------------------------------------------------------

bool verify_ladder(const BitRelation& rel, const RowSeq& rows,
                   const LadderWitness& w) {
  if (w.cols.size() != w.row_pos.size()) return false;
  for (std::size_t p = 0; p < w.row_pos.size(); ++p) {
    if (w.row_pos[p] >= rows.size()) return false;
    if (p > 0 && w.row_pos[p] <= w.row_pos[p - 1]) return false;
  }
  for (auto c : w.cols)
    if (c >= rel.n_cols()) return false;
  for (std::size_t p = 0; p < w.row_pos.size(); ++p)
    for (std::size_t q = 0; q < w.cols.size(); ++q)
      if (rel.at(rows[w.row_pos[p]], w.cols[q]) != (p < q)) return false;
  return true;
}

bool verify_shatter(const BitRelation& rel, const ShatterWitness& w) {
  const std::size_t d = w.rows.size();
  if (d > 63 || w.realizers.size() != (std::size_t{1} << d)) return false;
  for (std::size_t i = 0; i < d; ++i) {
    if (w.rows[i] >= rel.n_rows()) return false;
    if (i > 0 && w.rows[i] <= w.rows[i - 1]) return false;
  }
  for (std::size_t mask = 0; mask < w.realizers.size(); ++mask) {
    const std::size_t c = w.realizers[mask];
    if (c >= rel.n_cols()) return false;
    for (std::size_t i = 0; i < d; ++i)
      if (rel.at(w.rows[i], c) != (((mask >> i) & 1u) != 0)) return false;
  }
  return true;
}

bool verify_sop_guarantee(const BitRelation& rel, const SOPGuaranteeWitness& w,
                          int max_n, std::size_t ladder_depth) {
  for (auto r : w.rows.idx)
    if (r >= rel.n_rows()) return false;
  if (w.pattern.n < 1 || w.pattern.n > max_n) return false;
  if (static_cast<std::size_t>(w.pattern.n) > w.rows.size()) return false;
  if (!pattern_avoided(rel, w.rows, w.pattern).avoided) return false;
  if (w.ladders.size() != ladder_depth) return false;
  for (std::size_t n = 1; n <= ladder_depth; ++n) {
    if (w.ladders[n - 1].length() != n) return false;
    if (!verify_ladder(rel, w.rows, w.ladders[n - 1])) return false;
  }
  return true;
}

bool verify_swap(const BitRelation& rel, const RowSeq& rows,
                 const SwapWitness& w) {
  if (w.i0 < 1 || w.consistent_col >= rel.n_cols()) return false;
  const Word bad = w.unrealized_word();
  if (static_cast<std::size_t>(w.i0) + 1 > bad.size()) return false;
  for (std::size_t c = 0; c < rel.n_cols(); ++c)
    if (greedy_match(rel, rows, c, bad, nullptr)) return false;
  return greedy_match(rel, rows, w.consistent_col, w.realized_word(), nullptr);
}

}  // namespace relana
