#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "relana/relation.hpp"

namespace relana {

// ---------------------------------------------------------------------------
// Witness certificates. Each one re-verifies against the relation by direct
// entry checks; the verify_* functions below are run on every witness the
// test suites produce.
// ---------------------------------------------------------------------------

// Ladder of length k: rel(rows[row_pos[p]], cols[q]) = 1 iff p < q (0-based).
// row_pos are strictly increasing positions within the context row sequence.
// Convention for k = 1: the single column must be 0 at the single row, so an
// all-ones relation has ladder index 0.
struct LadderWitness {
  std::vector<std::size_t> row_pos;
  std::vector<std::size_t> cols;

  std::size_t length() const { return row_pos.size(); }
};

// Shattered row set of size d with realizers[mask] a column where
// rel(rows[i], col) = 1 iff bit i of mask is set, for every mask < 2^d.
struct ShatterWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> realizers;
};

// Certificate that `rows` force SOP at finite scale: `pattern` is avoided on
// `rows` (non-vacuously) and ladders of every length n <= depth exist with
// row positions inside `rows`. ladders[n-1] has length n.
struct SOPGuaranteeWitness {
  RowSeq rows;
  PatternSpec pattern;
  std::vector<LadderWitness> ladders;
};

// One consistency flip along the swap walk: with eta0 fixed outside positions
// {i0, i0+1} (1-based), the word with (0 at i0, 1 at i0+1) is realized by no
// column while the swapped word (1 at i0, 0 at i0+1) is realized by
// consistent_col. "Realized" means contained as a subsequence of the column's
// trace along the analyzed rows.
struct SwapWitness {
  int i0 = 0;  // 1-based position within {1..N-1}
  Word eta0;   // values at positions {1..N} \ {i0, i0+1}, in position order
  std::size_t consistent_col = 0;

  Word unrealized_word() const;  // eta0 extended by (0 at i0, 1 at i0+1)
  Word realized_word() const;    // eta0 extended by (1 at i0, 0 at i0+1)
};

// Realizable pattern set of a fixed increasing tuple: the E-masks (bit j-1 of
// the mask <=> position j of the tuple) realized by at least one column.
struct PatternType {
  int n = 0;
  std::vector<std::uint64_t> realized;  // sorted, distinct

  friend bool operator==(const PatternType&, const PatternType&) = default;
};

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

struct SearchStats {
  std::uint64_t nodes = 0;   // candidates evaluated, deterministic
  std::uint64_t budget = 0;  // cap that was in force
  bool complete = true;      // false: result is a lower bound
};

struct LadderResult {
  std::size_t k = 0;
  std::optional<LadderWitness> witness;
  SearchStats stats;
};

struct VCResult {
  std::size_t d = 0;
  std::optional<ShatterWitness> witness;
  SearchStats stats;
};

struct AlternationResult {
  std::size_t max_sum = 0;
  std::vector<std::size_t> per_column;
};

struct AvoidanceCounterexample {
  std::vector<std::size_t> positions;  // increasing positions within rows
  std::size_t col = 0;
};

struct AvoidanceResult {
  bool avoided = true;
  std::optional<AvoidanceCounterexample> counterexample;
};

struct IndiscernibilityResult {
  bool indiscernible = true;
  // first pair of tuples (positions within rows) with distinct pattern types
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      counterexample;
};

// ---------------------------------------------------------------------------
// Detectors. All are pure; "first"/"smallest" selections are fixed as
// (N ascending, E in binary-counter order, row tuples lexicographic, columns
// by index), so outputs are byte-stable regardless of worker count.
// ---------------------------------------------------------------------------

// least column whose trace on rows[positions] equals the characteristic word
// of spec, or nullopt. positions must be strictly increasing, |positions| = N.
std::optional<std::size_t> pattern_realized(
    const BitRelation& rel, const RowSeq& rows,
    const std::vector<std::size_t>& positions, const PatternSpec& spec);

// true iff no increasing N-tuple and column realize the pattern; equivalently
// no column word contains the characteristic word of E as a subsequence.
// On failure returns the lexicographically least realizing tuple and the
// least column realizing it. |rows| < N is vacuously avoided.
AvoidanceResult pattern_avoided(const BitRelation& rel, const RowSeq& rows,
                                const PatternSpec& spec);

// smallest N <= max_n admitting an avoided E (binary-counter order on E).
// Patterns with N > |rows| are vacuously avoided and can be returned; callers
// that need substantive certificates cap max_n at |rows|.
std::optional<PatternSpec> find_avoided_pattern(const BitRelation& rel,
                                                const RowSeq& rows, int max_n);

// per column: sum of |w[i] - w[i+1]| along rows; plus the maximum. |rows| >= 1.
AlternationResult alternation_sum(const BitRelation& rel, const RowSeq& rows);

// largest k <= max_k with a ladder over the given row sequence. Depth-first
// search over increasing row positions with per-staircase column set pruning;
// nodes count attempted extensions. Exact unless the node budget ran out.
LadderResult ladder_index_over(const BitRelation& rel, const RowSeq& rows,
                               std::size_t max_k, std::uint64_t budget);

// same over all rows in natural order
LadderResult ladder_index(const BitRelation& rel, std::size_t max_k,
                          std::uint64_t budget);

// largest d <= max_d with a shattered row set. Level-synchronous extension of
// shattered sets (prefix-closed), block-parallel with deterministic merge;
// nodes count candidate sets evaluated. With zero columns no set (not even
// the empty one) is shattered: returns d = 0 with no witness.
VCResult vc_dimension(const BitRelation& rel, std::size_t max_d,
                      std::uint64_t budget);

// SOP-guarantee search: a ladder row-tuple T of length ladder_depth (within
// `rows`) on which some (N <= min(max_n, |T|), E) is avoided. Witness rows
// are the relation row indices of T; ladders are recomputed per length over
// those rows. Tuples are tried in lexicographic order.
std::optional<SOPGuaranteeWitness> sop_guarantee(const BitRelation& rel,
                                                 const RowSeq& rows, int max_n,
                                                 std::size_t ladder_depth);

// Swap walk from the characteristic word of E toward the staircase
// 1^|E| 0^(N-|E|) by leftmost adjacent (0,1) -> (1,0) swaps; returns the
// first step whose swapped word is realized. Throws PatternNotAvoidedError
// when E itself is realized on rows, NoLadderError when the staircase is not.
SwapWitness extract_sop_formula_witness(const BitRelation& rel,
                                        const RowSeq& rows,
                                        const PatternSpec& spec);

// realizable E-masks on a fixed increasing tuple of positions
PatternType pattern_type(const BitRelation& rel, const RowSeq& rows,
                         const std::vector<std::size_t>& positions);

// true iff every increasing N-tuple from rows has the same pattern type
IndiscernibilityResult is_indiscernible(const BitRelation& rel,
                                        const RowSeq& rows, int n);

// order-preserving sub-RowSeq of length >= min_len passing is_indiscernible;
// with exhaustive, the maximum-length one (lexicographically least subset of
// that length). Throws NotFoundError when none of length min_len exists.
RowSeq ramsey_subsequence(const BitRelation& rel, const RowSeq& rows, int n,
                          std::size_t min_len, bool exhaustive);

// ---------------------------------------------------------------------------
// Witness verification (direct entry checks, independent of the searches)
// ---------------------------------------------------------------------------

bool verify_ladder(const BitRelation& rel, const RowSeq& rows,
                   const LadderWitness& w);
bool verify_shatter(const BitRelation& rel, const ShatterWitness& w);
bool verify_sop_guarantee(const BitRelation& rel, const SOPGuaranteeWitness& w,
                          int max_n, std::size_t ladder_depth);
bool verify_swap(const BitRelation& rel, const RowSeq& rows,
                 const SwapWitness& w);

// least column whose trace along rows contains `word` as a subsequence
std::optional<std::size_t> first_column_containing(const BitRelation& rel,
                                                   const RowSeq& rows,
                                                   const Word& word);

}  // namespace relana
