#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relana/detect.hpp"
#include "relana/relation.hpp"

namespace relana {

// Per realized type q, the word (f_1(q), ..., f_m(q)) with f_i the indicator
// of row rows[i] read off a representative column of q. Types come from
// project_types over all rows of the relation.
struct FunctionSequence {
  TypeSpace space;
  RowSeq rows;
  std::vector<Word> words;
};

constexpr int kUnstable = -1;

struct LimitFunction {
  std::vector<int> values;               // 0/1, or kUnstable
  std::vector<std::size_t> stab_index;   // 1-based start of the final run (0 if unstable)
  std::size_t tail = 0;
  bool converged = true;
  std::vector<std::size_t> unstable_types;
};

// F1[q] - F2[q] = limit at q, F1[q] + F2[q] = variation of the word with a
// zero prepended; both partial-sum sequences are non-decreasing.
struct DBSCDecomposition {
  std::vector<long> f1;
  std::vector<long> f2;
  bool prepended_zero = true;
};

FunctionSequence function_sequence(const BitRelation& rel, const RowSeq& rows);

// number of adjacent unequal pairs
std::size_t variation(const Word& word);

// final-run value if the run is at least `tail` long, else unstable
LimitFunction pointwise_limit(const FunctionSequence& seq, std::size_t tail);

// word-level decomposition with f_0 = 0 prepended and steps f_{n+1} - f_n
struct WordDecomposition {
  long f1 = 0;
  long f2 = 0;
};
WordDecomposition decompose_word(const Word& word);

// throws NotConvergedError (with the unstable type indices) unless every
// type stabilizes under `tail`
std::pair<DBSCDecomposition, LimitFunction> dbsc_decompose(
    const FunctionSequence& seq, std::size_t tail);

// ---------------------------------------------------------------------------
// Double limit
// ---------------------------------------------------------------------------

struct DoubleLimitResult {
  enum class Kind { Equal, Unequal, Indeterminate };
  Kind kind = Kind::Indeterminate;
  int lim_i_lim_j = kUnstable;
  int lim_j_lim_i = kUnstable;
  std::string failed;  // which limit failed to stabilize, when indeterminate
};

// Inner limits are tail-stabilized per fixed index; indices past the first
// unstable inner limit are dropped before the outer limit is taken (the
// trailing rows/columns of a finite fragment cannot exhibit their limit).
DoubleLimitResult double_limit_check(const BitRelation& rel,
                                     const RowSeq& row_seq,
                                     const RowSeq& col_seq, std::size_t tail);

// ---------------------------------------------------------------------------
// Limit classification
// ---------------------------------------------------------------------------

enum class LimitClass { ContinuousProxy, DBSCProxy, Nonconvergent };

struct LimitClassification {
  LimitClass cls = LimitClass::Nonconvergent;
  LimitFunction limit;
  std::optional<PatternSpec> avoided;        // bounded-variation certificate
  bool avoided_vacuous = false;              // certificate N exceeded |rows|
  std::optional<LadderWitness> ladder2;      // length-2 ladder over the rows
  std::optional<DBSCDecomposition> dbsc;
};

// NONCONVERGENT when some type fails to stabilize; otherwise DBSC proxy (the
// finite decomposition always exists), upgraded to the continuous proxy when
// an avoidance certificate exists and no length-2 ladder does.
LimitClassification classify_limit(const BitRelation& rel, const RowSeq& rows,
                                   std::size_t tail, int max_n);

const char* to_string(LimitClass c);

}  // namespace relana
