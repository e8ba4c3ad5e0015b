#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "relana/relation.hpp"

// Oracle equivalence suites: the optimized kernels checked against the serial
// reference enumerations, exhaustively at small sizes and on seeded random
// instances. Shared by the verify CLI subcommand and the acceptance tests.
namespace relana::verify {

struct LemmaBVResult {
  bool pass = true;
  std::uint64_t exhaustive_instances = 0;
  std::uint64_t random_instances = 0;
  std::uint64_t avoided_checks = 0;  // (relation, N, E) pairs found avoided
  std::uint64_t m_plus_2_checks = 0;
  std::uint64_t m_plus_1_holds = 0;  // instances where length M+1 already avoided
  std::optional<BitRelation> counterexample;
  std::string failure;
};

// (i)<=>(ii) of the bounded-variation equivalence: avoidance bounds the
// alternation sum by 2N-2, and alternating patterns of length M+2 are
// avoided. Exhaustive over all dim x dim relations plus random 8x8 ones.
LemmaBVResult check_lemma_bv(std::size_t exhaustive_dim,
                             std::size_t random_count, std::uint64_t seed);

struct DualityResult {
  bool pass = true;
  std::uint64_t exhaustive_instances = 0;
  std::uint64_t random_instances = 0;
  std::uint64_t comparisons = 0;
  std::optional<BitRelation> counterexample;
  std::string failure;
};

// greedy subsequence scan == brute-force tuple enumeration, including the
// returned counterexamples
DualityResult check_duality(std::size_t exhaustive_dim,
                            std::size_t random_count, std::uint64_t seed);

struct DBSCWordsResult {
  bool pass = true;
  std::uint64_t words = 0;
  std::string failed_word;
  std::string failure;
};

// F1 - F2 = limit, F1 + F2 = variation of the zero-prepended word, and the
// partial sums are monotone, on random words with a forced stable suffix
DBSCWordsResult check_dbsc_words(std::size_t count, std::size_t max_len,
                                 std::uint64_t seed);

struct DoubleLimitOracleResult {
  bool pass = true;
  std::uint64_t instances = 0;
  std::uint64_t unequal_count = 0;
  bool half_graph_golden = false;
  std::optional<BitRelation> counterexample;
  std::string failure;
};

// Unequal implies a length-2 ladder, over every relation with both
// dimensions <= max_dim; plus the half_graph(8) golden value
DoubleLimitOracleResult check_double_limit(std::size_t max_dim,
                                           std::size_t tail);

struct RamseyResult {
  bool pass = true;
  std::uint64_t instances = 0;
  std::optional<BitRelation> counterexample;
  std::string failure;
};

// exhaustive homogenization agrees with the subset-enumeration oracle on
// seeded 12-row random relations (N = 2, min_len = 3)
RamseyResult check_ramsey(std::size_t count, std::uint64_t seed);

struct WitnessSoundnessResult {
  bool pass = true;
  std::uint64_t relations = 0;
  std::uint64_t witnesses_checked = 0;
  std::optional<BitRelation> counterexample;
  std::string failure;
};

// every witness produced on seeded random relations re-verifies, detector
// values match the reference, and ladder/vc are monotone under adding rows
// or columns
WitnessSoundnessResult check_witnesses(std::size_t count, std::uint64_t seed);

}  // namespace relana::verify
