#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "relana/relation.hpp"

// Serial reference implementations: direct enumeration with no bit packing,
// no pruning beyond plain loops, and no parallelism. Kept as the oracle the
// optimized detectors are tested against and as the benchmark baseline.
namespace relana::ref {

// first (tuple, column) realizing the pattern, tuples in lexicographic order
// and columns by index within a tuple; nullopt when avoided
std::optional<std::pair<std::vector<std::size_t>, std::size_t>>
pattern_realized_enum(const BitRelation& rel, const RowSeq& rows,
                      const PatternSpec& spec);

bool pattern_avoided_enum(const BitRelation& rel, const RowSeq& rows,
                          const PatternSpec& spec);

std::optional<PatternSpec> find_avoided_pattern_enum(const BitRelation& rel,
                                                     const RowSeq& rows,
                                                     int max_n);

std::size_t alternation_max_enum(const BitRelation& rel, const RowSeq& rows);

// true iff some increasing tuple of k positions carries all k staircase
// columns (column q with ones exactly before position q)
bool has_ladder_enum(const BitRelation& rel, const RowSeq& rows, std::size_t k);

// largest k <= max_k with a ladder, each k checked independently
std::size_t ladder_index_enum(const BitRelation& rel, std::size_t max_k);

bool shattered_enum(const BitRelation& rel, const std::vector<std::size_t>& set);

// largest d <= max_d with a shattered row set, every subset checked
std::size_t vc_dimension_enum(const BitRelation& rel, std::size_t max_d);

bool is_indiscernible_enum(const BitRelation& rel, const RowSeq& rows, int n);

// maximum size >= min_len of an order-preserving homogeneous subsequence,
// 0 when none reaches min_len; every subset is tested
std::size_t max_homogeneous_len_enum(const BitRelation& rel, const RowSeq& rows,
                                     int n, std::size_t min_len);

// a ladder of length 2 with rows from row_seq and columns from col_seq
bool exists_ladder2_enum(const BitRelation& rel, const RowSeq& row_seq,
                         const RowSeq& col_seq);

}  // namespace relana::ref
