#pragma once

#include <cstdint>
#include <vector>

#include "relana/relation.hpp"

namespace relana::gen {

// n x n bipartite, entry(i, j) = 1 iff i < j (1-based); rows a_i, cols b_j
BitRelation half_graph(std::size_t n);

// d rows x 2^d columns; column s has a 1 at row r iff bit r of s is set,
// columns in binary-counter order
BitRelation powerset(std::size_t d);

// n x n over one sort, entry(i, j) = 1 iff i < j; rows and cols share labels
BitRelation strict_chain(std::size_t n);

// m x n with entries drawn row-major, each 1 with probability num/den via
// SplitMix64(seed); bit-exact across platforms
BitRelation random_bipartite(std::size_t m, std::size_t n, std::uint64_t num,
                             std::uint64_t den, std::uint64_t seed);

// Single-sorted relation on a_1..a_n plus b_k for every k with 2^k + k <= n:
//   R(a_i, a_j) = 1 iff i < j
//   R(a_{2^k + i}, b_k) = 1 iff i is even, for 0 <= i <= k
//   everything else 0 (in particular all b-rows are zero)
BitRelation example1(std::size_t n);

// number of b_k columns example1(n) carries
std::size_t example1_b_count(std::size_t n);

// Layered variant: for each subset I (given as 1-based members of {1..n},
// listed ascending) a block B_I of b-elements applies the example1 rule
// relative to the enumeration of I. Default family: all suffixes {t..n}.
BitRelation example2(std::size_t n,
                     const std::vector<std::vector<std::size_t>>& family);

std::vector<std::vector<std::size_t>> suffix_family(std::size_t n);

}  // namespace relana::gen
