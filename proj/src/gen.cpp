#include "relana/gen.hpp"

#include <string>

#include "relana/errors.hpp"
#include "relana/rng.hpp"

namespace relana::gen {

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n,
                                  std::size_t first = 1) {
  std::vector<std::string> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(prefix + std::to_string(first + i));
  return v;
}

}  // namespace

BitRelation half_graph(std::size_t n) {
  if (n < 1) throw ValueError("half_graph needs n >= 1");
  return BitRelation::make(
      n, n, [](std::size_t i, std::size_t j) { return i < j; },
      numbered("a", n), numbered("b", n));
}

BitRelation powerset(std::size_t d) {
  if (d > 20) throw ValueError("powerset d too large");
  const std::size_t cols = std::size_t{1} << d;
  return BitRelation::make(
      d, cols, [](std::size_t r, std::size_t s) { return (s >> r) & 1u; },
      numbered("a", d), numbered("s", cols, 0));
}

BitRelation strict_chain(std::size_t n) {
  if (n < 1) throw ValueError("strict_chain needs n >= 1");
  auto labels = numbered("a", n);
  return BitRelation::make(
      n, n, [](std::size_t i, std::size_t j) { return i < j; }, labels,
      labels);
}

BitRelation random_bipartite(std::size_t m, std::size_t n, std::uint64_t num,
                             std::uint64_t den, std::uint64_t seed) {
  if (den == 0 || num > den) throw ValueError("need 0 <= num <= den, den > 0");
  SplitMix64 rng(seed);
  std::vector<std::uint8_t> entries(m * n);
  for (auto& e : entries) e = rng.bernoulli(num, den) ? 1 : 0;
  return BitRelation::build(m, n, entries, numbered("a", m), numbered("b", n));
}

std::size_t example1_b_count(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 0; (std::size_t{1} << k) + k <= n; ++k) ++count;
  return count;
}

BitRelation example1(std::size_t n) {
  if (n < 2) throw ValueError("example1 needs n >= 2");
  const std::size_t nb = example1_b_count(n);
  const std::size_t size = n + nb;

  std::vector<std::uint8_t> entries(size * size, 0);
  auto set = [&](std::size_t r, std::size_t c) { entries[r * size + c] = 1; };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) set(i, j);

  // element b_k sits at index n + k; a_i (1-based) at index i - 1
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t i = 0; i <= k; i += 2)
      set((std::size_t{1} << k) + i - 1, n + k);

  std::vector<std::string> labels = numbered("a", n);
  for (std::size_t k = 0; k < nb; ++k)
    labels.push_back("b" + std::to_string(k));
  return BitRelation::build(size, size, entries, labels, labels);
}

std::vector<std::vector<std::size_t>> suffix_family(std::size_t n) {
  std::vector<std::vector<std::size_t>> family;
  for (std::size_t t = 1; t <= n; ++t) {
    std::vector<std::size_t> suffix;
    for (std::size_t i = t; i <= n; ++i) suffix.push_back(i);
    family.push_back(std::move(suffix));
  }
  return family;
}

BitRelation example2(std::size_t n,
                     const std::vector<std::vector<std::size_t>>& family) {
  if (n < 1) throw ValueError("example2 needs n >= 1");
  for (const auto& set : family) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 1 || set[i] > n)
        throw ValueError("family member outside {1..n}");
      if (i > 0 && set[i] <= set[i - 1])
        throw ValueError("family members must be listed ascending");
    }
  }

  std::vector<std::size_t> block_b;  // b-count per family member
  std::size_t total_b = 0;
  for (const auto& set : family) {
    block_b.push_back(example1_b_count(set.size()));
    total_b += block_b.back();
  }
  const std::size_t size = n + total_b;

  std::vector<std::uint8_t> entries(size * size, 0);
  auto set_entry = [&](std::size_t r, std::size_t c) {
    entries[r * size + c] = 1;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) set_entry(i, j);

  std::size_t b_base = n;
  for (std::size_t f = 0; f < family.size(); ++f) {
    const auto& members = family[f];  // ascending 1-based a-indices
    for (std::size_t k = 0; k < block_b[f]; ++k)
      for (std::size_t i = 0; i <= k; i += 2) {
        // the (2^k + i)-th element of I, 1-based within the enumeration
        const std::size_t pos = (std::size_t{1} << k) + i;
        set_entry(members[pos - 1] - 1, b_base + k);
      }
    b_base += block_b[f];
  }

  std::vector<std::string> labels = numbered("a", n);
  for (std::size_t f = 0; f < family.size(); ++f)
    for (std::size_t k = 0; k < block_b[f]; ++k)
      labels.push_back("b" + std::to_string(k) + "_I" + std::to_string(f + 1));
  return BitRelation::build(size, size, entries, labels, labels);
}

}  // namespace relana::gen
