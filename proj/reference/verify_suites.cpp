#include "relana/verify.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "relana/baire.hpp"
#include "relana/detect.hpp"
#include "relana/errors.hpp"
#include "relana/gen.hpp"
#include "relana/reference.hpp"
#include "relana/rng.hpp"

namespace relana::verify {

namespace {

BitRelation relation_from_bits(std::size_t m, std::size_t n, std::uint64_t bits) {
  std::vector<std::uint8_t> entries(m * n);
  for (std::size_t p = 0; p < m * n; ++p) entries[p] = (bits >> p) & 1u;
  return BitRelation::build(m, n, entries);
}

std::uint64_t odd_positions(int n) {  // {1, 3, 5, ...} as an E-mask
  std::uint64_t mask = 0;
  for (int j = 1; j <= n; j += 2) mask |= std::uint64_t{1} << (j - 1);
  return mask;
}

std::uint64_t even_positions(int n) {
  std::uint64_t mask = 0;
  for (int j = 2; j <= n; j += 2) mask |= std::uint64_t{1} << (j - 1);
  return mask;
}

struct InstanceOutcome {
  std::uint8_t ok = 1;
  std::uint8_t m_plus_1 = 0;
  std::uint32_t avoided_checks = 0;
  std::uint32_t m_plus_2_checks = 0;
};

InstanceOutcome lemma_bv_one(const BitRelation& rel, int max_n) {
  InstanceOutcome out;
  const RowSeq rows = RowSeq::identity(rel.n_rows());
  const AlternationResult alt = alternation_sum(rel, rows);

  for (int n = 1; n <= max_n && out.ok; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (!pattern_avoided(rel, rows, PatternSpec{n, mask}).avoided) continue;
      ++out.avoided_checks;
      if (alt.max_sum > 2 * static_cast<std::size_t>(n) - 2) {
        out.ok = 0;
        break;
      }
    }
  }

  const int n2 = static_cast<int>(alt.max_sum) + 2;
  out.m_plus_2_checks = 2;
  if (!pattern_avoided(rel, rows, PatternSpec{n2, odd_positions(n2)}).avoided)
    out.ok = 0;
  if (!pattern_avoided(rel, rows, PatternSpec{n2, even_positions(n2)}).avoided)
    out.ok = 0;

  const int n1 = static_cast<int>(alt.max_sum) + 1;
  if (pattern_avoided(rel, rows, PatternSpec{n1, odd_positions(n1)}).avoided ||
      pattern_avoided(rel, rows, PatternSpec{n1, even_positions(n1)}).avoided)
    out.m_plus_1 = 1;
  return out;
}

}  // namespace

LemmaBVResult check_lemma_bv(std::size_t exhaustive_dim,
                             std::size_t random_count, std::uint64_t seed) {
  if (exhaustive_dim < 1 || exhaustive_dim > 4)
    throw ValueError("exhaustive_dim must be in 1..4");
  LemmaBVResult res;

  const std::size_t cells = exhaustive_dim * exhaustive_dim;
  const std::uint64_t total = std::uint64_t{1} << cells;
  std::vector<InstanceOutcome> outs(total);
#pragma omp parallel for schedule(static)
  for (std::uint64_t id = 0; id < total; ++id)
    outs[id] = lemma_bv_one(
        relation_from_bits(exhaustive_dim, exhaustive_dim, id), 4);
  res.exhaustive_instances = total;

  std::vector<InstanceOutcome> router(random_count);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < random_count; ++i)
    router[i] = lemma_bv_one(gen::random_bipartite(8, 8, 1, 2, seed + i), 4);
  res.random_instances = random_count;

  for (std::uint64_t id = 0; id < total; ++id) {
    res.avoided_checks += outs[id].avoided_checks;
    res.m_plus_2_checks += outs[id].m_plus_2_checks;
    res.m_plus_1_holds += outs[id].m_plus_1;
    if (!outs[id].ok && res.pass) {
      res.pass = false;
      res.failure = "bounded-variation violation on exhaustive instance " +
                    std::to_string(id);
      res.counterexample =
          relation_from_bits(exhaustive_dim, exhaustive_dim, id);
    }
  }
  for (std::size_t i = 0; i < random_count; ++i) {
    res.avoided_checks += router[i].avoided_checks;
    res.m_plus_2_checks += router[i].m_plus_2_checks;
    res.m_plus_1_holds += router[i].m_plus_1;
    if (!router[i].ok && res.pass) {
      res.pass = false;
      res.failure =
          "bounded-variation violation on random instance " + std::to_string(i);
      res.counterexample = gen::random_bipartite(8, 8, 1, 2, seed + i);
    }
  }
  return res;
}

namespace {

// impl vs enumeration on every (N <= 4, E); returns checks done, 0 on mismatch
std::int64_t duality_one(const BitRelation& rel) {
  const RowSeq rows = RowSeq::identity(rel.n_rows());
  std::int64_t checks = 0;
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const PatternSpec spec{n, mask};
      const AvoidanceResult fast = pattern_avoided(rel, rows, spec);
      const auto slow = ref::pattern_realized_enum(rel, rows, spec);
      if (fast.avoided == slow.has_value()) return 0;
      if (slow) {
        if (!fast.counterexample) return 0;
        if (fast.counterexample->positions != slow->first ||
            fast.counterexample->col != slow->second)
          return 0;
      }
      ++checks;
    }
  }
  return checks;
}

}  // namespace

DualityResult check_duality(std::size_t exhaustive_dim,
                            std::size_t random_count, std::uint64_t seed) {
  if (exhaustive_dim < 1 || exhaustive_dim > 4)
    throw ValueError("exhaustive_dim must be in 1..4");
  DualityResult res;

  const std::size_t cells = exhaustive_dim * exhaustive_dim;
  const std::uint64_t total = std::uint64_t{1} << cells;
  std::vector<std::int64_t> outs(total);
#pragma omp parallel for schedule(static)
  for (std::uint64_t id = 0; id < total; ++id)
    outs[id] =
        duality_one(relation_from_bits(exhaustive_dim, exhaustive_dim, id));
  res.exhaustive_instances = total;

  std::vector<std::int64_t> router(random_count);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < random_count; ++i)
    router[i] = duality_one(gen::random_bipartite(8, 8, 1, 2, seed + i));
  res.random_instances = random_count;

  for (std::uint64_t id = 0; id < total; ++id) {
    if (outs[id] == 0 && res.pass) {
      res.pass = false;
      res.failure = "greedy/enumeration mismatch on exhaustive instance " +
                    std::to_string(id);
      res.counterexample =
          relation_from_bits(exhaustive_dim, exhaustive_dim, id);
    }
    res.comparisons += static_cast<std::uint64_t>(outs[id]);
  }
  for (std::size_t i = 0; i < random_count; ++i) {
    if (router[i] == 0 && res.pass) {
      res.pass = false;
      res.failure =
          "greedy/enumeration mismatch on random instance " + std::to_string(i);
      res.counterexample = gen::random_bipartite(8, 8, 1, 2, seed + i);
    }
    res.comparisons += static_cast<std::uint64_t>(router[i]);
  }
  return res;
}

DBSCWordsResult check_dbsc_words(std::size_t count, std::size_t max_len,
                                 std::uint64_t seed) {
  if (max_len < 1) throw ValueError("max_len must be >= 1");
  DBSCWordsResult res;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = 1 + rng.next() % max_len;
    Word w(len);
    for (auto& b : w) b = rng.next() & 1u;
    const std::size_t suffix =
        std::min(len, std::size_t{2} + rng.next() % std::max<std::size_t>(len, 1));
    const std::uint8_t v = rng.next() & 1u;
    for (std::size_t p = len - suffix; p < len; ++p) w[p] = v;

    const WordDecomposition d = decompose_word(w);
    const long limit = w.back();
    const long var =
        static_cast<long>(variation(w)) + (w.front() == 1 ? 1 : 0);
    bool ok = d.f1 - d.f2 == limit && d.f1 + d.f2 == var;

    long g1 = 0, g2 = 0, prev = 0;
    for (auto b : w) {
      const int step = static_cast<int>(b) - static_cast<int>(prev);
      const long n1 = g1 + std::max(step, 0);
      const long n2 = g2 + std::max(-step, 0);
      if (n1 < g1 || n2 < g2) ok = false;  // partial sums must be monotone
      g1 = n1;
      g2 = n2;
      prev = b;
    }
    if (g1 != d.f1 || g2 != d.f2) ok = false;

    ++res.words;
    if (!ok) {
      res.pass = false;
      for (auto b : w) res.failed_word += b ? '1' : '0';
      res.failure = "decomposition identity failed on word " + res.failed_word;
      return res;
    }
  }
  return res;
}

DoubleLimitOracleResult check_double_limit(std::size_t max_dim,
                                           std::size_t tail) {
  if (max_dim < 1 || max_dim > 4) throw ValueError("max_dim must be in 1..4");
  DoubleLimitOracleResult res;

  for (std::size_t m = 1; m <= max_dim; ++m) {
    for (std::size_t n = 1; n <= max_dim; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (m * n);
      std::vector<std::uint8_t> status(total);  // 0 ok, 1 unequal ok, 2 fail
#pragma omp parallel for schedule(static)
      for (std::uint64_t id = 0; id < total; ++id) {
        const BitRelation rel = relation_from_bits(m, n, id);
        const auto r =
            double_limit_check(rel, RowSeq::identity(m), RowSeq::identity(n),
                               tail);
        if (r.kind != DoubleLimitResult::Kind::Unequal) {
          status[id] = 0;
        } else if (ref::exists_ladder2_enum(rel, RowSeq::identity(m),
                                            RowSeq::identity(n))) {
          status[id] = 1;
        } else {
          status[id] = 2;
        }
      }
      res.instances += total;
      for (std::uint64_t id = 0; id < total; ++id) {
        if (status[id] == 1) ++res.unequal_count;
        if (status[id] == 2 && res.pass) {
          res.pass = false;
          res.failure = "Unequal without a length-2 ladder at " +
                        std::to_string(m) + "x" + std::to_string(n) +
                        " instance " + std::to_string(id);
          res.counterexample = relation_from_bits(m, n, id);
        }
      }
    }
  }

  const BitRelation hg = gen::half_graph(8);
  const auto r = double_limit_check(hg, RowSeq::identity(8),
                                    RowSeq::identity(8), 2);
  res.half_graph_golden = r.kind == DoubleLimitResult::Kind::Unequal &&
                          r.lim_i_lim_j == 1 && r.lim_j_lim_i == 0;
  if (!res.half_graph_golden) {
    res.pass = false;
    if (res.failure.empty())
      res.failure = "half_graph(8) double limit is not Unequal(1,0)";
  }
  return res;
}

RamseyResult check_ramsey(std::size_t count, std::uint64_t seed) {
  RamseyResult res;
  std::vector<std::uint8_t> ok(count, 1);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    const BitRelation rel = gen::random_bipartite(12, 12, 1, 2, seed + i);
    const RowSeq rows = RowSeq::identity(12);
    const std::size_t oracle =
        ref::max_homogeneous_len_enum(rel, rows, 2, 3);
    try {
      const RowSeq sub = ramsey_subsequence(rel, rows, 2, 3, true);
      if (!is_indiscernible(rel, sub, 2).indiscernible || sub.size() != oracle)
        ok[i] = 0;
    } catch (const NotFoundError&) {
      if (oracle != 0) ok[i] = 0;
    }
  }
  res.instances = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (!ok[i] && res.pass) {
      res.pass = false;
      res.failure = "homogenization mismatch on instance " + std::to_string(i);
      res.counterexample = gen::random_bipartite(12, 12, 1, 2, seed + i);
    }
  }
  return res;
}

namespace {

BitRelation append_row(const BitRelation& rel, SplitMix64& rng) {
  const std::size_t m = rel.n_rows(), n = rel.n_cols();
  std::vector<std::uint8_t> entries((m + 1) * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      entries[i * n + j] = rel.at(i, j) ? 1 : 0;
  for (std::size_t j = 0; j < n; ++j)
    entries[m * n + j] = rng.next() & 1u;
  return BitRelation::build(m + 1, n, entries);
}

BitRelation append_col(const BitRelation& rel, SplitMix64& rng) {
  const std::size_t m = rel.n_rows(), n = rel.n_cols();
  std::vector<std::uint8_t> entries(m * (n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      entries[i * (n + 1) + j] = rel.at(i, j) ? 1 : 0;
    entries[i * (n + 1) + n] = rng.next() & 1u;
  }
  return BitRelation::build(m, n + 1, entries);
}

// one random relation: detector values vs reference, witness soundness,
// monotonicity under growth; returns witnesses checked, -1 on failure
std::int64_t witnesses_one(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t m = 3 + rng.next() % 6;
  const std::size_t n = 3 + rng.next() % 6;
  const BitRelation rel = gen::random_bipartite(m, n, 1, 2, rng.next());
  const RowSeq rows = RowSeq::identity(m);
  std::int64_t checked = 0;

  const LadderResult lad = ladder_index(rel, 8, std::uint64_t{1} << 40);
  if (!lad.stats.complete) return -1;
  if (lad.k != ref::ladder_index_enum(rel, 8)) return -1;
  if (lad.k > 0 && (!lad.witness || !verify_ladder(rel, rows, *lad.witness)))
    return -1;
  ++checked;

  const VCResult vc = vc_dimension(rel, 4, std::uint64_t{1} << 40);
  if (!vc.stats.complete) return -1;
  if (vc.d != ref::vc_dimension_enum(rel, 4)) return -1;
  if (vc.witness && !verify_shatter(rel, *vc.witness)) return -1;
  ++checked;

  const auto fast_spec = find_avoided_pattern(rel, rows, 3);
  const auto slow_spec = ref::find_avoided_pattern_enum(rel, rows, 3);
  if (fast_spec.has_value() != slow_spec.has_value()) return -1;
  if (fast_spec && !(*fast_spec == *slow_spec)) return -1;

  if (alternation_sum(rel, rows).max_sum != ref::alternation_max_enum(rel, rows))
    return -1;

  if (auto sop = sop_guarantee(rel, rows, 2, 2)) {
    if (!verify_sop_guarantee(rel, *sop, 2, 2)) return -1;
    ++checked;
  }

  if (fast_spec && static_cast<std::size_t>(fast_spec->n) <= m) {
    try {
      const SwapWitness sw = extract_sop_formula_witness(rel, rows, *fast_spec);
      if (!verify_swap(rel, rows, sw)) return -1;
      ++checked;
    } catch (const NoLadderError&) {
      const std::size_t ones = static_cast<std::size_t>(
          fast_spec->members_list().size());
      std::uint64_t stair = (std::uint64_t{1} << ones) - 1;
      if (ref::pattern_realized_enum(rel, rows,
                                     PatternSpec{fast_spec->n, stair}))
        return -1;  // NoLadder claimed but the staircase is realized
    }
  }

  SplitMix64 grow(seed ^ 0x5bd1e995u);
  const BitRelation more_rows = append_row(rel, grow);
  const BitRelation more_cols = append_col(rel, grow);
  if (ladder_index(more_rows, 8, std::uint64_t{1} << 40).k < lad.k) return -1;
  if (ladder_index(more_cols, 8, std::uint64_t{1} << 40).k < lad.k) return -1;
  if (vc_dimension(more_rows, 4, std::uint64_t{1} << 40).d < vc.d) return -1;
  if (vc_dimension(more_cols, 4, std::uint64_t{1} << 40).d < vc.d) return -1;
  checked += 4;

  return checked;
}

}  // namespace

WitnessSoundnessResult check_witnesses(std::size_t count, std::uint64_t seed) {
  WitnessSoundnessResult res;
  std::vector<std::int64_t> outs(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) outs[i] = witnesses_one(seed + i);
  res.relations = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (outs[i] < 0 && res.pass) {
      res.pass = false;
      res.failure = "witness soundness failure on instance " + std::to_string(i);
      SplitMix64 rng(seed + i);
      const std::size_t m = 3 + rng.next() % 6;
      const std::size_t n = 3 + rng.next() % 6;
      res.counterexample = gen::random_bipartite(m, n, 1, 2, rng.next());
    } else if (outs[i] > 0) {
      res.witnesses_checked += static_cast<std::uint64_t>(outs[i]);
    }
  }
  return res;
}

}  // namespace relana::verify
