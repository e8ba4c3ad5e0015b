#include "relana/baire.hpp"

#include <algorithm>

#include "relana/errors.hpp"

namespace relana {

FunctionSequence function_sequence(const BitRelation& rel, const RowSeq& rows) {
  check_row_seq(rel, rows);
  if (rows.empty()) throw ValueError("function_sequence needs nonempty rows");
  FunctionSequence seq;
  seq.space = project_types(rel, RowSeq::identity(rel.n_rows()));
  seq.rows = rows;
  seq.words.resize(seq.space.count());
#pragma omp parallel for schedule(static)
  for (std::size_t t = 0; t < seq.space.count(); ++t)
    seq.words[t] = trace(rel, rows, seq.space.representative[t]);
  return seq;
}

std::size_t variation(const Word& word) {
  std::size_t v = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) v += word[i] != word[i + 1];
  return v;
}

namespace {

// 1-based start of the maximal constant suffix
std::size_t final_run_start(const Word& w) {
  std::size_t s = w.size();
  while (s > 1 && w[s - 2] == w[s - 1]) --s;
  return s;
}

}  // namespace

LimitFunction pointwise_limit(const FunctionSequence& seq, std::size_t tail) {
  const std::size_t m = seq.rows.size();
  if (tail < 1 || tail > m) throw ValueError("tail must be in 1..|rows|");
  LimitFunction lim;
  lim.tail = tail;
  lim.values.resize(seq.words.size());
  lim.stab_index.resize(seq.words.size());
  for (std::size_t t = 0; t < seq.words.size(); ++t) {
    const Word& w = seq.words[t];
    const std::size_t start = final_run_start(w);
    if (m - start + 1 >= tail) {
      lim.values[t] = w[m - 1];
      lim.stab_index[t] = start;
    } else {
      lim.values[t] = kUnstable;
      lim.stab_index[t] = 0;
      lim.converged = false;
      lim.unstable_types.push_back(t);
    }
  }
  return lim;
}

WordDecomposition decompose_word(const Word& word) {
  WordDecomposition d;
  int prev = 0;  // f_0 = 0
  for (auto v : word) {
    const int step = static_cast<int>(v) - prev;
    if (step > 0)
      d.f1 += step;
    else
      d.f2 -= step;
    prev = v;
  }
  return d;
}

std::pair<DBSCDecomposition, LimitFunction> dbsc_decompose(
    const FunctionSequence& seq, std::size_t tail) {
  LimitFunction lim = pointwise_limit(seq, tail);
  if (!lim.converged)
    throw NotConvergedError("sequence does not stabilize under the given tail",
                            lim.unstable_types);
  DBSCDecomposition dec;
  dec.f1.resize(seq.words.size());
  dec.f2.resize(seq.words.size());
  for (std::size_t t = 0; t < seq.words.size(); ++t) {
    const WordDecomposition wd = decompose_word(seq.words[t]);
    dec.f1[t] = wd.f1;
    dec.f2[t] = wd.f2;
  }
  return {std::move(dec), std::move(lim)};
}

namespace {

// stabilized value of a word, or kUnstable
int stable_value(const Word& w, std::size_t tail) {
  if (w.empty() || w.size() < tail) return kUnstable;
  const std::size_t start = final_run_start(w);
  return (w.size() - start + 1 >= tail) ? w.back() : kUnstable;
}

// inner limits per index, truncated at the first unstable one
Word defined_prefix(const std::vector<int>& inner) {
  Word out;
  for (int v : inner) {
    if (v == kUnstable) break;
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

}  // namespace

DoubleLimitResult double_limit_check(const BitRelation& rel,
                                     const RowSeq& row_seq,
                                     const RowSeq& col_seq, std::size_t tail) {
  check_row_seq(rel, row_seq);
  if (row_seq.empty() || col_seq.empty())
    throw ValueError("double_limit_check needs nonempty sequences");
  for (auto c : col_seq.idx)
    if (c >= rel.n_cols()) throw IndexError("column index out of range");
  if (tail < 1) throw ValueError("tail must be >= 1");

  DoubleLimitResult res;

  std::vector<int> inner_rows(row_seq.size());
  for (std::size_t i = 0; i < row_seq.size(); ++i) {
    Word w(col_seq.size());
    for (std::size_t j = 0; j < col_seq.size(); ++j)
      w[j] = rel.at(row_seq[i], col_seq[j]) ? 1 : 0;
    inner_rows[i] = stable_value(w, tail);
  }
  const Word prefix_a = defined_prefix(inner_rows);
  if (prefix_a.empty()) {
    res.failed = "inner limit of lim_i lim_j";
    return res;
  }
  const int a = stable_value(prefix_a, tail);
  if (a == kUnstable) {
    res.failed = "outer limit of lim_i lim_j";
    return res;
  }

  std::vector<int> inner_cols(col_seq.size());
  for (std::size_t j = 0; j < col_seq.size(); ++j) {
    Word w(row_seq.size());
    for (std::size_t i = 0; i < row_seq.size(); ++i)
      w[i] = rel.at(row_seq[i], col_seq[j]) ? 1 : 0;
    inner_cols[j] = stable_value(w, tail);
  }
  const Word prefix_b = defined_prefix(inner_cols);
  if (prefix_b.empty()) {
    res.failed = "inner limit of lim_j lim_i";
    return res;
  }
  const int b = stable_value(prefix_b, tail);
  if (b == kUnstable) {
    res.failed = "outer limit of lim_j lim_i";
    return res;
  }

  res.lim_i_lim_j = a;
  res.lim_j_lim_i = b;
  res.kind = a == b ? DoubleLimitResult::Kind::Equal
                    : DoubleLimitResult::Kind::Unequal;
  return res;
}

LimitClassification classify_limit(const BitRelation& rel, const RowSeq& rows,
                                   std::size_t tail, int max_n) {
  LimitClassification out;
  const FunctionSequence seq = function_sequence(rel, rows);
  out.limit = pointwise_limit(seq, tail);
  if (!out.limit.converged) {
    out.cls = LimitClass::Nonconvergent;
    return out;
  }

  out.avoided = find_avoided_pattern(rel, rows, max_n);
  if (out.avoided)
    out.avoided_vacuous =
        static_cast<std::size_t>(out.avoided->n) > rows.size();

  const LadderResult l2 = ladder_index_over(rel, rows, 2, 1u << 20);
  if (l2.k >= 2) out.ladder2 = l2.witness;

  auto [dec, lim] = dbsc_decompose(seq, tail);
  out.dbsc = std::move(dec);

  out.cls = (out.avoided && !out.ladder2) ? LimitClass::ContinuousProxy
                                          : LimitClass::DBSCProxy;
  return out;
}

const char* to_string(LimitClass c) {
  switch (c) {
    case LimitClass::ContinuousProxy:
      return "CONTINUOUS_PROXY";
    case LimitClass::DBSCProxy:
      return "DBSC_PROXY";
    case LimitClass::Nonconvergent:
      return "NONCONVERGENT";
  }
  return "?";
}

}  // namespace relana
