#include "relana/report.hpp"

#include <sstream>

#include "relana/errors.hpp"
#include "relana/io.hpp"

namespace relana {

std::size_t default_tail(std::size_t m) {
  const std::size_t t = std::max<std::size_t>(2, (m + 3) / 4);
  return std::min(t, m);
}

AnalysisReport analyze(const BitRelation& input, const AnalyzeOptions& opts) {
  if (opts.max_n < 1) throw ValueError("max_n must be >= 1");
  if (input.n_rows() == 0 || input.n_cols() == 0)
    throw ValueError("analysis needs a nonempty relation");

  BitRelation rel = input;
  if (opts.row_order) {
    RowSeq order;
    order.idx = *opts.row_order;
    rel = select_rows(input, order);
  }

  AnalysisReport rep;
  rep.opts = opts;
  rep.n_rows = rel.n_rows();
  rep.n_cols = rel.n_cols();
  rep.hash = io::content_hash(rel);
  if (rep.opts.tail == 0) rep.opts.tail = default_tail(rel.n_rows());

  const RowSeq rows = RowSeq::identity(rel.n_rows());
  const RowSeq cols = RowSeq::identity(rel.n_cols());

  const TypeSpace types = project_types(rel, rows);
  rep.type_count = types.count();
  rep.type_multiplicity = types.multiplicity;

  rep.avoided = find_avoided_pattern(rel, rows, opts.max_n);
  if (rep.avoided)
    rep.avoided_vacuous = static_cast<std::size_t>(rep.avoided->n) > rows.size();

  rep.alternation = alternation_sum(rel, rows);
  rep.ladder = ladder_index(rel, opts.max_k, opts.budget);
  rep.vc = vc_dimension(rel, opts.max_d, opts.budget);
  rep.sop = sop_guarantee(rel, rows, opts.max_n, opts.ladder_depth);
  rep.limit = classify_limit(rel, rows, rep.opts.tail, opts.max_n);
  rep.double_limit = double_limit_check(rel, rows, cols, rep.opts.tail);

  if (rep.ladder.k >= 2) {
    rep.shelah_branch = "ip";
    if (rep.avoided && !rep.avoided_vacuous) {
      try {
        rep.swap = extract_sop_formula_witness(rel, rows, *rep.avoided);
        rep.shelah_branch = "swap";
      } catch (const NoLadderError&) {
        // staircase of the avoided pattern unrealized; fall back to the IP side
      }
    }
  } else {
    rep.shelah_branch = "none";
  }

  bool ok = true;
  if (rep.ladder.witness) ok = ok && verify_ladder(rel, rows, *rep.ladder.witness);
  if (rep.vc.witness) ok = ok && verify_shatter(rel, *rep.vc.witness);
  if (rep.sop)
    ok = ok && verify_sop_guarantee(rel, *rep.sop, opts.max_n, opts.ladder_depth);
  if (rep.swap) ok = ok && verify_swap(rel, rows, *rep.swap);
  if (rep.limit.ladder2) ok = ok && verify_ladder(rel, rows, *rep.limit.ladder2);
  rep.witnesses_verified = ok;
  return rep;
}

namespace {

struct Emitter {
  std::ostringstream out;

  void kv(const std::string& key, const std::string& value) {
    out << key << " = " << value << "\n";
  }
  void kv(const std::string& key, bool v) { kv(key, v ? "true" : "false"); }
  void kv(const std::string& key, std::uint64_t v) { kv(key, std::to_string(v)); }
  void kv(const std::string& key, int v) { kv(key, std::to_string(v)); }

  template <typename T>
  void list(const std::string& key, const std::vector<T>& v) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s << ", ";
      s << static_cast<long long>(v[i]);
    }
    s << "]";
    kv(key, s.str());
  }

  void word(const std::string& key, const Word& w) {
    std::string s;
    for (auto b : w) s += b ? '1' : '0';
    kv(key, s);
  }
};

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s = "0x";
  for (int shift = 60; shift >= 0; shift -= 4)
    s += digits[(v >> shift) & 0xF];
  return s;
}

void emit_pattern(Emitter& e, const std::string& prefix,
                  const PatternSpec& spec) {
  e.kv(prefix + ".n", spec.n);
  e.list(prefix + ".e", spec.members_list());
  e.word(prefix + ".word", spec.char_word());
}

}  // namespace

std::string AnalysisReport::to_text() const {
  Emitter e;
  e.kv("relana.version", std::string(kToolVersion));
  e.kv("report.schema", std::uint64_t{1});
  e.kv("input.rows", std::uint64_t{n_rows});
  e.kv("input.cols", std::uint64_t{n_cols});
  e.kv("input.hash", hex64(hash));
  if (opts.row_order)
    e.list("analysis.row_order", *opts.row_order);
  else
    e.kv("analysis.row_order", std::string("natural"));
  e.kv("flags.max_n", opts.max_n);
  e.kv("flags.max_k", std::uint64_t{opts.max_k});
  e.kv("flags.max_d", std::uint64_t{opts.max_d});
  e.kv("flags.ladder_depth", std::uint64_t{opts.ladder_depth});
  e.kv("flags.tail", std::uint64_t{opts.tail});
  e.kv("flags.budget", std::uint64_t{opts.budget});

  e.kv("types.count", std::uint64_t{type_count});
  e.list("types.multiplicity", type_multiplicity);

  e.kv("pattern.avoided", avoided.has_value());
  if (avoided) {
    emit_pattern(e, "pattern", *avoided);
    e.kv("pattern.vacuous", avoided_vacuous);
  }

  e.kv("alternation.max", std::uint64_t{alternation.max_sum});
  e.list("alternation.per_column", alternation.per_column);

  e.kv("ladder.k", std::uint64_t{ladder.k});
  e.kv("ladder.exact", ladder.stats.complete);
  e.kv("ladder.nodes", ladder.stats.nodes);
  if (ladder.witness) {
    e.list("ladder.rows", ladder.witness->row_pos);
    e.list("ladder.cols", ladder.witness->cols);
  }

  e.kv("vc.d", std::uint64_t{vc.d});
  e.kv("vc.exact", vc.stats.complete);
  e.kv("vc.nodes", vc.stats.nodes);
  if (vc.witness) {
    e.list("vc.rows", vc.witness->rows);
    e.list("vc.realizers", vc.witness->realizers);
  }

  e.kv("sop_guarantee.present", sop.has_value());
  if (sop) {
    e.list("sop_guarantee.rows", sop->rows.idx);
    emit_pattern(e, "sop_guarantee.pattern", sop->pattern);
    e.kv("sop_guarantee.depth", std::uint64_t{sop->ladders.size()});
  }

  e.kv("limit.tail", std::uint64_t{opts.tail});
  e.kv("limit.converged", limit.limit.converged);
  if (!limit.limit.converged) e.list("limit.unstable_types", limit.limit.unstable_types);
  e.list("limit.values", limit.limit.values);
  e.list("limit.stabilization", limit.limit.stab_index);
  if (limit.dbsc) {
    e.list("dbsc.f1", limit.dbsc->f1);
    e.list("dbsc.f2", limit.dbsc->f2);
  }

  switch (double_limit.kind) {
    case DoubleLimitResult::Kind::Equal:
      e.kv("double_limit.kind", std::string("equal"));
      break;
    case DoubleLimitResult::Kind::Unequal:
      e.kv("double_limit.kind", std::string("unequal"));
      break;
    case DoubleLimitResult::Kind::Indeterminate:
      e.kv("double_limit.kind", std::string("indeterminate"));
      break;
  }
  if (double_limit.kind != DoubleLimitResult::Kind::Indeterminate) {
    e.kv("double_limit.lim_i_lim_j", double_limit.lim_i_lim_j);
    e.kv("double_limit.lim_j_lim_i", double_limit.lim_j_lim_i);
  } else {
    e.kv("double_limit.failed", double_limit.failed);
  }

  e.kv("class.op_level", std::uint64_t{ladder.k});
  e.kv("class.ip_level", std::uint64_t{vc.d});
  e.kv("class.sop_guarantee", std::string(sop ? "present" : "absent"));
  e.kv("class.limit", std::string(to_string(limit.cls)));

  e.kv("shelah.op_witness", ladder.k >= 2);
  e.kv("shelah.branch", shelah_branch);
  if (swap) {
    e.kv("shelah.swap.i0", swap->i0);
    e.word("shelah.swap.eta0", swap->eta0);
    e.kv("shelah.swap.col", std::uint64_t{swap->consistent_col});
    e.word("shelah.swap.unrealized", swap->unrealized_word());
    e.word("shelah.swap.realized", swap->realized_word());
  }

  e.kv("witnesses.verified", witnesses_verified);
  return e.out.str();
}

}  // namespace relana
