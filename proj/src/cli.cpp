#include "relana/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "relana/errors.hpp"
#include "relana/gen.hpp"
#include "relana/io.hpp"
#include "relana/report.hpp"
#include "relana/verify.hpp"

namespace relana::cli {

namespace {

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

std::vector<std::vector<std::size_t>> parse_family(const std::string& text) {
  std::vector<std::vector<std::size_t>> family;
  std::istringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<std::size_t> members;
    std::istringstream items(group);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.empty()) throw ValueError("empty family member");
      std::size_t v = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') throw ValueError("bad family member: " + item);
        v = v * 10 + static_cast<std::size_t>(ch - '0');
      }
      members.push_back(v);
    }
    if (!members.empty()) family.push_back(std::move(members));
  }
  return family;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) throw ValueError("empty index in list");
    std::size_t v = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9') throw ValueError("bad index: " + item);
      v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    out.push_back(v);
  }
  return out;
}

int cmd_gen(const std::string& kind, const std::vector<std::uint64_t>& params,
            std::uint64_t seed, const std::string& family_text,
            bool family_given, const std::string& format,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw ValueError(kind + " takes " + std::to_string(count) +
                       " size parameter(s)");
  };

  BitRelation rel = [&] {
    if (kind == "half-graph") {
      need(1);
      return gen::half_graph(params[0]);
    }
    if (kind == "powerset") {
      need(1);
      return gen::powerset(params[0]);
    }
    if (kind == "strict-chain") {
      need(1);
      return gen::strict_chain(params[0]);
    }
    if (kind == "random") {
      need(4);
      return gen::random_bipartite(params[0], params[1], params[2], params[3],
                                   seed);
    }
    if (kind == "example1") {
      need(1);
      return gen::example1(params[0]);
    }
    if (kind == "example2") {
      need(1);
      const auto family = family_given ? parse_family(family_text)
                                       : gen::suffix_family(params[0]);
      return gen::example2(params[0], family);
    }
    throw ValueError("unknown generator kind: " + kind);
  }();

  const std::string text =
      format == "edges" ? io::emit_edges(rel) : io::emit_matrix(rel);
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "relana: cannot open " << out_path << " for writing\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

int cmd_analyze(const std::string& input, const AnalyzeOptions& opts,
                std::ostream& out, std::ostream& err) {
  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) {
      err << "relana: cannot read " << input << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  const BitRelation rel = io::parse(text);
  out << analyze(rel, opts).to_text();
  return 0;
}

struct VerifyParams {
  std::size_t max = 4;
  std::size_t count = 0;  // 0: per-suite default
  std::size_t words = 10000;
  std::size_t max_len = 64;
  std::size_t tail = 2;
  std::uint64_t seed = 7;
};

int run_suite(const std::string& suite, const VerifyParams& p,
              std::ostream& out) {
  bool pass = true;
  std::string failure;
  std::optional<BitRelation> cx;

  out << "suite = " << suite << "\n";
  if (suite == "lemma-bv") {
    const auto r =
        verify::check_lemma_bv(p.max, p.count ? p.count : 1000, p.seed);
    out << "instances.exhaustive = " << r.exhaustive_instances << "\n";
    out << "instances.random = " << r.random_instances << "\n";
    out << "avoided.checks = " << r.avoided_checks << "\n";
    out << "alternating.checks = " << r.m_plus_2_checks << "\n";
    out << "m_plus_1.holds = " << r.m_plus_1_holds << " of "
        << r.exhaustive_instances + r.random_instances << "\n";
    pass = r.pass;
    failure = r.failure;
    cx = r.counterexample;
  } else if (suite == "duality") {
    const auto r =
        verify::check_duality(p.max, p.count ? p.count : 1000, p.seed);
    out << "instances.exhaustive = " << r.exhaustive_instances << "\n";
    out << "instances.random = " << r.random_instances << "\n";
    out << "comparisons = " << r.comparisons << "\n";
    pass = r.pass;
    failure = r.failure;
    cx = r.counterexample;
  } else if (suite == "dbsc") {
    const auto r = verify::check_dbsc_words(p.words, p.max_len, p.seed);
    out << "words = " << r.words << "\n";
    pass = r.pass;
    failure = r.failure;
  } else if (suite == "double-limit") {
    const auto r = verify::check_double_limit(p.max, p.tail);
    out << "instances = " << r.instances << "\n";
    out << "unequal = " << r.unequal_count << "\n";
    out << "half_graph_golden = " << (r.half_graph_golden ? "true" : "false")
        << "\n";
    pass = r.pass;
    failure = r.failure;
    cx = r.counterexample;
  } else if (suite == "ramsey") {
    const auto r = verify::check_ramsey(p.count ? p.count : 200, p.seed);
    out << "instances = " << r.instances << "\n";
    pass = r.pass;
    failure = r.failure;
    cx = r.counterexample;
  } else if (suite == "witnesses") {
    const auto r = verify::check_witnesses(p.count ? p.count : 200, p.seed);
    out << "relations = " << r.relations << "\n";
    out << "witnesses.checked = " << r.witnesses_checked << "\n";
    pass = r.pass;
    failure = r.failure;
    cx = r.counterexample;
  } else {
    return 2;
  }

  out << "result = " << (pass ? "PASS" : "FAIL") << "\n";
  if (!pass) {
    out << "reason = " << failure << "\n";
    if (cx) {
      out << "counterexample:\n";
      out << io::emit_matrix(*cx);
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact analyzer for finite 0/1 relations", "relana"};
  app.require_subcommand(1);

  // gen
  auto* gen_cmd = app.add_subcommand(
      "gen", "generate a relation (half-graph, powerset, strict-chain, "
             "random, example1, example2)");
  std::string kind;
  std::vector<std::uint64_t> params;
  std::uint64_t seed = 0;
  std::string family_text;
  std::string format = "matrix";
  std::string out_path;
  gen_cmd->add_option("kind", kind, "generator kind")->required();
  gen_cmd->add_option("params", params, "size parameters");
  gen_cmd->add_option("--seed", seed, "seed for random kinds");
  auto* family_opt = gen_cmd->add_option(
      "--family", family_text,
      "example2 subsets as '1,2,3;2,4' (default: all suffixes)");
  gen_cmd->add_option("--format", format, "matrix or edges")
      ->check(CLI::IsMember({"matrix", "edges"}));
  gen_cmd->add_option("-o,--output", out_path, "output path (default stdout)");

  // analyze
  auto* an_cmd = app.add_subcommand("analyze", "analyze a relation file");
  std::string input;
  AnalyzeOptions opts;
  std::string rows_text;
  int threads = 0;
  an_cmd->add_option("input", input, "matrix or edge-list file, '-' for stdin")
      ->required();
  an_cmd->add_option("--max-n", opts.max_n, "largest pattern length tried");
  an_cmd->add_option("--max-k", opts.max_k, "ladder search cap");
  an_cmd->add_option("--max-d", opts.max_d, "shattering search cap");
  an_cmd->add_option("--ladder-depth", opts.ladder_depth,
                     "ladder depth for the SOP-guarantee");
  an_cmd->add_option("--tail", opts.tail,
                     "stable-suffix length declaring convergence (0: auto)");
  an_cmd->add_option("--budget", opts.budget, "search node budget");
  auto* rows_opt = an_cmd->add_option(
      "--rows", rows_text, "explicit row order as comma-separated indices");
  an_cmd->add_option("--threads", threads, "worker threads (0: default)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "run an oracle equivalence suite");
  std::string suite;
  VerifyParams vp;
  int vthreads = 0;
  ver_cmd->add_option("suite", suite,
                      "lemma-bv | duality | dbsc | double-limit | ramsey | "
                      "witnesses | all")
      ->required();
  ver_cmd->add_option("--max", vp.max, "exhaustive dimension bound");
  ver_cmd->add_option("--count", vp.count, "random instance count");
  ver_cmd->add_option("--words", vp.words, "random word count (dbsc)");
  ver_cmd->add_option("--max-len", vp.max_len, "max word length (dbsc)");
  ver_cmd->add_option("--tail", vp.tail, "tail for double-limit");
  ver_cmd->add_option("--seed", vp.seed, "seed for random instances");
  ver_cmd->add_option("--threads", vthreads, "worker threads (0: default)");

  std::vector<const char*> argv;
  argv.push_back("relana");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "relana: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen_cmd->parsed()) {
      return cmd_gen(kind, params, seed, family_text, family_opt->count() > 0,
                     format, out_path, out, err);
    }
    if (an_cmd->parsed()) {
      set_threads(threads);
      if (rows_opt->count() > 0) opts.row_order = parse_index_list(rows_text);
      return cmd_analyze(input, opts, out, err);
    }
    if (ver_cmd->parsed()) {
      set_threads(vthreads);
      if (suite == "all") {
        int worst = 0;
        for (const char* s : {"lemma-bv", "duality", "dbsc", "double-limit",
                              "ramsey", "witnesses"}) {
          const int rc = run_suite(s, vp, out);
          worst = std::max(worst, rc);
          out << "\n";
        }
        return worst;
      }
      const int rc = run_suite(suite, vp, out);
      if (rc == 2) err << "relana: unknown suite '" << suite << "'\n";
      return rc;
    }
  } catch (const ParseError& e) {
    err << "relana: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "relana: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace relana::cli
