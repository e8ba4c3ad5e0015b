#include "relana/io.hpp"

#include <sstream>
#include <vector>

#include "relana/errors.hpp"

namespace relana::io {

namespace {

void emit_labels(std::ostringstream& out, const BitRelation& rel) {
  for (const auto& l : rel.row_labels()) out << "#row " << l << "\n";
  for (const auto& l : rel.col_labels()) out << "#col " << l << "\n";
}

}  // namespace

std::string emit_matrix(const BitRelation& rel) {
  std::ostringstream out;
  out << rel.n_rows() << " " << rel.n_cols() << "\n";
  for (std::size_t i = 0; i < rel.n_rows(); ++i) {
    for (std::size_t j = 0; j < rel.n_cols(); ++j)
      out << (rel.at(i, j) ? '1' : '0');
    out << "\n";
  }
  emit_labels(out, rel);
  return out.str();
}

std::string emit_edges(const BitRelation& rel) {
  std::ostringstream out;
  out << "edges " << rel.n_rows() << " " << rel.n_cols() << "\n";
  for (std::size_t i = 0; i < rel.n_rows(); ++i)
    for (std::size_t j = 0; j < rel.n_cols(); ++j)
      if (rel.at(i, j)) out << i + 1 << " " << j + 1 << "\n";
  emit_labels(out, rel);
  return out.str();
}

namespace {

struct Lines {
  std::vector<std::string> body;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

Lines split_lines(const std::string& text) {
  Lines out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("#row ", 0) == 0) {
      out.row_labels.push_back(line.substr(5));
    } else if (line.rfind("#col ", 0) == 0) {
      out.col_labels.push_back(line.substr(5));
    } else if (line.rfind("#", 0) == 0) {
      throw ParseError("unknown trailer line", line_no);
    } else if (!line.empty()) {
      out.body.push_back(line);
    }
  }
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
  if (tok.empty()) throw ParseError("missing dimension", line_no);
  std::size_t v = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') throw ParseError("bad dimension", line_no);
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

}  // namespace

BitRelation parse(const std::string& text) {
  Lines lines = split_lines(text);
  if (lines.body.empty()) throw ParseError("empty input", 1);

  std::istringstream head(lines.body[0]);
  std::string first;
  head >> first;

  std::size_t m = 0, n = 0;
  std::vector<std::uint8_t> entries;

  if (first == "edges") {
    std::string ms, ns, extra;
    head >> ms >> ns;
    if (head >> extra) throw ParseError("trailing tokens on header", 1);
    m = parse_count(ms, 1);
    n = parse_count(ns, 1);
    entries.assign(m * n, 0);
    for (std::size_t k = 1; k < lines.body.size(); ++k) {
      std::istringstream row(lines.body[k]);
      std::string is, js, more;
      row >> is >> js;
      if (is.empty() || js.empty() || (row >> more))
        throw ParseError("expected 'i j'", k + 1);
      const std::size_t i = parse_count(is, k + 1);
      const std::size_t j = parse_count(js, k + 1);
      if (i < 1 || i > m || j < 1 || j > n)
        throw ParseError("edge out of range", k + 1);
      entries[(i - 1) * n + (j - 1)] = 1;
    }
  } else {
    std::string ns, extra;
    head >> ns;
    if (head >> extra) throw ParseError("trailing tokens on header", 1);
    m = parse_count(first, 1);
    n = parse_count(ns, 1);
    if (lines.body.size() != m + 1)
      throw ParseError("expected " + std::to_string(m) + " matrix rows",
                       lines.body.size());
    entries.assign(m * n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::string& row = lines.body[i + 1];
      if (row.size() != n) throw ParseError("row length mismatch", i + 2);
      for (std::size_t j = 0; j < n; ++j) {
        if (row[j] != '0' && row[j] != '1')
          throw ParseError("matrix entries must be 0 or 1", i + 2);
        entries[i * n + j] = row[j] == '1' ? 1 : 0;
      }
    }
  }

  if (!lines.row_labels.empty() && lines.row_labels.size() != m)
    throw ParseError("row label count mismatch", 1);
  if (!lines.col_labels.empty() && lines.col_labels.size() != n)
    throw ParseError("col label count mismatch", 1);
  return BitRelation::build(m, n, entries, lines.row_labels, lines.col_labels);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t content_hash(const BitRelation& rel) {
  return fnv1a64(emit_matrix(rel));
}

}  // namespace relana::io
