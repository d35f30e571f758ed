/*
 * Copyright 2026 The quivcomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "quivcomp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace quivcomp {

ParseError::ParseError(int line, const std::string& msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
      line_(line) {}

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

// strips comments, splits on whitespace, drops blank lines
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string raw(text.substr(pos, nl - pos));
    ++number;
    pos = nl + 1;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    std::istringstream in(raw);
    Line ln{number, {}};
    for (std::string w; in >> w;) ln.words.push_back(w);
    if (!ln.words.empty()) out.push_back(std::move(ln));
  }
  return out;
}

std::int64_t to_int(const std::string& w, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size())
    throw ParseError(line, "expected an integer, got '" + w + "'");
  return v;
}

int to_vertex(const std::string& w, int n, int line) {
  std::int64_t v = to_int(w, line);
  if (v < 1 || v > n)
    throw ParseError(line, "vertex " + w + " is outside 1.." + std::to_string(n));
  return static_cast<int>(v - 1);
}

}  // namespace

Algebra parse_quiver(std::string_view text) {
  int n = -1, loewy = -1;
  std::vector<Arrow> arrows;
  std::vector<int> arrow_lines;
  for (const auto& ln : tokenize(text)) {
    const auto& w = ln.words;
    if (w[0] == "vertices") {
      if (w.size() != 2) throw ParseError(ln.number, "usage: vertices N");
      if (n >= 0) throw ParseError(ln.number, "vertices given twice");
      n = static_cast<int>(to_int(w[1], ln.number));
      if (n < 1) throw ParseError(ln.number, "need at least one vertex");
    } else if (w[0] == "loewy") {
      if (w.size() != 2) throw ParseError(ln.number, "usage: loewy L+1");
      if (loewy >= 0) throw ParseError(ln.number, "loewy given twice");
      loewy = static_cast<int>(to_int(w[1], ln.number));
      if (loewy < 1) throw ParseError(ln.number, "Loewy length must be at least 1");
    } else if (w[0] == "arrow") {
      // "1 -> 2", "1->2" and "1 ->2" all mean the same
      std::string rest;
      for (std::size_t j = 2; j < w.size(); ++j) rest += w[j];
      const std::size_t arrow_at = rest.find("->");
      if (w.size() < 3 || arrow_at == std::string::npos || arrow_at == 0 ||
          arrow_at + 2 >= rest.size())
        throw ParseError(ln.number, "usage: arrow <id> <src> -> <dst>");
      if (n < 0) throw ParseError(ln.number, "arrow before vertices");
      const std::string& id = w[1];
      const bool reserved = id.size() > 1 && (id[0] == 'z' || id[0] == 'e') &&
                            id.find_first_not_of("0123456789", 1) == std::string::npos;
      if (id.find_first_of("*;,#") != std::string::npos || reserved)
        throw ParseError(ln.number, "arrow id '" + id + "' is reserved or contains * ; , #");
      for (const auto& a : arrows)
        if (a.id == id) throw ParseError(ln.number, "duplicate arrow id '" + id + "'");
      arrows.push_back(Arrow{id, to_vertex(rest.substr(0, arrow_at), n, ln.number),
                             to_vertex(rest.substr(arrow_at + 2), n, ln.number)});
      arrow_lines.push_back(ln.number);
    } else {
      throw ParseError(ln.number, "unknown keyword '" + w[0] + "'");
    }
  }
  if (n < 0) throw ParseError(0, "missing 'vertices' line");
  if (loewy < 0) throw ParseError(0, "missing 'loewy' line");
  try {
    return Algebra(n, std::move(arrows), loewy);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_quiver(const Algebra& alg) {
  std::ostringstream out;
  out << "vertices " << alg.vertex_count() << "\n";
  for (const auto& a : alg.arrows())
    out << "arrow " << a.id << " " << a.source + 1 << " -> " << a.target + 1 << "\n";
  out << "loewy " << alg.loewy_length() << "\n";
  return out.str();
}

RepPoint parse_module(const Algebra& alg, const FiniteField& field, std::string_view text) {
  const auto lines = tokenize(text);
  std::size_t k = 0;
  if (lines.empty() || lines[0].words[0] != "dim" || lines[0].words.size() != 2)
    throw ParseError(lines.empty() ? 0 : lines[0].number, "module must start with 'dim d_1,...,d_n'");
  DimVector d;
  try {
    d = parse_dim_vector(lines[0].words[1]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].number, e.what());
  }
  if (static_cast<int>(d.size()) != alg.vertex_count())
    throw ParseError(lines[0].number, "dimension vector has " + std::to_string(d.size()) +
                                          " entries for " + std::to_string(alg.vertex_count()) +
                                          " vertices");
  for (int x : d)
    if (x < 0) throw ParseError(lines[0].number, "negative dimension");
  ++k;

  std::vector<std::optional<Matrix>> mats(alg.arrow_count());
  while (k < lines.size()) {
    const Line& head = lines[k++];
    if (head.words[0] != "mat" || head.words.size() != 2)
      throw ParseError(head.number, "expected 'mat <arrow-id>'");
    int a = -1;
    for (int j = 0; j < alg.arrow_count(); ++j)
      if (alg.arrow(j).id == head.words[1]) a = j;
    if (a < 0) throw ParseError(head.number, "unknown arrow '" + head.words[1] + "'");
    if (mats[a]) throw ParseError(head.number, "second block for arrow '" + head.words[1] + "'");
    const std::size_t rows = d[alg.arrow(a).target], cols = d[alg.arrow(a).source];
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      if (k >= lines.size() || lines[k].words[0] == "mat")
        throw ParseError(k < lines.size() ? lines[k].number : head.number,
                         "arrow '" + head.words[1] + "' needs " + std::to_string(rows) + " rows");
      const Line& row = lines[k++];
      if (row.words.size() != cols)
        throw ParseError(row.number, "expected " + std::to_string(cols) + " entries, got " +
                                         std::to_string(row.words.size()));
      for (std::size_t c = 0; c < cols; ++c) {
        std::int64_t v = to_int(row.words[c], row.number);
        if (field.degree() == 1) {
          m(r, c) = field.reduce(v);
        } else {
          if (v < 0 || v >= field.order())
            throw ParseError(row.number, "entry " + row.words[c] + " is not an element of " +
                                             field.name());
          m(r, c) = static_cast<Scalar>(v);
        }
      }
    }
    mats[a] = std::move(m);
  }
  std::vector<Matrix> out;
  for (int a = 0; a < alg.arrow_count(); ++a)
    out.push_back(mats[a] ? *mats[a]
                          : Matrix(field, d[alg.arrow(a).target], d[alg.arrow(a).source]));
  try {
    return RepPoint(alg, field, d, std::move(out));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_module(const RepPoint& m) {
  std::ostringstream out;
  out << "dim " << to_string(m.dims()) << "\n";
  for (int a = 0; a < m.algebra().arrow_count(); ++a) {
    const Matrix& x = m.matrix(a);
    if (x.rows() == 0 || x.cols() == 0) continue;  // no lines to write; absent reads as zero
    out << "mat " << m.algebra().arrow(a).id << "\n";
    for (std::size_t r = 0; r < x.rows(); ++r) {
      for (std::size_t c = 0; c < x.cols(); ++c) out << (c ? " " : "") << x(r, c);
      out << "\n";
    }
  }
  return out.str();
}

Skeleton parse_skeleton(const Algebra& alg, std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].words[0] != "top" || lines[0].words.size() != 2)
    throw ParseError(lines.empty() ? 0 : lines[0].number, "skeleton must start with 'top v_1,...'");
  Skeleton sk;
  {
    std::string list = lines[0].words[1];
    std::size_t pos = 0;
    while (pos <= list.size()) {
      std::size_t c = list.find(',', pos);
      if (c == std::string::npos) c = list.size();
      sk.generator_vertex.push_back(
          to_vertex(list.substr(pos, c - pos), alg.vertex_count(), lines[0].number));
      pos = c + 1;
    }
  }
  const int gens = static_cast<int>(sk.generator_vertex.size());
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& ln = lines[k];
    if (ln.words.size() != 1) throw ParseError(ln.number, "one path per line");
    std::vector<std::string> parts;
    std::string w = ln.words[0];
    std::size_t pos = 0;
    while (true) {
      std::size_t s = w.find('*', pos);
      parts.push_back(w.substr(pos, s == std::string::npos ? std::string::npos : s - pos));
      if (s == std::string::npos) break;
      pos = s + 1;
    }
    const std::string& z = parts.back();
    if (z.size() < 2 || z[0] != 'z') throw ParseError(ln.number, "path must end in z<r>");
    const int r = static_cast<int>(to_int(z.substr(1), ln.number));
    if (r < 1 || r > gens)
      throw ParseError(ln.number, "generator " + z + " is not on the top line");
    ProjPath p{r - 1, QPath::trivial(sk.generator_vertex[r - 1])};
    // written right to left: the arrow next to z acts first
    for (std::size_t j = parts.size() - 1; j-- > 0;) {
      int a = -1;
      for (int t = 0; t < alg.arrow_count(); ++t)
        if (alg.arrow(t).id == parts[j]) a = t;
      if (a < 0) throw ParseError(ln.number, "unknown arrow '" + parts[j] + "'");
      if (alg.arrow(a).source != p.path.end)
        throw ParseError(ln.number, "arrow '" + parts[j] + "' does not compose in " + w);
      p.path = p.path.then(alg, a);
    }
    if (p.length() > alg.max_path_length())
      throw ParseError(ln.number, w + " is longer than the Loewy length allows");
    if (sk.contains(p)) throw ParseError(ln.number, "duplicate path " + w);
    sk.paths.insert(std::lower_bound(sk.paths.begin(), sk.paths.end(), p), p);
  }
  return sk;
}

std::string write_skeleton(const Skeleton& sk, const Algebra& alg) {
  std::ostringstream out;
  out << "top ";
  for (std::size_t r = 0; r < sk.generator_vertex.size(); ++r)
    out << (r ? "," : "") << sk.generator_vertex[r] + 1;
  out << "\n";
  for (const auto& p : sk.paths) out << to_string(p, alg) << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace quivcomp
