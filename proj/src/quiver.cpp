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

#include "quivcomp/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quivcomp {

Algebra::Algebra(int vertex_count, std::vector<Arrow> arrows, int loewy_length)
    : n_(vertex_count), arrows_(std::move(arrows)), loewy_(loewy_length) {
  if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (loewy_ < 1) throw std::invalid_argument("Loewy length must be at least 1");
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_) {
      throw std::invalid_argument("arrow '" + a.id + "' has an endpoint outside 1.." +
                                  std::to_string(n_));
    }
    if (a.id.empty()) throw std::invalid_argument("empty arrow id");
    if (!ids.insert(a.id).second) throw std::invalid_argument("duplicate arrow id '" + a.id + "'");
  }
}

int Algebra::arrow_index(std::string_view id) const {
  for (int k = 0; k < arrow_count(); ++k) {
    if (arrows_[k].id == id) return k;
  }
  throw std::invalid_argument("unknown arrow id '" + std::string(id) + "'");
}

std::vector<std::vector<int>> Algebra::adjacency() const {
  std::vector<std::vector<int>> b(n_, std::vector<int>(n_, 0));
  for (const auto& a : arrows_) ++b[a.source][a.target];
  return b;
}

Algebra Algebra::opposite() const {
  std::vector<Arrow> rev;
  rev.reserve(arrows_.size());
  for (const auto& a : arrows_) rev.push_back(Arrow{a.id, a.target, a.source});
  return Algebra(n_, std::move(rev), loewy_);
}

// ---------------------------------------------------------------------------

std::string to_string(const DimVector& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

static std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

DimVector parse_dim_vector(std::string_view text) {
  DimVector out;
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty dimension vector");
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = trim(text.substr(pos, next - pos));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) {
      throw std::invalid_argument("bad dimension entry '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

SemisimpleSequence::SemisimpleSequence(std::vector<DimVector> layers) : layers_(std::move(layers)) {
  for (const auto& l : layers_) {
    if (l.size() != layers_.front().size()) {
      throw std::invalid_argument("semisimple sequence layers have different lengths");
    }
    if (std::any_of(l.begin(), l.end(), [](int x) { return x < 0; })) {
      throw std::invalid_argument("negative multiplicity in semisimple sequence");
    }
  }
}

DimVector SemisimpleSequence::total() const {
  DimVector t(vertex_count(), 0);
  for (const auto& l : layers_)
    for (std::size_t i = 0; i < l.size(); ++i) t[i] += l[i];
  return t;
}

bool SemisimpleSequence::layer_is_zero(std::size_t l) const {
  const auto& v = layers_.at(l);
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::size_t SemisimpleSequence::depth() const {
  std::size_t d = 0;
  for (std::size_t l = 0; l < layers_.size(); ++l)
    if (!layer_is_zero(l)) d = l + 1;
  return d;
}

std::string to_string(const SemisimpleSequence& s) {
  std::string out;
  for (std::size_t l = 0; l < s.length(); ++l) {
    if (l) out += ';';
    out += to_string(s.layer(l));
  }
  return out;
}

SemisimpleSequence parse_sequence(std::string_view text) {
  std::vector<DimVector> layers;
  text = trim(text);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(';', pos);
    if (next == std::string_view::npos) next = text.size();
    layers.push_back(parse_dim_vector(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return SemisimpleSequence(std::move(layers));
}

// ---------------------------------------------------------------------------

QPath QPath::then(const Algebra& alg, int arrow) const {
  QPath q = *this;
  q.arrows.push_back(arrow);
  q.end = alg.arrow(arrow).target;
  return q;
}

std::string to_string(const QPath& p, const Algebra& alg) {
  if (p.arrows.empty()) return "e" + std::to_string(p.start + 1);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += alg.arrow(*it).id;
  }
  return out;
}

std::vector<QPath> enumerate_paths(const Algebra& alg, int from_len, int to_len) {
  if (to_len > alg.max_path_length()) {
    throw std::invalid_argument("enumerate_paths: length " + std::to_string(to_len) +
                                " exceeds L = " + std::to_string(alg.max_path_length()));
  }
  std::vector<QPath> out;
  std::vector<QPath> frontier;
  for (int i = 0; i < alg.vertex_count(); ++i) frontier.push_back(QPath::trivial(i));
  for (int len = 0; len <= to_len; ++len) {
    if (len >= from_len) out.insert(out.end(), frontier.begin(), frontier.end());
    if (len == to_len) break;
    std::vector<QPath> next;
    for (const auto& p : frontier) {
      for (int a = 0; a < alg.arrow_count(); ++a) {
        if (alg.arrow(a).source == p.end) next.push_back(p.then(alg, a));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool dominance_leq(const SemisimpleSequence& a, const SemisimpleSequence& b) {
  if (a.length() != b.length() || a.vertex_count() != b.vertex_count()) {
    throw std::invalid_argument("dominance_leq: sequences of different shapes");
  }
  if (a.total() != b.total()) {
    throw std::invalid_argument("dominance_leq: totals " + to_string(a.total()) + " and " +
                                to_string(b.total()) + " differ");
  }
  DimVector pa(a.vertex_count(), 0), pb(a.vertex_count(), 0);
  for (std::size_t l = 0; l < a.length(); ++l) {
    for (std::size_t i = 0; i < pa.size(); ++i) {
      pa[i] += a.layer(l)[i];
      pb[i] += b.layer(l)[i];
      if (pa[i] > pb[i]) return false;
    }
  }
  return true;
}

bool is_realizable(const Algebra& alg, const SemisimpleSequence& s) {
  const auto b = alg.adjacency();
  const int n = alg.vertex_count();
  for (std::size_t l = 1; l < s.length(); ++l) {
    for (int j = 0; j < n; ++j) {
      int bound = 0;
      for (int i = 0; i < n; ++i) bound += s.layer(l - 1)[i] * b[i][j];
      if (s.layer(l)[j] > bound) return false;
    }
  }
  return true;
}

std::vector<SemisimpleSequence> enumerate_sequences(const Algebra& alg, const DimVector& d,
                                                    bool realizable_only) {
  const int n = alg.vertex_count();
  const int layers = alg.loewy_length();
  if (static_cast<int>(d.size()) != n) {
    throw std::invalid_argument("dimension vector has " + std::to_string(d.size()) +
                                " entries for a quiver with " + std::to_string(n) + " vertices");
  }
  const bool d_zero = std::all_of(d.begin(), d.end(), [](int x) { return x == 0; });
  std::vector<SemisimpleSequence> out;
  std::vector<DimVector> cur(layers, DimVector(n, 0));
  DimVector remaining = d;
  // fill layer by layer, vertex by vertex; ascending values give lexicographic order
  std::function<void(int, int)> rec = [&](int l, int i) {
    if (i == n) {
      rec(l + 1, 0);
      return;
    }
    if (l == layers - 1) {
      // last layer takes whatever remains
      for (int v = 0; v < n; ++v) cur[l][v] = remaining[v];
      if (!d_zero && layers > 0 &&
          std::all_of(cur[0].begin(), cur[0].end(), [](int x) { return x == 0; })) {
        return;
      }
      SemisimpleSequence s(cur);
      if (!realizable_only || is_realizable(alg, s)) out.push_back(std::move(s));
      return;
    }
    for (int v = 0; v <= remaining[i]; ++v) {
      cur[l][i] = v;
      remaining[i] -= v;
      rec(l, i + 1);
      remaining[i] += v;
    }
    cur[l][i] = 0;
  };
  rec(0, 0);
  return out;
}

SemisimpleSequence semisimple_sequence(const Algebra& alg, const DimVector& d) {
  std::vector<DimVector> layers(alg.loewy_length(), DimVector(alg.vertex_count(), 0));
  layers[0] = d;
  return SemisimpleSequence(std::move(layers));
}

}  // namespace quivcomp
