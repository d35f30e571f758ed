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

#include "quivcomp/skeleta.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace quivcomp {

std::string to_string(const ProjPath& p, const Algebra& alg) {
  std::string z = "z" + std::to_string(p.generator + 1);
  if (p.path.arrows.empty()) return z;
  return to_string(p.path, alg) + "*" + z;
}

int Skeleton::index_of(const ProjPath& p) const {
  auto it = std::lower_bound(paths.begin(), paths.end(), p);
  if (it != paths.end() && *it == p) return static_cast<int>(it - paths.begin());
  return -1;
}

DimVector Skeleton::dims(const Algebra& alg) const {
  DimVector d(alg.vertex_count(), 0);
  for (const auto& p : paths) ++d[p.end()];
  return d;
}

SemisimpleSequence Skeleton::layering(const Algebra& alg) const {
  std::vector<DimVector> layers(alg.loewy_length(), DimVector(alg.vertex_count(), 0));
  for (const auto& p : paths) ++layers.at(p.length())[p.end()];
  return SemisimpleSequence(std::move(layers));
}

std::vector<int> top_generators(const SemisimpleSequence& s) {
  std::vector<int> g;
  if (s.length() == 0) return g;
  for (std::size_t i = 0; i < s.vertex_count(); ++i)
    for (int k = 0; k < s.layer(0)[i]; ++k) g.push_back(static_cast<int>(i));
  return g;
}

std::optional<std::string> validate_skeleton(const Algebra& alg, const Skeleton& sk,
                                             const SemisimpleSequence& s) {
  if (sk.generator_vertex != top_generators(s)) return "generators do not match the top layer";
  if (!std::is_sorted(sk.paths.begin(), sk.paths.end())) return "paths not sorted";
  for (std::size_t k = 1; k < sk.paths.size(); ++k)
    if (sk.paths[k] == sk.paths[k - 1]) return "duplicate path";
  for (const auto& p : sk.paths) {
    if (p.generator < 0 || p.generator >= static_cast<int>(sk.generator_vertex.size()))
      return "unknown generator";
    if (p.path.start != sk.generator_vertex[p.generator]) return "path starts at the wrong vertex";
    if (p.length() > alg.max_path_length()) return "path longer than L";
    int v = p.path.start;
    for (int a : p.path.arrows) {
      if (alg.arrow(a).source != v) return "path does not compose";
      v = alg.arrow(a).target;
    }
    if (v != p.end()) return "path end vertex is wrong";
    // initial subpath closure: dropping the last arrow must stay inside
    if (!p.path.arrows.empty()) {
      ProjPath parent = p;
      parent.path.arrows.pop_back();
      parent.path.end = parent.path.arrows.empty() ? parent.path.start
                                                   : alg.arrow(parent.path.arrows.back()).target;
      if (!sk.contains(parent)) return "not closed under initial subpaths: " + to_string(p, alg);
    }
  }
  for (int r = 0; r < static_cast<int>(sk.generator_vertex.size()); ++r) {
    ProjPath z{r, QPath::trivial(sk.generator_vertex[r])};
    if (!sk.contains(z)) return "missing generator z" + std::to_string(r + 1);
  }
  if (sk.layering(alg) != s) return "layer counts differ from the sequence";
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

// calls fn on each k-subset of {0..n-1} in lexicographic order; fn returns false to stop
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (!fn(c)) return false;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

std::vector<ProjPath> extensions(const Algebra& alg, const std::vector<ProjPath>& level) {
  std::vector<ProjPath> out;
  for (const auto& p : level)
    for (int a = 0; a < alg.arrow_count(); ++a)
      if (alg.arrow(a).source == p.end()) out.push_back(ProjPath{p.generator, p.path.then(alg, a)});
  return out;
}

}  // namespace

std::vector<Skeleton> enumerate_skeleta(const Algebra& alg, const SemisimpleSequence& s,
                                        std::size_t limit) {
  if (static_cast<int>(s.length()) != alg.loewy_length() ||
      static_cast<int>(s.vertex_count()) != alg.vertex_count()) {
    throw std::invalid_argument("sequence shape does not match the algebra");
  }
  const int n = alg.vertex_count();
  Skeleton base;
  base.generator_vertex = top_generators(s);
  std::vector<ProjPath> level0;
  for (int r = 0; r < static_cast<int>(base.generator_vertex.size()); ++r)
    level0.push_back(ProjPath{r, QPath::trivial(base.generator_vertex[r])});

  std::vector<Skeleton> out;
  std::vector<ProjPath> chosen = level0;

  std::function<bool(std::size_t, const std::vector<ProjPath>&)> layer =
      [&](std::size_t l, const std::vector<ProjPath>& prev) -> bool {
    if (l == s.length()) {
      Skeleton sk = base;
      sk.paths = chosen;
      std::sort(sk.paths.begin(), sk.paths.end());
      out.push_back(std::move(sk));
      return limit == 0 || out.size() < limit;
    }
    auto cand = extensions(alg, prev);
    std::vector<std::vector<ProjPath>> by_vertex(n);
    for (auto& q : cand) by_vertex[q.end()].push_back(std::move(q));
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(by_vertex[i].size()) < s.layer(l)[i]) return true;

    std::vector<ProjPath> next;
    std::function<bool(int)> vertex = [&](int i) -> bool {
      if (i == n) {
        const std::size_t mark = chosen.size();
        chosen.insert(chosen.end(), next.begin(), next.end());
        std::vector<ProjPath> lvl = next;
        std::sort(lvl.begin(), lvl.end());
        bool go = layer(l + 1, lvl);
        chosen.resize(mark);
        return go;
      }
      const auto& pool = by_vertex[i];
      return for_each_combination(static_cast<int>(pool.size()), s.layer(l)[i],
                                  [&](const std::vector<int>& pick) {
                                    const std::size_t mark = next.size();
                                    for (int k : pick) next.push_back(pool[k]);
                                    bool go = vertex(i + 1);
                                    next.resize(mark);
                                    return go;
                                  });
    };
    return vertex(0);
  };
  layer(1, level0);
  return out;
}

std::vector<CriticalPath> critical_paths(const Algebra& alg, const Skeleton& sk) {
  std::vector<CriticalPath> out;
  for (const auto& p : sk.paths) {
    if (p.length() >= alg.max_path_length()) continue;
    for (int a = 0; a < alg.arrow_count(); ++a) {
      if (alg.arrow(a).source != p.end()) continue;
      ProjPath q{p.generator, p.path.then(alg, a)};
      if (sk.contains(q)) continue;
      CriticalPath c{q, {}};
      for (int k = 0; k < static_cast<int>(sk.paths.size()); ++k) {
        const auto& x = sk.paths[k];
        if (x.length() >= q.length() && x.end() == q.end()) c.sigma_q.push_back(k);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<int> HyperEdge::support() const {
  std::vector<int> t;
  for (std::size_t k = 0; k < sigma_q.size(); ++k)
    if (coeffs.at(k) != 0) t.push_back(sigma_q[k]);
  return t;
}

// ---------------------------------------------------------------------------

RepPoint realize(const Algebra& alg, FiniteField field, const Skeleton& sk,
                 const std::vector<std::vector<Scalar>>& coeffs) {
  const DimVector d = sk.dims(alg);
  // position of each skeleton path inside its vertex component
  std::vector<int> local(sk.paths.size());
  {
    DimVector seen(alg.vertex_count(), 0);
    for (std::size_t k = 0; k < sk.paths.size(); ++k) local[k] = seen[sk.paths[k].end()]++;
  }
  std::vector<Matrix> mats;
  for (const auto& a : alg.arrows()) mats.emplace_back(field, d[a.target], d[a.source]);

  const auto crit = critical_paths(alg, sk);
  if (coeffs.size() != crit.size()) {
    throw std::invalid_argument("expected coefficients for " + std::to_string(crit.size()) +
                                " critical paths, got " + std::to_string(coeffs.size()));
  }
  std::size_t next_crit = 0;
  for (std::size_t k = 0; k < sk.paths.size(); ++k) {
    const auto& p = sk.paths[k];
    if (p.length() >= alg.max_path_length()) continue;  // alpha p has length L+1
    for (int a = 0; a < alg.arrow_count(); ++a) {
      if (alg.arrow(a).source != p.end()) continue;
      ProjPath q{p.generator, p.path.then(alg, a)};
      int idx = sk.index_of(q);
      if (idx >= 0) {
        mats[a](local[idx], local[k]) = 1;
        continue;
      }
      const auto& c = crit.at(next_crit);
      const auto& w = coeffs[next_crit];
      ++next_crit;
      if (w.size() != c.sigma_q.size())
        throw std::invalid_argument("coefficient vector for " + to_string(q, alg) +
                                    " has the wrong length");
      for (std::size_t j = 0; j < w.size(); ++j)
        mats[a](local[c.sigma_q[j]], local[k]) = field.reduce(w[j]);
    }
  }
  return RepPoint(alg, field, d, std::move(mats));
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  auto sm = [](std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  };
  return sm(sm(sm(a) ^ b) ^ c);
}

GenericModule generic_module(const Algebra& alg, FiniteField field, const Skeleton& sk,
                             std::uint64_t seed, int retries) {
  const auto crit = critical_paths(alg, sk);
  const auto target = sk.layering(alg);
  std::uint64_t cur = seed;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    std::mt19937_64 rng(cur);
    std::uniform_int_distribution<std::uint32_t> nonzero(1, field.p() - 1);
    std::vector<std::vector<Scalar>> coeffs;
    for (const auto& c : crit) {
      std::vector<Scalar> w(c.sigma_q.size());
      for (auto& x : w) x = nonzero(rng);
      coeffs.push_back(std::move(w));
    }
    RepPoint m = realize(alg, field, sk, coeffs);
    if (radical_layering(m) == target) {
      Hypergraph h{sk, {}};
      for (std::size_t k = 0; k < crit.size(); ++k)
        h.edges.push_back(HyperEdge{crit[k].q, crit[k].sigma_q, coeffs[k]});
      return GenericModule{std::move(m), std::move(h), cur};
    }
    cur = mix_seed(seed, static_cast<std::uint64_t>(attempt) + 1);
  }
  throw GenericityError("genericity failure over " + field.name() +
                        "; increase p or retries");
}

// ---------------------------------------------------------------------------

namespace {

Vec apply_path(const RepPoint& m, const QPath& p, Vec v) {
  for (int a : p.arrows) v = m.matrix(a).apply(v);
  return v;
}

// basis vectors of vertex i in skeleton order, given top elements
std::vector<std::vector<Vec>> skeleton_vectors(const RepPoint& m, const Skeleton& sk,
                                               const TopElements& z) {
  std::vector<std::vector<Vec>> out(m.dims().size());
  for (const auto& p : sk.paths) out[p.end()].push_back(apply_path(m, p.path, z.at(p.generator)));
  return out;
}

// vertex where the skeleton vectors fail to be a basis, with the rank found
std::optional<std::pair<int, int>> rank_deficiency(const RepPoint& m, const Skeleton& sk,
                                                   const TopElements& z) {
  auto vecs = skeleton_vectors(m, sk, z);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    const int need = m.dims()[i];
    int r = static_cast<int>(Subspace::span(m.field(), need, vecs[i]).dim());
    if (static_cast<int>(vecs[i].size()) != need || r != need)
      return std::make_pair(static_cast<int>(i), r);
  }
  return std::nullopt;
}

// lift number t: 0 is the greedy echelon lift
std::optional<TopElements> make_lift(const RepPoint& m, const Skeleton& sk, int t,
                                     std::uint64_t seed) {
  const FiniteField& f = m.field();
  const auto rad = radical_layer_spaces(m);
  const GradedSubspace& jm = rad.at(1);
  TopElements z(sk.generator_vertex.size());
  std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
  std::uniform_int_distribution<std::uint32_t> any(0, f.order() - 1);
  for (int i = 0; i < static_cast<int>(m.dims().size()); ++i) {
    std::vector<int> gens;
    for (int r = 0; r < static_cast<int>(sk.generator_vertex.size()); ++r)
      if (sk.generator_vertex[r] == i) gens.push_back(r);
    Subspace c = complement_in(jm.part(i), Subspace::full(f, m.dims()[i]));
    if (c.dim() != gens.size()) return std::nullopt;
    const std::size_t di = m.dims()[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      Vec v(di, 0);
      if (t == 0) {
        v = c.basis().row_vec(g);
      } else {
        for (std::size_t k = 0; k < c.dim(); ++k) {
          Scalar s = any(rng);
          for (std::size_t x = 0; x < di; ++x) v[x] = f.add(v[x], f.mul(s, c.basis()(k, x)));
        }
        for (std::size_t k = 0; k < jm.part(i).dim(); ++k) {
          Scalar s = any(rng);
          for (std::size_t x = 0; x < di; ++x)
            v[x] = f.add(v[x], f.mul(s, jm.part(i).basis()(k, x)));
        }
      }
      z[gens[g]] = std::move(v);
    }
  }
  return z;
}

}  // namespace

std::optional<TopElements> find_top_elements(const RepPoint& m, const Skeleton& sk,
                                             int random_lifts, std::uint64_t seed) {
  if (sk.dims(m.algebra()) != m.dims()) return std::nullopt;
  for (int t = 0; t <= random_lifts; ++t) {
    auto z = make_lift(m, sk, t, seed);
    if (!z) return std::nullopt;
    if (!rank_deficiency(m, sk, *z)) return z;
  }
  return std::nullopt;
}

std::vector<Skeleton> skeleta_of(const RepPoint& m, int random_lifts, std::uint64_t seed) {
  std::vector<Skeleton> out;
  for (auto& sk : enumerate_skeleta(m.algebra(), radical_layering(m))) {
    if (find_top_elements(m, sk, random_lifts, seed)) out.push_back(std::move(sk));
  }
  return out;
}

Hypergraph extract_hypergraph(const RepPoint& m, const Skeleton& sk) {
  const Algebra& alg = m.algebra();
  auto z = find_top_elements(m, sk);
  if (!z) {
    auto greedy = make_lift(m, sk, 0, 0);
    std::string why = "top layer does not match the skeleton's generators";
    if (greedy) {
      if (auto bad = rank_deficiency(m, sk, *greedy)) {
        why = "rank " + std::to_string(bad->second) + " instead of " +
              std::to_string(m.dims()[bad->first]) + " at vertex " +
              std::to_string(bad->first + 1);
      }
    }
    throw std::invalid_argument("not a skeleton of the module: " + why);
  }
  const FiniteField& f = m.field();
  auto vecs = skeleton_vectors(m, sk, *z);
  // per vertex: vertex-local index -> skeleton index
  std::vector<std::vector<int>> global(m.dims().size());
  for (std::size_t k = 0; k < sk.paths.size(); ++k) global[sk.paths[k].end()].push_back(k);

  Hypergraph h{sk, {}};
  for (const auto& c : critical_paths(alg, sk)) {
    const int i = c.q.end();
    const std::size_t di = m.dims()[i];
    Vec rhs = apply_path(m, c.q.path, z->at(c.q.generator));
    // solve B x = rhs via the rref of [B | rhs]
    Matrix aug(f, di, di + 1);
    for (std::size_t col = 0; col < di; ++col)
      for (std::size_t r = 0; r < di; ++r) aug(r, col) = vecs[i][col][r];
    for (std::size_t r = 0; r < di; ++r) aug(r, di) = rhs[r];
    Matrix red = rref(aug);
    std::map<int, Scalar> coord;
    for (std::size_t r = 0; r < di; ++r) coord[global[i][r]] = red(r, di);
    HyperEdge e{c.q, c.sigma_q, {}};
    std::set<int> allowed(c.sigma_q.begin(), c.sigma_q.end());
    for (const auto& [k, v] : coord) {
      if (v != 0 && !allowed.count(k))
        throw std::logic_error("critical path expands outside its sigma_q");
    }
    for (int k : c.sigma_q) e.coeffs.push_back(coord.at(k));
    h.edges.push_back(std::move(e));
  }
  return h;
}

// ---------------------------------------------------------------------------

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string node_name(const ProjPath& p, const Algebra& alg) {
  return std::to_string(p.generator + 1) + ":" + to_string(p.path, alg);
}

ProjPath parent_of(const ProjPath& p, const Algebra& alg) {
  ProjPath q = p;
  q.path.arrows.pop_back();
  q.path.end = q.path.arrows.empty() ? q.path.start : alg.arrow(q.path.arrows.back()).target;
  return q;
}

}  // namespace

std::string to_dot(const Hypergraph& h, const Algebra& alg) {
  std::ostringstream os;
  os << "digraph hypergraph {\n";
  os << "  node [shape=plaintext];\n";
  const auto& sk = h.skeleton;
  for (const auto& p : sk.paths)
    os << "  " << dot_quote(node_name(p, alg)) << " [label=" << dot_quote(to_string(p, alg))
       << "];\n";
  for (const auto& p : sk.paths) {
    if (p.path.arrows.empty()) continue;
    os << "  " << dot_quote(node_name(parent_of(p, alg), alg)) << " -> "
       << dot_quote(node_name(p, alg))
       << " [label=" << dot_quote(alg.arrow(p.path.arrows.back()).id) << "];\n";
  }
  for (const auto& e : h.edges) {
    auto tau = e.support();
    if (tau.empty()) continue;
    const std::string from = dot_quote(node_name(parent_of(e.q, alg), alg));
    const std::string label = dot_quote(alg.arrow(e.q.path.arrows.back()).id);
    if (tau.size() == 1) {
      os << "  " << from << " -> " << dot_quote(node_name(sk.paths[tau[0]], alg))
         << " [style=dashed, label=" << label << "];\n";
      continue;
    }
    const std::string pool = dot_quote("pool:" + node_name(e.q, alg));
    os << "  " << pool << " [shape=point];\n";
    os << "  " << from << " -> " << pool << " [style=dashed, label=" << label << "];\n";
    for (int k : tau)
      os << "  " << pool << " -> " << dot_quote(node_name(sk.paths[k], alg))
         << " [style=dotted, arrowhead=none];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace quivcomp
