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

// Brute-force filtration oracle over F_2. Shares nothing with the flag
// search: vectors are bitmasks, a subspace is the bitmask of its elements,
// and every chain of submodules is enumerated outright. Small d only.

#ifndef QUIVCOMP_TESTS_BRUTE_F2_HPP
#define QUIVCOMP_TESTS_BRUTE_F2_HPP

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "quivcomp/quiver.hpp"
#include "quivcomp/rep.hpp"

namespace brute {

using Elems = std::uint32_t;  // bit v set <=> vector v in the subspace (d_i <= 4)

struct Rep2 {
  int n = 0;
  std::vector<int> d;
  struct Map {
    int src, dst;
    std::vector<unsigned> cols;  // image of basis vector c, as a bitmask
  };
  std::vector<Map> maps;

  explicit Rep2(const quivcomp::RepPoint& m) : n(m.algebra().vertex_count()), d(m.dims()) {
    for (int a = 0; a < m.algebra().arrow_count(); ++a) {
      const auto& ar = m.algebra().arrow(a);
      Map mp{ar.source, ar.target, {}};
      for (int c = 0; c < d[ar.source]; ++c) {
        unsigned v = 0;
        for (int r = 0; r < d[ar.target]; ++r)
          if (m.matrix(a)(r, c) & 1u) v |= 1u << r;
        mp.cols.push_back(v);
      }
      maps.push_back(std::move(mp));
    }
  }

  unsigned apply(const Map& mp, unsigned x) const {
    unsigned y = 0;
    for (int c = 0; c < d[mp.src]; ++c)
      if (x >> c & 1u) y ^= mp.cols[c];
    return y;
  }
};

inline Elems span(const std::vector<unsigned>& gens) {
  Elems s = 1;  // {0}
  for (unsigned g : gens) {
    Elems t = s;
    for (unsigned v = 0; v < 32; ++v)
      if (s >> v & 1u) t |= Elems(1) << (v ^ g);
    s = t;
  }
  return s;
}

inline int dim(Elems s) { return std::countr_zero(static_cast<unsigned>(std::popcount(s))); }

// every subspace of F_2^k (k <= 4), as element sets: spans of 4 generators
inline const std::vector<Elems>& all_subspaces(int k) {
  static std::vector<std::vector<Elems>> cache(5);
  auto& out = cache.at(k);
  if (out.empty()) {
    std::set<Elems> seen;
    const unsigned size = 1u << k;
    for (unsigned a = 0; a < size; ++a)
      for (unsigned b = a; b < size; ++b)
        for (unsigned c = b; c < size; ++c)
          for (unsigned e = c; e < size; ++e) seen.insert(span({a, b, c, e}));
    out.assign(seen.begin(), seen.end());
  }
  return out;
}

using Graded = std::vector<Elems>;

inline bool subset(const Graded& a, const Graded& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

// J U: span of all arrow images of U
inline Graded radical(const Rep2& m, const Graded& u) {
  std::vector<std::vector<unsigned>> gens(m.n);
  for (const auto& mp : m.maps)
    for (unsigned v = 0; v < 32; ++v)
      if (u[mp.src] >> v & 1u) gens[mp.dst].push_back(m.apply(mp, v));
  Graded out(m.n);
  for (int i = 0; i < m.n; ++i) out[i] = span(gens[i]);
  return out;
}

inline bool is_submodule(const Rep2& m, const Graded& u) { return subset(radical(m, u), u); }

inline std::vector<Graded> all_submodules(const Rep2& m) {
  std::vector<std::vector<Elems>> per(m.n);
  for (int i = 0; i < m.n; ++i) per[i] = all_subspaces(m.d[i]);  // copies; not hot
  std::vector<Graded> out;
  Graded cur(m.n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == m.n) {
      if (is_submodule(m, cur)) out.push_back(cur);
      return;
    }
    for (Elems s : per[i]) {
      cur[i] = s;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// does s govern a filtration of m? (every chain tried)
inline bool governs(const Rep2& m, const std::vector<Graded>& subs,
                    const quivcomp::SemisimpleSequence& s) {
  Graded full(m.n);
  for (int i = 0; i < m.n; ++i) full[i] = span([&] {
    std::vector<unsigned> g;
    for (int k = 0; k < m.d[i]; ++k) g.push_back(1u << k);
    return g;
  }());
  const int layers = static_cast<int>(s.length());
  auto rec = [&](auto&& self, int l, const Graded& cur) -> bool {
    if (l == layers) {
      for (Elems e : cur)
        if (e != 1u) return false;
      return true;
    }
    const Graded jm = radical(m, cur);
    for (const auto& nxt : subs) {
      if (!subset(nxt, cur) || !subset(jm, nxt)) continue;
      bool ok = true;
      for (int i = 0; i < m.n && ok; ++i) ok = dim(cur[i]) - dim(nxt[i]) == s.layer(l)[i];
      if (ok && self(self, l + 1, nxt)) return true;
    }
    return false;
  };
  return rec(rec, 0, full);
}

}  // namespace brute

#endif
