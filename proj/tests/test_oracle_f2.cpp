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

// The flag search against an exhaustive F_2 oracle that shares no code with it.
#include <doctest.h>

#include <set>

#include "quivcomp/filt.hpp"
#include "support/brute_f2.hpp"
#include "support/gen.hpp"

using namespace quivcomp;

namespace {

std::vector<Algebra> quivers(int loewy) {
  std::vector<Algebra> out;
  for (int n = 1; n <= 2; ++n) {
    std::vector<std::pair<int, int>> ends;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) ends.push_back({s, t});
    out.push_back(Algebra(n, {}, loewy));
    for (std::size_t i = 0; i < ends.size(); ++i) {
      out.push_back(Algebra(n, {{"x", ends[i].first, ends[i].second}}, loewy));
      for (std::size_t j = i; j < ends.size(); ++j)
        out.push_back(Algebra(
            n, {{"x", ends[i].first, ends[i].second}, {"y", ends[j].first, ends[j].second}}, loewy));
    }
  }
  return out;
}

std::vector<DimVector> dims_upto(int n, int max_total) {
  std::vector<DimVector> out;
  for (int a = 0; a <= max_total; ++a)
    for (int b = 0; b <= (n == 2 ? max_total - a : 0); ++b)
      if (a + b > 0) out.push_back(n == 2 ? DimVector{a, b} : DimVector{a});
  return out;
}

}  // namespace

TEST_CASE("has_filtration agrees with brute force over F_2") {
  // n <= 2, <= 2 arrows, L <= 2, |d| <= 4, 50 modules each
  FiniteField f(2);
  gen::Rng rng(2024);
  long queries = 0, agreed_yes = 0;
  for (int loewy = 1; loewy <= 3; ++loewy)
    for (const Algebra& a : quivers(loewy))
      for (const DimVector& d : dims_upto(a.vertex_count(), 4)) {
        auto seqs = enumerate_sequences(a, d, true);
        for (int t = 0; t < 50; ++t) {
          RepPoint m = gen::module(rng, a, f, d, t % 2 ? 0.8 : 0.4);
          brute::Rep2 b(m);
          auto subs = brute::all_submodules(b);
          for (const auto& s : seqs) {
            const bool want = brute::governs(b, subs, s);
            auto got = has_filtration(m, s);
            REQUIRE(got.decision != Decision::undecided);
            if ((got.decision == Decision::yes) != want) {
              CAPTURE(to_string(s));
              CAPTURE(to_string(d));
              FAIL("disagreement");
            }
            ++queries;
            agreed_yes += want;
          }
        }
      }
  MESSAGE(queries << " queries, " << agreed_yes << " governed");
  CHECK(agreed_yes > 0);
  CHECK(agreed_yes < queries);
}

TEST_CASE("realizable means some F_2 module has that layering") {
  // exhaustive over every F_2 module on the grid
  FiniteField f(2);
  for (int loewy = 1; loewy <= 3; ++loewy)
    for (const Algebra& a : quivers(loewy))
      for (const DimVector& d : dims_upto(a.vertex_count(), 3)) {
        std::vector<std::pair<int, int>> shape;
        int bits = 0;
        for (const auto& ar : a.arrows()) {
          shape.push_back({d[ar.target], d[ar.source]});
          bits += d[ar.target] * d[ar.source];
        }
        if (bits > 14) continue;
        std::set<std::string> seen;
        for (std::uint32_t code = 0; code < (1u << bits); ++code) {
          std::vector<Matrix> mats;
          int pos = 0;
          for (auto [r, c] : shape) {
            Matrix m(f, r, c);
            for (int i = 0; i < r; ++i)
              for (int j = 0; j < c; ++j) m(i, j) = code >> pos++ & 1u;
            mats.push_back(m);
          }
          try {
            seen.insert(to_string(radical_layering(RepPoint(a, f, d, mats))));
          } catch (const std::invalid_argument&) {
            // J^{L+1} != 0
          }
        }
        std::set<std::string> want;
        for (const auto& s : enumerate_sequences(a, d, true)) want.insert(to_string(s));
        CAPTURE(to_string(d));
        CHECK(seen == want);
      }
}
