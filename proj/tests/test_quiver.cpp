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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "quivcomp/quiver.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace quivcomp;

namespace {

SemisimpleSequence S(const char* t) { return parse_sequence(t); }

// nine layerings of d = (2,2) on the two-cycle, numbered S1..S9
const char* kNine[] = {
    nullptr,
    "1,0;0,1;1,0;0,1",  // 1
    "0,1;1,0;0,1;1,0",  // 2
    "1,0;0,2;1,0;0,0",  // 3
    "0,1;2,0;0,1;0,0",  // 4
    "2,0;0,2;0,0;0,0",  // 5
    "0,2;2,0;0,0;0,0",  // 6
    "1,1;1,1;0,0;0,0",  // 7
    "1,1;1,0;0,1;0,0",  // 8
    "1,1;0,1;1,0;0,0",  // 9
};

}  // namespace

TEST_CASE("algebra validation") {
  CHECK_THROWS_AS(Algebra(0, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Algebra(2, {{"a", 0, 2}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Algebra(2, {{"a", 0, 1}, {"a", 1, 0}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(Algebra(2, {}, 0), std::invalid_argument);
  Algebra a = fx::two_cycle(2, 1);
  CHECK(a.arrow_index("b1") == 2);
  CHECK_THROWS_AS(a.arrow_index("zz"), std::invalid_argument);
  auto b = a.adjacency();
  CHECK(b[0][1] == 2);
  CHECK(b[1][0] == 1);
  CHECK(a.opposite().adjacency()[1][0] == 2);
}

TEST_CASE("path enumeration") {
  SUBCASE("one loop, lengths 0..2") {
    auto ps = enumerate_paths(fx::one_loop(3), 0, 2);
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].length() == 0);
    CHECK(ps[2].length() == 2);
  }
  SUBCASE("1->2->3, length exactly 2") {
    Algebra a = fx::a3(3);
    auto ps = enumerate_paths(a, 2, 2);
    REQUIRE(ps.size() == 1);
    CHECK(to_string(ps[0], a) == "y*x");
  }
  SUBCASE("counts match the adjacency matrix powers") {
    // number of paths of length l = sum of entries of B^l
    Algebra a = fx::two_cycle(3, 2);
    auto b = a.adjacency();
    std::vector<std::vector<long>> pow = {{1, 0}, {0, 1}};
    for (int l = 0; l <= 3; ++l) {
      long total = 0;
      for (auto& row : pow)
        for (long x : row) total += x;
      CHECK(enumerate_paths(a, l, l).size() == static_cast<std::size_t>(total));
      std::vector<std::vector<long>> nxt(2, std::vector<long>(2, 0));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) nxt[i][j] += pow[i][k] * b[k][j];
      pow = nxt;
    }
  }
}

TEST_CASE("sequence text format") {
  auto s = S("1,0;0,1;1,0;0,1");
  CHECK(s.length() == 4);
  CHECK(s.vertex_count() == 2);
  CHECK(to_string(s) == "1,0;0,1;1,0;0,1");
  CHECK(s.total() == DimVector{2, 2});
  CHECK(s.depth() == 4);
  CHECK_THROWS_AS(parse_sequence("1,0;0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("1,-1"), std::invalid_argument);
  CHECK(parse_dim_vector("2,2") == DimVector{2, 2});
  CHECK_THROWS_AS(parse_dim_vector(""), std::invalid_argument);
}

TEST_CASE("dominance order on the nine (2,2) layerings") {
  CHECK(dominance_leq(S(kNine[1]), S(kNine[7])));
  CHECK_FALSE(dominance_leq(S(kNine[7]), S(kNine[1])));
  CHECK_FALSE(dominance_leq(S(kNine[1]), S(kNine[2])));
  CHECK_FALSE(dominance_leq(S(kNine[2]), S(kNine[1])));
  CHECK_FALSE(dominance_leq(S(kNine[3]), S(kNine[2])));  // incomparable
  CHECK_FALSE(dominance_leq(S(kNine[2]), S(kNine[3])));
  CHECK_FALSE(dominance_leq(S(kNine[5]), S(kNine[2])));
  CHECK(dominance_leq(S(kNine[1]), S(kNine[5])));
  CHECK_THROWS_AS(dominance_leq(S("1,0;0,1"), S(kNine[1])), std::invalid_argument);
  CHECK_THROWS_AS(dominance_leq(S("2,0;0,2;0,0;0,0"), S("2,0;0,1;0,0;0,1;0,0")),
                  std::invalid_argument);
}

TEST_CASE("realizability") {
  CHECK_FALSE(is_realizable(fx::two_cycle(2, 1), S("1,0;1,1;0,1;0,0")));
  CHECK_FALSE(is_realizable(fx::two_cycle(3, 3), S("1,0;0,1;1,1;0,0")));
  CHECK(is_realizable(fx::two_cycle(1, 1), S(kNine[5])));
  CHECK_FALSE(is_realizable(fx::two_cycle(1, 1), S(kNine[3])));  // needs r >= 2
  CHECK_FALSE(is_realizable(fx::two_cycle(2, 1), S(kNine[4])));  // needs s >= 2
  CHECK_FALSE(is_realizable(fx::two_cycle(1, 1), S("0,0;1,1;1,1;0,0")));  // empty top
  for (int j = 1; j <= 9; ++j) CHECK(is_realizable(fx::two_cycle(3, 3), S(kNine[j])));
}

TEST_CASE("sequence enumeration") {
  SUBCASE("1->2, L = 1, d = (1,1)") {
    Algebra a(2, {{"x", 0, 1}}, 2);
    // (S2, S1) is a sequence, but S1 is not below S2 * B = 0
    auto all = enumerate_sequences(a, {1, 1}, false);
    CHECK(all.size() == 3);
    auto real = enumerate_sequences(a, {1, 1}, true);
    REQUIRE(real.size() == 2);
    std::set<std::string> names{to_string(real[0]), to_string(real[1])};
    CHECK(names == std::set<std::string>{"1,1;0,0", "1,0;0,1"});
  }
  SUBCASE("the nine layerings are all realizable, r = s = 3") {
    auto real = enumerate_sequences(fx::two_cycle(3, 3), {2, 2}, true);
    std::set<std::string> names;
    for (const auto& s : real) names.insert(to_string(s));
    for (int j = 1; j <= 9; ++j) CHECK(names.count(kNine[j]) == 1);
    CHECK(names.count("2,2;0,0;0,0;0,0") == 1);  // S^(0)
    CHECK(std::is_sorted(real.begin(), real.end()));
  }
  SUBCASE("no empty top and every total is d") {
    gen::Rng rng(8);
    for (int t = 0; t < 40; ++t) {
      Algebra a = gen::algebra(rng, 3, 3, 3);
      DimVector d = gen::dims(rng, a.vertex_count(), 4);
      for (const auto& s : enumerate_sequences(a, d, false)) {
        CHECK(s.total() == d);
        CHECK_FALSE(s.layer_is_zero(0));
      }
    }
  }
  SUBCASE("count of all sequences is a product of compositions") {
    // sequences of total d over L+1 layers with S_0 != 0:
    // prod_i C(d_i + L, L) minus those with S_0 = 0, prod_i C(d_i + L - 1, L - 1)
    auto choose = [](int n, int k) {
      long r = 1;
      for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
      return r;
    };
    Algebra a = fx::two_cycle(1, 1, 3);
    for (DimVector d : {DimVector{1, 1}, DimVector{2, 1}, DimVector{2, 2}, DimVector{3, 0}}) {
      long all = 1, empty_top = 1;
      for (int x : d) {
        all *= choose(x + 2, 2);
        empty_top *= choose(x + 1, 1);
      }
      CHECK(enumerate_sequences(a, d, false).size() == static_cast<std::size_t>(all - empty_top));
    }
  }
}

TEST_CASE("semisimple sequence of d") {
  auto s = semisimple_sequence(fx::two_cycle(1, 1), {2, 2});
  CHECK(to_string(s) == "2,2;0,0;0,0;0,0");
}
