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

#include <regex>
#include <set>
#include <sstream>

#include "quivcomp/io.hpp"
#include "quivcomp/skeleta.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace quivcomp;

namespace {

const char* kSigma24 = "top 1\nz1\na1*z1\nb1*a1*z1\na1*b1*a1*z1\n";

std::vector<std::string> names(const Skeleton& sk, const Algebra& a) {
  std::vector<std::string> out;
  for (const auto& p : sk.paths) out.push_back(to_string(p, a));
  return out;
}

std::set<std::string> names(const std::vector<int>& idx, const Skeleton& sk, const Algebra& a) {
  std::set<std::string> out;
  for (int k : idx) out.insert(to_string(sk.paths.at(k), a));
  return out;
}

// tiny DOT reader: counts edge statements by style
struct DotEdges {
  int solid = 0, dashed = 0, dotted = 0;
};
DotEdges count_edges(const std::string& dot) {
  DotEdges e;
  std::istringstream in(dot);
  std::string line;
  const std::regex edge(R"re(^\s*"[^"]+"\s*->\s*"[^"]+"\s*(\[.*\])?;\s*$)re");
  while (std::getline(in, line)) {
    if (line.find("->") == std::string::npos) continue;
    REQUIRE(std::regex_match(line, edge));
    if (line.find("style=dashed") != std::string::npos)
      ++e.dashed;
    else if (line.find("style=dotted") != std::string::npos)
      ++e.dotted;
    else
      ++e.solid;
  }
  return e;
}

}  // namespace

TEST_CASE("skeleta of (S1,S2,S1,S2) with r = 2, s = 1") {
  Algebra a = fx::two_cycle(2, 1);
  auto all = enumerate_skeleta(a, parse_sequence("1,0;0,1;1,0;0,1"));
  // 2 choices of length-1 path, 1 at length 2, 2 at length 3
  CHECK(all.size() == 4);
  Skeleton chosen = parse_skeleton(a, kSigma24);
  CHECK(std::find(all.begin(), all.end(), chosen) != all.end());
  for (const auto& sk : all) {
    CHECK_FALSE(validate_skeleton(a, sk, parse_sequence("1,0;0,1;1,0;0,1")));
    CHECK(to_string(sk.layering(a)) == "1,0;0,1;1,0;0,1");
  }
  CHECK(enumerate_skeleta(a, parse_sequence("1,0;0,1;1,0;0,1"), 3).size() == 3);
  CHECK(enumerate_skeleta(a, parse_sequence("1,0;1,1;0,1;0,0")).empty());
}

TEST_CASE("critical paths of the chosen skeleton") {
  Algebra a = fx::two_cycle(2, 1);
  Skeleton sk = parse_skeleton(a, kSigma24);
  auto crit = critical_paths(a, sk);
  REQUIRE(crit.size() == 2);
  CHECK(to_string(crit[0].q, a) == "a2*z1");
  CHECK(names(crit[0].sigma_q, sk, a) == std::set<std::string>{"a1*z1", "a1*b1*a1*z1"});
  CHECK(to_string(crit[1].q, a) == "a2*b1*a1*z1");
  CHECK(names(crit[1].sigma_q, sk, a) == std::set<std::string>{"a1*b1*a1*z1"});
}

TEST_CASE("the full projective has no critical paths") {
  Algebra a = fx::two_cycle(1, 1);
  auto all = enumerate_skeleta(a, parse_sequence("1,0;0,1;1,0;0,1"));
  REQUIRE(all.size() == 1);
  CHECK(critical_paths(a, all[0]).empty());
  CHECK(names(all[0], a) == std::vector<std::string>{"z1", "a1*z1", "b1*a1*z1", "a1*b1*a1*z1"});
}

TEST_CASE("validate_skeleton reasons") {
  Algebra a = fx::two_cycle(2, 1);
  auto s = parse_sequence("1,0;0,1;1,0;0,1");
  // not closed under initial subpaths
  Skeleton gap = parse_skeleton(a, "top 1\nz1\na1*z1\na1*b1*a1*z1\nb1*a2*z1\n");
  CHECK(validate_skeleton(a, gap, s));
  // right shape, wrong layering
  Skeleton flat = parse_skeleton(a, "top 1\nz1\na1*z1\na2*z1\nb1*a1*z1\n");
  CHECK(validate_skeleton(a, flat, s));
  CHECK_FALSE(validate_skeleton(a, flat, parse_sequence("1,0;0,2;1,0;0,0")));
}

TEST_CASE("generic module of the chosen skeleton") {
  Algebra a = fx::two_cycle(2, 1);
  FiniteField f(101);
  Skeleton sk = parse_skeleton(a, kSigma24);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    GenericModule g = generic_module(a, f, sk, seed);
    CHECK(to_string(radical_layering(g.module)) == "1,0;0,1;1,0;0,1");
    REQUIRE(g.hypergraph.edges.size() == 2);
    // generic: every coefficient nonzero, so tau_q = sigma_q
    for (const auto& e : g.hypergraph.edges) CHECK(e.support().size() == e.sigma_q.size());
    DotEdges dot = count_edges(to_dot(g.hypergraph, a));
    CHECK(dot.solid == 3);
    CHECK(dot.dashed == 2);
    CHECK(dot.dotted == 2);  // the two-element pool of a2*z1
  }
  CHECK(generic_module(a, f, sk, 5).module == generic_module(a, f, sk, 5).module);
}

TEST_CASE("caveat quiver: the generic module is Lambda alpha + S4") {
  Algebra a = fx::fork(2);
  FiniteField f(101);
  auto s = parse_sequence("0,1,0,1;0,0,1,0");
  auto all = enumerate_skeleta(a, s);
  REQUIRE(all.size() == 1);
  GenericModule g = generic_module(a, f, all[0], 3);
  CHECK(g.module.dims() == DimVector{0, 1, 1, 1});
  CHECK(rank(g.module.matrix(a.arrow_index("be"))) == 1);
  CHECK(to_string(radical_layering(g.module)) == "0,1,0,1;0,0,1,0");
  // S4 splits off: it is both top and socle
  CHECK(socle_layering(g.module).layer(0) == DimVector{0, 0, 1, 1});
}

TEST_CASE("extract_hypergraph recovers the synthesized supports") {
  gen::Rng rng(17);
  FiniteField f(31);
  Algebra a = fx::two_cycle(2, 2);
  for (const char* text : {"1,0;0,1;1,0;0,1", "1,0;0,2;1,0;0,0", "1,1;1,0;0,1;0,0", "0,1;2,0;0,1;0,0"}) {
    auto s = parse_sequence(text);
    for (const auto& sk : enumerate_skeleta(a, s, 6)) {
      GenericModule g = generic_module(a, f, sk, gen::uniform(rng, 0, 1 << 20));
      Hypergraph h = extract_hypergraph(g.module, sk);
      REQUIRE(h.edges.size() == g.hypergraph.edges.size());
      for (std::size_t k = 0; k < h.edges.size(); ++k) {
        CHECK(h.edges[k].q == g.hypergraph.edges[k].q);
        CHECK(h.edges[k].support() == g.hypergraph.edges[k].support());
        CHECK(h.edges[k].coeffs == g.hypergraph.edges[k].coeffs);
      }
      // and sk is found among the module's skeleta
      auto found = skeleta_of(g.module);
      CHECK(std::find(found.begin(), found.end(), sk) != found.end());
    }
  }
}

TEST_CASE("realize with zero coefficients") {
  Algebra a = fx::two_cycle(2, 1);
  FiniteField f(7);
  Skeleton sk = parse_skeleton(a, kSigma24);
  auto crit = critical_paths(a, sk);
  std::vector<std::vector<Scalar>> zero;
  for (const auto& c : crit) zero.emplace_back(c.sigma_q.size(), 0);
  RepPoint m = realize(a, f, sk, zero);
  CHECK(rank(m.matrix(a.arrow_index("a2"))) == 0);
  CHECK(to_string(radical_layering(m)) == "1,0;0,1;1,0;0,1");
  Hypergraph h = extract_hypergraph(m, sk);
  for (const auto& e : h.edges) CHECK(e.support().empty());
  CHECK_THROWS_AS(realize(a, f, sk, {}), std::invalid_argument);
}

TEST_CASE("extract_hypergraph rejects a non-skeleton") {
  Algebra a = fx::two_cycle(2, 1);
  FiniteField f(7);
  RepPoint ss = RepPoint::semisimple(a, f, {2, 2});
  CHECK_THROWS_AS(extract_hypergraph(ss, parse_skeleton(a, kSigma24)), std::invalid_argument);
  CHECK_FALSE(find_top_elements(ss, parse_skeleton(a, kSigma24)));
}

TEST_CASE("top elements of a conjugated module") {
  gen::Rng rng(2);
  FiniteField f(11);
  Algebra a = fx::two_cycle(2, 1);
  Skeleton sk = parse_skeleton(a, kSigma24);
  RepPoint g = generic_module(a, f, sk, 8).module;
  // conjugate by a random base change: still has sk as a skeleton
  Matrix p0 = gen::invertible(rng, f, 2), p1 = gen::invertible(rng, f, 2);
  std::vector<Matrix> mats;
  for (int k = 0; k < a.arrow_count(); ++k) {
    const auto& ar = a.arrow(k);
    const Matrix& src = ar.source == 0 ? p0 : p1;
    const Matrix& dst = ar.target == 0 ? p0 : p1;
    mats.push_back(dst * g.matrix(k) * gen::inverse(src));
  }
  RepPoint h(a, f, {2, 2}, mats);
  auto tops = find_top_elements(h, sk);
  REQUIRE(tops);
  CHECK(tops->size() == 1);
  CHECK_NOTHROW(extract_hypergraph(h, sk));
}

TEST_CASE("mix_seed spreads") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t a = 0; a < 50; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) seen.insert(mix_seed(a, b));
  CHECK(seen.size() == 200);
}
