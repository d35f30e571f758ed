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

#include "quivcomp/io.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace quivcomp;

TEST_CASE("quiver round trip") {
  for (const Algebra& a : {fx::two_cycle(3, 2), fx::q1(), fx::fork(3), fx::one_loop(5)}) {
    std::string text = write_quiver(a);
    CHECK(parse_quiver(text) == a);
    CHECK(write_quiver(parse_quiver(text)) == text);
  }
  Algebra a = parse_quiver("# two-cycle\nvertices 2\narrow x 1 -> 2  # forward\narrow y 2->1\nloewy 3\n");
  CHECK(a.arrow_count() == 2);
  CHECK(a.loewy_length() == 3);
  CHECK(a.arrow(1).source == 1);
}

TEST_CASE("quiver errors name the line") {
  auto line_of = [](const char* text) {
    try {
      parse_quiver(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("vertices 2\narrow a 1 -> 3\nloewy 2\n") == 2);
  CHECK(line_of("vertices 2\narrow a 1 => 2\nloewy 2\n") == 2);
  CHECK(line_of("vertices 2\narrow z1 1 -> 2\nloewy 2\n") == 2);
  CHECK(line_of("vertices 2\narrow e3 1 -> 2\nloewy 2\n") == 2);
  CHECK(line_of("vertices 2\narrow a*b 1 -> 2\nloewy 2\n") == 2);
  CHECK(line_of("vertices 2\nwat\n") == 2);
  CHECK(line_of("vertices 2\narrow a 1 -> 2\n") == 0);  // no loewy line
  CHECK_THROWS_WITH_AS(parse_quiver("vertices x\n"), doctest::Contains("line 1"), ParseError);
}

TEST_CASE("module round trip over prime and extension fields") {
  gen::Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    Algebra a = gen::algebra(rng, 3, 4, 4);
    FiniteField f(t % 2 ? 7 : 3, t % 3 == 0 ? 2 : 1);
    RepPoint m = gen::module(rng, a, f, gen::dims(rng, a.vertex_count(), 5));
    std::string text = write_module(m);
    CHECK(parse_module(a, f, text) == m);
  }
}

TEST_CASE("module parsing details") {
  Algebra a = fx::two_cycle(1, 1);
  FiniteField f(5);
  // b1 absent: zero map; entries reduced mod p
  RepPoint m = parse_module(a, f, "dim 1,1\nmat a1\n7\n");
  CHECK(m.matrix(0)(0, 0) == 2);
  CHECK(m.matrix(1)(0, 0) == 0);
  CHECK_THROWS_AS(parse_module(a, f, "dim 1,1\nmat a1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_module(a, f, "dim 1,1\nmat q\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_module(a, f, "dim 1\n"), ParseError);
  CHECK_THROWS_AS(parse_module(a, FiniteField(5, 2), "dim 1,1\nmat a1\n25\n"), ParseError);
  // not nilpotent: a1 b1 = 1
  CHECK_THROWS_AS(parse_module(a, f, "dim 1,1\nmat a1\n1\nmat b1\n1\n"), ParseError);
}

TEST_CASE("skeleton round trip") {
  Algebra a = fx::two_cycle(2, 2);
  for (const char* s : {"1,0;0,2;1,0;0,0", "1,1;1,0;0,1;0,0", "0,1;1,0;0,1;1,0"})
    for (const Skeleton& sk : enumerate_skeleta(a, parse_sequence(s))) {
      std::string text = write_skeleton(sk, a);
      CHECK(parse_skeleton(a, text) == sk);
    }
  CHECK_THROWS_AS(parse_skeleton(a, "top 1\nz1\nq*z1\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton(a, "top 1\nz2\n"), ParseError);
  CHECK_THROWS_AS(parse_skeleton(a, "z1\n"), ParseError);
}

TEST_CASE("read_file names the missing path") {
  CHECK_THROWS_WITH(read_file("/nonexistent/q.quiver"), doctest::Contains("/nonexistent/q.quiver"));
}
