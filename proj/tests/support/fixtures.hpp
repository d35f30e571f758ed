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

// Quivers used across the suites.

#ifndef QUIVCOMP_TESTS_FIXTURES_HPP
#define QUIVCOMP_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "quivcomp/quiver.hpp"

namespace fx {

using quivcomp::Algebra;
using quivcomp::Arrow;

// two vertices, r arrows 1->2 named a1.., s arrows 2->1 named b1..
inline Algebra two_cycle(int r, int s, int loewy = 4) {
  std::vector<Arrow> ar;
  for (int k = 1; k <= r; ++k) ar.push_back({"a" + std::to_string(k), 0, 1});
  for (int k = 1; k <= s; ++k) ar.push_back({"b" + std::to_string(k), 1, 0});
  return Algebra(2, ar, loewy);
}

// 1->2, 1->3, 2->3, 4->2, 5->4
inline Algebra q1(int loewy = 3) {
  return Algebra(5, {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 2}, {"d", 3, 1}, {"e", 4, 3}}, loewy);
}

// 4 <- 1 -> 2 -> 3
inline Algebra fork(int loewy) {
  return Algebra(4, {{"al", 0, 1}, {"be", 1, 2}, {"ga", 0, 3}}, loewy);
}

// 1 -> 2 -> 3
inline Algebra a3(int loewy) { return Algebra(3, {{"x", 0, 1}, {"y", 1, 2}}, loewy); }

inline Algebra one_loop(int loewy) { return Algebra(1, {{"t", 0, 0}}, loewy); }

}  // namespace fx

#endif
