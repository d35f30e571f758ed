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

// Serial reference vs OpenMP path for the two parallel kernels: the
// per-candidate Gamma sweep and classification over candidate sequences.
#include <benchmark/benchmark.h>

#include "quivcomp/components.hpp"

using namespace quivcomp;

namespace {

Algebra two_cycle(int r, int s) {
  std::vector<Arrow> ar;
  for (int k = 1; k <= r; ++k) ar.push_back({"a" + std::to_string(k), 0, 1});
  for (int k = 1; k <= s; ++k) ar.push_back({"b" + std::to_string(k), 1, 0});
  return Algebra(2, ar, 4);
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

// semisimple: every sequence governs, so the sweep visits all of them
void BM_GovernedSemisimple(benchmark::State& st) {
  RepPoint m = RepPoint::semisimple(two_cycle(2, 2), FiniteField(st.range(1)), {2, 2});
  for (auto _ : st) {
    auto g = governing_sequences(m, false, {}, exec_of(st));
    benchmark::DoNotOptimize(g.lower);
  }
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_GovernedSemisimple)->ArgsProduct({{0, 1}, {5, 31}})->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& st) {
  ClassifyConfig c;
  c.exec = exec_of(st);
  Algebra a = two_cycle(3, static_cast<int>(st.range(1)));
  for (auto _ : st) {
    auto rep = classify(a, {2, 2}, c);
    benchmark::DoNotOptimize(rep.components.size());
  }
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_Classify)->ArgsProduct({{0, 1}, {1, 3}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
