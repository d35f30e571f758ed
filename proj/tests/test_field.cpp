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

#include <cmath>
#include <set>

#include "quivcomp/field.hpp"
#include "support/gen.hpp"

using namespace quivcomp;

namespace {

Scalar power(const FiniteField& f, Scalar a, std::uint64_t e) {
  Scalar r = 1;
  while (e) {
    if (e & 1) r = f.mul(r, a);
    a = f.mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace

TEST_CASE("primality") {
  for (std::uint64_t n : {2, 3, 5, 7, 101, 499, 65537}) CHECK(is_prime(n));
  for (std::uint64_t n : {0, 1, 4, 9, 91, 561, 65535}) CHECK_FALSE(is_prime(n));
  CHECK_THROWS_AS(FiniteField(4), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(101, 4), std::invalid_argument);  // > 2^22
  CHECK_THROWS_AS(FiniteField(7, 0), std::invalid_argument);
}

TEST_CASE("prime field inverse agrees with exhaustive search") {
  for (std::uint32_t p : {2u, 3u, 7u, 101u}) {
    FiniteField f(p);
    for (Scalar a = 1; a < p; ++a) {
      Scalar found = 0;
      for (Scalar b = 1; b < p; ++b)
        if (a * b % p == 1) found = b;
      CHECK(f.inv(a) == found);
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK(f.reduce(-1) == p - 1);
  }
}

TEST_CASE("extension fields satisfy the field axioms") {
  gen::Rng rng(11);
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 3u}, {101u, 2u}}) {
    FiniteField f(p, k);
    CAPTURE(f.name());
    REQUIRE(f.order() == static_cast<std::uint32_t>(std::pow(p, k)));
    for (int t = 0; t < 300; ++t) {
      Scalar a = gen::element(rng, f), b = gen::element(rng, f), c = gen::element(rng, f);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(f.add(a, b), b) == a);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("Frobenius fixes exactly the embedded prime field") {
  // a^p = a cuts out F_p; it must be 0..p-1 so extend_scalars is a relabel
  for (auto [p, k] : {std::pair{2u, 3u}, {3u, 2u}, {7u, 2u}, {5u, 3u}}) {
    FiniteField f(p, k);
    std::set<Scalar> fixed;
    for (Scalar a = 0; a < f.order(); ++a) {
      CHECK(power(f, a, f.order()) == a);
      if (power(f, a, p) == a) fixed.insert(a);
    }
    REQUIRE(fixed.size() == p);
    CHECK(*fixed.rbegin() == p - 1);
    // and the embedding is a ring map
    FiniteField small(p);
    for (Scalar a = 0; a < p; ++a)
      for (Scalar b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == small.add(a, b));
        CHECK(f.mul(a, b) == small.mul(a, b));
      }
  }
}

TEST_CASE("multiplicative group of F_q is cyclic") {
  FiniteField f(3, 3);
  int generators = 0;
  for (Scalar a = 1; a < f.order(); ++a) {
    std::set<Scalar> orbit;
    Scalar x = 1;
    for (std::uint32_t i = 0; i < f.order() - 1; ++i) orbit.insert(x = f.mul(x, a));
    if (orbit.size() == f.order() - 1) ++generators;
  }
  CHECK(generators == 12);  // phi(26)
}

TEST_CASE("matrix product and apply") {
  FiniteField f(7);
  Matrix a(f, 2, 3, {1, 2, 3, 4, 5, 6});
  Matrix b(f, 3, 1, {1, 1, 1});
  Matrix ab = a * b;
  CHECK(ab(0, 0) == 6);
  CHECK(ab(1, 0) == 1);  // 15 mod 7
  Vec y = a.apply(Vec{1, 1, 1});
  CHECK(y == Vec{6, 1});
  CHECK(a.transpose().transpose() == a);
  CHECK_THROWS_AS(a * a, std::invalid_argument);
}

TEST_CASE("rref is canonical and rank-preserving") {
  gen::Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    FiniteField f(t % 2 ? 5 : 2, t % 3 == 0 ? 2 : 1);
    Matrix m = gen::matrix(rng, f, gen::uniform(rng, 0, 5), gen::uniform(rng, 0, 5));
    Matrix r = rref(m);
    CHECK(rref(r) == r);
    CHECK(rank(r) == rank(m));
    if (m.rows() > 0) {
      Matrix g = gen::invertible(rng, f, m.rows());
      CHECK(rref(g * m) == r);  // row operations do not change the rref
    }
  }
}

TEST_CASE("kernel, image, preimage") {
  FiniteField f(3);
  Matrix m(f, 2, 3, {1, 1, 0, 0, 1, 1});
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(m.apply(k.basis().row_vec(0)) == Vec{0, 0});
  CHECK(image(m).dim() == 2);
  Subspace line = Subspace::span(f, 2, {{1, 0}});
  Subspace pre = preimage(m, line);
  CHECK(pre.dim() == 2);
  for (std::size_t r = 0; r < pre.dim(); ++r) CHECK(line.contains_vector(m.apply(pre.basis().row_vec(r))));
}

TEST_CASE("annihilator and complement") {
  FiniteField f(5);
  Subspace u = Subspace::span(f, 4, {{1, 2, 0, 0}, {0, 0, 1, 1}});
  Subspace a = annihilator(u);
  CHECK(a.dim() == 2);
  CHECK(annihilator(a) == u);
  Subspace full = Subspace::full(f, 4);
  Subspace c = complement_in(u, full);
  CHECK(c.dim() == 2);
  CHECK(intersect(c, u).is_zero());
  CHECK(sum(c, u) == full);
}

TEST_CASE("subspace enumeration matches the Gaussian binomial") {
  // [n k]_q counted independently: q-binomial recurrence
  auto qbin = [](int n, int k, std::uint64_t q) {
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
      c[i][0] = c[i][i] = 1;
      std::uint64_t qk = 1;
      for (int j = 1; j < i; ++j) {
        qk *= q;
        c[i][j] = c[i - 1][j - 1] + qk * c[i - 1][j];
      }
    }
    return c[n][k];
  };
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    FiniteField f(p, k);
    for (int n = 0; n <= 4; ++n)
      for (int d = 0; d <= n; ++d) {
        CHECK(gaussian_binomial(n, d, f.order()) == qbin(n, d, f.order()));
        if (qbin(n, d, f.order()) > 5000) continue;
        auto all = enumerate_subspaces(Subspace::full(f, n), d);
        CHECK(all.size() == qbin(n, d, f.order()));
        std::set<std::vector<Scalar>> distinct;
        for (const auto& s : all) {
          CHECK(s.dim() == static_cast<std::size_t>(d));
          Vec flat;
          for (std::size_t r = 0; r < s.dim(); ++r)
            for (Scalar x : s.basis().row(r)) flat.push_back(x);
          distinct.insert(flat);
        }
        CHECK(distinct.size() == all.size());
      }
  }
  CHECK_THROWS_AS(enumerate_subspaces(Subspace::full(FiniteField(101), 6), 3, 1000),
                  EnumerationBudgetError);
}

TEST_CASE("enumeration inside a proper ambient subspace stays inside it") {
  FiniteField f(3);
  Subspace amb = Subspace::span(f, 4, {{1, 0, 1, 0}, {0, 1, 0, 2}});
  auto lines = enumerate_subspaces(amb, 1);
  CHECK(lines.size() == 4);
  for (const auto& l : lines) CHECK(contains(amb, l));
}

TEST_CASE("extend_scalars keeps entries and rank") {
  gen::Rng rng(5);
  FiniteField f(7), ext(7, 2);
  for (int t = 0; t < 50; ++t) {
    Matrix m = gen::matrix(rng, f, 3, 4);
    Matrix e = extend_scalars(m, ext);
    CHECK(e.field() == ext);
    CHECK(rank(e) == rank(m));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(e(r, c) == m(r, c));
  }
  CHECK_THROWS_AS(extend_scalars(Matrix(f, 1, 1), FiniteField(5, 2)), std::invalid_argument);
}

TEST_CASE("a quadratic with no F_p root splits over F_{p^2}") {
  // x^2 = 3 has no root mod 7 (3 is a non-residue)
  FiniteField f(7), ext(7, 2);
  int base = 0, big = 0;
  for (Scalar x = 0; x < f.order(); ++x) base += f.mul(x, x) == 3;
  for (Scalar x = 0; x < ext.order(); ++x) big += ext.mul(x, x) == 3;
  CHECK(base == 0);
  CHECK(big == 2);
}
