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

/**
 * @file    skeleta.hpp
 * @brief   Skeleta in the coordinatized projective cover, critical paths,
 *          generic modules and hypergraphs.
 *
 * The projective cover of S_0 has one top element z_r per simple summand;
 * generators are numbered vertex by vertex (all of vertex 1 first). A
 * ProjPath is a path p applied to z_r.
 */

#ifndef QUIVCOMP_SKELETA_HPP
#define QUIVCOMP_SKELETA_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quivcomp/field.hpp"
#include "quivcomp/quiver.hpp"
#include "quivcomp/rep.hpp"

namespace quivcomp {

struct ProjPath {
  int generator = 0;  // 0-based r
  QPath path;

  int length() const { return path.length(); }
  int end() const { return path.end; }

  // length first, so sorted skeleta list their layers in order
  std::strong_ordering operator<=>(const ProjPath& o) const {
    if (auto c = length() <=> o.length(); c != 0) return c;
    if (auto c = generator <=> o.generator; c != 0) return c;
    return path.arrows <=> o.path.arrows;
  }
  bool operator==(const ProjPath& o) const {
    return generator == o.generator && path.arrows == o.path.arrows && path.start == o.path.start;
  }
};

/// "b1*a1*z1"; a bare generator prints as "z1".
std::string to_string(const ProjPath& p, const Algebra& alg);

struct Skeleton {
  std::vector<int> generator_vertex;  // vertex of z_r
  std::vector<ProjPath> paths;        // sorted

  int index_of(const ProjPath& p) const;
  bool contains(const ProjPath& p) const { return index_of(p) >= 0; }
  /// Vertex dimensions of any module with this skeleton.
  DimVector dims(const Algebra& alg) const;
  SemisimpleSequence layering(const Algebra& alg) const;

  bool operator==(const Skeleton&) const = default;
};

/// Generators of the projective cover of the top layer: vertex i repeated
/// s.layer(0)[i] times.
std::vector<int> top_generators(const SemisimpleSequence& s);

/// Reason the skeleton is malformed for `s`, or nullopt when it is fine.
std::optional<std::string> validate_skeleton(const Algebra& alg, const Skeleton& sk,
                                             const SemisimpleSequence& s);

/// All skeleta with layering exactly s, in a fixed order. `limit` > 0 stops
/// after that many.
std::vector<Skeleton> enumerate_skeleta(const Algebra& alg, const SemisimpleSequence& s,
                                        std::size_t limit = 0);

struct CriticalPath {
  ProjPath q;
  std::vector<int> sigma_q;  // indices into Skeleton::paths
};

/// q = alpha p with p in the skeleton, q outside it and len q <= L. Order:
/// skeleton order of p, then arrow index.
std::vector<CriticalPath> critical_paths(const Algebra& alg, const Skeleton& sk);

struct HyperEdge {
  ProjPath q;
  std::vector<int> sigma_q;
  std::vector<Scalar> coeffs;  // aligned with sigma_q
  /// tau_q: members of sigma_q with nonzero coefficient.
  std::vector<int> support() const;
};

struct Hypergraph {
  Skeleton skeleton;
  std::vector<HyperEdge> edges;
};

/// The module with basis the skeleton and alpha q = sum c_{q,p} p for every
/// critical q. coeffs[k] is aligned with critical_paths(alg, sk)[k].sigma_q;
/// zeros are allowed.
RepPoint realize(const Algebra& alg, FiniteField field, const Skeleton& sk,
                 const std::vector<std::vector<Scalar>>& coeffs);

struct GenericModule {
  RepPoint module;
  Hypergraph hypergraph;
  std::uint64_t seed;  // the seed that produced it, after any reseeding
};

class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients uniform in F_p^*. Throws GenericityError when the layering
/// post-check fails `retries` times in a row.
GenericModule generic_module(const Algebra& alg, FiniteField field, const Skeleton& sk,
                             std::uint64_t seed, int retries = 8);

/// SplitMix64 finaliser; used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);

/// One top-element vector z_r per generator of sk, or nullopt.
using TopElements = std::vector<Vec>;

/// Greedy echelon lift first, then `random_lifts` randomized ones; returns
/// the first lift relative to which sk is a skeleton of m.
std::optional<TopElements> find_top_elements(const RepPoint& m, const Skeleton& sk,
                                             int random_lifts = 32, std::uint64_t seed = 0);

/// All skeleta with layering S(m) that are skeleta of m for some lift tried.
std::vector<Skeleton> skeleta_of(const RepPoint& m, int random_lifts = 32,
                                 std::uint64_t seed = 0);

/// Solves for the expansion coefficients of every critical path. Throws
/// std::invalid_argument when sk is not a skeleton of m.
Hypergraph extract_hypergraph(const RepPoint& m, const Skeleton& sk);

/// DOT digraph. Skeleton nodes are "<r>:<path>"; solid edges follow the
/// skeleton, a dashed edge marks each critical path (to a pool node with
/// dotted edges when |tau_q| > 1).
std::string to_dot(const Hypergraph& h, const Algebra& alg);

}  // namespace quivcomp

#endif  // QUIVCOMP_SKELETA_HPP
