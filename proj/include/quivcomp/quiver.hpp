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
 * @file    quiver.hpp
 * @brief   Quivers, truncated path algebras and semisimple sequences.
 *
 * Vertices are 0-based internally and 1-based in every text format. A
 * truncated path algebra is a quiver plus its Loewy length L+1: paths of
 * length L+1 vanish.
 */

#ifndef QUIVCOMP_QUIVER_HPP
#define QUIVCOMP_QUIVER_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace quivcomp {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
  bool operator==(const Arrow&) const = default;
};

class Algebra {
 public:
  Algebra(int vertex_count, std::vector<Arrow> arrows, int loewy_length);

  int vertex_count() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int index) const { return arrows_.at(index); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  int loewy_length() const { return loewy_; }
  /// L: the longest nonzero path length.
  int max_path_length() const { return loewy_ - 1; }
  /// Throws std::invalid_argument for unknown ids.
  int arrow_index(std::string_view id) const;

  /// B(i,j) = number of arrows i -> j.
  std::vector<std::vector<int>> adjacency() const;
  /// Same vertices and arrow ids, every arrow reversed.
  Algebra opposite() const;

  bool operator==(const Algebra&) const = default;

 private:
  int n_;
  std::vector<Arrow> arrows_;
  int loewy_;
};

using DimVector = std::vector<int>;

std::string to_string(const DimVector& d);
/// "2,2" -> {2,2}. Throws std::invalid_argument on malformed input.
DimVector parse_dim_vector(std::string_view text);

/// L+1 multiplicity vectors; layer l holds the simples of S_l.
class SemisimpleSequence {
 public:
  SemisimpleSequence() = default;
  explicit SemisimpleSequence(std::vector<DimVector> layers);

  std::size_t length() const { return layers_.size(); }
  std::size_t vertex_count() const { return layers_.empty() ? 0 : layers_.front().size(); }
  const std::vector<DimVector>& layers() const { return layers_; }
  const DimVector& layer(std::size_t l) const { return layers_.at(l); }
  DimVector total() const;
  bool layer_is_zero(std::size_t l) const;
  /// Number of layers up to and including the last nonzero one.
  std::size_t depth() const;

  auto operator<=>(const SemisimpleSequence&) const = default;

 private:
  std::vector<DimVector> layers_;
};

/// "1,0;0,1;1,0;0,1".
std::string to_string(const SemisimpleSequence& s);
SemisimpleSequence parse_sequence(std::string_view text);

/// A path in Q. `arrows` lists arrow indices in the order they are applied;
/// the printed form reads right to left ("b1*a1" means a1 first).
struct QPath {
  int start = 0;
  int end = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  static QPath trivial(int vertex) { return QPath{vertex, vertex, {}}; }
  /// Path followed by one more arrow (no composability check).
  QPath then(const Algebra& alg, int arrow) const;

  auto operator<=>(const QPath&) const = default;
};

std::string to_string(const QPath& p, const Algebra& alg);

/// All composable paths with length in [from_len, to_len]; trivial paths
/// e_i included when from_len = 0. Ordered by length, start vertex, then
/// arrow indices. to_len may not exceed L.
std::vector<QPath> enumerate_paths(const Algebra& alg, int from_len, int to_len);

/// Prefix-sum dominance. Throws std::invalid_argument when the totals or
/// lengths differ.
bool dominance_leq(const SemisimpleSequence& a, const SemisimpleSequence& b);

/// udim S_l <= (udim S_{l-1}) B for 1 <= l <= L.
bool is_realizable(const Algebra& alg, const SemisimpleSequence& s);

/// Every split of d into L+1 layers with nonzero top (unless d = 0), in
/// lexicographic order of the flattened layers.
std::vector<SemisimpleSequence> enumerate_sequences(const Algebra& alg, const DimVector& d,
                                                    bool realizable_only);

/// (d, 0, ..., 0).
SemisimpleSequence semisimple_sequence(const Algebra& alg, const DimVector& d);

}  // namespace quivcomp

#endif  // QUIVCOMP_QUIVER_HPP
