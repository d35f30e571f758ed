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
 * @file    rep.hpp
 * @brief   Concrete modules over a truncated path algebra.
 *
 * A RepPoint is one matrix per arrow; the arrow i -> j carries a d_j x d_i
 * matrix. Submodules and other vertex-graded subspaces are GradedSubspace
 * values, one Subspace of F_p^{d_i} per vertex.
 */

#ifndef QUIVCOMP_REP_HPP
#define QUIVCOMP_REP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quivcomp/field.hpp"
#include "quivcomp/quiver.hpp"

namespace quivcomp {

class GradedSubspace {
 public:
  explicit GradedSubspace(std::vector<Subspace> parts);
  static GradedSubspace zero(FiniteField field, const DimVector& d);
  static GradedSubspace full(FiniteField field, const DimVector& d);

  std::size_t vertex_count() const { return parts_.size(); }
  const Subspace& part(std::size_t vertex) const { return parts_.at(vertex); }
  Subspace& part(std::size_t vertex) { return parts_.at(vertex); }
  const std::vector<Subspace>& parts() const { return parts_; }
  DimVector dims() const;
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  bool operator==(const GradedSubspace&) const = default;

 private:
  std::vector<Subspace> parts_;
};

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b);
/// b is contained in a, vertexwise.
bool contains(const GradedSubspace& a, const GradedSubspace& b);

class RepPoint {
 public:
  /// Validates shapes and that every path of length L+1 acts as zero.
  RepPoint(Algebra alg, FiniteField field, DimVector d, std::vector<Matrix> mats);
  /// All arrows act as zero.
  static RepPoint semisimple(Algebra alg, FiniteField field, DimVector d);

  const Algebra& algebra() const { return alg_; }
  const DimVector& dims() const { return d_; }
  const FiniteField& field() const { return field_; }
  int total_dim() const;
  const Matrix& matrix(int arrow) const { return mats_.at(arrow); }
  const std::vector<Matrix>& matrices() const { return mats_; }

  bool operator==(const RepPoint&) const = default;

 private:
  Algebra alg_;
  DimVector d_;
  FiniteField field_;
  std::vector<Matrix> mats_;
};

class NotSubmoduleError : public std::invalid_argument {
 public:
  explicit NotSubmoduleError(const std::string& arrow_id)
      : std::invalid_argument("subspace is not closed under arrow '" + arrow_id + "'"),
        arrow_(arrow_id) {}
  const std::string& arrow() const { return arrow_; }

 private:
  std::string arrow_;
};

/// f_p; the identity on the vertex component for a trivial path.
Matrix act_path(const RepPoint& m, const QPath& p);

/// J U = sum over arrows of their images of U.
GradedSubspace arrow_image(const RepPoint& m, const GradedSubspace& u);
/// Returns the id of an arrow that maps u outside itself, if any.
std::optional<std::string> submodule_violation(const RepPoint& m, const GradedSubspace& u);
bool is_submodule(const RepPoint& m, const GradedSubspace& u);

/// J^0 U, J^1 U, ..., J^{L+1} U for a submodule U (L+2 entries).
std::vector<GradedSubspace> radical_series(const RepPoint& m, const GradedSubspace& u);
/// J^l M for l = 0..L+1.
std::vector<GradedSubspace> radical_layer_spaces(const RepPoint& m);
SemisimpleSequence radical_layering(const RepPoint& m);
/// Radical layering of the submodule U.
SemisimpleSequence radical_layering(const RepPoint& m, const GradedSubspace& u);

/// soc_0 M = soc M, soc_1 M, ..., soc_L M = M (L+1 entries).
std::vector<GradedSubspace> socle_series(const RepPoint& m);
/// Layer l = udim soc_l / soc_{l-1}, so layer 0 is the socle.
SemisimpleSequence socle_layering(const RepPoint& m);

/// The same module over a larger field of the same characteristic.
RepPoint extend_scalars(const RepPoint& m, const FiniteField& ext);

/// D(M) over the opposite quiver: transposed matrices, same arrow ids.
RepPoint dualize(const RepPoint& m);
RepPoint direct_sum(const RepPoint& a, const RepPoint& b);

struct PathRank {
  QPath path;
  int rank = 0;
  bool operator==(const PathRank&) const = default;
};

/// rank f_p for every path of length 0..L, in enumerate_paths order.
std::vector<PathRank> path_rank(const RepPoint& m);

struct Theta {
  SemisimpleSequence radical;
  SemisimpleSequence socle;
};
Theta theta(const RepPoint& m);

/// (S(M), S*(M), -path ranks of M, -path ranks of D(M)).
struct ThetaPlus {
  SemisimpleSequence radical;
  SemisimpleSequence socle;
  std::vector<int> neg_ranks;
  std::vector<int> neg_dual_ranks;
  bool operator==(const ThetaPlus&) const = default;
};
ThetaPlus theta_plus(const RepPoint& m);

enum class PartialOrder { less, equal, greater, incomparable };
/// Componentwise: dominance on the two sequences, coordinatewise on the
/// rank vectors. Both values must come from the same algebra and d.
PartialOrder compare(const ThetaPlus& a, const ThetaPlus& b);

/// J^l U = U ∩ J^l M for every l. Throws NotSubmoduleError when U is not
/// closed under the arrows.
bool is_layer_stable(const GradedSubspace& sub, const RepPoint& m);

/// The submodule generated by the given vectors (each paired with its vertex).
GradedSubspace generated_submodule(const RepPoint& m,
                                   const std::vector<std::pair<int, Vec>>& generators);

}  // namespace quivcomp

#endif  // QUIVCOMP_REP_HPP
