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

#include "quivcomp/rep.hpp"

#include <numeric>
#include <stdexcept>

namespace quivcomp {

GradedSubspace::GradedSubspace(std::vector<Subspace> parts) : parts_(std::move(parts)) {}

GradedSubspace GradedSubspace::zero(FiniteField field, const DimVector& d) {
  std::vector<Subspace> parts;
  parts.reserve(d.size());
  for (int di : d) parts.emplace_back(field, static_cast<std::size_t>(di));
  return GradedSubspace(std::move(parts));
}

GradedSubspace GradedSubspace::full(FiniteField field, const DimVector& d) {
  std::vector<Subspace> parts;
  parts.reserve(d.size());
  for (int di : d) parts.push_back(Subspace::full(field, static_cast<std::size_t>(di)));
  return GradedSubspace(std::move(parts));
}

DimVector GradedSubspace::dims() const {
  DimVector out;
  out.reserve(parts_.size());
  for (const auto& s : parts_) out.push_back(static_cast<int>(s.dim()));
  return out;
}

int GradedSubspace::total_dim() const {
  int t = 0;
  for (const auto& s : parts_) t += static_cast<int>(s.dim());
  return t;
}

static void check_same_shape(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw std::invalid_argument("graded subspaces over different vertex sets");
  }
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  check_same_shape(a, b);
  std::vector<Subspace> parts;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) parts.push_back(sum(a.part(i), b.part(i)));
  return GradedSubspace(std::move(parts));
}

GradedSubspace intersect(const GradedSubspace& a, const GradedSubspace& b) {
  check_same_shape(a, b);
  std::vector<Subspace> parts;
  for (std::size_t i = 0; i < a.vertex_count(); ++i)
    parts.push_back(intersect(a.part(i), b.part(i)));
  return GradedSubspace(std::move(parts));
}

bool contains(const GradedSubspace& a, const GradedSubspace& b) {
  check_same_shape(a, b);
  for (std::size_t i = 0; i < a.vertex_count(); ++i)
    if (!contains(a.part(i), b.part(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------

RepPoint::RepPoint(Algebra alg, FiniteField field, DimVector d, std::vector<Matrix> mats)
    : alg_(std::move(alg)), d_(std::move(d)), field_(field), mats_(std::move(mats)) {
  if (static_cast<int>(d_.size()) != alg_.vertex_count()) {
    throw std::invalid_argument("dimension vector has " + std::to_string(d_.size()) +
                                " entries for " + std::to_string(alg_.vertex_count()) +
                                " vertices");
  }
  for (int x : d_)
    if (x < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(mats_.size()) != alg_.arrow_count()) {
    throw std::invalid_argument("expected " + std::to_string(alg_.arrow_count()) +
                                " matrices, got " + std::to_string(mats_.size()));
  }
  for (int k = 0; k < alg_.arrow_count(); ++k) {
    const Arrow& a = alg_.arrow(k);
    const Matrix& m = mats_[k];
    if (!(m.field() == field_)) {
      throw std::invalid_argument("matrix for arrow '" + a.id + "' is over a different field");
    }
    if (m.rows() != static_cast<std::size_t>(d_[a.target]) ||
        m.cols() != static_cast<std::size_t>(d_[a.source])) {
      throw std::invalid_argument("matrix for arrow '" + a.id + "' should be " +
                                  std::to_string(d_[a.target]) + "x" +
                                  std::to_string(d_[a.source]) + ", got " +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
  }
  // J^{L+1} M = 0; if not, name an offending path
  auto series = radical_layer_spaces(*this);
  if (!series.back().is_zero()) {
    for (const auto& p : enumerate_paths(alg_, alg_.max_path_length(), alg_.max_path_length())) {
      Matrix fp = act_path(*this, p);
      for (int a = 0; a < alg_.arrow_count(); ++a) {
        if (alg_.arrow(a).source != p.end) continue;
        if (!(mats_[a] * fp).is_zero()) {
          throw std::invalid_argument("path " + to_string(p.then(alg_, a), alg_) +
                                      " of length L+1 acts nonzero");
        }
      }
    }
    throw std::invalid_argument("J^{L+1} M is nonzero");
  }
}

RepPoint RepPoint::semisimple(Algebra alg, FiniteField field, DimVector d) {
  std::vector<Matrix> mats;
  for (const auto& a : alg.arrows()) {
    mats.emplace_back(field, static_cast<std::size_t>(d.at(a.target)),
                      static_cast<std::size_t>(d.at(a.source)));
  }
  return RepPoint(std::move(alg), field, std::move(d), std::move(mats));
}

int RepPoint::total_dim() const { return std::accumulate(d_.begin(), d_.end(), 0); }

// ---------------------------------------------------------------------------

Matrix act_path(const RepPoint& m, const QPath& p) {
  Matrix f = Matrix::identity(m.field(), static_cast<std::size_t>(m.dims().at(p.start)));
  for (int a : p.arrows) f = m.matrix(a) * f;
  return f;
}

GradedSubspace arrow_image(const RepPoint& m, const GradedSubspace& u) {
  GradedSubspace out = GradedSubspace::zero(m.field(), m.dims());
  const Algebra& alg = m.algebra();
  for (int k = 0; k < alg.arrow_count(); ++k) {
    const Arrow& a = alg.arrow(k);
    out.part(a.target) = sum(out.part(a.target), map_subspace(m.matrix(k), u.part(a.source)));
  }
  return out;
}

std::optional<std::string> submodule_violation(const RepPoint& m, const GradedSubspace& u) {
  const Algebra& alg = m.algebra();
  for (int k = 0; k < alg.arrow_count(); ++k) {
    const Arrow& a = alg.arrow(k);
    if (!contains(u.part(a.target), map_subspace(m.matrix(k), u.part(a.source)))) return a.id;
  }
  return std::nullopt;
}

bool is_submodule(const RepPoint& m, const GradedSubspace& u) {
  return !submodule_violation(m, u).has_value();
}

std::vector<GradedSubspace> radical_series(const RepPoint& m, const GradedSubspace& u) {
  std::vector<GradedSubspace> out{u};
  const int L = m.algebra().max_path_length();
  for (int l = 1; l <= L + 1; ++l) out.push_back(arrow_image(m, out.back()));
  return out;
}

std::vector<GradedSubspace> radical_layer_spaces(const RepPoint& m) {
  return radical_series(m, GradedSubspace::full(m.field(), m.dims()));
}

static SemisimpleSequence layers_from_descending(const std::vector<GradedSubspace>& chain,
                                                 std::size_t count) {
  std::vector<DimVector> layers;
  for (std::size_t l = 0; l < count; ++l) {
    DimVector hi = chain[l].dims(), lo = chain[l + 1].dims();
    for (std::size_t i = 0; i < hi.size(); ++i) hi[i] -= lo[i];
    layers.push_back(std::move(hi));
  }
  return SemisimpleSequence(std::move(layers));
}

SemisimpleSequence radical_layering(const RepPoint& m) {
  return layers_from_descending(radical_layer_spaces(m), m.algebra().loewy_length());
}

SemisimpleSequence radical_layering(const RepPoint& m, const GradedSubspace& u) {
  return layers_from_descending(radical_series(m, u), m.algebra().loewy_length());
}

std::vector<GradedSubspace> socle_series(const RepPoint& m) {
  const Algebra& alg = m.algebra();
  std::vector<GradedSubspace> out;
  GradedSubspace prev = GradedSubspace::zero(m.field(), m.dims());
  for (int l = 0; l <= alg.max_path_length(); ++l) {
    // soc_l = {x : alpha x in soc_{l-1} for every arrow alpha}
    GradedSubspace next = GradedSubspace::full(m.field(), m.dims());
    for (int k = 0; k < alg.arrow_count(); ++k) {
      const Arrow& a = alg.arrow(k);
      next.part(a.source) = intersect(next.part(a.source), preimage(m.matrix(k), prev.part(a.target)));
    }
    out.push_back(next);
    prev = std::move(next);
  }
  return out;
}

SemisimpleSequence socle_layering(const RepPoint& m) {
  auto soc = socle_series(m);
  std::vector<DimVector> layers;
  DimVector below(m.dims().size(), 0);
  for (const auto& s : soc) {
    DimVector cur = s.dims();
    DimVector layer(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) layer[i] = cur[i] - below[i];
    layers.push_back(std::move(layer));
    below = std::move(cur);
  }
  return SemisimpleSequence(std::move(layers));
}

RepPoint extend_scalars(const RepPoint& m, const FiniteField& ext) {
  std::vector<Matrix> mats;
  for (const auto& a : m.matrices()) mats.push_back(extend_scalars(a, ext));
  return RepPoint(m.algebra(), ext, m.dims(), std::move(mats));
}

RepPoint dualize(const RepPoint& m) {
  std::vector<Matrix> mats;
  for (const auto& x : m.matrices()) mats.push_back(x.transpose());
  return RepPoint(m.algebra().opposite(), m.field(), m.dims(), std::move(mats));
}

RepPoint direct_sum(const RepPoint& a, const RepPoint& b) {
  if (!(a.algebra() == b.algebra())) throw std::invalid_argument("direct_sum: different algebras");
  if (!(a.field() == b.field())) throw std::invalid_argument("direct_sum: different fields");
  const Algebra& alg = a.algebra();
  DimVector d(a.dims().size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.dims()[i] + b.dims()[i];
  std::vector<Matrix> mats;
  for (int k = 0; k < alg.arrow_count(); ++k) {
    const Arrow& ar = alg.arrow(k);
    const Matrix& x = a.matrix(k);
    const Matrix& y = b.matrix(k);
    Matrix z(a.field(), d[ar.target], d[ar.source]);
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) z(r, c) = x(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c) z(x.rows() + r, x.cols() + c) = y(r, c);
    mats.push_back(std::move(z));
  }
  return RepPoint(alg, a.field(), std::move(d), std::move(mats));
}

// ---------------------------------------------------------------------------

std::vector<PathRank> path_rank(const RepPoint& m) {
  std::vector<PathRank> out;
  for (auto& p : enumerate_paths(m.algebra(), 0, m.algebra().max_path_length())) {
    int r = static_cast<int>(rank(act_path(m, p)));
    out.push_back(PathRank{std::move(p), r});
  }
  return out;
}

Theta theta(const RepPoint& m) { return Theta{radical_layering(m), socle_layering(m)}; }

ThetaPlus theta_plus(const RepPoint& m) {
  ThetaPlus t{radical_layering(m), socle_layering(m), {}, {}};
  for (const auto& pr : path_rank(m)) t.neg_ranks.push_back(-pr.rank);
  for (const auto& pr : path_rank(dualize(m))) t.neg_dual_ranks.push_back(-pr.rank);
  return t;
}

static bool leq_coordinatewise(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank vectors of different lengths");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

static bool theta_leq(const ThetaPlus& a, const ThetaPlus& b) {
  return dominance_leq(a.radical, b.radical) && dominance_leq(a.socle, b.socle) &&
         leq_coordinatewise(a.neg_ranks, b.neg_ranks) &&
         leq_coordinatewise(a.neg_dual_ranks, b.neg_dual_ranks);
}

PartialOrder compare(const ThetaPlus& a, const ThetaPlus& b) {
  const bool ab = theta_leq(a, b);
  const bool ba = theta_leq(b, a);
  if (ab && ba) return PartialOrder::equal;
  if (ab) return PartialOrder::less;
  if (ba) return PartialOrder::greater;
  return PartialOrder::incomparable;
}

bool is_layer_stable(const GradedSubspace& sub, const RepPoint& m) {
  if (auto bad = submodule_violation(m, sub)) throw NotSubmoduleError(*bad);
  auto ju = radical_series(m, sub);
  auto jm = radical_layer_spaces(m);
  for (std::size_t l = 0; l < ju.size(); ++l) {
    if (!(ju[l] == intersect(sub, jm[l]))) return false;
  }
  return true;
}

GradedSubspace generated_submodule(const RepPoint& m,
                                   const std::vector<std::pair<int, Vec>>& generators) {
  std::vector<std::vector<Vec>> per(m.dims().size());
  for (const auto& [v, x] : generators) {
    if (v < 0 || v >= static_cast<int>(per.size()))
      throw std::invalid_argument("generator at unknown vertex");
    if (x.size() != static_cast<std::size_t>(m.dims()[v]))
      throw std::invalid_argument("generator has the wrong length");
    per[v].push_back(x);
  }
  std::vector<Subspace> parts;
  for (std::size_t i = 0; i < per.size(); ++i)
    parts.push_back(Subspace::span(m.field(), m.dims()[i], per[i]));
  GradedSubspace u(std::move(parts));
  for (;;) {
    GradedSubspace next = sum(u, arrow_image(m, u));
    if (next == u) return u;
    u = std::move(next);
  }
}

}  // namespace quivcomp
