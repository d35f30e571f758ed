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

#include "quivcomp/filt.hpp"

#include <exception>
#include <functional>
#include <stdexcept>

namespace quivcomp {

std::string to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

namespace {

void check_shape(const RepPoint& m, const SemisimpleSequence& s) {
  const Algebra& alg = m.algebra();
  if (static_cast<int>(s.length()) != alg.loewy_length() ||
      static_cast<int>(s.vertex_count()) != alg.vertex_count()) {
    throw std::invalid_argument("sequence has " + std::to_string(s.length()) +
                                " layers; the algebra needs " +
                                std::to_string(alg.loewy_length()));
  }
  if (s.total() != m.dims()) {
    throw std::invalid_argument("sequence total " + to_string(s.total()) +
                                " differs from the module dimension " + to_string(m.dims()));
  }
}

class FlagSearch {
 public:
  FlagSearch(const RepPoint& m, const SemisimpleSequence& s, const SearchLimits& lim)
      : m_(m), s_(s), lim_(lim), n_(m.algebra().vertex_count()),
        top_(m.algebra().loewy_length()) {
    flag_.assign(top_ + 1, GradedSubspace::zero(m.field(), m.dims()));
    flag_[0] = GradedSubspace::full(m.field(), m.dims());
  }

  FiltrationResult run() {
    FiltrationResult r;
    if (layer(0)) {
      r.decision = Decision::yes;
      r.witness = Filtration{flag_};
    } else {
      r.decision = undecided_ ? Decision::undecided : Decision::no;
      r.note = note_;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  // Sum_{t=l}^{l+k-1} s_t <= dim M_l - dim J^k M_l for every k: the chain
  // below M_l can only lose as much as its radical series does. At l = 0
  // this is the dominance test s <= S(M).
  bool tail_feasible(int l) const {
    auto rad = radical_series(m_, flag_[l]);
    DimVector acc(n_, 0);
    for (int k = 1; l + k - 1 < top_; ++k) {
      DimVector hi = rad[0].dims(), lo = rad[k].dims();
      for (int i = 0; i < n_; ++i) {
        acc[i] += s_.layer(l + k - 1)[i];
        if (acc[i] > hi[i] - lo[i]) return false;
      }
    }
    return true;
  }

  void give_up(std::string why) {
    undecided_ = true;
    if (note_.empty()) note_ = std::move(why);
  }

  bool layer(int l) {
    if (l == top_) return true;  // dimensions force M_{L+1} = 0
    if (++nodes_ > lim_.node_budget) {
      give_up("search node budget " + std::to_string(lim_.node_budget) + " exhausted over " +
              m_.field().name() + "; reduce p for this query or raise the budget");
      return false;
    }
    if (!tail_feasible(l)) return false;

    const GradedSubspace& cur = flag_[l];
    GradedSubspace jm = arrow_image(m_, cur);
    std::vector<Subspace> comp;
    std::vector<std::size_t> keep;  // dim of the piece kept beyond J M_l
    for (int i = 0; i < n_; ++i) {
      const int q = static_cast<int>(cur.part(i).dim() - jm.part(i).dim());
      const int need = s_.layer(l)[i];
      if (need > q) return false;
      comp.push_back(complement_in(jm.part(i), cur.part(i)));
      keep.push_back(static_cast<std::size_t>(q - need));
      auto count = gaussian_binomial(q, q - need, m_.field().order());
      if (count > lim_.subspace_budget) {
        give_up("undecided over " + m_.field().name() + ": layer " +
                std::to_string(l) + " vertex " + std::to_string(i + 1) + " needs " +
                std::to_string(count) + " subspaces (budget " +
                std::to_string(lim_.subspace_budget) +
                "); reduce p for this query or raise budget");
        return false;
      }
    }

    std::vector<Subspace> parts(jm.parts());
    bool found = false;
    std::function<void(int)> vertex = [&](int i) {
      if (found) return;
      if (i == n_) {
        flag_[l + 1] = GradedSubspace(parts);
        found = layer(l + 1);
        return;
      }
      for_each_subspace(
          comp[i], keep[i],
          [&](const Subspace& w) {
            parts[i] = sum(jm.part(i), w);
            vertex(i + 1);
            return !found;
          },
          lim_.subspace_budget);
    };
    vertex(0);
    return found;
  }

  const RepPoint& m_;
  const SemisimpleSequence& s_;
  SearchLimits lim_;
  int n_;
  int top_;  // L+1
  std::vector<GradedSubspace> flag_;
  bool undecided_ = false;
  std::string note_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

FiltrationResult has_filtration(const RepPoint& m, const SemisimpleSequence& s,
                                const SearchLimits& limits) {
  check_shape(m, s);
  return FlagSearch(m, s, limits).run();
}

std::optional<std::string> validate_filtration(const RepPoint& m, const SemisimpleSequence& s,
                                               const Filtration& f) {
  const int top = m.algebra().loewy_length();
  if (static_cast<int>(f.flag.size()) != top + 1) return "flag has the wrong length";
  if (!(f.flag.front() == GradedSubspace::full(m.field(), m.dims()))) return "M_0 is not M";
  if (!f.flag.back().is_zero()) return "M_{L+1} is not zero";
  for (int l = 0; l < top; ++l) {
    if (!contains(f.flag[l], f.flag[l + 1])) return "flag is not descending at " + std::to_string(l);
    if (!contains(f.flag[l + 1], arrow_image(m, f.flag[l])))
      return "J M_" + std::to_string(l) + " is not inside M_" + std::to_string(l + 1);
    DimVector a = f.flag[l].dims(), b = f.flag[l + 1].dims();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] - b[i] != s.layer(l)[i]) return "quotient " + std::to_string(l) + " has wrong dims";
  }
  return std::nullopt;
}

FiltrationResult has_cofiltration(const RepPoint& m, const SemisimpleSequence& s_star,
                                  const SearchLimits& limits) {
  check_shape(m, s_star);
  FiltrationResult r = has_filtration(dualize(m), s_star, limits);
  if (r.witness) {
    // N_t = annihilator of the dual flag's M_t
    for (auto& g : r.witness->flag) {
      std::vector<Subspace> parts;
      for (const auto& p : g.parts()) parts.push_back(annihilator(p));
      g = GradedSubspace(std::move(parts));
    }
  }
  return r;
}

std::optional<std::string> validate_cofiltration(const RepPoint& m,
                                                 const SemisimpleSequence& s_star,
                                                 const Filtration& f) {
  const int top = m.algebra().loewy_length();
  if (static_cast<int>(f.flag.size()) != top + 1) return "chain has the wrong length";
  if (!f.flag.front().is_zero()) return "N_0 is not zero";
  if (!(f.flag.back() == GradedSubspace::full(m.field(), m.dims()))) return "N_{L+1} is not M";
  for (int l = 0; l < top; ++l) {
    if (!contains(f.flag[l + 1], f.flag[l])) return "chain is not ascending at " + std::to_string(l);
    if (!contains(f.flag[l], arrow_image(m, f.flag[l + 1])))
      return "J N_" + std::to_string(l + 1) + " is not inside N_" + std::to_string(l);
    DimVector a = f.flag[l + 1].dims(), b = f.flag[l].dims();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] - b[i] != s_star.layer(l)[i])
        return "quotient " + std::to_string(l) + " has wrong dims";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GammaReport governing_sequences(const RepPoint& m, bool realizable_only,
                                const SearchLimits& limits, Exec exec) {
  const SemisimpleSequence top = radical_layering(m);
  std::vector<SemisimpleSequence> cand;
  for (auto& s : enumerate_sequences(m.algebra(), m.dims(), realizable_only))
    if (dominance_leq(s, top)) cand.push_back(std::move(s));

  std::vector<FiltrationResult> res(cand.size());
  const long count = static_cast<long>(cand.size());
  if (exec == Exec::serial) {
    for (long k = 0; k < count; ++k) res[k] = has_filtration(m, cand[k], limits);
  } else {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < count; ++k) {
      try {
        res[k] = has_filtration(m, cand[k], limits);
      } catch (...) {
#pragma omp critical(quivcomp_gamma_err)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }

  GammaReport out;
  for (std::size_t k = 0; k < cand.size(); ++k) {
    if (res[k].decision == Decision::yes) {
      out.governed.push_back(GovernedSequence{cand[k], std::move(res[k])});
    } else if (res[k].decision == Decision::undecided) {
      out.undecided.push_back(GovernedSequence{cand[k], std::move(res[k])});
    }
  }
  out.lower = static_cast<int>(out.governed.size());
  out.upper = out.lower + static_cast<int>(out.undecided.size());
  return out;
}

GammaReport gamma(const RepPoint& m, const SearchLimits& limits, Exec exec) {
  return governing_sequences(m, true, limits, exec);
}

}  // namespace quivcomp
