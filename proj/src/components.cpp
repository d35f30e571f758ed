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

#include "quivcomp/components.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace quivcomp {

std::vector<SemisimpleSequence> ComponentReport::component_layerings() const {
  std::vector<SemisimpleSequence> out;
  for (const auto& c : components) out.push_back(c.layering);
  return out;
}

namespace {

enum class Outcome { accept, reject, undetermined };

struct Verdict {
  Outcome outcome = Outcome::undetermined;
  std::optional<GenericModule> module;
  std::optional<SemisimpleSequence> governed_by;
  std::optional<Filtration> witness;
  std::optional<SemisimpleSequence> query;
  std::string reason;
};

// Gamma(G) = 1 restricted to the candidate list
Verdict test_generic(GenericModule gm, const std::vector<SemisimpleSequence>& cands,
                     const FiniteField& ext, const SearchLimits& limits) {
  Verdict v;
  const RepPoint big = extend_scalars(gm.module, ext);
  for (const auto& sp : cands) {
    FiltrationResult r = has_filtration(big, sp, limits);
    if (r.decision == Decision::yes) {
      v.outcome = Outcome::reject;
      v.governed_by = sp;
      v.witness = std::move(r.witness);
      v.module = std::move(gm);
      return v;
    }
    if (r.decision == Decision::undecided && !v.query) {
      v.query = sp;
      v.reason = r.note;
    }
  }
  v.outcome = v.query ? Outcome::undetermined : Outcome::accept;
  v.module = std::move(gm);
  return v;
}

// runs body(k) for k in [0, count), serially or across OpenMP threads
template <class F>
void for_each_index(long count, Exec exec, F&& body) {
  if (exec == Exec::serial) {
    for (long k = 0; k < count; ++k) body(k);
    return;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical(quivcomp_classify_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

std::uint64_t module_seed(std::uint64_t base, std::size_t seq, std::size_t skel, int attempt) {
  return mix_seed(base, seq, (static_cast<std::uint64_t>(skel) << 16) | static_cast<unsigned>(attempt));
}

}  // namespace

ComponentReport classify(const Algebra& alg, const DimVector& d, const ClassifyConfig& config) {
  const FiniteField field(config.prime);
  const FiniteField ext(config.prime, config.extension_degree);
  const auto seqs = enumerate_sequences(alg, d, true);
  const long count = static_cast<long>(seqs.size());

  // phase 1: one generic module per sequence, for Theta+ ordering
  std::vector<std::vector<Skeleton>> skels(seqs.size());
  std::vector<std::optional<GenericModule>> first(seqs.size());
  std::vector<std::optional<ThetaPlus>> tp(seqs.size());
  std::vector<std::string> synth_error(seqs.size());
  for_each_index(count, config.exec, [&](long k) {
    skels[k] = enumerate_skeleta(alg, seqs[k], config.all_skeleta ? 0 : 1);
    if (skels[k].empty()) throw std::logic_error("realizable sequence without a skeleton");
    try {
      first[k] = generic_module(alg, field, skels[k][0], module_seed(config.seed, k, 0, 0),
                                config.generic_retries);
      tp[k] = theta_plus(first[k]->module);
    } catch (const GenericityError& e) {
      synth_error[k] = e.what();
    }
  });

  // phase 2: the Gamma test
  std::vector<Verdict> verdicts(seqs.size());
  for_each_index(count, config.exec, [&](long k) {
    const auto& s = seqs[k];
    std::vector<SemisimpleSequence> low, rest;
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      if (static_cast<long>(j) == k || !dominance_leq(seqs[j], s)) continue;
      bool below = tp[k] && tp[j] && compare(*tp[j], *tp[k]) == PartialOrder::less;
      (below ? low : rest).push_back(seqs[j]);
    }
    low.insert(low.end(), rest.begin(), rest.end());

    std::vector<Verdict> per_skeleton;
    for (std::size_t j = 0; j < skels[k].size(); ++j) {
      Verdict best;
      std::optional<Verdict> reject, undet;
      for (int a = 0; a <= config.retries; ++a) {
        Verdict v;
        try {
          GenericModule gm = (j == 0 && a == 0 && first[k])
                                 ? *first[k]
                                 : generic_module(alg, field, skels[k][j],
                                                  module_seed(config.seed, k, j, a),
                                                  config.generic_retries);
          v = test_generic(std::move(gm), low, ext, config.limits);
        } catch (const GenericityError& e) {
          v.outcome = Outcome::undetermined;
          v.reason = e.what();
        }
        if (v.outcome == Outcome::accept) {
          reject.reset();
          undet.reset();
          best = std::move(v);
          break;
        }
        if (v.outcome == Outcome::reject && !reject) reject = std::move(v);
        else if (v.outcome == Outcome::undetermined && !undet) undet = std::move(v);
      }
      if (best.outcome != Outcome::accept) best = undet ? std::move(*undet) : std::move(*reject);
      per_skeleton.push_back(std::move(best));
    }

    if (per_skeleton.size() == 1) {
      verdicts[k] = std::move(per_skeleton[0]);
      return;
    }
    int votes[3] = {0, 0, 0};
    for (const auto& v : per_skeleton) ++votes[static_cast<int>(v.outcome)];
    const int top = *std::max_element(votes, votes + 3);
    int winners = 0, pick = 0;
    for (int o = 0; o < 3; ++o)
      if (votes[o] == top) ++winners, pick = o;
    if (winners > 1) {
      Verdict v;
      v.reason = "skeleton vote tied: " + std::to_string(votes[0]) + " accept, " +
                 std::to_string(votes[1]) + " reject, " + std::to_string(votes[2]) +
                 " undetermined";
      verdicts[k] = std::move(v);
      return;
    }
    for (auto& v : per_skeleton) {
      if (static_cast<int>(v.outcome) == pick) {
        verdicts[k] = std::move(v);
        break;
      }
    }
  });

  ComponentReport rep{alg, d, config.prime, config.extension_degree, config.seed, config.retries, {}, {}, {}};
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    Verdict& v = verdicts[k];
    switch (v.outcome) {
      case Outcome::accept: {
        ThetaPlus t = theta_plus(v.module->module);
        rep.components.push_back(Component{seqs[k], v.module->module, std::move(t),
                                           v.module->hypergraph, v.module->seed});
        break;
      }
      case Outcome::reject:
        rep.rejected.push_back(Rejection{seqs[k], *v.governed_by, v.module->module, *v.witness,
                                         v.module->seed});
        break;
      case Outcome::undetermined:
        rep.undetermined.push_back(Undetermined{seqs[k], v.query, v.reason});
        break;
    }
  }
  return rep;
}

ClosureResult closure_contains(const Algebra& alg, const SemisimpleSequence& s,
                               const SemisimpleSequence& s_prime, const ClassifyConfig& config) {
  if (!is_realizable(alg, s) || !is_realizable(alg, s_prime))
    throw std::invalid_argument("closure_contains needs realizable sequences");
  if (s.total() != s_prime.total())
    throw std::invalid_argument("sequences have different totals " + to_string(s.total()) +
                                " and " + to_string(s_prime.total()));
  ClosureResult out;
  if (!dominance_leq(s_prime, s)) {
    out.decision = Decision::no;
    out.by_dominance = true;
    out.note = "S' is not below S in the dominance order";
    return out;
  }
  const FiniteField field(config.prime);
  const FiniteField ext(config.prime, config.extension_degree);
  const auto sk = enumerate_skeleta(alg, s, 1);
  bool undecided = false;
  for (int a = 0; a <= config.retries; ++a) {
    GenericModule gm = generic_module(alg, field, sk.at(0), mix_seed(config.seed, 0xC105EULL, a),
                                      config.generic_retries);
    FiltrationResult r = has_filtration(extend_scalars(gm.module, ext), s_prime, config.limits);
    if (r.decision == Decision::no) {
      out = ClosureResult{Decision::no, false, std::nullopt,
                          "no filtration on the generic module (seed " +
                              std::to_string(gm.seed) + ")"};
      return out;
    }
    if (r.decision == Decision::undecided) {
      undecided = true;
      out.note = r.note;
    } else if (!out.witness) {
      out.witness = std::move(r.witness);
    }
  }
  out.decision = undecided ? Decision::undecided : Decision::yes;
  return out;
}

Allocation allocate(const RepPoint& m, const ComponentReport& report, const SearchLimits& limits,
                    Exec exec) {
  if (m.dims() != report.d)
    throw std::invalid_argument("module dimension " + to_string(m.dims()) +
                                " differs from the report's " + to_string(report.d));
  const RepPoint big = m.field().degree() == 1 && report.extension_degree > 1
                           ? extend_scalars(m, FiniteField(m.field().p(), report.extension_degree))
                           : m;
  std::vector<FiltrationResult> res(report.components.size());
  for_each_index(static_cast<long>(res.size()), exec, [&](long k) {
    res[k] = has_filtration(big, report.components[k].layering, limits);
  });
  Allocation out;
  for (std::size_t k = 0; k < res.size(); ++k) {
    if (res[k].decision == Decision::yes)
      out.contained.push_back(GovernedSequence{report.components[k].layering, std::move(res[k])});
    else if (res[k].decision == Decision::undecided)
      out.undecided.push_back(GovernedSequence{report.components[k].layering, std::move(res[k])});
  }
  return out;
}

}  // namespace quivcomp
