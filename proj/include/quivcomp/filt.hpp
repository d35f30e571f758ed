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
 * @file    filt.hpp
 * @brief   Deciding whether a module has a filtration governed by a
 *          semisimple sequence, and the Gamma count.
 *
 * A governed filtration is a flag M = M_0 >= M_1 >= ... >= M_{L+1} = 0 of
 * submodules with J M_l <= M_{l+1} and M_l / M_{l+1} of dimension vector
 * S_l. The search walks the flag top-down: given M_l, every admissible
 * M_{l+1} is J M_l plus a subspace of a fixed complement of J M_l in M_l.
 */

#ifndef QUIVCOMP_FILT_HPP
#define QUIVCOMP_FILT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivcomp/field.hpp"
#include "quivcomp/quiver.hpp"
#include "quivcomp/rep.hpp"

namespace quivcomp {

enum class Decision { yes, no, undecided };
std::string to_string(Decision d);

/// serial is the reference path; parallel uses OpenMP over candidates.
enum class Exec { serial, parallel };

struct SearchLimits {
  /// Largest Gaussian binomial enumerated at one layer and vertex.
  std::uint64_t subspace_budget = kDefaultEnumerationBudget;
  /// Search nodes (layer entries) before a single query gives up.
  std::uint64_t node_budget = 20'000'000;
};

/// flag[l] = M_l for l = 0..L+1. For cofiltrations the chain ascends
/// instead: flag[0] = 0, flag[L+1] = M.
struct Filtration {
  std::vector<GradedSubspace> flag;
};

struct FiltrationResult {
  Decision decision = Decision::no;
  std::optional<Filtration> witness;
  std::string note;  // set when undecided
  std::uint64_t nodes = 0;
};

/// Throws std::invalid_argument when s has the wrong shape or total.
FiltrationResult has_filtration(const RepPoint& m, const SemisimpleSequence& s,
                                const SearchLimits& limits = {});

/// nullopt when the flag is a filtration of m governed by s.
std::optional<std::string> validate_filtration(const RepPoint& m, const SemisimpleSequence& s,
                                               const Filtration& f);

/// Ascending chain 0 = N_0 <= ... <= N_{L+1} = M with J N_{l+1} <= N_l and
/// N_{l+1} / N_l of dimension vector s_star[l]; so s_star[0] sits in the
/// socle. Decided on the dual module.
FiltrationResult has_cofiltration(const RepPoint& m, const SemisimpleSequence& s_star,
                                  const SearchLimits& limits = {});

std::optional<std::string> validate_cofiltration(const RepPoint& m,
                                                 const SemisimpleSequence& s_star,
                                                 const Filtration& f);

struct GovernedSequence {
  SemisimpleSequence sequence;
  FiltrationResult result;
};

struct GammaReport {
  int lower = 0;  // sequences proven to govern
  int upper = 0;  // lower plus undecided ones
  std::vector<GovernedSequence> governed;   // decision yes, with witness
  std::vector<GovernedSequence> undecided;
  bool exact() const { return lower == upper; }
};

/// Every sequence of total d(m) with S_0 != 0 and s <= S(m) that governs a
/// filtration of m; realizable ones only when asked. Results are in
/// enumeration order whichever Exec is used.
GammaReport governing_sequences(const RepPoint& m, bool realizable_only,
                                const SearchLimits& limits = {}, Exec exec = Exec::parallel);

/// Gamma(m): the realizable governing sequences.
GammaReport gamma(const RepPoint& m, const SearchLimits& limits = {}, Exec exec = Exec::parallel);

}  // namespace quivcomp

#endif  // QUIVCOMP_FILT_HPP
