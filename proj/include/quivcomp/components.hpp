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
 * @file    components.hpp
 * @brief   Classifying the irreducible components of Rep_d for a truncated
 *          path algebra.
 *
 * A realizable sequence S is accepted when its generic module G(S) admits
 * no filtration governed by any other realizable sequence, i.e. Gamma = 1.
 * Generic modules are built over F_p; filtrations are searched for after
 * extending scalars to F_{p^k}, so conditions that only have solutions in
 * a quadratic (k = 2) extension are not missed. Either way this is a
 * proxy for the algebraic closure; the prime, degree, seed and retry count
 * used are kept in every report.
 */

#ifndef QUIVCOMP_COMPONENTS_HPP
#define QUIVCOMP_COMPONENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quivcomp/filt.hpp"
#include "quivcomp/quiver.hpp"
#include "quivcomp/rep.hpp"
#include "quivcomp/skeleta.hpp"

namespace quivcomp {

struct ClassifyConfig {
  std::uint32_t prime = 101;
  /// Filtration searches run over F_{prime^extension_degree}.
  unsigned extension_degree = 2;
  std::uint64_t seed = 0;
  /// Fresh generic modules tried after one whose Gamma exceeds 1.
  int retries = 4;
  /// Reseeds allowed inside generic_module's layering post-check.
  int generic_retries = 8;
  SearchLimits limits;
  /// Run the test on every skeleton of S and take the majority verdict.
  bool all_skeleta = false;
  Exec exec = Exec::parallel;
};

struct Component {
  SemisimpleSequence layering;
  RepPoint witness;  // the generic module with Gamma = 1
  ThetaPlus theta_plus;
  Hypergraph hypergraph;
  std::uint64_t module_seed;
};

struct Rejection {
  SemisimpleSequence layering;
  SemisimpleSequence governed_by;  // realizable, != layering, <= layering
  RepPoint generic;    // over F_p
  Filtration witness;  // of `generic` over F_{p^k}, governed by governed_by
  std::uint64_t module_seed;
};

struct Undetermined {
  SemisimpleSequence layering;
  std::optional<SemisimpleSequence> query;  // the has_filtration call that did not finish
  std::string reason;
};

struct ComponentReport {
  Algebra algebra;
  DimVector d;
  std::uint32_t prime;
  unsigned extension_degree;
  std::uint64_t seed;
  int retries;
  std::vector<Component> components;
  std::vector<Rejection> rejected;
  std::vector<Undetermined> undetermined;

  std::vector<SemisimpleSequence> component_layerings() const;
};

ComponentReport classify(const Algebra& alg, const DimVector& d, const ClassifyConfig& config = {});

struct ClosureResult {
  Decision decision = Decision::no;
  bool by_dominance = false;  // "no" settled before any module was built
  std::optional<Filtration> witness;
  std::string note;
};

/// Whether the closure of Rep S lies inside the closure of Rep S', tested on
/// the generic module of S. A "no" at any seed is final; "yes" needs every
/// one of 1 + retries generic modules to carry an S'-filtration.
ClosureResult closure_contains(const Algebra& alg, const SemisimpleSequence& s,
                               const SemisimpleSequence& s_prime,
                               const ClassifyConfig& config = {});

struct Allocation {
  std::vector<GovernedSequence> contained;  // decision yes, with witness
  std::vector<GovernedSequence> undecided;
};

/// The components of `report` whose layering governs a filtration of m.
/// A module over a prime field is searched over its degree
/// report.extension_degree extension.
Allocation allocate(const RepPoint& m, const ComponentReport& report,
                    const SearchLimits& limits = {}, Exec exec = Exec::parallel);

}  // namespace quivcomp

#endif  // QUIVCOMP_COMPONENTS_HPP
