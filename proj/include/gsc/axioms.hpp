// Copyright 2026 The gsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSC_AXIOMS_HPP_
#define GSC_AXIOMS_HPP_

#include "gsc/presentation.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

  enum class AxiomStatus { Pass, PassBounded, Fail, Unverified };

  char const* to_string(AxiomStatus s) noexcept;

  struct AxiomWitness {
    std::vector<std::string>   relators;
    std::vector<PathInComplex> paths;  // in the boundaries named above, in order
    std::vector<Rational>      values;
    std::string                note;
  };

  struct AxiomResult {
    int                         axiom  = 0;
    AxiomStatus                 status = AxiomStatus::Unverified;
    std::string                 detail;
    std::optional<Rational>     measured;
    std::optional<AxiomWitness> witness;
  };

  struct AxiomBounds {
    // Product-path length cap for the overlap searches; 0 means twice the
    // largest boundary edge count.
    std::size_t path_cap = 0;
    // Longest word V tried for each self-overlap pattern.
    std::size_t v_cap = 6;
    // Representatives examined for self-overlaps are those of length at most
    // shortest + extra_rep_length.
    std::size_t extra_rep_length = 0;
    std::size_t max_patterns     = 20000;
  };

  struct MeasuredConstants {
    // Values are lower bounds when the matching flag is false (cap reached).
    Rational alpha{0};
    Rational beta{0};
    Rational gamma{0};
    Rational delta{0};
    Rational epsilon{0};
    bool     alpha_complete = true;
    bool     beta_complete  = true;
  };

  struct AxiomReport {
    std::array<AxiomResult, 7> results;
    MeasuredConstants          measured;
    std::vector<std::string>   warnings;

    bool any_failure() const noexcept;
  };

  AxiomReport       verify_axioms(MeasuredPresentation const& p, AxiomBounds const& bounds = {});
  MeasuredConstants measure_constants(MeasuredPresentation const& p,
                                      AxiomBounds const&          bounds = {});

  // Functors r -> s (cone maps) sending the reading u_in_r onto u_in_s.
  // Throws when the two paths spell different words.
  std::vector<std::vector<CellId>> find_functors(GeneralRelator const& r,
                                                 GeneralRelator const& s,
                                                 PathInComplex const&  u_in_r,
                                                 PathInComplex const&  u_in_s);

  // The inequalities between the declared constants.
  AxiomResult check_constant_constraints(Constants const& k);

  // Gate for the word-problem solver: no axiom fails and 3a + 2g + d <= 1/2.
  struct SolveGate {
    bool        ok = false;
    std::string reason;
  };
  SolveGate solve_precondition(MeasuredPresentation const& p, AxiomBounds const& bounds = {});

}  // namespace gsc

#endif  // GSC_AXIOMS_HPP_
