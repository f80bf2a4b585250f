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

// Alpha-closure of a seed path or cycle: glue copies of relators along
// long common readings, folding after every gluing, until nothing is left
// to glue.

#ifndef GSC_CLOSURE_HPP_
#define GSC_CLOSURE_HPP_

#include "gsc/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

  enum class SeedMode { Straight, Circular };

  struct ClosureOptions {
    // Threshold on d_R(U); the presentation's alpha when unset.
    std::optional<Rational> alpha;
    std::size_t             cap   = 10000;  // attachments
    bool                    force = false;  // skip the seed reducedness check
  };

  struct ClosureAttachment {
    std::string   relator;
    CellId        relator_vertex = -1;  // where the reading starts in the relator
    Word          reading;              // the common reading that triggered it
    PathInComplex path;                 // that reading in the final complex
    std::size_t   iteration = 0;
  };

  struct ClosureResult {
    LabeledComplex                 complex;
    PathInComplex                  seed_path;  // in complex
    std::vector<ClosureAttachment> log;
    bool                           closed = false;  // false when the cap stopped it
  };

  ClosureResult alpha_closure(MeasuredPresentation const& p, Word const& seed, SeedMode mode,
                              int rank_bound, ClosureOptions const& opt = {});

  // A path readable in the result and in a relator of rank <= k with
  // d_R >= alpha, not covered by an attached copy. nullopt when closed.
  std::optional<ClosureAttachment> find_unattached_reading(MeasuredPresentation const& p,
                                                           ClosureResult const&        r,
                                                           int                         rank_bound,
                                                           Rational                    alpha);

}  // namespace gsc

#endif  // GSC_CLOSURE_HPP_
