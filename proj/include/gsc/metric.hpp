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

// Metric quantities on the cyclic cover of a relator boundary. The low-level
// functions take a boundary complex and its winding cocycle; the relator
// overloads read the cached values.

#ifndef GSC_METRIC_HPP_
#define GSC_METRIC_HPP_

#include "gsc/complex.hpp"
#include "gsc/cover.hpp"
#include "gsc/rational.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gsc {

  class GeneralRelator;

  struct RatioCycle {
    Rational      ratio{0};
    PathInComplex witness;  // closed walk attaining the ratio
    std::int64_t  winding = 0;
  };

  // min over closed walks of length / |winding| by parametric negative-cycle
  // search. seed must be a closed walk of nonzero winding.
  RatioCycle min_ratio_cycle(LabeledComplex const& c, Cocycle const& phi,
                             PathInComplex const& seed);

  // min over base vertices v and 1 <= k <= K of d((v,0),(v,k)) / k.
  Rational window_scan_length(LabeledComplex const& c, Cocycle const& phi,
                              std::int64_t K);

  struct BallRemoval {
    std::size_t removed_vertices = 0;
    std::size_t removed_edges    = 0;
    std::size_t components       = 0;  // of the window after removal
    bool        ends_separated   = false;
  };

  // Deletes {w : d(center, w) < radius} plus center from the window of
  // half-width K and reports what is left. Edges go with their endpoints.
  BallRemoval ball_removal_probe(LabeledComplex const& c, Cocycle const& phi,
                                 Lift center, std::int64_t radius,
                                 std::int64_t K);

  // Least radius separating the ends around (v, 0), with the window grown
  // until two consecutive sizes agree.
  std::int64_t separating_radius(LabeledComplex const& c, Cocycle const& phi,
                                 CellId v);

  // max of separating_radius over the given vertices.
  std::int64_t width_of(LabeledComplex const& c, Cocycle const& phi,
                        std::vector<CellId> const& vertices);

  Rational     relator_length(GeneralRelator const& r);
  std::int64_t width(GeneralRelator const& r);

  // Cover geodesic between the lifts of u's endpoints, over |R|.
  Rational graph_length(GeneralRelator const& r, PathInComplex const& u);
  // Edge count of that geodesic.
  std::int64_t geodesic_length(GeneralRelator const& r, PathInComplex const& u);

  // Every path of length <= max_len in c (all start vertices).
  std::vector<PathInComplex> enumerate_paths(LabeledComplex const& c,
                                             std::size_t           max_len);

  using PathMetric = std::function<Rational(PathInComplex const&)>;

  struct ContractViolation {
    int                        property = 0;  // 1..6
    std::string                detail;
    std::vector<PathInComplex> witnesses;
  };

  struct ContractReport {
    std::vector<ContractViolation> violations;
    std::size_t                    evaluations = 0;

    bool ok() const noexcept {
      return violations.empty();
    }
    bool holds(int property) const noexcept;
  };

  // Evaluates the six relator-metric properties on the samples. Pairs are
  // formed by splitting each sample and by grouping samples with equal
  // endpoints and winding. At most max_reports violations per property.
  ContractReport check_metric_contract(GeneralRelator const&             r,
                                       PathMetric const&                 m,
                                       std::vector<PathInComplex> const& samples,
                                       std::size_t max_reports = 3);

  PathMetric graph_metric(GeneralRelator const& r);

}  // namespace gsc

#endif  // GSC_METRIC_HPP_
