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

// Dehn reduction: replace a subword U readable in a relator boundary by the
// label of a shortest boundary path V between U's endpoints, |V| < |U|.

#ifndef GSC_REDUCTION_HPP_
#define GSC_REDUCTION_HPP_

#include "gsc/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // One replacement, applied to the freely reduced word of the previous step.
  struct ReductionStep {
    std::size_t position = 0;
    std::size_t length   = 0;  // |U|
    std::string relator;
    CellId      start = -1;  // boundary vertex where U is read
    Word        replacement;
    std::size_t before = 0;
    std::size_t after  = 0;  // after free reduction
  };

  struct ReductionResult {
    Word                       word;
    std::vector<ReductionStep> trace;
  };

  class DehnSolver {
   public:
    // Relators are searched shortest first (then by name).
    explicit DehnSolver(MeasuredPresentation const& p);

    // Leftmost replacement in the first relator that has one; w is used as is.
    std::optional<ReductionStep> find_replacement(Word const& w) const;

    ReductionResult reduce(Word const& w) const;
    bool            trivial(Word const& w) const;

   private:
    struct Table {
      std::string         name;
      std::size_t         nv = 0;
      std::vector<CellId> vertex;  // dense index -> boundary cell
      std::vector<int>    next;    // nv * letter codes, -1 if unreadable
      std::vector<int>    dist;    // nv * nv, empty for very large boundaries
      std::vector<std::vector<std::pair<int, Letter>>> adj;
    };
    std::vector<int> distances_from(Table const& t, int s) const;
    Word             shortest_word(Table const& t, int s, int target) const;

    std::size_t        _codes = 0;
    std::vector<Table> _tables;
  };

  // Checks solve_precondition unless force is set.
  ReductionResult dehn_reduce(MeasuredPresentation const& p, Word const& w, bool force = false);
  bool            word_problem(MeasuredPresentation const& p, Word const& w, bool force = false);

  struct ReductionFlags {
    bool freely_reduced = false;
    bool dehn_reduced   = false;
    bool mu_free        = false;
    // Largest d_R(U) over readable subwords, with where it happens.
    Rational    max_measure{0};
    std::string max_relator;
  };
  ReductionFlags reduction_status(MeasuredPresentation const& p, Word const& w, Rational mu);

  struct CayleyBall {
    std::vector<Word> elements;  // shortlex-least representatives, BFS order
    struct Edge {
      std::size_t from;
      std::size_t to;
      int         gen;
    };
    std::vector<Edge> edges;
    bool              truncated = false;
  };
  CayleyBall cayley_ball(MeasuredPresentation const& p, std::size_t radius, std::size_t cap,
                         bool force = false);

}  // namespace gsc

#endif  // GSC_REDUCTION_HPP_
