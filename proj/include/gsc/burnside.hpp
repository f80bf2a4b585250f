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

// Low-rank stage of the Burnside presentation: power relators w^n for simple
// words w, their small cancellation check, and an exploratory closure probe
// one rank higher.

#ifndef GSC_BURNSIDE_HPP_
#define GSC_BURNSIDE_HPP_

#include "gsc/axioms.hpp"
#include "gsc/closure.hpp"
#include "gsc/presentation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

  struct BurnsideConfig {
    int          m = 2;
    std::int64_t n = 1260;
    Constants    constants = Constants::burnside();
    // Required for n < 1260; such runs are exploratory only.
    bool toy = false;

    void check() const;
    Rational beta_n() const {
      return constants.beta * n;
    }
    // Power bound used by the admissibility filter; toy runs keep the value
    // 6 of the 1260 regime, since beta*n < 1 would reject every word.
    Rational power_bound() const;
    Alphabet alphabet() const;
  };

  // Cyclically reduced, nonempty and not a proper power.
  bool is_simple_word(Word const& w);

  struct PowerContent {
    Word         x;
    std::int64_t p = 0;
  };
  // Largest p with some simple X such that X^p is a subword of the cyclic
  // word w (of length at most |w|). w must be cyclically reduced.
  PowerContent max_power_content(Word const& w);

  // Shortlex-least word among the rotations of w and of w^-1.
  Word canonical_cyclic(Word const& w);

  struct Rank2Rejection {
    enum class Kind { NotSimple, PowerContent } kind = Kind::NotSimple;
    PowerContent content;
    std::string  reason() const;
  };

  struct Rank2Build {
    std::optional<GeneralRelator> relator;
    std::optional<Rank2Rejection> rejection;
  };

  // Rejects unless w is simple and its power content stays below beta*n.
  Rank2Build  build_rank2(BurnsideConfig const& cfg, Word const& w);
  std::string rank2_name(BurnsideConfig const& cfg, Word const& w);

  // One relator per admissible class, |w| <= max_len, in shortlex order of
  // the class representatives.
  std::vector<GeneralRelator> enumerate_rank2(BurnsideConfig const& cfg, std::size_t max_len);

  struct Piece {
    std::string  first;
    std::string  second;
    std::size_t  first_offset  = 0;
    std::size_t  second_offset = 0;
    bool         second_inverted = false;
    Word         word;
    std::size_t  length   = 0;
    bool         unbounded = false;  // the two cycles agree all the way round
    Rational     limit{0};           // beta * min(|R|, |S|)
  };

  struct CPrimeReport {
    bool                 pass  = true;
    std::size_t          pairs = 0;
    std::optional<Piece> max_piece;  // largest piece relative to its limit
    Rational             max_ratio{0};
    std::vector<Piece>   violations;
  };

  // Relators must be plain circles. Alignments induced by automorphisms of
  // one relator are not pieces.
  CPrimeReport verify_cprime(std::vector<GeneralRelator> const& relators, Rational beta);

  struct ProbeCaps {
    std::size_t attachments   = 200;
    std::size_t rank2_max_len = 0;  // 0: |w|
  };

  struct ProbeResult {
    MeasuredPresentation             rank2;
    ClosureResult                    closure;
    bool                             subsumed = false;
    std::string                      subsumed_by;
    std::optional<GeneralRelator>    candidate;
    std::optional<MeasuredConstants> measured;
    std::vector<std::string>         notes;
  };

  // Closure of the cycle w^n against the rank-2 set. Exploratory.
  ProbeResult rank3_probe(BurnsideConfig const& cfg, Word const& w, ProbeCaps const& caps = {});

}  // namespace gsc

#endif  // GSC_BURNSIDE_HPP_
