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

#ifndef GSC_PRESENTATION_HPP_
#define GSC_PRESENTATION_HPP_

#include "gsc/complex.hpp"
#include "gsc/rational.hpp"
#include "gsc/relator.hpp"
#include "gsc/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

  struct Constants {
    Rational     alpha{0};
    Rational     beta{0};
    Rational     gamma{0};
    Rational     delta{0};
    Rational     epsilon{0};
    std::int64_t n        = 0;
    bool         declared = false;

    // The constants block used for the Burnside construction.
    static Constants burnside();

    friend bool operator==(Constants const&, Constants const&) = default;
  };

  class MeasuredPresentation {
   public:
    MeasuredPresentation() = default;
    MeasuredPresentation(Alphabet alphabet, std::vector<GeneralRelator> relators,
                         Constants constants = {});

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<GeneralRelator> const& relators() const noexcept {
      return _relators;
    }
    Constants const& constants() const noexcept {
      return _constants;
    }
    void set_constants(Constants c) {
      _constants = c;
    }

    // nullptr when absent.
    GeneralRelator const* find(std::string const& name) const;

   private:
    Alphabet                    _alphabet;
    std::vector<GeneralRelator> _relators;
    Constants                   _constants;
  };

  // Adds relators for missing subcones, then checks that every boundary cone
  // is isomorphic to a relator of strictly smaller rank and that labels are
  // in range. Throws gsc::Error naming the offending relator and cell.
  std::vector<GeneralRelator> close_and_check_ranks(std::vector<GeneralRelator> rs,
                                                    Alphabet const&            a);

  // Copies sub's boundary into host so that the path of sub spelling
  // host_path's label from the least possible start vertex lands on
  // host_path, then cones it off with tag sub.name(). Returns the cone id.
  CellId attach_along(LabeledComplex& host, GeneralRelator const& sub,
                      PathInComplex const& host_path);

  // A base cycle spelling `cycle` with subrelators attached along the
  // segments (name lookup in `known`, start offset on the cycle, word).
  struct Attachment {
    std::string sub;
    Word        along;
    std::size_t offset = 0;
  };
  GeneralRelator composite_relator(std::string name, Word const& cycle,
                                   std::vector<Attachment> const&     attachments,
                                   std::vector<GeneralRelator> const& known,
                                   std::optional<int>                 rank = std::nullopt);

  // Coxeter matrix entry 0 means no relation (infinite order).
  using CoxeterMatrix = std::vector<std::vector<int>>;

  MeasuredPresentation coxeter_example(CoxeterMatrix const& m);
  MeasuredPresentation dihedral_example(int n);
  MeasuredPresentation modular_example();
  MeasuredPresentation height4_example();
  MeasuredPresentation moebius_example();

  // The literal Möbius-strip boundary: twelve vertices, fifteen edges and
  // three hexagons, with its stored reference loop babcb a^-1 c^-1.
  GeneralRelator moebius_relator();

  // Names: modular, dihedral<n> (also "dihedral" = dihedral4), coxeter
  // (params "2,3;3" style rows via coxeter_example), height4, moebius.
  MeasuredPresentation build_example(std::string const& name);
  std::vector<std::string> example_names();

  struct PoincareComplex {
    LabeledComplex           complex;
    std::vector<std::string> attached;  // relator names in attachment order
    std::vector<Word>        relation_words;
  };
  PoincareComplex poincare_construction(MeasuredPresentation const& p);

}  // namespace gsc

#endif  // GSC_PRESENTATION_HPP_
