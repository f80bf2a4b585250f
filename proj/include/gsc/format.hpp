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

// Text format for measured presentations, plus DOT and JSON export.
//
//   # comment
//   [generators] a b c
//   [constants] alpha=1/6 beta=1/6 gamma=1/12 delta=0 epsilon=0 n=0
//   [relator ab3 rank=2 metric=graph]
//   word=(ab)^3
//   [relator ab4 rank=3]
//   cycle=(ab)^4
//   attach a2 along a at 0
//   [relator m rank=3]
//   cells:
//   vertex 0
//   vertex 1
//   edge 2 0 1 label=a
//   edge 3 1 0 label=c
//   base=0
//   ref=ac
//
// Sections may span several lines. Relators may only refer to relators
// declared above them. metric accepts only "graph".

#ifndef GSC_FORMAT_HPP_
#define GSC_FORMAT_HPP_

#include "gsc/presentation.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace gsc {

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column)
                + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  MeasuredPresentation parse_presentation(std::string_view text);

  // Canonical form: plain circles as word=, everything else as cells:.
  std::string serialize(MeasuredPresentation const& p);

  std::string export_dot(LabeledComplex const& c, Alphabet const& a,
                         std::string const& name);
  std::string export_dot(MeasuredPresentation const& p);

  nlohmann::ordered_json complex_json(LabeledComplex const& c, Alphabet const& a);
  nlohmann::ordered_json path_json(LabeledComplex const& c, Alphabet const& a,
                                   PathInComplex const& p);
  nlohmann::ordered_json constants_json(Constants const& k);
  nlohmann::ordered_json presentation_json(MeasuredPresentation const& p);

}  // namespace gsc

#endif  // GSC_FORMAT_HPP_
