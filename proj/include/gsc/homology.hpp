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

#ifndef GSC_HOMOLOGY_HPP_
#define GSC_HOMOLOGY_HPP_

#include "gsc/complex.hpp"
#include "gsc/cover.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gsc {

  using IntMatrix = std::vector<std::vector<std::int64_t>>;

  // Diagonalization U * A * V = D by unimodular row and column operations.
  // Only V is kept: its columns from index rank onwards span the integer
  // kernel {x : A x = 0}. Diagonal entries are positive but not necessarily
  // in divisibility order, which is enough to read off the cokernel.
  struct SmithForm {
    std::vector<std::int64_t> diagonal;
    IntMatrix                 column_transform;
    std::size_t               rank = 0;
  };

  // a has `cols` columns (a may have zero rows). Throws gsc::Error on int64
  // overflow.
  SmithForm smith_normal_form(IntMatrix a, std::size_t cols);

  // First homology of the realization of a complex, computed from the cycle
  // space of the 1-skeleton modulo one representative loop for each cell of
  // height >= 2 (the loop generating the homology of that cell's ideal).
  struct CircleStructure {
    bool                      connected = false;
    long long                 euler     = 0;
    std::size_t               free_rank = 0;
    std::vector<std::int64_t> torsion;
    // Generator of Hom(H_1, Z) when H_1 is infinite cyclic, else empty.
    Cocycle     cocycle;
    std::string reason;

    bool is_circle() const noexcept {
      return reason.empty();
    }
  };

  CircleStructure analyze_circle(LabeledComplex const& c);

  // Connected, Euler characteristic 0 and H_1 infinite cyclic.
  bool circle_check(LabeledComplex const& c);

}  // namespace gsc

#endif  // GSC_HOMOLOGY_HPP_
