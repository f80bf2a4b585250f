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

// Reference engines used to cross-check the library. None of them shares
// code with the fast paths they check.

#ifndef GSC_ORACLES_HPP_
#define GSC_ORACLES_HPP_

#include "gsc/complex.hpp"
#include "gsc/cover.hpp"
#include "gsc/rational.hpp"
#include "gsc/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gsc::oracle {

  using BigInt = boost::multiprecision::cpp_int;

  struct Matrix2 {
    BigInt a = 1, b = 0, c = 0, d = 1;
    friend bool operator==(Matrix2 const&, Matrix2 const&) = default;
  };

  // Generator 0 is S = (0 -1; 1 0), generator 1 is T = (1 1; 0 1).
  Matrix2 psl2z_matrix(Word const& w);
  // True iff w is trivial in PSL2(Z), i.e. its matrix is +-I.
  bool psl2z_reduce(Word const& w);
  // Same key for M and -M.
  std::string psl2z_key(Word const& w);

  // Element x -> (reflection ? -x : x) + rotation on Z/n, with a: x -> -x
  // and b: x -> 1 - x, so ab is a rotation of order n.
  struct DihedralElement {
    bool         reflection = false;
    std::int64_t rotation   = 0;
    friend bool  operator==(DihedralElement, DihedralElement) = default;
    bool         trivial() const noexcept {
      return !reflection && rotation == 0;
    }
  };
  DihedralElement dihedral_normal_form(Word const& w, std::int64_t n);
  DihedralElement dihedral_multiply(DihedralElement x, DihedralElement y, std::int64_t n);

  // Order of <gens | relators> by HLT coset enumeration over the trivial
  // subgroup; nullopt once more than cap cosets have been defined.
  std::optional<std::size_t> todd_coxeter(std::size_t ngens, std::vector<Word> const& relators,
                                          std::size_t cap = 100000);

  struct BruteForce {
    Rational    length{0};
    std::int64_t width = 0;
    std::size_t shortest_representative = 0;
  };
  // Exhaustive length, width and shortest representative; throws when the
  // complex has more than max_vertices vertices.
  BruteForce brute_force_suite(LabeledComplex const& c, Cocycle const& phi,
                               std::size_t max_vertices = 10);

  struct RandomComplexOptions {
    std::size_t min_cycle = 2;
    std::size_t max_cycle = 6;
    std::size_t chords    = 2;  // filled paths between cycle vertices
    std::size_t tails     = 1;  // dangling paths
    std::size_t max_vertices = 10;
    int         letters   = 3;
  };
  // A deterministic circle-like complex: a labeled cycle, filled chords and
  // tails, with labels kept deterministic.
  LabeledComplex random_circle_complex(std::mt19937_64& rng, RandomComplexOptions const& opt = {});

  Word random_word(std::mt19937_64& rng, std::size_t ngens, std::size_t length);

}  // namespace gsc::oracle

#endif  // GSC_ORACLES_HPP_
