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

#include "gsc/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gsc;
using namespace gsc::oracle;

namespace {
  Alphabet const st({"S", "T"});
  Alphabet const ab({"a", "b"});
}  // namespace

TEST_CASE("PSL2(Z) oracle") {
  CHECK(psl2z_matrix(st.parse("S")) == Matrix2{0, -1, 1, 0});
  CHECK(psl2z_matrix(st.parse("T")) == Matrix2{1, 1, 0, 1});
  CHECK(psl2z_reduce(st.parse("SS")));
  CHECK(psl2z_reduce(st.parse("(ST)^3")));
  CHECK_FALSE(psl2z_reduce(st.parse("T^5")));
  CHECK_FALSE(psl2z_reduce(st.parse("S")));
  CHECK(psl2z_key(st.parse("S")) == psl2z_key(st.parse("S^-1")));

  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    auto u = random_word(rng, 2, rng() % 12);
    auto v = random_word(rng, 2, rng() % 12);
    CHECK(psl2z_reduce(concat(u, inverse(u))));
    CHECK(psl2z_key(concat(u, v)) == psl2z_key(free_reduce(concat(u, v))));
    // Conjugation preserves triviality.
    CHECK(psl2z_reduce(v) == psl2z_reduce(concat(concat(u, v), inverse(u))));
  }
}

TEST_CASE("dihedral oracle") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    CHECK(dihedral_normal_form(ab.parse("aa"), n).trivial());
    CHECK(dihedral_normal_form(ab.parse("bb"), n).trivial());
    CHECK(dihedral_normal_form(power(ab.parse("ab"), static_cast<int>(n)), n).trivial());
    for (std::int64_t k = 1; k < n; ++k) {
      CHECK_FALSE(dihedral_normal_form(power(ab.parse("ab"), static_cast<int>(k)), n).trivial());
    }
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 1000; ++t) {
    auto u = random_word(rng, 2, rng() % 10);
    auto v = random_word(rng, 2, rng() % 10);
    auto w = random_word(rng, 2, rng() % 10);
    auto x = dihedral_normal_form(u, 5);
    auto y = dihedral_normal_form(v, 5);
    auto z = dihedral_normal_form(w, 5);
    CHECK(dihedral_normal_form(concat(u, v), 5) == dihedral_multiply(x, y, 5));
    CHECK(dihedral_multiply(dihedral_multiply(x, y, 5), z, 5)
          == dihedral_multiply(x, dihedral_multiply(y, z, 5), 5));
    CHECK(dihedral_normal_form(concat(u, inverse(u)), 5).trivial());
  }
}

TEST_CASE("coset enumeration") {
  CHECK(todd_coxeter(2, {ab.parse("aa"), ab.parse("bb"), ab.parse("(ab)^4")}) == 8u);
  CHECK(todd_coxeter(2, {ab.parse("aa"), ab.parse("bbb"), ab.parse("(ab)^2")}) == 6u);
  CHECK(todd_coxeter(1, {ab.parse("a")}) == 1u);
  CHECK(todd_coxeter(1, {ab.parse("a^7")}) == 7u);
  // A5 = <a, b | a^2, b^3, (ab)^5>.
  CHECK(todd_coxeter(2, {ab.parse("aa"), ab.parse("bbb"), ab.parse("(ab)^5")}) == 60u);
  // PSL2(Z) is infinite.
  CHECK_FALSE(todd_coxeter(2, {st.parse("SS"), st.parse("(ST)^3")}, 5000).has_value());
}
