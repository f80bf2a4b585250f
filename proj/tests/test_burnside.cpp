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

#include "gsc/burnside.hpp"
#include "gsc/oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace gsc;

namespace {
  Alphabet const ab({"a", "b"});

  // Brute force: is w (cyclically) a proper power?
  bool proper_power(Word const& w) {
    for (std::size_t d = 1; d < w.size(); ++d) {
      if (w.size() % d == 0 && power(Word(w.begin(), w.begin() + static_cast<long>(d)),
                                     static_cast<int>(w.size() / d)) == w) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("simple words") {
  CHECK(is_simple_word(ab.parse("a")));
  CHECK(is_simple_word(ab.parse("ab")));
  CHECK_FALSE(is_simple_word(ab.parse("abab")));
  CHECK_FALSE(is_simple_word(ab.parse("aba^-1")));
  CHECK_FALSE(is_simple_word(Word{}));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    auto w = oracle::random_word(rng, 2, 1 + rng() % 10);
    bool expect = !w.empty() && is_cyclically_reduced(w) && !proper_power(w);
    CHECK(is_simple_word(w) == expect);
  }
}

TEST_CASE("power content") {
  auto c = max_power_content(ab.parse("ab^6"));
  CHECK(c.p == 6);
  CHECK(c.x == ab.parse("b"));
  // Cyclic: the power may wrap around.
  CHECK(max_power_content(ab.parse("bbbabb")).p == 5);
  CHECK(max_power_content(ab.parse("ab")).p == 1);
  CHECK(max_power_content(ab.parse("(ab)^3 b")).p == 3);
}

TEST_CASE("canonical cyclic form is a class invariant") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    auto w = cyclic_reduce(oracle::random_word(rng, 2, 2 + rng() % 8)).core;
    if (w.empty()) {
      continue;
    }
    auto k = canonical_cyclic(w);
    auto r = w;
    std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
    CHECK(canonical_cyclic(r) == k);
    CHECK(canonical_cyclic(inverse(r)) == k);
  }
}

TEST_CASE("rank-2 stage at the 1260 constants") {
  BurnsideConfig cfg;
  CHECK(cfg.beta_n() == Rational(6));
  auto rels = enumerate_rank2(cfg, 2);
  REQUIRE(rels.size() == 4);
  std::set<Word> classes;
  for (auto const& r : rels) {
    CHECK(r.width() == 0);
    CHECK(r.automorphisms().order() == 1260);
    CHECK(r.length() == Rational(static_cast<std::int64_t>(r.boundary().edges().size())));
    classes.insert(canonical_cyclic(r.boundary().label(r.reference_loop())));
  }
  CHECK(classes.size() == 4);

  auto rep = verify_cprime(rels, cfg.constants.beta);
  CHECK(rep.pass);
  CHECK(rep.pairs == 10);
  CHECK(rep.violations.empty());
  REQUIRE(rep.max_piece);
  CHECK(Rational(static_cast<std::int64_t>(rep.max_piece->length)) < rep.max_piece->limit);

  auto bad = build_rank2(cfg, ab.parse("ab^6"));
  CHECK_FALSE(bad.relator);
  REQUIRE(bad.rejection);
  CHECK(bad.rejection->reason() == "power_content(6)");
  CHECK(bad.rejection->content.x == ab.parse("b"));
  CHECK(bad.rejection->content.p == 6);
  CHECK(build_rank2(cfg, ab.parse("ab^5")).relator.has_value());
  auto np = build_rank2(cfg, ab.parse("abab"));
  REQUIRE(np.rejection);
  CHECK(np.rejection->kind == Rank2Rejection::Kind::NotSimple);
}

TEST_CASE("small exponents need the toy flag") {
  BurnsideConfig cfg;
  cfg.n = 20;
  CHECK_THROWS_AS(cfg.check(), Error);
  cfg.toy = true;
  CHECK_NOTHROW(cfg.check());
  CHECK(cfg.power_bound() == Rational(6));
  auto rels = enumerate_rank2(cfg, 1);
  CHECK(rels.size() == 2);
  CHECK(verify_cprime(rels, cfg.constants.beta).pass);
}

TEST_CASE("pieces between overlapping powers") {
  BurnsideConfig cfg;
  cfg.n   = 20;
  cfg.toy = true;
  auto rels = enumerate_rank2(cfg, 2);
  auto rep  = verify_cprime(rels, cfg.constants.beta);
  CHECK_FALSE(rep.pass);
  REQUIRE_FALSE(rep.violations.empty());
  for (auto const& pc : rep.violations) {
    CHECK(Rational(static_cast<std::int64_t>(pc.length)) >= pc.limit);
  }
}
