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
#include "gsc/presentation.hpp"
#include "gsc/reduction.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace gsc;

namespace {
  // All words over {a, A, b, B} of length <= n, freely reduced or not.
  void all_words(std::size_t n, std::vector<Word>& out, Word& cur) {
    out.push_back(cur);
    if (cur.size() == n) {
      return;
    }
    for (int code = 0; code < 4; ++code) {
      cur.push_back(Letter::from_code(code));
      all_words(n, out, cur);
      cur.pop_back();
    }
  }
}  // namespace

TEST_CASE("dihedral word problem agrees with the normal form oracle") {
  auto        p = build_example("dihedral4");
  DehnSolver  s(p);
  std::vector<Word> words;
  Word              cur;
  all_words(12, words, cur);
  REQUIRE(words.size() == 22369621);
  std::size_t mismatches = 0;
  for (auto const& w : words) {
    mismatches += s.trivial(w) != oracle::dihedral_normal_form(w, 4).trivial() ? 1 : 0;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("reduction traces shrink the word") {
  auto p = build_example("dihedral4");
  auto r = dehn_reduce(p, p.alphabet().parse("abababab"));
  CHECK(r.word.empty());
  REQUIRE_FALSE(r.trace.empty());
  for (auto const& st : r.trace) {
    CHECK(st.replacement.size() < st.length);
    CHECK(st.after < st.before);
  }
  CHECK(word_problem(p, p.alphabet().parse("abab^-1a^-1bab")) ==
        oracle::dihedral_normal_form(p.alphabet().parse("abab^-1a^-1bab"), 4).trivial());
}

TEST_CASE("modular group agrees with PSL2(Z)") {
  auto p = build_example("modular");
  auto S = p.alphabet().parse("S");
  auto T = p.alphabet().parse("T");
  CHECK(word_problem(p, power(S, 2), true));
  CHECK(word_problem(p, power(concat(S, T), 3), true));
  CHECK_FALSE(word_problem(p, power(T, 5), true));
  CHECK(oracle::psl2z_reduce(power(S, 2)));
  CHECK(oracle::psl2z_reduce(power(concat(S, T), 3)));

  DehnSolver      s(p);
  std::mt19937_64 rng(20260401);
  std::size_t     agree = 0, trivial = 0;
  for (int t = 0; t < 10000; ++t) {
    auto w = oracle::random_word(rng, 2, 1 + rng() % 20);
    bool a = s.trivial(w);
    trivial += a ? 1 : 0;
    agree += a == oracle::psl2z_reduce(w) ? 1 : 0;
  }
  CHECK(agree == 10000);
  CHECK(trivial > 0);
}

TEST_CASE("modular solving needs force") {
  auto p = build_example("modular");
  CHECK_THROWS_AS(word_problem(p, p.alphabet().parse("SS")), PreconditionError);
}

TEST_CASE("Cayley balls") {
  auto d8 = build_example("dihedral4");
  auto b  = cayley_ball(d8, 8, 100000);
  CHECK(b.elements.size() == 8);
  CHECK_FALSE(b.truncated);
  // Every element is distinct under the oracle.
  std::set<std::pair<bool, std::int64_t>> seen;
  for (auto const& w : b.elements) {
    auto e = oracle::dihedral_normal_form(w, 4);
    seen.insert({e.reflection, e.rotation});
  }
  CHECK(seen.size() == 8);
  // Undirected generator edges: two per element.
  CHECK(b.edges.size() == 8 * 2);

  for (int n = 2; n <= 6; ++n) {
    auto bn = cayley_ball(dihedral_example(n), static_cast<std::size_t>(2 * n), 100000, true);
    auto pc = poincare_construction(dihedral_example(n));
    CHECK(bn.elements.size() == oracle::todd_coxeter(2, pc.relation_words));
  }

  auto mod = build_example("modular");
  auto m6  = cayley_ball(mod, 6, 100000, true);
  std::set<std::string> keys;
  for (auto const& w : m6.elements) {
    keys.insert(oracle::psl2z_key(w));
  }
  CHECK(keys.size() == m6.elements.size());
  auto capped = cayley_ball(mod, 30, 50, true);
  CHECK(capped.truncated);
  CHECK(capped.elements.size() <= 50);
}

TEST_CASE("reduction status flags") {
  auto p = build_example("dihedral4");
  // Half of (ab)^4 has an equally long complement, so it stays Dehn-reduced.
  auto h = reduction_status(p, p.alphabet().parse("abab"), Rational(1, 6));
  CHECK(h.dehn_reduced);
  CHECK(h.max_measure == Rational(1, 2));
  auto f = reduction_status(p, p.alphabet().parse("ababa"), Rational(1, 6));
  CHECK(f.freely_reduced);
  CHECK_FALSE(f.dehn_reduced);
  CHECK_FALSE(f.mu_free);
  CHECK(f.max_measure == Rational(5, 8));
  auto g = reduction_status(p, p.alphabet().parse("a"), Rational(1, 6));
  CHECK(g.dehn_reduced);
}
