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

#include "gsc/complex.hpp"
#include "gsc/homology.hpp"
#include "gsc/oracles.hpp"
#include "gsc/presentation.hpp"
#include "gsc/relator.hpp"

#include <doctest.h>

#include <random>

using namespace gsc;

namespace {
  Alphabet const abc({"a", "b", "c"});
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(abc.parse("a b b^-1 c")) == abc.parse("ac"));
  CHECK(free_reduce(Word{}).empty());
  CHECK(free_reduce(abc.parse("a a^-1")).empty());
  CHECK(free_reduce(abc.parse("b a a^-1 b^-1 c")) == abc.parse("c"));
}

TEST_CASE("free reduction properties on random words") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 2000; ++t) {
    auto w = oracle::random_word(rng, 3, static_cast<std::size_t>(t % 17));
    auto r = free_reduce(w);
    CHECK(is_freely_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= w.size());
    CHECK(r.size() % 2 == w.size() % 2);
  }
}

TEST_CASE("cyclic reduction") {
  auto r = cyclic_reduce(abc.parse("b^-1 a b"));
  CHECK(r.core == abc.parse("a"));
  CHECK(r.conjugator == abc.parse("b^-1"));
  r = cyclic_reduce(abc.parse("ab"));
  CHECK(r.core == abc.parse("ab"));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(abc.parse("a b b^-1 a"));
  CHECK(r.core == abc.parse("aa"));
  CHECK(r.conjugator.empty());

  std::mt19937_64 rng(2);
  for (int t = 0; t < 1000; ++t) {
    auto w = oracle::random_word(rng, 3, 12);
    auto c = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(c.core));
    CHECK(free_reduce(concat(concat(c.conjugator, c.core), inverse(c.conjugator)))
          == free_reduce(w));
    auto again = cyclic_reduce(c.core);
    CHECK(again.core == c.core);
    CHECK(again.conjugator.empty());
  }
}

TEST_CASE("word parsing and formatting round trip") {
  CHECK(abc.parse("(ab)^3") == abc.parse("ababab"));
  CHECK(abc.format(abc.parse("babcba^-1c^-1")) == "babcba^-1c^-1");
  CHECK(abc.parse("1").empty());
  CHECK_THROWS_AS(abc.parse("d"), Error);
}

TEST_CASE("traditional relator validates with L, L, 1 cells") {
  for (auto text : {"ab", "abc", "(ab)^4", "aab^-1cb"}) {
    auto w = abc.parse(text);
    auto r = GeneralRelator::from_word("r", w);
    auto rep = validate_complex(r.cone(), true);
    CHECK(rep.ok());
    CHECK(rep.height_counts[0] == w.size());
    CHECK(rep.height_counts[1] == w.size());
    CHECK(rep.height_counts[2] == 1);
  }
}

TEST_CASE("two maximal cells fail the relator check") {
  LabeledComplex c;
  auto v = c.add_vertex();
  auto e = c.add_edge(v, v, 0);
  c.add_cell({e});
  c.add_cell({e});
  CHECK_FALSE(validate_complex(c, true).ok());
}

TEST_CASE("determinism violations are reported with the vertex") {
  LabeledComplex c;
  auto v0 = c.add_vertex();
  auto v1 = c.add_vertex();
  c.add_edge(v0, v1, 0);
  c.add_edge(v0, v1, 0);
  auto issues = determinism_violations(c);
  REQUIRE_FALSE(issues.empty());
  CHECK(std::find(issues[0].cells.begin(), issues[0].cells.end(), v0) != issues[0].cells.end());
  CHECK_FALSE(validate_complex(c).ok());
}

TEST_CASE("tracing words") {
  auto c = circle_complex(abc.parse("(ab)^4"));
  auto p = trace_word(c, 0, abc.parse("abab"));
  REQUIRE(p);
  CHECK(p->length() == 4);
  CHECK(p->end != p->start);
  CHECK(trace_word(c, p->end, abc.parse("abab"))->end == 0);
  std::size_t failed = 99;
  CHECK_FALSE(trace_word(c, 0, abc.parse("ba"), &failed));
  CHECK(failed == 0);

  auto m = moebius_relator();
  auto w = trace_word(m.boundary(), m.base_vertex(), abc.parse("babcba^-1c^-1"));
  REQUIRE(w);
  CHECK(w->closed());
}

TEST_CASE("trace round trip on random readable words") {
  auto            m = moebius_relator();
  auto const&     c = m.boundary();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    // Random walk, then read its label back.
    CellId        v = c.vertices()[rng() % c.num_vertices()];
    PathInComplex p{v, {}, v};
    for (int k = 0; k < 10; ++k) {
      auto const& inc = c.incident(v);
      CellId      e   = inc[rng() % inc.size()];
      bool        fwd = c.from(e) == v && (c.to(e) != v || rng() % 2 == 0);
      p.steps.push_back(Step{e, fwd});
      v = fwd ? c.to(e) : c.from(e);
    }
    p.end  = v;
    auto w = c.label(p);
    auto q = trace_word(c, p.start, w);
    REQUIRE(q);
    CHECK(c.label(*q) == w);
    CHECK(q->end == p.end);
  }
}

TEST_CASE("circle check") {
  CHECK(circle_check(circle_complex(abc.parse("abc"))));
  LabeledComplex wedge;
  auto v = wedge.add_vertex();
  wedge.add_edge(v, v, 0);
  wedge.add_edge(v, v, 1);
  CHECK_FALSE(circle_check(wedge));
  CHECK(analyze_circle(wedge).free_rank == 2);
  CHECK(circle_check(moebius_relator().boundary()));
}

TEST_CASE("every boundary in the example library is circle-like") {
  for (auto const& name : example_names()) {
    auto p = build_example(name);
    for (auto const& r : p.relators()) {
      INFO(name << " " << r.name());
      CHECK(circle_check(r.boundary()));
      CHECK(validate_complex(r.cone(), true).ok());
    }
  }
}
