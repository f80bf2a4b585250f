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

#include "gsc/cover.hpp"
#include "gsc/metric.hpp"
#include "gsc/oracles.hpp"
#include "gsc/presentation.hpp"
#include "gsc/relator.hpp"

#include <doctest.h>

#include <random>

using namespace gsc;

namespace {
  Alphabet const abc({"a", "b", "c"});

  PathInComplex read(GeneralRelator const& r, std::string const& w) {
    auto p = trace_word(r.boundary(), r.base_vertex(), abc.parse(w));
    REQUIRE(p);
    return *p;
  }

  std::int64_t window_bound(GeneralRelator const& r) {
    return 2 * static_cast<std::int64_t>(r.boundary().num_vertices() + 4) + 2;
  }
}  // namespace

TEST_CASE("cover windows") {
  for (std::int64_t K : {1, 2, 3}) {
    auto r = GeneralRelator::from_word("r", abc.parse("abc"));
    ZCoverWindow w(r.boundary(), r.cocycle(), K);
    CHECK(w.num_vertices() == static_cast<std::size_t>((2 * K + 1) * 3));
    // A line: every vertex has degree 2 except the two ends.
    std::size_t ends = 0;
    for (std::size_t i = 0; i < w.num_vertices(); ++i) {
      ends += w.incident(i).size() == 1 ? 1 : 0;
    }
    CHECK(ends == 2);
  }
  auto         m = moebius_relator();
  ZCoverWindow w(m.boundary(), m.cocycle(), 2);
  CHECK(w.num_vertices() == 5 * 12);
  for (std::size_t i = 0; i < w.num_vertices(); ++i) {
    auto j = w.shift(i);
    if (j >= 0) {
      CHECK(w.project(static_cast<std::size_t>(j)) == w.project(i));
      CHECK(w.lift(static_cast<std::size_t>(j)).level == w.lift(i).level + 1);
    }
  }
  for (auto const& e : w.edges()) {
    auto const& c = m.boundary();
    CHECK(w.project(e.a) == c.from(e.base_edge));
    CHECK(w.project(e.b) == c.to(e.base_edge));
    CHECK(w.lift(e.b).level - w.lift(e.a).level
          == m.cocycle()[static_cast<std::size_t>(e.base_edge)]);
  }
}

TEST_CASE("relator length") {
  auto m = moebius_relator();
  CHECK(m.length() == Rational(6));
  CHECK(relator_length(m) == Rational(6));
  CHECK(m.length_witness().length() == 12);
  CHECK(std::abs(winding(m.cocycle(), m.length_witness())) == 2);
  CHECK(window_scan_length(m.boundary(), m.cocycle(), 6) == Rational(6));
  for (int n = 1; n <= 4; ++n) {
    auto r = GeneralRelator::from_word("r", power(abc.parse("ab^-1c"), n));
    CHECK(r.length() == Rational(3 * n));
  }
}

TEST_CASE("graph length") {
  auto m = moebius_relator();
  auto W = read(m, "babcba^-1c^-1");
  CHECK(graph_length(m, W) == Rational(7, 6));
  CHECK(geodesic_length(m, W) == 7);

  auto const& c = m.boundary();
  auto        e = c.incident(W.end).front();
  bool        f = c.from(e) == W.end;
  auto padded   = compose(W, PathInComplex{W.end, {Step{e, f}, Step{e, !f}}, W.end});
  CHECK(graph_length(m, padded) == graph_length(m, W));

  auto r = GeneralRelator::from_word("r", power(abc.parse("abc"), 3));
  CHECK(graph_length(r, r.reference_loop()) == Rational(1));
  CHECK(graph_length(r, r.shortest_representative()) == Rational(1));
}

TEST_CASE("width") {
  CHECK(GeneralRelator::from_word("t", abc.parse("abcab")).width() == 0);
  auto m = moebius_relator();
  CHECK(m.width() == 3);
  CHECK(width(m) == 3);

  // Ball removal around a vertex attaining the width.
  auto const&  c      = m.boundary();
  CellId       center = -1;
  for (auto v : c.vertices()) {
    if (separating_radius(c, m.cocycle(), v) == 3) {
      center = v;
      break;
    }
  }
  REQUIRE(center >= 0);
  auto K  = window_bound(m);
  auto b2 = ball_removal_probe(c, m.cocycle(), Lift{center, 0}, 2, K);
  CHECK(b2.removed_vertices == 3);
  CHECK(b2.removed_edges == 6);
  CHECK_FALSE(b2.ends_separated);
  auto b3 = ball_removal_probe(c, m.cocycle(), Lift{center, 0}, 3, K);
  CHECK(b3.ends_separated);
  CHECK(b3.components == 3);
  // Stable under a larger window.
  auto b3w = ball_removal_probe(c, m.cocycle(), Lift{center, 0}, 3, K + 1);
  CHECK(b3w.components == 3);
  CHECK(b3w.removed_vertices == b3.removed_vertices);
}

TEST_CASE("length and width match the brute-force oracle on random complexes") {
  std::mt19937_64 rng(20260101);
  int             tested = 0;
  for (int t = 0; t < 80; ++t) {
    auto           c = oracle::random_circle_complex(rng);
    GeneralRelator r("random", c, 3);
    auto           bf = oracle::brute_force_suite(r.boundary(), r.cocycle());
    INFO("sample " << t);
    CHECK(r.length() == bf.length);
    CHECK(r.width() == bf.width);
    CHECK(r.shortest_representative().length() == bf.shortest_representative);
    ++tested;
  }
  CHECK(tested >= 50);
}

TEST_CASE("loops are never shorter than |R| times their winding") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto           c = oracle::random_circle_complex(rng);
    GeneralRelator r("random", c, 3);
    for (auto const& p : enumerate_paths(r.boundary(), 7)) {
      if (!p.closed()) {
        continue;
      }
      auto w = winding(r.cocycle(), p);
      CHECK(Rational(static_cast<std::int64_t>(p.length())) >= r.length() * (w < 0 ? -w : w));
    }
  }
}

TEST_CASE("separating radius is invariant under automorphisms") {
  for (auto name : {"dihedral4", "moebius"}) {
    auto p = build_example(name);
    for (auto const& r : p.relators()) {
      auto const& c = r.boundary();
      for (auto const& a : r.automorphisms().elements) {
        for (auto v : c.vertices()) {
          CHECK(separating_radius(c, r.cocycle(), v)
                == separating_radius(c, r.cocycle(), a.map[static_cast<std::size_t>(v)]));
        }
      }
    }
  }
}

TEST_CASE("graph metric contract on the Moebius relator") {
  auto m       = moebius_relator();
  auto samples = enumerate_paths(m.boundary(), 8);
  auto rep     = check_metric_contract(m, graph_metric(m), samples);
  CHECK(rep.ok());
  for (int k = 1; k <= 6; ++k) {
    CHECK(rep.holds(k));
  }

  // Non-contractible loops need length 7, so the zero metric uses the long list.
  auto short_samples = enumerate_paths(m.boundary(), 4);
  auto zero = check_metric_contract(
      m, [](PathInComplex const&) { return Rational(0); }, samples);
  CHECK_FALSE(zero.holds(2));
  CHECK_FALSE(zero.holds(5));

  auto forward_count = [](PathInComplex const& p) {
    std::int64_t n = 0;
    for (auto s : p.steps) {
      n += s.forward ? 1 : 0;
    }
    return Rational(n);
  };
  auto asym = check_metric_contract(m, forward_count, short_samples);
  CHECK_FALSE(asym.holds(3));
}
