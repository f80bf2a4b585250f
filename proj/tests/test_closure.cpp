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

#include "gsc/closure.hpp"
#include "gsc/cover.hpp"
#include "gsc/metric.hpp"
#include "gsc/presentation.hpp"

#include <doctest.h>

using namespace gsc;

namespace {
  GeneralRelator close_moebius(ClosureResult& out) {
    auto p   = build_example("moebius");
    auto W   = p.alphabet().parse("babcba^-1c^-1");
    out      = alpha_closure(p, W, SeedMode::Circular, 2, {Rational(1, 3)});
    return GeneralRelator("closure", out.complex, 3, out.seed_path);
  }
}  // namespace

TEST_CASE("closing the Moebius seed reproduces the strip") {
  ClosureResult res;
  auto          g = close_moebius(res);
  CHECK(res.closed);
  CHECK(res.log.size() == 3);
  CHECK(validate_complex(res.complex).ok());
  CHECK(res.complex.num_vertices() == 12);
  CHECK(res.complex.edges().size() == 15);

  CHECK(g.length() == Rational(6));
  CHECK(g.shortest_representative().length() == 7);
  CHECK(g.width() == 3);
  CHECK(graph_length(g, res.seed_path) == Rational(7, 6));
  auto const& lw = g.length_witness();
  CHECK(lw.length() == 12);
  CHECK(std::abs(winding(g.cocycle(), lw)) == 2);
  CHECK(lw.closed());

  CHECK(isomorphism(g, moebius_relator()).has_value());
}

TEST_CASE("ball removal on the closed strip") {
  ClosureResult res;
  auto          g = close_moebius(res);
  auto const&   c = g.boundary();
  CellId        center = -1;
  for (auto v : c.vertices()) {
    if (separating_radius(c, g.cocycle(), v) == g.width()) {
      center = v;
      break;
    }
  }
  REQUIRE(center >= 0);
  std::int64_t K  = 2 * (static_cast<std::int64_t>(c.num_vertices()) + 5) + 2;
  auto         b2 = ball_removal_probe(c, g.cocycle(), Lift{center, 0}, 2, K);
  CHECK(b2.removed_vertices == 3);
  CHECK(b2.removed_edges == 6);
  CHECK(b2.components == 1);
  CHECK_FALSE(b2.ends_separated);
  auto b3 = ball_removal_probe(c, g.cocycle(), Lift{center, 0}, 3, K);
  CHECK(b3.components == 3);
  CHECK(b3.ends_separated);
}

TEST_CASE("a straight seed and a tight cap") {
  auto p = build_example("moebius");
  auto s = alpha_closure(p, p.alphabet().parse("ab"), SeedMode::Straight, 2, {Rational(1, 3)});
  CHECK(s.closed);
  // ab measures 2/6 in (ab)^3, exactly the threshold.
  REQUIRE(s.log.size() == 1);
  CHECK(s.log[0].relator == "ab3");
  auto u = alpha_closure(p, p.alphabet().parse("a"), SeedMode::Straight, 2, {Rational(1, 3)});
  CHECK(u.log.empty());
  CHECK(s.seed_path.length() == 2);

  ClosureOptions opt{Rational(1, 3)};
  opt.cap = 1;
  auto t  = alpha_closure(p, p.alphabet().parse("babcba^-1c^-1"), SeedMode::Circular, 2, opt);
  CHECK_FALSE(t.closed);
  CHECK(t.log.size() <= 1);
}

TEST_CASE("closed results have no unattached readings") {
  ClosureResult res;
  close_moebius(res);
  auto p = build_example("moebius");
  CHECK_FALSE(find_unattached_reading(p, res, 2, Rational(1, 3)).has_value());
}
