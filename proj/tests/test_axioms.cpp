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

#include "gsc/axioms.hpp"
#include "gsc/presentation.hpp"
#include "gsc/reduction.hpp"

#include <doctest.h>

using namespace gsc;

namespace {
  AxiomResult const& axiom(AxiomReport const& r, int k) {
    return r.results[static_cast<std::size_t>(k - 1)];
  }
}  // namespace

TEST_CASE("dihedral presentation passes every axiom") {
  auto p   = build_example("dihedral4");
  auto rep = verify_axioms(p);
  CHECK_FALSE(rep.any_failure());
  CHECK(rep.measured.alpha == Rational(1, 8));
  CHECK(rep.measured.beta == Rational(1, 8));
  CHECK(rep.measured.gamma == Rational(0));
  for (int k = 1; k <= 7; ++k) {
    CHECK(axiom(rep, k).axiom == k);
  }
  CHECK(solve_precondition(p).ok);
}

TEST_CASE("Moebius presentation fails axiom 3 with the width/length witness") {
  auto base = build_example("moebius");
  for (auto alpha : {Rational(1, 6), Rational(1, 8), Rational(1, 12), Rational(1, 100)}) {
    auto k     = base.constants();
    k.alpha    = alpha;
    k.beta     = alpha;
    k.gamma    = alpha / 2;
    k.declared = true;
    auto p     = base;
    p.set_constants(k);
    auto rep = verify_axioms(p);
    auto const& a3 = axiom(rep, 3);
    INFO("alpha " << to_string(alpha));
    CHECK(a3.status == AxiomStatus::Fail);
    REQUIRE(a3.witness);
    CHECK(a3.witness->relators == std::vector<std::string>{"moebius"});
    CHECK(a3.witness->values
          == std::vector<Rational>{Rational(3), Rational(6), Rational(1, 2)});
    CHECK(rep.any_failure());
    CHECK_FALSE(solve_precondition(p).ok);
  }
  // A generous gamma lets axiom 3 through.
  auto k  = base.constants();
  k.gamma = Rational(1, 2);
  auto p  = base;
  p.set_constants(k);
  CHECK(axiom(verify_axioms(p), 3).status != AxiomStatus::Fail);
}

TEST_CASE("constant inequalities") {
  auto k = Constants::burnside();
  CHECK(k.alpha == Rational(1, 12));
  CHECK(k.beta == Rational(1, 210));
  CHECK(2 * k.gamma + k.delta == Rational(13, 210));
  CHECK(k.beta * k.n == Rational(6));
  auto r = check_constant_constraints(k);
  CHECK(r.status == AxiomStatus::Pass);
  REQUIRE(r.measured);
  CHECK(*r.measured == Rational(13, 210));

  auto bad  = k;
  bad.gamma = Rational(1, 12);
  CHECK(check_constant_constraints(bad).status == AxiomStatus::Fail);
  bad       = k;
  bad.delta = Rational(1, 15);  // 2/70 + 1/15 > 1/12
  CHECK(check_constant_constraints(bad).status == AxiomStatus::Fail);
  bad       = k;
  bad.alpha = Rational(1, 5);
  CHECK(check_constant_constraints(bad).status == AxiomStatus::Fail);
  bad      = k;
  bad.beta = Rational(1, 11);
  CHECK(check_constant_constraints(bad).status == AxiomStatus::Fail);
}

TEST_CASE("measured constants never exceed their axiom values") {
  for (auto name : {"dihedral4", "height4", "moebius"}) {
    auto p   = build_example(name);
    auto m   = measure_constants(p);
    auto rep = verify_axioms(p);
    INFO(name);
    CHECK(m.alpha == rep.measured.alpha);
    CHECK(m.gamma == rep.measured.gamma);
    CHECK(m.beta <= m.alpha);
  }
}

TEST_CASE("solver gate") {
  auto p = build_example("moebius");
  auto w = p.alphabet().parse("ab");
  CHECK_THROWS_AS(dehn_reduce(p, w), PreconditionError);
  CHECK_NOTHROW(dehn_reduce(p, w, true));

  auto d8 = build_example("dihedral4");
  auto k  = d8.constants();
  k.alpha = Rational(1, 4);  // 3 alpha > 1/2
  d8.set_constants(k);
  auto gate = solve_precondition(d8);
  CHECK_FALSE(gate.ok);
  CHECK(gate.reason.find("1/2") != std::string::npos);

  auto undeclared = build_example("dihedral4");
  undeclared.set_constants(Constants{});
  CHECK_FALSE(solve_precondition(undeclared).ok);
}
