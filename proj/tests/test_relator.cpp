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

#include "gsc/metric.hpp"
#include "gsc/oracles.hpp"
#include "gsc/presentation.hpp"
#include "gsc/relator.hpp"

#include <doctest.h>

#include <deque>
#include <set>

using namespace gsc;

namespace {
  Alphabet const abc({"a", "b", "c"});

  PathInComplex read(GeneralRelator const& r, std::string const& w, CellId start = -1) {
    auto p = trace_word(r.boundary(), start < 0 ? r.base_vertex() : start, abc.parse(w));
    REQUIRE(p);
    return *p;
  }

  GeneralRelator relator_of(MeasuredPresentation const& p, std::string const& name) {
    auto const* r = p.find(name);
    REQUIRE(r != nullptr);
    return *r;
  }

  // Independent unit-winding test: BFS over (vertex, level) restricted to
  // kept edges, looking for (v, 0) -> (v, +-1).
  bool unit_loop_by_search(LabeledComplex const& c, Cocycle const& phi,
                           std::vector<bool> const& keep) {
    std::int64_t const L = static_cast<std::int64_t>(c.num_vertices()) + 2;
    for (auto v : c.vertices()) {
      if (!keep[static_cast<std::size_t>(v)]) {
        continue;
      }
      std::set<std::pair<CellId, std::int64_t>>   seen{{v, 0}};
      std::deque<std::pair<CellId, std::int64_t>> q{{v, 0}};
      while (!q.empty()) {
        auto [x, lv] = q.front();
        q.pop_front();
        if (x == v && (lv == 1 || lv == -1)) {
          return true;
        }
        for (auto e : c.incident(x)) {
          if (!keep[static_cast<std::size_t>(e)]) {
            continue;
          }
          auto p = phi[static_cast<std::size_t>(e)];
          std::vector<std::pair<CellId, std::int64_t>> next;
          if (c.from(e) == x) {
            next.push_back({c.to(e), lv + p});
          }
          if (c.to(e) == x) {
            next.push_back({c.from(e), lv - p});
          }
          for (auto n : next) {
            if (n.second >= -L && n.second <= L && seen.insert(n).second) {
              q.push_back(n);
            }
          }
        }
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("winding numbers on the Moebius relator") {
  auto m  = moebius_relator();
  auto W  = read(m, "babcba^-1c^-1");
  auto WW = compose(W, W);
  CHECK(std::abs(winding_number(m, W)) == 1);
  CHECK(std::abs(winding_number(m, WW)) == 2);
  CHECK(winding_number(m, reverse(m.boundary(), W)) == -winding_number(m, W));
  CHECK(is_representative(m, W));
  CHECK_FALSE(is_representative(m, WW));

  // Backtrack padding does not change the winding.
  auto const& c = m.boundary();
  for (auto e : c.incident(W.end)) {
    bool          fwd = c.from(e) == W.end;
    PathInComplex bt{W.end, {Step{e, fwd}, Step{e, !fwd}}, W.end};
    CHECK(winding_number(m, bt) == 0);
    CHECK(is_representative(m, compose(W, bt)));
  }
  CHECK_THROWS_AS(winding_number(m, read(m, "ba")), Error);
}

TEST_CASE("winding is additive over composable loops") {
  auto p = build_example("dihedral4");
  auto r = relator_of(p, "ab4");
  auto paths = enumerate_paths(r.boundary(), 6);
  std::vector<PathInComplex> loops;
  for (auto const& x : paths) {
    if (x.closed() && x.start == r.base_vertex()) {
      loops.push_back(x);
    }
  }
  REQUIRE(loops.size() > 4);
  for (std::size_t i = 0; i < loops.size(); i += 7) {
    for (std::size_t j = 0; j < loops.size(); j += 11) {
      CHECK(winding_number(r, compose(loops[i], loops[j]))
            == winding_number(r, loops[i]) + winding_number(r, loops[j]));
    }
  }
}

TEST_CASE("relation loops of boundary cones have winding zero") {
  for (auto name : {"dihedral4", "modular", "height4", "moebius"}) {
    auto p = build_example(name);
    for (auto const& r : p.relators()) {
      auto const& c = r.boundary();
      for (CellId x = 0; x < static_cast<CellId>(c.size()); ++x) {
        if (c.cell(x).height < 2) {
          continue;
        }
        auto sub = subrelator(r, x);
        // Any loop in the ideal of x maps to winding 0 in r.
        std::vector<bool> keep(c.size(), false);
        for (auto y : c.ideal(x)) {
          keep[static_cast<std::size_t>(y)] = true;
        }
        for (auto const& q : enumerate_paths(c, 4)) {
          if (!q.closed()) {
            continue;
          }
          bool inside = keep[static_cast<std::size_t>(q.start)];
          for (auto s : q.steps) {
            inside = inside && keep[static_cast<std::size_t>(s.edge)];
          }
          if (inside) {
            CHECK(winding_number(r, q) == 0);
          }
        }
        CHECK(sub.height() == c.cell(x).height);
      }
    }
  }
}

TEST_CASE("shortest representatives") {
  CHECK(moebius_relator().shortest_representative().length() == 7);
  auto d8 = build_example("dihedral4");
  auto ab4 = relator_of(d8, "ab4");
  CHECK(ab4.shortest_representative().length() == 8);
  CHECK(oracle::brute_force_suite(ab4.boundary(), ab4.cocycle(), 10).shortest_representative
        == 8);
  for (int n = 1; n <= 5; ++n) {
    auto r = GeneralRelator::from_word("r", power(abc.parse("abc^-1"), n));
    CHECK(r.shortest_representative().length() == static_cast<std::size_t>(3 * n));
  }
}

TEST_CASE("automorphism groups") {
  auto d8  = build_example("dihedral4");
  auto ab4 = relator_of(d8, "ab4");
  CHECK(ab4.automorphisms().order() == 8);
  CHECK(has_orientation_reversing_automorphism(ab4));

  auto ab5 = GeneralRelator::from_word("ab5", power(abc.parse("ab"), 5));
  CHECK(ab5.automorphisms().order() == 5);
  CHECK(ab5.automorphisms().cyclic);
  CHECK_FALSE(has_orientation_reversing_automorphism(ab5));

  auto plain = GeneralRelator::from_word("t", abc.parse("ababb"));
  CHECK(plain.automorphisms().order() == 1);
  CHECK_FALSE(has_orientation_reversing_automorphism(plain));
}

TEST_CASE("automorphisms preserve structure and close under composition") {
  for (auto name : {"dihedral4", "modular", "height4", "moebius"}) {
    auto p = build_example(name);
    for (auto const& r : p.relators()) {
      auto const& c = r.boundary();
      auto const& g = r.automorphisms().elements;
      std::set<std::vector<CellId>> maps;
      for (auto const& a : g) {
        maps.insert(a.map);
        for (CellId x = 0; x < static_cast<CellId>(c.size()); ++x) {
          auto y = a.map[static_cast<std::size_t>(x)];
          CHECK(c.cell(y).height == c.cell(x).height);
          if (c.is_edge(x)) {
            CHECK(c.label(y) == c.label(x));
          }
        }
      }
      for (auto const& a : g) {
        for (auto const& b : g) {
          std::vector<CellId> ab(a.map.size());
          for (std::size_t i = 0; i < ab.size(); ++i) {
            ab[i] = b.map[static_cast<std::size_t>(a.map[i])];
          }
          CHECK(maps.count(ab) == 1);
        }
      }
      if (!r.crucial().empty()) {
        INFO(name << " " << r.name());
        CHECK(r.automorphisms().fits_structure_theorem);
      }
    }
  }
}

TEST_CASE("crucial cones") {
  auto t = GeneralRelator::from_word("t", abc.parse("abcab"));
  CHECK(t.crucial() == t.boundary().edges());

  for (auto const& r : {moebius_relator(), relator_of(build_example("height4"), "height4")}) {
    auto const&         c = r.boundary();
    std::vector<CellId> expected;
    for (CellId x = 0; x < static_cast<CellId>(c.size()); ++x) {
      bool candidate = c.is_edge(x) || (c.cell(x).height >= 2 && c.cofaces(x).empty());
      if (!candidate) {
        continue;
      }
      auto keep = removal_survivors(c, x);
      if (!unit_loop_by_search(c, r.cocycle(), keep)) {
        expected.push_back(x);
      }
    }
    INFO(r.name());
    CHECK(r.crucial() == expected);
  }
}

TEST_CASE("subcone closure") {
  auto h4   = relator_of(build_example("height4"), "height4");
  auto ab4  = relator_of(build_example("dihedral4"), "ab4");
  auto clos = subcone_closure({h4});
  bool found = false;
  for (auto const& r : clos) {
    found = found || isomorphism(r, ab4).has_value();
  }
  CHECK(found);
  CHECK(clos.size() == 4);

  auto t = GeneralRelator::from_word("t", abc.parse("abc"));
  CHECK(subcone_closure({t}).size() == 1);

  auto mod  = build_example("modular");
  auto st3  = relator_of(mod, "ST3");
  auto s2   = relator_of(mod, "S2");
  auto cl2  = subcone_closure({st3});
  found     = false;
  for (auto const& r : cl2) {
    found = found || isomorphism(r, s2).has_value();
  }
  CHECK(found);
}
