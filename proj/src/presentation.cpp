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

#include "gsc/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace gsc {

  Constants Constants::burnside() {
    Constants c;
    c.alpha    = Rational(1, 12);
    c.beta     = Rational(1, 210);
    c.gamma    = Rational(1, 70);
    c.delta    = Rational(1, 30);
    c.epsilon  = Rational(1, 630);
    c.n        = 1260;
    c.declared = true;
    return c;
  }

  MeasuredPresentation::MeasuredPresentation(Alphabet                    alphabet,
                                             std::vector<GeneralRelator> relators,
                                             Constants                   constants)
      : _alphabet(std::move(alphabet)), _constants(constants) {
    _relators = close_and_check_ranks(std::move(relators), _alphabet);
  }

  GeneralRelator const* MeasuredPresentation::find(std::string const& name) const {
    for (auto const& r : _relators) {
      if (r.name() == name) {
        return &r;
      }
    }
    return nullptr;
  }

  std::vector<GeneralRelator> close_and_check_ranks(std::vector<GeneralRelator> rs,
                                                    Alphabet const&            a) {
    std::set<std::string> names;
    for (auto const& r : rs) {
      if (!names.insert(r.name()).second) {
        throw Error("duplicate relator name " + r.name());
      }
      for (auto e : r.boundary().edges()) {
        if (static_cast<std::size_t>(r.boundary().label(e)) >= a.size()) {
          throw Error("relator " + r.name() + ": edge " + std::to_string(e)
                      + " carries an unknown generator");
        }
      }
    }
    auto closed = subcone_closure(rs);
    for (std::size_t i = rs.size(); i < closed.size(); ++i) {
      auto base = closed[i].name();
      auto name = base;
      for (int k = 2; names.contains(name); ++k) {
        name = base + "_" + std::to_string(k);
      }
      names.insert(name);
      closed[i] = GeneralRelator(name, closed[i].boundary(), closed[i].rank(),
                                 closed[i].reference_loop());
    }
    for (auto const& r : closed) {
      auto const& b = r.boundary();
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto p = static_cast<CellId>(j);
        if (b.cell(p).height < 2) {
          continue;
        }
        auto sub = subrelator(r, p);
        GeneralRelator const* match = nullptr;
        for (auto const& s : closed) {
          if (s.name() == b.cell(p).tag && isomorphism(sub, s)) {
            match = &s;
            break;
          }
        }
        for (auto const& s : closed) {
          if (match == nullptr && isomorphism(sub, s)) {
            match = &s;
          }
        }
        if (match == nullptr) {
          throw Error("relator " + r.name() + ": cone " + std::to_string(p)
                      + " matches no relator");
        }
        if (match->rank() >= r.rank()) {
          throw Error("relator " + r.name() + " (rank " + std::to_string(r.rank())
                      + ") contains " + match->name() + " (rank "
                      + std::to_string(match->rank()) + ") as cone "
                      + std::to_string(p) + "; ranks must strictly increase");
        }
      }
    }
    return closed;
  }

  CellId attach_along(LabeledComplex& host, GeneralRelator const& sub,
                      PathInComplex const& host_path) {
    auto const& b = sub.boundary();
    auto        w = host.label(host_path);
    std::vector<CellId> map;
    bool                found = false;
    for (auto s : b.vertices()) {
      auto p = trace_word(b, s, w);
      if (!p) {
        continue;
      }
      map.assign(b.size(), -1);
      bool ok     = true;
      auto assign = [&](CellId x, CellId y) {
        auto& slot = map[static_cast<std::size_t>(x)];
        if (slot >= 0 && slot != y) {
          ok = false;
        }
        slot = y;
      };
      assign(s, host_path.start);
      CellId u = s, v = host_path.start;
      for (std::size_t i = 0; i < w.size(); ++i) {
        assign(p->steps[i].edge, host_path.steps[i].edge);
        u = b.endpoint(u, p->steps[i]);
        v = host.endpoint(v, host_path.steps[i]);
        assign(u, v);
      }
      // Distinct host cells must not come from one sub cell and vice versa.
      std::set<CellId> images;
      std::size_t      mapped = 0;
      for (auto y : map) {
        if (y >= 0) {
          images.insert(y);
          ++mapped;
        }
      }
      if (ok && images.size() == mapped) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error("cannot attach " + sub.name() + " along a path labeled by a word of length "
                  + std::to_string(w.size()));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (map[i] >= 0) {
        continue;
      }
      auto const& cell = b.cell(static_cast<CellId>(i));
      if (cell.height == 0) {
        map[i] = host.add_vertex();
      } else if (cell.height == 1) {
        map[i] = host.add_edge(map[static_cast<std::size_t>(cell.covers[0])],
                               map[static_cast<std::size_t>(cell.covers[1])], cell.gen);
      } else {
        std::vector<CellId> covers;
        for (auto q : cell.covers) {
          covers.push_back(map[static_cast<std::size_t>(q)]);
        }
        map[i] = host.add_cell_with_height(cell.height, covers, cell.tag);
      }
    }
    std::vector<CellId> top;
    for (auto q : b.maximal_cells()) {
      top.push_back(map[static_cast<std::size_t>(q)]);
    }
    return host.add_cell_with_height(sub.height(), top, sub.name());
  }

  GeneralRelator composite_relator(std::string name, Word const& cycle,
                                   std::vector<Attachment> const&     attachments,
                                   std::vector<GeneralRelator> const& known,
                                   std::optional<int>                 rank) {
    if (cycle.empty() || !is_cyclically_reduced(cycle)) {
      throw Error("relator " + name + ": cycle must be nonempty and cyclically reduced");
    }
    auto       host = circle_complex(cycle);
    auto const L    = cycle.size();
    auto const n    = static_cast<CellId>(L);
    auto       seg  = [&](std::size_t offset, std::size_t len) {
      PathInComplex p{static_cast<CellId>(offset % L), {}, -1};
      CellId        v = p.start;
      for (std::size_t i = 0; i < len; ++i) {
        auto k = (offset + i) % L;
        Step s{n + static_cast<CellId>(k), !cycle[k].inverse};
        p.steps.push_back(s);
        v = host.endpoint(v, s);
      }
      p.end = v;
      return p;
    };
    for (auto const& a : attachments) {
      auto it = std::find_if(known.begin(), known.end(),
                             [&](GeneralRelator const& r) { return r.name() == a.sub; });
      if (it == known.end()) {
        throw Error("relator " + name + ": attachment refers to unknown relator " + a.sub);
      }
      if (a.along.empty() || a.along.size() > L) {
        throw Error("relator " + name + ": attachment path length out of range");
      }
      auto path = seg(a.offset, a.along.size());
      if (host.label(path) != a.along) {
        throw Error("relator " + name + ": attachment of " + a.sub + " at offset "
                    + std::to_string(a.offset) + " does not match the cycle");
      }
      attach_along(host, *it, path);
    }
    return GeneralRelator(std::move(name), std::move(host), rank, seg(0, L));
  }

  namespace {
    std::string generator_name(std::size_t i, std::size_t count) {
      if (count <= 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "x" + std::to_string(i + 1);
    }

    Constants small_constants() {
      Constants c;
      c.alpha    = Rational(1, 6);
      c.beta     = Rational(1, 6);
      c.declared = true;
      return c;
    }
  }  // namespace

  MeasuredPresentation coxeter_example(CoxeterMatrix const& m) {
    auto k = m.size();
    if (k == 0) {
      throw Error("Coxeter matrix is empty");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (m[i].size() != k) {
        throw Error("Coxeter matrix is not square");
      }
      if (m[i][i] != 1) {
        throw Error("Coxeter matrix needs 1 on the diagonal");
      }
      for (std::size_t j = 0; j < k; ++j) {
        if (m[i][j] != m[j][i]) {
          throw Error("Coxeter matrix is not symmetric");
        }
        if (i != j && m[i][j] != 0 && m[i][j] < 2) {
          throw Error("Coxeter matrix entries off the diagonal must be >= 2 (0 = none)");
        }
      }
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(generator_name(i, k));
    }
    Alphabet                    alpha(names);
    std::vector<GeneralRelator> rels;
    for (std::size_t i = 0; i < k; ++i) {
      Word w{Letter{static_cast<int>(i), false}, Letter{static_cast<int>(i), false}};
      rels.push_back(GeneralRelator::from_word(names[i] + "2", w));
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (m[i][j] == 0) {
          continue;
        }
        Word cycle;
        for (int r = 0; r < m[i][j]; ++r) {
          cycle.push_back(Letter{static_cast<int>(i), false});
          cycle.push_back(Letter{static_cast<int>(j), false});
        }
        std::vector<Attachment> at;
        for (std::size_t o = 0; o < cycle.size(); ++o) {
          at.push_back(Attachment{names[static_cast<std::size_t>(cycle[o].gen)] + "2",
                                  Word{cycle[o]}, o});
        }
        rels.push_back(composite_relator(names[i] + names[j] + std::to_string(m[i][j]),
                                         cycle, at, rels));
      }
    }
    return MeasuredPresentation(alpha, std::move(rels), small_constants());
  }

  MeasuredPresentation dihedral_example(int n) {
    if (n < 2) {
      throw Error("dihedral example needs n >= 2");
    }
    return coxeter_example({{1, n}, {n, 1}});
  }

  MeasuredPresentation modular_example() {
    Alphabet                    alpha({"S", "T"});
    std::vector<GeneralRelator> rels;
    rels.push_back(GeneralRelator::from_word("S2", alpha.parse("S^2")));
    std::vector<Attachment> at;
    for (std::size_t o : {0U, 2U, 4U}) {
      at.push_back(Attachment{"S2", alpha.parse("S"), o});
    }
    rels.push_back(composite_relator("ST3", alpha.parse("(ST)^3"), at, rels));
    return MeasuredPresentation(alpha, std::move(rels), small_constants());
  }

  MeasuredPresentation height4_example() {
    auto d8 = dihedral_example(4);
    Alphabet alpha({"a", "b", "c"});
    std::vector<GeneralRelator> rels = d8.relators();
    std::vector<Attachment>     at{{"ab4", alpha.parse("bab"), 3},
                                   {"ab4", alpha.parse("bab"), 7}};
    rels.push_back(composite_relator("height4", alpha.parse("(abcb)^2"), at, rels));
    return MeasuredPresentation(alpha, std::move(rels), d8.constants());
  }

  GeneralRelator moebius_relator() {
    Alphabet       alpha({"a", "b", "c"});
    LabeledComplex c;
    enum { TL, T1, TR, BR, B1, BL, X1, X2, Y2, Y1, Z1, P1, NV };
    for (int i = 0; i < NV; ++i) {
      c.add_vertex();
    }
    int const a = 0, b = 1, cc = 2;
    // First hexagon, read (ba)^3 from TL.
    auto e1 = c.add_edge(TL, T1, b);
    auto e2 = c.add_edge(T1, TR, a);
    auto e3 = c.add_edge(TR, BR, b);
    auto e4 = c.add_edge(BR, B1, a);
    auto e5 = c.add_edge(B1, BL, b);
    auto e6 = c.add_edge(BL, TL, a);
    // Second hexagon shares TR -> BR.
    auto f1 = c.add_edge(BR, X1, cc);
    auto f2 = c.add_edge(X1, X2, b);
    auto f3 = c.add_edge(X2, Y2, cc);
    auto f4 = c.add_edge(Y2, Y1, b);
    auto f5 = c.add_edge(Y1, TR, cc);
    // Third hexagon shares X2 -> Y2 and BL -> TL; the twist.
    auto g1 = c.add_edge(TL, Z1, cc);
    auto g2 = c.add_edge(Z1, X2, a);
    auto g3 = c.add_edge(Y2, P1, a);
    auto g4 = c.add_edge(P1, BL, cc);
    c.add_cell_with_height(2, {e1, e2, e3, e4, e5, e6}, "ab3");
    c.add_cell_with_height(2, {e3, f1, f2, f3, f4, f5}, "bc3");
    c.add_cell_with_height(2, {e6, g1, g2, f3, g3, g4}, "ca3");
    auto ref = trace_word(c, TL, alpha.parse("babcba^-1c^-1"));
    return GeneralRelator("moebius", std::move(c), 3, ref);
  }

  MeasuredPresentation moebius_example() {
    Alphabet                    alpha({"a", "b", "c"});
    std::vector<GeneralRelator> rels;
    rels.push_back(GeneralRelator::from_word("ab3", alpha.parse("(ab)^3")));
    rels.push_back(GeneralRelator::from_word("bc3", alpha.parse("(bc)^3")));
    rels.push_back(GeneralRelator::from_word("ca3", alpha.parse("(ca)^3")));
    rels.push_back(moebius_relator());
    Constants k;
    k.alpha    = Rational(1, 6);
    k.beta     = Rational(1, 6);
    k.gamma    = Rational(1, 12);
    k.declared = true;
    return MeasuredPresentation(alpha, std::move(rels), k);
  }

  std::vector<std::string> example_names() {
    return {"modular", "dihedral4", "height4", "moebius", "coxeter:1,3,2;3,1,3;2,3,1"};
  }

  MeasuredPresentation build_example(std::string const& name) {
    if (name == "modular") {
      return modular_example();
    }
    if (name == "height4") {
      return height4_example();
    }
    if (name == "moebius") {
      return moebius_example();
    }
    if (name == "dihedral") {
      return dihedral_example(4);
    }
    if (name.starts_with("dihedral")) {
      auto digits = name.substr(8);
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)
          && digits.size() < 6) {
        return dihedral_example(std::stoi(digits));
      }
    }
    if (name.starts_with("coxeter:")) {
      CoxeterMatrix      m;
      std::stringstream  rows(name.substr(8));
      std::string        row;
      while (std::getline(rows, row, ';')) {
        std::vector<int>  r;
        std::stringstream cells(row);
        std::string       cell;
        while (std::getline(cells, cell, ',')) {
          try {
            r.push_back(std::stoi(cell));
          } catch (std::exception const&) {
            throw Error("bad Coxeter matrix entry '" + cell + "'");
          }
        }
        m.push_back(std::move(r));
      }
      return coxeter_example(m);
    }
    throw Error("unknown example '" + name + "'");
  }

  PoincareComplex poincare_construction(MeasuredPresentation const& p) {
    PoincareComplex out;
    auto&           c    = out.complex;
    auto            base = c.add_vertex();
    for (std::size_t g = 0; g < p.alphabet().size(); ++g) {
      c.add_edge(base, base, static_cast<int>(g));
    }
    std::vector<std::size_t> order(p.relators().size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      auto const& r = p.relators()[x];
      auto const& s = p.relators()[y];
      return std::make_tuple(r.height(), r.rank(), r.name())
             < std::make_tuple(s.height(), s.rank(), s.name());
    });
    for (auto i : order) {
      auto const& r = p.relators()[i];
      auto        m = extend_labeled_map(r.boundary(), r.base_vertex(), c, base);
      if (!m) {
        throw Error("Poincare construction: boundary of " + r.name()
                    + " does not map into the complex built so far (missing subcone?)");
      }
      std::vector<CellId> top;
      for (auto q : r.boundary().maximal_cells()) {
        top.push_back((*m)[static_cast<std::size_t>(q)]);
      }
      c.add_cell_with_height(r.height(), top, r.name());
      out.attached.push_back(r.name());
      out.relation_words.push_back(r.boundary().label(r.reference_loop()));
    }
    return out;
  }

}  // namespace gsc
