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

#include "gsc/relator.hpp"

#include "gsc/homology.hpp"
#include "gsc/metric.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace gsc {

  namespace {
    using Perm = std::vector<int>;

    Perm compose_perm(Perm const& a, Perm const& b) {  // a after b
      Perm out(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] = a[static_cast<std::size_t>(b[i])];
      }
      return out;
    }

    std::size_t perm_order(Perm const& p) {
      Perm id(p.size());
      std::iota(id.begin(), id.end(), 0);
      Perm        x = p;
      std::size_t k = 1;
      while (x != id) {
        x = compose_perm(p, x);
        ++k;
      }
      return k;
    }

    bool is_cyclic_group(std::vector<Perm> const& g) {
      for (auto const& p : g) {
        if (perm_order(p) == g.size()) {
          return true;
        }
      }
      return g.empty();
    }

    // Some element r of order n/2 whose complement consists of involutions.
    bool is_dihedral_group(std::vector<Perm> const& g) {
      auto n = g.size();
      if (n < 2 || n % 2 != 0) {
        return false;
      }
      for (auto const& r : g) {
        if (perm_order(r) != n / 2) {
          continue;
        }
        std::set<Perm> sub;
        Perm           x = r;
        for (std::size_t k = 0; k < n / 2; ++k) {
          sub.insert(x);
          x = compose_perm(r, x);
        }
        bool ok = true;
        for (auto const& s : g) {
          if (!sub.contains(s) && perm_order(s) != 2) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return true;
        }
      }
      return false;
    }

    bool is_power_of_two(std::size_t n) {
      return n != 0 && (n & (n - 1)) == 0;
    }

    std::int64_t gcd64(std::int64_t a, std::int64_t b) {
      return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
    }
  }  // namespace

  LabeledComplex circle_complex(Word const& w) {
    if (w.empty()) {
      throw Error("relator word is empty");
    }
    LabeledComplex c;
    auto           n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      c.add_vertex();
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto a = static_cast<CellId>(i);
      auto b = static_cast<CellId>((i + 1) % n);
      if (w[i].inverse) {
        c.add_edge(b, a, w[i].gen);
      } else {
        c.add_edge(a, b, w[i].gen);
      }
    }
    return c;
  }

  GeneralRelator GeneralRelator::from_word(std::string name, Word const& w,
                                           std::optional<int> rank) {
    if (w.empty() || !is_cyclically_reduced(w)) {
      throw Error("relator " + name + ": word must be nonempty and cyclically reduced");
    }
    auto          c = circle_complex(w);
    PathInComplex ref{0, {}, 0};
    auto          n = static_cast<CellId>(w.size());
    for (CellId i = 0; i < n; ++i) {
      ref.steps.push_back(Step{n + i, !w[static_cast<std::size_t>(i)].inverse});
    }
    return GeneralRelator(std::move(name), std::move(c), rank, ref);
  }

  GeneralRelator::GeneralRelator(std::string                  name,
                                 LabeledComplex               boundary,
                                 std::optional<int>           rank,
                                 std::optional<PathInComplex> reference)
      : _name(std::move(name)), _boundary(std::move(boundary)) {
    auto report = validate_complex(_boundary, false);
    if (!report.ok()) {
      throw Error("relator " + _name + ": " + report.issues.front().what);
    }
    auto circle = analyze_circle(_boundary);
    if (!circle.is_circle()) {
      throw Error("relator " + _name + ": boundary is not circle-like ("
                  + circle.reason + ")");
    }
    _cocycle = circle.cocycle;
    if (reference) {
      if (!is_valid_path(_boundary, *reference) || !reference->closed()) {
        throw Error("relator " + _name + ": reference loop is not a closed path");
      }
      auto w = winding(_cocycle, *reference);
      if (w != 1 && w != -1) {
        throw Error("relator " + _name + ": reference loop has winding "
                    + std::to_string(w));
      }
      if (w < 0) {
        for (auto& x : _cocycle) {
          x = -x;
        }
      }
      _reference = *reference;
    } else {
      auto loop = shortest_loop_with_winding(_boundary, _cocycle, 1);
      if (!loop) {
        throw Error("relator " + _name + ": no representative loop");
      }
      _reference = *loop;
    }
    _base   = _reference.start;
    _height = std::max(2, _boundary.max_height() + 1);
    set_rank(rank.value_or(_height));

    auto rep = shortest_loop_with_winding(_boundary, _cocycle, 1);
    _shortest_rep = rep ? *rep : _reference;
    auto ratio    = min_ratio_cycle(_boundary, _cocycle, _shortest_rep);
    _length         = ratio.ratio;
    _length_witness = ratio.witness;
    _crucial        = crucial_cones(_boundary, _cocycle);
    _automorphisms  = compute_automorphisms(_boundary, _cocycle, _reference, _crucial);
    _width          = width_of(_boundary, _cocycle, orbit_representatives());
  }

  void GeneralRelator::set_rank(int r) {
    if (r < 2) {
      throw Error("relator " + _name + ": rank must be at least 2");
    }
    _rank = r;
  }

  LabeledComplex GeneralRelator::cone() const {
    LabeledComplex c = _boundary;
    c.add_cell_with_height(_height, _boundary.maximal_cells(), _name);
    return c;
  }

  std::vector<CellId> GeneralRelator::orbit_representatives() const {
    std::vector<CellId> out;
    std::vector<bool>   seen(_boundary.size(), false);
    for (auto v : _boundary.vertices()) {
      if (seen[static_cast<std::size_t>(v)]) {
        continue;
      }
      out.push_back(v);
      for (auto const& a : _automorphisms.elements) {
        seen[static_cast<std::size_t>(a.map[static_cast<std::size_t>(v)])] = true;
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
    return out;
  }

  std::int64_t winding_number(GeneralRelator const& r, PathInComplex const& loop) {
    if (!is_valid_path(r.boundary(), loop)) {
      throw Error("path does not lie in the boundary of " + r.name());
    }
    if (!loop.closed()) {
      throw Error("winding number needs a closed path");
    }
    return winding(r.cocycle(), loop);
  }

  bool is_representative(GeneralRelator const& r, PathInComplex const& loop) {
    auto w = winding_number(r, loop);
    return w == 1 || w == -1;
  }

  PathInComplex apply(Automorphism const& a, LabeledComplex const& c,
                      PathInComplex const& p) {
    (void) c;
    PathInComplex out{a.map[static_cast<std::size_t>(p.start)], {},
                      a.map[static_cast<std::size_t>(p.end)]};
    for (auto s : p.steps) {
      out.steps.push_back(Step{a.map[static_cast<std::size_t>(s.edge)], s.forward});
    }
    return out;
  }

  AutomorphismGroup compute_automorphisms(LabeledComplex const&      boundary,
                                          Cocycle const&             phi,
                                          PathInComplex const&       reference,
                                          std::vector<CellId> const& crucial) {
    AutomorphismGroup g;
    auto              base = reference.start;
    auto              vs   = boundary.vertices();
    std::stable_partition(vs.begin(), vs.end(), [&](CellId v) { return v == base; });
    for (auto w : vs) {
      auto m = extend_labeled_map(boundary, base, boundary, w);
      if (!m) {
        continue;
      }
      std::vector<bool> hit(boundary.size(), false);
      bool              bijective = true;
      for (auto x : *m) {
        if (hit[static_cast<std::size_t>(x)]) {
          bijective = false;
          break;
        }
        hit[static_cast<std::size_t>(x)] = true;
      }
      if (!bijective) {
        continue;
      }
      Automorphism a{std::move(*m), 1};
      a.winding_sign = winding(phi, apply(a, boundary, reference)) < 0 ? -1 : 1;
      g.elements.push_back(std::move(a));
    }

    std::vector<Perm> full;
    for (auto const& a : g.elements) {
      full.emplace_back(a.map.begin(), a.map.end());
    }
    g.cyclic   = is_cyclic_group(full);
    g.dihedral = is_dihedral_group(full);

    if (crucial.empty()) {
      g.kernel_order = g.order();
      return g;
    }
    std::map<CellId, int> slot;
    for (std::size_t i = 0; i < crucial.size(); ++i) {
      slot[crucial[i]] = static_cast<int>(i);
    }
    std::set<Perm> image;
    for (auto const& a : g.elements) {
      Perm p;
      for (auto c : crucial) {
        auto it = slot.find(a.map[static_cast<std::size_t>(c)]);
        if (it == slot.end()) {
          g.fits_structure_theorem = false;
          return g;
        }
        p.push_back(it->second);
      }
      image.insert(std::move(p));
    }
    std::vector<Perm> img(image.begin(), image.end());
    g.kernel_order           = g.order() / img.size();
    g.fits_structure_theorem = is_power_of_two(g.kernel_order)
                               && (is_cyclic_group(img) || is_dihedral_group(img));
    return g;
  }

  bool has_orientation_reversing_automorphism(GeneralRelator const& r) {
    for (auto const& a : r.automorphisms().elements) {
      if (a.winding_sign < 0) {
        return true;
      }
    }
    return false;
  }

  std::vector<bool> removal_survivors(LabeledComplex const& c, CellId p) {
    std::vector<bool> keep(c.size(), true);
    if (c.cell(p).height <= 1) {
      for (auto q : c.upset(p)) {
        keep[static_cast<std::size_t>(q)] = false;
      }
      return keep;
    }
    keep[static_cast<std::size_t>(p)] = false;
    for (auto q : c.ideal(p)) {
      bool only_p = true;
      for (auto u : c.upset(q)) {
        if (c.cofaces(u).empty() && u != p) {
          only_p = false;
          break;
        }
      }
      if (only_p) {
        keep[static_cast<std::size_t>(q)] = false;
      }
    }
    return keep;
  }

  bool has_unit_winding_loop(LabeledComplex const&    c,
                             Cocycle const&           phi,
                             std::vector<bool> const& keep) {
    std::vector<std::int64_t> pot(c.size(), 0);
    std::vector<int>          comp(c.size(), -1);
    int                       ncomp = 0;
    for (auto root : c.vertices()) {
      if (!keep[static_cast<std::size_t>(root)]
          || comp[static_cast<std::size_t>(root)] >= 0) {
        continue;
      }
      comp[static_cast<std::size_t>(root)] = ncomp;
      std::deque<CellId> queue{root};
      std::int64_t       g = 0;
      std::set<CellId>   tree;
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : c.incident(v)) {
          if (!keep[static_cast<std::size_t>(e)]) {
            continue;
          }
          auto w    = c.from(e) == v ? c.to(e) : c.from(e);
          auto step = c.from(e) == v ? phi[static_cast<std::size_t>(e)]
                                     : -phi[static_cast<std::size_t>(e)];
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = ncomp;
            pot[static_cast<std::size_t>(w)]  = pot[static_cast<std::size_t>(v)] + step;
            tree.insert(e);
            queue.push_back(w);
          }
        }
      }
      // Every closed walk's winding is a combination of the fundamental cycles.
      for (auto e : c.edges()) {
        if (keep[static_cast<std::size_t>(e)] && !tree.contains(e)
            && comp[static_cast<std::size_t>(c.from(e))] == ncomp) {
          g = gcd64(g, pot[static_cast<std::size_t>(c.from(e))]
                           + phi[static_cast<std::size_t>(e)]
                           - pot[static_cast<std::size_t>(c.to(e))]);
        }
      }
      if (g == 1) {
        return true;
      }
      ++ncomp;
    }
    return false;
  }

  std::vector<CellId> crucial_cones(LabeledComplex const& boundary,
                                    Cocycle const&        phi) {
    std::vector<CellId> out;
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      auto p = static_cast<CellId>(i);
      auto h = boundary.cell(p).height;
      if (h == 0 || (h >= 2 && !boundary.cofaces(p).empty())) {
        continue;
      }
      if (!has_unit_winding_loop(boundary, phi, removal_survivors(boundary, p))) {
        out.push_back(p);
      }
    }
    return out;
  }

  GeneralRelator subrelator(GeneralRelator const& r, CellId p) {
    auto const& b = r.boundary();
    if (b.cell(p).height < 2) {
      throw Error("subrelator: cell is not a cone");
    }
    std::vector<bool> keep(b.size(), false);
    for (auto q : b.ideal(p)) {
      keep[static_cast<std::size_t>(q)] = true;
    }
    auto name = b.cell(p).tag.empty() ? r.name() + "." + std::to_string(p)
                                      : b.cell(p).tag;
    return GeneralRelator(name, b.restrict(keep));
  }

  std::optional<std::vector<CellId>> isomorphism(GeneralRelator const& a,
                                                 GeneralRelator const& b) {
    auto const& x = a.boundary();
    auto const& y = b.boundary();
    if (x.size() != y.size() || x.num_vertices() != y.num_vertices()
        || x.num_edges() != y.num_edges() || a.height() != b.height()) {
      return std::nullopt;
    }
    for (auto w : y.vertices()) {
      auto m = extend_labeled_map(x, a.base_vertex(), y, w);
      if (!m) {
        continue;
      }
      std::set<CellId> distinct(m->begin(), m->end());
      if (distinct.size() == y.size()) {
        m->push_back(b.apex());
        return m;
      }
    }
    return std::nullopt;
  }

  std::vector<GeneralRelator> subcone_closure(std::vector<GeneralRelator> const& rs) {
    std::vector<GeneralRelator> out;
    auto                        add = [&](GeneralRelator const& r) {
      for (auto const& s : out) {
        if (isomorphism(r, s)) {
          return;
        }
      }
      out.push_back(r);
    };
    for (auto const& r : rs) {
      add(r);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      auto const& b = out[i].boundary();
      std::vector<GeneralRelator> found;
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto p = static_cast<CellId>(j);
        if (b.cell(p).height >= 2 && b.cofaces(p).empty()) {
          found.push_back(subrelator(out[i], p));
        }
      }
      for (auto const& s : found) {
        add(s);
      }
    }
    return out;
  }

  std::vector<std::vector<CellId>> find_functors(GeneralRelator const& r,
                                                 LabeledComplex const& dst) {
    std::vector<std::vector<CellId>> out;
    auto                             src = r.cone();
    for (auto w : dst.vertices()) {
      if (auto m = extend_labeled_map(src, r.base_vertex(), dst, w)) {
        out.push_back(std::move(*m));
      }
    }
    return out;
  }

}  // namespace gsc
