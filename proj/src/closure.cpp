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
#include "gsc/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace gsc {

  namespace {

    struct UnionFind {
      std::vector<int> parent;

      int add() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
      }
      int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
          parent[static_cast<std::size_t>(x)] =
              parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
          x = parent[static_cast<std::size_t>(x)];
        }
        return x;
      }
      // Keeps the smaller id as representative.
      bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        parent[static_cast<std::size_t>(b)] = a;
        return true;
      }
    };

    struct RawEdge {
      int from, to, gen;
    };

    struct Copy {
      std::size_t         relator;
      std::vector<int>    vertex;  // relator cell id -> host vertex id (-1 off vertices)
      std::vector<int>    edge;    // relator cell id -> host edge id
    };

    class Host {
     public:
      int add_vertex() {
        return _v.add();
      }
      int add_edge(int from, int to, int gen) {
        _edges.push_back({from, to, gen});
        return _e.add();
      }

      void glue(int a, int b) {
        _v.unite(a, b);
        fold();
      }

      // Identify edges with a common endpoint and label until deterministic.
      void fold() {
        bool changed = true;
        while (changed) {
          changed = false;
          std::map<std::tuple<int, int, bool>, int> seen;
          for (int e = 0; e < static_cast<int>(_edges.size()); ++e) {
            if (_e.find(e) != e) {
              continue;
            }
            auto const& r = _edges[static_cast<std::size_t>(e)];
            for (bool out : {true, false}) {
              auto key = std::make_tuple(_v.find(out ? r.from : r.to), r.gen, out);
              auto it  = seen.find(key);
              if (it == seen.end()) {
                seen.emplace(key, e);
                continue;
              }
              auto const& o = _edges[static_cast<std::size_t>(it->second)];
              _v.unite(o.from, r.from);
              _v.unite(o.to, r.to);
              _e.unite(it->second, e);
              changed = true;
              break;
            }
          }
        }
      }

      // Current quotient as a complex, with higher cells from the copies.
      LabeledComplex materialize(std::vector<GeneralRelator const*> const& rels,
                                 std::vector<Copy> const&                  copies,
                                 std::vector<CellId>&                      vertex_cell) {
        LabeledComplex c;
        vertex_cell.assign(_v.parent.size(), -1);
        for (int v = 0; v < static_cast<int>(_v.parent.size()); ++v) {
          if (_v.find(v) == v) {
            vertex_cell[static_cast<std::size_t>(v)] = c.add_vertex();
          }
        }
        for (int v = 0; v < static_cast<int>(_v.parent.size()); ++v) {
          vertex_cell[static_cast<std::size_t>(v)] =
              vertex_cell[static_cast<std::size_t>(_v.find(v))];
        }
        std::vector<CellId> edge_cell(_edges.size(), -1);
        for (int e = 0; e < static_cast<int>(_edges.size()); ++e) {
          if (_e.find(e) == e) {
            auto const& r = _edges[static_cast<std::size_t>(e)];
            edge_cell[static_cast<std::size_t>(e)] =
                c.add_edge(vertex_cell[static_cast<std::size_t>(r.from)],
                           vertex_cell[static_cast<std::size_t>(r.to)], r.gen);
          }
        }
        for (auto const& cp : copies) {
          auto const&         R = *rels[cp.relator];
          auto const&         b = R.boundary();
          std::vector<CellId> img(b.size(), -1);
          for (CellId x = 0; x < static_cast<CellId>(b.size()); ++x) {
            auto const& cell = b.cell(x);
            if (cell.height == 0) {
              img[static_cast<std::size_t>(x)] =
                  vertex_cell[static_cast<std::size_t>(cp.vertex[static_cast<std::size_t>(x)])];
            } else if (cell.height == 1) {
              img[static_cast<std::size_t>(x)] = edge_cell[static_cast<std::size_t>(
                  _e.find(cp.edge[static_cast<std::size_t>(x)]))];
            }
          }
          auto place = [&](int h, std::vector<CellId> const& covers, std::string const& tag) {
            std::vector<CellId> cv;
            for (auto y : covers) {
              cv.push_back(img[static_cast<std::size_t>(y)]);
            }
            std::sort(cv.begin(), cv.end());
            cv.erase(std::unique(cv.begin(), cv.end()), cv.end());
            CellId f = c.find_cell(h, cv);
            return f >= 0 ? f : c.add_cell_with_height(h, cv, tag);
          };
          std::vector<CellId> order;
          for (CellId x = 0; x < static_cast<CellId>(b.size()); ++x) {
            if (b.cell(x).height >= 2) {
              order.push_back(x);
            }
          }
          std::stable_sort(order.begin(), order.end(),
                           [&](CellId x, CellId y) { return b.cell(x).height < b.cell(y).height; });
          for (auto x : order) {
            img[static_cast<std::size_t>(x)] = place(b.cell(x).height, b.cell(x).covers, b.cell(x).tag);
          }
          place(R.height(), b.maximal_cells(), R.name());
        }
        return c;
      }

      int vertex_class(int v) {
        return _v.find(v);
      }

     private:
      UnionFind            _v;
      UnionFind            _e;
      std::vector<RawEdge> _edges;
    };

    struct Trigger {
      std::size_t relator;
      CellId      y0;
      CellId      x0;
      Word        reading;
    };

    // First unattached reading with d_R >= alpha, scanning relators in the
    // given order, relator vertices by orbit, then complex vertices.
    std::optional<Trigger> scan(LabeledComplex const&                     c,
                                std::vector<GeneralRelator const*> const& rels,
                                std::vector<LabeledComplex> const&        cones,
                                Rational                                  alpha,
                                std::size_t                               codes) {
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        auto const&  R = *rels[ri];
        auto const&  b = R.boundary();
        std::int64_t need =
            std::max<std::int64_t>(ceil(alpha * R.length()), 1);
        CoverGraph cover(b, R.cocycle());
        for (auto y0 : R.orbit_representatives()) {
          auto ball = cover.ball(Lift{y0, 0}, need);
          for (auto x0 : c.vertices()) {
            bool common = false;
            for (std::size_t code = 0; code < codes && !common; ++code) {
              Letter x = Letter::from_code(static_cast<int>(code));
              common   = c.step(x0, x).has_value() && b.step(y0, x).has_value();
            }
            if (!common || extend_labeled_map(cones[ri], y0, c, x0)) {
              continue;
            }
            struct State {
              CellId       x, y;
              std::int64_t level;
              long         parent;
              int          code;
            };
            std::vector<State> st{{x0, y0, 0, -1, -1}};
            std::map<std::tuple<CellId, CellId, std::int64_t>, std::size_t> seen{
                {{x0, y0, 0}, 0}};
            for (std::size_t k = 0; k < st.size(); ++k) {
              State s = st[k];
              for (std::size_t code = 0; code < codes; ++code) {
                Letter l  = Letter::from_code(static_cast<int>(code));
                auto   sx = c.step(s.x, l);
                auto   sy = b.step(s.y, l);
                if (!sx || !sy) {
                  continue;
                }
                CellId       nx = c.endpoint(s.x, *sx);
                CellId       ny = b.endpoint(s.y, *sy);
                std::int64_t lv =
                    s.level
                    + (sy->forward ? 1 : -1) * R.cocycle()[static_cast<std::size_t>(sy->edge)];
                if (!seen.emplace(std::make_tuple(nx, ny, lv), st.size()).second) {
                  continue;
                }
                st.push_back({nx, ny, lv, static_cast<long>(k), static_cast<int>(code)});
                auto it = ball.find(cover.key(Lift{ny, lv}));
                if (it == ball.end() || it->second >= need) {
                  Trigger t{ri, y0, x0, {}};
                  for (long q = static_cast<long>(st.size() - 1); q > 0;
                       q = st[static_cast<std::size_t>(q)].parent) {
                    t.reading.push_back(Letter::from_code(st[static_cast<std::size_t>(q)].code));
                  }
                  std::reverse(t.reading.begin(), t.reading.end());
                  return t;
                }
              }
            }
          }
        }
      }
      return std::nullopt;
    }

    std::vector<GeneralRelator const*> relators_up_to(MeasuredPresentation const& p, int k) {
      std::vector<GeneralRelator const*> out;
      for (auto const& r : p.relators()) {
        if (r.rank() <= k) {
          out.push_back(&r);
        }
      }
      std::stable_sort(out.begin(), out.end(), [](auto* a, auto* b) {
        return std::make_tuple(a->rank(), a->length(), a->name())
             < std::make_tuple(b->rank(), b->length(), b->name());
      });
      return out;
    }

    void check_seed(MeasuredPresentation const& p, Word const& seed, SeedMode mode, int k) {
      if (!p.alphabet().valid(seed)) {
        throw Error("seed uses letters outside the alphabet");
      }
      if (mode == SeedMode::Circular && seed.empty()) {
        throw Error("circular seed must be nonempty");
      }
      if (mode == SeedMode::Straight ? !is_freely_reduced(seed) : !is_cyclically_reduced(seed)) {
        throw PreconditionError(mode == SeedMode::Straight ? "seed is not freely reduced"
                                                           : "seed is not cyclically reduced");
      }
      if (k >= 2) {
        std::vector<GeneralRelator> lower;
        for (auto const& r : p.relators()) {
          if (r.rank() <= k) {
            lower.push_back(r);
          }
        }
        MeasuredPresentation sub(p.alphabet(), lower, p.constants());
        if (auto st = DehnSolver(sub).find_replacement(seed)) {
          throw PreconditionError("seed is not Dehn-reduced: subword at "
                                  + std::to_string(st->position) + " of length "
                                  + std::to_string(st->length) + " shortens in " + st->relator);
        }
      }
    }

  }  // namespace

  ClosureResult alpha_closure(MeasuredPresentation const& p, Word const& seed, SeedMode mode,
                              int rank_bound, ClosureOptions const& opt) {
    if (!opt.force) {
      check_seed(p, seed, mode, rank_bound);
    }
    Rational alpha = opt.alpha.value_or(p.constants().alpha);
    if (alpha <= Rational(0)) {
      throw Error("closure threshold alpha must be positive");
    }
    auto                        rels = relators_up_to(p, rank_bound);
    std::vector<LabeledComplex> cones;
    for (auto const* r : rels) {
      cones.push_back(r->cone());
    }
    std::size_t codes = 2 * p.alphabet().size();

    Host             host;
    std::vector<int> seed_vertex{host.add_vertex()};
    for (std::size_t i = 0; i < seed.size(); ++i) {
      bool last = mode == SeedMode::Circular && i + 1 == seed.size();
      int  nxt  = last ? seed_vertex[0] : host.add_vertex();
      int  cur  = seed_vertex.back();
      if (seed[i].inverse) {
        host.add_edge(nxt, cur, seed[i].gen);
      } else {
        host.add_edge(cur, nxt, seed[i].gen);
      }
      if (!last) {
        seed_vertex.push_back(nxt);
      }
    }
    host.fold();

    std::vector<Copy>   copies;
    std::vector<int>    trigger_vertex;  // host vertex per log entry
    ClosureResult       res;
    std::vector<CellId> vertex_cell;
    LabeledComplex      cur = host.materialize(rels, copies, vertex_cell);
    for (std::size_t iter = 0;; ++iter) {
      // Host vertex ids of the current complex's vertices.
      std::vector<int> host_of(cur.size(), -1);
      for (int v = static_cast<int>(vertex_cell.size()) - 1; v >= 0; --v) {
        host_of[static_cast<std::size_t>(vertex_cell[static_cast<std::size_t>(v)])] = v;
      }
      auto t = scan(cur, rels, cones, alpha, codes);
      if (!t) {
        res.closed = true;
        break;
      }
      if (copies.size() >= opt.cap) {
        break;
      }
      auto const& R = *rels[t->relator];
      auto const& b = R.boundary();
      Copy        cp{t->relator, std::vector<int>(b.size(), -1), std::vector<int>(b.size(), -1)};
      for (auto v : b.vertices()) {
        cp.vertex[static_cast<std::size_t>(v)] = host.add_vertex();
      }
      for (auto e : b.edges()) {
        cp.edge[static_cast<std::size_t>(e)] =
            host.add_edge(cp.vertex[static_cast<std::size_t>(b.from(e))],
                          cp.vertex[static_cast<std::size_t>(b.to(e))], b.label(e));
      }
      int anchor = host_of[static_cast<std::size_t>(t->x0)];
      host.glue(cp.vertex[static_cast<std::size_t>(t->y0)], anchor);
      copies.push_back(std::move(cp));
      trigger_vertex.push_back(anchor);
      res.log.push_back({R.name(), t->y0, t->reading, {}, iter});
      cur = host.materialize(rels, copies, vertex_cell);
    }
    res.complex = std::move(cur);
    for (std::size_t i = 0; i < res.log.size(); ++i) {
      CellId x = vertex_cell[static_cast<std::size_t>(trigger_vertex[i])];
      if (auto path = trace_word(res.complex, x, res.log[i].reading)) {
        res.log[i].path = *path;
      }
    }
    CellId s0 = vertex_cell[static_cast<std::size_t>(seed_vertex[0])];
    if (auto path = trace_word(res.complex, s0, seed)) {
      res.seed_path = *path;
    }
    return res;
  }

  std::optional<ClosureAttachment> find_unattached_reading(MeasuredPresentation const& p,
                                                           ClosureResult const&        r,
                                                           int                         rank_bound,
                                                           Rational                    alpha) {
    auto                        rels = relators_up_to(p, rank_bound);
    std::vector<LabeledComplex> cones;
    for (auto const* x : rels) {
      cones.push_back(x->cone());
    }
    auto t = scan(r.complex, rels, cones, alpha, 2 * p.alphabet().size());
    if (!t) {
      return std::nullopt;
    }
    ClosureAttachment a;
    a.relator        = rels[t->relator]->name();
    a.relator_vertex = t->y0;
    a.reading        = t->reading;
    if (auto path = trace_word(r.complex, t->x0, t->reading)) {
      a.path = *path;
    }
    return a;
  }

}  // namespace gsc
