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

#include "gsc/relator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <tuple>

namespace gsc {

  namespace {
    struct Arc {
      std::size_t  from;
      std::size_t  to;
      std::int64_t w;
      Step         step;
    };

    struct Dense {
      std::vector<CellId> vertex;  // dense -> cell
      std::vector<long>   index;   // cell -> dense
    };

    Dense densify(LabeledComplex const& c) {
      Dense d;
      d.vertex = c.vertices();
      d.index.assign(c.size(), -1);
      for (std::size_t i = 0; i < d.vertex.size(); ++i) {
        d.index[static_cast<std::size_t>(d.vertex[i])] = static_cast<long>(i);
      }
      return d;
    }

    std::int64_t max_abs(Cocycle const& phi) {
      std::int64_t m = 0;
      for (auto x : phi) {
        m = std::max(m, x < 0 ? -x : x);
      }
      return m;
    }

    // Level spread of one fundamental domain, from spanning-tree potentials.
    std::int64_t domain_span(LabeledComplex const& c, Cocycle const& phi) {
      auto vs = c.vertices();
      if (vs.empty()) {
        return 0;
      }
      std::map<CellId, std::int64_t> pot{{vs.front(), 0}};
      std::deque<CellId>              queue{vs.front()};
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : c.incident(v)) {
          auto w    = c.from(e) == v ? c.to(e) : c.from(e);
          auto step = c.from(e) == v ? phi[static_cast<std::size_t>(e)]
                                     : -phi[static_cast<std::size_t>(e)];
          if (pot.emplace(w, pot[v] + step).second) {
            queue.push_back(w);
          }
        }
      }
      std::int64_t lo = 0, hi = 0;
      for (auto const& [v, p] : pot) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
      }
      return hi - lo + max_abs(phi);
    }

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };
  }  // namespace

  RatioCycle min_ratio_cycle(LabeledComplex const& c, Cocycle const& phi,
                             PathInComplex const& seed) {
    RatioCycle best;
    best.witness = seed;
    best.winding = winding(phi, seed);
    if (best.winding == 0) {
      throw Error("min_ratio_cycle: seed loop has winding 0");
    }
    if (best.winding < 0) {
      best.witness = reverse(c, seed);
      best.winding = -best.winding;
    }
    best.ratio = Rational(static_cast<std::int64_t>(seed.length()), best.winding);

    auto             dense = densify(c);
    std::size_t      n     = dense.vertex.size();
    std::vector<Arc> arcs;
    for (auto e : c.edges()) {
      auto a = static_cast<std::size_t>(dense.index[static_cast<std::size_t>(c.from(e))]);
      auto b = static_cast<std::size_t>(dense.index[static_cast<std::size_t>(c.to(e))]);
      auto w = phi[static_cast<std::size_t>(e)];
      arcs.push_back(Arc{a, b, w, Step{e, true}});
      arcs.push_back(Arc{b, a, -w, Step{e, false}});
    }

    // Dinkelbach: with lambda = p/q an arc costs q - p*w; a negative cycle is
    // exactly a closed walk of positive winding and ratio below lambda.
    while (true) {
      auto const p = best.ratio.numerator();
      auto const q = best.ratio.denominator();
      std::vector<std::int64_t> dist(n, 0);
      std::vector<long>         via(n, -1);
      long                      last = -1;
      for (std::size_t round = 0; round < n; ++round) {
        last = -1;
        for (std::size_t k = 0; k < arcs.size(); ++k) {
          auto const& arc  = arcs[k];
          auto        cost = q - p * arc.w;
          if (dist[arc.from] + cost < dist[arc.to]) {
            dist[arc.to] = dist[arc.from] + cost;
            via[arc.to]  = static_cast<long>(k);
            last         = static_cast<long>(arc.to);
          }
        }
        if (last < 0) {
          break;
        }
      }
      if (last < 0) {
        return best;
      }
      auto x = static_cast<std::size_t>(last);
      for (std::size_t i = 0; i < n; ++i) {
        x = arcs[static_cast<std::size_t>(via[x])].from;
      }
      std::vector<Step> steps;
      std::int64_t      w = 0;
      auto              y = x;
      do {
        auto const& arc = arcs[static_cast<std::size_t>(via[y])];
        steps.push_back(arc.step);
        w += arc.w;
        y = arc.from;
      } while (y != x);
      std::reverse(steps.begin(), steps.end());
      if (w <= 0) {
        throw Error("min_ratio_cycle: inconsistent negative cycle");
      }
      Rational r(static_cast<std::int64_t>(steps.size()), w);
      if (!(r < best.ratio)) {
        return best;
      }
      best.ratio   = r;
      best.winding = w;
      best.witness = PathInComplex{dense.vertex[x], std::move(steps), dense.vertex[x]};
    }
  }

  Rational window_scan_length(LabeledComplex const& c, Cocycle const& phi,
                              std::int64_t K) {
    CoverGraph cover(c, phi);
    auto       vs = c.vertices();
    if (vs.empty() || K < 1) {
      throw Error("window_scan_length: empty complex or K < 1");
    }
    auto first = cover.distance(Lift{vs.front(), 0}, Lift{vs.front(), 1});
    if (!first) {
      throw Error("window_scan_length: base vertex has no unit-winding loop");
    }
    Rational best(*first, 1);
    for (auto v : vs) {
      auto radius = boost::rational_cast<std::int64_t>(best * K);
      auto ball   = cover.ball(Lift{v, 0}, radius);
      for (std::int64_t k = 1; k <= K; ++k) {
        auto it = ball.find(cover.key(Lift{v, k}));
        if (it != ball.end()) {
          best = std::min(best, Rational(it->second, k));
        }
      }
    }
    return best;
  }

  BallRemoval ball_removal_probe(LabeledComplex const& c, Cocycle const& phi,
                                 Lift center, std::int64_t radius,
                                 std::int64_t K) {
    CoverGraph   cover(c, phi);
    ZCoverWindow window(c, phi, K);
    std::vector<bool> removed(window.num_vertices(), false);
    BallRemoval       out;
    auto              mark = [&](Lift x) {
      auto i = window.index(x);
      if (i < 0) {
        throw Error("ball_removal_probe: window too small for the ball");
      }
      if (!removed[static_cast<std::size_t>(i)]) {
        removed[static_cast<std::size_t>(i)] = true;
        ++out.removed_vertices;
      }
    };
    mark(center);
    if (radius >= 1) {
      for (auto const& [k, d] : cover.ball(center, radius - 1)) {
        mark(cover.unkey(k));
      }
    }
    UnionFind uf(window.num_vertices());
    for (auto const& e : window.edges()) {
      if (removed[e.a] || removed[e.b]) {
        ++out.removed_edges;
      } else {
        uf.unite(e.a, e.b);
      }
    }
    std::map<std::size_t, std::pair<bool, bool>> ends;
    for (std::size_t i = 0; i < window.num_vertices(); ++i) {
      if (removed[i]) {
        continue;
      }
      auto& slot = ends[uf.find(i)];
      auto  lvl  = window.lift(i).level;
      slot.first  = slot.first || lvl == -K;
      slot.second = slot.second || lvl == K;
    }
    out.components     = ends.size();
    out.ends_separated = true;
    for (auto const& [root, e] : ends) {
      if (e.first && e.second) {
        out.ends_separated = false;
      }
    }
    return out;
  }

  std::int64_t separating_radius(LabeledComplex const& c, Cocycle const& phi,
                                 CellId v) {
    auto const M     = std::max<std::int64_t>(max_abs(phi), 1);
    auto const span  = domain_span(c, phi);
    auto const limit = 4 * static_cast<std::int64_t>(c.num_vertices()) + 4;
    for (std::int64_t r = 0; r <= limit; ++r) {
      auto K    = r * M + span + 1;
      auto prev = ball_removal_probe(c, phi, Lift{v, 0}, r, K).ends_separated;
      while (true) {
        auto next = ball_removal_probe(c, phi, Lift{v, 0}, r, K + 1).ends_separated;
        if (next == prev) {
          break;
        }
        prev = next;
        ++K;
        if (K > 8 * (r * M + span + 1) + 16) {
          throw Error("separating_radius: window did not stabilize");
        }
      }
      if (prev) {
        return r;
      }
    }
    throw Error("separating_radius: no separating ball found");
  }

  std::int64_t width_of(LabeledComplex const& c, Cocycle const& phi,
                        std::vector<CellId> const& vertices) {
    std::int64_t w = 0;
    for (auto v : vertices) {
      w = std::max(w, separating_radius(c, phi, v));
    }
    return w;
  }

  Rational relator_length(GeneralRelator const& r) {
    return r.length();
  }

  std::int64_t width(GeneralRelator const& r) {
    return r.width();
  }

  std::int64_t geodesic_length(GeneralRelator const& r, PathInComplex const& u) {
    if (!is_valid_path(r.boundary(), u)) {
      throw Error("path does not lie in the boundary of " + r.name());
    }
    CoverGraph cover(r.boundary(), r.cocycle());
    auto       d = cover.distance(Lift{u.start, 0}, cover.lift_end(u, 0),
                                  static_cast<std::int64_t>(u.length()));
    if (!d) {
      throw Error("geodesic_length: lift endpoints not connected");
    }
    return *d;
  }

  Rational graph_length(GeneralRelator const& r, PathInComplex const& u) {
    return Rational(geodesic_length(r, u)) / r.length();
  }

  std::vector<PathInComplex> enumerate_paths(LabeledComplex const& c,
                                             std::size_t           max_len) {
    std::vector<PathInComplex> out;
    PathInComplex              cur;
    auto                       rec = [&](auto&& self, CellId v) -> void {
      cur.end = v;
      out.push_back(cur);
      if (cur.steps.size() == max_len) {
        return;
      }
      for (auto e : c.incident(v)) {
        for (bool fwd : {true, false}) {
          if ((fwd ? c.from(e) : c.to(e)) != v) {
            continue;
          }
          cur.steps.push_back(Step{e, fwd});
          self(self, fwd ? c.to(e) : c.from(e));
          cur.steps.pop_back();
        }
      }
    };
    for (auto v : c.vertices()) {
      cur = PathInComplex{v, {}, v};
      rec(rec, v);
    }
    return out;
  }

  bool ContractReport::holds(int property) const noexcept {
    for (auto const& v : violations) {
      if (v.property == property) {
        return false;
      }
    }
    return true;
  }

  ContractReport check_metric_contract(GeneralRelator const&             r,
                                       PathMetric const&                 m,
                                       std::vector<PathInComplex> const& samples,
                                       std::size_t                       max_reports) {
    ContractReport             report;
    auto const&                c = r.boundary();
    std::map<int, std::size_t> reported;
    auto eval = [&](PathInComplex const& p) {
      ++report.evaluations;
      return m(p);
    };
    auto flag = [&](int prop, std::string detail, std::vector<PathInComplex> w) {
      if (reported[prop]++ < max_reports) {
        report.violations.push_back(ContractViolation{prop, std::move(detail), std::move(w)});
      }
    };

    std::vector<Rational> vals;
    vals.reserve(samples.size());
    for (auto const& p : samples) {
      if (!is_valid_path(c, p)) {
        throw Error("check_metric_contract: sample is not a path in the boundary");
      }
      vals.push_back(eval(p));
    }

    std::map<std::tuple<CellId, CellId, std::int64_t>, std::size_t> classes;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      auto const& p   = samples[i];
      auto const  v   = vals[i];
      auto const  wnd = winding(r.cocycle(), p);
      bool contractible = p.closed() && wnd == 0;

      auto [it, fresh] = classes.emplace(std::make_tuple(p.start, p.end, wnd), i);
      if (!fresh && vals[it->second] != v) {
        flag(1, "homotopic paths measure " + to_string(vals[it->second]) + " and "
                    + to_string(v),
             {samples[it->second], p});
      }
      if (v < Rational(0) || (v == Rational(0)) != contractible) {
        flag(2, "value " + to_string(v) + " on a "
                    + (contractible ? "contractible loop" : "non-contractible path"),
             {p});
      }
      auto inv = eval(reverse(c, p));
      if (inv != v) {
        flag(3, "U measures " + to_string(v) + " but U^-1 measures " + to_string(inv),
             {p});
      }
      for (std::size_t k = 1; k < p.length(); ++k) {
        PathInComplex u{p.start, {p.steps.begin(), p.steps.begin() + static_cast<long>(k)}, -1};
        PathInComplex w{-1, {p.steps.begin() + static_cast<long>(k), p.steps.end()}, p.end};
        u.end   = c.endpoint(-1, u.steps.back());
        w.start = u.end;
        auto du = eval(u), dw = eval(w);
        if (v > du + dw) {
          flag(4, to_string(v) + " > " + to_string(du) + " + " + to_string(dw), {u, w});
        }
      }
      if (p.closed()) {
        auto a = wnd < 0 ? -wnd : wnd;
        if (v < Rational(a)) {
          flag(5, "loop of winding " + std::to_string(a) + " measures " + to_string(v),
               {p});
        }
      }
      for (auto const& aut : r.automorphisms().elements) {
        auto img = apply(aut, c, p);
        auto dv  = eval(img);
        if (dv != v) {
          flag(6, "automorphic images measure " + to_string(v) + " and " + to_string(dv),
               {p, img});
        }
      }
    }
    return report;
  }

  PathMetric graph_metric(GeneralRelator const& r) {
    // graph_length depends only on the endpoint lifts, so cache on them.
    auto cache = std::make_shared<std::map<std::tuple<CellId, CellId, std::int64_t>, Rational>>();
    return [&r, cache](PathInComplex const& p) {
      if (!is_valid_path(r.boundary(), p)) {
        throw Error("path does not lie in the boundary of " + r.name());
      }
      auto key = std::make_tuple(p.start, p.end, winding(r.cocycle(), p));
      auto it  = cache->find(key);
      if (it == cache->end()) {
        it = cache->emplace(key, graph_length(r, p)).first;
      }
      return it->second;
    };
  }

}  // namespace gsc
