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

#include <algorithm>
#include <deque>

namespace gsc {

  std::int64_t winding(Cocycle const& phi, PathInComplex const& p) {
    std::int64_t w = 0;
    for (auto s : p.steps) {
      auto v = phi[static_cast<std::size_t>(s.edge)];
      w += s.forward ? v : -v;
    }
    return w;
  }

  CoverGraph::CoverGraph(LabeledComplex const& c, Cocycle const& phi)
      : _c(&c),
        _phi(&phi),
        _stride(static_cast<std::int64_t>(std::max<std::size_t>(c.size(), 1))) {
    if (phi.size() != c.size()) {
      throw Error("cocycle size does not match complex");
    }
  }

  Lift CoverGraph::unkey(std::int64_t k) const noexcept {
    auto v = ((k % _stride) + _stride) % _stride;
    return Lift{static_cast<CellId>(v), (k - v) / _stride};
  }

  void CoverGraph::neighbors(Lift x, std::vector<Neighbor>& out) const {
    out.clear();
    for (auto e : _c->incident(x.vertex)) {
      auto phi = (*_phi)[static_cast<std::size_t>(e)];
      if (_c->from(e) == x.vertex) {
        out.push_back(Neighbor{Lift{_c->to(e), x.level + phi}, Step{e, true}});
      }
      if (_c->to(e) == x.vertex) {
        out.push_back(
            Neighbor{Lift{_c->from(e), x.level - phi}, Step{e, false}});
      }
    }
  }

  Lift CoverGraph::lift_end(PathInComplex const& p,
                            std::int64_t         start_level) const {
    return Lift{p.end, start_level + winding(*_phi, p)};
  }

  std::optional<PathInComplex> CoverGraph::shortest_path(Lift         from,
                                                         Lift         to,
                                                         std::int64_t max_dist) const {
    struct Parent {
      std::int64_t prev;
      Step         step;
      std::int64_t dist;
    };
    std::unordered_map<std::int64_t, Parent> parent;
    std::deque<Lift>                         queue{from};
    auto const                               target = key(to);
    parent.emplace(key(from), Parent{-1, Step{-1, true}, 0});
    std::vector<Neighbor> nbrs;
    bool                  found = key(from) == target;
    while (!found && !queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      auto d = parent[key(x)].dist;
      if (max_dist >= 0 && d >= max_dist) {
        continue;
      }
      neighbors(x, nbrs);
      for (auto const& n : nbrs) {
        auto k = key(n.to);
        if (parent.contains(k)) {
          continue;
        }
        parent.emplace(k, Parent{key(x), n.step, d + 1});
        if (k == target) {
          found = true;
          break;
        }
        queue.push_back(n.to);
      }
    }
    if (!found) {
      return std::nullopt;
    }
    PathInComplex p{from.vertex, {}, to.vertex};
    for (auto k = target; k != key(from);) {
      auto const& par = parent[k];
      p.steps.push_back(par.step);
      k = par.prev;
    }
    std::reverse(p.steps.begin(), p.steps.end());
    return p;
  }

  std::optional<std::int64_t> CoverGraph::distance(Lift         from,
                                                   Lift         to,
                                                   std::int64_t max_dist) const {
    auto p = shortest_path(from, to, max_dist);
    if (!p) {
      return std::nullopt;
    }
    return static_cast<std::int64_t>(p->length());
  }

  std::unordered_map<std::int64_t, std::int64_t>
  CoverGraph::ball(Lift center, std::int64_t radius) const {
    std::unordered_map<std::int64_t, std::int64_t> dist;
    std::deque<Lift>                               queue{center};
    dist.emplace(key(center), 0);
    std::vector<Neighbor> nbrs;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      auto d = dist[key(x)];
      if (d >= radius) {
        continue;
      }
      neighbors(x, nbrs);
      for (auto const& n : nbrs) {
        if (dist.emplace(key(n.to), d + 1).second) {
          queue.push_back(n.to);
        }
      }
    }
    return dist;
  }

  std::optional<PathInComplex>
  shortest_loop_with_winding(LabeledComplex const&      c,
                             Cocycle const&             phi,
                             std::int64_t               k,
                             std::vector<CellId> const& starts) {
    CoverGraph                   cover(c, phi);
    std::optional<PathInComplex> best;
    auto                         candidates = starts.empty() ? c.vertices() : starts;
    for (auto v : candidates) {
      std::int64_t limit = best ? static_cast<std::int64_t>(best->length()) - 1 : -1;
      if (limit == 0) {
        break;
      }
      auto p = cover.shortest_path(Lift{v, 0}, Lift{v, k}, limit);
      if (p && (!best || p->length() < best->length())) {
        best = std::move(p);
      }
    }
    return best;
  }

  ////////////////////////////////////////////////////////////////////////
  // ZCoverWindow
  ////////////////////////////////////////////////////////////////////////

  ZCoverWindow::ZCoverWindow(LabeledComplex const& c,
                             Cocycle const&        phi,
                             std::int64_t          K)
      : _K(K), _base_vertices(c.vertices()), _dense(c.size(), -1) {
    if (K < 0) {
      throw Error("cover window bound must be nonnegative");
    }
    for (std::size_t i = 0; i < _base_vertices.size(); ++i) {
      _dense[static_cast<std::size_t>(_base_vertices[i])] = static_cast<long>(i);
    }
    for (std::int64_t level = -K; level <= K; ++level) {
      for (auto v : _base_vertices) {
        _lifts.push_back(Lift{v, level});
      }
    }
    _incident.resize(_lifts.size());
    for (auto e : c.edges()) {
      auto phi_e = phi[static_cast<std::size_t>(e)];
      for (std::int64_t level = -K; level <= K; ++level) {
        auto a = index(Lift{c.from(e), level});
        auto b = index(Lift{c.to(e), level + phi_e});
        if (a < 0 || b < 0) {
          continue;
        }
        _incident[static_cast<std::size_t>(a)].push_back(_edges.size());
        if (a != b) {
          _incident[static_cast<std::size_t>(b)].push_back(_edges.size());
        }
        _edges.push_back(LiftedEdge{static_cast<std::size_t>(a),
                                    static_cast<std::size_t>(b), e});
      }
    }
  }

  long ZCoverWindow::index(Lift x) const {
    if (x.level < -_K || x.level > _K || x.vertex < 0
        || static_cast<std::size_t>(x.vertex) >= _dense.size()) {
      return -1;
    }
    auto d = _dense[static_cast<std::size_t>(x.vertex)];
    if (d < 0) {
      return -1;
    }
    return static_cast<long>((x.level + _K)
                             * static_cast<std::int64_t>(_base_vertices.size()))
           + d;
  }

  long ZCoverWindow::shift(std::size_t i) const {
    auto x = _lifts[i];
    return index(Lift{x.vertex, x.level + 1});
  }

}  // namespace gsc
