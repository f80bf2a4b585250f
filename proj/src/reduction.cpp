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

#include "gsc/reduction.hpp"

#include "gsc/axioms.hpp"
#include "gsc/cover.hpp"
#include "gsc/metric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

namespace gsc {

  namespace {
    constexpr std::size_t kAllPairsLimit = 1024;

    void require_gate(MeasuredPresentation const& p, bool force) {
      if (force) {
        return;
      }
      auto gate = solve_precondition(p);
      if (!gate.ok) {
        throw PreconditionError("solver precondition not met: " + gate.reason
                                + " (use force to override)");
      }
    }
  }  // namespace

  DehnSolver::DehnSolver(MeasuredPresentation const& p)
      : _codes(2 * p.alphabet().size()) {
    std::vector<GeneralRelator const*> order;
    for (auto const& r : p.relators()) {
      order.push_back(&r);
    }
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
      return std::make_tuple(a->length(), a->name()) < std::make_tuple(b->length(), b->name());
    });
    for (auto const* r : order) {
      auto const& c = r->boundary();
      Table       t;
      t.name   = r->name();
      t.vertex = c.vertices();
      t.nv     = t.vertex.size();
      std::vector<int> dense(c.size(), -1);
      for (std::size_t i = 0; i < t.nv; ++i) {
        dense[static_cast<std::size_t>(t.vertex[i])] = static_cast<int>(i);
      }
      t.next.assign(t.nv * _codes, -1);
      t.adj.resize(t.nv);
      for (std::size_t i = 0; i < t.nv; ++i) {
        CellId v = t.vertex[i];
        for (auto e : c.incident(v)) {
          int g = c.label(e);
          if (c.from(e) == v) {
            int w = dense[static_cast<std::size_t>(c.to(e))];
            t.next[i * _codes + static_cast<std::size_t>(Letter{g, false}.code())] = w;
            t.adj[i].emplace_back(w, Letter{g, false});
          }
          if (c.to(e) == v) {
            int w = dense[static_cast<std::size_t>(c.from(e))];
            t.next[i * _codes + static_cast<std::size_t>(Letter{g, true}.code())] = w;
            t.adj[i].emplace_back(w, Letter{g, true});
          }
        }
      }
      _tables.push_back(std::move(t));
      auto& tt = _tables.back();
      if (tt.nv <= kAllPairsLimit) {
        tt.dist.resize(tt.nv * tt.nv);
        for (std::size_t s = 0; s < tt.nv; ++s) {
          auto d = distances_from(tt, static_cast<int>(s));
          std::copy(d.begin(), d.end(), tt.dist.begin() + static_cast<long>(s * tt.nv));
        }
      }
    }
  }

  std::vector<int> DehnSolver::distances_from(Table const& t, int s) const {
    std::vector<int> d(t.nv, -1);
    std::deque<int>  q{s};
    d[static_cast<std::size_t>(s)] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [w, x] : t.adj[static_cast<std::size_t>(v)]) {
        if (d[static_cast<std::size_t>(w)] < 0) {
          d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
          q.push_back(w);
        }
      }
    }
    return d;
  }

  Word DehnSolver::shortest_word(Table const& t, int s, int target) const {
    std::vector<int>    parent(t.nv, -1);
    std::vector<Letter> via(t.nv);
    std::vector<bool>   seen(t.nv, false);
    std::deque<int>     q{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!q.empty() && !seen[static_cast<std::size_t>(target)]) {
      int v = q.front();
      q.pop_front();
      for (auto [w, x] : t.adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)]   = true;
          parent[static_cast<std::size_t>(w)] = v;
          via[static_cast<std::size_t>(w)]    = x;
          q.push_back(w);
        }
      }
    }
    Word out;
    for (int v = target; v != s; v = parent[static_cast<std::size_t>(v)]) {
      out.push_back(via[static_cast<std::size_t>(v)]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::optional<ReductionStep> DehnSolver::find_replacement(Word const& w) const {
    std::size_t n = w.size();
    for (auto const& t : _tables) {
      std::map<int, std::vector<int>> lazy;  // only for boundaries without a table
      auto dist = [&](int s, int v) {
        if (!t.dist.empty()) {
          return t.dist[static_cast<std::size_t>(s) * t.nv + static_cast<std::size_t>(v)];
        }
        auto it = lazy.find(s);
        if (it == lazy.end()) {
          it = lazy.emplace(s, distances_from(t, s)).first;
        }
        return it->second[static_cast<std::size_t>(v)];
      };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 0; s < t.nv; ++s) {
          int v = static_cast<int>(s);
          for (std::size_t len = 1; i + len <= n; ++len) {
            v = t.next[static_cast<std::size_t>(v) * _codes
                       + static_cast<std::size_t>(w[i + len - 1].code())];
            if (v < 0) {
              break;
            }
            int d = dist(static_cast<int>(s), v);
            if (d >= 0 && static_cast<std::size_t>(d) < len) {
              ReductionStep st;
              st.position    = i;
              st.length      = len;
              st.relator     = t.name;
              st.start       = t.vertex[s];
              st.replacement = shortest_word(t, static_cast<int>(s), v);
              st.before      = n;
              return st;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  ReductionResult DehnSolver::reduce(Word const& w) const {
    ReductionResult res;
    res.word = free_reduce(w);
    while (auto st = find_replacement(res.word)) {
      Word next(res.word.begin(), res.word.begin() + static_cast<long>(st->position));
      next.insert(next.end(), st->replacement.begin(), st->replacement.end());
      next.insert(next.end(), res.word.begin() + static_cast<long>(st->position + st->length),
                  res.word.end());
      res.word  = free_reduce(next);
      st->after = res.word.size();
      res.trace.push_back(std::move(*st));
    }
    return res;
  }

  bool DehnSolver::trivial(Word const& w) const {
    return reduce(w).word.empty();
  }

  ReductionResult dehn_reduce(MeasuredPresentation const& p, Word const& w, bool force) {
    if (!p.alphabet().valid(w)) {
      throw Error("word uses letters outside the alphabet");
    }
    require_gate(p, force);
    return DehnSolver(p).reduce(w);
  }

  bool word_problem(MeasuredPresentation const& p, Word const& w, bool force) {
    return dehn_reduce(p, w, force).word.empty();
  }

  ReductionFlags reduction_status(MeasuredPresentation const& p, Word const& w, Rational mu) {
    if (!p.alphabet().valid(w)) {
      throw Error("word uses letters outside the alphabet");
    }
    ReductionFlags f;
    f.freely_reduced = is_freely_reduced(w);
    f.dehn_reduced   = !DehnSolver(p).find_replacement(w).has_value();
    for (auto const& r : p.relators()) {
      auto const& c = r.boundary();
      CoverGraph  cover(c, r.cocycle());
      // Readability and d_R are invariant under automorphisms.
      for (auto s : r.orbit_representatives()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          std::vector<Lift> lifts;
          Lift              cur{s, 0};
          for (std::size_t j = i; j < w.size(); ++j) {
            auto st = c.step(cur.vertex, w[j]);
            if (!st) {
              break;
            }
            cur.level += (st->forward ? 1 : -1) * r.cocycle()[static_cast<std::size_t>(st->edge)];
            cur.vertex = c.endpoint(cur.vertex, *st);
            lifts.push_back(cur);
          }
          if (lifts.empty()) {
            continue;
          }
          auto ball = cover.ball(Lift{s, 0}, static_cast<std::int64_t>(lifts.size()));
          for (auto const& x : lifts) {
            Rational d = Rational(ball.at(cover.key(x))) / r.length();
            if (d > f.max_measure) {
              f.max_measure = d;
              f.max_relator = r.name();
            }
          }
        }
      }
    }
    f.mu_free = f.freely_reduced && f.max_measure <= mu;
    return f;
  }

  CayleyBall cayley_ball(MeasuredPresentation const& p, std::size_t radius, std::size_t cap,
                         bool force) {
    require_gate(p, force);
    DehnSolver solver(p);
    CayleyBall ball;
    ball.elements.push_back({});
    std::map<Word, std::size_t> by_reduced{{Word{}, 0}};
    auto locate = [&](Word const& v) -> std::optional<std::size_t> {
      auto rv = solver.reduce(v).word;
      if (auto it = by_reduced.find(rv); it != by_reduced.end()) {
        return it->second;
      }
      for (std::size_t k = 0; k < ball.elements.size(); ++k) {
        if (solver.trivial(concat(v, inverse(ball.elements[k])))) {
          return k;
        }
      }
      return std::nullopt;
    };
    std::vector<std::size_t> layer{0};
    std::size_t const        ngen = p.alphabet().size();
    for (std::size_t depth = 0; depth < radius && !layer.empty(); ++depth) {
      std::vector<std::size_t> next;
      for (auto u : layer) {
        for (int code = 0; code < static_cast<int>(2 * ngen); ++code) {
          Word v = ball.elements[u];
          v.push_back(Letter::from_code(code));
          v = free_reduce(v);
          if (locate(v)) {
            continue;
          }
          if (ball.elements.size() >= cap) {
            ball.truncated = true;
            continue;
          }
          by_reduced.emplace(solver.reduce(v).word, ball.elements.size());
          next.push_back(ball.elements.size());
          ball.elements.push_back(v);
        }
      }
      layer = std::move(next);
    }
    for (std::size_t u = 0; u < ball.elements.size(); ++u) {
      for (int g = 0; g < static_cast<int>(ngen); ++g) {
        Word v = ball.elements[u];
        v.push_back(Letter{g, false});
        if (auto k = locate(free_reduce(v))) {
          ball.edges.push_back({u, *k, g});
        }
      }
    }
    return ball;
  }

}  // namespace gsc
