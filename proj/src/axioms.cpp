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

#include "gsc/cover.hpp"
#include "gsc/metric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>
#include <unordered_map>

namespace gsc {

  char const* to_string(AxiomStatus s) noexcept {
    switch (s) {
      case AxiomStatus::Pass: return "pass";
      case AxiomStatus::PassBounded: return "pass_bounded";
      case AxiomStatus::Fail: return "fail";
      case AxiomStatus::Unverified: return "unverified";
    }
    return "unverified";
  }

  bool AxiomReport::any_failure() const noexcept {
    return std::any_of(results.begin(), results.end(),
                       [](auto const& r) { return r.status == AxiomStatus::Fail; });
  }

  namespace {

    // Deterministic transition table of a boundary 1-skeleton.
    struct Reader {
      GeneralRelator const*     r = nullptr;
      std::vector<CellId>       vertex;
      std::vector<int>          dense;
      std::vector<int>          next;  // per vertex and letter code
      std::vector<std::int64_t> dlevel;
      std::size_t               codes = 0;
      LabeledComplex            cone;

      int step(int v, int code) const {
        return next[static_cast<std::size_t>(v) * codes + static_cast<std::size_t>(code)];
      }
      std::int64_t rise(int v, int code) const {
        return dlevel[static_cast<std::size_t>(v) * codes + static_cast<std::size_t>(code)];
      }
    };

    Reader make_reader(GeneralRelator const& r, std::size_t codes) {
      Reader      rd;
      auto const& c = r.boundary();
      rd.r          = &r;
      rd.codes      = codes;
      rd.vertex     = c.vertices();
      rd.dense.assign(c.size(), -1);
      for (std::size_t i = 0; i < rd.vertex.size(); ++i) {
        rd.dense[static_cast<std::size_t>(rd.vertex[i])] = static_cast<int>(i);
      }
      rd.next.assign(rd.vertex.size() * codes, -1);
      rd.dlevel.assign(rd.vertex.size() * codes, 0);
      for (std::size_t i = 0; i < rd.vertex.size(); ++i) {
        for (std::size_t code = 0; code < codes; ++code) {
          auto st = c.step(rd.vertex[i], Letter::from_code(static_cast<int>(code)));
          if (st) {
            rd.next[i * codes + code] = rd.dense[static_cast<std::size_t>(c.endpoint(rd.vertex[i], *st))];
            rd.dlevel[i * codes + code] =
                (st->forward ? 1 : -1) * r.cocycle()[static_cast<std::size_t>(st->edge)];
          }
        }
      }
      rd.cone = r.cone();
      return rd;
    }

    struct Overlap {
      std::int64_t best = 0;  // largest cover distance of the tracked side
      Word         word;
      bool         complete = true;
    };

    // Breadth-first traversal of common readings from (a, b), tracking the
    // lift on side A (or B when track_b). Distances come from a ball around
    // the starting lift.
    Overlap scan_overlap(Reader const& A, int a0, Reader const& B, int b0, bool track_b,
                         CoverGraph const&                                     cover,
                         std::unordered_map<std::int64_t, std::int64_t> const& ball,
                         std::size_t                                           cap) {
      struct State {
        int          a, b;
        std::int64_t level;
        std::size_t  depth;
        long         parent;
        int          code;
      };
      Overlap                                                    out;
      std::vector<State>                                         states{{a0, b0, 0, 0, -1, -1}};
      std::map<std::tuple<int, int, std::int64_t>, std::size_t> seen{{{a0, b0, 0}, 0}};
      long                                                       best_state = 0;
      for (std::size_t k = 0; k < states.size(); ++k) {
        State s = states[k];
        for (int code = 0; code < static_cast<int>(A.codes); ++code) {
          int na = A.step(s.a, code);
          int nb = B.step(s.b, code);
          if (na < 0 || nb < 0) {
            continue;
          }
          std::int64_t lv  = s.level + (track_b ? B.rise(s.b, code) : A.rise(s.a, code));
          auto         key = std::make_tuple(na, nb, lv);
          if (seen.count(key)) {
            continue;
          }
          if (s.depth == cap) {
            out.complete = false;
            continue;
          }
          seen.emplace(key, states.size());
          states.push_back({na, nb, lv, s.depth + 1, static_cast<long>(k), code});
          CellId v = track_b ? B.vertex[static_cast<std::size_t>(nb)]
                             : A.vertex[static_cast<std::size_t>(na)];
          auto it = ball.find(cover.key(Lift{v, lv}));
          std::int64_t d = it == ball.end() ? static_cast<std::int64_t>(s.depth + 1) : it->second;
          if (d > out.best) {
            out.best   = d;
            best_state = static_cast<long>(states.size() - 1);
          }
        }
      }
      for (long k = best_state; k > 0; k = states[static_cast<std::size_t>(k)].parent) {
        out.word.push_back(Letter::from_code(states[static_cast<std::size_t>(k)].code));
      }
      std::reverse(out.word.begin(), out.word.end());
      return out;
    }

    bool has_common_letter(Reader const& A, int a, Reader const& B, int b) {
      for (int code = 0; code < static_cast<int>(A.codes); ++code) {
        if (A.step(a, code) >= 0 && B.step(b, code) >= 0) {
          return true;
        }
      }
      return false;
    }

    struct OverlapMeasure {
      Rational                    value{0};
      bool                        complete = true;
      std::optional<AxiomWitness> witness;
      std::vector<std::string>    warnings;
    };

    std::size_t default_cap(MeasuredPresentation const& p, AxiomBounds const& b) {
      if (b.path_cap > 0) {
        return b.path_cap;
      }
      std::size_t m = 1;
      for (auto const& r : p.relators()) {
        m = std::max(m, r.boundary().num_edges());
      }
      return 2 * m;
    }

    // Axiom 1 (track the first relator, skip start pairs that extend to a
    // functor) and Axiom 2 (track the second, lower or equal rank first).
    std::pair<OverlapMeasure, OverlapMeasure> measure_overlaps(MeasuredPresentation const& p,
                                                               std::size_t                 cap) {
      std::size_t         codes = 2 * p.alphabet().size();
      std::vector<Reader> rd;
      for (auto const& r : p.relators()) {
        rd.push_back(make_reader(r, codes));
      }
      std::map<std::tuple<std::size_t, std::size_t, int, int>, bool> functor_cache;
      auto functor = [&](std::size_t i, std::size_t j, int y, int z) {
        auto key = std::make_tuple(i, j, y, z);
        auto it  = functor_cache.find(key);
        if (it == functor_cache.end()) {
          bool ok = extend_labeled_map(rd[i].cone, rd[i].vertex[static_cast<std::size_t>(y)],
                                       rd[j].cone, rd[j].vertex[static_cast<std::size_t>(z)])
                        .has_value();
          it = functor_cache.emplace(key, ok).first;
        }
        return it->second;
      };
      auto witness = [&](std::size_t i, int y, std::size_t j, int z, Word const& u,
                         Rational value, std::string note) {
        AxiomWitness w;
        w.relators = {rd[i].r->name(), rd[j].r->name()};
        w.paths    = {*trace_word(rd[i].r->boundary(), rd[i].vertex[static_cast<std::size_t>(y)], u),
                      *trace_word(rd[j].r->boundary(), rd[j].vertex[static_cast<std::size_t>(z)], u)};
        w.values   = {value};
        w.note     = std::move(note);
        return w;
      };

      OverlapMeasure alpha, beta;
      std::size_t    n = rd.size();
      for (std::size_t i = 0; i < n; ++i) {
        GeneralRelator const& R = *rd[i].r;
        CoverGraph            cover(R.boundary(), R.cocycle());
        for (auto yc : R.orbit_representatives()) {
          int  y    = rd[i].dense[static_cast<std::size_t>(yc)];
          auto ball = cover.ball(Lift{yc, 0}, static_cast<std::int64_t>(cap));
          for (std::size_t j = 0; j < n; ++j) {
            for (int z = 0; z < static_cast<int>(rd[j].vertex.size()); ++z) {
              if (!has_common_letter(rd[i], y, rd[j], z) || functor(i, j, y, z)) {
                continue;
              }
              auto     ov = scan_overlap(rd[i], y, rd[j], z, false, cover, ball, cap);
              Rational d  = Rational(ov.best) / R.length();
              alpha.complete = alpha.complete && ov.complete;
              if (d > alpha.value || (!alpha.witness && ov.best > 0)) {
                alpha.value   = std::max(alpha.value, d);
                alpha.witness = witness(i, y, j, z, ov.word, d,
                                        "common reading with no functor " + R.name() + " -> "
                                            + rd[j].r->name());
              }
            }
          }
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        GeneralRelator const& S = *rd[j].r;
        CoverGraph            cover(S.boundary(), S.cocycle());
        for (auto zc : S.orbit_representatives()) {
          int  z    = rd[j].dense[static_cast<std::size_t>(zc)];
          auto ball = cover.ball(Lift{zc, 0}, static_cast<std::int64_t>(cap));
          for (std::size_t i = 0; i < n; ++i) {
            int ri = rd[i].r->rank(), rj = S.rank();
            if (ri > rj) {
              continue;
            }
            for (int y = 0; y < static_cast<int>(rd[i].vertex.size()); ++y) {
              if (!has_common_letter(rd[i], y, rd[j], z)) {
                continue;
              }
              if (ri == rj && functor(i, j, y, z)) {
                continue;
              }
              auto     ov = scan_overlap(rd[i], y, rd[j], z, true, cover, ball, cap);
              Rational d  = Rational(ov.best) / S.length();
              beta.complete = beta.complete && ov.complete;
              if (d > beta.value || (!beta.witness && ov.best > 0)) {
                beta.value   = std::max(beta.value, d);
                beta.witness = witness(i, y, j, z, ov.word, d,
                                       ri < rj ? "reading shared with a lower-rank relator"
                                               : "equal-rank reading with no functor");
              }
            }
          }
        }
      }
      return {alpha, beta};
    }

    // Distance of every vertex to the 2-core of the 1-skeleton.
    std::int64_t max_distance_to_core(LabeledComplex const& c) {
      std::vector<int> deg(c.size(), 0);
      for (auto e : c.edges()) {
        ++deg[static_cast<std::size_t>(c.from(e))];
        ++deg[static_cast<std::size_t>(c.to(e))];
      }
      std::vector<bool> gone(c.size(), false);
      std::deque<CellId> q;
      for (auto v : c.vertices()) {
        if (deg[static_cast<std::size_t>(v)] <= 1) {
          q.push_back(v);
        }
      }
      while (!q.empty()) {
        CellId v = q.front();
        q.pop_front();
        if (gone[static_cast<std::size_t>(v)]) {
          continue;
        }
        gone[static_cast<std::size_t>(v)] = true;
        for (auto e : c.incident(v)) {
          CellId w = c.from(e) == v ? c.to(e) : c.from(e);
          if (!gone[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] <= 1) {
            q.push_back(w);
          }
        }
      }
      std::vector<std::int64_t> dist(c.size(), -1);
      for (auto v : c.vertices()) {
        if (!gone[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = 0;
          q.push_back(v);
        }
      }
      while (!q.empty()) {
        CellId v = q.front();
        q.pop_front();
        for (auto e : c.incident(v)) {
          CellId w = c.from(e) == v ? c.to(e) : c.from(e);
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            q.push_back(w);
          }
        }
      }
      std::int64_t m = 0;
      for (auto v : c.vertices()) {
        m = std::max(m, dist[static_cast<std::size_t>(v)]);
      }
      return m;
    }

    struct SelfOverlapSearch {
      std::size_t                 patterns   = 0;
      std::size_t                 unresolved = 0;
      bool                        truncated  = false;
      std::optional<AxiomWitness> witness;
    };

    // Representatives W = X U Y U^-1 with d_R(U) >= alpha; for each, look for
    // V with X V Y V^-1 a closed winding-zero walk from W's start.
    void search_self_overlaps(GeneralRelator const& R, Rational alpha, AxiomBounds const& b,
                              std::size_t codes, SelfOverlapSearch& out) {
      auto const& c   = R.boundary();
      Reader      rd  = make_reader(R, codes);
      CoverGraph  cov(c, R.cocycle());
      std::size_t max_len = R.shortest_representative().length() + b.extra_rep_length;
      std::int64_t need   = std::max<std::int64_t>(ceil(alpha * R.length()), 1);

      auto walk_end = [&](int v, std::int64_t& lv, Word const& w, std::size_t from,
                          std::size_t to) {
        for (std::size_t k = from; k < to && v >= 0; ++k) {
          lv += rd.rise(v, w[k].code());
          v = rd.step(v, w[k].code());
        }
        return v;
      };

      auto find_v = [&](Word const& w, std::vector<int> const& pos,
                        std::vector<std::int64_t> const& lev, std::size_t i, std::size_t l,
                        std::size_t j) {
        int          p0  = pos[0];
        int          pi  = pos[i];
        std::int64_t li  = lev[i];
        Word         v;
        auto         try_v = [&](int q, std::int64_t lq) {
          std::int64_t lr = lq;
          int          r  = walk_end(q, lr, w, i + l, j);
          if (r < 0) {
            return false;
          }
          Word         vi = inverse(v);
          std::int64_t lt = lr;
          int          t  = walk_end(r, lt, vi, 0, vi.size());
          return t == p0 && lt == 0;
        };
        auto rec = [&](auto&& self, int q, std::int64_t lq) -> bool {
          if (try_v(q, lq)) {
            return true;
          }
          if (v.size() == b.v_cap) {
            return false;
          }
          for (int code = 0; code < static_cast<int>(codes); ++code) {
            int nq = rd.step(q, code);
            if (nq < 0) {
              continue;
            }
            v.push_back(Letter::from_code(code));
            if (self(self, nq, lq + rd.rise(q, code))) {
              return true;
            }
            v.pop_back();
          }
          return false;
        };
        return rec(rec, pi, li);
      };

      Word                      w;
      std::vector<int>          pos;
      std::vector<std::int64_t> lev;
      auto on_rep = [&]() {
        std::size_t L = w.size();
        for (std::size_t i = 0; i < L; ++i) {
          for (std::size_t l = 1; 2 * l <= L - i; ++l) {
            for (std::size_t j = i + l; j + l <= L; ++j) {
              bool match = true;
              for (std::size_t k = 0; k < l && match; ++k) {
                match = w[j + k] == w[i + l - 1 - k].inv();
              }
              if (!match) {
                continue;
              }
              // Both instances must advance in the winding direction of W.
              std::int64_t sw = lev[L], d1 = lev[i + l] - lev[i], d2 = lev[j + l] - lev[j];
              if (d1 == 0 || d2 == 0 || (d1 > 0) != (sw > 0) || (d2 > 0) != (sw > 0)) {
                continue;
              }
              auto d = cov.distance(Lift{rd.vertex[static_cast<std::size_t>(pos[i])], lev[i]},
                                    Lift{rd.vertex[static_cast<std::size_t>(pos[i + l])], lev[i + l]},
                                    static_cast<std::int64_t>(l));
              if (!d || *d < need) {
                continue;
              }
              if (out.patterns >= b.max_patterns) {
                out.truncated = true;
                return;
              }
              ++out.patterns;
              if (!find_v(w, pos, lev, i, l, j)) {
                ++out.unresolved;
                if (!out.witness) {
                  AxiomWitness wt;
                  wt.relators = {R.name()};
                  CellId s    = rd.vertex[static_cast<std::size_t>(pos[0])];
                  wt.paths    = {*trace_word(c, s, w),
                                 *trace_word(c, rd.vertex[static_cast<std::size_t>(pos[i])],
                                             Word(w.begin() + static_cast<long>(i),
                                                  w.begin() + static_cast<long>(i + l)))};
                  wt.values   = {Rational(*d) / R.length()};
                  wt.note     = "no V of length <= " + std::to_string(b.v_cap)
                            + " found for the self-overlap";
                  out.witness = wt;
                }
              }
            }
          }
        }
      };
      auto rec = [&](auto&& self) -> void {
        if (out.truncated) {
          return;
        }
        int v = pos.back();
        if (!w.empty() && v == pos[0] && (lev.back() == 1 || lev.back() == -1)) {
          on_rep();
        }
        if (w.size() == max_len) {
          return;
        }
        for (int code = 0; code < static_cast<int>(codes); ++code) {
          int nv = rd.step(v, code);
          if (nv < 0) {
            continue;
          }
          w.push_back(Letter::from_code(code));
          pos.push_back(nv);
          lev.push_back(lev.back() + rd.rise(v, code));
          self(self);
          w.pop_back();
          pos.pop_back();
          lev.pop_back();
        }
      };
      for (int s = 0; s < static_cast<int>(rd.vertex.size()); ++s) {
        pos = {s};
        lev = {0};
        rec(rec);
      }
    }

  }  // namespace

  AxiomResult check_constant_constraints(Constants const& k) {
    AxiomResult res;
    res.axiom = 7;
    std::vector<std::string> bad;
    if (!(k.beta <= k.alpha)) bad.push_back("beta <= alpha");
    if (!(k.gamma < k.alpha)) bad.push_back("gamma < alpha");
    if (!(k.delta < k.alpha)) bad.push_back("delta < alpha");
    if (!(k.epsilon < k.alpha)) bad.push_back("epsilon < alpha");
    if (!(2 * k.gamma + k.delta <= k.alpha)) bad.push_back("2 gamma + delta <= alpha");
    if (!(k.alpha <= Rational(1, 6))) bad.push_back("alpha <= 1/6");
    res.measured = 2 * k.gamma + k.delta;
    if (bad.empty()) {
      res.status = AxiomStatus::Pass;
      res.detail = "all constant inequalities hold";
    } else {
      res.status = AxiomStatus::Fail;
      res.detail = "violated:";
      for (auto const& s : bad) {
        res.detail += " " + s + ";";
      }
      res.detail.pop_back();
    }
    return res;
  }

  MeasuredConstants measure_constants(MeasuredPresentation const& p, AxiomBounds const& bounds) {
    MeasuredConstants m;
    auto [a, b]      = measure_overlaps(p, default_cap(p, bounds));
    m.alpha          = a.value;
    m.beta           = b.value;
    m.alpha_complete = a.complete;
    m.beta_complete  = b.complete;
    for (auto const& r : p.relators()) {
      m.gamma   = std::max(m.gamma, Rational(r.width()) / r.length());
      m.epsilon = std::max(m.epsilon, Rational(max_distance_to_core(r.boundary())) / r.length());
    }
    return m;
  }

  AxiomReport verify_axioms(MeasuredPresentation const& p, AxiomBounds const& bounds) {
    AxiomReport rep;
    auto const& k   = p.constants();
    std::size_t cap = default_cap(p, bounds);
    for (int i = 0; i < 7; ++i) {
      rep.results[static_cast<std::size_t>(i)].axiom = i + 1;
    }
    if (!k.declared) {
      rep.warnings.push_back("no constants declared; statuses are unverified, values are measured");
    }
    auto decide = [&](AxiomResult& r, bool ok, bool complete) {
      if (!k.declared) {
        r.status = AxiomStatus::Unverified;
      } else if (!ok) {
        r.status = AxiomStatus::Fail;
      } else {
        r.status = complete ? AxiomStatus::Pass : AxiomStatus::Unverified;
      }
    };

    auto [a, b]  = measure_overlaps(p, cap);
    auto& r1     = rep.results[0];
    r1.measured  = a.value;
    r1.witness   = a.witness;
    decide(r1, a.value < k.alpha, a.complete);
    r1.detail = "max unsubsumed overlap " + to_string(a.value)
              + (a.complete ? "" : " (path cap " + std::to_string(cap) + " reached)");

    auto& r2    = rep.results[1];
    r2.measured = b.value;
    r2.witness  = b.witness;
    decide(r2, b.value < k.beta, b.complete);
    r2.detail = "max lower-or-equal-rank overlap " + to_string(b.value)
              + (b.complete ? "" : " (path cap " + std::to_string(cap) + " reached)");

    auto& r3 = rep.results[2];
    Rational g{0};
    bool     ok3 = true;
    for (auto const& r : p.relators()) {
      Rational ratio = Rational(r.width()) / r.length();
      bool     ok    = Rational(r.width()) <= k.gamma * r.length();
      if (ratio > g || (!ok && ok3)) {
        g = std::max(g, ratio);
        if (!ok || !r3.witness) {
          AxiomWitness w;
          w.relators = {r.name()};
          w.values   = {Rational(r.width()), r.length(), ratio};
          w.note     = "width / length";
          r3.witness = w;
        }
      }
      ok3 = ok3 && ok;
    }
    r3.measured = g;
    decide(r3, ok3, true);
    r3.detail = "max width/length " + to_string(g);

    auto& r4    = rep.results[3];
    r4.measured = Rational(0);
    decide(r4, Rational(0) <= k.delta, true);
    r4.detail = "graph metric coincides with |U|_R, deviation 0";

    auto& r5 = rep.results[4];
    Rational e{0};
    for (auto const& r : p.relators()) {
      Rational v = Rational(max_distance_to_core(r.boundary())) / r.length();
      if (v > e || !r5.witness) {
        e = std::max(e, v);
        AxiomWitness w;
        w.relators = {r.name()};
        w.values   = {v};
        w.note     = "distance to the essential support over length";
        r5.witness = w;
      }
    }
    r5.measured = e;
    decide(r5, e <= k.epsilon, true);
    r5.detail = "max distance to essential support " + to_string(e);

    auto&             r6 = rep.results[5];
    SelfOverlapSearch so;
    for (auto const& r : p.relators()) {
      search_self_overlaps(r, k.declared ? k.alpha : Rational(0), bounds,
                           2 * p.alphabet().size(), so);
    }
    r6.witness = so.witness;
    r6.detail  = std::to_string(so.patterns) + " self-overlap patterns, "
              + std::to_string(so.unresolved) + " without V up to length "
              + std::to_string(bounds.v_cap) + (so.truncated ? ", pattern cap reached" : "");
    r6.status = (!k.declared || so.unresolved > 0 || so.truncated) ? AxiomStatus::Unverified
                                                                   : AxiomStatus::PassBounded;

    rep.results[6] = check_constant_constraints(k);
    if (!k.declared) {
      rep.results[6].status = AxiomStatus::Unverified;
    }

    rep.measured.alpha          = a.value;
    rep.measured.beta           = b.value;
    rep.measured.gamma          = g;
    rep.measured.delta          = Rational(0);
    rep.measured.epsilon        = e;
    rep.measured.alpha_complete = a.complete;
    rep.measured.beta_complete  = b.complete;
    return rep;
  }

  std::vector<std::vector<CellId>> find_functors(GeneralRelator const& r,
                                                 GeneralRelator const& s,
                                                 PathInComplex const&  u_in_r,
                                                 PathInComplex const&  u_in_s) {
    if (!is_valid_path(r.boundary(), u_in_r) || !is_valid_path(s.boundary(), u_in_s)) {
      throw Error("find_functors: path does not lie in its boundary");
    }
    if (r.boundary().label(u_in_r) != s.boundary().label(u_in_s)) {
      throw Error("find_functors: paths spell different words");
    }
    auto m = extend_labeled_map(r.cone(), u_in_r.start, s.cone(), u_in_s.start);
    if (!m) {
      return {};
    }
    for (std::size_t k = 0; k < u_in_r.steps.size(); ++k) {
      if ((*m)[static_cast<std::size_t>(u_in_r.steps[k].edge)] != u_in_s.steps[k].edge) {
        return {};
      }
    }
    return {*m};
  }

  SolveGate solve_precondition(MeasuredPresentation const& p, AxiomBounds const& bounds) {
    auto const& k = p.constants();
    if (!k.declared) {
      return {false, "no constants declared"};
    }
    if (!(3 * k.alpha + 2 * k.gamma + k.delta <= Rational(1, 2))) {
      return {false, "3 alpha + 2 gamma + delta exceeds 1/2"};
    }
    auto rep = verify_axioms(p, bounds);
    for (auto const& r : rep.results) {
      if (r.status == AxiomStatus::Fail) {
        return {false, "axiom " + std::to_string(r.axiom) + " fails: " + r.detail};
      }
    }
    return {true, {}};
  }

}  // namespace gsc
