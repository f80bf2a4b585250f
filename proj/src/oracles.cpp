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

#include "gsc/oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace gsc::oracle {

  namespace {
    Matrix2 mul(Matrix2 const& x, Matrix2 const& y) {
      return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
              x.c * y.b + x.d * y.d};
    }

    Matrix2 generator(Letter x) {
      if (x.gen == 0) {
        return x.inverse ? Matrix2{0, 1, -1, 0} : Matrix2{0, -1, 1, 0};
      }
      if (x.gen == 1) {
        return x.inverse ? Matrix2{1, -1, 0, 1} : Matrix2{1, 1, 0, 1};
      }
      throw Error("psl2z: only generators S and T exist");
    }
  }  // namespace

  Matrix2 psl2z_matrix(Word const& w) {
    Matrix2 m;
    for (auto x : w) {
      m = mul(m, generator(x));
    }
    return m;
  }

  bool psl2z_reduce(Word const& w) {
    auto m = psl2z_matrix(w);
    return m.b == 0 && m.c == 0 && ((m.a == 1 && m.d == 1) || (m.a == -1 && m.d == -1));
  }

  std::string psl2z_key(Word const& w) {
    auto m = psl2z_matrix(w);
    bool flip = m.a < 0 || (m.a == 0 && m.b < 0);
    if (flip) {
      m = {-m.a, -m.b, -m.c, -m.d};
    }
    return m.a.str() + " " + m.b.str() + " " + m.c.str() + " " + m.d.str();
  }

  DihedralElement dihedral_multiply(DihedralElement x, DihedralElement y, std::int64_t n) {
    // Apply x, then y.
    DihedralElement z;
    z.reflection = x.reflection != y.reflection;
    std::int64_t r = (y.reflection ? -x.rotation : x.rotation) + y.rotation;
    z.rotation     = ((r % n) + n) % n;
    return z;
  }

  DihedralElement dihedral_normal_form(Word const& w, std::int64_t n) {
    if (n < 1) {
      throw Error("dihedral_normal_form: n must be positive");
    }
    // Pairs (reflection, rotation) form a group of order 2n for every n >= 1.
    DihedralElement e;
    for (auto x : w) {
      if (x.gen > 1) {
        throw Error("dihedral_normal_form: only generators a and b exist");
      }
      e = dihedral_multiply(e, DihedralElement{true, x.gen == 0 ? 0 : 1 % n}, n);
    }
    return e;
  }

  namespace {
    class CosetTable {
     public:
      CosetTable(std::size_t cols, std::size_t cap) : _cols(cols), _cap(cap) {
        _table.emplace_back(cols, -1);
        _parent.push_back(0);
      }

      bool overflow() const noexcept {
        return _overflow;
      }
      std::size_t size() const noexcept {
        return _table.size();
      }
      bool alive(int c) const {
        return _parent[static_cast<std::size_t>(c)] == c;
      }
      int& at(int c, int x) {
        return _table[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
      }

      void define(int c, int x) {
        if (_table.size() >= _cap) {
          _overflow = true;
          return;
        }
        int d = static_cast<int>(_table.size());
        _table.emplace_back(_cols, -1);
        _parent.push_back(d);
        at(c, x)     = d;
        at(d, x ^ 1) = c;
      }

      void scan_and_fill(int c, std::vector<int> const& w) {
        int  f = c, b = c;
        long i = 0, j = static_cast<long>(w.size()) - 1;
        for (;;) {
          while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) {
            f = at(f, w[static_cast<std::size_t>(i)]);
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
            b = at(b, w[static_cast<std::size_t>(j)] ^ 1);
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            at(f, w[static_cast<std::size_t>(i)])     = b;
            at(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
            return;
          }
          define(f, w[static_cast<std::size_t>(i)]);
          if (_overflow) {
            return;
          }
        }
      }

      std::size_t live() const {
        std::size_t n = 0;
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          n += _parent[c] == static_cast<int>(c) ? 1 : 0;
        }
        return n;
      }

     private:
      int rep(int c) {
        int r = c;
        while (_parent[static_cast<std::size_t>(r)] != r) {
          r = _parent[static_cast<std::size_t>(r)];
        }
        while (_parent[static_cast<std::size_t>(c)] != r) {
          int n = _parent[static_cast<std::size_t>(c)];
          _parent[static_cast<std::size_t>(c)] = r;
          c = n;
        }
        return r;
      }

      void merge(int k, int l, std::vector<int>& q) {
        k = rep(k);
        l = rep(l);
        if (k == l) {
          return;
        }
        if (l < k) {
          std::swap(k, l);
        }
        _parent[static_cast<std::size_t>(l)] = k;
        q.push_back(l);
      }

      void coincidence(int a, int b) {
        std::vector<int> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
          int g = q[i];
          for (int x = 0; x < static_cast<int>(_cols); ++x) {
            int d = at(g, x);
            if (d < 0) {
              continue;
            }
            at(d, x ^ 1) = -1;
            int mu = rep(g), nu = rep(d);
            if (at(mu, x) >= 0) {
              merge(nu, at(mu, x), q);
            } else if (at(nu, x ^ 1) >= 0) {
              merge(mu, at(nu, x ^ 1), q);
            } else {
              at(mu, x)     = nu;
              at(nu, x ^ 1) = mu;
            }
          }
        }
      }

      std::size_t                   _cols;
      std::size_t                   _cap;
      bool                          _overflow = false;
      std::vector<std::vector<int>> _table;
      std::vector<int>              _parent;
    };
  }  // namespace

  std::optional<std::size_t> todd_coxeter(std::size_t ngens, std::vector<Word> const& relators,
                                          std::size_t cap) {
    std::vector<std::vector<int>> rels;
    for (auto const& r : relators) {
      std::vector<int> w;
      for (auto x : free_reduce(r)) {
        if (static_cast<std::size_t>(x.gen) >= ngens) {
          throw Error("todd_coxeter: relator uses an unknown generator");
        }
        w.push_back(x.code());
      }
      if (!w.empty()) {
        rels.push_back(std::move(w));
      }
    }
    CosetTable t(2 * ngens, cap);
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
      for (auto const& w : rels) {
        if (!t.alive(c)) {
          break;
        }
        t.scan_and_fill(c, w);
        if (t.overflow()) {
          return std::nullopt;
        }
      }
      for (int x = 0; x < static_cast<int>(2 * ngens) && t.alive(c); ++x) {
        if (t.at(c, x) < 0) {
          t.define(c, x);
          if (t.overflow()) {
            return std::nullopt;
          }
        }
      }
    }
    return t.live();
  }

  namespace {
    struct Adjacent {
      CellId       to;
      std::int64_t rise;
    };

    std::vector<std::vector<Adjacent>> adjacency(LabeledComplex const& c, Cocycle const& phi) {
      std::vector<std::vector<Adjacent>> adj(c.size());
      for (CellId e = 0; e < static_cast<CellId>(c.size()); ++e) {
        if (c.cell(e).height != 1) {
          continue;
        }
        auto u = c.cell(e).covers[0], v = c.cell(e).covers[1];
        auto p = phi[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(u)].push_back({v, p});
        adj[static_cast<std::size_t>(v)].push_back({u, -p});
      }
      return adj;
    }
  }  // namespace

  BruteForce brute_force_suite(LabeledComplex const& c, Cocycle const& phi,
                               std::size_t max_vertices) {
    std::vector<CellId> verts;
    for (CellId x = 0; x < static_cast<CellId>(c.size()); ++x) {
      if (c.cell(x).height == 0) {
        verts.push_back(x);
      }
    }
    if (verts.size() > max_vertices) {
      throw Error("brute_force_suite: complex exceeds the exhaustion bound");
    }
    auto         adj = adjacency(c, phi);
    std::int64_t M   = 1;
    for (auto p : phi) {
      M = std::max<std::int64_t>(M, p < 0 ? -p : p);
    }
    auto const V = static_cast<std::int64_t>(verts.size());

    BruteForce out;
    // Length: every closed walk with at most V steps; simple cycles attain the
    // minimum ratio.
    bool have = false;
    for (auto s : verts) {
      auto rec = [&](auto&& self, CellId v, std::int64_t steps, std::int64_t lv) -> void {
        if (steps > 0 && v == s && lv != 0) {
          Rational q(steps, lv < 0 ? -lv : lv);
          if (!have || q < out.length) {
            out.length = q;
            have       = true;
          }
        }
        if (steps == V) {
          return;
        }
        for (auto const& a : adj[static_cast<std::size_t>(v)]) {
          self(self, a.to, steps + 1, lv + a.rise);
        }
      };
      rec(rec, s, 0, 0);
    }
    if (!have) {
      throw Error("brute_force_suite: no loop with nonzero winding");
    }

    // Explicit window of the cover: nodes (v, k), |k| <= K.
    std::int64_t const K     = 2 * (V + 2) * M + 2;
    std::int64_t const width = 2 * K + 1;
    auto node = [&](CellId v, std::int64_t k) {
      return static_cast<std::size_t>((k + K) * static_cast<std::int64_t>(c.size()) + v);
    };
    std::size_t const N = static_cast<std::size_t>(width) * c.size();
    auto bfs = [&](CellId v0, std::vector<char> const* blocked) {
      std::vector<std::int64_t> d(N, -1);
      std::deque<std::pair<CellId, std::int64_t>> q{{v0, 0}};
      d[node(v0, 0)] = 0;
      while (!q.empty()) {
        auto [v, k] = q.front();
        q.pop_front();
        for (auto const& a : adj[static_cast<std::size_t>(v)]) {
          std::int64_t nk = k + a.rise;
          if (nk < -K || nk > K) {
            continue;
          }
          auto id = node(a.to, nk);
          if (d[id] >= 0 || (blocked && (*blocked)[id])) {
            continue;
          }
          d[id] = d[node(v, k)] + 1;
          q.push_back({a.to, nk});
        }
      }
      return d;
    };

    std::size_t best_rep = std::numeric_limits<std::size_t>::max();
    for (auto s : verts) {
      auto d = bfs(s, nullptr);
      for (std::int64_t k : {std::int64_t{1}, std::int64_t{-1}}) {
        if (d[node(s, k)] > 0) {
          best_rep = std::min(best_rep, static_cast<std::size_t>(d[node(s, k)]));
        }
      }
    }
    out.shortest_representative = best_rep;

    // Width: smallest radius whose open ball always separates the ends.
    for (auto s : verts) {
      auto         dist = bfs(s, nullptr);
      std::int64_t r    = 0;
      for (;; ++r) {
        if (r > 2 * V + 2) {
          throw Error("brute_force_suite: no separating radius found");
        }
        std::vector<char> removed(N, 0);
        removed[node(s, 0)] = 1;
        for (std::size_t i = 0; i < N; ++i) {
          if (dist[i] >= 0 && dist[i] < r) {
            removed[i] = 1;
          }
        }
        // Flood from the lowest band; ends meet if the highest band is hit.
        std::vector<char> seen(N, 0);
        std::deque<std::pair<CellId, std::int64_t>> q;
        for (auto v : verts) {
          for (std::int64_t k = -K; k < -K + M; ++k) {
            if (!removed[node(v, k)]) {
              seen[node(v, k)] = 1;
              q.push_back({v, k});
            }
          }
        }
        bool met = false;
        while (!q.empty() && !met) {
          auto [v, k] = q.front();
          q.pop_front();
          if (k > K - M) {
            met = true;
            break;
          }
          for (auto const& a : adj[static_cast<std::size_t>(v)]) {
            std::int64_t nk = k + a.rise;
            if (nk < -K || nk > K) {
              continue;
            }
            auto id = node(a.to, nk);
            if (seen[id] || removed[id]) {
              continue;
            }
            seen[id] = 1;
            q.push_back({a.to, nk});
          }
        }
        if (!met) {
          break;
        }
      }
      out.width = std::max(out.width, r);
    }
    return out;
  }

  LabeledComplex random_circle_complex(std::mt19937_64& rng, RandomComplexOptions const& opt) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    for (;;) {
      LabeledComplex c;
      std::map<std::tuple<CellId, int, bool>, bool> used;  // (vertex, label, outgoing)
      auto try_edge = [&](CellId u, CellId v) -> CellId {
        for (int attempt = 0; attempt < 16; ++attempt) {
          int  g   = static_cast<int>(pick(0, static_cast<std::size_t>(opt.letters - 1)));
          bool rev = pick(0, 1) == 1;
          CellId a = rev ? v : u, b = rev ? u : v;
          if (used.count({a, g, true}) || used.count({b, g, false})) {
            continue;
          }
          used[{a, g, true}]  = true;
          used[{b, g, false}] = true;
          return c.add_edge(a, b, g);
        }
        return -1;
      };
      std::size_t         L = pick(opt.min_cycle, opt.max_cycle);
      std::vector<CellId> cyc;
      for (std::size_t i = 0; i < L; ++i) {
        cyc.push_back(c.add_vertex());
      }
      std::vector<CellId> ring;
      bool                ok = true;
      for (std::size_t i = 0; i < L && ok; ++i) {
        CellId e = try_edge(cyc[i], cyc[(i + 1) % L]);
        ok       = e >= 0;
        ring.push_back(e);
      }
      for (std::size_t k = 0; k < opt.chords && ok && L >= 2; ++k) {
        std::size_t i = pick(0, L - 1), j = pick(0, L - 1);
        if (i == j) {
          continue;
        }
        std::size_t len = pick(1, 3);
        if (c.num_vertices() + len - 1 > opt.max_vertices) {
          continue;
        }
        std::vector<CellId> cell_edges;
        CellId              prev = cyc[i];
        for (std::size_t s = 0; s < len && ok; ++s) {
          CellId nxt = s + 1 == len ? cyc[j] : c.add_vertex();
          CellId e   = try_edge(prev, nxt);
          ok         = e >= 0;
          cell_edges.push_back(e);
          prev = nxt;
        }
        // Arc of the ring from j forward to i closes the chord.
        for (std::size_t t = j; t != i; t = (t + 1) % L) {
          cell_edges.push_back(ring[t]);
        }
        if (ok) {
          c.add_cell(cell_edges);
        }
      }
      for (std::size_t k = 0; k < opt.tails && ok; ++k) {
        std::size_t len = pick(1, 2);
        if (c.num_vertices() + len > opt.max_vertices) {
          break;
        }
        auto   vs   = c.vertices();
        CellId prev = vs[pick(0, vs.size() - 1)];
        for (std::size_t s = 0; s < len && ok; ++s) {
          CellId nxt = c.add_vertex();
          ok         = try_edge(prev, nxt) >= 0;
          prev       = nxt;
        }
      }
      if (ok) {
        return c;
      }
    }
  }

  Word random_word(std::mt19937_64& rng, std::size_t ngens, std::size_t length) {
    std::uniform_int_distribution<int> d(0, static_cast<int>(2 * ngens) - 1);
    Word                               w;
    for (std::size_t i = 0; i < length; ++i) {
      w.push_back(Letter::from_code(d(rng)));
    }
    return w;
  }

}  // namespace gsc::oracle
