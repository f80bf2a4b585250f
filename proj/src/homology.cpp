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

#include "gsc/homology.hpp"

#include <cstdlib>
#include <deque>
#include <utility>

namespace gsc {

  namespace {
    std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r = 0;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw Error("integer overflow in Smith normal form");
      }
      return r;
    }

    std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
      std::int64_t r = 0;
      if (__builtin_sub_overflow(a, b, &r)) {
        throw Error("integer overflow in Smith normal form");
      }
      return r;
    }

    // Floor division keeps remainders nonnegative, so pivots shrink.
    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      auto q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }
  }  // namespace

  SmithForm smith_normal_form(IntMatrix a, std::size_t cols) {
    std::size_t const rows = a.size();
    SmithForm         out;
    out.column_transform.assign(cols, std::vector<std::int64_t>(cols, 0));
    auto& V = out.column_transform;
    for (std::size_t i = 0; i < cols; ++i) {
      V[i][i] = 1;
    }
    auto swap_cols = [&](std::size_t x, std::size_t y) {
      if (x == y) {
        return;
      }
      for (auto& row : a) {
        std::swap(row[x], row[y]);
      }
      for (auto& row : V) {
        std::swap(row[x], row[y]);
      }
    };
    // col_y -= q * col_x
    auto sub_col = [&](std::size_t y, std::size_t x, std::int64_t q) {
      for (auto& row : a) {
        row[y] = checked_sub(row[y], checked_mul(q, row[x]));
      }
      for (auto& row : V) {
        row[y] = checked_sub(row[y], checked_mul(q, row[x]));
      }
    };
    auto sub_row = [&](std::size_t y, std::size_t x, std::int64_t q) {
      for (std::size_t j = 0; j < cols; ++j) {
        a[y][j] = checked_sub(a[y][j], checked_mul(q, a[x][j]));
      }
    };

    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::int64_t best = 0;
      std::size_t  bi = 0, bj = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            bi   = i;
            bj   = j;
          }
        }
      }
      if (best == 0) {
        break;
      }
      std::swap(a[t], a[bi]);
      swap_cols(t, bj);
      while (true) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a[i][t] != 0) {
            sub_row(i, t, floor_div(a[i][t], a[t][t]));
            if (a[i][t] != 0) {
              std::swap(a[t], a[i]);
              dirty = true;
            }
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[t][j] != 0) {
            sub_col(j, t, floor_div(a[t][j], a[t][t]));
            if (a[t][j] != 0) {
              swap_cols(t, j);
              dirty = true;
            }
          }
        }
        if (!dirty) {
          break;
        }
      }
      out.diagonal.push_back(std::llabs(a[t][t]));
    }
    out.rank = t;
    return out;
  }

  CircleStructure analyze_circle(LabeledComplex const& c) {
    CircleStructure out;
    auto            vertices = c.vertices();
    if (vertices.empty()) {
      out.reason = "no vertices";
      return out;
    }
    out.connected = is_connected(c);
    out.euler     = euler_characteristic(c);

    // Spanning tree of the 1-skeleton by breadth-first search.
    std::vector<bool>  tree(c.size(), false);
    std::vector<bool>  seen(c.size(), false);
    std::deque<CellId> queue;
    for (auto root : vertices) {
      if (seen[static_cast<std::size_t>(root)]) {
        continue;
      }
      seen[static_cast<std::size_t>(root)] = true;
      queue.push_back(root);
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : c.incident(v)) {
          auto w = c.from(e) == v ? c.to(e) : c.from(e);
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            tree[static_cast<std::size_t>(e)] = true;
            queue.push_back(w);
          }
        }
      }
    }
    std::vector<long>   column(c.size(), -1);
    std::vector<CellId> nontree;
    for (auto e : c.edges()) {
      if (!tree[static_cast<std::size_t>(e)]) {
        column[static_cast<std::size_t>(e)] = static_cast<long>(nontree.size());
        nontree.push_back(e);
      }
    }
    std::size_t const r = nontree.size();

    IntMatrix relations;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto p = static_cast<CellId>(i);
      if (c.cell(p).height < 2) {
        continue;
      }
      std::vector<bool> keep(c.size(), false);
      for (auto q : c.ideal(p)) {
        keep[static_cast<std::size_t>(q)] = true;
      }
      std::vector<CellId> new_to_old;
      auto                sub  = c.restrict(keep, nullptr, &new_to_old);
      auto                inner = analyze_circle(sub);
      if (!inner.is_circle()) {
        out.reason = "ideal of cell " + std::to_string(p)
                     + " is not circle-like: " + inner.reason;
        return out;
      }
      auto loop = shortest_loop_with_winding(sub, inner.cocycle, 1);
      if (!loop) {
        out.reason = "no representative loop below cell " + std::to_string(p);
        return out;
      }
      std::vector<std::int64_t> row(r, 0);
      for (auto s : loop->steps) {
        auto col = column[static_cast<std::size_t>(
            new_to_old[static_cast<std::size_t>(s.edge)])];
        if (col >= 0) {
          row[static_cast<std::size_t>(col)] += s.forward ? 1 : -1;
        }
      }
      relations.push_back(std::move(row));
    }

    auto snf       = smith_normal_form(relations, r);
    out.free_rank  = r - snf.rank;
    for (auto d : snf.diagonal) {
      if (d > 1) {
        out.torsion.push_back(d);
      }
    }
    if (!out.connected) {
      out.reason = "not connected";
    } else if (out.euler != 0) {
      out.reason = "Euler characteristic " + std::to_string(out.euler);
    } else if (out.free_rank != 1) {
      out.reason = "first homology has rank " + std::to_string(out.free_rank);
    } else if (!out.torsion.empty()) {
      out.reason = "first homology has torsion";
    }
    if (!out.reason.empty()) {
      return out;
    }
    out.cocycle.assign(c.size(), 0);
    std::int64_t sign = 0;
    for (std::size_t j = 0; j < r; ++j) {
      auto v = snf.column_transform[j][snf.rank];
      if (sign == 0 && v != 0) {
        sign = v > 0 ? 1 : -1;
      }
      out.cocycle[static_cast<std::size_t>(nontree[j])] = v;
    }
    for (auto& v : out.cocycle) {
      v *= sign;
    }
    return out;
  }

  bool circle_check(LabeledComplex const& c) {
    return analyze_circle(c).is_circle();
  }

}  // namespace gsc
