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

// The infinite cyclic cover of a circle-like complex, determined by an
// integer cocycle on its edges. A lift (v, k) sits over base vertex v at level
// k; traversing edge e forward raises the level by cocycle[e].

#ifndef GSC_COVER_HPP_
#define GSC_COVER_HPP_

#include "gsc/complex.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace gsc {

  // Indexed by cell id; zero off edges.
  using Cocycle = std::vector<std::int64_t>;

  struct Lift {
    CellId       vertex = -1;
    std::int64_t level  = 0;
    friend bool  operator==(Lift, Lift) = default;
  };

  std::int64_t winding(Cocycle const& phi, PathInComplex const& p);

  // Breadth-first machinery on the implicit (unbounded) cover.
  class CoverGraph {
   public:
    CoverGraph(LabeledComplex const& c, Cocycle const& phi);

    LabeledComplex const& base() const noexcept {
      return *_c;
    }
    Cocycle const& cocycle() const noexcept {
      return *_phi;
    }

    struct Neighbor {
      Lift to;
      Step step;
    };
    // Deterministic order: incident edges in creation order, forward first.
    void neighbors(Lift x, std::vector<Neighbor>& out) const;

    Lift lift_end(PathInComplex const& p, std::int64_t start_level = 0) const;

    // Shortest path between two lifts, projected to the base. Gives up after
    // max_dist steps when max_dist >= 0.
    std::optional<PathInComplex> shortest_path(Lift              from,
                                               Lift              to,
                                               std::int64_t max_dist = -1) const;
    std::optional<std::int64_t>  distance(Lift         from,
                                          Lift         to,
                                          std::int64_t max_dist = -1) const;

    // Distances of every lift within radius of center.
    std::unordered_map<std::int64_t, std::int64_t> ball(Lift         center,
                                                        std::int64_t radius) const;

    std::int64_t key(Lift x) const noexcept {
      return x.level * _stride + x.vertex;
    }
    Lift unkey(std::int64_t k) const noexcept;

   private:
    LabeledComplex const* _c;
    Cocycle const*        _phi;
    std::int64_t          _stride;
  };

  // Shortest closed walk with winding exactly k (k != 0), trying every vertex
  // of starts (all vertices when empty).
  std::optional<PathInComplex>
  shortest_loop_with_winding(LabeledComplex const&      c,
                             Cocycle const&             phi,
                             std::int64_t               k,
                             std::vector<CellId> const& starts = {});

  // Finite window of the cover: levels -K..K, with the lifted 1-skeleton.
  class ZCoverWindow {
   public:
    ZCoverWindow(LabeledComplex const& c, Cocycle const& phi, std::int64_t K);

    std::int64_t bound() const noexcept {
      return _K;
    }
    std::size_t num_vertices() const noexcept {
      return _lifts.size();
    }
    std::size_t num_edges() const noexcept {
      return _edges.size();
    }
    Lift lift(std::size_t i) const {
      return _lifts[i];
    }
    // -1 when outside the window.
    long index(Lift x) const;
    // Projection of a lifted vertex to its base vertex.
    CellId project(std::size_t i) const {
      return _lifts[i].vertex;
    }
    // Deck transformation: level + 1; -1 when it leaves the window.
    long shift(std::size_t i) const;

    struct LiftedEdge {
      std::size_t a;
      std::size_t b;
      CellId      base_edge;
    };
    std::vector<LiftedEdge> const& edges() const noexcept {
      return _edges;
    }
    // Indices into edges().
    std::vector<std::size_t> const& incident(std::size_t i) const {
      return _incident[i];
    }

   private:
    std::int64_t                          _K;
    std::vector<CellId>                   _base_vertices;
    std::vector<long>                     _dense;  // cell id -> dense index
    std::vector<Lift>                     _lifts;
    std::vector<LiftedEdge>               _edges;
    std::vector<std::vector<std::size_t>> _incident;
  };

}  // namespace gsc

#endif  // GSC_COVER_HPP_
