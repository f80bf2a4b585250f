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

// General relators: cones over circle-like boundaries.
//
// A relator stores only its boundary; the apex is the implicit cell with id
// boundary.size() covering every maximal boundary cell (see cone()).

#ifndef GSC_RELATOR_HPP_
#define GSC_RELATOR_HPP_

#include "gsc/complex.hpp"
#include "gsc/cover.hpp"
#include "gsc/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

  // Cell map of the boundary onto itself.
  struct Automorphism {
    std::vector<CellId> map;
    int                 winding_sign = 1;  // +1 preserves, -1 reverses
  };

  struct AutomorphismGroup {
    std::vector<Automorphism> elements;  // identity first
    bool                      cyclic   = false;
    bool                      dihedral = false;
    // Kernel of the action on crucial cones is a 2-group and the image is
    // cyclic or dihedral. Vacuously true without crucial cones.
    bool        fits_structure_theorem = true;
    std::size_t kernel_order           = 1;

    std::size_t order() const noexcept {
      return elements.size();
    }
  };

  class GeneralRelator {
   public:
    GeneralRelator() = default;

    // Validates the boundary, computes the winding cocycle (normalized so the
    // reference loop has winding +1; the shortest representative is used when
    // none is given) and caches the metric data. rank defaults to the height.
    GeneralRelator(std::string                  name,
                   LabeledComplex               boundary,
                   std::optional<int>           rank      = std::nullopt,
                   std::optional<PathInComplex> reference = std::nullopt);

    std::string const& name() const noexcept {
      return _name;
    }
    LabeledComplex const& boundary() const noexcept {
      return _boundary;
    }
    CellId apex() const noexcept {
      return static_cast<CellId>(_boundary.size());
    }
    // Boundary plus apex.
    LabeledComplex cone() const;

    int height() const noexcept {
      return _height;
    }
    int rank() const noexcept {
      return _rank;
    }
    void set_rank(int r);
    CellId base_vertex() const noexcept {
      return _base;
    }
    Cocycle const& cocycle() const noexcept {
      return _cocycle;
    }
    PathInComplex const& reference_loop() const noexcept {
      return _reference;
    }
    Rational length() const noexcept {
      return _length;
    }
    PathInComplex const& length_witness() const noexcept {
      return _length_witness;
    }
    std::int64_t width() const noexcept {
      return _width;
    }
    PathInComplex const& shortest_representative() const noexcept {
      return _shortest_rep;
    }
    AutomorphismGroup const& automorphisms() const noexcept {
      return _automorphisms;
    }
    std::vector<CellId> const& crucial() const noexcept {
      return _crucial;
    }
    // One base vertex per automorphism orbit.
    std::vector<CellId> orbit_representatives() const;

    // Traditional relator: circle spelling w (cyclically reduced, nonempty).
    static GeneralRelator from_word(std::string name, Word const& w,
                                    std::optional<int> rank = std::nullopt);

   private:
    std::string         _name;
    LabeledComplex      _boundary;
    int                 _height = 2;
    int                 _rank   = 2;
    CellId              _base   = 0;
    Cocycle             _cocycle;
    PathInComplex       _reference;
    Rational            _length{0};
    PathInComplex       _length_witness;
    std::int64_t        _width = 0;
    PathInComplex       _shortest_rep;
    AutomorphismGroup   _automorphisms;
    std::vector<CellId> _crucial;
  };

  // Circle complex spelling w from vertex 0.
  LabeledComplex circle_complex(Word const& w);

  // Throws unless loop is a closed path in r's boundary.
  std::int64_t winding_number(GeneralRelator const& r, PathInComplex const& loop);
  bool         is_representative(GeneralRelator const& r, PathInComplex const& loop);

  // Image of a path under a boundary automorphism.
  PathInComplex apply(Automorphism const& a, LabeledComplex const& c,
                      PathInComplex const& p);

  AutomorphismGroup compute_automorphisms(LabeledComplex const&      boundary,
                                          Cocycle const&             phi,
                                          PathInComplex const&       reference,
                                          std::vector<CellId> const& crucial);

  bool has_orientation_reversing_automorphism(GeneralRelator const& r);

  // Edges and maximal boundary cones whose removal leaves no closed walk of
  // winding +-1. Removing an edge removes everything above it; removing a
  // cone removes the cells lying only under that cone.
  std::vector<CellId> crucial_cones(LabeledComplex const& boundary,
                                    Cocycle const&        phi);

  // Cells of c that survive deleting cell p as described above.
  std::vector<bool> removal_survivors(LabeledComplex const& c, CellId p);

  // True when some connected component of the kept 1-skeleton carries a
  // closed walk whose winding is +-1.
  bool has_unit_winding_loop(LabeledComplex const&    c,
                             Cocycle const&           phi,
                             std::vector<bool> const& keep);

  // The relator sitting on a boundary cone p of r.
  GeneralRelator subrelator(GeneralRelator const& r, CellId p);

  // Label-preserving isomorphism of cones, if any.
  std::optional<std::vector<CellId>> isomorphism(GeneralRelator const& a,
                                                 GeneralRelator const& b);

  // Input plus every relator sitting on a cone of any member's boundary,
  // recursively, deduplicated up to isomorphism. Unnamed subcones take their
  // cell tag as name (or "<parent>.<cell>").
  std::vector<GeneralRelator> subcone_closure(std::vector<GeneralRelator> const& rs);

  // Cellular maps of r's cone into the complex dst (label, orientation and
  // height preserving), one per image of r's base vertex that extends.
  std::vector<std::vector<CellId>> find_functors(GeneralRelator const& r,
                                                 LabeledComplex const& dst);

}  // namespace gsc

#endif  // GSC_RELATOR_HPP_
