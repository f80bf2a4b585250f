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

// Finite cell posets with heights and a labeled 1-skeleton.
//
// Every cell is identified by its index. Height-0 cells are vertices, height-1
// cells are oriented edges carrying a generator label and covering their two
// endpoints (from, to; equal for a loop edge), and a cell of height k >= 2
// covers a set of lower cells whose ideal is expected to be circle-like.

#ifndef GSC_COMPLEX_HPP_
#define GSC_COMPLEX_HPP_

#include "gsc/word.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gsc {

  using CellId = int;

  struct Cell {
    int                 height = 0;
    std::vector<CellId> covers;
    int                 gen = -1;  // edges only
    std::string         tag;       // names the relator a cone was copied from
  };

  struct Step {
    CellId edge;
    bool   forward;
    friend bool operator==(Step, Step) = default;
  };

  struct PathInComplex {
    CellId            start = -1;
    std::vector<Step> steps;
    CellId            end = -1;

    bool closed() const noexcept {
      return start == end;
    }
    std::size_t length() const noexcept {
      return steps.size();
    }
  };

  class LabeledComplex {
   public:
    CellId add_vertex();
    CellId add_edge(CellId from, CellId to, int gen);
    // Height is one more than the highest covered cell.
    CellId add_cell(std::vector<CellId> covers, std::string tag = {});
    // Explicit height, used by the raw-cell file syntax; validated later.
    CellId add_cell_with_height(int                 height,
                                std::vector<CellId> covers,
                                std::string         tag = {});

    std::size_t size() const noexcept {
      return _cells.size();
    }
    Cell const& cell(CellId c) const {
      return _cells.at(static_cast<std::size_t>(c));
    }
    bool is_vertex(CellId c) const {
      return cell(c).height == 0;
    }
    bool is_edge(CellId c) const {
      return cell(c).height == 1;
    }

    std::vector<CellId> cells_of_height(int h) const;
    std::vector<CellId> vertices() const {
      return cells_of_height(0);
    }
    std::vector<CellId> edges() const {
      return cells_of_height(1);
    }
    std::size_t num_vertices() const noexcept {
      return _num_vertices;
    }
    std::size_t num_edges() const noexcept {
      return _num_edges;
    }
    int max_height() const noexcept;

    CellId from(CellId e) const {
      return cell(e).covers[0];
    }
    CellId to(CellId e) const {
      return cell(e).covers[1];
    }
    int label(CellId e) const {
      return cell(e).gen;
    }

    // Edges incident to a vertex in creation order (a loop edge appears once).
    std::vector<CellId> const& incident(CellId v) const {
      return _incident.at(static_cast<std::size_t>(v));
    }

    // Cells that cover c.
    std::vector<CellId> const& cofaces(CellId c) const {
      return _cofaces.at(static_cast<std::size_t>(c));
    }

    // First edge leaving (resp. entering) v with the given label, or -1.
    CellId out_edge(CellId v, int gen) const;
    CellId in_edge(CellId v, int gen) const;

    // Edge followed when reading letter x at v; nullopt if unreadable.
    std::optional<Step> step(CellId v, Letter x) const;
    CellId              endpoint(CellId /*v*/, Step s) const {
      return s.forward ? to(s.edge) : from(s.edge);
    }
    Letter letter(Step s) const {
      return Letter{label(s.edge), !s.forward};
    }

    Word label(PathInComplex const& p) const;

    // Cells strictly below p, sorted.
    std::vector<CellId> ideal(CellId p) const;
    // p together with every cell above it, sorted.
    std::vector<CellId> upset(CellId p) const;
    // Cells not covered by anything.
    std::vector<CellId> maximal_cells() const;

    // Sub-poset on the kept cells; keep must be downward closed.
    LabeledComplex restrict(std::vector<bool> const& keep,
                            std::vector<CellId>*     old_to_new = nullptr,
                            std::vector<CellId>*     new_to_old = nullptr) const;

    // Cells of height >= 2 with the given sorted cover set and height.
    CellId find_cell(int height, std::vector<CellId> const& sorted_covers) const;

   private:
    std::vector<Cell>                _cells;
    std::vector<std::vector<CellId>> _incident;
    std::vector<std::vector<CellId>> _cofaces;
    std::size_t                      _num_vertices = 0;
    std::size_t                      _num_edges    = 0;
    std::map<std::pair<int, std::vector<CellId>>, CellId> _by_covers;
  };

  PathInComplex reverse(LabeledComplex const& c, PathInComplex const& p);
  // Requires a.end == b.start.
  PathInComplex compose(PathInComplex const& a, PathInComplex const& b);
  bool          is_valid_path(LabeledComplex const& c, PathInComplex const& p);

  // Unique path spelling w from start. On failure returns nullopt and, when
  // given, stores the offending letter position in failed_at.
  std::optional<PathInComplex> trace_word(LabeledComplex const& c,
                                          CellId                start,
                                          Word const&           w,
                                          std::size_t* failed_at = nullptr);

  struct ValidationIssue {
    std::string         what;
    std::vector<CellId> cells;
  };

  struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::map<int, std::size_t>   height_counts;

    bool ok() const noexcept {
      return issues.empty();
    }
  };

  // Checks poset structure, height consistency, labeling determinism and the
  // circle condition below every cell of height >= 2. With as_relator the
  // complex must also have a unique maximum.
  ValidationReport validate_complex(LabeledComplex const& c,
                                    bool                  as_relator = false);

  // Determinism witnesses: (vertex, label) pairs with two outgoing or two
  // incoming edges.
  std::vector<ValidationIssue> determinism_violations(LabeledComplex const& c);

  bool is_connected(LabeledComplex const& c);

  // Euler characteristic of the realization, each cell of height >= 2
  // contributing 1 - chi(ideal).
  long long euler_characteristic(LabeledComplex const& c);

  // The label-, orientation- and height-preserving map src -> dst sending
  // src_v to dst_v, forced by labeling determinism. Entry i is the image of
  // src cell i. nullopt when some cell has no image. src must be connected.
  std::optional<std::vector<CellId>> extend_labeled_map(LabeledComplex const& src,
                                                        CellId                src_v,
                                                        LabeledComplex const& dst,
                                                        CellId                dst_v);

}  // namespace gsc

#endif  // GSC_COMPLEX_HPP_
