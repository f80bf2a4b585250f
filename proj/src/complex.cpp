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

#include "gsc/complex.hpp"

#include "gsc/homology.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gsc {

  CellId LabeledComplex::add_vertex() {
    auto id = static_cast<CellId>(_cells.size());
    _cells.push_back(Cell{0, {}, -1, {}});
    _incident.emplace_back();
    _cofaces.emplace_back();
    ++_num_vertices;
    return id;
  }

  CellId LabeledComplex::add_edge(CellId from, CellId to, int gen) {
    if (!is_vertex(from) || !is_vertex(to)) {
      throw Error("edge endpoints must be vertices");
    }
    if (gen < 0) {
      throw Error("edge label must be a generator index");
    }
    auto id = static_cast<CellId>(_cells.size());
    _cells.push_back(Cell{1, {from, to}, gen, {}});
    _incident.emplace_back();
    _cofaces.emplace_back();
    _incident[static_cast<std::size_t>(from)].push_back(id);
    _cofaces[static_cast<std::size_t>(from)].push_back(id);
    if (to != from) {
      _incident[static_cast<std::size_t>(to)].push_back(id);
      _cofaces[static_cast<std::size_t>(to)].push_back(id);
    }
    ++_num_edges;
    return id;
  }

  CellId LabeledComplex::add_cell(std::vector<CellId> covers, std::string tag) {
    int h = 0;
    for (auto c : covers) {
      h = std::max(h, cell(c).height + 1);
    }
    return add_cell_with_height(std::max(h, 2), std::move(covers),
                                std::move(tag));
  }

  CellId LabeledComplex::add_cell_with_height(int                 height,
                                              std::vector<CellId> covers,
                                              std::string         tag) {
    if (height < 2) {
      throw Error("use add_vertex/add_edge for cells of height < 2");
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    for (auto c : covers) {
      if (c < 0 || static_cast<std::size_t>(c) >= _cells.size()) {
        throw Error("cell covers unknown cell " + std::to_string(c));
      }
    }
    auto id = static_cast<CellId>(_cells.size());
    for (auto c : covers) {
      _cofaces[static_cast<std::size_t>(c)].push_back(id);
    }
    _by_covers.emplace(std::make_pair(height, covers), id);
    _cells.push_back(Cell{height, std::move(covers), -1, std::move(tag)});
    _incident.emplace_back();
    _cofaces.emplace_back();
    return id;
  }

  std::vector<CellId> LabeledComplex::cells_of_height(int h) const {
    std::vector<CellId> out;
    for (std::size_t i = 0; i < _cells.size(); ++i) {
      if (_cells[i].height == h) {
        out.push_back(static_cast<CellId>(i));
      }
    }
    return out;
  }

  int LabeledComplex::max_height() const noexcept {
    int h = -1;
    for (auto const& c : _cells) {
      h = std::max(h, c.height);
    }
    return h;
  }

  CellId LabeledComplex::out_edge(CellId v, int gen) const {
    for (auto e : incident(v)) {
      if (label(e) == gen && from(e) == v) {
        return e;
      }
    }
    return -1;
  }

  CellId LabeledComplex::in_edge(CellId v, int gen) const {
    for (auto e : incident(v)) {
      if (label(e) == gen && to(e) == v) {
        return e;
      }
    }
    return -1;
  }

  std::optional<Step> LabeledComplex::step(CellId v, Letter x) const {
    CellId e = x.inverse ? in_edge(v, x.gen) : out_edge(v, x.gen);
    if (e < 0) {
      return std::nullopt;
    }
    return Step{e, !x.inverse};
  }

  Word LabeledComplex::label(PathInComplex const& p) const {
    Word w;
    w.reserve(p.steps.size());
    for (auto s : p.steps) {
      w.push_back(letter(s));
    }
    return w;
  }

  std::vector<CellId> LabeledComplex::ideal(CellId p) const {
    std::set<CellId>    seen;
    std::vector<CellId> stack(cell(p).covers.begin(), cell(p).covers.end());
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      if (seen.insert(c).second) {
        for (auto d : cell(c).covers) {
          stack.push_back(d);
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<CellId> LabeledComplex::upset(CellId p) const {
    std::set<CellId>    seen;
    std::vector<CellId> stack{p};
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      if (seen.insert(c).second) {
        for (auto d : cofaces(c)) {
          stack.push_back(d);
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::vector<CellId> LabeledComplex::maximal_cells() const {
    std::vector<CellId> out;
    for (std::size_t i = 0; i < _cells.size(); ++i) {
      if (_cofaces[i].empty()) {
        out.push_back(static_cast<CellId>(i));
      }
    }
    return out;
  }

  LabeledComplex LabeledComplex::restrict(std::vector<bool> const& keep,
                                          std::vector<CellId>*     old_to_new,
                                          std::vector<CellId>* new_to_old) const {
    LabeledComplex      out;
    std::vector<CellId> map(_cells.size(), -1);
    if (new_to_old != nullptr) {
      new_to_old->clear();
    }
    for (std::size_t i = 0; i < _cells.size(); ++i) {
      if (!keep[i]) {
        continue;
      }
      auto const& c = _cells[i];
      std::vector<CellId> covers;
      for (auto d : c.covers) {
        if (map[static_cast<std::size_t>(d)] < 0) {
          throw Error("restrict: kept set is not downward closed");
        }
        covers.push_back(map[static_cast<std::size_t>(d)]);
      }
      if (c.height == 0) {
        map[i] = out.add_vertex();
      } else if (c.height == 1) {
        map[i] = out.add_edge(covers[0], covers[1], c.gen);
      } else {
        map[i] = out.add_cell_with_height(c.height, covers, c.tag);
      }
      if (new_to_old != nullptr) {
        new_to_old->push_back(static_cast<CellId>(i));
      }
    }
    if (old_to_new != nullptr) {
      *old_to_new = std::move(map);
    }
    return out;
  }

  CellId LabeledComplex::find_cell(int                        height,
                                   std::vector<CellId> const& sorted_covers) const {
    auto it = _by_covers.find(std::make_pair(height, sorted_covers));
    return it == _by_covers.end() ? -1 : it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  PathInComplex reverse(LabeledComplex const& c, PathInComplex const& p) {
    (void) c;
    PathInComplex out{p.end, {}, p.start};
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
      out.steps.push_back(Step{it->edge, !it->forward});
    }
    return out;
  }

  PathInComplex compose(PathInComplex const& a, PathInComplex const& b) {
    if (a.end != b.start) {
      throw Error("compose: paths are not composable");
    }
    PathInComplex out = a;
    out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
    out.end = b.end;
    return out;
  }

  bool is_valid_path(LabeledComplex const& c, PathInComplex const& p) {
    if (p.start < 0 || static_cast<std::size_t>(p.start) >= c.size()
        || !c.is_vertex(p.start)) {
      return false;
    }
    CellId v = p.start;
    for (auto s : p.steps) {
      if (s.edge < 0 || static_cast<std::size_t>(s.edge) >= c.size()
          || !c.is_edge(s.edge)) {
        return false;
      }
      CellId tail = s.forward ? c.from(s.edge) : c.to(s.edge);
      if (tail != v) {
        return false;
      }
      v = c.endpoint(v, s);
    }
    return v == p.end;
  }

  std::optional<PathInComplex> trace_word(LabeledComplex const& c,
                                          CellId                start,
                                          Word const&           w,
                                          std::size_t*          failed_at) {
    if (!c.is_vertex(start)) {
      throw Error("trace_word: start is not a vertex");
    }
    PathInComplex p{start, {}, start};
    CellId        v = start;
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto s = c.step(v, w[i]);
      if (!s) {
        if (failed_at != nullptr) {
          *failed_at = i;
        }
        return std::nullopt;
      }
      p.steps.push_back(*s);
      v = c.endpoint(v, *s);
    }
    p.end = v;
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  std::vector<ValidationIssue> determinism_violations(LabeledComplex const& c) {
    std::vector<ValidationIssue> out;
    for (auto v : c.vertices()) {
      std::map<int, std::vector<CellId>> outs;
      std::map<int, std::vector<CellId>> ins;
      for (auto e : c.incident(v)) {
        if (c.from(e) == v) {
          outs[c.label(e)].push_back(e);
        }
        if (c.to(e) == v) {
          ins[c.label(e)].push_back(e);
        }
      }
      for (auto const* m : {&outs, &ins}) {
        for (auto const& [gen, es] : *m) {
          if (es.size() > 1) {
            std::vector<CellId> cells{v};
            cells.insert(cells.end(), es.begin(), es.end());
            out.push_back(ValidationIssue{
                std::string("determinism: vertex ") + std::to_string(v)
                    + " has two " + (m == &outs ? "outgoing" : "incoming")
                    + " edges labeled generator " + std::to_string(gen),
                cells});
          }
        }
      }
    }
    return out;
  }

  bool is_connected(LabeledComplex const& c) {
    auto vs = c.vertices();
    if (vs.empty()) {
      return false;
    }
    std::vector<bool>  seen(c.size(), false);
    std::deque<CellId> queue{vs.front()};
    seen[static_cast<std::size_t>(vs.front())] = true;
    std::size_t count                           = 1;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto e : c.incident(v)) {
        for (auto w : {c.from(e), c.to(e)}) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            ++count;
            queue.push_back(w);
          }
        }
      }
    }
    return count == vs.size();
  }

  namespace {
    long long contribution(LabeledComplex const&     c,
                           CellId                    p,
                           std::map<CellId, long long>& memo) {
      auto const& cell = c.cell(p);
      if (cell.height == 0) {
        return 1;
      }
      if (cell.height == 1) {
        return -1;
      }
      if (auto it = memo.find(p); it != memo.end()) {
        return it->second;
      }
      long long chi = 0;
      for (auto q : c.ideal(p)) {
        chi += contribution(c, q, memo);
      }
      memo[p] = 1 - chi;
      return 1 - chi;
    }
  }  // namespace

  long long euler_characteristic(LabeledComplex const& c) {
    std::map<CellId, long long> memo;
    long long                   chi = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      chi += contribution(c, static_cast<CellId>(i), memo);
    }
    return chi;
  }

  ValidationReport validate_complex(LabeledComplex const& c, bool as_relator) {
    ValidationReport report;
    bool             structural = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto        id   = static_cast<CellId>(i);
      auto const& cell = c.cell(id);
      ++report.height_counts[cell.height];
      auto issue = [&](std::string what) {
        report.issues.push_back(ValidationIssue{std::move(what), {id}});
        structural = false;
      };
      if (cell.height == 0) {
        if (!cell.covers.empty()) {
          issue("vertex covers other cells");
        }
        continue;
      }
      if (cell.height == 1) {
        if (cell.covers.size() != 2 || !c.is_vertex(cell.covers[0])
            || !c.is_vertex(cell.covers[1])) {
          issue("edge does not cover two vertices");
        }
        continue;
      }
      bool below = false;
      for (auto d : cell.covers) {
        if (c.cell(d).height >= cell.height) {
          issue("order relation is not strict: cell covers cell "
                + std::to_string(d) + " of equal or greater height");
        }
        below = below || c.cell(d).height == cell.height - 1;
      }
      if (!below) {
        issue("height " + std::to_string(cell.height)
              + " cell covers no cell of height "
              + std::to_string(cell.height - 1));
      }
    }
    for (auto& issue : determinism_violations(c)) {
      report.issues.push_back(std::move(issue));
    }
    if (!structural) {
      return report;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto id = static_cast<CellId>(i);
      if (c.cell(id).height < 2) {
        continue;
      }
      if (as_relator && c.cofaces(id).empty()) {
        continue;  // the apex is checked below
      }
      std::vector<bool> keep(c.size(), false);
      for (auto q : c.ideal(id)) {
        keep[static_cast<std::size_t>(q)] = true;
      }
      auto circle = analyze_circle(c.restrict(keep));
      if (!circle.is_circle()) {
        report.issues.push_back(ValidationIssue{
            "ideal below cell is not circle-like (" + circle.reason + ")",
            {id}});
      }
    }
    if (as_relator) {
      auto maxima = c.maximal_cells();
      if (maxima.size() != 1) {
        report.issues.push_back(ValidationIssue{
            "relator poset has " + std::to_string(maxima.size())
                + " maximal cells; a unique maximum is required",
            maxima});
      } else if (c.cell(maxima[0]).height < 2) {
        report.issues.push_back(
            ValidationIssue{"relator apex must have height >= 2", maxima});
      } else {
        std::vector<bool> keep(c.size(), false);
        for (auto q : c.ideal(maxima[0])) {
          keep[static_cast<std::size_t>(q)] = true;
        }
        auto circle = analyze_circle(c.restrict(keep));
        if (!circle.is_circle()) {
          report.issues.push_back(ValidationIssue{
              "relator boundary is not circle-like (" + circle.reason + ")",
              maxima});
        }
      }
    }
    return report;
  }

}  // namespace gsc

namespace gsc {

  std::optional<std::vector<CellId>> extend_labeled_map(LabeledComplex const& src,
                                                        CellId                src_v,
                                                        LabeledComplex const& dst,
                                                        CellId                dst_v) {
    std::vector<CellId> img(src.size(), -1);
    auto                assign = [&](CellId a, CellId b) {
      auto& slot = img[static_cast<std::size_t>(a)];
      if (slot < 0) {
        slot = b;
        return true;
      }
      return slot == b;
    };
    assign(src_v, dst_v);
    std::deque<CellId> queue{src_v};
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      auto w = img[static_cast<std::size_t>(v)];
      for (auto e : src.incident(v)) {
        CellId f = -1;
        if (src.from(e) == v) {
          f = dst.out_edge(w, src.label(e));
        } else {
          f = dst.in_edge(w, src.label(e));
        }
        if (f < 0 || !assign(e, f)) {
          return std::nullopt;
        }
        for (int side = 0; side < 2; ++side) {
          auto a = src.cell(e).covers[static_cast<std::size_t>(side)];
          auto b = dst.cell(f).covers[static_cast<std::size_t>(side)];
          bool fresh = img[static_cast<std::size_t>(a)] < 0;
          if (!assign(a, b)) {
            return std::nullopt;
          }
          if (fresh) {
            queue.push_back(a);
          }
        }
      }
    }
    std::vector<CellId> higher;
    for (std::size_t i = 0; i < src.size(); ++i) {
      auto h = src.cell(static_cast<CellId>(i)).height;
      if (h < 2) {
        if (img[i] < 0) {
          return std::nullopt;  // disconnected source
        }
      } else {
        higher.push_back(static_cast<CellId>(i));
      }
    }
    std::stable_sort(higher.begin(), higher.end(), [&](CellId a, CellId b) {
      return src.cell(a).height < src.cell(b).height;
    });
    for (auto p : higher) {
      std::vector<CellId> covers;
      for (auto q : src.cell(p).covers) {
        covers.push_back(img[static_cast<std::size_t>(q)]);
      }
      std::sort(covers.begin(), covers.end());
      covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
      auto t = dst.find_cell(src.cell(p).height, covers);
      if (t < 0) {
        return std::nullopt;
      }
      img[static_cast<std::size_t>(p)] = t;
    }
    return img;
  }

}  // namespace gsc
