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

#include "gsc/gsc.h"

#include "gsc/axioms.hpp"
#include "gsc/burnside.hpp"
#include "gsc/closure.hpp"
#include "gsc/format.hpp"
#include "gsc/metric.hpp"
#include "gsc/reduction.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using nlohmann::ordered_json;

struct gsc_presentation {
  gsc::MeasuredPresentation p;
};

namespace {

  thread_local std::string last_error;

  class ArgumentError : public gsc::Error {
   public:
    using gsc::Error::Error;
  };

  template <class F>
  gsc_status guard(F&& f) {
    try {
      last_error.clear();
      f();
      return GSC_OK;
    } catch (ArgumentError const& e) {
      last_error = e.what();
      return GSC_ERR_ARGUMENT;
    } catch (gsc::ParseError const& e) {
      last_error = e.what();
      return GSC_ERR_PARSE;
    } catch (gsc::PreconditionError const& e) {
      last_error = e.what();
      return GSC_ERR_PRECONDITION;
    } catch (gsc::Error const& e) {
      last_error = e.what();
      return GSC_ERR_VALIDATION;
    } catch (std::exception const& e) {
      last_error = e.what();
      return GSC_ERR_INTERNAL;
    }
  }

  char* dup(std::string const& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void put(char** out, ordered_json const& j) {
    if (!out) {
      throw ArgumentError("null output pointer");
    }
    *out = dup(j.dump(2));
  }

  void need(void const* ptr, char const* what) {
    if (!ptr) {
      throw ArgumentError(std::string("missing ") + what);
    }
  }

  gsc::Word word_arg(gsc::MeasuredPresentation const& p, char const* text) {
    need(text, "word");
    try {
      return p.alphabet().parse(text);
    } catch (gsc::Error const& e) {
      throw ArgumentError(std::string("bad word: ") + e.what());
    }
  }

  gsc::GeneralRelator const& relator_arg(gsc::MeasuredPresentation const& p, char const* name) {
    need(name, "relator name");
    auto const* r = p.find(name);
    if (!r) {
      throw ArgumentError(std::string("no relator named ") + name);
    }
    return *r;
  }

  ordered_json counts_json(gsc::LabeledComplex const& c) {
    ordered_json out = ordered_json::object();
    for (int h = 0; h <= c.max_height(); ++h) {
      out[std::to_string(h)] = c.cells_of_height(h).size();
    }
    return out;
  }

  std::int64_t max_rise(gsc::Cocycle const& phi) {
    std::int64_t m = 1;
    for (auto x : phi) {
      m = std::max<std::int64_t>(m, x < 0 ? -x : x);
    }
    return m;
  }

  ordered_json relator_geometry(gsc::MeasuredPresentation const& p, gsc::GeneralRelator const& r) {
    auto const& c = r.boundary();
    auto const& a = p.alphabet();
    ordered_json j;
    j["relator"]     = r.name();
    j["rank"]        = r.rank();
    j["height"]      = r.height();
    j["cells"]       = counts_json(c);
    j["base_vertex"] = r.base_vertex();
    j["reference"]   = a.format(c.label(r.reference_loop()));
    j["length"]      = gsc::to_string(r.length());
    auto const& lw   = r.length_witness();
    j["length_witness"] = {{"start", lw.start},
                           {"length", lw.length()},
                           {"winding", gsc::winding(r.cocycle(), lw)},
                           {"word", a.format(c.label(lw))}};
    j["width"] = r.width();
    auto const& sr = r.shortest_representative();
    j["shortest_representative"] = {
        {"start", sr.start}, {"length", sr.length()}, {"word", a.format(c.label(sr))}};
    j["reference_graph_length"] = gsc::to_string(gsc::graph_length(r, r.reference_loop()));

    auto const& g  = r.automorphisms();
    std::size_t rev = 0;
    for (auto const& e : g.elements) {
      rev += e.winding_sign < 0 ? 1 : 0;
    }
    j["automorphisms"] = {{"order", g.order()},
                          {"orientation_reversing", rev},
                          {"cyclic", g.cyclic},
                          {"dihedral", g.dihedral}};

    // Ball removals around the first vertex attaining the width.
    auto verts = c.vertices();
    gsc::CellId center = verts.empty() ? -1 : verts.front();
    for (auto v : verts) {
      if (gsc::separating_radius(c, r.cocycle(), v) == r.width()) {
        center = v;
        break;
      }
    }
    ordered_json balls = ordered_json::array();
    if (center >= 0) {
      std::int64_t K = 2 * (static_cast<std::int64_t>(verts.size()) + r.width() + 2)
                         * max_rise(r.cocycle())
                     + 2;
      for (std::int64_t rad = 1; rad <= r.width(); ++rad) {
        auto b = gsc::ball_removal_probe(c, r.cocycle(), gsc::Lift{center, 0}, rad, K);
        balls.push_back({{"radius", rad},
                         {"removed_vertices", b.removed_vertices},
                         {"removed_edges", b.removed_edges},
                         {"components", b.components},
                         {"ends_separated", b.ends_separated}});
      }
    }
    j["ball_center"]  = center;
    j["ball_removal"] = std::move(balls);
    return j;
  }

  ordered_json witness_json(gsc::MeasuredPresentation const& p, gsc::AxiomWitness const& w) {
    ordered_json j;
    j["relators"] = w.relators;
    ordered_json paths = ordered_json::array();
    for (std::size_t i = 0; i < w.paths.size(); ++i) {
      auto const* r = i < w.relators.size() ? p.find(w.relators[i]) : nullptr;
      if (r) {
        paths.push_back(gsc::path_json(r->boundary(), p.alphabet(), w.paths[i]));
      } else {
        paths.push_back({{"start", w.paths[i].start}, {"length", w.paths[i].length()}});
      }
    }
    j["paths"] = std::move(paths);
    ordered_json values = ordered_json::array();
    for (auto const& v : w.values) {
      values.push_back(gsc::to_string(v));
    }
    j["values"] = std::move(values);
    j["note"]   = w.note;
    return j;
  }

}  // namespace

extern "C" {

const char* gsc_version(void) {
  return "0.1.0";
}

const char* gsc_last_error(void) {
  return last_error.c_str();
}

void gsc_string_free(char* s) {
  std::free(s);
}

gsc_status gsc_presentation_parse(const char* text, gsc_presentation** out) {
  return guard([&] {
    need(text, "text");
    need(out, "output handle");
    *out = new gsc_presentation{gsc::parse_presentation(text)};
  });
}

gsc_status gsc_presentation_example(const char* name, gsc_presentation** out) {
  return guard([&] {
    need(name, "example name");
    need(out, "output handle");
    gsc::MeasuredPresentation p;
    try {
      p = gsc::build_example(name);
    } catch (gsc::Error const& e) {
      throw ArgumentError(e.what());
    }
    *out = new gsc_presentation{std::move(p)};
  });
}

void gsc_presentation_free(gsc_presentation* p) {
  delete p;
}

gsc_status gsc_example_names(char** json_out) {
  return guard([&] { put(json_out, ordered_json(gsc::example_names())); });
}

gsc_status gsc_presentation_serialize(const gsc_presentation* p, char** out) {
  return guard([&] {
    need(p, "presentation");
    need(out, "output pointer");
    *out = dup(gsc::serialize(p->p));
  });
}

gsc_status gsc_presentation_export(const gsc_presentation* p, const char* format, char** out) {
  return guard([&] {
    need(p, "presentation");
    need(format, "format");
    need(out, "output pointer");
    std::string f = format;
    if (f == "json") {
      *out = dup(gsc::presentation_json(p->p).dump(2) + "\n");
    } else if (f == "dot") {
      *out = dup(gsc::export_dot(p->p));
    } else {
      throw ArgumentError("unknown export format " + f);
    }
  });
}

gsc_status gsc_validate(const gsc_presentation* p, char** json_out, int* ok) {
  return guard([&] {
    need(p, "presentation");
    ordered_json j;
    j["generators"] = p->p.alphabet().names();
    j["constants"]  = gsc::constants_json(p->p.constants());
    ordered_json rels = ordered_json::array();
    bool all = true;
    for (auto const& r : p->p.relators()) {
      auto         rep = gsc::validate_complex(r.cone(), true);
      ordered_json x;
      x["name"]   = r.name();
      x["rank"]   = r.rank();
      x["height"] = r.height();
      ordered_json hc = ordered_json::object();
      for (auto const& [h, n] : rep.height_counts) {
        hc[std::to_string(h)] = n;
      }
      x["height_counts"] = std::move(hc);
      ordered_json issues = ordered_json::array();
      for (auto const& i : rep.issues) {
        issues.push_back({{"what", i.what}, {"cells", i.cells}});
      }
      x["valid"]  = rep.ok();
      x["issues"] = std::move(issues);
      all         = all && rep.ok();
      rels.push_back(std::move(x));
    }
    j["relators"] = std::move(rels);
    j["valid"]    = all;
    if (ok) {
      *ok = all ? 1 : 0;
    }
    put(json_out, j);
  });
}

gsc_status gsc_geometry(const gsc_presentation* p, const char* relator, char** json_out) {
  return guard([&] {
    need(p, "presentation");
    put(json_out, relator_geometry(p->p, relator_arg(p->p, relator)));
  });
}

gsc_status gsc_metric(const gsc_presentation* p, const char* relator, const char* path,
                      int64_t start, char** json_out) {
  return guard([&] {
    need(p, "presentation");
    auto const& r = relator_arg(p->p, relator);
    auto        w = word_arg(p->p, path);
    auto const& c = r.boundary();
    gsc::CellId s = start >= 0 ? static_cast<gsc::CellId>(start) : r.base_vertex();
    if (s >= static_cast<gsc::CellId>(c.size()) || !c.is_vertex(s)) {
      throw ArgumentError("start is not a boundary vertex");
    }
    std::size_t failed = 0;
    auto        u      = gsc::trace_word(c, s, w, &failed);
    if (!u) {
      throw ArgumentError("path is not readable in " + r.name() + " at letter "
                          + std::to_string(failed));
    }
    ordered_json j;
    j["relator"]         = r.name();
    j["path"]            = gsc::path_json(c, p->p.alphabet(), *u);
    j["winding"]         = gsc::winding(r.cocycle(), *u);
    j["geodesic_length"] = gsc::geodesic_length(r, *u);
    j["relator_length"]  = gsc::to_string(r.length());
    j["graph_length"]    = gsc::to_string(gsc::graph_length(r, *u));
    put(json_out, j);
  });
}

void gsc_axiom_options_default(gsc_axiom_options* o) {
  if (!o) {
    return;
  }
  gsc::AxiomBounds b;
  o->path_cap         = b.path_cap;
  o->v_cap            = b.v_cap;
  o->extra_rep_length = b.extra_rep_length;
  o->max_patterns     = b.max_patterns;
}

gsc_status gsc_axioms(const gsc_presentation* p, const gsc_axiom_options* o, char** json_out,
                      int* failed) {
  return guard([&] {
    need(p, "presentation");
    gsc::AxiomBounds b;
    if (o) {
      b.path_cap         = o->path_cap;
      b.v_cap            = o->v_cap;
      b.extra_rep_length = o->extra_rep_length;
      b.max_patterns     = o->max_patterns;
    }
    auto         rep = gsc::verify_axioms(p->p, b);
    ordered_json j;
    j["constants"] = gsc::constants_json(p->p.constants());
    ordered_json results = ordered_json::array();
    for (auto const& r : rep.results) {
      ordered_json x;
      x["axiom"]  = r.axiom;
      x["status"] = gsc::to_string(r.status);
      x["detail"] = r.detail;
      if (r.measured) {
        x["measured"] = gsc::to_string(*r.measured);
      }
      if (r.witness) {
        x["witness"] = witness_json(p->p, *r.witness);
      }
      results.push_back(std::move(x));
    }
    j["results"] = std::move(results);
    auto const& m = rep.measured;
    j["measured"] = {{"alpha", gsc::to_string(m.alpha)},
                     {"beta", gsc::to_string(m.beta)},
                     {"gamma", gsc::to_string(m.gamma)},
                     {"delta", gsc::to_string(m.delta)},
                     {"epsilon", gsc::to_string(m.epsilon)},
                     {"alpha_complete", m.alpha_complete},
                     {"beta_complete", m.beta_complete}};
    j["warnings"] = rep.warnings;
    j["failed"]   = rep.any_failure();
    if (failed) {
      *failed = rep.any_failure() ? 1 : 0;
    }
    put(json_out, j);
  });
}

gsc_status gsc_solve(const gsc_presentation* p, const char* word, int force, char** json_out,
                     int* trivial) {
  return guard([&] {
    need(p, "presentation");
    auto w   = word_arg(p->p, word);
    auto res = gsc::dehn_reduce(p->p, w, force != 0);
    auto const& a = p->p.alphabet();
    ordered_json j;
    j["input"]   = a.format(w);
    j["reduced"] = a.format(res.word);
    j["trivial"] = res.word.empty();
    j["verdict"] = res.word.empty() ? "trivial" : "nontrivial";
    j["forced"]  = force != 0;
    ordered_json trace = ordered_json::array();
    for (auto const& s : res.trace) {
      trace.push_back({{"position", s.position},
                       {"length", s.length},
                       {"relator", s.relator},
                       {"start", s.start},
                       {"replacement", a.format(s.replacement)},
                       {"before", s.before},
                       {"after", s.after}});
    }
    j["trace"] = std::move(trace);
    if (trivial) {
      *trivial = res.word.empty() ? 1 : 0;
    }
    put(json_out, j);
  });
}

gsc_status gsc_cayley(const gsc_presentation* p, int64_t radius, size_t cap, int force,
                      char** json_out, int* truncated) {
  return guard([&] {
    need(p, "presentation");
    if (radius < 0) {
      throw ArgumentError("radius must be nonnegative");
    }
    auto ball = gsc::cayley_ball(p->p, static_cast<std::size_t>(radius), cap, force != 0);
    auto const& a = p->p.alphabet();
    ordered_json j;
    j["radius"] = radius;
    ordered_json els = ordered_json::array();
    for (auto const& w : ball.elements) {
      els.push_back(a.format(w));
    }
    j["vertices"]  = ball.elements.size();
    j["elements"]  = std::move(els);
    ordered_json edges = ordered_json::array();
    for (auto const& e : ball.edges) {
      edges.push_back({{"from", e.from}, {"to", e.to}, {"label", a.name(e.gen)}});
    }
    j["edge_count"] = ball.edges.size();
    j["edges"]      = std::move(edges);
    j["truncated"]  = ball.truncated;
    if (truncated) {
      *truncated = ball.truncated ? 1 : 0;
    }
    put(json_out, j);
  });
}

gsc_status gsc_closure(const gsc_presentation* p, const char* seed, const char* mode, int rank,
                       const char* alpha, size_t cap, int force, char** json_out, int* closed) {
  return guard([&] {
    need(p, "presentation");
    need(mode, "mode");
    auto          w = word_arg(p->p, seed);
    std::string   m = mode;
    gsc::SeedMode sm;
    if (m == "cir") {
      sm = gsc::SeedMode::Circular;
    } else if (m == "str") {
      sm = gsc::SeedMode::Straight;
    } else {
      throw ArgumentError("mode must be cir or str");
    }
    gsc::ClosureOptions opt;
    opt.cap   = cap;
    opt.force = force != 0;
    if (alpha) {
      try {
        opt.alpha = gsc::parse_rational(alpha);
      } catch (gsc::Error const& e) {
        throw ArgumentError(std::string("bad alpha: ") + e.what());
      }
    } else if (!p->p.constants().declared) {
      throw ArgumentError("no alpha given and the presentation declares no constants");
    }
    auto const& a   = p->p.alphabet();
    auto        res = gsc::alpha_closure(p->p, w, sm, rank, opt);
    ordered_json j;
    j["seed"]      = a.format(w);
    j["mode"]      = m;
    j["rank"]      = rank;
    j["alpha"]     = gsc::to_string(opt.alpha ? *opt.alpha : p->p.constants().alpha);
    j["closed"]    = res.closed;
    j["cells"]     = counts_json(res.complex);
    j["seed_path"] = gsc::path_json(res.complex, a, res.seed_path);
    ordered_json log = ordered_json::array();
    for (auto const& at : res.log) {
      log.push_back({{"iteration", at.iteration},
                     {"relator", at.relator},
                     {"relator_vertex", at.relator_vertex},
                     {"reading", a.format(at.reading)}});
    }
    j["attachments"] = std::move(log);
    auto rep         = gsc::validate_complex(res.complex);
    j["valid"]       = rep.ok();
    if (res.closed && sm == gsc::SeedMode::Circular && rep.ok()) {
      try {
        gsc::GeneralRelator g("closure", res.complex, rank + 1, res.seed_path);
        ordered_json x;
        x["length"]                  = gsc::to_string(g.length());
        x["width"]                   = g.width();
        x["shortest_representative"] = g.shortest_representative().length();
        x["seed_graph_length"]       = gsc::to_string(gsc::graph_length(g, res.seed_path));
        j["relator"]                 = std::move(x);
      } catch (gsc::Error const& e) {
        j["relator_error"] = e.what();
      }
    }
    j["complex"] = gsc::complex_json(res.complex, a);
    if (closed) {
      *closed = res.closed ? 1 : 0;
    }
    put(json_out, j);
  });
}

void gsc_burnside_options_default(gsc_burnside_options* o) {
  if (!o) {
    return;
  }
  o->m          = 2;
  o->n          = 1260;
  o->max_len    = 2;
  o->toy        = 0;
  o->check_word = nullptr;
  o->probe      = nullptr;
  o->probe_cap  = gsc::ProbeCaps{}.attachments;
}

gsc_status gsc_burnside(const gsc_burnside_options* o, char** json_out, int* pass) {
  return guard([&] {
    need(o, "options");
    gsc::BurnsideConfig cfg;
    cfg.m   = o->m;
    cfg.n   = o->n;
    cfg.toy = o->toy != 0;
    try {
      cfg.check();
    } catch (gsc::Error const& e) {
      throw ArgumentError(e.what());
    }
    auto const   a = cfg.alphabet();
    ordered_json j;
    j["m"]           = cfg.m;
    j["n"]           = cfg.n;
    j["toy"]         = cfg.toy;
    j["constants"]   = gsc::constants_json(cfg.constants);
    j["beta_n"]      = gsc::to_string(cfg.beta_n());
    j["power_bound"] = gsc::to_string(cfg.power_bound());

    if (o->check_word) {
      gsc::Word w;
      try {
        w = a.parse(o->check_word);
      } catch (gsc::Error const& e) {
        throw ArgumentError(std::string("bad word: ") + e.what());
      }
      auto         b = gsc::build_rank2(cfg, w);
      ordered_json x;
      x["word"]     = a.format(w);
      x["accepted"] = b.relator.has_value();
      if (b.rejection) {
        x["reason"] = b.rejection->reason();
        if (b.rejection->kind == gsc::Rank2Rejection::Kind::PowerContent) {
          x["witness"] = {{"root", a.format(b.rejection->content.x)},
                          {"power", b.rejection->content.p}};
        }
      }
      j["check"] = std::move(x);
    }

    auto         rels = gsc::enumerate_rank2(cfg, o->max_len);
    ordered_json rj   = ordered_json::array();
    for (auto const& r : rels) {
      rj.push_back({{"name", r.name()},
                    {"length", r.boundary().num_edges()},
                    {"relator_length", gsc::to_string(r.length())},
                    {"width", r.width()},
                    {"automorphisms", r.automorphisms().order()}});
    }
    j["max_len"]  = o->max_len;
    j["relators"] = std::move(rj);

    auto rep = gsc::verify_cprime(rels, cfg.constants.beta);
    auto piece_json = [&](gsc::Piece const& pc) {
      return ordered_json{{"first", pc.first},
                          {"second", pc.second},
                          {"first_offset", pc.first_offset},
                          {"second_offset", pc.second_offset},
                          {"second_inverted", pc.second_inverted},
                          {"word", a.format(pc.word)},
                          {"length", pc.length},
                          {"unbounded", pc.unbounded},
                          {"limit", gsc::to_string(pc.limit)}};
    };
    ordered_json cp;
    cp["pass"]      = rep.pass;
    cp["pairs"]     = rep.pairs;
    cp["max_ratio"] = gsc::to_string(rep.max_ratio);
    if (rep.max_piece) {
      cp["max_piece"] = piece_json(*rep.max_piece);
    }
    ordered_json vs = ordered_json::array();
    for (auto const& v : rep.violations) {
      vs.push_back(piece_json(v));
    }
    cp["violations"] = std::move(vs);
    j["cprime"]      = std::move(cp);

    if (o->probe) {
      gsc::Word w;
      try {
        w = a.parse(o->probe);
      } catch (gsc::Error const& e) {
        throw ArgumentError(std::string("bad word: ") + e.what());
      }
      gsc::ProbeCaps caps;
      caps.attachments = o->probe_cap;
      auto         pr  = gsc::rank3_probe(cfg, w, caps);
      ordered_json x;
      x["root"]        = a.format(w);
      x["attachments"] = pr.closure.log.size();
      x["closed"]      = pr.closure.closed;
      x["cells"]       = counts_json(pr.closure.complex);
      x["subsumed"]    = pr.subsumed;
      if (pr.subsumed) {
        x["subsumed_by"] = pr.subsumed_by;
      }
      if (pr.candidate) {
        x["candidate"] = {{"length", gsc::to_string(pr.candidate->length())},
                          {"width", pr.candidate->width()}};
      }
      if (pr.measured) {
        x["measured"] = {{"alpha", gsc::to_string(pr.measured->alpha)},
                         {"beta", gsc::to_string(pr.measured->beta)},
                         {"gamma", gsc::to_string(pr.measured->gamma)},
                         {"delta", gsc::to_string(pr.measured->delta)},
                         {"epsilon", gsc::to_string(pr.measured->epsilon)}};
      }
      x["notes"] = pr.notes;
      j["probe"] = std::move(x);
    }
    if (pass) {
      *pass = rep.pass ? 1 : 0;
    }
    put(json_out, j);
  });
}

}  // extern "C"
