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

// gsc command line tool. Talks to the library only through gsc.h.

#include "gsc/gsc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

  using json = nlohmann::ordered_json;

  constexpr int kOk       = 0;
  constexpr int kNegative = 1;
  constexpr int kFailure  = 2;
  constexpr int kCap      = 3;
  constexpr int kUsage    = 64;

  struct CliError {
    int         code;
    std::string message;
  };

  int status_code(gsc_status s) {
    return s == GSC_ERR_ARGUMENT ? kUsage : kFailure;
  }

  void check(gsc_status s) {
    if (s != GSC_OK) {
      throw CliError{status_code(s), gsc_last_error()};
    }
  }

  struct Owned {
    char* s = nullptr;
    ~Owned() {
      gsc_string_free(s);
    }
    std::string str() const {
      return s ? std::string(s) : std::string();
    }
    json parse() const {
      return json::parse(str());
    }
  };

  using Handle = std::unique_ptr<gsc_presentation, decltype(&gsc_presentation_free)>;

  std::string read_input(std::string const& path) {
    if (path.empty() || path == "-") {
      return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw CliError{kUsage, "cannot open " + path};
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  Handle load(std::string const& path) {
    gsc_presentation* p = nullptr;
    check(gsc_presentation_parse(read_input(path).c_str(), &p));
    return Handle(p, &gsc_presentation_free);
  }

  std::size_t default_cap(std::size_t fallback) {
    if (char const* env = std::getenv("GSC_DEFAULT_CAP")) {
      try {
        std::size_t used = 0;
        auto        v    = std::stoull(env, &used);
        if (used == std::string(env).size()) {
          return static_cast<std::size_t>(v);
        }
      } catch (std::exception const&) {
      }
      throw CliError{kUsage, "GSC_DEFAULT_CAP must be a nonnegative integer"};
    }
    return fallback;
  }

  std::string s(json const& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
  }

  std::string counts(json const& c) {
    std::string out;
    for (auto it = c.begin(); it != c.end(); ++it) {
      out += (out.empty() ? "" : " ") + it.key() + ":" + s(it.value());
    }
    return out;
  }

  void print_geometry(json const& g) {
    std::cout << "relator " << s(g["relator"]) << "\n"
              << "rank " << s(g["rank"]) << "\n"
              << "height " << s(g["height"]) << "\n"
              << "cells " << counts(g["cells"]) << "\n"
              << "length " << s(g["length"]) << "\n"
              << "length_witness start " << s(g["length_witness"]["start"]) << " length "
              << s(g["length_witness"]["length"]) << " winding "
              << s(g["length_witness"]["winding"]) << " word "
              << s(g["length_witness"]["word"]) << "\n"
              << "width " << s(g["width"]) << "\n"
              << "shortest_representative " << s(g["shortest_representative"]["length"])
              << " word " << s(g["shortest_representative"]["word"]) << "\n"
              << "reference " << s(g["reference"]) << " graph_length "
              << s(g["reference_graph_length"]) << "\n"
              << "automorphisms " << s(g["automorphisms"]["order"]) << " orientation_reversing "
              << s(g["automorphisms"]["orientation_reversing"]) << "\n";
    for (auto const& b : g["ball_removal"]) {
      std::cout << "ball center " << s(g["ball_center"]) << " radius " << s(b["radius"])
                << " removed_vertices " << s(b["removed_vertices"]) << " removed_edges "
                << s(b["removed_edges"]) << " components " << s(b["components"])
                << " ends_separated " << s(b["ends_separated"]) << "\n";
    }
  }

  struct Common {
    std::string input;
    std::string format = "text";
  };

  void add_common(CLI::App* sub, Common& c, bool with_input = true) {
    if (with_input) {
      sub->add_option("file", c.input, "presentation file ('-' or omitted: stdin)");
    }
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }

  void emit_json(json const& j) {
    std::cout << j.dump(2) << "\n";
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gsc: general small cancellation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gsc_version()));

  Common c;

  auto* validate = app.add_subcommand("validate", "parse and validate a presentation");
  add_common(validate, c);

  std::optional<std::string> relator;
  auto* geometry = app.add_subcommand("geometry", "length, width and shortest representative");
  add_common(geometry, c);
  geometry->add_option("--relator", relator, "relator name (default: all)");

  std::string relator_req, path;
  std::int64_t start = -1;
  auto* metric = app.add_subcommand("metric", "graph metric of a path in a relator");
  add_common(metric, c);
  metric->add_option("--relator", relator_req, "relator name")->required();
  metric->add_option("--path", path, "word read from the start vertex")->required();
  metric->add_option("--start", start, "start vertex (default: base vertex)");

  gsc_axiom_options ax;
  gsc_axiom_options_default(&ax);
  auto* axioms = app.add_subcommand("axioms", "verify the axioms and measure constants");
  add_common(axioms, c);
  axioms->add_option("--path-cap", ax.path_cap, "overlap search path cap (0: automatic)");
  axioms->add_option("--v-cap", ax.v_cap, "self-overlap word cap");
  axioms->add_option("--extra-rep-length", ax.extra_rep_length,
                     "representatives longer than the shortest by at most this");

  std::string word;
  bool        force = false;
  auto* solve = app.add_subcommand("solve", "decide whether a word is trivial");
  add_common(solve, c);
  solve->add_option("--word", word, "word to reduce")->required();
  solve->add_flag("--force", force, "run even when the solver precondition fails");

  std::int64_t                radius = 0;
  std::optional<std::size_t>  cap;
  auto* cayley = app.add_subcommand("cayley", "ball in the Cayley graph");
  add_common(cayley, c);
  cayley->add_option("--radius", radius, "radius")->required()->check(CLI::NonNegativeNumber);
  cayley->add_option("--cap", cap, "element cap");
  cayley->add_flag("--force", force, "run even when the solver precondition fails");

  std::string                seed, mode = "cir";
  int                        rank = 2;
  std::optional<std::string> alpha;
  auto* closure = app.add_subcommand("closure", "alpha-closure of a seed word");
  add_common(closure, c);
  closure->add_option("--seed", seed, "seed word")->required();
  closure->add_option("--mode", mode, "cir or str")->check(CLI::IsMember({"cir", "str"}));
  closure->add_option("--rank", rank, "rank bound")->check(CLI::PositiveNumber);
  closure->add_option("--alpha", alpha, "threshold p/q (default: declared alpha)");
  closure->add_option("--cap", cap, "attachment cap");
  closure->add_flag("--force", force, "skip the seed reducedness check");

  gsc_burnside_options bo;
  gsc_burnside_options_default(&bo);
  std::optional<std::string> check_word, probe;
  bool                       toy = false;
  auto* burnside = app.add_subcommand("burnside", "rank-2 Burnside relators and C'(beta)");
  add_common(burnside, c, false);
  burnside->add_option("--m", bo.m, "generators")->check(CLI::PositiveNumber);
  burnside->add_option("--n", bo.n, "exponent");
  burnside->add_option("--max-len", bo.max_len, "longest root word")->check(CLI::PositiveNumber);
  burnside->add_flag("--toy", toy, "allow exponents below 1260 (exploratory)");
  burnside->add_option("--check-word", check_word, "run one word through the filter");
  burnside->add_option("--probe", probe, "closure probe of root^n at rank 3");
  burnside->add_option("--probe-cap", cap, "probe attachment cap");

  std::string example_name;
  auto* example = app.add_subcommand("example", "print a built-in presentation");
  example->add_option("name", example_name, "example name (omit to list)");

  bool dot = false, as_json = false;
  auto* exp = app.add_subcommand("export", "export a presentation as DOT or JSON");
  exp->add_option("file", c.input, "presentation file ('-' or omitted: stdin)");
  auto* g = exp->add_option_group("format");
  g->add_flag("--dot", dot, "Graphviz DOT");
  g->add_flag("--json", as_json, "JSON");
  g->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  bool text = c.format == "text";
  try {
    if (*validate) {
      auto  p  = load(c.input);
      Owned o;
      int   ok = 0;
      check(gsc_validate(p.get(), &o.s, &ok));
      auto j = o.parse();
      if (text) {
        for (auto const& r : j["relators"]) {
          std::cout << s(r["name"]) << " rank " << s(r["rank"]) << " height " << s(r["height"])
                    << " counts " << counts(r["height_counts"]) << " "
                    << (r["valid"].get<bool>() ? "valid" : "invalid") << "\n";
          for (auto const& i : r["issues"]) {
            std::cout << "  issue " << s(i["what"]) << " cells " << i["cells"].dump() << "\n";
          }
        }
        std::cout << (ok ? "valid" : "invalid") << "\n";
      } else {
        emit_json(j);
      }
      return ok ? kOk : kFailure;
    }

    if (*geometry) {
      auto p = load(c.input);
      json all = json::array();
      std::vector<std::string> names;
      if (relator) {
        names.push_back(*relator);
      } else {
        Owned o;
        check(gsc_presentation_export(p.get(), "json", &o.s));
        for (auto const& r : o.parse()["relators"]) {
          names.push_back(s(r["name"]));
        }
      }
      for (auto const& n : names) {
        Owned o;
        check(gsc_geometry(p.get(), n.c_str(), &o.s));
        all.push_back(o.parse());
      }
      if (text) {
        for (std::size_t i = 0; i < all.size(); ++i) {
          if (i) {
            std::cout << "\n";
          }
          print_geometry(all[i]);
        }
      } else {
        emit_json(relator ? all[0] : all);
      }
      return kOk;
    }

    if (*metric) {
      auto  p = load(c.input);
      Owned o;
      check(gsc_metric(p.get(), relator_req.c_str(), path.c_str(), start, &o.s));
      auto j = o.parse();
      if (text) {
        std::cout << "relator " << s(j["relator"]) << "\n"
                  << "path " << s(j["path"]["word"]) << " from " << s(j["path"]["start"])
                  << " to " << s(j["path"]["end"]) << "\n"
                  << "winding " << s(j["winding"]) << "\n"
                  << "geodesic_length " << s(j["geodesic_length"]) << "\n"
                  << "relator_length " << s(j["relator_length"]) << "\n"
                  << "graph_length " << s(j["graph_length"]) << "\n";
      } else {
        emit_json(j);
      }
      return kOk;
    }

    if (*axioms) {
      auto  p      = load(c.input);
      Owned o;
      int   failed = 0;
      check(gsc_axioms(p.get(), &ax, &o.s, &failed));
      auto j = o.parse();
      if (text) {
        for (auto const& r : j["results"]) {
          std::cout << "axiom " << s(r["axiom"]) << " " << s(r["status"]);
          if (r.contains("measured")) {
            std::cout << " measured " << s(r["measured"]);
          }
          std::cout << " : " << s(r["detail"]) << "\n";
          if (r.contains("witness")) {
            auto const& w = r["witness"];
            std::cout << "  witness";
            for (auto const& n : w["relators"]) {
              std::cout << " " << s(n);
            }
            for (auto const& pth : w["paths"]) {
              if (pth.contains("word")) {
                std::cout << " path " << s(pth["word"]);
              }
            }
            for (auto const& v : w["values"]) {
              std::cout << " " << s(v);
            }
            if (!w["note"].get<std::string>().empty()) {
              std::cout << " (" << s(w["note"]) << ")";
            }
            std::cout << "\n";
          }
        }
        auto const& m = j["measured"];
        std::cout << "measured alpha " << s(m["alpha"]) << " beta " << s(m["beta"]) << " gamma "
                  << s(m["gamma"]) << " delta " << s(m["delta"]) << " epsilon "
                  << s(m["epsilon"]) << "\n";
        for (auto const& w : j["warnings"]) {
          std::cout << "warning " << s(w) << "\n";
        }
        std::cout << (failed ? "fail" : "pass") << "\n";
      } else {
        emit_json(j);
      }
      return failed ? kFailure : kOk;
    }

    if (*solve) {
      auto  p       = load(c.input);
      Owned o;
      int   trivial = 0;
      check(gsc_solve(p.get(), word.c_str(), force ? 1 : 0, &o.s, &trivial));
      auto j = o.parse();
      if (text) {
        for (auto const& st : j["trace"]) {
          std::cout << "step " << s(st["relator"]) << " at " << s(st["position"]) << " length "
                    << s(st["length"]) << " -> " << s(st["replacement"]) << " ("
                    << s(st["before"]) << " -> " << s(st["after"]) << ")\n";
        }
        std::string red = s(j["reduced"]);
        std::cout << "reduced " << (red.empty() ? "1" : red) << "\n"
                  << "verdict " << s(j["verdict"]) << "\n";
      } else {
        emit_json(j);
      }
      return trivial ? kOk : kNegative;
    }

    if (*cayley) {
      auto  p = load(c.input);
      Owned o;
      int   truncated = 0;
      check(gsc_cayley(p.get(), radius, cap.value_or(default_cap(100000)), force ? 1 : 0, &o.s,
                       &truncated));
      auto j = o.parse();
      if (text) {
        std::cout << "radius " << s(j["radius"]) << "\n"
                  << "vertices " << s(j["vertices"]) << "\n"
                  << "edges " << s(j["edge_count"]) << "\n"
                  << "truncated " << s(j["truncated"]) << "\n";
      } else {
        emit_json(j);
      }
      return truncated ? kCap : kOk;
    }

    if (*closure) {
      auto  p      = load(c.input);
      Owned o;
      int   closed = 0;
      check(gsc_closure(p.get(), seed.c_str(), mode.c_str(), rank,
                        alpha ? alpha->c_str() : nullptr, cap.value_or(default_cap(10000)),
                        force ? 1 : 0, &o.s, &closed));
      auto j = o.parse();
      if (text) {
        for (auto const& a : j["attachments"]) {
          std::cout << "attach " << s(a["relator"]) << " at " << s(a["relator_vertex"])
                    << " reading " << s(a["reading"]) << "\n";
        }
        std::cout << "cells " << counts(j["cells"]) << "\n"
                  << "valid " << s(j["valid"]) << "\n"
                  << "closed " << s(j["closed"]) << "\n";
        if (j.contains("relator")) {
          auto const& r = j["relator"];
          std::cout << "length " << s(r["length"]) << "\n"
                    << "width " << s(r["width"]) << "\n"
                    << "shortest_representative " << s(r["shortest_representative"]) << "\n"
                    << "seed_graph_length " << s(r["seed_graph_length"]) << "\n";
        }
      } else {
        emit_json(j);
      }
      return closed ? kOk : kCap;
    }

    if (*burnside) {
      bo.toy        = toy ? 1 : 0;
      bo.check_word = check_word ? check_word->c_str() : nullptr;
      bo.probe      = probe ? probe->c_str() : nullptr;
      bo.probe_cap  = cap.value_or(default_cap(bo.probe_cap));
      Owned o;
      int   pass = 0;
      check(gsc_burnside(&bo, &o.s, &pass));
      auto j = o.parse();
      bool rejected = j.contains("check") && !j["check"]["accepted"].get<bool>();
      bool capped   = j.contains("probe") && !j["probe"]["closed"].get<bool>()
                    && !j["probe"]["subsumed"].get<bool>();
      if (text) {
        std::cout << "m " << s(j["m"]) << " n " << s(j["n"]) << " beta_n " << s(j["beta_n"])
                  << " power_bound " << s(j["power_bound"]) << "\n";
        for (auto const& r : j["relators"]) {
          std::cout << "relator " << s(r["name"]) << " length " << s(r["length"]) << " width "
                    << s(r["width"]) << " automorphisms " << s(r["automorphisms"]) << "\n";
        }
        auto const& cp = j["cprime"];
        std::cout << "cprime " << (cp["pass"].get<bool>() ? "pass" : "fail") << " pairs "
                  << s(cp["pairs"]) << " max_ratio " << s(cp["max_ratio"]);
        if (cp.contains("max_piece")) {
          std::cout << " max_piece " << s(cp["max_piece"]["word"]) << " ("
                    << s(cp["max_piece"]["first"]) << ", " << s(cp["max_piece"]["second"])
                    << ")";
        }
        std::cout << "\n";
        if (j.contains("check")) {
          auto const& k = j["check"];
          std::cout << "check " << s(k["word"]) << " "
                    << (k["accepted"].get<bool>() ? "accepted" : "rejected " + s(k["reason"]));
          if (k.contains("witness")) {
            std::cout << " witness (" << s(k["witness"]["root"]) << ")^"
                      << s(k["witness"]["power"]);
          }
          std::cout << "\n";
        }
        if (j.contains("probe")) {
          auto const& pr = j["probe"];
          std::cout << "probe " << s(pr["root"]) << " attachments " << s(pr["attachments"])
                    << " closed " << s(pr["closed"]) << " subsumed " << s(pr["subsumed"]);
          if (pr.contains("subsumed_by")) {
            std::cout << " by " << s(pr["subsumed_by"]);
          }
          std::cout << "\n";
          for (auto const& n : pr["notes"]) {
            std::cout << "  note " << s(n) << "\n";
          }
        }
      } else {
        emit_json(j);
      }
      if (!pass) {
        return kFailure;
      }
      return capped ? kCap : rejected ? kNegative : kOk;
    }

    if (*example) {
      if (example_name.empty()) {
        Owned o;
        check(gsc_example_names(&o.s));
        for (auto const& n : o.parse()) {
          std::cout << s(n) << "\n";
        }
        return kOk;
      }
      gsc_presentation* raw = nullptr;
      check(gsc_presentation_example(example_name.c_str(), &raw));
      Handle p(raw, &gsc_presentation_free);
      Owned  o;
      check(gsc_presentation_serialize(p.get(), &o.s));
      std::cout << o.str();
      return kOk;
    }

    if (*exp) {
      auto  p = load(c.input);
      Owned o;
      check(gsc_presentation_export(p.get(), dot ? "dot" : "json", &o.s));
      std::cout << o.str();
      return kOk;
    }
  } catch (CliError const& e) {
    std::cerr << "gsc: " << e.message << "\n";
    return e.code;
  } catch (std::exception const& e) {
    std::cerr << "gsc: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
