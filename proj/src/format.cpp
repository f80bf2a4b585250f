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

#include "gsc/format.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace gsc {

  namespace {
    struct Token {
      std::string text;
      std::size_t col = 1;
    };

    std::vector<Token> tokenize(std::string_view line, std::size_t col0 = 1) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i > start) {
          out.push_back(Token{std::string(line.substr(start, i - start)), col0 + start});
        }
      }
      return out;
    }

    std::optional<std::pair<std::string, std::string>> key_value(std::string const& t) {
      auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) {
        return std::nullopt;
      }
      return std::make_pair(t.substr(0, eq), t.substr(eq + 1));
    }

    long long parse_int(Token const& t, std::string const& text, std::size_t line) {
      long long v   = 0;
      auto      res = std::from_chars(text.data(), text.data() + text.size(), v);
      if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ParseError(line, t.col, "expected an integer, got '" + text + "'");
      }
      return v;
    }

    struct CellLine {
      std::size_t        line;
      std::vector<Token> tokens;
    };

    struct AttachLine {
      std::size_t line;
      std::size_t col;
      std::string sub;
      std::string along;
      long long   offset;
    };

    struct Draft {
      std::string             name;
      std::size_t             line = 0;
      std::optional<int>      rank;
      std::optional<Token>    word;
      std::optional<Token>    cycle;
      std::vector<AttachLine> attachments;
      bool                    cells_mode = false;
      std::vector<CellLine>   cells;
      std::optional<Token>    base;
      std::optional<Token>    ref;
      std::size_t             base_line = 0;
      std::size_t             ref_line  = 0;
      std::size_t             word_line = 0;
    };

    Word parse_word_at(Alphabet const& a, Token const& t, std::size_t line) {
      try {
        return a.parse(t.text);
      } catch (std::exception const& e) {
        throw ParseError(line, t.col, e.what());
      }
    }

    GeneralRelator build_cells(Draft const& d, Alphabet const& a) {
      LabeledComplex             c;
      std::map<long long, CellId> ids;
      auto lookup = [&](Token const& t, std::size_t line) {
        auto it = ids.find(parse_int(t, t.text, line));
        if (it == ids.end()) {
          throw ParseError(line, t.col, "unknown cell id " + t.text);
        }
        return it->second;
      };
      auto declare = [&](Token const& t, std::size_t line, CellId internal) {
        if (!ids.emplace(parse_int(t, t.text, line), internal).second) {
          throw ParseError(line, t.col, "duplicate cell id " + t.text);
        }
      };
      for (auto const& cl : d.cells) {
        auto const& tk   = cl.tokens;
        auto const& kind = tk[0].text;
        if (kind == "vertex") {
          if (tk.size() != 2) {
            throw ParseError(cl.line, tk[0].col, "expected: vertex <id>");
          }
          // Validate the id before creating the cell.
          parse_int(tk[1], tk[1].text, cl.line);
          if (ids.contains(parse_int(tk[1], tk[1].text, cl.line))) {
            throw ParseError(cl.line, tk[1].col, "duplicate cell id " + tk[1].text);
          }
          declare(tk[1], cl.line, c.add_vertex());
        } else if (kind == "edge") {
          if (tk.size() != 5) {
            throw ParseError(cl.line, tk[0].col, "expected: edge <id> <from> <to> label=<gen>");
          }
          auto kv = key_value(tk[4].text);
          if (!kv || kv->first != "label") {
            throw ParseError(cl.line, tk[4].col, "expected label=<generator>");
          }
          auto gen = a.index(kv->second);
          if (gen < 0) {
            throw ParseError(cl.line, tk[4].col, "unknown generator '" + kv->second + "'");
          }
          auto from = lookup(tk[2], cl.line);
          auto to   = lookup(tk[3], cl.line);
          if (!c.is_vertex(from) || !c.is_vertex(to)) {
            throw ParseError(cl.line, tk[2].col, "edge endpoints must be vertices");
          }
          if (ids.contains(parse_int(tk[1], tk[1].text, cl.line))) {
            throw ParseError(cl.line, tk[1].col, "duplicate cell id " + tk[1].text);
          }
          declare(tk[1], cl.line, c.add_edge(from, to, gen));
        } else if (kind == "cone") {
          if (tk.size() < 4 || tk[2].text != "over") {
            throw ParseError(cl.line, tk[0].col, "expected: cone <id> over <ids...>");
          }
          std::vector<CellId> covers;
          std::string         tag;
          std::optional<int>  height;
          for (std::size_t i = 3; i < tk.size(); ++i) {
            if (auto kv = key_value(tk[i].text)) {
              if (kv->first == "tag") {
                tag = kv->second;
              } else if (kv->first == "height") {
                height = static_cast<int>(parse_int(tk[i], kv->second, cl.line));
              } else {
                throw ParseError(cl.line, tk[i].col, "unknown cone attribute '" + kv->first + "'");
              }
            } else {
              covers.push_back(lookup(tk[i], cl.line));
            }
          }
          if (covers.empty()) {
            throw ParseError(cl.line, tk[0].col, "cone covers nothing");
          }
          if (ids.contains(parse_int(tk[1], tk[1].text, cl.line))) {
            throw ParseError(cl.line, tk[1].col, "duplicate cell id " + tk[1].text);
          }
          CellId id = -1;
          try {
            id = height ? c.add_cell_with_height(*height, covers, tag)
                        : c.add_cell(covers, tag);
          } catch (Error const& e) {
            throw ParseError(cl.line, tk[0].col, e.what());
          }
          declare(tk[1], cl.line, id);
        } else {
          throw ParseError(cl.line, tk[0].col, "unknown cell kind '" + kind + "'");
        }
      }
      std::optional<PathInComplex> ref;
      if (d.ref) {
        CellId base = c.vertices().empty() ? -1 : c.vertices().front();
        if (d.base) {
          base = lookup(*d.base, d.base_line);
          if (!c.is_vertex(base)) {
            throw ParseError(d.base_line, d.base->col, "base must be a vertex");
          }
        }
        auto        w      = parse_word_at(a, *d.ref, d.ref_line);
        std::size_t failed = 0;
        ref                = trace_word(c, base, w, &failed);
        if (!ref) {
          throw ParseError(d.ref_line, d.ref->col,
                           "reference word is not readable from the base vertex (letter "
                               + std::to_string(failed + 1) + ")");
        }
      } else if (d.base) {
        throw ParseError(d.base_line, d.base->col, "base= needs a ref= word");
      }
      return GeneralRelator(d.name, std::move(c), d.rank, ref);
    }

    bool is_plain_circle(GeneralRelator const& r) {
      auto const& b = r.boundary();
      if (b.max_height() > 1 || b.num_vertices() != b.num_edges()) {
        return false;
      }
      for (auto v : b.vertices()) {
        std::size_t degree = 0;
        for (auto e : b.incident(v)) {
          degree += b.from(e) == b.to(e) ? 2 : 1;
        }
        if (degree != 2) {
          return false;
        }
      }
      return r.reference_loop().length() == b.num_edges();
    }

    // Word as a power of its primitive root, e.g. (ab)^4.
    std::string format_power(Alphabet const& a, Word const& w) {
      auto n = w.size();
      for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) {
          continue;
        }
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) {
          periodic = w[i] == w[i - p];
        }
        if (periodic) {
          Word root(w.begin(), w.begin() + static_cast<long>(p));
          return "(" + a.format(root) + ")^" + std::to_string(n / p);
        }
      }
      return a.format(w);
    }
  }  // namespace

  MeasuredPresentation parse_presentation(std::string_view text) {
    enum class Section { None, Generators, Constants, Relator };
    Section                     section = Section::None;
    std::vector<std::string>    gens;
    bool                        have_gens = false;
    std::size_t                 gens_line = 0;
    Alphabet                    alphabet;
    Constants                   k;
    std::vector<GeneralRelator> rels;
    std::optional<Draft>        draft;

    auto ensure_alphabet = [&](std::size_t line) {
      if (!have_gens) {
        throw ParseError(line, 1, "relators need a preceding [generators] section");
      }
      if (alphabet.size() == 0) {
        try {
          alphabet = Alphabet(gens);
        } catch (std::exception const& e) {
          throw ParseError(gens_line, 1, e.what());
        }
      }
    };

    auto finish = [&]() {
      if (!draft) {
        return;
      }
      auto& d     = *draft;
      int   kinds = (d.word ? 1 : 0) + (d.cycle ? 1 : 0) + (d.cells_mode ? 1 : 0);
      if (kinds != 1) {
        throw ParseError(d.line, 1, "relator " + d.name
                                        + " needs exactly one of word=, cycle= or cells:");
      }
      if (!d.attachments.empty() && !d.cycle) {
        throw ParseError(d.attachments.front().line, 1, "attach lines need a cycle=");
      }
      if ((d.ref || d.base) && !d.cells_mode) {
        throw ParseError(d.ref ? d.ref_line : d.base_line, 1,
                         "base= and ref= are only used with cells:");
      }
      for (auto const& r : rels) {
        if (r.name() == d.name) {
          throw ParseError(d.line, 1, "duplicate relator name " + d.name);
        }
      }
      try {
        if (d.word) {
          rels.push_back(GeneralRelator::from_word(
              d.name, parse_word_at(alphabet, *d.word, d.word_line), d.rank));
        } else if (d.cycle) {
          std::vector<Attachment> at;
          for (auto const& al : d.attachments) {
            if (al.offset < 0) {
              throw ParseError(al.line, al.col, "offset must be nonnegative");
            }
            Word w;
            try {
              w = alphabet.parse(al.along);
            } catch (std::exception const& e) {
              throw ParseError(al.line, al.col, e.what());
            }
            at.push_back(Attachment{al.sub, w, static_cast<std::size_t>(al.offset)});
          }
          rels.push_back(composite_relator(
              d.name, parse_word_at(alphabet, *d.cycle, d.word_line), at, rels, d.rank));
        } else {
          rels.push_back(build_cells(d, alphabet));
        }
      } catch (ParseError const&) {
        throw;
      } catch (std::exception const& e) {
        throw ParseError(d.line, 1, e.what());
      }
      draft.reset();
    };

    std::size_t lineno = 0;
    std::size_t pos    = 0;
    while (pos <= text.size()) {
      auto nl   = text.find('\n', pos);
      auto raw  = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      pos       = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++lineno;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      if (!raw.empty() && raw.back() == '\r') {
        raw.remove_suffix(1);
      }
      auto tokens = tokenize(raw);
      if (tokens.empty()) {
        continue;
      }
      if (tokens[0].text.front() == '[') {
        auto open  = raw.find('[');
        auto close = raw.find(']');
        if (close == std::string_view::npos) {
          throw ParseError(lineno, open + 1, "missing ']'");
        }
        finish();
        auto head = tokenize(raw.substr(open + 1, close - open - 1), open + 2);
        auto rest = tokenize(raw.substr(close + 1), close + 2);
        if (head.empty()) {
          throw ParseError(lineno, open + 1, "empty section header");
        }
        if (head[0].text == "generators") {
          if (have_gens) {
            throw ParseError(lineno, head[0].col, "duplicate [generators] section");
          }
          section   = Section::Generators;
          have_gens = true;
          gens_line = lineno;
          tokens    = rest;
        } else if (head[0].text == "constants") {
          section    = Section::Constants;
          k.declared = true;
          tokens     = rest;
        } else if (head[0].text == "relator") {
          if (head.size() < 2 || key_value(head[1].text)) {
            throw ParseError(lineno, head[0].col, "relator section needs a name");
          }
          ensure_alphabet(lineno);
          section = Section::Relator;
          draft   = Draft{};
          draft->name = head[1].text;
          draft->line = lineno;
          for (std::size_t i = 2; i < head.size(); ++i) {
            auto kv = key_value(head[i].text);
            if (!kv) {
              throw ParseError(lineno, head[i].col, "expected key=value");
            }
            if (kv->first == "rank") {
              draft->rank = static_cast<int>(parse_int(head[i], kv->second, lineno));
            } else if (kv->first == "metric") {
              if (kv->second != "graph") {
                throw ParseError(lineno, head[i].col,
                                 "unsupported metric '" + kv->second + "' (only graph)");
              }
            } else {
              throw ParseError(lineno, head[i].col, "unknown relator attribute '" + kv->first + "'");
            }
          }
          if (!rest.empty()) {
            throw ParseError(lineno, rest[0].col, "unexpected text after relator header");
          }
          continue;
        } else {
          throw ParseError(lineno, head[0].col, "unknown section '" + head[0].text + "'");
        }
      }

      switch (section) {
        case Section::None:
          throw ParseError(lineno, tokens[0].col, "text outside of any section");
        case Section::Generators:
          for (auto const& t : tokens) {
            gens.push_back(t.text);
          }
          break;
        case Section::Constants:
          for (auto const& t : tokens) {
            auto kv = key_value(t.text);
            if (!kv) {
              throw ParseError(lineno, t.col, "expected key=value");
            }
            try {
              if (kv->first == "n") {
                k.n = parse_int(t, kv->second, lineno);
                continue;
              }
              auto q = parse_rational(kv->second);
              if (kv->first == "alpha") {
                k.alpha = q;
              } else if (kv->first == "beta") {
                k.beta = q;
              } else if (kv->first == "gamma") {
                k.gamma = q;
              } else if (kv->first == "delta") {
                k.delta = q;
              } else if (kv->first == "epsilon") {
                k.epsilon = q;
              } else {
                throw ParseError(lineno, t.col, "unknown constant '" + kv->first + "'");
              }
              if (q < 0) {
                throw ParseError(lineno, t.col, "constants must be nonnegative");
              }
            } catch (ParseError const&) {
              throw;
            } catch (std::exception const& e) {
              throw ParseError(lineno, t.col, std::string("bad rational: ") + e.what());
            }
          }
          break;
        case Section::Relator: {
          auto& d     = *draft;
          auto  first = tokens[0];
          auto  after = [&](std::size_t skip) {
            auto start = first.col - 1 + skip;
            return Token{std::string(raw.substr(start)), start + 1};
          };
          if (d.cells_mode && !first.text.starts_with("base=")
              && !first.text.starts_with("ref=")) {
            d.cells.push_back(CellLine{lineno, tokens});
          } else if (first.text.starts_with("word=")) {
            d.word      = after(5);
            d.word_line = lineno;
          } else if (first.text.starts_with("cycle=")) {
            d.cycle     = after(6);
            d.word_line = lineno;
          } else if (first.text == "attach") {
            std::size_t at = 0;
            for (std::size_t i = 3; i < tokens.size(); ++i) {
              if (tokens[i].text == "at") {
                at = i;
              }
            }
            if (tokens.size() < 6 || tokens[2].text != "along" || at == 0
                || at + 2 != tokens.size()) {
              throw ParseError(lineno, first.col,
                               "expected: attach <relator> along <word> at <offset>");
            }
            std::string along;
            for (std::size_t i = 3; i < at; ++i) {
              along += tokens[i].text + " ";
            }
            d.attachments.push_back(AttachLine{lineno, tokens[3].col, tokens[1].text, along,
                                               parse_int(tokens[at + 1], tokens[at + 1].text,
                                                         lineno)});
          } else if (first.text == "cells:") {
            d.cells_mode = true;
            if (tokens.size() > 1) {
              throw ParseError(lineno, tokens[1].col, "unexpected text after cells:");
            }
          } else if (first.text.starts_with("base=")) {
            d.base      = Token{first.text.substr(5), first.col + 5};
            d.base_line = lineno;
          } else if (first.text.starts_with("ref=")) {
            d.ref      = after(4);
            d.ref_line = lineno;
          } else {
            throw ParseError(lineno, first.col, "unexpected '" + first.text + "' in relator section");
          }
          break;
        }
      }
    }
    finish();
    if (!have_gens) {
      throw ParseError(lineno, 1, "missing [generators] section");
    }
    if (alphabet.size() == 0) {
      try {
        alphabet = Alphabet(gens);
      } catch (std::exception const& e) {
        throw ParseError(gens_line, 1, e.what());
      }
    }
    return MeasuredPresentation(alphabet, std::move(rels), k);
  }

  std::string serialize(MeasuredPresentation const& p) {
    std::ostringstream out;
    auto const&        a = p.alphabet();
    out << "[generators]";
    for (auto const& n : a.names()) {
      out << ' ' << n;
    }
    out << '\n';
    auto const& k = p.constants();
    if (k.declared) {
      out << "[constants] alpha=" << to_string(k.alpha) << " beta=" << to_string(k.beta)
          << " gamma=" << to_string(k.gamma) << " delta=" << to_string(k.delta)
          << " epsilon=" << to_string(k.epsilon) << " n=" << k.n << '\n';
    }
    for (auto const& r : p.relators()) {
      out << "[relator " << r.name() << " rank=" << r.rank() << " metric=graph]\n";
      auto const& b = r.boundary();
      if (is_plain_circle(r)) {
        out << "word=" << format_power(a, b.label(r.reference_loop())) << '\n';
        continue;
      }
      out << "cells:\n";
      for (std::size_t i = 0; i < b.size(); ++i) {
        auto const& cell = b.cell(static_cast<CellId>(i));
        if (cell.height == 0) {
          out << "vertex " << i << '\n';
        } else if (cell.height == 1) {
          out << "edge " << i << ' ' << cell.covers[0] << ' ' << cell.covers[1]
              << " label=" << a.name(cell.gen) << '\n';
        } else {
          out << "cone " << i << " over";
          for (auto q : cell.covers) {
            out << ' ' << q;
          }
          if (!cell.tag.empty()) {
            out << " tag=" << cell.tag;
          }
          out << " height=" << cell.height << '\n';
        }
      }
      out << "base=" << r.reference_loop().start << '\n';
      out << "ref=" << a.format(b.label(r.reference_loop())) << '\n';
    }
    return out.str();
  }

  std::string export_dot(LabeledComplex const& c, Alphabet const& a,
                         std::string const& name) {
    std::ostringstream out;
    out << "digraph \"" << name << "\" {\n";
    for (auto v : c.vertices()) {
      out << "  v" << v << " [shape=circle,label=\"" << v << "\"];\n";
    }
    for (auto e : c.edges()) {
      out << "  v" << c.from(e) << " -> v" << c.to(e) << " [label=\"" << a.name(c.label(e))
          << "\",id=\"e" << e << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string export_dot(MeasuredPresentation const& p) {
    std::ostringstream out;
    for (auto const& r : p.relators()) {
      out << export_dot(r.boundary(), p.alphabet(), r.name());
    }
    return out.str();
  }

  nlohmann::ordered_json complex_json(LabeledComplex const& c, Alphabet const& a) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    std::map<int, std::size_t> counts;
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto const&            cell = c.cell(static_cast<CellId>(i));
      nlohmann::ordered_json j;
      j["id"]     = i;
      j["height"] = cell.height;
      j["covers"] = cell.covers;
      if (cell.height == 1) {
        j["label"] = a.name(cell.gen);
      }
      if (!cell.tag.empty()) {
        j["tag"] = cell.tag;
      }
      cells.push_back(std::move(j));
      ++counts[cell.height];
    }
    nlohmann::ordered_json out;
    out["cells"] = std::move(cells);
    nlohmann::ordered_json hc = nlohmann::ordered_json::object();
    for (auto const& [h, n] : counts) {
      hc[std::to_string(h)] = n;
    }
    out["height_counts"] = std::move(hc);
    return out;
  }

  nlohmann::ordered_json path_json(LabeledComplex const& c, Alphabet const& a,
                                   PathInComplex const& p) {
    nlohmann::ordered_json j;
    j["start"] = p.start;
    j["end"]   = p.end;
    j["word"]  = a.format(c.label(p));
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (auto s : p.steps) {
      steps.push_back({{"edge", s.edge}, {"forward", s.forward}});
    }
    j["steps"] = std::move(steps);
    return j;
  }

  nlohmann::ordered_json constants_json(Constants const& k) {
    nlohmann::ordered_json j;
    j["alpha"]    = to_string(k.alpha);
    j["beta"]     = to_string(k.beta);
    j["gamma"]    = to_string(k.gamma);
    j["delta"]    = to_string(k.delta);
    j["epsilon"]  = to_string(k.epsilon);
    j["n"]        = std::to_string(k.n);
    j["declared"] = k.declared;
    return j;
  }

  nlohmann::ordered_json presentation_json(MeasuredPresentation const& p) {
    nlohmann::ordered_json j;
    j["generators"] = p.alphabet().names();
    j["constants"]  = constants_json(p.constants());
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (auto const& r : p.relators()) {
      nlohmann::ordered_json x;
      x["name"]      = r.name();
      x["rank"]      = r.rank();
      x["height"]    = r.height();
      x["metric"]    = "graph";
      x["base"]      = r.base_vertex();
      x["reference"] = p.alphabet().format(r.boundary().label(r.reference_loop()));
      x["apex"]      = r.apex();
      x["boundary"]  = complex_json(r.boundary(), p.alphabet());
      rels.push_back(std::move(x));
    }
    j["relators"] = std::move(rels);
    return j;
  }

}  // namespace gsc
