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

#include "gsc/burnside.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gsc {

  void BurnsideConfig::check() const {
    if (m < 1) {
      throw Error("burnside: need at least one generator");
    }
    if (n < 2) {
      throw Error("burnside: exponent must be at least 2");
    }
    if (n < 1260 && !toy) {
      throw Error("burnside: exponents below 1260 need toy mode");
    }
  }

  Rational BurnsideConfig::power_bound() const {
    Rational b = beta_n();
    return toy && b < Rational(6) ? Rational(6) : b;
  }

  Alphabet BurnsideConfig::alphabet() const {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) {
      names.push_back(m <= 26 ? std::string(1, static_cast<char>('a' + i))
                              : "x" + std::to_string(i + 1));
    }
    return Alphabet(names);
  }

  namespace {
    // Length of the primitive root of the cyclic word w.
    std::size_t primitive_period(Word const& w) {
      std::size_t L = w.size();
      for (std::size_t q = 1; q < L; ++q) {
        if (L % q != 0) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < L && ok; ++i) {
          ok = w[i] == w[(i + q) % L];
        }
        if (ok) {
          return q;
        }
      }
      return L;
    }

    Word cycle_word(GeneralRelator const& r) {
      auto const& c = r.boundary();
      if (r.height() != 2 || c.max_height() > 1 || c.num_vertices() != c.num_edges()
          || r.reference_loop().length() != c.num_edges()) {
        throw Error("relator " + r.name() + " is not a plain circle");
      }
      return c.label(r.reference_loop());
    }
  }  // namespace

  bool is_simple_word(Word const& w) {
    return !w.empty() && is_cyclically_reduced(w) && primitive_period(w) == w.size();
  }

  PowerContent max_power_content(Word const& w) {
    if (!is_cyclically_reduced(w)) {
      throw Error("max_power_content: word is not cyclically reduced");
    }
    PowerContent best;
    std::size_t  L = w.size();
    if (L == 0) {
      return best;
    }
    std::vector<std::size_t> run(2 * L + 1, 0);
    for (std::size_t q = 1; q <= L; ++q) {
      // run[t]: consecutive agreements of the cyclic word with its shift by q.
      run[2 * L] = 0;
      for (std::size_t t = 2 * L; t-- > 0;) {
        run[t] = w[t % L] == w[(t + q) % L] ? run[t + 1] + 1 : 0;
      }
      for (std::size_t i = 0; i < L; ++i) {
        std::size_t len = std::min(run[i] + q, L);
        auto        p   = static_cast<std::int64_t>(len / q);
        if (p > best.p) {
          best.p = p;
          best.x.clear();
          for (std::size_t k = 0; k < q; ++k) {
            best.x.push_back(w[(i + k) % L]);
          }
        }
      }
    }
    return best;
  }

  Word canonical_cyclic(Word const& w) {
    Word best = w;
    Word inv  = inverse(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      for (Word const* base : {&w, static_cast<Word const*>(&inv)}) {
        Word r = rotate(*base, k);
        if (shortlex_less(r, best)) {
          best = r;
        }
      }
    }
    return best;
  }

  std::string Rank2Rejection::reason() const {
    if (kind == Kind::NotSimple) {
      return "not_simple";
    }
    return "power_content(" + std::to_string(content.p) + ")";
  }

  std::string rank2_name(BurnsideConfig const& cfg, Word const& w) {
    return "(" + cfg.alphabet().format(w) + ")^" + std::to_string(cfg.n);
  }

  Rank2Build build_rank2(BurnsideConfig const& cfg, Word const& w) {
    cfg.check();
    if (!cfg.alphabet().valid(w)) {
      throw Error("word uses letters outside the alphabet");
    }
    Rank2Build out;
    if (!is_simple_word(w)) {
      out.rejection = Rank2Rejection{Rank2Rejection::Kind::NotSimple, {}};
      return out;
    }
    auto pc = max_power_content(w);
    if (Rational(pc.p) >= cfg.power_bound()) {
      out.rejection = Rank2Rejection{Rank2Rejection::Kind::PowerContent, pc};
      return out;
    }
    out.relator = GeneralRelator::from_word(rank2_name(cfg, w), power(w, cfg.n), 2);
    return out;
  }

  std::vector<GeneralRelator> enumerate_rank2(BurnsideConfig const& cfg, std::size_t max_len) {
    cfg.check();
    if (max_len < 1) {
      throw Error("enumerate_rank2: max_len must be at least 1");
    }
    std::vector<GeneralRelator> out;
    int  codes = 2 * cfg.m;
    Word w;
    for (std::size_t len = 1; len <= max_len; ++len) {
      // Words of this length in lexicographic letter order.
      std::vector<int> digits(len, 0);
      for (;;) {
        w.clear();
        for (auto d : digits) {
          w.push_back(Letter::from_code(d));
        }
        if (is_simple_word(w) && canonical_cyclic(w) == w) {
          auto b = build_rank2(cfg, w);
          if (b.relator) {
            out.push_back(std::move(*b.relator));
          }
        }
        std::size_t k = len;
        while (k > 0 && ++digits[k - 1] == codes) {
          digits[--k] = 0;
        }
        if (k == 0) {
          break;
        }
      }
    }
    return out;
  }

  CPrimeReport verify_cprime(std::vector<GeneralRelator> const& relators, Rational beta) {
    struct Circle {
      std::string name;
      Word        root;
      std::size_t length;
    };
    std::vector<Circle> cs;
    for (auto const& r : relators) {
      Word c = cycle_word(r);
      cs.push_back({r.name(), Word(c.begin(), c.begin() + static_cast<long>(primitive_period(c))),
                    c.size()});
    }
    CPrimeReport rep;
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = a; b < cs.size(); ++b) {
        ++rep.pairs;
        auto const& R     = cs[a];
        auto const& S     = cs[b];
        std::size_t shortest = std::min(R.length, S.length);
        Rational    limit    = beta * static_cast<std::int64_t>(shortest);
        for (bool inverted : {false, true}) {
          Word        sr = inverted ? inverse(S.root) : S.root;
          std::size_t p = R.root.size(), q = sr.size();
          // Two periodic sequences agreeing on p + q letters agree forever.
          std::size_t bound = p + q;
          for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
              if (a == b && !inverted && i == j) {
                continue;
              }
              std::size_t t = 0;
              while (t < bound && R.root[(i + t) % p] == sr[(j + t) % q]) {
                ++t;
              }
              bool unbounded = t == bound;
              if (unbounded && a == b) {
                continue;  // a rotation or reflection of the relator
              }
              if (t == 0) {
                continue;
              }
              Piece pc;
              pc.first           = R.name;
              pc.second          = S.name;
              pc.first_offset    = i;
              pc.second_offset   = j;
              pc.second_inverted = inverted;
              pc.unbounded       = unbounded;
              pc.length          = unbounded ? shortest : std::min(t, shortest);
              pc.limit           = limit;
              for (std::size_t k = 0; k < std::min<std::size_t>(pc.length, bound); ++k) {
                pc.word.push_back(R.root[(i + k) % p]);
              }
              Rational ratio = Rational(static_cast<std::int64_t>(pc.length))
                             / static_cast<std::int64_t>(shortest);
              if (!rep.max_piece || ratio > rep.max_ratio) {
                rep.max_ratio = ratio;
                rep.max_piece = pc;
              }
              if (!(Rational(static_cast<std::int64_t>(pc.length)) < limit)) {
                rep.pass = false;
                if (rep.violations.size() < 16) {
                  rep.violations.push_back(pc);
                }
              }
            }
          }
        }
      }
    }
    return rep;
  }

  ProbeResult rank3_probe(BurnsideConfig const& cfg, Word const& w, ProbeCaps const& caps) {
    cfg.check();
    if (!cfg.alphabet().valid(w) || w.empty() || !is_cyclically_reduced(w)) {
      throw Error("rank3_probe: seed root must be a nonempty cyclically reduced word");
    }
    ProbeResult res;
    std::size_t len = caps.rank2_max_len ? caps.rank2_max_len : w.size();
    res.rank2 = MeasuredPresentation(cfg.alphabet(), enumerate_rank2(cfg, len), cfg.constants);
    res.notes.push_back("exploratory: no axiom compliance is asserted for the candidate");

    ClosureOptions opt;
    opt.alpha = cfg.constants.alpha;
    opt.cap   = caps.attachments;
    opt.force = true;  // the seed w^n is read in its own relator when w is admissible
    res.closure = alpha_closure(res.rank2, power(w, cfg.n), SeedMode::Circular, 2, opt);

    auto const& c = res.closure.complex;
    std::set<CellId> seed_edges;
    for (auto const& s : res.closure.seed_path.steps) {
      seed_edges.insert(s.edge);
    }
    for (CellId x = 0; x < static_cast<CellId>(c.size()) && !res.subsumed; ++x) {
      if (c.cell(x).height != 2) {
        continue;
      }
      auto ideal = c.ideal(x);
      if (std::includes(ideal.begin(), ideal.end(), seed_edges.begin(), seed_edges.end())) {
        res.subsumed    = true;
        res.subsumed_by = c.cell(x).tag;
      }
    }
    if (res.subsumed) {
      res.notes.push_back("seed loop lies in an attached copy of " + res.subsumed_by);
      return res;
    }
    if (!res.closure.closed) {
      res.notes.push_back("attachment cap reached");
      return res;
    }
    try {
      res.candidate.emplace("candidate", c, 3, res.closure.seed_path);
      auto rels = res.rank2.relators();
      rels.push_back(*res.candidate);
      MeasuredPresentation with(cfg.alphabet(), rels, cfg.constants);
      res.measured = measure_constants(with);
    } catch (Error const& e) {
      res.notes.push_back(std::string("candidate rejected: ") + e.what());
    }
    return res;
  }

}  // namespace gsc
