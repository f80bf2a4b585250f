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

#include "gsc/word.hpp"

#include "gsc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace gsc {

  std::string to_string(Rational const& q) {
    if (q.denominator() == 1) {
      return std::to_string(q.numerator());
    }
    return std::to_string(q.numerator()) + "/"
           + std::to_string(q.denominator());
  }

  namespace {
    std::int64_t parse_int(std::string_view s) {
      std::int64_t v     = 0;
      auto const*  first = s.data();
      if (!s.empty() && s.front() == '+') {
        ++first;
      }
      auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("malformed integer '" + std::string(s)
                                    + "'");
      }
      return v;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text));
    }
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text)
                                  + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
  }

  std::int64_t ceil(Rational const& q) {
    auto n = q.numerator();
    auto d = q.denominator();
    auto f = n / d;
    if (n % d != 0 && n > 0) {
      ++f;
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    std::set<std::string> seen;
    for (auto const& n : _names) {
      if (n.empty()) {
        throw Error("generator names must be nonempty");
      }
      if (!seen.insert(n).second) {
        throw Error("duplicate generator name '" + n + "'");
      }
      for (char c : n) {
        if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_'
            && !std::isdigit(static_cast<unsigned char>(c))) {
          throw Error("generator name '" + n
                      + "' may only contain letters, digits and '_'");
        }
      }
      if (!std::isalpha(static_cast<unsigned char>(n.front()))) {
        throw Error("generator name '" + n + "' must start with a letter");
      }
      _single_char = _single_char && n.size() == 1;
    }
  }

  int Alphabet::index(std::string_view name) const {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return static_cast<int>(i);
      }
    }
    return -1;
  }

  bool Alphabet::valid(Word const& w) const noexcept {
    return std::all_of(w.begin(), w.end(), [this](Letter x) {
      return x.gen >= 0 && static_cast<std::size_t>(x.gen) < _names.size();
    });
  }

  namespace {
    struct WordParser {
      Alphabet const&  alphabet;
      std::string_view text;
      std::size_t      pos = 0;

      [[noreturn]] void fail(std::string const& what) const {
        throw Error("word syntax error at column " + std::to_string(pos + 1)
                    + ": " + what + " in '" + std::string(text) + "'");
      }

      void skip() {
        while (pos < text.size()
               && (std::isspace(static_cast<unsigned char>(text[pos]))
                   || text[pos] == '*' || text[pos] == '.')) {
          ++pos;
        }
      }

      long long exponent() {
        skip();
        if (pos >= text.size() || text[pos] != '^') {
          return 1;
        }
        ++pos;
        skip();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
          ++pos;
        }
        while (pos < text.size()
               && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        try {
          return parse_int(text.substr(start, pos - start));
        } catch (std::invalid_argument const&) {
          fail("expected integer exponent");
        }
      }

      Word sequence(bool nested) {
        Word out;
        while (true) {
          skip();
          if (pos >= text.size()) {
            if (nested) {
              fail("unbalanced '('");
            }
            return out;
          }
          char c = text[pos];
          if (c == ')') {
            if (!nested) {
              fail("unexpected ')'");
            }
            return out;
          }
          Word factor;
          if (c == '(') {
            ++pos;
            factor = sequence(true);
            ++pos;  // ')'
          } else if (c == '1') {
            ++pos;
          } else {
            std::size_t best = 0;
            int         gen  = -1;
            for (std::size_t g = 0; g < alphabet.size(); ++g) {
              auto const& n = alphabet.name(static_cast<int>(g));
              if (n.size() > best && text.substr(pos, n.size()) == n) {
                best = n.size();
                gen  = static_cast<int>(g);
              }
            }
            if (gen < 0) {
              fail("unknown generator");
            }
            pos += best;
            factor.push_back(Letter{gen, false});
          }
          auto e = exponent();
          auto p = power(factor, e);
          out.insert(out.end(), p.begin(), p.end());
        }
      }
    };
  }  // namespace

  Word Alphabet::parse(std::string_view text) const {
    WordParser parser{*this, text};
    return parser.sequence(false);
  }

  std::string Alphabet::format(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!_single_char && i > 0) {
        out += '.';
      }
      out += name(w[i].gen);
      if (w[i].inverse) {
        out += "^-1";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free group operations
  ////////////////////////////////////////////////////////////////////////

  Word inverse(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inv());
    }
    return out;
  }

  Word power(Word const& w, long long k) {
    Word base = k < 0 ? inverse(w) : w;
    Word out;
    auto n = static_cast<std::size_t>(k < 0 ? -k : k);
    out.reserve(base.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  Word concat(Word const& a, Word const& b) {
    Word out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }

  Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto x : w) {
      if (!out.empty() && out.back() == x.inv()) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_freely_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inv()) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& w) noexcept {
    return is_freely_reduced(w)
           && (w.size() < 2 || w.front() != w.back().inv());
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    Word        r = free_reduce(w);
    std::size_t i = 0;
    std::size_t j = r.size();
    while (j - i >= 2 && r[i] == r[j - 1].inv()) {
      ++i;
      --j;
    }
    return CyclicReduction{Word(r.begin() + static_cast<std::ptrdiff_t>(i),
                                r.begin() + static_cast<std::ptrdiff_t>(j)),
                           Word(r.begin(),
                                r.begin() + static_cast<std::ptrdiff_t>(i))};
  }

  Word rotate(Word const& w, std::size_t k) {
    if (w.empty()) {
      return w;
    }
    k %= w.size();
    Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
  }

  bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

}  // namespace gsc
