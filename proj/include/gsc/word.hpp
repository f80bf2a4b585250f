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

#ifndef GSC_WORD_HPP_
#define GSC_WORD_HPP_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsc {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A signed generator letter. Letters are ordered a < a^-1 < b < b^-1 < ...
  struct Letter {
    int  gen     = 0;
    bool inverse = false;

    constexpr Letter inv() const noexcept {
      return Letter{gen, !inverse};
    }
    constexpr int sign() const noexcept {
      return inverse ? -1 : 1;
    }
    // Dense code 2*gen + inverse; used for table lookups.
    constexpr int code() const noexcept {
      return 2 * gen + (inverse ? 1 : 0);
    }
    static constexpr Letter from_code(int c) noexcept {
      return Letter{c / 2, (c % 2) != 0};
    }
    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter a, Letter b) noexcept {
      return a.code() <=> b.code();
    }
  };

  using Word = std::vector<Letter>;

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(int gen) const {
      return _names.at(static_cast<std::size_t>(gen));
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    // -1 if absent.
    int index(std::string_view name) const;

    // Grammar: factor* where factor = (name | '(' word ')') ['^' int].
    // Whitespace, '*' and '.' separate factors; "1" or "" is the empty word.
    Word parse(std::string_view text) const;
    std::string format(Word const& w) const;

    bool valid(Word const& w) const noexcept;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::vector<std::string> _names;
    bool                     _single_char = true;
  };

  Word inverse(Word const& w);
  Word power(Word const& w, long long k);
  Word concat(Word const& a, Word const& b);

  // Unique freely reduced form.
  Word free_reduce(Word const& w);

  bool is_freely_reduced(Word const& w) noexcept;
  bool is_cyclically_reduced(Word const& w) noexcept;

  struct CyclicReduction {
    Word core;
    Word conjugator;
  };
  // w freely equals conjugator * core * conjugator^-1.
  CyclicReduction cyclic_reduce(Word const& w);

  Word rotate(Word const& w, std::size_t k);

  // Shortlex comparison (length first, then letter order).
  bool shortlex_less(Word const& a, Word const& b);

}  // namespace gsc

#endif  // GSC_WORD_HPP_
