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

#ifndef GSC_RATIONAL_HPP_
#define GSC_RATIONAL_HPP_

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gsc {

  // All metric quantities are exact; nothing in the core uses floating point.
  using Rational = boost::rational<std::int64_t>;

  // Integers print bare ("6"), everything else as "p/q".
  std::string to_string(Rational const& q);

  // Accepts "p/q", "p" and a leading sign. Throws std::invalid_argument.
  Rational parse_rational(std::string_view text);

  // Smallest integer k with k >= q.
  std::int64_t ceil(Rational const& q);

  // boost's mixed int/rational operator== recurses forever under C++20's
  // reversed-candidate rules. These exact matches win overload resolution.
  inline bool operator==(Rational const& a, int b) { return a == Rational(b); }
  inline bool operator==(Rational const& a, std::int64_t b) { return a == Rational(b); }

}  // namespace gsc

#endif  // GSC_RATIONAL_HPP_
