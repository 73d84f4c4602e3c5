// Copyright 2026 The pfcond authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <stdexcept>
#include <string>

namespace pfcond {

/// Exact arithmetic scalars. Everything in this library is computed over
/// arbitrary-precision integers or rationals; there is no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

template <typename R>
concept exact_ring = std::same_as<R, Int> || std::same_as<R, Rat>;

inline Rat to_rational(const Int& x) { return Rat(x); }
inline const Rat& to_rational(const Rat& x) { return x; }

/// Conversion back from an exact rational. For Int the value must be an
/// integer; otherwise the computation produced a genuinely fractional result
/// and the caller's ring was too small.
template <exact_ring R>
R from_rational(const Rat& x);

template <>
inline Int from_rational<Int>(const Rat& x) {
  if (denominator(x) != 1)
    throw std::domain_error("from_rational: value " + x.str() +
                            " is not an integer");
  return numerator(x);
}

template <>
inline Rat from_rational<Rat>(const Rat& x) {
  return x;
}

/// Canonical text form: integers in decimal, rationals as "p/q" with the
/// "/q" omitted when q == 1. This is the form used by all file formats.
inline std::string ring_str(const Int& x) { return x.str(); }

inline std::string ring_str(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

namespace detail {
inline Int parse_decimal_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad number: " + s);
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("bad number: " + s);
  return Int(s);
}
}  // namespace detail

template <exact_ring R>
R parse_ring(const std::string& s);

template <>
inline Int parse_ring<Int>(const std::string& s) {
  if (s.find('/') != std::string::npos)
    throw std::invalid_argument("integer weight expected, got rational: " + s);
  return detail::parse_decimal_int(s);
}

template <>
inline Rat parse_ring<Rat>(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(detail::parse_decimal_int(s));
  Int num = detail::parse_decimal_int(s.substr(0, slash));
  Int den = detail::parse_decimal_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(num, den);
}

}  // namespace pfcond
