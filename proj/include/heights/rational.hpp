/*
   Copyright 2026 The heights Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace heights {

using Rational = boost::rational<std::int64_t>;

/// "10/3", or "4" when the denominator is 1.
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view s);

/// p^k for any integer k, as an exact rational.
Rational power_of(std::uint64_t p, std::int64_t k);
/// True iff r = p^k for some integer k (r must be positive).
bool is_power_of(const Rational& r, std::uint64_t p);

}  // namespace heights
