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

#include "heights/rational.hpp"

#include <charconv>

#include "heights/errors.hpp"

namespace heights {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view s) {
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw ParseError("malformed rational '" + std::string(s) + "'", 1, 1);
        return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    const auto den = parse_int(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    return Rational(parse_int(s.substr(0, slash)), den);
}

Rational power_of(std::uint64_t p, std::int64_t k) {
    std::int64_t m = 1;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) m *= static_cast<std::int64_t>(p);
    return k < 0 ? Rational(1, m) : Rational(m);
}

bool is_power_of(const Rational& r, std::uint64_t p) {
    if (r <= Rational(0)) return false;
    const auto ip = static_cast<std::int64_t>(p);
    auto pure = [&](std::int64_t v) {
        while (v % ip == 0) v /= ip;
        return v == 1;
    };
    // In lowest terms at most one side carries the p-power.
    return pure(r.numerator()) && pure(r.denominator());
}

}  // namespace heights
