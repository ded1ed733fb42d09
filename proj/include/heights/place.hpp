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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heights/ratfunc.hpp"

namespace heights {

/// A closed point of P^1 over F_p: a monic irreducible polynomial, or infinity.
class Place {
  public:
    static Place infinity() { return Place(); }
    /// Throws if pi is not monic and irreducible.
    static Place finite(Poly pi);
    /// For polynomials already known to be monic irreducible (factor_poly output).
    static Place finite_unchecked(Poly pi) { return Place(std::move(pi)); }

    bool is_infinity() const noexcept { return !pi_.has_value(); }
    /// The monic irreducible of a finite place.
    const Poly& polynomial() const;
    std::size_t degree() const noexcept { return pi_ ? pi_->deg() : 1; }
    std::string to_string() const { return pi_ ? pi_->to_string() : "inf"; }

    friend bool operator==(const Place&, const Place&) = default;
    /// Finite places by (degree, coefficients), then infinity.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() <=> b.is_infinity();
        return *a.pi_ <=> *b.pi_;
    }

  private:
    Place() = default;
    explicit Place(Poly pi) : pi_(std::move(pi)) {}

    std::optional<Poly> pi_;
};

/// A finite formal sum of places with nonzero integer multiplicities.
class Divisor {
  public:
    using Terms = std::map<Place, std::int64_t>;

    Divisor() = default;

    void add(const Place& v, std::int64_t multiplicity);
    std::int64_t multiplicity(const Place& v) const;
    std::int64_t degree() const;
    bool empty() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }

    Divisor& operator+=(const Divisor& rhs);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }

    /// e.g. "2(t) + 10(inf)"; "0" when empty.
    std::string to_string() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;

  private:
    Terms terms_;
};

/// Square-free, distinct-degree, then equal-degree splitting. Factors are
/// monic, pairwise distinct, and returned in Place order.
std::vector<std::pair<Poly, std::uint32_t>> factor_poly(const Poly& f);
bool is_irreducible(const Poly& f);

/// Order of vanishing of a nonzero f at v; throws ZeroFunction on 0.
std::int64_t valuation(const RatFunc& f, const Place& v);
/// Uniformizer at v: pi for finite places, 1/t at infinity.
RatFunc uniformizer(const Place& v, const PrimeField& field);
/// Principal divisor of a nonzero f.
Divisor divisor_of(const RatFunc& f);
/// Places where f has a zero or pole, infinity included if v_inf(f) != 0.
std::vector<Place> support(const RatFunc& f);

}  // namespace heights
