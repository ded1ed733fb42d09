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
#include <string>

#include "heights/poly.hpp"

namespace heights {

/// An element of K = F_p(t), kept in canonical form: coprime numerator and
/// monic denominator. Two RatFuncs are equal iff their representations are.
class RatFunc {
  public:
    explicit RatFunc(PrimeField field) : num_(field), den_(Poly::constant(field, 1)) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}  // NOLINT(implicit)

    /// Reduces num/den; throws ZeroDenominator if den = 0.
    static RatFunc normalize(Poly num, Poly den);
    static RatFunc constant(PrimeField field, std::int64_t c) { return RatFunc(Poly::constant(field, c)); }
    static RatFunc variable(PrimeField field) { return RatFunc(Poly::variable(field)); }

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    const PrimeField& field() const noexcept { return num_.field(); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// The constant value, for constant functions.
    PrimeField::Element constant_value() const noexcept { return num_.coeff(0); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc scaled(std::int64_t c) const;
    /// Throws ZeroDenominator on zero.
    RatFunc inverse() const;
    /// Integer powers; negative exponents need a nonzero base.
    RatFunc pow(std::int64_t e) const;
    /// f -> f^p.
    RatFunc frobenius() const;
    /// The p-th root, if f lies in F_p(t^p).
    std::optional<RatFunc> pth_root() const;
    /// f(g(t)).
    RatFunc compose(const RatFunc& g) const;

    std::string to_string() const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;
    friend std::strong_ordering operator<=>(const RatFunc& a, const RatFunc& b) noexcept {
        if (auto c = a.num_ <=> b.num_; c != 0) return c;
        return a.den_ <=> b.den_;
    }

  private:
    RatFunc(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
    static RatFunc add_signed(const RatFunc& x, const RatFunc& y, bool subtract);

    Poly num_;
    Poly den_;
};

/// Degree of f viewed as a map P^1 -> P^1: 0 for constants, otherwise
/// max(deg num, deg den).
std::uint64_t weil_height(const RatFunc& f);

}  // namespace heights
