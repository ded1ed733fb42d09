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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace heights {

/// The prime field F_p with p >= 5. Elements are plain canonical residues in [0, p).
class PrimeField {
  public:
    using Element = std::uint64_t;

    /// Throws UnsupportedCharacteristic unless p is a prime >= 5 below 2^31.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }

    Element reduce(std::int64_t v) const noexcept {
        auto m = static_cast<std::int64_t>(p_);
        auto r = v % m;
        return static_cast<Element>(r < 0 ? r + m : r);
    }
    Element add(Element a, Element b) const noexcept {
        auto s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept { return (a * b) % p_; }
    Element pow(Element a, std::uint64_t e) const noexcept;
    /// Inverse of a nonzero element (Fermat).
    Element inv(Element a) const;
    /// Square root if a is a square, by exhaustive search for small p and Tonelli-Shanks otherwise.
    std::optional<Element> sqrt(Element a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

  private:
    std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense univariate polynomial over F_p in the variable t, lowest degree first.
class Poly {
  public:
    using Element = PrimeField::Element;

    explicit Poly(PrimeField field) : field_(field) {}
    Poly(PrimeField field, std::vector<Element> coeffs);

    static Poly constant(PrimeField field, std::int64_t c);
    static Poly monomial(PrimeField field, Element c, std::size_t degree);
    static Poly variable(PrimeField field) { return monomial(field, 1, 1); }
    /// Coefficients given as signed integers, lowest degree first; reduced mod p.
    static Poly from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs);

    const PrimeField& field() const noexcept { return field_; }
    std::span<const Element> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    /// Degree of a polynomial known to be nonzero.
    std::size_t deg() const;
    Element coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Element leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly scaled(Element c) const;
    Poly shifted(std::size_t k) const;  // multiply by t^k

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);

    /// Euclidean division; throws ZeroPolynomial when dividing by zero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator/(const Poly& divisor) const { return divmod(divisor).first; }
    Poly operator%(const Poly& divisor) const { return divmod(divisor).second; }
    bool divisible_by(const Poly& divisor) const { return divmod(divisor).second.is_zero(); }

    Poly monic() const;
    Poly derivative() const;
    Poly pow(std::uint64_t e) const;
    Element eval(Element x) const noexcept;
    /// f(t) -> f(t^p), which equals f^p over F_p.
    Poly frobenius() const;
    /// The g with g(t^p) = f(t), if f only involves exponents divisible by p.
    std::optional<Poly> pth_root() const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    /// Degree first, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

  private:
    void trim() noexcept;
    void require_same_field(const Poly& other) const;

    PrimeField field_;
    std::vector<Element> coeffs_;
};

Poly gcd(Poly a, Poly b);
/// Monic gcd together with Bezout cofactors: s*a + r*b = g.
struct ExtendedGcd {
    Poly g, s, r;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);
/// (base^e) mod modulus.
Poly powmod(Poly base, std::uint64_t e, const Poly& modulus);

}  // namespace heights
