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
#include <string>

#include "heights/elliptic_curve.hpp"

namespace heights {

/// Default search bound for torsion orders: 2 p^2 + 20, unless overridden.
std::uint64_t default_torsion_bound(const PrimeField& field);
/// Process-wide override of the default bound; nullopt restores 2 p^2 + 20.
void set_torsion_bound_override(std::optional<std::uint64_t> bound);

/// A K-rational point of an elliptic curve, affine or the point at infinity.
class CurvePoint {
  public:
    static CurvePoint infinity(const EllipticCurve& E) { return CurvePoint(E); }
    /// Throws NotOnCurve unless (x, y) satisfies the Weierstrass equation.
    static CurvePoint affine(const EllipticCurve& E, RatFunc x, RatFunc y);

    const EllipticCurve& curve() const noexcept { return curve_; }
    bool is_infinity() const noexcept { return !x_.has_value(); }
    const RatFunc& x() const;
    const RatFunc& y() const;

    CurvePoint operator-() const;
    CurvePoint operator+(const CurvePoint& rhs) const;
    CurvePoint operator-(const CurvePoint& rhs) const { return *this + (-rhs); }
    CurvePoint& operator+=(const CurvePoint& rhs) { return *this = *this + rhs; }
    /// [n]P for any integer n.
    CurvePoint multiple(std::int64_t n) const;

    std::string to_string() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) noexcept {
        return a.curve_ == b.curve_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    /// Coordinate order, for use in ordered containers of points on one curve.
    friend bool operator<(const CurvePoint& a, const CurvePoint& b) noexcept {
        if (a.x_ != b.x_) return a.x_ < b.x_;
        return a.y_ < b.y_;
    }

  private:
    explicit CurvePoint(EllipticCurve E) : curve_(std::move(E)) {}
    CurvePoint(EllipticCurve E, RatFunc x, RatFunc y) : curve_(std::move(E)), x_(std::move(x)), y_(std::move(y)) {}

    EllipticCurve curve_;
    std::optional<RatFunc> x_, y_;
};

/// Exact order of P by repeated addition; throws NotTorsionWithinBound past `bound`.
std::uint64_t point_order(const CurvePoint& P, std::uint64_t bound);
std::uint64_t point_order(const CurvePoint& P);

}  // namespace heights
