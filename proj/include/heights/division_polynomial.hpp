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
#include <vector>

#include "heights/elliptic_curve.hpp"

namespace heights {

/// Polynomial in x with coefficients in K = F_p(t), lowest degree first.
class XPoly {
  public:
    explicit XPoly(PrimeField field) : field_(field) {}
    XPoly(PrimeField field, std::vector<RatFunc> coeffs);

    const std::vector<RatFunc>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    RatFunc coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : RatFunc(field_); }
    RatFunc eval(const RatFunc& x) const;

    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    friend bool operator==(const XPoly&, const XPoly&) = default;

  private:
    void trim();

    PrimeField field_;
    std::vector<RatFunc> coeffs_;
};

/// A polynomial in x vanishing exactly at the x-coordinates of the nonzero
/// n-torsion: psi_n for odd n, and psi_n * psi_2 (a polynomial in x) for even n.
/// For n = 2 this is psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
XPoly division_polynomial(const EllipticCurve& E, std::uint64_t n);

}  // namespace heights
