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

#include "heights/division_polynomial.hpp"

#include <map>

#include "heights/errors.hpp"

namespace heights {

XPoly::XPoly(PrimeField field, std::vector<RatFunc> coeffs) : field_(field), coeffs_(std::move(coeffs)) { trim(); }

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatFunc XPoly::eval(const RatFunc& x) const {
    RatFunc r(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    std::vector<RatFunc> c(std::max(a.coeffs_.size(), b.coeffs_.size()), RatFunc(a.field_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return XPoly(a.field_, std::move(c));
}

XPoly operator-(const XPoly& a, const XPoly& b) {
    std::vector<RatFunc> c(std::max(a.coeffs_.size(), b.coeffs_.size()), RatFunc(a.field_));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return XPoly(a.field_, std::move(c));
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly(a.field_);
    std::vector<RatFunc> c(a.coeffs_.size() + b.coeffs_.size() - 1, RatFunc(a.field_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return XPoly(a.field_, std::move(c));
}

namespace {

// g_n = psi_n for odd n and psi_n / psi_2 for even n; all lie in K[x].
class ReducedDivisionPolys {
  public:
    explicit ReducedDivisionPolys(const EllipticCurve& E) : E_(E) {
        const auto& f = E.field();
        auto c = [&](std::int64_t k) { return RatFunc::constant(f, k); };
        F_ = XPoly(f, {E.b6(), E.b4().scaled(2), E.b2(), c(4)});
        g_.emplace(0, XPoly(f));
        g_.emplace(1, XPoly(f, {c(1)}));
        g_.emplace(2, XPoly(f, {c(1)}));
        g_.emplace(3, XPoly(f, {E.b8(), E.b6().scaled(3), E.b4().scaled(3), E.b2(), c(3)}));
        g_.emplace(4, XPoly(f, {E.b4() * E.b8() - E.b6() * E.b6(), E.b2() * E.b8() - E.b4() * E.b6(),
                                E.b8().scaled(10), E.b6().scaled(10), E.b4().scaled(5), E.b2(), c(2)}));
    }

    const XPoly& F() const { return F_; }

    const XPoly& g(std::uint64_t n) {
        if (auto it = g_.find(n); it != g_.end()) return it->second;
        XPoly value(E_.field());
        const std::uint64_t m = n / 2;
        if (n % 2 == 1) {
            const XPoly F2 = F_ * F_;
            const XPoly a = g(m + 2) * g(m) * g(m) * g(m);
            const XPoly b = g(m - 1) * g(m + 1) * g(m + 1) * g(m + 1);
            value = (m % 2 == 0) ? F2 * a - b : a - F2 * b;
        } else {
            value = g(m) * (g(m + 2) * g(m - 1) * g(m - 1) - g(m - 2) * g(m + 1) * g(m + 1));
        }
        return g_.emplace(n, std::move(value)).first->second;
    }

  private:
    EllipticCurve E_;
    XPoly F_{E_.field()};
    std::map<std::uint64_t, XPoly> g_;
};

}  // namespace

XPoly division_polynomial(const EllipticCurve& E, std::uint64_t n) {
    if (n == 0) throw Error(ErrorKind::BadOrder, "division polynomial index must be positive");
    ReducedDivisionPolys d(E);
    if (n % 2 == 1) return d.g(n);
    return d.g(n) * d.F();
}

}  // namespace heights
