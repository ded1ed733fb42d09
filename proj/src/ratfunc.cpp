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

#include "heights/ratfunc.hpp"

#include <algorithm>

#include "heights/errors.hpp"

namespace heights {

RatFunc RatFunc::normalize(Poly num, Poly den) {
    if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) return RatFunc(den.field());
    const Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = num / g;
        den = den / g;
    }
    const auto li = den.field().inv(den.leading());
    return RatFunc(num.scaled(li), den.scaled(li), 0);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

// Henrici's method: with g = gcd(b, d), only g can share factors with the new
// numerator, so the full gcd is avoided.
RatFunc RatFunc::add_signed(const RatFunc& x, const RatFunc& y, bool subtract) {
    const Poly &a = x.num_, &b = x.den_, &c = y.num_, &d = y.den_;
    const Poly g = gcd(b, d);
    const bool coprime = g.is_constant();
    const Poly bg = coprime ? b : b / g, dg = coprime ? d : d / g;
    Poly n = subtract ? a * dg - c * bg : a * dg + c * bg;
    if (n.is_zero()) return RatFunc(x.field());
    Poly den = b * dg;
    if (!coprime) {
        const Poly h = gcd(n, g);
        if (!h.is_constant()) {
            n = n / h;
            den = den / h;
        }
    }
    return RatFunc(std::move(n), std::move(den), 0);  // b, d monic, so den is monic
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) { return *this = add_signed(*this, rhs, false); }

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this = add_signed(*this, rhs, true); }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
    if (is_zero() || rhs.is_zero()) return *this = RatFunc(field());
    // Cross-cancel first so the products stay reduced-size.
    const Poly g1 = gcd(num_, rhs.den_);
    const Poly g2 = gcd(rhs.num_, den_);
    Poly n = (num_ / g1) * (rhs.num_ / g2);
    Poly d = (den_ / g2) * (rhs.den_ / g1);
    const auto li = d.field().inv(d.leading());
    return *this = RatFunc(n.scaled(li), d.scaled(li), 0);
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

RatFunc RatFunc::scaled(std::int64_t c) const {
    const auto k = field().reduce(c);
    if (k == 0) return RatFunc(field());
    return RatFunc(num_.scaled(k), den_, 0);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of the zero function");
    const auto li = field().inv(num_.leading());
    return RatFunc(den_.scaled(li), num_.scaled(li), 0);
}

RatFunc RatFunc::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    const auto ue = static_cast<std::uint64_t>(e);
    if (is_zero()) return e == 0 ? constant(field(), 1) : *this;
    // Coprime parts stay coprime under powers, and a monic denominator stays monic.
    return RatFunc(num_.pow(ue), den_.pow(ue), 0);
}

RatFunc RatFunc::frobenius() const { return RatFunc(num_.frobenius(), den_.frobenius(), 0); }

std::optional<RatFunc> RatFunc::pth_root() const {
    auto n = num_.pth_root();
    auto d = den_.pth_root();
    if (!n || !d) return std::nullopt;
    return RatFunc(std::move(*n), std::move(*d), 0);
}

RatFunc RatFunc::compose(const RatFunc& g) const {
    auto horner = [&](const Poly& f) {
        RatFunc r(field());
        const auto c = f.coefficients();
        for (std::size_t i = c.size(); i-- > 0;) r = r * g + RatFunc(Poly(field(), {c[i]}));
        return r;
    };
    return horner(num_) / horner(den_);
}

std::string RatFunc::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    auto wrap = [](const Poly& q) {
        const auto s = q.to_string();
        const bool atomic = s.find('+') == std::string::npos;
        return atomic ? s : "(" + s + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::uint64_t weil_height(const RatFunc& f) {
    if (f.is_constant()) return 0;
    return std::max(f.num().deg(), f.den().deg());
}

}  // namespace heights
