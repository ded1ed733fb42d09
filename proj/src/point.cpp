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

#include "heights/point.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <optional>
#include <vector>

#include "heights/errors.hpp"
#include "heights/place.hpp"

namespace heights {

namespace {
std::atomic<std::uint64_t> bound_override{0};
}

std::uint64_t default_torsion_bound(const PrimeField& field) {
    if (const auto b = bound_override.load()) return b;
    return 2 * field.p() * field.p() + 20;
}

void set_torsion_bound_override(std::optional<std::uint64_t> bound) {
    if (bound && *bound == 0) throw std::invalid_argument("torsion bound must be positive");
    bound_override.store(bound.value_or(0));
}

CurvePoint CurvePoint::affine(const EllipticCurve& E, RatFunc x, RatFunc y) {
    if (!E.equation(x, y).is_zero())
        throw Error(ErrorKind::NotOnCurve, "(" + x.to_string() + ", " + y.to_string() + ") is not on " + E.to_string());
    return CurvePoint(E, std::move(x), std::move(y));
}

const RatFunc& CurvePoint::x() const {
    if (!x_) throw Error(ErrorKind::NotFinitePoint, "the point at infinity has no coordinates");
    return *x_;
}

const RatFunc& CurvePoint::y() const {
    if (!y_) throw Error(ErrorKind::NotFinitePoint, "the point at infinity has no coordinates");
    return *y_;
}

CurvePoint CurvePoint::operator-() const {
    if (is_infinity()) return *this;
    return CurvePoint(curve_, *x_, -*y_ - curve_.a1() * *x_ - curve_.a3());
}

CurvePoint CurvePoint::operator+(const CurvePoint& rhs) const {
    if (!(curve_ == rhs.curve_)) throw Error(ErrorKind::CurveMismatch, "adding points on different curves");
    if (is_infinity()) return rhs;
    if (rhs.is_infinity()) return *this;
    const auto& E = curve_;
    const RatFunc &x1 = *x_, &y1 = *y_, &x2 = *rhs.x_, &y2 = *rhs.y_;
    RatFunc lambda(E.field()), nu(E.field());
    if (x1 == x2) {
        const RatFunc denom = y1.scaled(2) + E.a1() * x1 + E.a3();
        if (y1 + y2 + E.a1() * x2 + E.a3() == RatFunc(E.field())) return infinity(E);
        lambda = ((x1 * x1).scaled(3) + (E.a2() * x1).scaled(2) + E.a4() - E.a1() * y1) / denom;
        nu = (-(x1 * x1 * x1) + E.a4() * x1 + E.a6().scaled(2) - E.a3() * y1) / denom;
    } else {
        const RatFunc dx = x2 - x1;
        lambda = (y2 - y1) / dx;
        nu = (y1 * x2 - y2 * x1) / dx;
    }
    RatFunc x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
    RatFunc y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
    return CurvePoint(E, std::move(x3), std::move(y3));
}

CurvePoint CurvePoint::multiple(std::int64_t n) const {
    if (n < 0) return (-*this).multiple(-n);
    CurvePoint result = infinity(curve_), base = *this;
    auto k = static_cast<std::uint64_t>(n);
    while (k) {
        if (k & 1) result += base;
        k >>= 1;
        if (k) base += base;
    }
    return result;
}

std::string CurvePoint::to_string() const {
    if (is_infinity()) return "O";
    return "(" + x_->to_string() + ", " + y_->to_string() + ")";
}

namespace {

// Arithmetic in F_p[t]/(pi) for a monic irreducible pi.
struct ResidueField {
    Poly pi;

    Poly reduce(const Poly& a) const { return a % pi; }
    Poly mul(const Poly& a, const Poly& b) const { return (a * b) % pi; }
    Poly inv(const Poly& a) const { return extended_gcd(a, pi).s % pi; }
    Poly of(const RatFunc& f) const { return mul(reduce(f.num()), inv(reduce(f.den()))); }
};

struct ReducedPoint {
    bool infinity;
    Poly x, y;
};

// The reduction of E at a place of good reduction, in long Weierstrass form.
struct ReducedCurve {
    ResidueField k;
    std::vector<Poly> a;

    ReducedPoint add(const ReducedPoint& P, const ReducedPoint& Q) const {
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        const Poly &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3], &a6 = a[4];
        Poly lambda(k.pi.field()), nu(k.pi.field());
        if (P.x == Q.x) {
            const Poly denom = k.reduce(P.y.scaled(2) + k.mul(a1, P.x) + a3);
            if (k.reduce(P.y + Q.y + k.mul(a1, Q.x) + a3).is_zero()) return {true, P.x, P.y};
            const Poly inv = k.inv(denom);
            const Poly x2 = k.mul(P.x, P.x);
            lambda = k.mul(k.reduce(x2.scaled(3) + k.mul(a2, P.x).scaled(2) + a4 - k.mul(a1, P.y)), inv);
            nu = k.mul(k.reduce(-k.mul(x2, P.x) + k.mul(a4, P.x) + a6.scaled(2) - k.mul(a3, P.y)), inv);
        } else {
            const Poly inv = k.inv(k.reduce(Q.x - P.x));
            lambda = k.mul(k.reduce(Q.y - P.y), inv);
            nu = k.mul(k.reduce(k.mul(P.y, Q.x) - k.mul(Q.y, P.x)), inv);
        }
        Poly x3 = k.reduce(k.mul(lambda, lambda) + k.mul(a1, lambda) - a2 - P.x - Q.x);
        Poly y3 = k.reduce(-k.mul(lambda + a1, x3) - nu - a3);
        return {false, std::move(x3), std::move(y3)};
    }
};

bool integral_at(const RatFunc& f, const Poly& pi) { return !f.den().divisible_by(pi); }

// Places of good reduction for E, smallest degree first, at most `wanted`.
std::vector<ReducedCurve> good_reductions(const EllipticCurve& E, std::size_t wanted) {
    const auto& f = E.field();
    const auto p = f.p();
    const Poly delta = E.discriminant().num();
    std::vector<ReducedCurve> out;
    for (std::size_t d = 1; d <= 4 && out.size() < wanted; ++d) {
        // Monic polynomials of degree d, coefficients counted in base p.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count && out.size() < wanted; ++code) {
            std::vector<PrimeField::Element> c(d + 1, 0);
            for (std::size_t i = 0, r = code; i < d; ++i, r /= p) c[i] = r % p;
            c[d] = 1;
            const Poly pi(f, std::move(c));
            if (d > 1 && !is_irreducible(pi)) continue;
            bool good = !E.discriminant().den().divisible_by(pi) && !delta.divisible_by(pi);
            for (const auto& ai : E.a()) good = good && integral_at(ai, pi);
            if (!good) continue;
            ReducedCurve R{{pi}, {}};
            for (const auto& ai : E.a()) R.a.push_back(R.k.of(ai));
            out.push_back(std::move(R));
        }
    }
    return out;
}

// Order of the reduction of P, or 0 if P reduces to O.
std::uint64_t reduced_order(const ReducedCurve& R, const CurvePoint& P) {
    if (!integral_at(P.x(), R.k.pi) || !integral_at(P.y(), R.k.pi)) return 0;
    const ReducedPoint P0{false, R.k.of(P.x()), R.k.of(P.y())};
    ReducedPoint Q = P0;
    std::uint64_t r = 1;
    while (!Q.infinity) {
        Q = R.add(Q, P0);
        ++r;
    }
    return r;
}

}  // namespace

// Torsion injects into the points of every good reduction (the kernel of
// reduction is a torsion-free formal group), so a torsion point has the same
// order at all good places and never reduces to O. Those orders bound the
// repeated addition.
std::uint64_t point_order(const CurvePoint& P, std::uint64_t bound) {
    if (P.is_infinity()) return 1;
    std::uint64_t limit = bound;
    std::optional<std::uint64_t> candidate;
    for (const auto& R : good_reductions(P.curve(), 6)) {
        const auto r = reduced_order(R, P);
        if (r == 0 || (candidate && *candidate != r))
            throw Error(ErrorKind::NotTorsionWithinBound, P.to_string() + " is not torsion");
        candidate = r;
    }
    if (candidate) limit = std::min(bound, *candidate);
    CurvePoint Q = P;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (Q.is_infinity()) return k;
        Q += P;
    }
    throw Error(ErrorKind::NotTorsionWithinBound,
                P.to_string() + " has no order <= " + std::to_string(bound));
}

std::uint64_t point_order(const CurvePoint& P) { return point_order(P, default_torsion_bound(P.curve().field())); }

}  // namespace heights
