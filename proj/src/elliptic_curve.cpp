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

#include "heights/elliptic_curve.hpp"

#include <algorithm>
#include <set>

#include "heights/errors.hpp"

namespace heights {

EllipticCurve EllipticCurve::from_a_invariants(const PrimeField& field, AInvariants a) {
    for (const auto& x : a)
        if (!(x.field() == field)) throw Error(ErrorKind::FieldMismatch, "a-invariant over the wrong field");
    const auto& [a1, a2, a3, a4, a6] = a;
    RatFunc b2 = a1 * a1 + a2.scaled(4);
    RatFunc b4 = a4.scaled(2) + a1 * a3;
    RatFunc b6 = a3 * a3 + a6.scaled(4);
    RatFunc b8 = a1 * a1 * a6 + (a2 * a6).scaled(4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    RatFunc c4 = b2 * b2 - b4.scaled(24);
    RatFunc c6 = -(b2 * b2 * b2) + (b2 * b4).scaled(36) - b6.scaled(216);
    RatFunc delta = -(b2 * b2 * b8) - (b4 * b4 * b4).scaled(8) - (b6 * b6).scaled(27) + (b2 * b4 * b6).scaled(9);
    if (delta.is_zero()) throw Error(ErrorKind::SingularModel, "Weierstrass model has zero discriminant");
    RatFunc j = c4 * c4 * c4 / delta;
    return EllipticCurve(std::make_shared<const Data>(Data{field, std::move(a), std::move(b2), std::move(b4),
                                                           std::move(b6), std::move(b8), std::move(c4),
                                                           std::move(c6), std::move(delta), std::move(j)}));
}

EllipticCurve EllipticCurve::short_form(const RatFunc& A, const RatFunc& B) {
    const auto& f = A.field();
    return from_a_invariants(f, {RatFunc(f), RatFunc(f), RatFunc(f), A, B});
}

bool EllipticCurve::defined_over_pth_powers() const {
    return std::all_of(d_->a.begin(), d_->a.end(), [](const RatFunc& x) { return x.pth_root().has_value(); });
}

RatFunc EllipticCurve::equation(const RatFunc& x, const RatFunc& y) const {
    return y * (y + a1() * x + a3()) - (((x + a2()) * x + a4()) * x + a6());
}

std::string EllipticCurve::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 5; ++i) s += (i ? ", " : "") + d_->a[i].to_string();
    return s + "] over F_" + std::to_string(d_->field.p());
}

EllipticCurve transform(const EllipticCurve& E, const RatFunc& u, const RatFunc& r, const RatFunc& s,
                        const RatFunc& w) {
    if (u.is_zero()) throw Error(ErrorKind::ZeroDenominator, "coordinate change with u = 0");
    const auto& [a1, a2, a3, a4, a6] = E.a();
    const RatFunc ui = u.inverse();
    const RatFunc u2 = ui * ui, u3 = u2 * ui, u4 = u2 * u2, u6 = u3 * u3;
    return EllipticCurve::from_a_invariants(
        E.field(), {(a1 + s.scaled(2)) * ui, (a2 - s * a1 + r.scaled(3) - s * s) * u2,
                    (a3 + r * a1 + w.scaled(2)) * u3,
                    (a4 - s * a3 + (r * a2).scaled(2) - (w + r * s) * a1 + (r * r).scaled(3) - (s * w).scaled(2)) * u4,
                    (a6 + r * a4 + r * r * a2 + r * r * r - w * a3 - w * w - r * w * a1) * u6});
}

std::string Kodaira::to_string() const {
    switch (symbol) {
        case Symbol::I0: return "I0";
        case Symbol::In: return "I" + std::to_string(n);
        case Symbol::II: return "II";
        case Symbol::III: return "III";
        case Symbol::IV: return "IV";
        case Symbol::InStar: return "I" + std::to_string(n) + "*";
        case Symbol::IVStar: return "IV*";
        case Symbol::IIIStar: return "III*";
        case Symbol::IIStar: return "II*";
    }
    return "?";
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    auto q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::optional<std::int64_t> valuation_or_infinite(const RatFunc& f, const Place& v) {
    if (f.is_zero()) return std::nullopt;
    return valuation(f, v);
}

}  // namespace

ReductionData tate_at(const EllipticCurve& E, const Place& v) {
    if (E.field().p() < 5)
        throw Error(ErrorKind::UnsupportedCharacteristic, "Tate classification needs p >= 5");
    const auto v4 = valuation_or_infinite(E.c4(), v);
    const auto v6 = valuation_or_infinite(E.c6(), v);
    const auto vd = valuation(E.discriminant(), v);

    // For p >= 5 an integral model with invariants (c4, c6) exists iff both are
    // integral, and it is minimal iff v(c4) < 4, v(c6) < 6 or v(Delta) < 12.
    std::int64_t k = floor_div(vd, 12);
    if (v4) k = std::min(k, floor_div(*v4, 4));
    if (v6) k = std::min(k, floor_div(*v6, 6));

    ReductionData r{v, {}, vd - 12 * k, true, k, v4 ? std::optional(*v4 - 4 * k) : std::nullopt,
                    v6 ? std::optional(*v6 - 6 * k) : std::nullopt};
    const auto d = r.v_delta_min;
    using S = Kodaira::Symbol;
    if (d == 0) {
        r.kodaira = {S::I0, 0};
    } else if (r.v_c4_min && *r.v_c4_min == 0) {
        r.kodaira = {S::In, d};
    } else {
        r.is_semistable_here = false;
        // Potentially multiplicative iff v(j) = 3 v(c4) - v(Delta) < 0.
        if (r.v_c4_min && 3 * *r.v_c4_min < d) {
            r.kodaira = {S::InStar, d - 6};
        } else {
            switch (d) {
                case 2: r.kodaira = {S::II, 0}; break;
                case 3: r.kodaira = {S::III, 0}; break;
                case 4: r.kodaira = {S::IV, 0}; break;
                case 6: r.kodaira = {S::InStar, 0}; break;
                case 8: r.kodaira = {S::IVStar, 0}; break;
                case 9: r.kodaira = {S::IIIStar, 0}; break;
                case 10: r.kodaira = {S::IIStar, 0}; break;
                default:
                    throw std::logic_error("tate_at: impossible additive valuation " + std::to_string(d) + " at " +
                                           v.to_string());
            }
        }
    }
    return r;
}

EllipticCurve local_minimal_model(const EllipticCurve& E, const Place& v) {
    const auto k = tate_at(E, v).scaling;
    const RatFunc pi = uniformizer(v, E.field());
    return EllipticCurve::short_form((E.c4() * pi.pow(-4 * k)).scaled(-27), (E.c6() * pi.pow(-6 * k)).scaled(-54));
}

std::vector<Place> candidate_bad_places(const EllipticCurve& E) {
    std::set<Place> places{Place::infinity()};
    auto add_factors = [&](const Poly& q) {
        if (q.is_constant()) return;
        for (auto& [pi, m] : factor_poly(q)) places.insert(Place::finite_unchecked(pi));
    };
    add_factors(E.discriminant().num());
    add_factors(E.discriminant().den());
    add_factors(E.c4().den());
    add_factors(E.c6().den());
    return {places.begin(), places.end()};
}

Divisor minimal_discriminant_divisor(const EllipticCurve& E) {
    Divisor d;
    for (const auto& v : candidate_bad_places(E)) d.add(v, tate_at(E, v).v_delta_min);
    return d;
}

HeightReport height_report(const EllipticCurve& E) {
    HeightReport rep;
    for (const auto& v : candidate_bad_places(E)) {
        auto r = tate_at(E, v);
        if (r.v_delta_min == 0) continue;
        rep.delta_min.add(v, r.v_delta_min);
        rep.semistable = rep.semistable && r.is_semistable_here;
        rep.fibers.push_back(std::move(r));
    }
    const auto deg = rep.delta_min.degree();
    if (deg % 12 != 0 || deg < 0)
        throw std::logic_error("minimal discriminant of degree " + std::to_string(deg) + " for " + E.to_string());
    rep.h_diff = Rational(deg, 12);
    rep.h_mod = weil_height(E.j());
    rep.isotrivial = E.j().is_constant();
    return rep;
}

Rational differential_height(const EllipticCurve& E) { return height_report(E).h_diff; }

std::uint64_t modular_height(const EllipticCurve& E) { return weil_height(E.j()); }

bool is_semistable(const EllipticCurve& E) { return height_report(E).semistable; }

bool is_isotrivial(const EllipticCurve& E) { return E.j().is_constant(); }

}  // namespace heights
