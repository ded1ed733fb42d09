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

#include <random>

#include "doctest.h"
#include "heights/division_polynomial.hpp"
#include "heights/errors.hpp"
#include "heights/families.hpp"
#include "heights/isogeny.hpp"
#include "test_support.hpp"

using namespace heights;
using heights::testing::make_curve;
using heights::testing::random_nonzero_ratfunc;
using heights::testing::random_ratfunc;
using heights::testing::rf;

namespace {

RatFunc t_of(const PrimeField& f) { return RatFunc::variable(f); }

// Pointed curve from a family, plus a second point forced onto it by solving
// the equation for one coefficient.
struct TwoPoints {
    PointedCurve pc;
    CurvePoint Q;
};

// y^2 = x(x^2 + a x + b) through (x0, y0): b = y0^2/x0 - x0^2 - a x0.
std::optional<TwoPoints> two_torsion_with_point(const PrimeField& f, std::mt19937_64& rng) {
    const auto a = random_ratfunc(f, rng, 2), x0 = random_nonzero_ratfunc(f, rng, 2), y0 = random_nonzero_ratfunc(f, rng, 2);
    const auto b = y0 * y0 / x0 - x0 * x0 - a * x0;
    try {
        auto pc = two_torsion_family(a, b);
        auto Q = CurvePoint::affine(pc.curve, x0, y0);
        return TwoPoints{std::move(pc), std::move(Q)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

// y^2 + a1 x y + a3 y = x^3 through (x0, y0): a3 = (x0^3 - y0^2 - a1 x0 y0)/y0.
std::optional<TwoPoints> three_torsion_with_point(const PrimeField& f, std::mt19937_64& rng) {
    const auto a1 = random_ratfunc(f, rng, 2), x0 = random_nonzero_ratfunc(f, rng, 2), y0 = random_nonzero_ratfunc(f, rng, 2);
    const auto a3 = (x0.pow(3) - y0 * y0 - a1 * x0 * y0) / y0;
    if (a3.is_zero()) return std::nullopt;
    try {
        auto pc = three_torsion_family(a1, a3);
        auto Q = CurvePoint::affine(pc.curve, x0, y0);
        return TwoPoints{std::move(pc), std::move(Q)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Tate normal form with b = c through (x0, y0):
// y0^2 + x0 y0 - x0^3 = b (x0 y0 + y0 - x0^2).
std::optional<TwoPoints> tate5_with_point(const PrimeField& f, std::mt19937_64& rng) {
    const auto x0 = random_nonzero_ratfunc(f, rng, 2), y0 = random_nonzero_ratfunc(f, rng, 2);
    const auto d = x0 * y0 + y0 - x0 * x0;
    if (d.is_zero()) return std::nullopt;
    const auto b = (y0 * y0 + x0 * y0 - x0.pow(3)) / d;
    if (b.is_constant()) return std::nullopt;
    try {
        auto pc = tate_normal_5(b);
        auto Q = CurvePoint::affine(pc.curve, x0, y0);
        return TwoPoints{std::move(pc), std::move(Q)};
    } catch (const Error&) {
        return std::nullopt;
    }
}

bool is_torsion(const CurvePoint& P) {
    try {
        point_order(P, 60);
        return true;
    } catch (const Error&) {
        return false;
    }
}

void check_homomorphism(const VeluIsogeny& phi, const CurvePoint& Q) {
    const auto& P = phi.generator();
    const auto fQ = phi(Q);
    CHECK(phi(Q + P) == fQ);
    CHECK(phi(Q + Q) == fQ + fQ);
    CHECK(phi(Q.multiple(3)) == fQ.multiple(3));
    CHECK(phi(-Q) == -fQ);
    CHECK(phi(P).is_infinity());
    CHECK(phi(Q.multiple(2) + P) == phi(Q + P) + fQ);
}

}  // namespace

TEST_CASE("division_polynomial") {
    SUBCASE("n = 1 is 1") {
        auto E = make_curve(7, {"0", "0", "0", "-1", "0"});
        CHECK(division_polynomial(E, 1) == XPoly(E.field(), {RatFunc::constant(E.field(), 1)}));
    }
    SUBCASE("n = 2 is 4x^3 + b2 x^2 + 2 b4 x + b6") {
        auto E = make_curve(11, {"t", "t+1", "t^2", "3", "1/t"});
        const auto d = division_polynomial(E, 2);
        REQUIRE(d.degree() == 3u);
        CHECK(d.coeff(3) == RatFunc::constant(E.field(), 4));
        CHECK(d.coeff(2) == E.b2());
        CHECK(d.coeff(1) == E.b4().scaled(2));
        CHECK(d.coeff(0) == E.b6());
    }
    SUBCASE("n = 3 on y^2 = x^3 - x over F_7 is 3x^4 - 6x^2 - 1") {
        auto E = make_curve(7, {"0", "0", "0", "-1", "0"});
        const auto& f = E.field();
        CHECK(division_polynomial(E, 3) == XPoly(f, {RatFunc::constant(f, -1), RatFunc(f), RatFunc::constant(f, -6),
                                                     RatFunc(f), RatFunc::constant(f, 3)}));
    }
    SUBCASE("roots at torsion points, by the group law") {
        for (std::uint64_t p : {5u, 7u, 11u}) {
            const PrimeField f{p};
            const auto t = t_of(f);
            std::vector<PointedCurve> pcs{tate_normal_5(t), tate_normal_6(t), tate_normal_7(t),
                                          three_torsion_family(t, t + RatFunc::constant(f, 1)),
                                          two_torsion_family(t, t * t + RatFunc::constant(f, 2))};
            for (const auto& pc : pcs) {
                CAPTURE(pc.curve.to_string());
                for (std::int64_t k = 1; k <= 3; ++k) {
                    const auto Q = pc.point.multiple(k);
                    if (Q.is_infinity()) continue;
                    const auto m = point_order(Q);
                    for (std::uint64_t n = 2; n <= 8; ++n) {
                        CAPTURE(m);
                        CAPTURE(n);
                        CHECK(division_polynomial(pc.curve, n).eval(Q.x()).is_zero() == (n % m == 0));
                    }
                }
            }
        }
    }
    SUBCASE("degrees and leading coefficients") {
        auto E = make_curve(13, {"1", "t", "0", "t^2", "1"});
        for (std::uint64_t n = 1; n <= 9; ++n) {
            const auto d = division_polynomial(E, n);
            if (n % 2) {
                CHECK(*d.degree() == (n * n - 1) / 2);
                CHECK(d.coeff(*d.degree()) == RatFunc::constant(E.field(), static_cast<std::int64_t>(n)));
            } else {
                CHECK(*d.degree() == (n * n + 2) / 2);
                CHECK(d.coeff(*d.degree()) == RatFunc::constant(E.field(), static_cast<std::int64_t>(2 * n)));
            }
        }
    }
}

TEST_CASE("point_order") {
    auto E = make_curve(7, {"0", "0", "0", "-1", "0"});
    CHECK(point_order(CurvePoint::infinity(E), 1) == 1);
    const RatFunc zero(E.field());
    CHECK(point_order(CurvePoint::affine(E, zero, zero)) == 2);

    const PrimeField f5{5};
    const auto tate = tate_normal_5(t_of(f5));
    CHECK(tate.point.multiple(5).is_infinity());
    CHECK(point_order(tate.point) == 5);
    CHECK_THROWS_AS(point_order(tate.point, 4), Error);
    try {
        point_order(tate.point, 4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotTorsionWithinBound);
    }
    CHECK(point_order(tate_normal_6(t_of(PrimeField{7})).point) == 6);
    CHECK(point_order(tate_normal_7(t_of(PrimeField{11})).point) == 7);
    CHECK_THROWS_AS(CurvePoint::affine(E, RatFunc::constant(E.field(), 2), zero), Error);
}

TEST_CASE("velu_quotient") {
    SUBCASE("trivial kernel") {
        auto E = make_curve(11, {"t", "0", "1", "t", "t^3"});
        const auto [Ep, m] = velu_quotient(E, CurvePoint::infinity(E));
        CHECK(Ep == E);
        CHECK(m == 1);
    }
    SUBCASE("y^2 = x^3 - x over F_7 and its dual 2-isogeny") {
        auto E = make_curve(7, {"0", "0", "0", "-1", "0"});
        const auto& f = E.field();
        const auto c = [&](std::int64_t v) { return RatFunc::constant(f, v); };
        const VeluIsogeny phi(CurvePoint::affine(E, c(0), c(0)));
        CHECK(phi.degree() == 2);
        // By hand: v = a4 = -1, w = 0, so y^2 = x^3 + 4x.
        CHECK(phi.codomain() == make_curve(7, {"0", "0", "0", "4", "0"}));
        CHECK(phi.codomain().j().is_constant());
        const auto T = phi(CurvePoint::affine(E, c(1), c(0)));
        CHECK(point_order(T) == 2);
        const VeluIsogeny psi(T);
        // E'' = y^2 = x^3 + 5x; u = 2 takes it to y^2 = x^3 - x.
        const auto back = IsogenyStep::isomorphism(psi.codomain(), c(2), c(0), c(0), c(0));
        REQUIRE(back.target() == E);
        // All eight F_7-points: the composite is [2] up to the automorphism -1.
        std::vector<CurvePoint> pts{CurvePoint::infinity(E)};
        for (std::int64_t x = 0; x < 7; ++x)
            for (std::int64_t y = 0; y < 7; ++y)
                if ((y * y - x * x * x + x) % 7 == 0) pts.push_back(CurvePoint::affine(E, c(x), c(y)));
        REQUIRE(pts.size() == 8);
        int killed = 0;
        for (const auto& Q : pts) {
            const auto img = back.map_point(psi(phi(Q)));
            const auto dbl = Q.multiple(2);
            CHECK((img == dbl || img == -dbl));
            killed += img.is_infinity();
        }
        CHECK(killed == 4);
    }
    SUBCASE("full 2-torsion: E / E[2] has the j-invariant of E") {
        std::mt19937_64 rng(101);
        for (std::uint64_t p : {5u, 7u, 13u}) {
            const PrimeField f{p};
            for (int i = 0; i < 10; ++i) {
                const auto a = random_nonzero_ratfunc(f, rng, 2), b = random_nonzero_ratfunc(f, rng, 2);
                if (a == b) continue;
                // y^2 = x (x - a)(x - b)
                const RatFunc zero(f);
                std::optional<EllipticCurve> E;
                try {
                    E = EllipticCurve::from_a_invariants(f, {zero, -(a + b), zero, a * b, zero});
                } catch (const Error&) {
                    continue;
                }
                const VeluIsogeny phi(CurvePoint::affine(*E, zero, zero));
                const auto T = phi(CurvePoint::affine(*E, a, zero));
                const VeluIsogeny psi(T);
                CHECK(psi.codomain().j() == E->j());
                CHECK(modular_height(phi.codomain()) == modular_height(*E));
            }
        }
    }
    SUBCASE("Velu maps are homomorphisms onto the codomain") {
        std::mt19937_64 rng(7);
        int checked = 0;
        for (std::uint64_t p : {5u, 7u, 11u}) {
            const PrimeField f{p};
            for (int i = 0; i < 12; ++i) {
                for (auto make : {two_torsion_with_point, three_torsion_with_point, tate5_with_point}) {
                    const auto inst = make(f, rng);
                    if (!inst || is_torsion(inst->Q)) continue;
                    CAPTURE(inst->pc.curve.to_string());
                    const VeluIsogeny phi(inst->pc.point);
                    check_homomorphism(phi, inst->Q);
                    ++checked;
                }
            }
        }
        CHECK(checked > 30);
    }
    SUBCASE("Tate normal form over F_5: degree 5, h_mod drops by 5") {
        const PrimeField f{5};
        const auto tate = tate_normal_5(t_of(f));
        const auto [Ep, m] = velu_quotient(tate.curve, tate.point);
        CHECK(m == 5);
        CHECK(modular_height(tate.curve) == 10);
        CHECK(Rational(modular_height(Ep)) == Rational(modular_height(tate.curve), 5));
        // The dual is purely inseparable, so E/<P> and E^(1/p) share j.
        CHECK(Ep.j().frobenius() == tate.curve.j());
    }
    SUBCASE("errors") {
        std::mt19937_64 rng(3);
        const PrimeField f{7};
        std::optional<TwoPoints> inst;
        while (!inst || is_torsion(inst->Q)) inst = two_torsion_with_point(f, rng);
        try {
            VeluIsogeny phi(inst->Q, 50);
            FAIL("expected NotFinitePoint");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotFinitePoint);
        }
        // Order 10 in characteristic 5.
        const PrimeField f5{5};
        const auto s = t_of(f5);
        const auto q = s * s - s.scaled(3) + RatFunc::constant(f5, 1);
        const auto b = s.pow(3) * (s - RatFunc::constant(f5, 1)) * (s.scaled(2) - RatFunc::constant(f5, 1)) / (q * q);
        const auto c = -s * (s - RatFunc::constant(f5, 1)) * (s.scaled(2) - RatFunc::constant(f5, 1)) / q;
        const auto ten = tate_normal_form(b, c);
        REQUIRE(point_order(ten.point) == 10);
        try {
            VeluIsogeny phi(ten.point);
            FAIL("expected BadOrder");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::BadOrder);
        }
        // Its double has order 5 = p and is allowed.
        CHECK(VeluIsogeny(ten.point.multiple(2)).degree() == 5);
        CHECK(VeluIsogeny(ten.point.multiple(5)).degree() == 2);
    }
}

TEST_CASE("frobenius twists") {
    const PrimeField f{5};
    auto E = make_curve(5, {"0", "0", "0", "0", "t"});
    auto E5 = make_curve(5, {"0", "0", "0", "0", "t^5"});
    CHECK(frobenius_twist(E) == E5);
    CHECK(inverse_frobenius_twist(E5) == E);
    try {
        inverse_frobenius_twist(E);
        FAIL("expected NotAPthPower");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAPthPower);
    }
    auto C = make_curve(5, {"1", "2", "3", "4", "1"});
    CHECK(frobenius_twist(C) == C);

    std::mt19937_64 rng(55);
    for (std::uint64_t p : {5u, 7u, 11u}) {
        const PrimeField g{p};
        for (int i = 0; i < 15; ++i) {
            EllipticCurve::AInvariants a{random_ratfunc(g, rng, 2), random_ratfunc(g, rng, 2), random_ratfunc(g, rng, 2),
                                         random_ratfunc(g, rng, 2), random_ratfunc(g, rng, 2)};
            std::optional<EllipticCurve> X;
            try {
                X = EllipticCurve::from_a_invariants(g, a);
            } catch (const Error&) {
                continue;
            }
            const auto Xp = frobenius_twist(*X);
            CHECK(inverse_frobenius_twist(Xp) == *X);
            CHECK(Xp.j() == X->j().pow(static_cast<std::int64_t>(p)));
            CHECK(modular_height(Xp) == p * modular_height(*X));
            CHECK(Xp.defined_over_pth_powers());
        }
    }
}

TEST_CASE("frobenius and verschiebung on points") {
    std::mt19937_64 rng(12);
    int checked = 0;
    for (std::uint64_t p : {5u, 7u}) {
        const PrimeField f{p};
        for (int i = 0; i < 6; ++i) {
            const auto inst = tate5_with_point(f, rng);
            if (!inst || is_torsion(inst->Q)) continue;
            const auto& Q = inst->Q;
            const auto& P = inst->pc.point;
            const auto FQ = frobenius_point(Q);
            CHECK(frobenius_point(Q + P) == FQ + frobenius_point(P));
            // Ver(Fr Q) = [p] Q, and [p] on E^(p) lands in the image of Fr.
            CHECK(verschiebung_point(FQ) == Q.multiple(static_cast<std::int64_t>(p)));
            CHECK(frobenius_point(verschiebung_point(FQ)) == FQ.multiple(static_cast<std::int64_t>(p)));
            ++checked;
        }
    }
    CHECK(checked >= 4);
}

TEST_CASE("chain_bookkeeping") {
    const PrimeField f{5};
    const auto tate = tate_normal_5(t_of(f));
    const auto& E = tate.curve;
    SUBCASE("empty chain") {
        const auto ch = chain_bookkeeping(E, {});
        CHECK(ch.degree == 1);
        CHECK(ch.target == E);
        CHECK(ch.delta_p == 0);
    }
    SUBCASE("[Frobenius]") {
        const auto ch = chain_bookkeeping(E, {IsogenyStep::frobenius(E)});
        CHECK(ch.degree == 5);
        CHECK(ch.deg_ins == 5);
        CHECK(ch.deg_ins_dual == 1);
        CHECK(ch.delta_p == 1);
        CHECK(ch.delta_p_dual == 0);
        CHECK(ch.target == frobenius_twist(E));
    }
    SUBCASE("[Velu of degree coprime to p]") {
        const auto E6 = tate_normal_6(t_of(f));
        const auto ch = chain_bookkeeping(E6.curve, {IsogenyStep::velu(E6.point.multiple(2))});
        CHECK(ch.degree == 3);
        CHECK(ch.deg_ins == 1);
        CHECK(ch.deg_ins_dual == 1);
        CHECK(ch.delta_p == 0);
        CHECK(ch.delta_p_dual == 0);
    }
    SUBCASE("[Velu of degree p]") {
        const auto ch = chain_bookkeeping(E, {IsogenyStep::velu(tate.point)});
        CHECK(ch.degree == 5);
        CHECK(ch.deg_ins == 1);
        CHECK(ch.deg_ins_dual == 5);
        CHECK(ch.delta_p == 0);
        CHECK(ch.delta_p_dual == 1);
        CHECK(ch.height_ratio() == Rational(1, 5));
    }
    SUBCASE("Frobenius then Verschiebung is [p]") {
        const auto fr = IsogenyStep::frobenius(E);
        const auto ch = chain_bookkeeping(E, {fr, IsogenyStep::inverse_frobenius(fr.target())});
        CHECK(ch.target == E);
        CHECK(ch.degree == 25);
        CHECK(ch.deg_ins == 5);
        CHECK(ch.deg_ins_dual == 5);
    }
    SUBCASE("isomorphism steps map points") {
        const auto one = RatFunc::constant(f, 1), t = t_of(f);
        const auto iso = IsogenyStep::isomorphism(E, t, t + one, t * t, one);
        const auto img = iso.map_point(tate.point);
        CHECK(point_order(img) == 5);
        const auto ch = chain_bookkeeping(E, {iso});
        CHECK(ch.degree == 1);
        CHECK(ch.target.j() == E.j());
    }
    SUBCASE("errors") {
        try {
            chain_bookkeeping(E, {IsogenyStep::frobenius(E), IsogenyStep::frobenius(E)});
            FAIL("expected IncomposableSteps");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::IncomposableSteps);
        }
        auto C = make_curve(5, {"0", "0", "0", "1", "1"});
        try {
            chain_bookkeeping(C, {IsogenyStep::frobenius(C)});
            FAIL("expected IsotrivialSource");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::IsotrivialSource);
        }
    }
    SUBCASE("random chains: p^delta counts Frobenius steps") {
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 40; ++i) {
            std::vector<IsogenyStep> steps;
            EllipticCurve cur = E;
            std::optional<CurvePoint> P = tate.point;
            std::uint64_t frob = 0, ver = 0, deg = 1;
            const int n = std::uniform_int_distribution<int>(0, 4)(rng);
            for (int k = 0; k < n; ++k) {
                const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
                if (kind == 0) {
                    steps.push_back(IsogenyStep::frobenius(cur));
                    ++frob;
                } else if (kind == 1 && cur.defined_over_pth_powers()) {
                    steps.push_back(IsogenyStep::inverse_frobenius(cur));
                    ++ver;
                } else if (P && !P->is_infinity()) {
                    steps.push_back(IsogenyStep::velu(*P));
                    ++ver;  // degree-5 etale quotient
                } else {
                    continue;
                }
                deg *= 5;
                if (P) P = steps.back().map_point(*P);
                cur = steps.back().target();
            }
            const auto ch = chain_bookkeeping(E, steps);
            std::uint64_t pf = 1, pv = 1;
            for (std::uint64_t k = 0; k < frob; ++k) pf *= 5;
            for (std::uint64_t k = 0; k < ver; ++k) pv *= 5;
            CHECK(ch.deg_ins == pf);
            CHECK(ch.deg_ins_dual == pv);
            CHECK(ch.degree == deg);
            CHECK(ch.target == cur);
        }
    }
}
