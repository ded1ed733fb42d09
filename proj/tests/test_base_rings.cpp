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
#include "heights/errors.hpp"
#include "heights/parse.hpp"
#include "heights/place.hpp"
#include "test_support.hpp"

using namespace heights;
using heights::testing::random_nonzero_poly;
using heights::testing::random_nonzero_ratfunc;

namespace {

const PrimeField F5{5};
const PrimeField F7{7};

Poly P(const PrimeField& f, std::initializer_list<std::int64_t> c) { return Poly::from_ints(f, c); }
RatFunc R(const PrimeField& f, const char* s) { return parse_ratfunc(s, f); }

}  // namespace

TEST_CASE("prime field rejects small or composite moduli") {
    CHECK_THROWS_AS(PrimeField(3), Error);
    CHECK_THROWS_AS(PrimeField(9), Error);
    CHECK_NOTHROW(PrimeField(13));
    CHECK(F7.inv(3) == 5);
    CHECK(F5.sqrt(4).has_value());
    CHECK_FALSE(F5.sqrt(2).has_value());
    const PrimeField F13{13};
    for (std::uint64_t a = 1; a < 13; ++a)
        if (auto r = F13.sqrt(a)) CHECK(F13.mul(*r, *r) == a);
}

TEST_CASE("ratfunc_normalize") {
    SUBCASE("common factor cancels") {
        auto r = RatFunc::normalize(P(F5, {-1, 0, 1}), P(F5, {-1, 1}));
        CHECK(r.num() == P(F5, {1, 1}));
        CHECK(r.den() == Poly::constant(F5, 1));
    }
    SUBCASE("zero") {
        auto r = RatFunc::normalize(Poly(F5), P(F5, {0, 1}));
        CHECK(r.is_zero());
        CHECK(r.den() == Poly::constant(F5, 1));
    }
    SUBCASE("monic denominator absorbs the unit") {
        // 2t / 4: 4^-1 = 4 mod 5 and 2 * 4 = 3.
        auto r = RatFunc::normalize(P(F5, {0, 2}), P(F5, {4}));
        CHECK(r.num() == P(F5, {0, 3}));
        CHECK(r.den().is_monic());
    }
    SUBCASE("zero denominator") {
        try {
            RatFunc::normalize(P(F5, {1}), Poly(F5));
            FAIL("expected ZeroDenominator");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ZeroDenominator);
        }
    }
    SUBCASE("canonical form makes equal values equal") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 50; ++i) {
            auto a = random_nonzero_ratfunc(F7, rng, 4);
            auto b = random_nonzero_ratfunc(F7, rng, 4);
            CHECK((a * b) / b == a);
            CHECK((a + b) - b == a);
        }
    }
}

TEST_CASE("factor_poly") {
    SUBCASE("linear") {
        auto fs = factor_poly(P(F5, {0, 1}));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first == P(F5, {0, 1}));
        CHECK(fs[0].second == 1);
    }
    SUBCASE("t^2+1 over F_5 splits, checked against trial division") {
        const Poly f = P(F5, {1, 0, 1});
        std::vector<Poly> oracle;
        for (std::int64_t a = 0; a < 5; ++a) {
            Poly lin = P(F5, {a, 1});
            if (f.divisible_by(lin)) oracle.push_back(lin);
        }
        std::vector<std::pair<Poly, std::uint32_t>> expected;
        for (auto& q : oracle) expected.emplace_back(q, 1);
        CHECK(factor_poly(f) == expected);
        CHECK(expected == std::vector<std::pair<Poly, std::uint32_t>>{{P(F5, {2, 1}), 1}, {P(F5, {3, 1}), 1}});
    }
    SUBCASE("t^2+t+1 over F_5 has no root") {
        const Poly f = P(F5, {1, 1, 1});
        for (std::uint64_t x = 0; x < 5; ++x) CHECK(f.eval(x) != 0);
        auto fs = factor_poly(f);
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first == f);
    }
    SUBCASE("zero") { CHECK_THROWS_AS(factor_poly(Poly(F5)), Error); }
    SUBCASE("p-th powers and repeated factors") {
        // (t+1)^5 (t^2+2)^2 t over F_5
        const Poly f = P(F5, {1, 1}).pow(5) * P(F5, {2, 0, 1}).pow(2) * P(F5, {0, 1});
        auto fs = factor_poly(f);
        REQUIRE(fs.size() == 3);
        CHECK(fs[0] == std::pair{P(F5, {0, 1}), 1u});
        CHECK(fs[1] == std::pair{P(F5, {1, 1}), 5u});
        CHECK(fs[2] == std::pair{P(F5, {2, 0, 1}), 2u});
    }
    SUBCASE("round trip on random inputs") {
        std::mt19937_64 rng(2026);
        for (std::uint64_t p : {5, 7, 11, 13}) {
            const PrimeField f{p};
            for (int i = 0; i < 40; ++i) {
                const Poly g = random_nonzero_poly(f, rng, 14);
                Poly prod = Poly::constant(f, static_cast<std::int64_t>(g.leading()));
                auto fs = factor_poly(g);
                for (std::size_t k = 0; k < fs.size(); ++k) {
                    CHECK(is_irreducible(fs[k].first));
                    CHECK(fs[k].first.is_monic());
                    if (k) CHECK(fs[k - 1].first < fs[k].first);
                    prod *= fs[k].first.pow(fs[k].second);
                }
                CHECK(prod == g);
            }
        }
    }
    SUBCASE("irreducibility cross-check by brute force over F_5 up to degree 4") {
        // A degree <= 4 polynomial is reducible iff it has a monic factor of degree 1 or 2.
        std::vector<Poly> small;
        for (std::int64_t a = 0; a < 5; ++a) {
            small.push_back(P(F5, {a, 1}));
            for (std::int64_t b = 0; b < 5; ++b) small.push_back(P(F5, {a, b, 1}));
        }
        std::mt19937_64 rng(5);
        for (int i = 0; i < 200; ++i) {
            Poly g = random_nonzero_poly(F5, rng, 4);
            if (g.is_constant()) continue;
            g = g.monic();
            bool reducible = false;
            for (auto& q : small)
                if (q.deg() < g.deg() && g.divisible_by(q)) reducible = true;
            CHECK(is_irreducible(g) == !reducible);
        }
    }
}

TEST_CASE("valuation") {
    const auto t = Place::finite(P(F5, {0, 1}));
    CHECK(valuation(R(F5, "t^3/(t+1)"), t) == 3);
    CHECK(valuation(R(F5, "(t^2+1)/t"), Place::infinity()) == -1);
    CHECK(valuation(R(F5, "t^2+1"), Place::finite(P(F5, {-2, 1}))) == 1);
    try {
        valuation(RatFunc(F5), t);
        FAIL("expected ZeroFunction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroFunction);
    }
    CHECK_THROWS_AS(Place::finite(P(F5, {1, 0, 1})), Error);
}

TEST_CASE("divisor_of") {
    const auto inf = Place::infinity();
    const auto t = Place::finite(P(F5, {0, 1}));
    Divisor d1;
    d1.add(t, 1);
    d1.add(inf, -1);
    CHECK(divisor_of(R(F5, "t")) == d1);

    Divisor d2;
    d2.add(Place::finite(P(F5, {-1, 1})), 1);
    d2.add(t, -1);
    CHECK(divisor_of(R(F5, "(t-1)/t")) == d2);

    Divisor d3;
    d3.add(Place::finite(P(F5, {-2, 1})), 1);
    d3.add(Place::finite(P(F5, {2, 1})), 1);
    d3.add(inf, -2);
    CHECK(divisor_of(R(F5, "t^2+1")) == d3);
    CHECK(d3.to_string() == "(t+2) + (t+3) - 2(inf)");
}

TEST_CASE("weil_height") {
    CHECK(weil_height(RatFunc::constant(F5, 3)) == 0);
    CHECK(weil_height(RatFunc(F5)) == 0);
    CHECK(weil_height(R(F5, "t^3")) == 3);
    const auto f = R(F5, "(t^2+1)/t");
    CHECK(weil_height(f) == 2);
    // Independent route: the degree of f as a map is the degree of its polar divisor.
    std::int64_t poles = 0;
    const auto div = divisor_of(f);
    for (const auto& [v, m] : div.terms())
        if (m < 0) poles -= m * static_cast<std::int64_t>(v.degree());
    CHECK(poles == 2);
}

TEST_CASE("properties on random functions") {
    std::mt19937_64 rng(99);
    for (std::uint64_t p : {5, 7, 13}) {
        const PrimeField f{p};
        for (int i = 0; i < 30; ++i) {
            const auto a = random_nonzero_ratfunc(f, rng, 5);
            const auto b = random_nonzero_ratfunc(f, rng, 5);
            const auto ab = a * b;
            auto places = support(ab);
            for (auto& v : support(a)) places.push_back(v);
            for (auto& v : support(b)) places.push_back(v);
            for (const auto& v : places) CHECK(valuation(ab, v) == valuation(a, v) + valuation(b, v));
            CHECK(divisor_of(a).degree() == 0);
            CHECK(divisor_of(ab) == divisor_of(a) + divisor_of(b));
            for (std::int64_t n = 1; n <= 4; ++n) CHECK(weil_height(a.pow(n)) == n * weil_height(a));
            CHECK(a.frobenius() == a.pow(static_cast<std::int64_t>(p)));
            CHECK(*a.frobenius().pth_root() == a);
        }
    }
}

TEST_CASE("rational function grammar") {
    CHECK(R(F5, "(t^2+1)/t") == RatFunc::normalize(P(F5, {1, 0, 1}), P(F5, {0, 1})));
    CHECK(R(F5, "  3t^2 - 7 ") == RatFunc(P(F5, {-7, 0, 3})));
    CHECK(R(F5, "-t*(t+1)^2") == RatFunc(-(P(F5, {0, 1}) * P(F5, {1, 1}).pow(2))));
    CHECK(R(F7, "12") == RatFunc::constant(F7, 5));
    CHECK(R(F7, "2(t+1)") == RatFunc(P(F7, {2, 2})));
    CHECK(R(F7, "t").compose(R(F7, "t^2+1")) == R(F7, "t^2+1"));
    CHECK(R(F7, "1/t").compose(R(F7, "t+1")) == R(F7, "1/(t+1)"));
    for (const char* bad : {"t^", "(t+1", "t/(t)/t", "x", "t/0", "", "3 ++"}) {
        CHECK_THROWS_AS(R(F5, bad), ParseError);
    }
    try {
        R(F5, "t + x");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto a = random_nonzero_ratfunc(F7, rng, 6);
        CHECK(R(F7, a.to_string().c_str()) == a);
    }
}

TEST_CASE("large products agree with evaluation and division") {
    std::mt19937_64 rng(314);
    for (std::uint64_t p : {5u, 2147483647u}) {
        const PrimeField f{p};
        for (std::size_t da : {1u, 47u, 48u, 97u, 300u}) {
            for (std::size_t db : {48u, 95u, 700u}) {
                auto a = random_nonzero_poly(f, rng, da), b = random_nonzero_poly(f, rng, db);
                a = a + Poly::monomial(f, 1, da);
                b = b + Poly::monomial(f, 1, db);
                const auto c = a * b;
                CHECK(c.deg() == a.deg() + b.deg());
                CHECK(c == b * a);
                CHECK(c / b == a);
                CHECK((c % a).is_zero());
                for (PrimeField::Element x : {0ull, 1ull, 2ull, 3ull, 4ull}) CHECK(c.eval(x) == f.mul(a.eval(x), b.eval(x)));
            }
        }
    }
}
