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

#include "heights/place.hpp"

#include <algorithm>
#include <random>

#include "heights/errors.hpp"

namespace heights {

Place Place::finite(Poly pi) {
    if (pi.is_zero() || pi.is_constant() || !pi.is_monic() || !is_irreducible(pi))
        throw Error(ErrorKind::NotIrreducible, "place must be a monic irreducible polynomial, got " + pi.to_string());
    return Place(std::move(pi));
}

const Poly& Place::polynomial() const {
    if (!pi_) throw Error(ErrorKind::ZeroPolynomial, "the place at infinity has no polynomial");
    return *pi_;
}

void Divisor::add(const Place& v, std::int64_t multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = terms_.emplace(v, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) terms_.erase(it);
    }
}

std::int64_t Divisor::multiplicity(const Place& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
    std::int64_t d = 0;
    for (const auto& [v, m] : terms_) d += m * static_cast<std::int64_t>(v.degree());
    return d;
}

Divisor& Divisor::operator+=(const Divisor& rhs) {
    for (const auto& [v, m] : rhs.terms_) add(v, m);
    return *this;
}

std::string Divisor::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [v, m] : terms_) {
        if (!s.empty()) s += m < 0 ? " - " : " + ";
        else if (m < 0) s += "-";
        const auto a = m < 0 ? -m : m;
        if (a != 1) s += std::to_string(a);
        s += "(" + v.to_string() + ")";
    }
    return s;
}

namespace {

// Yun-style square-free decomposition, adapted to characteristic p: when the
// derivative vanishes the polynomial is a p-th power.
void squarefree_parts(const Poly& f, std::uint32_t mult, std::vector<std::pair<Poly, std::uint32_t>>& out) {
    if (f.is_constant()) return;
    const auto p = static_cast<std::uint32_t>(f.field().p());
    const Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_parts(*f.pth_root(), mult * p, out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    std::uint32_t i = 1;
    while (!w.is_constant()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (!z.is_constant()) out.emplace_back(z.monic(), mult * i);
        ++i;
        w = std::move(y);
        c = c / w;
    }
    if (!c.is_constant()) squarefree_parts(*c.monic().pth_root(), mult * p, out);
}

// Splits a monic square-free f whose irreducible factors all have degree d.
void equal_degree_split(const Poly& f, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    const auto& field = f.field();
    const auto p = field.p();
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    for (;;) {
        std::vector<PrimeField::Element> a(f.deg());
        for (auto& c : a) c = coeff(rng);
        Poly r(field, std::move(a));
        if (r.is_constant()) continue;
        Poly g = gcd(f, r);
        if (g.is_constant()) {
            // r^((p^d-1)/2) = (r * r^p * ... * r^(p^(d-1)))^((p-1)/2)
            Poly norm = Poly::constant(field, 1), conj = r;
            for (std::size_t k = 0; k < d; ++k) {
                norm = (norm * conj) % f;
                conj = powmod(conj, p, f);
            }
            g = gcd(f, powmod(norm, (p - 1) / 2, f) - Poly::constant(field, 1));
        }
        if (!g.is_constant() && g.deg() < f.deg()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(f / g, d, rng, out);
            return;
        }
    }
}

// Root search for tiny inputs: linear factors by exhaustive evaluation.
bool splits_by_roots(const Poly& f, std::vector<Poly>& out) {
    const auto& field = f.field();
    if (f.deg() > 3 || field.p() > 4096) return false;
    Poly rest = f;
    for (std::uint64_t x = 0; x < field.p() && !rest.is_constant(); ++x) {
        while (!rest.is_constant() && rest.eval(x) == 0) {
            Poly lin = Poly(field, {field.neg(x), 1});
            out.push_back(lin);
            rest = rest / lin;
        }
    }
    if (!rest.is_constant()) {
        // Degree <= 3 without roots is irreducible.
        if (rest.deg() <= 3) out.push_back(rest.monic());
        else return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<Poly, std::uint32_t>> factor_poly(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factorization of the zero polynomial");
    std::vector<std::pair<Poly, std::uint32_t>> sqf;
    squarefree_parts(f.monic(), 1, sqf);

    std::mt19937_64 rng(0x5eed'f00dULL);
    std::map<Poly, std::uint32_t> acc;
    const auto& field = f.field();
    const Poly x = Poly::variable(field);
    for (const auto& [part, mult] : sqf) {
        std::vector<Poly> irreducibles;
        if (!splits_by_roots(part, irreducibles)) {
            irreducibles.clear();
            // Distinct-degree factorization.
            Poly rest = part;
            Poly h = x;
            for (std::size_t d = 1; !rest.is_constant(); ++d) {
                if (2 * d > rest.deg()) {
                    irreducibles.push_back(rest.monic());
                    break;
                }
                h = powmod(h, field.p(), rest);
                Poly g = gcd(rest, h - x);
                if (!g.is_constant()) {
                    equal_degree_split(g, d, rng, irreducibles);
                    rest = rest / g;
                    h = h % rest;
                }
            }
        }
        for (auto& q : irreducibles) acc[q.monic()] += mult;
    }
    std::vector<std::pair<Poly, std::uint32_t>> out(acc.begin(), acc.end());
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    auto fs = factor_poly(f);
    return fs.size() == 1 && fs.front().second == 1;
}

std::int64_t valuation(const RatFunc& f, const Place& v) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "valuation of the zero function");
    if (v.is_infinity())
        return static_cast<std::int64_t>(f.den().deg()) - static_cast<std::int64_t>(f.num().deg());
    const Poly& pi = v.polynomial();
    auto order = [&](Poly q) {
        std::int64_t k = 0;
        for (;;) {
            auto [quot, rem] = q.divmod(pi);
            if (!rem.is_zero()) return k;
            q = std::move(quot);
            ++k;
        }
    };
    return order(f.num()) - order(f.den());
}

RatFunc uniformizer(const Place& v, const PrimeField& field) {
    if (v.is_infinity()) return RatFunc::variable(field).inverse();
    return RatFunc(v.polynomial());
}

std::vector<Place> support(const RatFunc& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "support of the zero function");
    std::vector<Place> out;
    for (const auto* q : {&f.num(), &f.den()})
        if (!q->is_constant())
            for (auto& [pi, m] : factor_poly(*q)) out.push_back(Place::finite_unchecked(pi));
    if (valuation(f, Place::infinity()) != 0) out.push_back(Place::infinity());
    std::sort(out.begin(), out.end());
    return out;
}

Divisor divisor_of(const RatFunc& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroFunction, "divisor of the zero function");
    Divisor d;
    for (const auto* q : {&f.num(), &f.den()}) {
        if (q->is_constant()) continue;
        const std::int64_t sign = q == &f.num() ? 1 : -1;
        for (auto& [pi, m] : factor_poly(*q)) d.add(Place::finite_unchecked(pi), sign * static_cast<std::int64_t>(m));
    }
    d.add(Place::infinity(), valuation(f, Place::infinity()));
    return d;
}

}  // namespace heights
