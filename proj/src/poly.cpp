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

#include "heights/poly.hpp"

#include <algorithm>

#include "heights/errors.hpp"

namespace heights {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p < 5 || p >= (1ULL << 31) || !is_prime(p))
        throw Error(ErrorKind::UnsupportedCharacteristic,
                    "characteristic must be a prime 5 <= p < 2^31, got " + std::to_string(p));
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const noexcept {
    Element result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a % p_ == 0) throw Error(ErrorKind::ZeroDenominator, "inverse of 0 in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

std::optional<PrimeField::Element> PrimeField::sqrt(Element a) const {
    a %= p_;
    if (a == 0) return Element{0};
    if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
    if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
    // Tonelli-Shanks.
    std::uint64_t q = p_ - 1, s = 0;
    while (q % 2 == 0) q /= 2, ++s;
    Element z = 2;
    while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
    Element m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
        Element i = 0, tt = t;
        while (tt != 1) tt = mul(tt, tt), ++i;
        Element b = c;
        for (Element k = 0; k + 1 < m - i; ++k) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

Poly::Poly(PrimeField field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= field_.p();
    trim();
}

Poly Poly::constant(PrimeField field, std::int64_t c) { return Poly(field, {field.reduce(c)}); }

Poly Poly::monomial(PrimeField field, Element c, std::size_t degree) {
    std::vector<Element> v(degree + 1, 0);
    v[degree] = c;
    return Poly(field, std::move(v));
}

Poly Poly::from_ints(PrimeField field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Element> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(field.reduce(c));
    return Poly(field, std::move(v));
}

void Poly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
    if (!(field_ == other.field_))
        throw Error(ErrorKind::FieldMismatch, "polynomials over different prime fields");
}

std::size_t Poly::deg() const {
    if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
    return coeffs_.size() - 1;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = field_.neg(c);
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(rhs);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    trim();
    return *this;
}

namespace {

using Coeffs = std::vector<std::uint64_t>;

// Schoolbook product on residues: each product is below 2^62, so a 128-bit
// column sum needs a single reduction.
void mul_schoolbook(const std::uint64_t* a, std::size_t na, const std::uint64_t* b, std::size_t nb, std::uint64_t p,
                    std::uint64_t* out) {
    for (std::size_t k = 0; k + 1 < na + nb; ++k) {
        unsigned __int128 sum = 0;
        const std::size_t lo = k >= nb ? k - nb + 1 : 0, hi = std::min(k, na - 1);
        for (std::size_t i = lo; i <= hi; ++i) sum += static_cast<unsigned __int128>(a[i] * b[k - i]);
        out[k] = static_cast<std::uint64_t>(sum % p);
    }
}

constexpr std::size_t karatsuba_cutoff = 48;

// out has room for 2n - 1 coefficients; a and b both have n.
void mul_karatsuba(const std::uint64_t* a, const std::uint64_t* b, std::size_t n, std::uint64_t p, std::uint64_t* out) {
    if (n < karatsuba_cutoff) {
        mul_schoolbook(a, n, b, n, p, out);
        return;
    }
    const std::size_t h = n / 2, hh = n - h;  // low half h, high half hh >= h
    Coeffs z0(2 * h - 1), z2(2 * hh - 1), z1(2 * hh - 1), sa(hh), sb(hh);
    mul_karatsuba(a, b, h, p, z0.data());
    mul_karatsuba(a + h, b + h, hh, p, z2.data());
    for (std::size_t i = 0; i < hh; ++i) {
        sa[i] = (a[h + i] + (i < h ? a[i] : 0)) % p;
        sb[i] = (b[h + i] + (i < h ? b[i] : 0)) % p;
    }
    mul_karatsuba(sa.data(), sb.data(), hh, p, z1.data());
    for (std::size_t i = 0; i < z1.size(); ++i) {
        std::uint64_t v = z1[i] + 2 * p - z2[i] - (i < z0.size() ? z0[i] : 0);
        z1[i] = v % p;
    }
    std::fill(out, out + 2 * n - 1, 0);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = (out[2 * h + i] + z2[i]) % p;
    for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] = (out[h + i] + z1[i]) % p;
}

}  // namespace

Poly operator*(const Poly& lhs, const Poly& rhs) {
    lhs.require_same_field(rhs);
    if (lhs.is_zero() || rhs.is_zero()) return Poly(lhs.field_);
    const auto p = lhs.field_.p();
    const Coeffs *a = &lhs.coeffs_, *b = &rhs.coeffs_;
    if (a->size() > b->size()) std::swap(a, b);
    Coeffs acc(a->size() + b->size() - 1, 0);
    if (a->size() < karatsuba_cutoff) {
        mul_schoolbook(a->data(), a->size(), b->data(), b->size(), p, acc.data());
    } else {
        // Cut the longer factor into blocks the size of the shorter one.
        const std::size_t n = a->size();
        Coeffs block(n), prod(2 * n - 1);
        for (std::size_t off = 0; off < b->size(); off += n) {
            const std::size_t len = std::min(n, b->size() - off);
            std::fill(block.begin(), block.end(), 0);
            std::copy(b->begin() + static_cast<std::ptrdiff_t>(off), b->begin() + static_cast<std::ptrdiff_t>(off + len),
                      block.begin());
            mul_karatsuba(a->data(), block.data(), n, p, prod.data());
            for (std::size_t i = 0; i < prod.size() && off + i < acc.size(); ++i)
                acc[off + i] = (acc[off + i] + prod[i]) % p;
        }
    }
    return Poly(lhs.field_, std::move(acc));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly Poly::scaled(Element c) const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x = field_.mul(x, c);
    r.trim();
    return r;
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    Poly r = *this;
    r.coeffs_.insert(r.coeffs_.begin(), k, 0);
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require_same_field(divisor);
    if (divisor.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
    if (coeffs_.size() < divisor.coeffs_.size()) return {Poly(field_), *this};
    std::vector<Element> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<Element> quot(coeffs_.size() - dd, 0);
    const Element lead_inv = field_.inv(divisor.leading());
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Element q = field_.mul(rem[k + dd], lead_inv);
        quot[k] = q;
        if (q == 0) continue;
        const Element nq = field_.p() - q;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] = (rem[k + j] + nq * divisor.coeffs_[j]) % field_.p();
    }
    rem.resize(dd);
    return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    std::vector<Element> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = field_.mul(coeffs_[i], i % field_.p());
    return Poly(field_, std::move(d));
}

Poly Poly::pow(std::uint64_t e) const {
    Poly result = constant(field_, 1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly::Element Poly::eval(Element x) const noexcept {
    Element r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = field_.add(field_.mul(r, x), *it);
    return r;
}

Poly Poly::frobenius() const {
    if (is_zero()) return *this;
    const auto p = field_.p();
    std::vector<Element> v((coeffs_.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * p] = coeffs_[i];
    return Poly(field_, std::move(v));
}

std::optional<Poly> Poly::pth_root() const {
    const auto p = field_.p();
    std::vector<Element> v;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i % p == 0)
            v.push_back(coeffs_[i]);
        else if (coeffs_[i] != 0)
            return std::nullopt;
    }
    return Poly(field_, std::move(v));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto c = coeffs_[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c) + "*";
        s += "t";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    if (auto c = a.field_.p() <=> b.field_.p(); c != 0) return c;
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    const auto& f = a.field();
    Poly r0 = a, r1 = b, s0 = Poly::constant(f, 1), s1(f), t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const auto li = f.inv(r0.leading());
    return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly powmod(Poly base, std::uint64_t e, const Poly& modulus) {
    Poly result = Poly::constant(base.field(), 1) % modulus;
    base = base % modulus;
    while (e) {
        if (e & 1) result = (result * base) % modulus;
        e >>= 1;
        if (e) base = (base * base) % modulus;
    }
    return result;
}

}  // namespace heights
