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

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "heights/place.hpp"
#include "heights/rational.hpp"
#include "heights/ratfunc.hpp"

namespace heights {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over
/// F_p(t), with its b/c invariants, discriminant and j cached at construction.
/// Copies share the immutable invariant block.
class EllipticCurve {
  public:
    using AInvariants = std::array<RatFunc, 5>;  // a1, a2, a3, a4, a6

    /// Throws SingularModel when the discriminant vanishes.
    static EllipticCurve from_a_invariants(const PrimeField& field, AInvariants a);
    /// Short form y^2 = x^3 + A x + B.
    static EllipticCurve short_form(const RatFunc& A, const RatFunc& B);

    const PrimeField& field() const noexcept { return d_->field; }
    const AInvariants& a() const noexcept { return d_->a; }
    const RatFunc& a1() const noexcept { return d_->a[0]; }
    const RatFunc& a2() const noexcept { return d_->a[1]; }
    const RatFunc& a3() const noexcept { return d_->a[2]; }
    const RatFunc& a4() const noexcept { return d_->a[3]; }
    const RatFunc& a6() const noexcept { return d_->a[4]; }
    const RatFunc& b2() const noexcept { return d_->b2; }
    const RatFunc& b4() const noexcept { return d_->b4; }
    const RatFunc& b6() const noexcept { return d_->b6; }
    const RatFunc& b8() const noexcept { return d_->b8; }
    const RatFunc& c4() const noexcept { return d_->c4; }
    const RatFunc& c6() const noexcept { return d_->c6; }
    const RatFunc& discriminant() const noexcept { return d_->delta; }
    const RatFunc& j() const noexcept { return d_->j; }

    /// Every a-invariant lies in F_p(t^p).
    bool defined_over_pth_powers() const;

    /// Left-hand side minus right-hand side of the equation at (x, y).
    RatFunc equation(const RatFunc& x, const RatFunc& y) const;

    std::string to_string() const;

    friend bool operator==(const EllipticCurve& a, const EllipticCurve& b) noexcept {
        return a.d_ == b.d_ || (a.d_->field == b.d_->field && a.d_->a == b.d_->a);
    }

  private:
    struct Data {
        PrimeField field;
        AInvariants a;
        RatFunc b2, b4, b6, b8, c4, c6, delta, j;
    };
    explicit EllipticCurve(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    std::shared_ptr<const Data> d_;
};

/// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + w.
/// The result is isomorphic, with the same j and discriminant u^-12 * Delta.
EllipticCurve transform(const EllipticCurve& E, const RatFunc& u, const RatFunc& r, const RatFunc& s,
                        const RatFunc& w);

/// Kodaira symbol of a fiber, with the index n for I_n and I*_n.
struct Kodaira {
    enum class Symbol { I0, In, II, III, IV, InStar, IVStar, IIIStar, IIStar };
    Symbol symbol = Symbol::I0;
    std::int64_t n = 0;

    bool semistable() const noexcept { return symbol == Symbol::I0 || symbol == Symbol::In; }
    std::string to_string() const;
    friend bool operator==(const Kodaira&, const Kodaira&) = default;
};

struct ReductionData {
    Place place;
    Kodaira kodaira;
    std::int64_t v_delta_min = 0;
    bool is_semistable_here = true;
    /// The minimal model at this place is reached by scaling with u = pi^scaling.
    std::int64_t scaling = 0;
    /// Valuations of c4 and c6 on the minimal model; nullopt when the invariant is 0.
    std::optional<std::int64_t> v_c4_min, v_c6_min;
};

/// Reduction type at v for p >= 5, from the valuations of c4, c6 and Delta.
ReductionData tate_at(const EllipticCurve& E, const Place& v);

/// A model integral and minimal at v: y^2 = x^3 - 27 c4' x - 54 c6' with c4', c6'
/// scaled by the minimal exponent.
EllipticCurve local_minimal_model(const EllipticCurve& E, const Place& v);

/// Places where some model could have bad reduction: zeros and poles of Delta,
/// poles of c4 and c6, and infinity.
std::vector<Place> candidate_bad_places(const EllipticCurve& E);

Divisor minimal_discriminant_divisor(const EllipticCurve& E);

struct HeightReport {
    Rational h_diff;
    std::uint64_t h_mod = 0;
    Divisor delta_min;
    bool semistable = true;
    bool isotrivial = false;
    std::vector<ReductionData> fibers;  // bad fibers only, in place order
};

HeightReport height_report(const EllipticCurve& E);
/// deg(Delta_min) / 12.
Rational differential_height(const EllipticCurve& E);
/// Weil height of j.
std::uint64_t modular_height(const EllipticCurve& E);
bool is_semistable(const EllipticCurve& E);
bool is_isotrivial(const EllipticCurve& E);

}  // namespace heights
