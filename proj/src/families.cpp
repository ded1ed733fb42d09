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

#include "heights/families.hpp"

namespace heights {

namespace {

PointedCurve with_origin(EllipticCurve E) {
    const RatFunc zero(E.field());
    auto P = CurvePoint::affine(E, zero, zero);
    return {std::move(E), std::move(P)};
}

}  // namespace

PointedCurve tate_normal_form(const RatFunc& b, const RatFunc& c) {
    const auto f = b.field();
    const RatFunc zero(f), one = RatFunc::constant(f, 1);
    return with_origin(EllipticCurve::from_a_invariants(f, {one - c, -b, -b, zero, zero}));
}

PointedCurve tate_normal_5(const RatFunc& s) { return tate_normal_form(s, s); }

PointedCurve tate_normal_6(const RatFunc& s) { return tate_normal_form(s + s * s, s); }

PointedCurve tate_normal_7(const RatFunc& s) { return tate_normal_form(s.pow(3) - s * s, s * s - s); }

PointedCurve two_torsion_family(const RatFunc& a, const RatFunc& b) {
    const RatFunc zero(a.field());
    return with_origin(EllipticCurve::from_a_invariants(a.field(), {zero, a, zero, b, zero}));
}

PointedCurve three_torsion_family(const RatFunc& a1, const RatFunc& a3) {
    const RatFunc zero(a1.field());
    return with_origin(EllipticCurve::from_a_invariants(a1.field(), {a1, zero, a3, zero, zero}));
}

}  // namespace heights
