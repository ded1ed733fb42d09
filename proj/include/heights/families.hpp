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

#include "heights/point.hpp"

namespace heights {

/// A curve together with a distinguished K-rational point.
struct PointedCurve {
    EllipticCurve curve;
    CurvePoint point;
};

/// Tate normal form y^2 + (1 - c) x y - b y = x^3 - b x^2 with its point (0, 0).
PointedCurve tate_normal_form(const RatFunc& b, const RatFunc& c);

/// (0, 0) of order 5: b = c = s.
PointedCurve tate_normal_5(const RatFunc& s);
/// (0, 0) of order 6: b = s + s^2, c = s.
PointedCurve tate_normal_6(const RatFunc& s);
/// (0, 0) of order 7: b = s^3 - s^2, c = s^2 - s.
PointedCurve tate_normal_7(const RatFunc& s);

/// y^2 = x (x^2 + a x + b) with the 2-torsion point (0, 0).
PointedCurve two_torsion_family(const RatFunc& a, const RatFunc& b);
/// y^2 + a1 x y + a3 y = x^3 with the 3-torsion point (0, 0).
PointedCurve three_torsion_family(const RatFunc& a1, const RatFunc& a3);

}  // namespace heights
