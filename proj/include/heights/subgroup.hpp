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

#include <cstdint>
#include <set>
#include <vector>

#include "heights/isogeny.hpp"

namespace heights {

/// ker(Fr^e) + <generators>: a connected part of order p^e and an etale part
/// generated by K-rational torsion points.
struct SubgroupSpec {
    EllipticCurve curve;
    std::uint32_t frobenius_exponent = 0;
    std::vector<CurvePoint> etale_generators;

    static SubgroupSpec trivial(const EllipticCurve& E) { return {E, 0, {}}; }
};

/// Every element of the etale part, by closure under addition. Throws
/// NotTorsionWithinBound if the closure exceeds `bound` elements, CurveMismatch
/// for generators on another curve, and BadOrder for a generator whose order
/// has a p-part other than p.
std::set<CurvePoint> etale_elements(const SubgroupSpec& G, std::uint64_t bound);

std::uint64_t subgroup_order(const SubgroupSpec& G, std::uint64_t bound);
std::uint64_t subgroup_order(const SubgroupSpec& G);

/// Connected exponents take the max (sum) or min (intersection); etale parts
/// are the span of the union or the set intersection. The connected and etale
/// parts meet trivially, so they combine independently.
SubgroupSpec subgroup_sum(const SubgroupSpec& G, const SubgroupSpec& H);
SubgroupSpec subgroup_intersection(const SubgroupSpec& G, const SubgroupSpec& H, std::uint64_t bound);
SubgroupSpec subgroup_intersection(const SubgroupSpec& G, const SubgroupSpec& H);

/// A generating set for a finite subgroup given by its elements.
std::vector<CurvePoint> generators_of(const std::set<CurvePoint>& elements);

struct Quotient {
    EllipticCurve codomain;
    IsogenyChain chain;
};

/// E/G as Fr^e followed by Velu quotients by the images of the etale generators,
/// taken in input order.
Quotient quotient_by_subgroup(const EllipticCurve& E, const SubgroupSpec& G, std::uint64_t bound);
Quotient quotient_by_subgroup(const EllipticCurve& E, const SubgroupSpec& G);

}  // namespace heights
