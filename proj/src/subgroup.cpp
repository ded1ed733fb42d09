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

#include "heights/subgroup.hpp"

#include <algorithm>

#include "heights/errors.hpp"

namespace heights {

namespace {

void check_generator(const SubgroupSpec& G, const CurvePoint& P, std::uint64_t bound) {
    if (!(P.curve() == G.curve)) throw Error(ErrorKind::CurveMismatch, "generator " + P.to_string() + " is on another curve");
    const auto m = point_order(P, bound);
    const auto p = G.curve.field().p();
    if (m % p == 0 && m != p)
        throw Error(ErrorKind::BadOrder, "generator of order " + std::to_string(m) + " has a p-part other than p");
}

std::set<CurvePoint> span(const EllipticCurve& E, const std::vector<CurvePoint>& gens, std::uint64_t bound) {
    std::set<CurvePoint> elems{CurvePoint::infinity(E)};
    std::vector<CurvePoint> frontier{CurvePoint::infinity(E)};
    while (!frontier.empty()) {
        std::vector<CurvePoint> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                auto b = a + g;
                if (elems.insert(b).second) {
                    if (elems.size() > bound)
                        throw Error(ErrorKind::NotTorsionWithinBound,
                                    "generated subgroup exceeds " + std::to_string(bound) + " elements");
                    next.push_back(std::move(b));
                }
            }
        frontier = std::move(next);
    }
    return elems;
}

void require_same_curve(const SubgroupSpec& G, const SubgroupSpec& H) {
    if (!(G.curve == H.curve)) throw Error(ErrorKind::CurveMismatch, "subgroups of different curves");
}

}  // namespace

std::set<CurvePoint> etale_elements(const SubgroupSpec& G, std::uint64_t bound) {
    for (const auto& g : G.etale_generators) check_generator(G, g, bound);
    return span(G.curve, G.etale_generators, bound);
}

std::uint64_t subgroup_order(const SubgroupSpec& G, std::uint64_t bound) {
    std::uint64_t order = etale_elements(G, bound).size();
    for (std::uint32_t i = 0; i < G.frobenius_exponent; ++i) order *= G.curve.field().p();
    return order;
}

std::uint64_t subgroup_order(const SubgroupSpec& G) { return subgroup_order(G, default_torsion_bound(G.curve.field())); }

SubgroupSpec subgroup_sum(const SubgroupSpec& G, const SubgroupSpec& H) {
    require_same_curve(G, H);
    SubgroupSpec S{G.curve, std::max(G.frobenius_exponent, H.frobenius_exponent), G.etale_generators};
    S.etale_generators.insert(S.etale_generators.end(), H.etale_generators.begin(), H.etale_generators.end());
    return S;
}

std::vector<CurvePoint> generators_of(const std::set<CurvePoint>& elements) {
    if (elements.empty()) return {};
    const auto& E = elements.begin()->curve();
    // Greedy: take elements of largest order first until they span everything.
    std::vector<std::pair<std::uint64_t, CurvePoint>> by_order;
    for (const auto& P : elements) by_order.emplace_back(point_order(P, elements.size()), P);
    std::stable_sort(by_order.begin(), by_order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<CurvePoint> gens;
    std::set<CurvePoint> spanned{CurvePoint::infinity(E)};
    for (const auto& [m, P] : by_order) {
        if (spanned.count(P)) continue;
        gens.push_back(P);
        spanned = span(E, gens, elements.size());
        if (spanned.size() == elements.size()) break;
    }
    return gens;
}

SubgroupSpec subgroup_intersection(const SubgroupSpec& G, const SubgroupSpec& H, std::uint64_t bound) {
    require_same_curve(G, H);
    const auto a = etale_elements(G, bound);
    const auto b = etale_elements(H, bound);
    std::set<CurvePoint> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(common, common.end()));
    return {G.curve, std::min(G.frobenius_exponent, H.frobenius_exponent), generators_of(common)};
}

SubgroupSpec subgroup_intersection(const SubgroupSpec& G, const SubgroupSpec& H) {
    return subgroup_intersection(G, H, default_torsion_bound(G.curve.field()));
}

Quotient quotient_by_subgroup(const EllipticCurve& E, const SubgroupSpec& G, std::uint64_t bound) {
    if (!(G.curve == E)) throw Error(ErrorKind::CurveMismatch, "subgroup is not on the given curve");
    for (const auto& g : G.etale_generators) check_generator(G, g, bound);
    std::vector<IsogenyStep> steps;
    EllipticCurve current = E;
    std::vector<CurvePoint> pending = G.etale_generators;
    auto push = [&](IsogenyStep step) {
        for (auto& P : pending) P = step.map_point(P);
        current = step.target();
        steps.push_back(std::move(step));
    };
    for (std::uint32_t i = 0; i < G.frobenius_exponent; ++i) push(IsogenyStep::frobenius(current));
    for (std::size_t i = 0; i < pending.size(); ++i) {
        if (pending[i].is_infinity()) continue;
        auto step = IsogenyStep::velu(pending[i], bound);
        push(std::move(step));
    }
    auto chain = chain_bookkeeping(E, std::move(steps));
    return {chain.target, std::move(chain)};
}

Quotient quotient_by_subgroup(const EllipticCurve& E, const SubgroupSpec& G) {
    return quotient_by_subgroup(E, G, default_torsion_bound(E.field()));
}

}  // namespace heights
