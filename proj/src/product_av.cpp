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

#include "heights/product_av.hpp"

#include <algorithm>
#include <stdexcept>

#include "heights/errors.hpp"

namespace heights {

ProductAV::ProductAV(std::vector<EllipticCurve> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("a product needs at least one factor");
    for (const auto& E : factors_)
        if (E.field() != factors_.front().field()) throw Error(ErrorKind::FieldMismatch, "factors over different fields");
}

Rational product_height(const ProductAV& A) {
    Rational h(0);
    for (const auto& E : A.factors()) h += differential_height(E);
    return h;
}

namespace {

IsogenyChain run_actions(const EllipticCurve& E, const std::vector<FactorAction>& actions) {
    std::vector<IsogenyStep> steps;
    EllipticCurve cur = E;
    bool semistable_checked = false;
    for (const auto& a : actions) {
        if ((a.kind == FactorAction::Kind::Frobenius || a.kind == FactorAction::Kind::InverseFrobenius) &&
            !semistable_checked) {
            if (!is_semistable(E))
                throw Error(ErrorKind::SemistabilityRequired, "Frobenius bookkeeping on a factor that is not semi-stable: " +
                                                                  E.to_string());
            semistable_checked = true;
        }
        switch (a.kind) {
            case FactorAction::Kind::Identity: break;
            case FactorAction::Kind::Frobenius:
                for (std::uint32_t k = 0; k < a.exponent; ++k) {
                    steps.push_back(IsogenyStep::frobenius(cur));
                    cur = steps.back().target();
                }
                break;
            case FactorAction::Kind::InverseFrobenius:
                for (std::uint32_t k = 0; k < a.exponent; ++k) {
                    steps.push_back(IsogenyStep::inverse_frobenius(cur));
                    cur = steps.back().target();
                }
                break;
            case FactorAction::Kind::Velu:
                steps.push_back(IsogenyStep::velu(CurvePoint::affine(cur, a.kernel->first, a.kernel->second)));
                cur = steps.back().target();
                break;
        }
    }
    return chain_bookkeeping(E, std::move(steps));
}

}  // namespace

FVResult apply_fv_plan(const ProductAV& A, const FVPlan& plan) {
    if (plan.size() != A.dim())
        throw std::invalid_argument("plan has " + std::to_string(plan.size()) + " factors, product has " +
                                    std::to_string(A.dim()));
    std::vector<EllipticCurve> targets;
    std::vector<IsogenyChain> chains;
    FVResult r{A, {}, std::nullopt, 1, 0, 0};
    bool uniform = true;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        auto ch = run_actions(A.factors()[i], plan[i]);
        r.degree *= ch.degree;
        r.delta_p = std::max(r.delta_p, ch.delta_p);
        r.delta_p_dual = std::max(r.delta_p_dual, ch.delta_p_dual);
        if (i > 0 && (ch.delta_p != chains.front().delta_p || ch.delta_p_dual != chains.front().delta_p_dual))
            uniform = false;
        targets.push_back(ch.target);
        chains.push_back(std::move(ch));
    }
    if (uniform) r.type = std::pair{chains.front().delta_p, chains.front().delta_p_dual};
    r.target = ProductAV(std::move(targets));
    r.chains = std::move(chains);
    return r;
}

FVPlan phi_ij_plan(std::size_t g, std::size_t i, std::size_t j) {
    if (i + j > g) throw std::invalid_argument("phi_ij needs i + j <= g");
    FVPlan plan(g);
    for (std::size_t k = 0; k < g; ++k) {
        if (k < i)
            plan[k] = {FactorAction::frobenius()};
        else if (k < i + j)
            plan[k] = {FactorAction::inverse_frobenius()};
        else
            plan[k] = {FactorAction::identity()};
    }
    return plan;
}

KaniReport kani_configuration(const EllipticCurve& E, const CurvePoint& P) {
    const auto p = E.field().p();
    const std::uint64_t m = (p * p - 1) / 4;
    if (!(P.curve() == E)) throw Error(ErrorKind::CurveMismatch, "point is not on the curve");
    std::uint64_t order = 0;
    try {
        order = point_order(P, m);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTorsionWithinBound) throw;
    }
    if (order != m)
        throw Error(ErrorKind::WrongOrder, "Kani configuration needs a point of exact order " + std::to_string(m) +
                                               " = (p^2-1)/4, got " + P.to_string());
    const auto P1 = P.multiple(static_cast<std::int64_t>((p + 1) / 2));
    const auto P2 = P.multiple(static_cast<std::int64_t>((p - 1) / 2));
    const VeluIsogeny pi(P), pi1(P1), pi2(P2);
    KaniReport r{p, m, P, P1, P2, E, pi.codomain(), pi1.codomain(), pi2.codomain(), pi.degree(), pi1.degree(),
                 pi2.degree(), 0, false, {}, false, false};
    const std::uint64_t s = pi1.degree() + pi2.degree();
    r.deg_psi = s * s;
    r.deg_psi_is_p_squared = r.deg_psi == p * p;
    r.h_mod = {modular_height(E), modular_height(r.E_P), modular_height(r.E_P1), modular_height(r.E_P2)};
    r.heights_equal = std::all_of(r.h_mod.begin(), r.h_mod.end(), [&](auto h) { return h == r.h_mod.front(); });
    return r;
}

bool shioda_criterion(std::uint64_t p, std::uint64_t h1, std::uint64_t h2) {
    if (h1 == 0 || h2 == 0) throw Error(ErrorKind::IsotrivialInput, "zero modular height");
    return !is_power_of(Rational(static_cast<std::int64_t>(h1), static_cast<std::int64_t>(h2)), p);
}

bool shioda_nonisomorphism_check(const EllipticCurve& E, const EllipticCurve& E1, const EllipticCurve& E2) {
    if (E1.field() != E.field() || E2.field() != E.field())
        throw Error(ErrorKind::FieldMismatch, "curves over different fields");
    for (const auto* X : {&E1, &E2})
        if (is_isotrivial(*X)) throw Error(ErrorKind::IsotrivialInput, "constant j-invariant: " + X->to_string());
    return shioda_criterion(E.field().p(), modular_height(E1), modular_height(E2));
}

}  // namespace heights
