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

#include "heights/isogeny.hpp"

#include "heights/errors.hpp"

namespace heights {

namespace {

EllipticCurve velu_codomain(const EllipticCurve& E, const RatFunc& v, const RatFunc& w) {
    return EllipticCurve::from_a_invariants(E.field(), {E.a1(), E.a2(), E.a3(), E.a4() - v.scaled(5),
                                                        E.a6() - E.b2() * v - w.scaled(7)});
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("isogeny degree overflows 64 bits");
    return a * b;
}

}  // namespace

VeluIsogeny::VeluIsogeny(const CurvePoint& generator) : VeluIsogeny(generator, default_torsion_bound(generator.curve().field())) {}

VeluIsogeny::VeluIsogeny(const CurvePoint& generator, std::uint64_t bound)
    : domain_(generator.curve()), generator_(generator), codomain_(generator.curve()) {
    const auto& E = domain_;
    const auto p = E.field().p();
    std::uint64_t m = 0;
    try {
        m = point_order(generator, bound);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTorsionWithinBound) throw;
        throw Error(ErrorKind::NotFinitePoint, "Velu kernel generator " + generator.to_string() + " is not torsion");
    }
    if (m % p == 0 && m != p)
        throw Error(ErrorKind::BadOrder, "kernel order " + std::to_string(m) + " has a p-part other than p");
    degree_ = m;

    RatFunc v(E.field()), w(E.field());
    CurvePoint Q = generator;
    kernel_.push_back(CurvePoint::infinity(E));
    for (std::uint64_t k = 1; k < m; ++k, Q += generator) {
        kernel_.push_back(Q);
        // One representative of each pair {Q, -Q}; 2-torsion points stand alone.
        if (2 * k > m) continue;
        const bool two_torsion = 2 * k == m;
        KernelTerm term{Q.x(), Q.y(), RatFunc(E.field()), RatFunc(E.field()), RatFunc(E.field()), RatFunc(E.field())};
        term.gx = (term.x * term.x).scaled(3) + (E.a2() * term.x).scaled(2) + E.a4() - E.a1() * term.y;
        term.gy = -term.y.scaled(2) - E.a1() * term.x - E.a3();
        term.v = two_torsion ? term.gx : term.gx.scaled(2) - E.a1() * term.gy;
        term.u = term.gy * term.gy;
        v += term.v;
        w += term.u + term.x * term.v;
        terms_.push_back(std::move(term));
    }
    codomain_ = velu_codomain(E, v, w);
}

CurvePoint VeluIsogeny::operator()(const CurvePoint& P) const {
    if (!(P.curve() == domain_)) throw Error(ErrorKind::CurveMismatch, "point is not on the isogeny's domain");
    if (P.is_infinity()) return CurvePoint::infinity(codomain_);
    for (const auto& K : kernel_)
        if (K == P) return CurvePoint::infinity(codomain_);
    const auto& E = domain_;
    const RatFunc &x = P.x(), &y = P.y();
    RatFunc X = x, Y = y;
    for (const auto& q : terms_) {
        const RatFunc d = (x - q.x).inverse();
        const RatFunc d2 = d * d;
        X += q.v * d + q.u * d2;
        Y -= q.u * (y.scaled(2) + E.a1() * x + E.a3()) * d2 * d + q.v * (E.a1() * (x - q.x) + y - q.y) * d2 +
             (E.a1() * q.u - q.gx * q.gy) * d2;
    }
    return CurvePoint::affine(codomain_, std::move(X), std::move(Y));
}

std::pair<EllipticCurve, std::uint64_t> velu_quotient(const EllipticCurve& E, const CurvePoint& P) {
    if (!(P.curve() == E)) throw Error(ErrorKind::CurveMismatch, "kernel point is not on the curve");
    VeluIsogeny phi(P);
    return {phi.codomain(), phi.degree()};
}

EllipticCurve frobenius_twist(const EllipticCurve& E) {
    EllipticCurve::AInvariants a = E.a();
    for (auto& x : a) x = x.frobenius();
    return EllipticCurve::from_a_invariants(E.field(), std::move(a));
}

EllipticCurve inverse_frobenius_twist(const EllipticCurve& E) {
    EllipticCurve::AInvariants a = E.a();
    for (auto& x : a) {
        auto r = x.pth_root();
        if (!r) throw Error(ErrorKind::NotAPthPower, "a-invariant " + x.to_string() + " is not a p-th power");
        x = std::move(*r);
    }
    return EllipticCurve::from_a_invariants(E.field(), std::move(a));
}

CurvePoint frobenius_point(const CurvePoint& P) {
    const auto target = frobenius_twist(P.curve());
    if (P.is_infinity()) return CurvePoint::infinity(target);
    return CurvePoint::affine(target, P.x().frobenius(), P.y().frobenius());
}

CurvePoint verschiebung_point(const CurvePoint& P) {
    const auto target = inverse_frobenius_twist(P.curve());
    const auto Q = P.multiple(static_cast<std::int64_t>(P.curve().field().p()));
    if (Q.is_infinity()) return CurvePoint::infinity(target);
    auto x = Q.x().pth_root(), y = Q.y().pth_root();
    if (!x || !y) throw std::logic_error("[p]P has coordinates outside K^p");
    return CurvePoint::affine(target, std::move(*x), std::move(*y));
}

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::Velu: return "velu";
        case StepKind::Frobenius: return "frobenius";
        case StepKind::InverseFrobeniusTwist: return "inverse_frobenius";
        case StepKind::Isomorphism: return "isomorphism";
    }
    return "?";
}

IsogenyStep IsogenyStep::velu(const CurvePoint& kernel_generator) {
    return velu(kernel_generator, default_torsion_bound(kernel_generator.curve().field()));
}

IsogenyStep IsogenyStep::velu(const CurvePoint& kernel_generator, std::uint64_t bound) {
    auto phi = std::make_shared<const VeluIsogeny>(kernel_generator, bound);
    IsogenyStep step(StepKind::Velu, phi->domain(), phi->codomain(), phi->degree());
    step.velu_ = std::move(phi);
    return step;
}

IsogenyStep IsogenyStep::frobenius(const EllipticCurve& E) {
    return IsogenyStep(StepKind::Frobenius, E, frobenius_twist(E), E.field().p());
}

IsogenyStep IsogenyStep::inverse_frobenius(const EllipticCurve& E) {
    return IsogenyStep(StepKind::InverseFrobeniusTwist, E, inverse_frobenius_twist(E), E.field().p());
}

IsogenyStep IsogenyStep::isomorphism(const EllipticCurve& E, const RatFunc& u, const RatFunc& r, const RatFunc& s,
                                     const RatFunc& w) {
    IsogenyStep step(StepKind::Isomorphism, E, transform(E, u, r, s, w), 1);
    step.change_ = std::array<RatFunc, 4>{u, r, s, w};
    return step;
}

const CurvePoint& IsogenyStep::kernel_generator() const {
    if (!velu_) throw std::logic_error("not a Velu step");
    return velu_->generator();
}

const std::array<RatFunc, 4>& IsogenyStep::coordinate_change() const {
    if (!change_) throw std::logic_error("not an isomorphism step");
    return *change_;
}

CurvePoint IsogenyStep::map_point(const CurvePoint& P) const {
    if (!(P.curve() == source_)) throw Error(ErrorKind::CurveMismatch, "point is not on the step's source");
    switch (kind_) {
        case StepKind::Velu: return (*velu_)(P);
        case StepKind::Frobenius: return frobenius_point(P);
        case StepKind::InverseFrobeniusTwist: return verschiebung_point(P);
        case StepKind::Isomorphism: {
            if (P.is_infinity()) return CurvePoint::infinity(target_);
            const auto& [u, r, s, w] = *change_;
            // x = u^2 x' + r, y = u^3 y' + s u^2 x' + w
            const RatFunc xp = (P.x() - r) / (u * u);
            const RatFunc yp = (P.y() - s * u * u * xp - w) / u.pow(3);
            return CurvePoint::affine(target_, xp, yp);
        }
    }
    throw std::logic_error("unknown step kind");
}

IsogenyChain chain_bookkeeping(const EllipticCurve& source, std::vector<IsogenyStep> steps) {
    IsogenyChain chain{source, source, {}, 1, 1, 1, 0, 0};
    const auto p = source.field().p();
    bool involves_p = false;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        if (!(s.source() == chain.target))
            throw Error(ErrorKind::IncomposableSteps, "step " + std::to_string(i) + " does not start where step " +
                                                          std::to_string(i) + "-1 ends");
        chain.degree = checked_mul(chain.degree, s.degree());
        switch (s.kind()) {
            case StepKind::Frobenius:
                chain.deg_ins = checked_mul(chain.deg_ins, p);
                ++chain.delta_p;
                involves_p = true;
                break;
            case StepKind::InverseFrobeniusTwist:
                chain.deg_ins_dual = checked_mul(chain.deg_ins_dual, p);
                ++chain.delta_p_dual;
                involves_p = true;
                break;
            case StepKind::Velu:
                if (s.degree() % p == 0) {
                    chain.deg_ins_dual = checked_mul(chain.deg_ins_dual, p);
                    ++chain.delta_p_dual;
                    involves_p = true;
                }
                break;
            case StepKind::Isomorphism: break;
        }
        chain.target = s.target();
    }
    if (involves_p && is_isotrivial(source))
        throw Error(ErrorKind::IsotrivialSource,
                    "p-power isogeny bookkeeping needs an ordinary (non-isotrivial) source: " + source.to_string());
    // The Frobenius-height identities are checked, not assumed.
    std::uint64_t pd = 1, pdd = 1;
    for (std::uint32_t k = 0; k < chain.delta_p; ++k) pd *= p;
    for (std::uint32_t k = 0; k < chain.delta_p_dual; ++k) pdd *= p;
    if (pd != chain.deg_ins || pdd != chain.deg_ins_dual || chain.degree % chain.deg_ins != 0 ||
        chain.degree % chain.deg_ins_dual != 0)
        throw std::logic_error("inconsistent isogeny chain bookkeeping");
    chain.steps = std::move(steps);
    return chain;
}

}  // namespace heights
