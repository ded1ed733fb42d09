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

#include "heights/theorem_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "heights/errors.hpp"

namespace heights {

void Verdict::add(std::string relation, Rational l, Rational r) {
    relations.push_back(std::move(relation));
    lhs.push_back(l);
    rhs.push_back(r);
    settle();
}

void Verdict::settle() {
    holds = true;
    is_equality = true;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        const bool eq = lhs[i] == rhs[i];
        is_equality = is_equality && eq;
        holds = holds && (relations[i] == "=" ? eq : lhs[i] <= rhs[i]);
    }
}

io::json to_json(const Verdict& v) {
    io::json lhs = io::json::array(), rhs = io::json::array();
    for (const auto& x : v.lhs) lhs.push_back(to_string(x));
    for (const auto& x : v.rhs) rhs.push_back(to_string(x));
    return {{"statement", v.statement}, {"relations", v.relations}, {"lhs", lhs},
            {"rhs", rhs},               {"holds", v.holds},         {"is_equality", v.is_equality},
            {"context", v.context}};
}

namespace {

void require_same(const EllipticCurve& E, const IsogenyChain& chain) {
    if (!(chain.source == E)) throw Error(ErrorKind::CurveMismatch, "chain does not start at the given curve");
}

void require_nonisotrivial(const EllipticCurve& E) {
    if (is_isotrivial(E)) throw Error(ErrorKind::IsotrivialInput, "curve has constant j: " + E.to_string());
}

void require_semistable(const EllipticCurve& E) {
    if (!is_semistable(E)) throw Error(ErrorKind::SemistabilityRequired, "curve is not semi-stable: " + E.to_string());
}

Rational ratio(const IsogenyChain& chain) { return chain.height_ratio(); }

Rational as_rational(std::uint64_t h) { return Rational(static_cast<std::int64_t>(h)); }

}  // namespace

Verdict verify_Hd(const EllipticCurve& E, const IsogenyChain& chain) {
    require_same(E, chain);
    require_nonisotrivial(E);
    require_semistable(E);
    Verdict v{"Hd", {}, {}, {}, false, false, {{"curve", io::to_json(E)}, {"chain", io::to_json(chain)}}};
    v.add("=", differential_height(chain.target), ratio(chain) * differential_height(E));
    return v;
}

Verdict verify_Hm(const EllipticCurve& E, const IsogenyChain& chain) {
    require_same(E, chain);
    require_nonisotrivial(E);
    Verdict v{"Hm", {}, {}, {}, false, false, {{"curve", io::to_json(E)}, {"chain", io::to_json(chain)}}};
    v.add("=", as_rational(modular_height(chain.target)), ratio(chain) * as_rational(modular_height(E)));
    return v;
}

Verdict verify_verfrob(const ProductAV& A, const FVPlan& plan) {
    for (const auto& E : A.factors()) {
        require_nonisotrivial(E);
        require_semistable(E);
    }
    const auto r = apply_fv_plan(A, plan);
    if (!r.type) throw Error(ErrorKind::NotUniformPlan, "factors undergo isogenies of different types");
    const auto [e, f] = *r.type;
    const auto p = A.field().p();
    Verdict v{"verfrob", {}, {}, {}, false, false,
              {{"product", io::to_json(A)}, {"plan", io::to_json(plan)}, {"e", e}, {"f", f}}};
    v.add("=", product_height(r.target),
          power_of(p, static_cast<std::int64_t>(e) - static_cast<std::int64_t>(f)) * product_height(A));
    return v;
}

Verdict verify_main_bounds(const ProductAV& A, const std::vector<IsogenyChain>& chains) {
    if (chains.size() != A.dim()) throw std::invalid_argument("need one chain per factor");
    std::uint32_t delta = 0, dual = 0;
    std::vector<EllipticCurve> targets;
    io::json cj = io::json::array();
    for (std::size_t i = 0; i < A.dim(); ++i) {
        const auto& E = A.factors()[i];
        require_same(E, chains[i]);
        require_nonisotrivial(E);
        require_semistable(E);
        delta = std::max(delta, chains[i].delta_p);
        dual = std::max(dual, chains[i].delta_p_dual);
        targets.push_back(chains[i].target);
        cj.push_back(io::to_json(chains[i]));
    }
    const auto p = A.field().p();
    const Rational hA = product_height(A), hB = product_height(ProductAV(std::move(targets)));
    Verdict v{"bounds", {}, {}, {}, false, false,
              {{"product", io::to_json(A)}, {"chains", cj}, {"delta", delta}, {"delta_dual", dual}}};
    v.add("<=", power_of(p, -static_cast<std::int64_t>(dual)) * hA, hB);
    v.add("<=", hB, power_of(p, delta) * hA);
    return v;
}

Verdict verify_main_bounds(const ProductAV& A, const FVPlan& plan) {
    for (const auto& E : A.factors()) require_semistable(E);
    auto r = apply_fv_plan(A, plan);
    auto v = verify_main_bounds(A, r.chains);
    v.context["plan"] = io::to_json(plan);
    return v;
}

Verdict verify_parallelogram(const EllipticCurve& E, const SubgroupSpec& G, const SubgroupSpec& H) {
    const auto p = E.field().p();
    const auto S = subgroup_sum(G, H);
    const auto I = subgroup_intersection(G, H);
    const auto h = [&](const SubgroupSpec& X) { return as_rational(modular_height(quotient_by_subgroup(E, X).codomain)); };
    const auto oG = subgroup_order(G), oH = subgroup_order(H), oS = subgroup_order(S), oI = subgroup_order(I);
    const bool coprime = oG % p != 0 || oH % p != 0;
    Verdict v{"parallelogram", {}, {}, {}, false, false,
              {{"curve", io::to_json(E)},
               {"G", io::to_json(G)},
               {"H", io::to_json(H)},
               {"orders", {{"G", oG}, {"H", oH}, {"sum", oS}, {"intersection", oI}}},
               {"coprime_to_p", coprime}}};
    v.add(coprime ? "=" : "<=", h(S) + h(I), h(G) + h(H));
    v.add("=", as_rational(oS) * as_rational(oI), as_rational(oG) * as_rational(oH));
    return v;
}

Verdict verify_subvariety(const ProductAV& A, const std::vector<std::size_t>& indices) {
    std::vector<bool> in(A.dim(), false);
    for (auto i : indices) {
        if (i >= A.dim()) throw std::invalid_argument("factor index " + std::to_string(i) + " out of range");
        in[i] = true;
    }
    Rational hB(0), hQ(0);
    for (std::size_t i = 0; i < A.dim(); ++i) (in[i] ? hB : hQ) += differential_height(A.factors()[i]);
    io::json idx = io::json::array();
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (in[i]) idx.push_back(i);
    Verdict v{"subvariety", {}, {}, {}, false, false, {{"product", io::to_json(A)}, {"B", idx}}};
    v.add("<=", hB + hQ, product_height(A));
    return v;
}

namespace random {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased and independent of the library.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

RatFunc parameter(const PrimeField& f, std::mt19937_64& rng) {
    const std::size_t d = 1 + below(rng, 2);
    std::vector<PrimeField::Element> c(d + 1);
    for (auto& x : c) x = below(rng, f.p());
    c[d] = 1 + below(rng, f.p() - 1);
    return RatFunc(Poly(f, std::move(c)));
}

PointedCurve semistable_curve(const PrimeField& f, std::mt19937_64& rng) {
    for (;;) {
        const auto s = parameter(f, rng);
        try {
            PointedCurve pc = [&] {
                switch (below(rng, 3)) {
                    case 0: return tate_normal_5(s);
                    case 1: return tate_normal_6(s);
                    default: return tate_normal_7(s);
                }
            }();
            if (!is_isotrivial(pc.curve) && is_semistable(pc.curve)) return pc;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularModel) throw;
        }
    }
}

namespace {

RatFunc small_poly(const PrimeField& f, std::mt19937_64& rng) {
    std::vector<PrimeField::Element> c(3);
    for (auto& x : c) x = below(rng, f.p());
    return RatFunc(Poly(f, std::move(c)));
}

}  // namespace

PointedCurve torsion_curve(const PrimeField& f, std::uint64_t ell, std::mt19937_64& rng) {
    if (ell == f.p() || (ell != 2 && ell != 3 && ell != 5 && ell != 7))
        throw std::invalid_argument("torsion order must be 2, 3, 5 or 7 and differ from p");
    for (;;) {
        try {
            std::optional<PointedCurve> pc;
            const bool family = below(rng, 2) == 0;
            switch (ell) {
                case 2:
                    if (family) {
                        pc = two_torsion_family(small_poly(f, rng), small_poly(f, rng));
                    } else {
                        auto t6 = tate_normal_6(parameter(f, rng));
                        pc = PointedCurve{t6.curve, t6.point.multiple(3)};
                    }
                    break;
                case 3:
                    if (family) {
                        pc = three_torsion_family(small_poly(f, rng), small_poly(f, rng));
                    } else {
                        auto t6 = tate_normal_6(parameter(f, rng));
                        pc = PointedCurve{t6.curve, t6.point.multiple(2)};
                    }
                    break;
                case 5: pc = tate_normal_5(parameter(f, rng)); break;
                default: pc = tate_normal_7(parameter(f, rng)); break;
            }
            if (!is_isotrivial(pc->curve)) return *pc;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularModel) throw;
        }
    }
}

}  // namespace random

namespace {

constexpr std::uint64_t primes[] = {5, 7, 11, 13};

PrimeField random_field(std::mt19937_64& rng) { return PrimeField{primes[random::below(rng, 4)]}; }

void merge(Verdict& into, const Verdict& from) {
    for (std::size_t i = 0; i < from.lhs.size(); ++i) into.add(from.relations[i], from.lhs[i], from.rhs[i]);
}

Verdict biseparable_instance(std::mt19937_64& rng) {
    const auto f = random_field(rng);
    std::vector<std::uint64_t> ells;
    for (std::uint64_t l : {2, 3, 5, 7})
        if (l != f.p()) ells.push_back(l);
    const auto ell = ells[random::below(rng, ells.size())];
    const auto pc = random::torsion_curve(f, ell, rng);
    const auto chain = chain_bookkeeping(pc.curve, {IsogenyStep::velu(pc.point)});
    Verdict v = verify_Hm(pc.curve, chain);
    v.statement = "biseparable";
    v.context["ell"] = ell;
    v.context["semistable"] = is_semistable(pc.curve);
    if (is_semistable(pc.curve)) merge(v, verify_Hd(pc.curve, chain));
    return v;
}

Verdict frobenius_instance(std::mt19937_64& rng) {
    const auto f = random_field(rng);
    const auto pc = random::semistable_curve(f, rng);
    const auto chain = chain_bookkeeping(pc.curve, {IsogenyStep::frobenius(pc.curve)});
    Verdict v = verify_Hd(pc.curve, chain);
    v.statement = "frobenius";
    merge(v, verify_Hm(pc.curve, chain));
    return v;
}

// A random chain of up to three steps from E, with P a tracked torsion point.
// Frobenius steps are skipped once p^depth would exceed 125, which keeps the
// coefficient degrees desk-sized.
IsogenyChain random_chain(const PointedCurve& pc, std::mt19937_64& rng) {
    const auto p = pc.curve.field().p();
    std::vector<IsogenyStep> steps;
    EllipticCurve cur = pc.curve;
    CurvePoint P = pc.point;
    std::uint64_t scale = 1;  // p^(Frobenius steps - inverse Frobenius steps), at least 1
    const auto len = random::below(rng, 4);
    for (std::uint64_t k = 0; k < len; ++k) {
        const auto kind = random::below(rng, 3);
        if (kind == 1 && cur.defined_over_pth_powers()) {
            steps.push_back(IsogenyStep::inverse_frobenius(cur));
            if (scale > 1) scale /= p;
        } else if (kind == 2 && !P.is_infinity()) {
            const auto m = point_order(P);
            // A multiple whose order is prime to p or exactly p.
            std::vector<std::int64_t> ks;
            for (std::uint64_t c = 1; c < m; ++c) {
                const auto o = point_order(P.multiple(static_cast<std::int64_t>(c)), m);
                if (o % p != 0 || o == p) ks.push_back(static_cast<std::int64_t>(c));
            }
            if (ks.empty()) continue;
            steps.push_back(IsogenyStep::velu(P.multiple(ks[random::below(rng, ks.size())])));
        } else if (scale * p <= 125) {
            steps.push_back(IsogenyStep::frobenius(cur));
            scale *= p;
        } else {
            continue;
        }
        P = steps.back().map_point(P);
        cur = steps.back().target();
    }
    return chain_bookkeeping(pc.curve, std::move(steps));
}

Verdict bounds_instance(std::mt19937_64& rng) {
    const auto f = random_field(rng);
    const auto g = 1 + random::below(rng, 3);
    std::vector<EllipticCurve> factors;
    std::vector<IsogenyChain> chains;
    for (std::uint64_t i = 0; i < g; ++i) {
        const auto pc = random::semistable_curve(f, rng);
        factors.push_back(pc.curve);
        chains.push_back(random_chain(pc, rng));
    }
    return verify_main_bounds(ProductAV(std::move(factors)), chains);
}

SubgroupSpec random_subgroup(const PointedCurve& pc, std::uint32_t max_e, std::mt19937_64& rng) {
    SubgroupSpec G = SubgroupSpec::trivial(pc.curve);
    G.frobenius_exponent = static_cast<std::uint32_t>(random::below(rng, max_e + 1));
    for (std::int64_t k : {1, 2, 3})
        if (random::below(rng, 3) == 0) G.etale_generators.push_back(pc.point.multiple(k));
    return G;
}

Verdict parallelogram_instance(std::mt19937_64& rng) {
    const auto f = random_field(rng);
    PointedCurve pc = tate_normal_6(random::parameter(f, rng));
    while (is_isotrivial(pc.curve)) pc = tate_normal_6(random::parameter(f, rng));
    // G may have a connected part; H is etale of order dividing 6, prime to p.
    auto G = random_subgroup(pc, 1, rng);
    auto H = random_subgroup(pc, 0, rng);
    if (random::below(rng, 2)) std::swap(G, H);
    return verify_parallelogram(pc.curve, G, H);
}

}  // namespace

const std::vector<std::string>& sweep_suites() {
    static const std::vector<std::string> suites{"biseparable", "frobenius", "bounds", "parallelogram"};
    return suites;
}

SweepReport run_sweep(std::string_view suite, std::uint64_t seed, std::size_t count, bool corrupt_oracle) {
    Verdict (*instance)(std::mt19937_64&) = nullptr;
    if (suite == "biseparable")
        instance = biseparable_instance;
    else if (suite == "frobenius")
        instance = frobenius_instance;
    else if (suite == "bounds")
        instance = bounds_instance;
    else if (suite == "parallelogram")
        instance = parallelogram_instance;
    else
        throw std::invalid_argument("unknown sweep suite \"" + std::string(suite) + "\"");
    SweepReport r{std::string(suite), seed, count, 0, {}};
    for (std::size_t i = 0; i < count; ++i) {
        std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(sq);
        Verdict v = instance(rng);
        v.context["seed"] = seed;
        v.context["index"] = i;
        if (corrupt_oracle) {
            v.rhs[0] = v.lhs[0] - Rational(1);
            v.settle();
        }
        r.holding += v.holds;
        r.verdicts.push_back(std::move(v));
    }
    std::stable_sort(r.verdicts.begin(), r.verdicts.end(),
                     [](const Verdict& a, const Verdict& b) { return io::dump(a.context) < io::dump(b.context); });
    return r;
}

io::json to_json(const SweepReport& r) {
    io::json vs = io::json::array();
    for (const auto& v : r.verdicts) vs.push_back(to_json(v));
    return {{"suite", r.suite}, {"seed", r.seed}, {"count", r.count}, {"holding", r.holding}, {"instances", vs}};
}

}  // namespace heights
