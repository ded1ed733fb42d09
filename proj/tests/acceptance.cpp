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

// One PASS/FAIL line per acceptance criterion. Every comparison is exact.
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "heights/elliptic_curve.hpp"
#include "heights/errors.hpp"
#include "heights/families.hpp"
#include "heights/io.hpp"
#include "heights/parse.hpp"
#include "heights/product_av.hpp"
#include "heights/subgroup.hpp"
#include "heights/theorem_lab.hpp"

using namespace heights;

namespace {

constexpr std::uint64_t kSeed = 20240611;

std::string str(const Rational& r) { return io::to_json(r).get<std::string>(); }
Rational q(std::uint64_t n) { return Rational(static_cast<std::int64_t>(n)); }
Rational pow_p(std::uint64_t p, std::int64_t k) {
    Rational r(1);
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r *= q(p);
    return k < 0 ? Rational(1) / r : r;
}

// Everything built along the way, for the structural checks.
struct Recorder {
    std::map<std::string, EllipticCurve> curves;
    std::vector<IsogenyChain> chains;

    void curve(const EllipticCurve& E) { curves.emplace(E.to_string(), E); }
    void chain(const IsogenyChain& c) {
        curve(c.source);
        for (const auto& s : c.steps) {
            curve(s.source());
            curve(s.target());
        }
        chains.push_back(c);
    }
    void product(const ProductAV& A) {
        for (const auto& E : A.factors()) curve(E);
    }
};

Recorder rec;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
}

EllipticCurve curve(std::uint64_t p, const std::array<std::string, 5>& a) {
    const PrimeField f{p};
    std::array<RatFunc, 5> c{RatFunc(f), RatFunc(f), RatFunc(f), RatFunc(f), RatFunc(f)};
    for (std::size_t i = 0; i < 5; ++i) c[i] = parse_ratfunc(a[i], f);
    return EllipticCurve::from_a_invariants(f, c);
}

const ReductionData* fiber_at(const HeightReport& r, const Place& v) {
    for (const auto& d : r.fibers)
        if (d.place == v) return &d;
    return nullptr;
}

Outcome c1() {
    std::ostringstream out;
    bool ok = true;
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        const PrimeField f{p};
        const Place zero = Place::finite(Poly::variable(f)), inf = Place::infinity();
        const auto E = curve(p, {"0", "0", "0", "0", "t"});
        const auto tw = frobenius_twist(E);
        rec.curve(E);
        rec.curve(tw);
        const auto r = height_report(E), rt = height_report(tw);
        Divisor expect;
        expect.add(zero, 2);
        expect.add(inf, 10);
        const auto b = static_cast<std::int64_t>(p % 6);
        Divisor expect_tw;
        expect_tw.add(zero, 2 * b);
        expect_tw.add(inf, 2 * (6 - b));
        const auto* f0 = fiber_at(r, zero);
        const auto* fi = fiber_at(r, inf);
        const bool types = f0 && fi && f0->kodaira.symbol == Kodaira::Symbol::II && fi->kodaira.symbol == Kodaira::Symbol::IIStar;
        const bool here = types && r.delta_min == expect && r.h_diff == Rational(1) &&
                          tw == curve(p, {"0", "0", "0", "0", "t^" + std::to_string(p)}) && rt.delta_min == expect_tw &&
                          rt.h_diff == Rational(1);
        ok = ok && here;
        out << "p=" << p << " " << r.delta_min.to_string() << " / twist " << rt.delta_min.to_string() << (here ? "" : " MISMATCH")
            << "; ";
    }
    return {ok, out.str()};
}

Outcome c2() {
    std::vector<EllipticCurve> curves{tate_normal_5(parse_ratfunc("3+t^6", PrimeField{5})).curve};
    std::mt19937_64 rng(kSeed);
    constexpr std::uint64_t primes[] = {5, 7, 11, 13};
    for (int i = 0; i < 12; ++i) curves.push_back(random::semistable_curve(PrimeField{primes[i % 4]}, rng).curve);
    std::size_t good = 0;
    std::string bad;
    for (const auto& E : curves) {
        const auto p = E.field().p();
        const auto tw = frobenius_twist(E);
        rec.chain(chain_bookkeeping(E, {IsogenyStep::frobenius(E)}));
        const bool ok = is_semistable(E) && !is_isotrivial(E) && differential_height(tw) == q(p) * differential_height(E) &&
                        modular_height(tw) == p * modular_height(E);
        good += ok;
        if (!ok) bad += " " + E.to_string();
    }
    const auto& E0 = curves.front();
    return {good == curves.size(), std::to_string(good) + "/" + std::to_string(curves.size()) +
                                       " curves scale by p (semi-stable 5-torsion family over F_5: h_diff " +
                                       str(differential_height(E0)) + " -> " + str(differential_height(frobenius_twist(E0))) +
                                       ", h_mod " + std::to_string(modular_height(E0)) + " -> " +
                                       std::to_string(modular_height(frobenius_twist(E0))) + ")" + bad};
}

void record_sweep(const SweepReport& r) {
    for (const auto& v : r.verdicts) {
        const auto& c = v.context;
        if (c.contains("chain")) {
            const auto E = io::curve_from_json(c["curve"]);
            rec.chain(io::chain_from_json(E, c["chain"]));
        }
        if (c.contains("chains")) {
            const auto A = io::product_from_json(c["product"]);
            for (std::size_t i = 0; i < A.dim(); ++i) rec.chain(io::chain_from_json(A.factors()[i], c["chains"][i]));
        }
        if (c.contains("G")) {
            const auto E = io::curve_from_json(c["curve"]);
            const auto G = io::subgroup_from_json(E, c["G"]), H = io::subgroup_from_json(E, c["H"]);
            for (const auto& X : {G, H, subgroup_sum(G, H), subgroup_intersection(G, H)})
                rec.chain(quotient_by_subgroup(E, X).chain);
        }
    }
}

std::string sweep_detail(const SweepReport& r) {
    return std::to_string(r.holding) + "/" + std::to_string(r.count) + " hold (seed " + std::to_string(r.seed) + ")";
}

Outcome c3() {
    const auto r = run_sweep("biseparable", kSeed, 100);
    record_sweep(r);
    std::map<std::uint64_t, int> by_ell;
    std::size_t ss = 0;
    for (const auto& v : r.verdicts) {
        ++by_ell[v.context["ell"].get<std::uint64_t>()];
        ss += v.context["semistable"].get<bool>();
    }
    std::string ells;
    for (const auto& [l, n] : by_ell) ells += " ell=" + std::to_string(l) + ":" + std::to_string(n);
    return {r.holding == 100 && r.count == 100, sweep_detail(r) + ";" + ells + "; semi-stable " + std::to_string(ss)};
}

Outcome c4() {
    const auto T = tate_normal_5(RatFunc::variable(PrimeField{5}));
    const auto& E = T.curve;
    // Quotient by the Velu oracle, heights by the Tate oracle, then compare.
    const auto [Q, phi] = velu_quotient(E, T.point);
    (void)phi;
    rec.curve(E);
    rec.chain(chain_bookkeeping(E, {IsogenyStep::velu(T.point)}));
    const auto hE = height_report(E), hQ = height_report(Q);
    const bool mod_ok = q(hQ.h_mod) == q(hE.h_mod) / Rational(5);
    const bool diff_ok = hQ.h_diff == hE.h_diff / Rational(5);
    std::string d = "h_mod " + std::to_string(hQ.h_mod) + " vs " + str(q(hE.h_mod) / Rational(5)) + (mod_ok ? " ok" : " MISMATCH") +
                    "; h_diff " + str(hQ.h_diff) + " vs " + str(hE.h_diff / Rational(5)) + (diff_ok ? " ok" : " MISMATCH");
    if (!hE.semistable) d += " (source not semi-stable: Delta_min " + hE.delta_min.to_string() + ", quotient " + hQ.delta_min.to_string() + ")";
    return {mod_ok && diff_ok, d};
}

Outcome c5() {
    const std::uint64_t p = 5;
    const auto T = tate_normal_6(RatFunc::variable(PrimeField{p}));
    const auto E = frobenius_twist(frobenius_twist(T.curve));  // over K^(p^2)
    const auto Q3 = frobenius_point(frobenius_point(T.point.multiple(2)));
    struct Uniform {
        std::vector<FactorAction> actions;
        std::int64_t e, f;
    };
    const std::vector<Uniform> plans{
        {{FactorAction::frobenius()}, 1, 0},
        {{FactorAction::frobenius(2)}, 2, 0},
        {{FactorAction::inverse_frobenius()}, 0, 1},
        {{FactorAction::inverse_frobenius(2)}, 0, 2},
        {{FactorAction::frobenius(), FactorAction::inverse_frobenius()}, 1, 1},
        {{FactorAction::velu(Q3.x(), Q3.y()), FactorAction::frobenius()}, 1, 0},
        {{FactorAction::inverse_frobenius(), FactorAction::identity(), FactorAction::inverse_frobenius(), FactorAction::frobenius()}, 1, 2},
    };
    std::size_t uniform_ok = 0, uniform_n = 0, phi_ok = 0, phi_n = 0;
    std::string bad;
    for (std::size_t g : {2u, 3u}) {
        const ProductAV A(std::vector<EllipticCurve>(g, E));
        rec.product(A);
        const Rational hA = product_height(A);
        for (const auto& u : plans) {
            ++uniform_n;
            const auto r = apply_fv_plan(A, FVPlan(g, u.actions));
            for (const auto& c : r.chains) rec.chain(c);
            const bool ok = product_height(r.target) == pow_p(p, u.e - u.f) * hA && verify_verfrob(A, FVPlan(g, u.actions)).holds;
            uniform_ok += ok;
            if (!ok) bad += " uniform(" + std::to_string(u.e) + "," + std::to_string(u.f) + ")";
        }
        const auto G = static_cast<std::int64_t>(g);
        for (std::int64_t i = 0; i <= G; ++i)
            for (std::int64_t j = 0; i + j <= G; ++j) {
                ++phi_n;
                const auto r = apply_fv_plan(A, phi_ij_plan(g, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
                for (const auto& c : r.chains) rec.chain(c);
                const Rational ratio = product_height(r.target) / hA;
                const Rational formula = Rational(1) + Rational(i, G) * q(p - 1) + Rational(j, G) * (Rational(1, 5) - Rational(1));
                const bool corner = (i == 0 && j == 0) || (i == 0 && j == G) || (i == G && j == 0);
                const bool ok = ratio == formula && is_power_of(ratio, p) == corner;
                phi_ok += ok;
                if (!ok) bad += " phi(" + std::to_string(g) + ";" + std::to_string(i) + "," + std::to_string(j) + ")=" + str(ratio);
            }
    }
    return {uniform_ok == uniform_n && phi_ok == phi_n, "uniform plans " + std::to_string(uniform_ok) + "/" + std::to_string(uniform_n) +
                                                            ", phi_ij ratios " + std::to_string(phi_ok) + "/" + std::to_string(phi_n) + bad};
}

Outcome c6() {
    const auto r = run_sweep("bounds", kSeed, 200);
    record_sweep(r);
    std::size_t steps = 0, frob = 0, inv = 0, velu = 0;
    for (const auto& v : r.verdicts)
        for (const auto& ch : v.context["chains"])
            for (const auto& s : ch) {
                ++steps;
                if (s == "frobenius") ++frob;
                else if (s == "inverse_frobenius") ++inv;
                else ++velu;
            }
    return {r.holding == 200 && r.count == 200, sweep_detail(r) + "; steps: " + std::to_string(frob) + " Frobenius, " +
                                                    std::to_string(inv) + " inverse Frobenius, " + std::to_string(velu) + " Velu"};
}

Outcome c7() {
    const auto T = tate_normal_6(RatFunc::variable(PrimeField{5}));
    const auto r = kani_configuration(T.curve, T.point);
    // Recompute the square directly.
    const auto P1 = T.point.multiple(3), P2 = T.point.multiple(2);
    const auto d1 = point_order(P1), d2 = point_order(P2);
    std::vector<std::uint64_t> h{modular_height(T.curve)};
    for (const auto& K : {T.point, P1, P2}) {
        const auto c = chain_bookkeeping(T.curve, {IsogenyStep::velu(K)});
        rec.chain(c);
        h.push_back(modular_height(c.target));
    }
    const bool equal = h[0] == h[1] && h[1] == h[2] && h[2] == h[3];
    const bool ok = point_order(T.point) == 6 && d1 == 2 && d2 == 3 && (d1 + d2) * (d1 + d2) == 25 && r.deg_pi1 == 2 &&
                    r.deg_pi2 == 3 && r.deg_psi == 25 && r.deg_psi_is_p_squared && equal && r.h_mod == h && r.heights_equal;
    return {ok, "deg pi1 = " + std::to_string(d1) + ", deg pi2 = " + std::to_string(d2) + ", (2+3)^2 = " +
                    std::to_string((d1 + d2) * (d1 + d2)) + ", h_mod = " + std::to_string(h[0]) + " " + std::to_string(h[1]) + " " +
                    std::to_string(h[2]) + " " + std::to_string(h[3])};
}

Outcome c8() {
    const auto r = run_sweep("parallelogram", kSeed, 100);
    record_sweep(r);
    std::size_t eq = 0, lattice = 0;
    for (const auto& v : r.verdicts) {
        eq += v.holds && v.relations[0] == "=" && v.lhs[0] == v.rhs[0] && v.context["coprime_to_p"].get<bool>();
        lattice += v.lhs[1] == v.rhs[1];
    }
    const std::uint64_t p = 5;
    const auto T = tate_normal_5(RatFunc::variable(PrimeField{p}));
    const auto& E = T.curve;
    const SubgroupSpec G{E, 1, {}}, H{E, 0, {T.point}};
    const auto S = subgroup_sum(G, H), I = subgroup_intersection(G, H);
    auto hq = [&](const SubgroupSpec& X) {
        const auto Q = quotient_by_subgroup(E, X);
        rec.chain(Q.chain);
        return q(modular_height(Q.codomain));
    };
    const Rational h = q(modular_height(E));
    const Rational lhs = hq(S) + hq(I), rhs = hq(G) + hq(H);
    const auto v = verify_parallelogram(E, G, H);
    const bool b = lhs == Rational(2) * h && rhs == (q(p) + Rational(1, 5)) * h && lhs < rhs && v.holds && !v.is_equality &&
                   v.lhs[0] == lhs && v.rhs[0] == rhs;
    const bool lat_b = subgroup_order(S) * subgroup_order(I) == subgroup_order(G) * subgroup_order(H) && v.lhs[1] == v.rhs[1];
    const bool ok = eq == 100 && b && lattice == 100 && lat_b;
    return {ok, "(a) " + std::to_string(eq) + "/100 equalities; (b) " + str(lhs) + " < " + str(rhs) + " with h = " + str(h) +
                    (b ? "" : " MISMATCH") + "; (c) lattice law " + std::to_string(lattice + lat_b) + "/101"};
}

Outcome c9() {
    std::size_t deg_ok = 0, j_ok = 0, chain_ok = 0;
    std::string bad;
    for (const auto& [name, E] : rec.curves) {
        const bool d = minimal_discriminant_divisor(E).degree() % 12 == 0;
        const bool j = (modular_height(E) == 0) == E.j().is_constant();
        deg_ok += d;
        j_ok += j;
        if (!d || !j) bad += " " + name;
    }
    for (const auto& c : rec.chains) {
        const auto p = c.source.field().p();
        std::int64_t frob = 0;
        for (const auto& s : c.steps) frob += s.kind() == StepKind::Frobenius;
        const bool ok = pow_p(p, c.delta_p) == q(c.deg_ins) && pow_p(p, frob) == q(c.deg_ins);
        chain_ok += ok;
        if (!ok) bad += " chain from " + c.source.to_string();
    }
    const auto nc = rec.curves.size(), nk = rec.chains.size();
    return {deg_ok == nc && j_ok == nc && chain_ok == nk && nc > 0,
            "deg Delta_min = 0 mod 12 on " + std::to_string(deg_ok) + "/" + std::to_string(nc) + " curves, h_mod = 0 iff constant j on " +
                std::to_string(j_ok) + "/" + std::to_string(nc) + ", p^delta_p = deg_ins on " + std::to_string(chain_ok) + "/" +
                std::to_string(nk) + " chains" + bad};
}

}  // namespace

int main() {
    report("C1", "reduction of y^2 = x^3 + t and its Frobenius twist", c1);
    report("C2", "Frobenius scaling", c2);
    report("C3", "biseparable invariance", c3);
    report("C4", "etale p-quotient of the Tate normal form over F_5", c4);
    report("C5", "Frobenius/Verschiebung plans on E^g", c5);
    report("C6", "general bounds", c6);
    report("C7", "Kani square at p = 5", c7);
    report("C8", "parallelogram suite", c8);
    report("C9", "structural invariants", c9);
    return failures == 0 ? 0 : 1;
}
