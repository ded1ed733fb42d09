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

#include "heights/io.hpp"

#include <fstream>
#include <sstream>

#include "heights/errors.hpp"
#include "heights/parse.hpp"

namespace heights::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what, 0, 0); }

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where + ": expected a string");
    return j.get<std::string>();
}

RatFunc ratfunc_at(const json& j, const PrimeField& f, const std::string& where) {
    const auto text = as_string(j, where);
    try {
        return parse_ratfunc(text, f);
    } catch (const ParseError& e) {
        throw ParseError(where + " \"" + text + "\": " + e.detail(), e.line(), e.column());
    }
}

std::uint64_t unsigned_at(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        fail(where + ": expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

}  // namespace

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
        throw ParseError("invalid JSON: " + msg, line, column);
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

json to_json(const EllipticCurve& E) {
    json a = json::array();
    for (const auto& ai : E.a()) a.push_back(ai.to_string());
    return {{"p", E.field().p()}, {"a", a}};
}

EllipticCurve curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("a")) fail("curve: expected {\"p\": ..., \"a\": [...]}");
    const PrimeField f{unsigned_at(j["p"], "curve.p")};
    const auto& a = j["a"];
    if (!a.is_array() || a.size() != 5) fail("curve.a: expected five coefficient strings");
    EllipticCurve::AInvariants ai{RatFunc(f), RatFunc(f), RatFunc(f), RatFunc(f), RatFunc(f)};
    for (std::size_t i = 0; i < 5; ++i) ai[i] = ratfunc_at(a[i], f, "curve.a[" + std::to_string(i) + "]");
    return EllipticCurve::from_a_invariants(f, std::move(ai));
}

json to_json(const CurvePoint& P) {
    if (P.is_infinity()) return "O";
    return json::array({P.x().to_string(), P.y().to_string()});
}

CurvePoint point_from_json(const EllipticCurve& E, const json& j) {
    if (j.is_string() && j.get<std::string>() == "O") return CurvePoint::infinity(E);
    if (!j.is_array() || j.size() != 2) fail("point: expected [\"x\", \"y\"] or \"O\"");
    return CurvePoint::affine(E, ratfunc_at(j[0], E.field(), "point.x"), ratfunc_at(j[1], E.field(), "point.y"));
}

json to_json(const ProductAV& A) {
    json out = json::array();
    for (const auto& E : A.factors()) out.push_back(to_json(E));
    return out;
}

ProductAV product_from_json(const json& j) {
    if (j.is_object()) return ProductAV({curve_from_json(j)});
    if (!j.is_array() || j.empty()) fail("product: expected a nonempty list of curves");
    std::vector<EllipticCurve> factors;
    for (const auto& c : j) factors.push_back(curve_from_json(c));
    return ProductAV(std::move(factors));
}

json to_json(const SubgroupSpec& G) {
    json gens = json::array();
    for (const auto& P : G.etale_generators) gens.push_back(to_json(P));
    return {{"frobenius_exponent", G.frobenius_exponent}, {"generators", gens}};
}

SubgroupSpec subgroup_from_json(const EllipticCurve& E, const json& j) {
    if (!j.is_object()) fail("subgroup: expected an object");
    SubgroupSpec G = SubgroupSpec::trivial(E);
    if (j.contains("frobenius_exponent"))
        G.frobenius_exponent = static_cast<std::uint32_t>(unsigned_at(j["frobenius_exponent"], "subgroup.frobenius_exponent"));
    if (j.contains("generators")) {
        if (!j["generators"].is_array()) fail("subgroup.generators: expected a list");
        for (const auto& g : j["generators"]) G.etale_generators.push_back(point_from_json(E, g));
    }
    return G;
}

json steps_to_json(const std::vector<IsogenyStep>& steps) {
    json out = json::array();
    for (const auto& s : steps) {
        switch (s.kind()) {
            case StepKind::Frobenius: out.push_back("frobenius"); break;
            case StepKind::InverseFrobeniusTwist: out.push_back("inverse_frobenius"); break;
            case StepKind::Velu: out.push_back({{"velu", to_json(s.kernel_generator())}}); break;
            case StepKind::Isomorphism: {
                json c = json::array();
                for (const auto& x : s.coordinate_change()) c.push_back(x.to_string());
                out.push_back({{"iso", c}});
                break;
            }
        }
    }
    return out;
}

json to_json(const IsogenyChain& chain) { return steps_to_json(chain.steps); }

IsogenyChain chain_from_json(const EllipticCurve& E, const json& j) {
    if (!j.is_array()) fail("chain: expected a list of steps");
    std::vector<IsogenyStep> steps;
    EllipticCurve cur = E;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& s = j[i];
        const std::string where = "chain[" + std::to_string(i) + "]";
        if (s.is_string()) {
            const auto tag = s.get<std::string>();
            if (tag == "frobenius")
                steps.push_back(IsogenyStep::frobenius(cur));
            else if (tag == "inverse_frobenius")
                steps.push_back(IsogenyStep::inverse_frobenius(cur));
            else
                fail(where + ": unknown step \"" + tag + "\"");
        } else if (s.is_object() && s.size() == 1 && s.contains("velu")) {
            steps.push_back(IsogenyStep::velu(point_from_json(cur, s["velu"])));
        } else if (s.is_object() && s.size() == 1 && s.contains("iso")) {
            const auto& c = s["iso"];
            if (!c.is_array() || c.size() != 4) fail(where + ".iso: expected [u, r, s, w]");
            steps.push_back(IsogenyStep::isomorphism(cur, ratfunc_at(c[0], cur.field(), where + ".u"),
                                                     ratfunc_at(c[1], cur.field(), where + ".r"),
                                                     ratfunc_at(c[2], cur.field(), where + ".s"),
                                                     ratfunc_at(c[3], cur.field(), where + ".w")));
        } else {
            fail(where + ": expected a step tag or object");
        }
        cur = steps.back().target();
    }
    return chain_bookkeeping(E, std::move(steps));
}

namespace {

json action_to_json(const FactorAction& a) {
    switch (a.kind) {
        case FactorAction::Kind::Identity: return "identity";
        case FactorAction::Kind::Frobenius: return a.exponent == 1 ? json("frobenius") : json{{"frobenius", a.exponent}};
        case FactorAction::Kind::InverseFrobenius:
            return a.exponent == 1 ? json("inverse_frobenius") : json{{"inverse_frobenius", a.exponent}};
        case FactorAction::Kind::Velu:
            return {{"velu", json::array({a.kernel->first.to_string(), a.kernel->second.to_string()})}};
    }
    return nullptr;
}

FactorAction action_from_json(const PrimeField& f, const json& j, const std::string& where) {
    if (j.is_string()) {
        const auto tag = j.get<std::string>();
        if (tag == "identity") return FactorAction::identity();
        if (tag == "frobenius") return FactorAction::frobenius();
        if (tag == "inverse_frobenius") return FactorAction::inverse_frobenius();
        fail(where + ": unknown action \"" + tag + "\"");
    }
    if (j.is_object() && j.size() == 1) {
        if (j.contains("frobenius"))
            return FactorAction::frobenius(static_cast<std::uint32_t>(unsigned_at(j["frobenius"], where + ".frobenius")));
        if (j.contains("inverse_frobenius"))
            return FactorAction::inverse_frobenius(
                static_cast<std::uint32_t>(unsigned_at(j["inverse_frobenius"], where + ".inverse_frobenius")));
        if (j.contains("velu")) {
            const auto& v = j["velu"];
            if (!v.is_array() || v.size() != 2) fail(where + ".velu: expected [\"x\", \"y\"]");
            return FactorAction::velu(ratfunc_at(v[0], f, where + ".velu.x"), ratfunc_at(v[1], f, where + ".velu.y"));
        }
    }
    fail(where + ": expected an action tag or object");
}

}  // namespace

json to_json(const FVPlan& plan) {
    json out = json::array();
    for (const auto& actions : plan) {
        json list = json::array();
        for (const auto& a : actions) list.push_back(action_to_json(a));
        out.push_back(list);
    }
    return out;
}

FVPlan plan_from_json(const PrimeField& f, const json& j) {
    if (!j.is_array()) fail("plan: expected a list with one entry per factor");
    FVPlan plan;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "plan[" + std::to_string(i) + "]";
        std::vector<FactorAction> actions;
        if (j[i].is_array()) {
            for (std::size_t k = 0; k < j[i].size(); ++k)
                actions.push_back(action_from_json(f, j[i][k], where + "[" + std::to_string(k) + "]"));
        } else {
            actions.push_back(action_from_json(f, j[i], where));
        }
        plan.push_back(std::move(actions));
    }
    return plan;
}

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Divisor& D) {
    json out = json::array();
    for (const auto& [place, mult] : D.terms()) out.push_back(json::array({place.to_string(), mult}));
    return out;
}

json to_json(const ReductionData& r) {
    return {{"place", r.place.to_string()},
            {"kodaira", r.kodaira.to_string()},
            {"v_delta_min", r.v_delta_min},
            {"semistable", r.is_semistable_here}};
}

json to_json(const HeightReport& r) {
    json fibers = json::array();
    for (const auto& f : r.fibers) fibers.push_back(to_json(f));
    return {{"h_diff", to_json(r.h_diff)},   {"h_mod", r.h_mod},         {"delta_min", to_json(r.delta_min)},
            {"semistable", r.semistable}, {"isotrivial", r.isotrivial}, {"fibers", fibers}};
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace heights::io
