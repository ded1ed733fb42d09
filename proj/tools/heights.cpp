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

// heights: command-line front end for the height, isogeny and verification code.
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "heights/errors.hpp"
#include "heights/theorem_lab.hpp"

using namespace heights;
using io::json;

namespace {

constexpr int exit_ok = 0, exit_failed = 1, exit_usage = 2;

struct Options {
    std::string curve, chain, G, H, plan, statement, suite, factors;
    std::optional<std::uint64_t> seed, torsion_bound;
    std::size_t count = 100;
    bool json_out = false, corrupt = false, inverse = false;
};

void emit(const json& j) { std::cout << io::dump(j) << "\n"; }

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string summary_line(const HeightReport& r) {
    std::string s = "h_diff = " + to_string(r.h_diff) + ", h_mod = " + std::to_string(r.h_mod);
    if (r.isotrivial) s += ", constant j";
    return s;
}

EllipticCurve load_curve(const Options& o) {
    if (o.curve.empty()) throw std::invalid_argument("--curve is required");
    return io::curve_from_json(io::load_json(o.curve));
}

int cmd_height(const Options& o) {
    const auto E = load_curve(o);
    const auto r = height_report(E);
    if (o.json_out) {
        emit(io::to_json(r));
        return exit_ok;
    }
    std::cout << "curve: " << E.to_string() << "\n";
    std::cout << pad("place", 16) << pad("type", 8) << "v(Delta_min)\n";
    for (const auto& f : r.fibers)
        std::cout << pad(f.place.to_string(), 16) << pad(f.kodaira.to_string(), 8) << f.v_delta_min << "\n";
    std::cout << "Delta_min = " << r.delta_min.to_string() << "\n";
    std::cout << "semi-stable: " << (r.semistable ? "yes" : "no") << "\n";
    std::cout << summary_line(r) << "\n";
    return exit_ok;
}

std::string opt_val(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

int cmd_tate(const Options& o) {
    const auto E = load_curve(o);
    json rows = json::array();
    if (!o.json_out) std::cout << pad("place", 16) << pad("type", 8) << pad("v(c4)", 7) << pad("v(c6)", 7) << pad("v(D)", 6) << "scaling\n";
    for (const auto& v : candidate_bad_places(E)) {
        const auto r = tate_at(E, v);
        if (o.json_out) {
            auto row = io::to_json(r);
            row["scaling"] = r.scaling;
            row["v_c4_min"] = r.v_c4_min ? json(*r.v_c4_min) : json(nullptr);
            row["v_c6_min"] = r.v_c6_min ? json(*r.v_c6_min) : json(nullptr);
            rows.push_back(row);
        } else {
            std::cout << pad(v.to_string(), 16) << pad(r.kodaira.to_string(), 8) << pad(opt_val(r.v_c4_min), 7)
                      << pad(opt_val(r.v_c6_min), 7) << pad(std::to_string(r.v_delta_min), 6) << r.scaling << "\n";
        }
    }
    if (o.json_out) emit(rows);
    return exit_ok;
}

json chain_summary(const IsogenyChain& c) {
    return {{"degree", c.degree},
            {"deg_ins", c.deg_ins},
            {"deg_ins_dual", c.deg_ins_dual},
            {"delta_p", c.delta_p},
            {"delta_p_dual", c.delta_p_dual},
            {"height_ratio", to_string(c.height_ratio())},
            {"source", io::to_json(c.source)},
            {"target", io::to_json(c.target)},
            {"h_mod_source", modular_height(c.source)},
            {"h_mod_target", modular_height(c.target)},
            {"steps", io::to_json(c)}};
}

IsogenyChain load_chain(const EllipticCurve& E, const Options& o) {
    if (o.chain.empty()) throw std::invalid_argument("--chain is required");
    return io::chain_from_json(E, io::load_json(o.chain));
}

int cmd_isogeny(const Options& o) {
    const auto E = load_curve(o);
    const auto c = load_chain(E, o);
    const auto s = chain_summary(c);
    if (o.json_out) {
        emit(s);
        return exit_ok;
    }
    std::cout << "steps:";
    for (const auto& st : c.steps) std::cout << " " << to_string(st.kind()) << "(" << st.degree() << ")";
    std::cout << "\ntarget: " << c.target.to_string() << "\n";
    std::cout << "degree = " << c.degree << ", deg_ins = " << c.deg_ins << ", deg_ins_dual = " << c.deg_ins_dual
              << ", delta_p = " << c.delta_p << ", delta_p_dual = " << c.delta_p_dual << "\n";
    std::cout << "h_mod: " << modular_height(c.source) << " -> " << modular_height(c.target) << " (ratio "
              << to_string(c.height_ratio()) << ")\n";
    return exit_ok;
}

int cmd_twist(const Options& o) {
    const auto E = load_curve(o);
    const auto T = o.inverse ? inverse_frobenius_twist(E) : frobenius_twist(E);
    if (o.json_out)
        emit(io::to_json(T));
    else
        std::cout << T.to_string() << "\n";
    return exit_ok;
}

std::vector<std::size_t> parse_indices(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const auto v = std::stoull(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad factor index \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

void print_verdict(const Verdict& v) {
    std::cout << v.statement << ":";
    for (std::size_t i = 0; i < v.lhs.size(); ++i)
        std::cout << (i ? ";" : "") << " " << to_string(v.lhs[i]) << " " << v.relations[i] << " " << to_string(v.rhs[i]);
    std::cout << "\n" << (v.holds ? "holds" : "FAILS") << (v.is_equality ? " (equality)" : " (strict)") << "\n";
}

int cmd_verify(const Options& o) {
    Verdict v;
    const auto& id = o.statement;
    if (id == "Hd" || id == "Hm") {
        const auto E = load_curve(o);
        const auto c = load_chain(E, o);
        v = id == "Hd" ? verify_Hd(E, c) : verify_Hm(E, c);
    } else if (id == "verfrob" || id == "bounds" || id == "subvariety") {
        if (o.curve.empty()) throw std::invalid_argument("--curve is required");
        const auto A = io::product_from_json(io::load_json(o.curve));
        if (id == "subvariety") {
            v = verify_subvariety(A, parse_indices(o.factors));
        } else {
            if (o.plan.empty()) throw std::invalid_argument("--plan is required");
            const auto plan = io::plan_from_json(A.field(), io::load_json(o.plan));
            v = id == "verfrob" ? verify_verfrob(A, plan) : verify_main_bounds(A, plan);
        }
    } else if (id == "parallelogram") {
        const auto E = load_curve(o);
        if (o.G.empty() || o.H.empty()) throw std::invalid_argument("--G and --H are required");
        v = verify_parallelogram(E, io::subgroup_from_json(E, io::load_json(o.G)),
                                 io::subgroup_from_json(E, io::load_json(o.H)));
    } else {
        throw std::invalid_argument("unknown statement \"" + id + "\" (expected Hd, Hm, verfrob, bounds, parallelogram, subvariety)");
    }
    if (o.json_out)
        emit(to_json(v));
    else
        print_verdict(v);
    return v.holds ? exit_ok : exit_failed;
}

std::uint64_t resolve_seed(const Options& o) {
    if (o.seed) return *o.seed;
    if (const char* env = std::getenv("HEIGHTS_SEED")) {
        std::size_t pos = 0;
        const std::string s = env;
        const auto v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("HEIGHTS_SEED is not an integer");
        return v;
    }
    return 0;
}

int cmd_sweep(const Options& o) {
    const auto r = run_sweep(o.suite, resolve_seed(o), o.count, o.corrupt);
    if (o.json_out) {
        emit(to_json(r));
    } else {
        for (const auto& v : r.verdicts)
            if (!v.holds) std::cout << "failed: " << io::dump(v.context) << "\n";
        std::cout << r.holding << "/" << r.count << " hold\n";
    }
    return r.holding == r.count ? exit_ok : exit_failed;
}

int cmd_lattice(const Options& o) {
    const auto E = load_curve(o);
    if (o.G.empty() || o.H.empty()) throw std::invalid_argument("--G and --H are required");
    const auto G = io::subgroup_from_json(E, io::load_json(o.G));
    const auto H = io::subgroup_from_json(E, io::load_json(o.H));
    const auto S = subgroup_sum(G, H), I = subgroup_intersection(G, H);
    const auto oG = subgroup_order(G), oH = subgroup_order(H), oS = subgroup_order(S), oI = subgroup_order(I);
    const bool law = oS * oI == oG * oH;
    if (o.json_out) {
        emit({{"sum", io::to_json(S)},
              {"intersection", io::to_json(I)},
              {"orders", {{"G", oG}, {"H", oH}, {"sum", oS}, {"intersection", oI}}},
              {"law_holds", law}});
    } else {
        std::cout << "|G| = " << oG << ", |H| = " << oH << ", |G+H| = " << oS << ", |G&H| = " << oI << "\n";
        std::cout << "G+H = " << io::dump(io::to_json(S)) << "\n";
        std::cout << "G&H = " << io::dump(io::to_json(I)) << "\n";
        std::cout << "lattice law " << (law ? "holds" : "FAILS") << "\n";
    }
    return law ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heights of elliptic curves over F_p(t) and their isogenies"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--torsion-bound", o.torsion_bound, "Search bound for torsion orders (default 2p^2+20)");

    auto curve_opt = [&](CLI::App* c) { c->add_option("--curve", o.curve, "Curve JSON file")->check(CLI::ExistingFile); };
    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json_out, "Machine-readable output"); };

    auto* height = app.add_subcommand("height", "Differential and modular height");
    curve_opt(height);
    json_flag(height);
    auto* tate = app.add_subcommand("tate", "Reduction types at the candidate bad places");
    curve_opt(tate);
    json_flag(tate);
    auto* isogeny = app.add_subcommand("isogeny", "Bookkeeping for an isogeny chain");
    curve_opt(isogeny);
    isogeny->add_option("--chain", o.chain, "Chain JSON file")->check(CLI::ExistingFile);
    json_flag(isogeny);
    auto* twist = app.add_subcommand("twist", "Frobenius twist of a curve");
    curve_opt(twist);
    twist->add_flag("--inverse", o.inverse, "Inverse Frobenius twist");
    json_flag(twist);
    auto* verify = app.add_subcommand("verify", "Check one height statement");
    verify->add_option("statement", o.statement, "Hd, Hm, verfrob, bounds, parallelogram or subvariety")->required();
    curve_opt(verify);
    verify->add_option("--chain", o.chain, "Chain JSON file")->check(CLI::ExistingFile);
    verify->add_option("--G", o.G, "Subgroup JSON file")->check(CLI::ExistingFile);
    verify->add_option("--H", o.H, "Subgroup JSON file")->check(CLI::ExistingFile);
    verify->add_option("--plan", o.plan, "Plan JSON file")->check(CLI::ExistingFile);
    verify->add_option("--factors", o.factors, "Comma-separated factor indices of the sub-product");
    json_flag(verify);
    auto* sweep = app.add_subcommand("sweep", "Seeded randomized property suite");
    sweep->add_option("suite", o.suite, "biseparable, frobenius, bounds or parallelogram")->required();
    sweep->add_option("--seed", o.seed, "Seed (falls back to HEIGHTS_SEED, then 0)");
    sweep->add_option("--count", o.count, "Number of instances");
    sweep->add_flag("--corrupt-oracle", o.corrupt, "Perturb every right-hand side (harness self-test)");
    json_flag(sweep);
    auto* lattice = app.add_subcommand("lattice", "Sum and intersection of two subgroups");
    curve_opt(lattice);
    lattice->add_option("--G", o.G, "Subgroup JSON file")->check(CLI::ExistingFile);
    lattice->add_option("--H", o.H, "Subgroup JSON file")->check(CLI::ExistingFile);
    json_flag(lattice);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (o.torsion_bound) set_torsion_bound_override(o.torsion_bound);
        if (height->parsed()) return cmd_height(o);
        if (tate->parsed()) return cmd_tate(o);
        if (isogeny->parsed()) return cmd_isogeny(o);
        if (twist->parsed()) return cmd_twist(o);
        if (verify->parsed()) return cmd_verify(o);
        if (sweep->parsed()) return cmd_sweep(o);
        if (lattice->parsed()) return cmd_lattice(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
