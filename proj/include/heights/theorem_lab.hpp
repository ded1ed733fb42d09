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
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "heights/families.hpp"
#include "heights/io.hpp"

namespace heights {

/// An exact comparison lhs[i] (relation[i]) rhs[i] for every component, where
/// a relation is "=" or "<=". Both sides are computed independently: heights
/// from the curves, ratios from the isogeny bookkeeping.
struct Verdict {
    std::string statement;
    std::vector<std::string> relations;
    std::vector<Rational> lhs, rhs;
    bool holds = false;
    bool is_equality = false;
    io::json context;

    void add(std::string relation, Rational l, Rational r);
    /// Recomputes holds and is_equality from the components.
    void settle();
};

io::json to_json(const Verdict& v);

/// h_diff(target) = (deg_ins / deg_ins_dual) h_diff(E). Throws IsotrivialInput
/// and SemistabilityRequired.
Verdict verify_Hd(const EllipticCurve& E, const IsogenyChain& chain);
/// h_mod(target) = (deg_ins / deg_ins_dual) h_mod(E). Throws IsotrivialInput.
Verdict verify_Hm(const EllipticCurve& E, const IsogenyChain& chain);
/// h_diff(B) = p^(e-f) h_diff(A) for a plan of uniform type (e, f). Throws
/// NotUniformPlan, SemistabilityRequired and IsotrivialInput.
Verdict verify_verfrob(const ProductAV& A, const FVPlan& plan);
/// p^-dual h_diff(A) <= h_diff(B) <= p^delta h_diff(A) with delta and dual the
/// maxima of the per-factor Frobenius heights.
Verdict verify_main_bounds(const ProductAV& A, const std::vector<IsogenyChain>& chains);
Verdict verify_main_bounds(const ProductAV& A, const FVPlan& plan);
/// h(E/(G+H)) + h(E/(G & H)) <= h(E/G) + h(E/H) on h_mod, as an equality when
/// the order of G or of H is prime to p, together with the lattice law
/// |G+H| |G & H| = |G| |H|.
Verdict verify_parallelogram(const EllipticCurve& E, const SubgroupSpec& G, const SubgroupSpec& H);
/// h_diff(B) + h_diff(A/B) <= h_diff(A) for the split sub-product on the
/// given factor indices.
Verdict verify_subvariety(const ProductAV& A, const std::vector<std::size_t>& indices);

namespace random {

/// Uniform integer in [0, n), portable across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n);
/// A nonconstant polynomial of degree 1 or 2 in t.
RatFunc parameter(const PrimeField& f, std::mt19937_64& rng);
/// A pullback of a Tate normal form with 5-, 6- or 7-torsion that is
/// semi-stable and has nonconstant j, with its torsion point.
PointedCurve semistable_curve(const PrimeField& f, std::mt19937_64& rng);
/// A curve with nonconstant j and a K-rational point of exact order ell in
/// {2, 3, 5, 7}, ell != p.
PointedCurve torsion_curve(const PrimeField& f, std::uint64_t ell, std::mt19937_64& rng);

}  // namespace random

struct SweepReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t holding = 0;
    std::vector<Verdict> verdicts;  // canonical order: by serialized context
};

/// Suites: "biseparable", "frobenius", "bounds", "parallelogram". Instance i is
/// drawn from its own generator seeded by (seed, i). With corrupt_oracle every
/// right-hand side is perturbed, so every instance must fail; this checks the
/// harness itself. Throws std::invalid_argument for an unknown suite.
SweepReport run_sweep(std::string_view suite, std::uint64_t seed, std::size_t count, bool corrupt_oracle = false);
const std::vector<std::string>& sweep_suites();

io::json to_json(const SweepReport& r);

}  // namespace heights
