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
#include <optional>
#include <utility>
#include <vector>

#include "heights/subgroup.hpp"

namespace heights {

/// A formal product E_1 x ... x E_g over one field.
class ProductAV {
  public:
    /// Throws std::invalid_argument for an empty list and FieldMismatch for
    /// factors over different fields.
    explicit ProductAV(std::vector<EllipticCurve> factors);

    const std::vector<EllipticCurve>& factors() const noexcept { return factors_; }
    std::size_t dim() const noexcept { return factors_.size(); }
    const PrimeField& field() const noexcept { return factors_.front().field(); }

    friend bool operator==(const ProductAV&, const ProductAV&) = default;

  private:
    std::vector<EllipticCurve> factors_;
};

/// Differential height of the product: the sum over the factors.
Rational product_height(const ProductAV& A);

/// One elementary action on a factor.
struct FactorAction {
    enum class Kind { Identity, Frobenius, InverseFrobenius, Velu };

    Kind kind = Kind::Identity;
    std::uint32_t exponent = 1;  // Frobenius^k or InverseFrobenius^k
    std::optional<std::pair<RatFunc, RatFunc>> kernel;  // Velu generator on the current curve

    static FactorAction identity() { return {}; }
    static FactorAction frobenius(std::uint32_t k = 1) { return {Kind::Frobenius, k, std::nullopt}; }
    static FactorAction inverse_frobenius(std::uint32_t k = 1) { return {Kind::InverseFrobenius, k, std::nullopt}; }
    static FactorAction velu(RatFunc x, RatFunc y) { return {Kind::Velu, 1, std::pair{std::move(x), std::move(y)}}; }
};

/// For each factor, the actions applied to it in order.
using FVPlan = std::vector<std::vector<FactorAction>>;

struct FVResult {
    ProductAV target;
    std::vector<IsogenyChain> chains;
    /// (e, f) when every factor undergoes an isogeny of the same type, which
    /// then is the type of the product isogeny; empty for factorwise plans.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> type;
    std::uint64_t degree = 1;
    std::uint32_t delta_p = 0;       // max over factors
    std::uint32_t delta_p_dual = 0;  // max over factors
};

/// Runs the plan factor by factor. Throws std::invalid_argument if the plan
/// has the wrong number of factors, SemistabilityRequired when Frobenius or
/// Verschiebung actions hit a factor that is not semi-stable, NotAPthPower
/// for an inverse Frobenius twist of a curve not defined over K^p, and
/// whatever chain_bookkeeping raises.
FVResult apply_fv_plan(const ProductAV& A, const FVPlan& plan);

/// Frobenius on the first i factors, inverse Frobenius on the next j, the
/// identity on the remaining g - i - j.
FVPlan phi_ij_plan(std::size_t g, std::size_t i, std::size_t j);

struct KaniReport {
    std::uint64_t p = 0;
    std::uint64_t m = 0;  // order of P, (p^2 - 1) / 4
    CurvePoint P, P1, P2;
    EllipticCurve E, E_P, E_P1, E_P2;
    std::uint64_t deg_pi = 0, deg_pi1 = 0, deg_pi2 = 0;
    /// (|H1| + |H2|)^2 with H_i = <P_i>, the degree of the Kani isogeny.
    std::uint64_t deg_psi = 0;
    bool deg_psi_is_p_squared = false;
    std::vector<std::uint64_t> h_mod;  // E, E/<P>, E/<P1>, E/<P2>
    bool heights_equal = false;
    /// Minimality of the Kani isogeny needs End(E) = Z, which is not checked.
    bool minimality_checked = false;
};

/// P1 = [(p+1)/2] P and P2 = [(p-1)/2] P for P of exact order (p^2 - 1)/4,
/// with the quotients by <P>, <P1>, <P2>. Throws WrongOrder otherwise.
KaniReport kani_configuration(const EllipticCurve& E, const CurvePoint& P);

/// True iff h1 / h2 is not an integral power of p, which rules out an
/// isogeny between the two curves.
bool shioda_criterion(std::uint64_t p, std::uint64_t h1, std::uint64_t h2);

/// shioda_criterion on h_mod(E1), h_mod(E2); E only fixes the field.
/// Throws IsotrivialInput for a constant j-invariant.
bool shioda_nonisomorphism_check(const EllipticCurve& E, const EllipticCurve& E1, const EllipticCurve& E2);

}  // namespace heights
