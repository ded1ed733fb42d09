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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heights/point.hpp"

namespace heights {

/// Separable isogeny with kernel <P> for a K-rational point P of finite order,
/// given by Velu's formulas on the long Weierstrass model.
class VeluIsogeny {
  public:
    /// Throws NotFinitePoint if P is not torsion within `bound`, and BadOrder
    /// when p divides the order without being equal to it.
    VeluIsogeny(const CurvePoint& generator, std::uint64_t bound);
    explicit VeluIsogeny(const CurvePoint& generator);

    const EllipticCurve& domain() const noexcept { return domain_; }
    const EllipticCurve& codomain() const noexcept { return codomain_; }
    const CurvePoint& generator() const noexcept { return generator_; }
    std::uint64_t degree() const noexcept { return degree_; }

    /// Image of a point of the domain; kernel points go to infinity.
    CurvePoint operator()(const CurvePoint& P) const;

  private:
    struct KernelTerm {
        RatFunc x, y, gx, gy, v, u;
    };

    EllipticCurve domain_;
    CurvePoint generator_;
    std::uint64_t degree_ = 1;
    std::vector<KernelTerm> terms_;
    std::vector<CurvePoint> kernel_;
    EllipticCurve codomain_;
};

/// E / <P> and the degree of the quotient map.
std::pair<EllipticCurve, std::uint64_t> velu_quotient(const EllipticCurve& E, const CurvePoint& P);

/// E^(p): every a-invariant raised to the p-th power.
EllipticCurve frobenius_twist(const EllipticCurve& E);
/// The curve whose Frobenius twist is E; throws NotAPthPower unless E is
/// defined over F_p(t^p).
EllipticCurve inverse_frobenius_twist(const EllipticCurve& E);

/// Relative Frobenius on points: (x, y) -> (x^p, y^p) on E^(p).
CurvePoint frobenius_point(const CurvePoint& P);
/// Verschiebung E -> E^(1/p) on points, computed as Fr^-1([p] P).
CurvePoint verschiebung_point(const CurvePoint& P);

enum class StepKind { Velu, Frobenius, InverseFrobeniusTwist, Isomorphism };

std::string to_string(StepKind kind);

/// An elementary isogeny with its source and target. InverseFrobeniusTwist is
/// the Verschiebung E -> E^(1/p).
class IsogenyStep {
  public:
    static IsogenyStep velu(const CurvePoint& kernel_generator, std::uint64_t bound);
    static IsogenyStep velu(const CurvePoint& kernel_generator);
    static IsogenyStep frobenius(const EllipticCurve& E);
    static IsogenyStep inverse_frobenius(const EllipticCurve& E);
    static IsogenyStep isomorphism(const EllipticCurve& E, const RatFunc& u, const RatFunc& r, const RatFunc& s,
                                   const RatFunc& w);

    StepKind kind() const noexcept { return kind_; }
    const EllipticCurve& source() const noexcept { return source_; }
    const EllipticCurve& target() const noexcept { return target_; }
    std::uint64_t degree() const noexcept { return degree_; }
    /// Kernel generator of a Velu step.
    const CurvePoint& kernel_generator() const;
    /// (u, r, s, w) of an isomorphism step.
    const std::array<RatFunc, 4>& coordinate_change() const;

    /// Pushes a point of the source through the step.
    CurvePoint map_point(const CurvePoint& P) const;

  private:
    IsogenyStep(StepKind kind, EllipticCurve source, EllipticCurve target, std::uint64_t degree)
        : kind_(kind), source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

    StepKind kind_;
    EllipticCurve source_;
    EllipticCurve target_;
    std::uint64_t degree_;
    std::shared_ptr<const VeluIsogeny> velu_;
    std::optional<std::array<RatFunc, 4>> change_;
};

/// A composable list of steps with degree and (in)separability bookkeeping.
struct IsogenyChain {
    EllipticCurve source;
    EllipticCurve target;
    std::vector<IsogenyStep> steps;
    std::uint64_t degree = 1;
    std::uint64_t deg_ins = 1;       // inseparable degree of the composite
    std::uint64_t deg_ins_dual = 1;  // inseparable degree of its dual
    std::uint32_t delta_p = 0;
    std::uint32_t delta_p_dual = 0;

    /// deg_ins / deg_ins_dual, the predicted height ratio.
    Rational height_ratio() const { return Rational(static_cast<std::int64_t>(deg_ins), static_cast<std::int64_t>(deg_ins_dual)); }
};

/// Builds the chain and its bookkeeping. Frobenius steps multiply deg_ins by p;
/// Verschiebung steps multiply deg_ins_dual by p, as does the p-part of a Velu
/// step (an etale p-quotient of an ordinary curve has purely inseparable dual).
///
/// Throws IncomposableSteps if a target differs from the next source, and
/// IsotrivialSource when the source has constant j and the chain involves the
/// prime p (where the dual accounting relies on ordinarity).
IsogenyChain chain_bookkeeping(const EllipticCurve& source, std::vector<IsogenyStep> steps);

}  // namespace heights
