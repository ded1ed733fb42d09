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

#include <string>
#include <string_view>

#include "json.hpp"

#include "heights/product_av.hpp"

namespace heights::io {

using nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with a 1-based line and column.
json parse_json(std::string_view text);
/// Reads and parses a file; an unreadable file is a ParseError at line 0.
json load_json(const std::string& path);

json to_json(const EllipticCurve& E);
/// {"p": 5, "a": ["0", "0", "0", "0", "t"]}
EllipticCurve curve_from_json(const json& j);

json to_json(const CurvePoint& P);
/// ["x", "y"] or "O".
CurvePoint point_from_json(const EllipticCurve& E, const json& j);

json to_json(const ProductAV& A);
/// A list of curves, or a single curve read as a one-factor product.
ProductAV product_from_json(const json& j);

json to_json(const SubgroupSpec& G);
/// {"frobenius_exponent": 1, "generators": [["0", "0"]]}; both keys optional.
SubgroupSpec subgroup_from_json(const EllipticCurve& E, const json& j);

/// Steps as "frobenius", "inverse_frobenius", {"velu": ["x", "y"]} (a point on
/// the curve reached so far) or {"iso": ["u", "r", "s", "w"]}.
json to_json(const IsogenyChain& chain);
json steps_to_json(const std::vector<IsogenyStep>& steps);
IsogenyChain chain_from_json(const EllipticCurve& E, const json& j);

/// One entry per factor: an action tag or a list of them. Tags are
/// "identity", "frobenius", "inverse_frobenius", {"frobenius": k},
/// {"inverse_frobenius": k} and {"velu": ["x", "y"]}.
json to_json(const FVPlan& plan);
FVPlan plan_from_json(const PrimeField& field, const json& j);

json to_json(const Rational& r);
json to_json(const Divisor& D);
json to_json(const ReductionData& r);
json to_json(const HeightReport& r);

/// Compact, key-sorted serialization used for reports and canonical ordering.
std::string dump(const json& j);

}  // namespace heights::io
