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

#include "heights/errors.hpp"

namespace heights {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::ZeroFunction: return "ZeroFunction";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::SingularModel: return "SingularModel";
        case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case ErrorKind::NotTorsionWithinBound: return "NotTorsionWithinBound";
        case ErrorKind::NotFinitePoint: return "NotFinitePoint";
        case ErrorKind::NotOnCurve: return "NotOnCurve";
        case ErrorKind::BadOrder: return "BadOrder";
        case ErrorKind::NotAPthPower: return "NotAPthPower";
        case ErrorKind::IsotrivialSource: return "IsotrivialSource";
        case ErrorKind::IncomposableSteps: return "IncomposableSteps";
        case ErrorKind::CurveMismatch: return "CurveMismatch";
        case ErrorKind::NotUniformPlan: return "NotUniformPlan";
        case ErrorKind::SemistabilityRequired: return "SemistabilityRequired";
        case ErrorKind::IsotrivialInput: return "IsotrivialInput";
        case ErrorKind::WrongOrder: return "WrongOrder";
        case ErrorKind::Parse: return "ParseError";
    }
    return "Unknown";
}

}  // namespace heights
