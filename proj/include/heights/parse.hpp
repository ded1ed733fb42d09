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

#include <string_view>

#include "heights/ratfunc.hpp"

namespace heights {

/// Parses integer-coefficient expressions in t with + - * ^ and parentheses,
/// with at most one '/'. Coefficients are reduced mod p. Juxtaposition
/// ("3t", "2(t+1)") multiplies. Throws ParseError with a 1-based column.
RatFunc parse_ratfunc(std::string_view text, const PrimeField& field);

}  // namespace heights
