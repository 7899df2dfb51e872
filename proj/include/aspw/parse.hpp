/*
   Copyright 2026 The aspw Authors

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
#include <vector>

#include "aspw/addpoly.hpp"

namespace aspw {

/// Expression over k0 in one indeterminate `var`: integers, the generator
/// symbol of k0, + - * / ^, parentheses and implicit multiplication.
/// Throws ParseError with a column on malformed input.
RatFunc parse_expression(const Field& k0, std::string_view text, std::string_view var = "T");

/// "p=3,s=3,mod=x^3-x-2" with optional "sym=w". Either s or mod may be
/// omitted when the other determines the degree.
Field parse_field(std::string_view text);

Code parse_element(const Field& k0, std::string_view text);
RatFunc parse_ratfunc(const Field& k0, std::string_view text);
/// "X^9-X" or the coefficient list "[a0,a1,...,1]".
AdditivePoly parse_additive(const Field& k0, std::string_view text);
/// "inf" or a monic irreducible polynomial in T.
Place parse_place(const Field& k0, std::string_view text);
/// "[c1; c2; ...]" with each component a rational function.
std::vector<RatFunc> parse_witt(const Field& k0, std::string_view text);
/// Polynomial over F_p in `var`, low-to-high integer coefficients.
std::vector<int> parse_prime_poly(int p, std::string_view text, std::string_view var = "x");

}  // namespace aspw
