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

#include <doctest.h>

#include <functional>
#include <string>

#include "aspw/error.hpp"
#include "aspw/parse.hpp"

using namespace aspw;

namespace {

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == ErrorKind::ParseError ? e.what() : "other";
    }
    return "none";
}

}  // namespace

TEST_CASE("field specifications") {
    const Field a = parse_field("p=3,s=3,mod=x^3-x-2");
    CHECK(a.order() == 27);
    CHECK(a.modulus() == std::vector<int>{1, 2, 0, 1});
    CHECK(parse_field("p=3,mod=x^3-x-2") == a);
    CHECK(parse_field("p=2,s=4").order() == 16);
    CHECK(parse_field("p=5, s=2, sym=t").symbol() == "t");
    CHECK_THROWS_AS(parse_field("p=4,s=1"), Error);
    CHECK(message_of([] { parse_field("p=3,q=2"); }).find("unknown field key") != std::string::npos);
}

TEST_CASE("expressions") {
    const Field k0 = parse_field("p=3,s=2");
    const RatFunc T = RatFunc::t(k0);
    CHECK(parse_ratfunc(k0, "T^2 - 1") == T.pow(2) - RatFunc::constant(k0, k0.one()));
    CHECK(parse_ratfunc(k0, "2T(T+1)") == (T.pow(2) + T).scale(k0.from_int(2)));
    CHECK(parse_ratfunc(k0, "T^-2") == T.pow(2).inv());
    CHECK(parse_ratfunc(k0, "T^(-2)") == T.pow(2).inv());
    CHECK(parse_ratfunc(k0, "4") == RatFunc::constant(k0, k0.one()));
    CHECK(parse_element(k0, "w^2") == k0.pow(k0.generator(), 2));
    CHECK(parse_expression(k0, "X^3 + X", "X") == T.pow(3) + T);
}

TEST_CASE("parse errors carry a column") {
    const Field k0 = parse_field("p=2,s=1");
    CHECK(message_of([&] { parse_ratfunc(k0, "T^2 + (T"); }).find("column") != std::string::npos);
    CHECK(message_of([&] { parse_ratfunc(k0, "T $ 1"); }).find("column 3") != std::string::npos);
    CHECK(message_of([&] { parse_ratfunc(k0, "1/(T+T)"); }).find("division by zero") != std::string::npos);
    CHECK(message_of([&] { parse_element(k0, "T"); }) != "none");
}

TEST_CASE("places and Witt vectors") {
    const Field k0 = parse_field("p=3,s=1");
    CHECK(parse_place(k0, "inf").infinite);
    CHECK(parse_place(k0, "oo").infinite);
    CHECK(parse_place(k0, "T^2+1").P.degree() == 2);
    CHECK_THROWS_AS(parse_place(k0, "T^2-1"), Error);
    const auto v = parse_witt(k0, "[T; 1/(T+1); 0]");
    REQUIRE(v.size() == 3);
    CHECK(v[2].is_zero());
    CHECK(parse_witt(k0, "[1;0]").size() == 2);
    CHECK_THROWS_AS(parse_witt(k0, "1;0"), Error);
}

TEST_CASE("prime-field polynomials") {
    CHECK(parse_prime_poly(3, "x^3-x-2") == std::vector<int>{1, 2, 0, 1});
    CHECK(parse_prime_poly(2, "x^2+x+1") == std::vector<int>{1, 1, 1});
}
