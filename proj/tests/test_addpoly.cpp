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

#include <algorithm>
#include <random>
#include <set>

#include "aspw/addpoly.hpp"
#include "aspw/error.hpp"
#include "aspw/parse.hpp"

using namespace aspw;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

std::vector<Code> brute_roots(const AdditivePoly& f) {
    const Poly P = f.as_poly();
    std::vector<Code> out;
    for (Code x = 0; x < f.field().order(); ++x)
        if (P.eval(x) == 0) out.push_back(x);
    return out;
}

}  // namespace

TEST_CASE("X^q - X has the subfield as roots") {
    const Field f = Field::make(2, 4);
    const AdditivePoly g = AdditivePoly::frobenius_minus_identity(f, 2);
    CHECK(g.degree() == 4);
    const RootGroup G = root_group(g);
    CHECK(G.rank() == 2);
    for (Code x : G.elements()) CHECK(f.frob(x, 2) == x);
    CHECK(G.elements() == brute_roots(g));
}

TEST_CASE("additivity on the whole field") {
    const Field f = Field::make(3, 3, std::vector<int>{1, 2, 0, 1});
    const AdditivePoly g = parse_additive(f, "X^9 + w*X^3 + (w+1)*X");
    for (Code x = 0; x < f.order(); ++x)
        for (Code y = 0; y < f.order(); ++y) CHECK(g.eval(f.add(x, y)) == f.add(g.eval(x), g.eval(y)));
    CHECK(g.as_poly().eval(f.generator()) == g.eval(f.generator()));
}

TEST_CASE("subspace polynomials vanish exactly on the span") {
    std::mt19937_64 rng(17);
    for (auto [p, s, dim] : std::vector<std::tuple<int, int, int>>{{2, 4, 2}, {2, 4, 3}, {3, 3, 2}, {3, 2, 1}, {5, 2, 1}}) {
        const Field f = Field::make(p, s);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Code> v;
            while (static_cast<int>(v.size()) < dim) {
                std::vector<Code> cand = v;
                cand.push_back(static_cast<Code>(rng() % f.order()));
                if (fp_independent(f, cand)) v = cand;
            }
            const AdditivePoly g = subspace_poly(f, v);
            CHECK(g.p_degree() == dim);
            CHECK(brute_roots(g) == fp_span(f, v));
        }
    }
    const Field f = Field::make(2, 3);
    CHECK(kind_of([&] { subspace_poly(f, {f.one(), f.one()}); }) == ErrorKind::DependentGenerators);
}

TEST_CASE("hyperplanes factor f through wp_a") {
    const Field f = Field::make(3, 2);
    const AdditivePoly g = AdditivePoly::frobenius_minus_identity(f, 2);
    const RootGroup G = root_group(g);
    const auto hs = enumerate_hyperplanes(G);
    CHECK(hs.size() == 4);
    std::set<std::vector<int>> seen;
    for (const auto& h : hs) {
        seen.insert(h.functional);
        const auto it = std::find_if(h.functional.begin(), h.functional.end(), [](int c) { return c != 0; });
        REQUIRE(it != h.functional.end());
        CHECK(*it == 1);
        CHECK(h.phi(G, h.eps) == 1);
        for (Code x : fp_span(f, h.basis)) {
            CHECK(h.phi(G, x) == 0);
            CHECK(h.fH.eval(x) == 0);
        }
        CHECK(h.fH.eval(h.eps) == h.fH_at_eps);
        CHECK(h.fH_at_eps != 0);
        for (Code x = 0; x < f.order(); ++x) CHECK(g.eval(x) == wp_a(f, h.fH_at_eps, h.fH.eval(x)));
    }
    CHECK(seen.size() == hs.size());
    CHECK(std::is_sorted(hs.begin(), hs.end(), [](const auto& a, const auto& b) { return a.functional < b.functional; }));
}

TEST_CASE("root group coordinates") {
    const Field f = Field::make(2, 3);
    const RootGroup G = root_group(AdditivePoly::frobenius_minus_identity(f, 3));
    for (Code x = 0; x < f.order(); ++x) CHECK(G.element(G.coordinates(x)) == x);
    const RootGroup H = root_group(AdditivePoly::frobenius_minus_identity(Field::make(2, 4), 2));
    const Field& k = H.owner().field();
    Code outside = 0;
    for (Code x = 0; x < k.order(); ++x)
        if (!H.contains(x)) outside = x;
    CHECK(kind_of([&] { H.coordinates(outside); }) == ErrorKind::NotASubgroup);
}

TEST_CASE("roots outside k0 are rejected") {
    const Field f = Field::make(2, 1);
    CHECK(kind_of([&] { root_group(AdditivePoly::frobenius_minus_identity(f, 2)); }) == ErrorKind::RootsNotInBaseField);
    CHECK(kind_of([&] { AdditivePoly(f, {0, f.one()}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("Moore matrix detects dependence") {
    const Field f = Field::make(2, 4);
    const Code w = f.generator();
    CHECK(moore_matrix(f, {f.one(), w}).det != 0);
    CHECK(moore_matrix(f, {w, f.mul(w, f.one())}).det == 0);
    std::vector<std::vector<Code>> m{{f.one(), w}, {w, f.one()}};
    const auto x = solve_linear(f, m, {w, f.one()});
    CHECK(f.add(x[0], f.mul(w, x[1])) == w);
    CHECK(f.add(f.mul(w, x[0]), x[1]) == f.one());
    CHECK(kind_of([&] { solve_linear(f, {{f.one(), f.one()}, {f.one(), f.one()}}, {0, f.one()}); }) ==
          ErrorKind::SingularSystem);
}

TEST_CASE("scaled Artin-Schreier operator") {
    const Field f = Field::make(3, 2);
    const Code a = f.generator();
    for (Code x = 0; x < f.order(); ++x) CHECK(wp_a(f, a, x) == f.sub(f.pow(x, 3), f.mul(f.pow(a, 2), x)));
    const RatFunc T = RatFunc::t(f);
    CHECK(wp(T) == T.pow(3) - T);
    CHECK(kind_of([&] { wp_a(RatFunc(f), T); }) == ErrorKind::ZeroScale);
}

TEST_CASE("twist raises coefficients") {
    const Field f = Field::make(2, 2);
    const AdditivePoly g(f, {f.generator(), f.one()});
    const AdditivePoly t = g.twist(1);
    CHECK(t.coeffs()[0] == f.frob(f.generator(), 1));
    for (Code x = 0; x < f.order(); ++x) CHECK(t.eval(f.frob(x, 1)) == f.frob(g.eval(x), 1));
}

TEST_CASE("parsing additive polynomials") {
    const Field f = Field::make(3, 2);
    CHECK(parse_additive(f, "X^9-X") == AdditivePoly::frobenius_minus_identity(f, 2));
    CHECK(parse_additive(f, "[2,0,1]") == AdditivePoly::frobenius_minus_identity(f, 2));
    CHECK(kind_of([&] { parse_additive(f, "X^4-X"); }) == ErrorKind::ParseError);
}
