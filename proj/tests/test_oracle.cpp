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
#include <random>

#include "aspw/error.hpp"
#include "aspw/oracle.hpp"
#include "aspw/parse.hpp"

using namespace aspw;

TEST_CASE("image sets") {
    const Field f4 = Field::make(2, 2);
    const auto wp_img = image_set(f4, [&](Code x) { return f4.sub(f4.pow(x, 2), x); });
    CHECK(wp_img.size() == 2);
    CHECK(wp_img.front() == 0);
    const Field f27 = Field::make(3, 3);
    CHECK(image_set(f27, [](Code x) { return x; }, 3).size() == 27);
    for (Code a : {Code(1), f27.generator()}) {
        const auto img = image_set(f27, [&](Code x) { return naive_wp_a(f27, a, x); });
        int kernel = 0;
        for (Code x = 0; x < 27; ++x) kernel += naive_wp_a(f27, a, x) == 0;
        CHECK(img.size() * kernel == 27);
    }
    CHECK_THROWS_AS(image_set(Field::make(2, 10), [](Code x) { return x; }), Error);
}

TEST_CASE("naive evaluators agree with the library") {
    const Field f = Field::make(3, 2);
    const AdditivePoly g(f, {f.generator(), f.from_int(2), f.one()});
    for (Code x = 0; x < 9; ++x) {
        CHECK(naive_additive(f, g.coeffs(), x) == g.eval(x));
        CHECK(naive_wp_a(f, f.generator(), x) == wp_a(f, f.generator(), x));
    }
}

TEST_CASE("mu-invariant Artin-Schreier images") {
    for (auto [q, m] : std::vector<std::pair<long long, int>>{{4, 2}, {8, 1}, {3, 2}}) {
        const Lemma62Result r = verify_lemma_62(q, m, 2);
        CHECK(r.holds);
        CHECK(r.report.passed());
    }
}

TEST_CASE("images of hyperplane operators") {
    const Field f16 = Field::make(2, 4);
    const EqStarResult r = verify_eq_star(AdditivePoly::frobenius_minus_identity(f16, 2));
    CHECK(r.containment);
    CHECK(r.equal);
    CHECK(r.image_f == 4);
    CHECK(r.report.to_json().at("claim").is_string());
}

TEST_CASE("splitting oracle") {
    const Field k0 = parse_field("p=3,s=2");
    const AdditivePoly f = AdditivePoly::frobenius_minus_identity(k0, 2);
    const RatFunc T = RatFunc::t(k0);
    // u vanishes at T = 0, so that place splits completely.
    const ExtensionSpec spec = ExtensionSpec::make(f, T.pow(2) + T + T.inv());
    const Place zero = parse_place(k0, "T");
    CHECK_THROWS_AS(splitting_oracle(spec, zero), Error);
    const ExtensionSpec poly = spec.with_u(T.pow(2) + T);
    const SplittingOracle s = splitting_oracle(poly, zero);
    CHECK(s.count == 9);
    CHECK(s.roots_expected == 9);
    CHECK(s.inertia_degree == 1);

    std::mt19937_64 rng(11);
    for (const Place& P : enumerate_places(k0, 1)) {
        const SplittingOracle o = splitting_oracle(poly, P);
        CHECK(o.two_valued);
        const SplitVerdict v = place_splitting(poly, P);
        CHECK((o.count == 9) == (v.kind == SplitKind::FullySplit));
        if (o.count == 0 && o.inertia_degree != 0) CHECK(o.inertia_degree == v.inertia_degree);
    }
}

TEST_CASE("axiom sampler on small rings") {
    AxiomOptions o;
    o.p = 2;
    o.s = 1;
    o.m = 3;
    const AxiomResult r = witt_axiom_sampler(o);
    CHECK(r.failures == 0);
    CHECK(r.checks > 0);
    CHECK(r.report.mode == "exhaustive");
}
