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

#include "aspw/asext.hpp"
#include "aspw/error.hpp"
#include "aspw/parse.hpp"

using namespace aspw;

namespace {

const char* kField = "p=3,s=3,mod=x^3-x-2";
const char* kU = "1/(T+1)^54 + 1/(T+1) + T^9+T^3+T+w+1";

ExtensionSpec worked_example() {
    const Field k0 = parse_field(kField);
    return ExtensionSpec::make(parse_additive(k0, "X^27-X"), parse_ratfunc(k0, kU));
}

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

RatFunc random_rhs(const Field& k0, std::mt19937_64& rng) {
    std::uniform_int_distribution<Code> c(0, k0.order() - 1);
    std::vector<Code> num(static_cast<std::size_t>(rng() % 7) + 1);
    for (auto& x : num) x = c(rng);
    Poly den = Poly::constant(k0, k0.one());
    const int kind = static_cast<int>(rng() % 3);
    if (kind >= 1) den = Poly(k0, {c(rng), k0.one()}).pow(static_cast<long long>(rng() % 4) + 1);
    if (kind == 2) den = den * Poly(k0, {c(rng), 0, k0.one()});
    return RatFunc(Poly(k0, num), den);
}

// Reduced shape: every pole order lambda*p^m has m < n, and a constant u lies outside f(k0).
void check_reduced_shape(const ExtensionSpec& spec, const RatFunc& r) {
    const int p = spec.k0().p();
    const PartialFractions pf = partial_fractions(r);
    for (const auto& t : pf.terms) CHECK(pole_shape(t.order(), p).m < spec.n());
    if (pf.poly_part.degree() > 0) CHECK(pole_shape(pf.poly_part.degree(), p).m < spec.n());
    const Code c0 = pf.terms.empty() && pf.poly_part.degree() == 0 ? pf.poly_part.coeff(0) : 0;
    for (Code x = 0; x < spec.k0().order() && c0 != 0; ++x) CHECK(spec.f().eval(x) != c0);
}

}  // namespace

TEST_CASE("worked example: reduction and ramification") {
    const ExtensionSpec spec = worked_example();
    CHECK(spec.irreducible());
    CHECK(spec.hyperplanes().size() == 13);
    const GlobalReduction g = reduce_global(spec);
    CHECK(g.reduced.u().to_string() == "T^9 + T^3 + T + (w+1) + 1/(T+1)^2 + 1/(T+1)");
    CHECK(g.log.replay(spec.f(), spec.u()) == g.reduced.u());
    const RamificationReport rep = ramification_report(spec);
    REQUIRE(rep.finite.size() == 1);
    CHECK(rep.finite[0].lambda == 2);
    CHECK(rep.finite[0].exact);
    CHECK(rep.finite[0].e_bound == 27);
    REQUIRE(rep.infinity.has_value());
    CHECK(rep.infinity->lambda == 1);
    CHECK(rep.infinity->m == 2);
}

TEST_CASE("worked example: degree-3 subextensions at infinity") {
    const ExtensionSpec spec = worked_example();
    const Field& k0 = spec.k0();
    const AdditivePoly wp1 = AdditivePoly::frobenius_minus_identity(k0, 1);
    const Code w = parse_element(k0, "w");
    CHECK(reduce_rhs(wp1, spec.u()).u.to_string() == "1/(T+1)^2 + 1/(T+1)");
    CHECK(reduce_rhs(wp1, spec.u().scale(w)).u.to_string() == "(w^2+w) + w/(T+1)^2 + w/(T+1)");
    CHECK(reduce_rhs(wp1, spec.u().scale(k0.mul(w, w))).u.to_string() ==
          "2*T + (w^2+w+2) + w^2/(T+1)^2 + w^2/(T+1)");
    CHECK(degree_p_behaviour(spec.u(), Place::at_infinity()) == LocalBehaviour::Split);
    CHECK(degree_p_behaviour(spec.u().scale(w), Place::at_infinity()) == LocalBehaviour::Inert);
    CHECK(degree_p_behaviour(spec.u().scale(k0.mul(w, w)), Place::at_infinity()) == LocalBehaviour::Ramified);
    const DecompositionType dt = decomposition_type(spec, Place::at_infinity());
    CHECK(dt.e == 3);
    CHECK(dt.f == 3);
    CHECK(dt.g == 3);
    CHECK(dt.consistent);
    CHECK(dt.split.size() == 1);
    CHECK(dt.unramified.size() == 4);
}

TEST_CASE("subextension generators verify in the quotient algebra") {
    const auto subs = subextensions(worked_example());
    CHECK(subs.size() == 13);
    for (const auto& d : subs) CHECK(d.verified);
}

TEST_CASE("random reductions replay and have reduced shape") {
    std::mt19937_64 rng(23);
    for (auto [p, s, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {3, 2, 1}, {3, 2, 2}, {2, 3, 1}}) {
        const Field k0 = Field::make(p, s);
        const AdditivePoly f = AdditivePoly::frobenius_minus_identity(k0, n);
        for (int i = 0; i < 15; ++i) {
            const ExtensionSpec spec = ExtensionSpec::make(f, random_rhs(k0, rng));
            const Reduction r = reduce_rhs(f, spec.u());
            CHECK(r.log.replay(f, spec.u()) == r.u);
            check_reduced_shape(spec, r.u);
        }
    }
}

TEST_CASE("wp membership") {
    std::mt19937_64 rng(29);
    const Field k0 = Field::make(3, 1);
    for (int i = 0; i < 30; ++i) {
        const RatFunc d = random_rhs(k0, rng);
        const WpMembership m = wp_membership(wp(d));
        CHECK(m.member);
        REQUIRE(m.witness.has_value());
        CHECK(wp(*m.witness) == wp(d));
    }
    CHECK_FALSE(wp_membership(RatFunc::t(k0)).member);
    CHECK_FALSE(wp_membership(RatFunc::constant(k0, k0.one())).member);
}

TEST_CASE("irreducibility") {
    const Field k0 = Field::make(2, 2);
    const AdditivePoly f = AdditivePoly::frobenius_minus_identity(k0, 2);
    const RatFunc T = RatFunc::t(k0);
    CHECK(ExtensionSpec::make(f, T).irreducible());
    CHECK_FALSE(ExtensionSpec::make(f, T.pow(4) - T).irreducible());
    CHECK_FALSE(ExtensionSpec::make(f, RatFunc(k0)).irreducible());
    CHECK(kind_of([&] { reduce_global(ExtensionSpec::make(f, RatFunc(k0))); }) == ErrorKind::NotIrreducible);
    CHECK(kind_of([&] { ExtensionSpec::make(AdditivePoly::frobenius_minus_identity(Field::make(2, 1), 2),
                                             RatFunc::t(Field::make(2, 1))); }) ==
          ErrorKind::RootsNotInBaseField);
}

TEST_CASE("degree-p local behaviour") {
    const Field k0 = Field::make(3, 1);
    const RatFunc T = RatFunc::t(k0);
    const Place inf = Place::at_infinity();
    CHECK(degree_p_behaviour(RatFunc(k0), inf) == LocalBehaviour::Split);
    CHECK(degree_p_behaviour(RatFunc::constant(k0, k0.one()), inf) == LocalBehaviour::Inert);
    CHECK(degree_p_behaviour(T, inf) == LocalBehaviour::Ramified);
    CHECK(degree_p_behaviour(T.pow(3), inf) == LocalBehaviour::Ramified);
    CHECK(degree_p_behaviour(T.pow(3) - T, inf) == LocalBehaviour::Split);
    const Place P = Place::finite(Poly::t(k0));
    CHECK(degree_p_behaviour(T.inv(), P) == LocalBehaviour::Ramified);
    CHECK(degree_p_behaviour(T, P) == LocalBehaviour::Split);
}

TEST_CASE("split test refuses ramified places on request") {
    const ExtensionSpec spec = worked_example();
    const Place P = Place::finite(parse_ratfunc(spec.k0(), "T+1").num());
    CHECK(place_splitting(spec, P).kind == SplitKind::Ramified);
    CHECK(kind_of([&] { place_splitting(spec, P, true); }) == ErrorKind::RamifiedPlaceForSplitTest);
}

TEST_CASE("twisted normal form") {
    for (int p : {2, 3}) {
        const Field k0 = Field::make(p, 2);
        const AdditivePoly f = AdditivePoly::frobenius_minus_identity(k0, 2);
        const RatFunc T = RatFunc::t(k0);
        const TwistedForm t = twist_normalize(ExtensionSpec::make(f, T.pow(p)));
        CHECK(t.j == 1);
        CHECK(t.reduction.u == T);
        CHECK(t.score == 0);
    }
}

TEST_CASE("combining two degree-p extensions") {
    const Field k0 = Field::make(3, 2);
    const RatFunc T = RatFunc::t(k0);
    const Code mu = k0.generator();
    const Combination c = combine_generators({T, T.pow(2)}, {k0.one(), mu});
    CHECK(c.spec.f() == AdditivePoly::frobenius_minus_identity(k0, 2));
    const RatFunc expect = T.pow(3) + T + T.pow(6).scale(mu) + T.pow(2).scale(mu);
    CHECK(c.spec.u() == expect);
    CHECK(kind_of([&] { combine_generators({T, T.scale(k0.from_int(2))}, {k0.one(), mu}); }) ==
          ErrorKind::DependentSubextensions);
}

TEST_CASE("quotient algebra basics") {
    const Field k0 = Field::make(2, 2);
    const ExtensionSpec spec =
        ExtensionSpec::make(AdditivePoly::frobenius_minus_identity(k0, 2), parse_ratfunc(k0, "T^3+1/T"));
    const QuotientAlgebra qa(spec);
    CHECK(qa.dimension() == 4);
    const QAElem y = qa.y();
    CHECK(spec.f().eval(y) == qa.constant(spec.u()));
    CHECK(y.shift(k0.one()) == y + qa.constant(RatFunc::constant(k0, k0.one())));
    CHECK(kind_of([&] { qa.element(std::vector<RatFunc>(5, RatFunc(k0))); }) == ErrorKind::DegreeOverflow);
    const GeneratorRelation rel = generator_relation(qa, y, {});
    CHECK(rel.A[0] == k0.one());
    CHECK(rel.A[1] == 0);
    CHECK(rel.D.is_zero());
    CHECK(rel.moore_det != 0);
    CHECK(rel.chi == spec.u());
    CHECK(kind_of([&] { generator_relation(qa, y.pth_power(1) + y, {}); }) == ErrorKind::NotAFixedField);
}
