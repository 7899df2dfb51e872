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
#include <set>

#include "aspw/error.hpp"
#include "aspw/gf.hpp"

using namespace aspw;

namespace {

// Schoolbook product of coefficient vectors reduced by the modulus.
std::vector<int> ref_mul(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& mod, int p) {
    const std::size_t s = mod.size() - 1;
    std::vector<int> prod(2 * s, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t k = prod.size(); k-- > s;) {
        const int c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= s; ++i) prod[k - s + i] = ((prod[k - s + i] - c * mod[i]) % p + p) % p;
    }
    prod.resize(s);
    return prod;
}

std::vector<int> padded(std::vector<int> v, std::size_t s) {
    v.resize(s, 0);
    return v;
}

}  // namespace

TEST_CASE("prime field matches integers mod p") {
    const Field f = Field::make(7, 1);
    for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
            CHECK(f.prime_value(f.add(f.from_int(a), f.from_int(b))) == (a + b) % 7);
            CHECK(f.prime_value(f.mul(f.from_int(a), f.from_int(b))) == (a * b) % 7);
        }
    }
    CHECK(f.from_int(-1) == f.from_int(6));
}

TEST_CASE("multiplication agrees with schoolbook reduction") {
    for (auto [p, s] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {3, 2}, {5, 2}}) {
        const Field f = Field::make(p, s);
        for (Code a = 0; a < f.order(); ++a) {
            for (Code b = 0; b < f.order(); ++b) {
                const auto expect = ref_mul(padded(f.coeffs(a), s), padded(f.coeffs(b), s), f.modulus(), p);
                CHECK(padded(f.coeffs(f.mul(a, b)), s) == expect);
            }
        }
    }
}

TEST_CASE("explicit modulus x^3-x-2 over F_3") {
    const Field f = Field::make(3, 3, std::vector<int>{1, 2, 0, 1});
    const Code w = f.from_coeffs(std::vector<int>{0, 1});
    CHECK(f.pow(w, 3) == f.add(w, f.from_int(2)));
    CHECK(f.format(f.add(w, f.from_int(2))) == "w+2");
    CHECK(f.format(f.add(f.mul(w, w), f.one())) == "w^2+1");
}

TEST_CASE("field axioms and inverses") {
    const Field f = Field::make(3, 2);
    for (Code a = 0; a < f.order(); ++a) {
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == f.one());
        CHECK(f.add(a, f.neg(a)) == 0);
        for (Code b = 0; b < f.order(); ++b)
            for (Code c = 0; c < f.order(); ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
    CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("multiplicative group is cyclic") {
    for (auto [p, s] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {7, 2}}) {
        const Field f = Field::make(p, s);
        std::size_t best = 0;
        for (Code g = 1; g < f.order() && best + 1 < f.order(); ++g) {
            std::set<Code> seen;
            Code x = f.one();
            for (Code i = 0; i + 1 < f.order(); ++i) {
                seen.insert(x);
                x = f.mul(x, g);
            }
            best = std::max(best, seen.size());
        }
        CHECK(best == f.order() - 1);
        CHECK(f.pow(f.generator(), f.order() - 1) == f.one());
    }
}

TEST_CASE("Frobenius and trace") {
    const Field f = Field::make(2, 6);
    for (Code a = 0; a < f.order(); ++a) {
        CHECK(f.frob(a, 6) == a);
        CHECK(f.frob(f.frob(a, 1), -1) == a);
        CHECK(f.frob(a, 1) == f.pow(a, 2));
        CHECK(f.prime_value(f.absolute_trace(a)).has_value());
        const Code t3 = f.trace(a, 3);
        CHECK(f.frob(t3, 3) == t3);
    }
    std::size_t zero_trace = 0;
    for (Code a = 0; a < f.order(); ++a) zero_trace += f.absolute_trace(a) == 0;
    CHECK(zero_trace == f.order() / 2);
}

TEST_CASE("subfield embedding is a ring map") {
    const Field small = Field::make(2, 2);
    const SubfieldEmbedding& emb = extension_of_degree(small, 3);
    const Field& big = emb.target();
    CHECK(big.order() == 64);
    for (Code a = 0; a < small.order(); ++a) {
        for (Code b = 0; b < small.order(); ++b) {
            CHECK(emb.map(small.add(a, b)) == big.add(emb.map(a), emb.map(b)));
            CHECK(emb.map(small.mul(a, b)) == big.mul(emb.map(a), emb.map(b)));
        }
    }
    CHECK(&extension_of_degree(small, 3) == &emb);
}

TEST_CASE("construction errors") {
    auto kind = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind([] { Field::make(4, 1); }) == ErrorKind::NotPrime);
    CHECK(kind([] { Field::make(3, 2, std::vector<int>{2, 0, 1}); }) == ErrorKind::ReducibleModulus);
    CHECK(kind([] { Field::make(2, 21); }) == ErrorKind::FieldTooLarge);
}

TEST_CASE("contexts are interned") {
    CHECK(Field::make(3, 2) == Field::make(3, 2));
    CHECK_FALSE(Field::make(3, 2) == Field::make(3, 2, std::nullopt, "a"));
    CHECK(is_irreducible_mod_p({1, 2, 0, 1}, 3));
    CHECK_FALSE(is_irreducible_mod_p({2, 0, 1}, 3));
}
