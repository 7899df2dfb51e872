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

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "aspw/gf.hpp"

namespace aspw {

/// Polynomial in T over a finite field, coefficients low-to-high with no
/// trailing zeros. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(Field f) : field_(std::move(f)) {}
    Poly(Field f, std::vector<Code> coeffs);

    static Poly constant(const Field& f, Code c);
    static Poly monomial(const Field& f, Code c, int degree);
    static Poly t(const Field& f) { return monomial(f, f.one(), 1); }

    const Field& field() const noexcept { return field_; }
    const std::vector<Code>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Code coeff(int i) const noexcept { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    Code lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const;
    Poly monic() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator/(const Poly& o) const;
    Poly operator%(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scale(Code c) const;
    Poly shift(int k) const;  // multiply by T^k
    Poly pow(long long e) const;
    /// this^(p^i), computed coefficient-wise.
    Poly pth_power(int i = 1) const;
    /// Inverse of pth_power(1); throws InvalidArgument if this is not a p-th power.
    Poly pth_root() const;
    /// Applies the i-th Frobenius to the coefficients only.
    Poly frob_coeffs(long long i) const;
    Poly derivative() const;
    Code eval(Code x) const;
    /// Evaluates at x in the target of `emb` after embedding the coefficients.
    Code eval_in(const SubfieldEmbedding& emb, Code x) const;

    std::string to_string(const std::string& var = "T") const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    /// Degree first, then coefficient codes from the constant term upward.
    friend bool operator<(const Poly& a, const Poly& b) noexcept;

private:
    void trim();

    Field field_;
    std::vector<Code> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, unsigned long long e, const Poly& mod);
/// Monic gcd (zero when both are zero).
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Monic irreducible factors with multiplicities, sorted by Poly order.
/// The leading coefficient of f is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& f);
bool is_irreducible(const Poly& f);
/// Largest k with P^k | f; f must be nonzero.
int multiplicity(const Poly& f, const Poly& P);

/// Element of k0(T); gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(Field f);
    RatFunc(Poly num);  // NOLINT: polynomials embed into k0(T)
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const Field& f, Code c) { return RatFunc(Poly::constant(f, c)); }
    static RatFunc t(const Field& f) { return RatFunc(Poly::t(f)); }

    const Field& field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    /// Value when constant, otherwise throws InvalidArgument.
    Code constant_value() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc scale(Code c) const;
    RatFunc inv() const;
    RatFunc pow(long long e) const;
    RatFunc pth_power(int i = 1) const;
    RatFunc frob_coeffs(long long i) const;

    /// Canonical partial-fraction rendering.
    std::string to_string() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();

    Poly num_;
    Poly den_;
};

/// Finite place (monic irreducible P) or the infinite place.
struct Place {
    bool infinite = false;
    Poly P;

    static Place at_infinity() { return {true, {}}; }
    static Place finite(Poly p);

    int degree() const { return infinite ? 1 : P.degree(); }
    std::string to_string() const { return infinite ? "inf" : P.to_string(); }

    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite == b.infinite && (a.infinite || a.P == b.P);
    }
    /// Finite places in Poly order, infinity last.
    friend bool operator<(const Place& a, const Place& b);
};

constexpr int kInfiniteValuation = INT_MAX;

int valuation(const RatFunc& u, const Place& P);

/// All finite places of degree <= max_degree, sorted.
std::vector<Place> enumerate_places(const Field& f, int max_degree);

/// Principal part of u at one finite place: parts[j-1] is the numerator of
/// 1/P^j, each of degree < deg P.
struct PoleTerm {
    Poly P;
    std::vector<Poly> parts;

    int order() const;  // largest j with parts[j-1] != 0
    /// Numerator Q with Q/P^order equal to the whole principal part.
    Poly combined() const;
    RatFunc value() const;
};

struct PartialFractions {
    std::vector<PoleTerm> terms;  // sorted by P
    Poly poly_part;

    RatFunc recombine() const;
};

PartialFractions partial_fractions(const RatFunc& u);

/// The designated root of P (smallest code) in the target of `emb`.
Code designated_root(const Poly& P, const SubfieldEmbedding& emb);

/// u(nu) in F_{p^(s*deg P)} for the designated root nu of P.
FFElem residue_eval(const RatFunc& u, const Place& P);
FFElem residue_eval(const RatFunc& u, const Place& P, const SubfieldEmbedding& emb);

}  // namespace aspw
