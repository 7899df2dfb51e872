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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aspw/asext.hpp"

namespace aspw {

/// One monomial of a universal Witt polynomial in x_1..x_m, y_1..y_m.
struct WittTerm {
    std::vector<std::uint16_t> exps;  // size 2m: x exponents then y exponents
    int coeff = 0;                    // in 1..p-1
};

struct WittPoly {
    std::vector<WittTerm> terms;
    int max_degree = 0;  // largest total degree of a term
};

/// Sum, difference and product polynomials for W_m over characteristic p,
/// obtained from the ghost-component recursion over the integers.
struct WittTables {
    int p = 0;
    int m = 0;
    std::vector<WittPoly> sum, diff, prod;  // index i is component i+1
};

constexpr int kMaxWittLength = 4;

/// Memoized; throws LengthCapExceeded when m > 4.
const WittTables& build_tables(int p, int m);

/// Witt vector over a coefficient ring: FFElem (W_m(F_q)) or RatFunc (W_m(k)).
template <class C>
struct WittVector {
    std::vector<C> comps;

    int length() const noexcept { return static_cast<int>(comps.size()); }
    bool is_zero() const;
    friend bool operator==(const WittVector& a, const WittVector& b) { return a.comps == b.comps; }
};

using WittF = WittVector<FFElem>;
using WittK = WittVector<RatFunc>;

template <class C> WittVector<C> witt_add(const WittVector<C>& a, const WittVector<C>& b);
template <class C> WittVector<C> witt_sub(const WittVector<C>& a, const WittVector<C>& b);
template <class C> WittVector<C> witt_mul(const WittVector<C>& a, const WittVector<C>& b);
template <class C> WittVector<C> witt_neg(const WittVector<C>& a);
/// Componentwise p^i-th power.
template <class C> WittVector<C> witt_frobenius(const WittVector<C>& a, int i = 1);
/// x^(p^e) minus x; e = 1 gives the Artin-Schreier-Witt operator, e = n its q-variant.
template <class C> WittVector<C> asw_operator(const WittVector<C>& a, int e = 1);
/// (0,..,0,x_1,..,x_{m-k}).
template <class C> WittVector<C> verschiebung(const WittVector<C>& a, int k = 1);
/// Inverse of a unit (first component nonzero); throws DivisionByZero.
template <class C> WittVector<C> witt_inverse(const WittVector<C>& a);

WittF witt_zero(const Field& f, int m);
WittF witt_one(const Field& f, int m);
/// 1 added to itself t times (t reduced mod p^m; negative t allowed).
WittF witt_from_int(const Field& f, int m, long long t);
WittF teichmuller(const FFElem& u, int m);
WittK witt_zero_k(const Field& f, int m);
WittK teichmuller(const RatFunc& u, int m);
WittK lift(const WittF& a);

/// The integer t in [0, p^m) with witt_from_int(t) = a, for a in W_m(F_p).
std::optional<long long> witt_to_int(const WittF& a);
/// Ghost components (decimal) of the integer lift of a prime-field vector.
std::vector<std::string> ghost_of_lift(const WittF& a);

std::string to_string(const WittF& a);
std::string to_string(const WittK& a);

/// Criterion: first coordinates F_p-independent.
bool basis_check(const std::vector<WittF>& xs);
/// Counts the W_m(F_p)-span by enumeration and compares with q^m.
bool basis_check_exhaustive(const std::vector<WittF>& xs);

struct CyclicSubextension {
    WittK rhs;               // xi * alpha
    bool full_degree = false;  // degree p^m exactly when xi_1 != 0
    std::string generator;   // Witt sum of (xi^(p^i) * y^(p^i))
};

/// n is the p-degree of q for the generator formula.
CyclicSubextension cyclic_subextension(const WittF& xi, const WittK& alpha, int n);

/// g_xi(delta) = Witt sum over i < n of (xi * delta)^(p^i).
WittF witt_trace_map(const WittF& xi, const WittF& delta, int n);

struct CyclicCount {
    long long by_kernel = 0;  // distinct kernels of g_xi over units xi
    long long by_orbit = 0;   // unit xi modulo W_m(F_p)^*
    long long formula = 0;    // (q^m - q^(m-1)) / (p^m - p^(m-1))
};
CyclicCount count_cyclic_subextensions(const Field& fq, int m);

struct WittExtensionSpec {
    Field k0;
    int n = 1;  // q = p^n
    WittK alpha;
};

struct WittReduction {
    int twist = 0;                  // alpha was replaced by alpha^(p^twist)
    WittK alpha;                    // right-hand side actually reduced
    std::vector<WittK> shifts;      // theta_j
    WittK theta;                    // Witt sum of the shifts
    std::vector<std::pair<Place, WittK>> deltas;  // per finite place
    WittK gamma;                    // polynomial part
    WittK beta;                     // Witt sum of the deltas and gamma
};

/// alpha = beta + wp_q(theta) with beta in the per-component reduced shape.
/// With allow_twist, the Frobenius twist minimizing the exponent m of the
/// first component's poles is taken first.
WittReduction witt_reduce(const WittExtensionSpec& spec, bool allow_twist = false);

struct WittRelation {
    std::vector<WittF> A;  // R(X) = Witt sum of A_i * X^(p^i)
    WittK D;
    WittF moore_det;
    bool kernel_checked = false;  // R injective on W_m(F_q) checked exhaustively
};

/// R(mu_i) = xi_i for the Teichmueller basis mu of F_q inside k0, then D with
/// beta = R(alpha) + wp_q(D). Throws SingularWittSystem or IdentityFailure.
WittRelation witt_generator_relation(const WittExtensionSpec& alpha, const WittK& beta, const std::vector<WittF>& xi);

/// R(X) applied to a vector over k.
WittK apply_relation(const std::vector<WittF>& A, const WittK& x);
WittF apply_relation(const std::vector<WittF>& A, const WittF& x);

/// F_p-basis 1, z, .., z^(n-1) of F_q inside k0, z of multiplicative order q-1.
std::vector<Code> subfield_basis(const Field& k0, int n);

/// Solves M * A = b over W_m(F_q) with unit pivots; throws SingularWittSystem.
std::vector<WittF> witt_solve(std::vector<std::vector<WittF>> M, std::vector<WittF> b);

struct InfinitySplitting {
    long long e = 1, f = 1, g = 1;
    int s = 0, t = 0;
    bool consistent = true;  // first-layer verdict agrees with the degree-p analysis
};

/// Full splitting of the infinite place for general q: the polynomial part vanished.
bool witt_full_split_at_infinity(const WittReduction& r);

/// Cyclic case: gamma is the polynomial part of a reduced vector over F_p-containing k0.
InfinitySplitting witt_infinity_splitting(const WittK& gamma);

}  // namespace aspw
