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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aspw/addpoly.hpp"

namespace aspw {

/// K = k(y) with f(y) = u over k = k0(T), where all roots of f lie in k0.
class ExtensionSpec {
public:
    ExtensionSpec() = default;
    /// Throws RootsNotInBaseField when the roots of f are not in k0.
    static ExtensionSpec make(AdditivePoly f, RatFunc u);

    const AdditivePoly& f() const noexcept { return f_; }
    const RatFunc& u() const noexcept { return u_; }
    const Field& k0() const noexcept { return f_.field(); }
    int n() const noexcept { return f_.p_degree(); }
    const RootGroup& group() const noexcept { return *group_; }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return *hyperplanes_; }
    /// [K:k] = p^n; cached at construction.
    bool irreducible() const noexcept { return irreducible_; }

    /// Same f and root data with another right-hand side.
    ExtensionSpec with_u(RatFunc u) const;

private:
    AdditivePoly f_;
    RatFunc u_;
    std::shared_ptr<const RootGroup> group_;
    std::shared_ptr<const std::vector<Hyperplane>> hyperplanes_;
    bool irreducible_ = false;
};

/// Shifts y -> y - delta applied in order; z = y - sum(delta).
struct SubstitutionLog {
    std::vector<RatFunc> shifts;

    RatFunc total(const Field& k0) const;
    /// u - f(sum of shifts).
    RatFunc replay(const AdditivePoly& f, const RatFunc& u) const;
};

struct Reduction {
    SubstitutionLog log;
    RatFunc u;
};

/// Greedy valuation-raising reduction of the right-hand side of f(y) = u.
/// Finite places are processed in sorted order, then infinity. A result that
/// is a constant in f(k0) is then removed. With `only` set, just that place is
/// touched and the constant step is skipped.
Reduction reduce_rhs(const AdditivePoly& f, const RatFunc& u, const std::optional<Place>& only = std::nullopt);

struct WpMembership {
    bool member = false;
    std::optional<RatFunc> witness;  // delta with delta^p - delta = w
};

WpMembership wp_membership(const RatFunc& w);
bool check_irreducible(const ExtensionSpec& spec);

Reduction normalize_at(const ExtensionSpec& spec, const Place& P);

struct GlobalReduction {
    SubstitutionLog log;
    ExtensionSpec reduced;
};

GlobalReduction reduce_global(const ExtensionSpec& spec);

/// Normal form allowing y -> y^(p^j) before shifting: f^(j)(y^(p^j)) = u^(p^j)
/// where f^(j) has coefficients a_i^(p^j).
struct TwistedForm {
    int j = 0;
    AdditivePoly f;
    RatFunc u;  // u^(p^j) before reduction
    Reduction reduction;
    int score = 0;  // sum of m over ramified places
};

TwistedForm twist_normalize(const ExtensionSpec& spec);

/// Pole order beta = lambda * p^m with gcd(lambda, p) = 1.
struct PoleShape {
    long long lambda = 0;
    int m = 0;
};
PoleShape pole_shape(long long beta, int p);
/// Sum of the exponents m over all poles of u.
int ramification_score(const RatFunc& u, int p);

struct RamifiedEntry {
    Place place;
    long long lambda = 0;
    int m = 0;
    long long e_bound = 1;  // p^(n-m) divides e
    bool exact = false;     // m = 0 forces e = p^n
};

struct RamificationReport {
    RatFunc reduced_u;
    std::vector<RamifiedEntry> finite;
    std::optional<RamifiedEntry> infinity;
};

RamificationReport ramification_report(const ExtensionSpec& spec);

struct SubextensionDesc {
    std::size_t index = 0;  // position in spec.hyperplanes()
    Code a = 0;             // f_H(eps_H)
    RatFunc rhs;            // u / a^p
    std::string generator;  // z_H = f_H(y)/a
    bool verified = false;
};

/// Degree-p subextensions, one per hyperplane. With `verify`, each generator
/// is checked in the quotient algebra.
std::vector<SubextensionDesc> subextensions(const ExtensionSpec& spec, bool verify = true);

enum class LocalBehaviour { Split, Inert, Ramified };
std::string_view to_string(LocalBehaviour b);

/// Behaviour of P in k(z)/k with z^p - z = w.
LocalBehaviour degree_p_behaviour(const RatFunc& w, const Place& P);

enum class SplitKind { FullySplit, Inert, Ramified };

struct SplitVerdict {
    SplitKind kind = SplitKind::FullySplit;
    int inertia_degree = 1;
    std::optional<RamifiedEntry> ramified;
};

/// Hyperplane test on the reduced form. Throws RamifiedPlaceForSplitTest at a
/// ramified place when `require_unramified` is set.
SplitVerdict place_splitting(const ExtensionSpec& spec, const Place& P, bool require_unramified = false);

/// (e, f, g) assembled from the behaviour of P in every degree-p subextension.
struct DecompositionType {
    long long e = 1, f = 1, g = 1;
    std::vector<LocalBehaviour> behaviour;  // per hyperplane
    std::vector<std::size_t> split;         // hyperplanes containing the decomposition group
    std::vector<std::size_t> unramified;    // hyperplanes containing the inertia group
    int dim_decomposition = 0;
    int dim_inertia = 0;
    bool consistent = true;
};

DecompositionType decomposition_type(const ExtensionSpec& spec, const Place& P);

/// Rank over F_p of a list of vectors.
int fp_rank(std::vector<std::vector<int>> rows, int p);

struct Combination {
    ExtensionSpec spec;
    std::vector<Code> mu;
    std::string generator;  // y = sum mu_i z_i
};

/// From z_i^p - z_i = gamma_i and an F_p-basis mu of the root group of f.
Combination combine_generators(const std::vector<RatFunc>& gammas, const std::vector<Code>& mu);

class QuotientAlgebra;
struct QAData;

/// Element of k[Y]/(f(Y) - u), stored as Y-coefficients of degree < p^n.
class QAElem {
public:
    QAElem() = default;

    const std::vector<RatFunc>& coeffs() const noexcept { return c_; }
    int degree() const;
    bool is_constant() const { return degree() <= 0; }
    RatFunc constant_term() const;

    QAElem operator+(const QAElem& o) const;
    QAElem operator-(const QAElem& o) const;
    QAElem operator*(const QAElem& o) const;
    QAElem operator-() const;
    QAElem scale(Code c) const;
    QAElem scale(const RatFunc& r) const;
    QAElem pth_power(int i = 1) const;
    /// sigma_xi: Y -> Y + xi.
    QAElem shift(Code xi) const;

    friend bool operator==(const QAElem& a, const QAElem& b) { return a.c_ == b.c_; }

private:
    friend class QuotientAlgebra;
    QAElem(std::shared_ptr<const QAData> d, std::vector<RatFunc> c);
    void reduce();

    std::shared_ptr<const QAData> d_;
    std::vector<RatFunc> c_;
};

class QuotientAlgebra {
public:
    explicit QuotientAlgebra(const ExtensionSpec& spec);

    const ExtensionSpec& spec() const;
    long long dimension() const;
    QAElem y() const;
    QAElem constant(const RatFunc& r) const;
    /// Throws DegreeOverflow when more than p^n coefficients are given.
    QAElem element(std::vector<RatFunc> coeffs) const;

private:
    std::shared_ptr<const QAData> d_;
};

struct FixedBy {
    QAElem element;
    std::vector<Code> subgroup;
};
struct Satisfies {
    QAElem element;
    RatFunc rhs;  // element^p - element = rhs
};

bool qa_verify(const FixedBy& claim);
bool qa_verify(const Satisfies& claim);

struct GeneratorRelation {
    std::vector<Code> A;       // z = sum A_i y^(p^i) + D
    RatFunc D;
    std::vector<Code> gammas;  // sigma_{mu_i}(z) - z
    Code moore_det = 0;
    std::vector<Code> kernel;  // zeros of l on the root group
    RatFunc chi;               // f_V(z) with V = span(gammas)
};

/// Relates z to y for a field k(z) fixed by the subgroup spanned by `target`.
/// Throws NotAFixedField when z does not generate that field.
GeneratorRelation generator_relation(const QuotientAlgebra& qa, const QAElem& z, const std::vector<Code>& target);

}  // namespace aspw
