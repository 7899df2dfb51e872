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
#include <vector>

#include "aspw/upoly.hpp"

namespace aspw {

/// f(X) = sum a_i X^(p^i) over k0, monic and separable.
class AdditivePoly {
public:
    AdditivePoly() = default;
    /// Coefficients a_0..a_n; requires a_n = 1 and a_0 != 0.
    AdditivePoly(Field k0, std::vector<Code> a);

    /// X^(p^n) - X.
    static AdditivePoly frobenius_minus_identity(const Field& k0, int n);
    /// The identity X (p-degree 0).
    static AdditivePoly identity(const Field& k0);

    const Field& field() const noexcept { return k0_; }
    const std::vector<Code>& coeffs() const noexcept { return a_; }
    int p_degree() const noexcept { return static_cast<int>(a_.size()) - 1; }
    long long degree() const;

    Code eval(Code x) const;
    FFElem eval(const FFElem& x) const;
    /// Evaluation in a field containing k0.
    Code eval_in(const SubfieldEmbedding& emb, Code x) const;

    /// Evaluation on any k0-algebra element providing pth_power(i), scale(c) and +.
    template <class T>
    T eval(const T& x) const {
        T acc = x.scale(a_[0]);
        for (std::size_t i = 1; i < a_.size(); ++i) {
            if (a_[i] == 0) continue;
            acc = acc + x.pth_power(static_cast<int>(i)).scale(a_[i]);
        }
        return acc;
    }

    /// Coefficients a_i^(p^j).
    AdditivePoly twist(long long j) const;
    /// As an ordinary polynomial in X.
    Poly as_poly() const;
    std::string to_string(const std::string& var = "X") const;

    friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) noexcept {
        return a.k0_ == b.k0_ && a.a_ == b.a_;
    }

private:
    Field k0_;
    std::vector<Code> a_;
};

/// (g o h)(X) = g(h(X)) for additive g, h without the monic requirement on the
/// intermediate; returned as raw coefficients.
std::vector<Code> compose_additive(const Field& k0, const std::vector<Code>& g, const std::vector<Code>& h);

/// Roots of f inside k0 with an F_p-basis.
class RootGroup {
public:
    RootGroup() = default;
    RootGroup(AdditivePoly f, std::vector<Code> basis);

    const AdditivePoly& owner() const noexcept { return f_; }
    const std::vector<Code>& basis() const noexcept { return basis_; }
    int rank() const noexcept { return static_cast<int>(basis_.size()); }
    /// All p^n elements in code order.
    std::vector<Code> elements() const;
    bool contains(Code x) const;
    /// Coordinates of x in the basis; x must lie in the group.
    std::vector<int> coordinates(Code x) const;
    Code element(const std::vector<int>& coords) const;

private:
    AdditivePoly f_;
    std::vector<Code> basis_;
    std::vector<std::vector<int>> coords_;  // indexed by code, empty when not a root
};

RootGroup root_group(const AdditivePoly& f);

/// All elements of the F_p-span of `v` in code order.
std::vector<Code> fp_span(const Field& k0, const std::vector<Code>& v);
bool fp_independent(const Field& k0, const std::vector<Code>& v);

/// f_V(X) = prod over span(V) of (X - d).
AdditivePoly subspace_poly(const Field& k0, const std::vector<Code>& v);
/// Same, additionally checking span(V) lies in G.
AdditivePoly subspace_poly(const RootGroup& g, const std::vector<Code>& v);

struct Hyperplane {
    std::vector<int> functional;  // phi, first nonzero entry 1
    std::vector<Code> basis;      // n-1 elements of G spanning ker phi
    Code eps = 0;                 // basis element of G with phi(eps) = 1
    AdditivePoly fH;
    Code fH_at_eps = 0;

    /// phi evaluated on a group element.
    int phi(const RootGroup& g, Code x) const;
};

/// The (p^n-1)/(p-1) hyperplanes of G, in lexicographic order of phi.
std::vector<Hyperplane> enumerate_hyperplanes(const RootGroup& g);

struct MooreMatrix {
    std::vector<std::vector<Code>> rows;  // rows[i][j] = mu_i^(p^j)
    Code det = 0;
};

MooreMatrix moore_matrix(const Field& k0, const std::vector<Code>& mu);
/// Determinant over a field by Gaussian elimination.
Code determinant(const Field& f, std::vector<std::vector<Code>> m);
/// Solves m x = b over a field; throws SingularSystem.
std::vector<Code> solve_linear(const Field& f, std::vector<std::vector<Code>> m, std::vector<Code> b);

/// c^p - a^(p-1) c.
Code wp_a(const Field& k0, Code a, Code x);
RatFunc wp_a(const RatFunc& a, const RatFunc& x);
inline RatFunc wp(const RatFunc& x) { return x.pth_power(1) - x; }

}  // namespace aspw
