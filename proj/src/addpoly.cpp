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

#include "aspw/addpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace aspw {

AdditivePoly::AdditivePoly(Field k0, std::vector<Code> a) : k0_(std::move(k0)), a_(std::move(a)) {
    if (a_.empty() || a_.back() != k0_.one())
        throw Error(ErrorKind::InvalidArgument, "additive polynomial must be monic");
    if (a_[0] == 0) throw Error(ErrorKind::InvalidArgument, "additive polynomial must be separable (a_0 != 0)");
}

AdditivePoly AdditivePoly::frobenius_minus_identity(const Field& k0, int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "p-degree must be >= 1");
    std::vector<Code> a(static_cast<std::size_t>(n) + 1, 0);
    a[0] = k0.neg(k0.one());
    a[n] = k0.one();
    return AdditivePoly(k0, std::move(a));
}

AdditivePoly AdditivePoly::identity(const Field& k0) { return AdditivePoly(k0, {k0.one()}); }

long long AdditivePoly::degree() const {
    long long d = 1;
    for (int i = 0; i < p_degree(); ++i) d *= k0_.p();
    return d;
}

Code AdditivePoly::eval(Code x) const {
    Code acc = 0;
    Code xp = x;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) xp = k0_.frob(xp, 1);
        acc = k0_.add(acc, k0_.mul(a_[i], xp));
    }
    return acc;
}

FFElem AdditivePoly::eval(const FFElem& x) const {
    require_same_field(k0_, x.field());
    return k0_.elem(eval(x.code()));
}

Code AdditivePoly::eval_in(const SubfieldEmbedding& emb, Code x) const {
    if (!(emb.source() == k0_)) throw Error(ErrorKind::IncompatibleContexts, "embedding source differs");
    const Field& t = emb.target();
    Code acc = 0;
    Code xp = x;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        if (i) xp = t.frob(xp, 1);
        acc = t.add(acc, t.mul(emb.map(a_[i]), xp));
    }
    return acc;
}

AdditivePoly AdditivePoly::twist(long long j) const {
    std::vector<Code> b(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) b[i] = k0_.frob(a_[i], j);
    return AdditivePoly(k0_, std::move(b));
}

Poly AdditivePoly::as_poly() const {
    std::vector<Code> c(static_cast<std::size_t>(degree()) + 1, 0);
    long long e = 1;
    for (std::size_t i = 0; i < a_.size(); ++i) {
        c[static_cast<std::size_t>(e)] = a_[i];
        e *= k0_.p();
    }
    return Poly(k0_, std::move(c));
}

std::string AdditivePoly::to_string(const std::string& var) const { return as_poly().to_string(var); }

std::vector<Code> compose_additive(const Field& k0, const std::vector<Code>& g, const std::vector<Code>& h) {
    if (g.empty() || h.empty()) return {};
    std::vector<Code> r(g.size() + h.size() - 1, 0);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            r[i + j] = k0.add(r[i + j], k0.mul(g[i], k0.frob(h[j], static_cast<long long>(i))));
    return r;
}

RootGroup::RootGroup(AdditivePoly f, std::vector<Code> basis) : f_(std::move(f)), basis_(std::move(basis)) {
    const Field& k0 = f_.field();
    const int p = k0.p();
    coords_.assign(k0.order(), {});
    std::vector<int> c(basis_.size(), 0);
    while (true) {
        coords_[element(c)] = c;
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == p) c[i++] = 0;
        if (i == c.size()) break;
    }
}

std::vector<Code> RootGroup::elements() const {
    std::vector<Code> out;
    for (Code x = 0; x < coords_.size(); ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

bool RootGroup::contains(Code x) const {
    return x == 0 || (x < coords_.size() && !coords_[x].empty());
}

std::vector<int> RootGroup::coordinates(Code x) const {
    if (!contains(x)) throw Error(ErrorKind::NotASubgroup, "element is not in the root group");
    if (coords_[x].empty()) return std::vector<int>(basis_.size(), 0);
    return coords_[x];
}

Code RootGroup::element(const std::vector<int>& coords) const {
    const Field& k0 = f_.field();
    Code acc = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i) acc = k0.add(acc, k0.mul(k0.from_int(coords.at(i)), basis_[i]));
    return acc;
}

std::vector<Code> fp_span(const Field& k0, const std::vector<Code>& v) {
    std::vector<Code> span{0};
    for (Code g : v) {
        std::vector<Code> next;
        next.reserve(span.size() * k0.p());
        for (int c = 0; c < k0.p(); ++c) {
            const Code cg = k0.mul(k0.from_int(c), g);
            for (Code s : span) next.push_back(k0.add(s, cg));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        span = std::move(next);
    }
    return span;
}

bool fp_independent(const Field& k0, const std::vector<Code>& v) {
    std::size_t expect = 1;
    for (std::size_t i = 0; i < v.size(); ++i) expect *= static_cast<std::size_t>(k0.p());
    return fp_span(k0, v).size() == expect;
}

RootGroup root_group(const AdditivePoly& f) {
    const Field& k0 = f.field();
    const long long want = f.degree();
    std::vector<Code> roots;
    for (Code x = 0; x < k0.order(); ++x)
        if (f.eval(x) == 0) roots.push_back(x);
    if (static_cast<long long>(roots.size()) != want)
        throw Error(ErrorKind::RootsNotInBaseField, std::to_string(roots.size()) + " of " + std::to_string(want) +
                                                        " roots of " + f.to_string() + " lie in the base field");
    std::vector<Code> basis;
    std::vector<Code> span{0};
    for (Code r : roots) {
        if (std::binary_search(span.begin(), span.end(), r)) continue;
        basis.push_back(r);
        span = fp_span(k0, basis);
    }
    return RootGroup(f, std::move(basis));
}

AdditivePoly subspace_poly(const Field& k0, const std::vector<Code>& v) {
    const int p = k0.p();
    std::vector<Code> c{k0.one()};
    for (Code d : v) {
        const AdditivePoly cur(k0, c);
        const Code a = cur.eval(d);
        if (a == 0) throw Error(ErrorKind::DependentGenerators, "generators are F_p-dependent");
        const Code s = k0.pow(a, p - 1);
        std::vector<Code> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = k0.add(next[i + 1], k0.frob(c[i], 1));
            next[i] = k0.sub(next[i], k0.mul(s, c[i]));
        }
        c = std::move(next);
    }
    return AdditivePoly(k0, std::move(c));
}

AdditivePoly subspace_poly(const RootGroup& g, const std::vector<Code>& v) {
    for (Code d : v)
        if (!g.contains(d)) throw Error(ErrorKind::NotASubgroup, "generator is not a root of " + g.owner().to_string());
    return subspace_poly(g.owner().field(), v);
}

int Hyperplane::phi(const RootGroup& g, Code x) const {
    const auto c = g.coordinates(x);
    const int p = g.owner().field().p();
    int acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) acc = (acc + c[i] * functional[i]) % p;
    return acc;
}

std::vector<Hyperplane> enumerate_hyperplanes(const RootGroup& g) {
    const AdditivePoly& f = g.owner();
    const Field& k0 = f.field();
    const int p = k0.p();
    const int n = g.rank();
    std::vector<Hyperplane> out;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= p;
    for (long long code = 1; code < total; ++code) {
        std::vector<int> phi(static_cast<std::size_t>(n));
        long long r = code;
        for (int i = n - 1; i >= 0; --i) {
            phi[i] = static_cast<int>(r % p);
            r /= p;
        }
        const int j = static_cast<int>(std::find_if(phi.begin(), phi.end(), [](int x) { return x != 0; }) - phi.begin());
        if (phi[j] != 1) continue;
        Hyperplane h;
        h.functional = phi;
        h.eps = g.basis()[j];
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            h.basis.push_back(k0.sub(g.basis()[i], k0.mul(k0.from_int(phi[i]), g.basis()[j])));
        }
        h.fH = subspace_poly(g, h.basis);
        h.fH_at_eps = h.fH.eval(h.eps);
        // f = wp_a o f_H with a = f_H(eps).
        const Code s = k0.pow(h.fH_at_eps, p - 1);
        const auto& c = h.fH.coeffs();
        std::vector<Code> comp(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            comp[i + 1] = k0.add(comp[i + 1], k0.frob(c[i], 1));
            comp[i] = k0.sub(comp[i], k0.mul(s, c[i]));
        }
        if (comp != f.coeffs()) throw std::logic_error("hyperplane composition identity failed");
        out.push_back(std::move(h));
    }
    return out;
}

Code determinant(const Field& f, std::vector<std::vector<Code>> m) {
    const std::size_t n = m.size();
    Code det = f.one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = f.neg(det);
        }
        det = f.mul(det, m[col][col]);
        const Code inv = f.inv(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Code factor = f.mul(m[r][col], inv);
            for (std::size_t c = col; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
        }
    }
    return det;
}

std::vector<Code> solve_linear(const Field& f, std::vector<std::vector<Code>> m, std::vector<Code> b) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw Error(ErrorKind::SingularSystem, "singular linear system");
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        const Code inv = f.inv(m[col][col]);
        for (std::size_t c = col; c < n; ++c) m[col][c] = f.mul(m[col][c], inv);
        b[col] = f.mul(b[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Code factor = m[r][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
            b[r] = f.sub(b[r], f.mul(factor, b[col]));
        }
    }
    return b;
}

MooreMatrix moore_matrix(const Field& k0, const std::vector<Code>& mu) {
    MooreMatrix mm;
    const std::size_t n = mu.size();
    mm.rows.assign(n, std::vector<Code>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mm.rows[i][j] = k0.frob(mu[i], static_cast<long long>(j));
    mm.det = determinant(k0, mm.rows);
    return mm;
}

Code wp_a(const Field& k0, Code a, Code x) {
    if (a == 0) throw Error(ErrorKind::ZeroScale, "scale must be nonzero");
    return k0.sub(k0.frob(x, 1), k0.mul(k0.pow(a, k0.p() - 1), x));
}

RatFunc wp_a(const RatFunc& a, const RatFunc& x) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroScale, "scale must be nonzero");
    return x.pth_power(1) - a.pow(a.field().p() - 1) * x;
}

}  // namespace aspw
