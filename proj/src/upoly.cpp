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

#include "aspw/upoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace aspw {

Poly::Poly(Field f, std::vector<Code> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& f, Code c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Code c, int degree) {
    if (c == 0) return Poly(f);
    std::vector<Code> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Poly(f, std::move(v));
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == field_.one(); }
bool Poly::is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scale(field_.inv(c_.back()));
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(field_, o.field_);
    std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(field_, o.field_);
    std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<Code> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.neg(c_[i]);
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(field_, o.field_);
    if (c_.empty() || o.c_.empty()) return Poly(field_);
    std::vector<Code> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Code> r = a.coeffs();
    std::vector<Code> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const Code lc_inv = f.inv(b.lead());
    const auto& bc = b.coeffs();
    for (int i = a.degree(); i >= b.degree(); --i) {
        const Code c = f.mul(r[i], lc_inv);
        if (c == 0) continue;
        const int shift = i - b.degree();
        q[shift] = c;
        for (int j = 0; j <= b.degree(); ++j) r[shift + j] = f.sub(r[shift + j], f.mul(c, bc[j]));
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly Poly::operator/(const Poly& o) const { return divmod(*this, o).first; }
Poly Poly::operator%(const Poly& o) const { return divmod(*this, o).second; }

Poly Poly::scale(Code c) const {
    std::vector<Code> r(c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.mul(c_[i], c);
    return Poly(field_, std::move(r));
}

Poly Poly::shift(int k) const {
    if (c_.empty()) return *this;
    std::vector<Code> r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(r));
}

Poly Poly::pow(long long e) const {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative polynomial exponent");
    Poly r = constant(field_, field_.one());
    Poly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return r;
}

Poly Poly::pth_power(int i) const {
    if (c_.empty() || i == 0) return *this;
    long long stride = 1;
    for (int k = 0; k < i; ++k) stride *= field_.p();
    std::vector<Code> r(static_cast<std::size_t>(degree() * stride) + 1, 0);
    for (std::size_t j = 0; j < c_.size(); ++j) r[j * stride] = field_.frob(c_[j], i);
    return Poly(field_, std::move(r));
}

Poly Poly::pth_root() const {
    const int p = field_.p();
    if (c_.empty()) return *this;
    std::vector<Code> r(static_cast<std::size_t>(degree() / p) + 1, 0);
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (j % p != 0) throw Error(ErrorKind::InvalidArgument, "polynomial is not a p-th power");
        r[j / p] = field_.frob(c_[j], -1);
    }
    return Poly(field_, std::move(r));
}

Poly Poly::frob_coeffs(long long i) const {
    std::vector<Code> r(c_.size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = field_.frob(c_[j], i);
    return Poly(field_, std::move(r));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Code> r(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) r[j - 1] = field_.mul(field_.from_int(static_cast<long long>(j)), c_[j]);
    return Poly(field_, std::move(r));
}

Code Poly::eval(Code x) const {
    Code acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
}

Code Poly::eval_in(const SubfieldEmbedding& emb, Code x) const {
    if (!(emb.source() == field_)) throw Error(ErrorKind::IncompatibleContexts, "embedding source differs");
    const Field& t = emb.target();
    Code acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = t.add(t.mul(acc, x), emb.map(*it));
    return acc;
}

bool operator<(const Poly& a, const Poly& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c_ < b.c_;
}

namespace {

std::string coeff_token(const Field& f, Code c) {
    std::string s = f.format(c);
    if (s.find('+') != std::string::npos) return "(" + s + ")";
    return s;
}

std::vector<std::string> poly_terms(const Poly& p, const std::string& var) {
    std::vector<std::string> out;
    const Field& f = p.field();
    for (int i = p.degree(); i >= 0; --i) {
        const Code c = p.coeff(i);
        if (c == 0) continue;
        if (i == 0) {
            out.push_back(coeff_token(f, c));
            continue;
        }
        std::string mono = var;
        if (i > 1) mono += "^" + std::to_string(i);
        if (c == f.one())
            out.push_back(mono);
        else
            out.push_back(coeff_token(f, c) + "*" + mono);
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string r;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) r += sep;
        r += parts[i];
    }
    return r;
}

}  // namespace

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    return join(poly_terms(*this, var), "+");
}

Poly powmod(const Poly& base, unsigned long long e, const Poly& mod) {
    Poly r = Poly::constant(base.field(), base.field().one()) % mod;
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) r = (r * b) % mod;
        e >>= 1;
        if (e > 0) b = (b * b) % mod;
    }
    return r;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, f.one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Code li = f.inv(r0.lead());
    return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

namespace {

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    const Field& F = f.field();
    const int p = F.p();
    if (f.degree() < 1) return;
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) squarefree(c.monic().pth_root(), mult * p, out);
}

// Candidate splitter number k: digits of k in base q as coefficients.
Poly candidate(const Field& F, unsigned long long k) {
    std::vector<Code> c;
    while (k > 0) {
        c.push_back(static_cast<Code>(k % F.order()));
        k /= F.order();
    }
    return Poly(F, std::move(c));
}

void equal_degree(const Poly& g, int d, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Field& F = g.field();
    const unsigned long long q = F.order();
    const Poly one = Poly::constant(F, F.one());
    for (unsigned long long k = q;; ++k) {
        Poly a = candidate(F, k);
        if (a.degree() >= g.degree()) throw Error(ErrorKind::InvalidArgument, "equal-degree split failed");
        Poly b;
        if (F.p() == 2) {
            const int steps = F.degree() * d;
            Poly x = a % g;
            b = x;
            for (int i = 1; i < steps; ++i) {
                x = (x * x) % g;
                b = b + x;
            }
        } else {
            // a^((q^d-1)/2) = (norm)^((q-1)/2) with norm = prod a^(q^i).
            Poly x = a % g;
            Poly norm = x;
            for (int i = 1; i < d; ++i) {
                x = powmod(x, q, g);
                norm = (norm * x) % g;
            }
            b = powmod(norm, (q - 1) / 2, g) - one;
        }
        Poly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, out);
            equal_degree(g / h, d, out);
            return;
        }
    }
}

void distinct_degree(Poly g, int mult, std::vector<std::pair<Poly, int>>& out) {
    const Field& F = g.field();
    const Poly x = Poly::t(F);
    Poly h = x;
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = powmod(h, F.order(), g);
        Poly gd = gcd(g, h - x);
        if (gd.degree() > 0) {
            std::vector<Poly> parts;
            equal_degree(gd, d, parts);
            for (auto& p : parts) out.emplace_back(std::move(p), mult);
            g = g / gd;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), mult);
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
    std::vector<std::pair<Poly, int>> sqf;
    squarefree(f.monic(), 1, sqf);
    std::vector<std::pair<Poly, int>> out;
    for (auto& [g, m] : sqf) distinct_degree(g, m, out);
    std::map<Poly, int> merged;
    for (auto& [g, m] : out) merged[g] += m;
    return {merged.begin(), merged.end()};
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    const Poly g = f.monic();
    if (gcd(g, g.derivative()).degree() > 0) return false;
    const Poly x = Poly::t(f.field());
    Poly h = x;
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = powmod(h, f.field().order(), g);
        if (gcd(g, h - x).degree() > 0) return false;
    }
    return true;
}

int multiplicity(const Poly& f, const Poly& P) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity in the zero polynomial");
    int k = 0;
    Poly g = f;
    while (true) {
        auto [q, r] = divmod(g, P);
        if (!r.is_zero()) return k;
        g = std::move(q);
        ++k;
    }
}

RatFunc::RatFunc(Field f) : num_(f), den_(Poly::constant(f, f.one())) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), num_.field().one())) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize() {
    require_same_field(num_.field(), den_.field());
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.field(), den_.field().one());
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    const Code li = num_.field().inv(den_.lead());
    if (li != num_.field().one()) {
        num_ = num_.scale(li);
        den_ = den_.scale(li);
    }
}

Code RatFunc::constant_value() const {
    if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "not a constant: " + to_string());
    return num_.coeff(0);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_polynomial() && o.is_polynomial()) return RatFunc(num_ * o.num_);
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -num_;
    return r;
}

RatFunc RatFunc::scale(Code c) const {
    if (c == 0) return RatFunc(field());
    RatFunc r = *this;
    r.num_ = num_.scale(c);
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

RatFunc RatFunc::pth_power(int i) const {
    RatFunc r;
    r.num_ = num_.pth_power(i);
    r.den_ = den_.pth_power(i);
    return r;
}

RatFunc RatFunc::frob_coeffs(long long i) const {
    RatFunc r;
    r.num_ = num_.frob_coeffs(i);
    r.den_ = den_.frob_coeffs(i);
    return r;
}

Place Place::finite(Poly p) {
    if (!p.is_monic() || !is_irreducible(p))
        throw Error(ErrorKind::InvalidArgument, "place must be monic irreducible: " + p.to_string());
    return {false, std::move(p)};
}

bool operator<(const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.infinite) return false;
    return a.P < b.P;
}

int valuation(const RatFunc& u, const Place& P) {
    if (u.is_zero()) return kInfiniteValuation;
    if (P.infinite) return u.den().degree() - u.num().degree();
    return multiplicity(u.num(), P.P) - multiplicity(u.den(), P.P);
}

std::vector<Place> enumerate_places(const Field& f, int max_degree) {
    std::vector<Place> out;
    const unsigned long long q = f.order();
    for (int d = 1; d <= max_degree; ++d) {
        unsigned long long count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (unsigned long long k = 0; k < count; ++k) {
            std::vector<Code> c(static_cast<std::size_t>(d) + 1);
            unsigned long long r = k;
            // Most significant digit is the constant term, so k order is Poly order.
            for (int i = d - 1; i >= 0; --i) {
                c[i] = static_cast<Code>(r % q);
                r /= q;
            }
            c[d] = f.one();
            Poly P(f, std::move(c));
            if (is_irreducible(P)) out.push_back({false, std::move(P)});
        }
    }
    return out;
}

int PoleTerm::order() const {
    for (int j = static_cast<int>(parts.size()); j >= 1; --j)
        if (!parts[j - 1].is_zero()) return j;
    return 0;
}

Poly PoleTerm::combined() const {
    const int e = order();
    Poly acc(P.field());
    for (int j = 1; j <= e; ++j) acc = acc + parts[j - 1] * P.pow(e - j);
    return acc;
}

RatFunc PoleTerm::value() const {
    const int e = order();
    if (e == 0) return RatFunc(P.field());
    return RatFunc(combined(), P.pow(e));
}

RatFunc PartialFractions::recombine() const {
    RatFunc acc(poly_part);
    for (const auto& t : terms) acc = acc + t.value();
    return acc;
}

PartialFractions partial_fractions(const RatFunc& u) {
    const Field& F = u.field();
    PartialFractions pf;
    auto [quot, rem] = divmod(u.num(), u.den());
    pf.poly_part = quot;
    if (u.den().degree() == 0) return pf;
    const auto facs = factor(u.den());
    for (const auto& [P, e] : facs) {
        const Poly Pe = P.pow(e);
        const Poly rest = u.den() / Pe;
        const ExtGcd eg = ext_gcd(rest % Pe, Pe);
        Poly Q = (rem * eg.s) % Pe;
        PoleTerm t{P, std::vector<Poly>(static_cast<std::size_t>(e), Poly(F))};
        // P-adic digits: Q = sum_k c_k P^k, contributing c_k / P^(e-k).
        for (int k = 0; k < e && !Q.is_zero(); ++k) {
            auto [qq, rr] = divmod(Q, P);
            t.parts[static_cast<std::size_t>(e - k - 1)] = rr;
            Q = std::move(qq);
        }
        pf.terms.push_back(std::move(t));
    }
    return pf;
}

std::string RatFunc::to_string() const {
    if (is_zero()) return "0";
    const PartialFractions pf = partial_fractions(*this);
    std::vector<std::string> out = poly_terms(pf.poly_part, "T");
    for (const auto& t : pf.terms) {
        std::string den = t.P.to_string();
        if (poly_terms(t.P, "T").size() > 1) den = "(" + den + ")";
        for (int j = static_cast<int>(t.parts.size()); j >= 1; --j) {
            const Poly& q = t.parts[j - 1];
            if (q.is_zero()) continue;
            const auto qt = poly_terms(q, "T");
            std::string num = join(qt, "+");
            if (qt.size() > 1) num = "(" + num + ")";
            out.push_back(num + "/" + den + (j > 1 ? "^" + std::to_string(j) : ""));
        }
    }
    return join(out, " + ");
}

Code designated_root(const Poly& P, const SubfieldEmbedding& emb) {
    static std::mutex mtx;
    static std::map<std::pair<std::vector<Code>, std::pair<const void*, const void*>>, Code> cache;
    const auto key = std::make_pair(P.coeffs(), std::make_pair(P.field().id(), emb.target().id()));
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const Field& t = emb.target();
    for (Code c = 0; c < t.order(); ++c) {
        if (P.eval_in(emb, c) == 0) {
            std::lock_guard lock(mtx);
            cache.emplace(key, c);
            return c;
        }
    }
    throw Error(ErrorKind::NotASubfield, "place has no root in the residue field");
}

FFElem residue_eval(const RatFunc& u, const Place& P) {
    if (P.infinite) {
        if (valuation(u, P) < 0) throw Error(ErrorKind::PoleAtPlace, "pole at infinity");
        const Field& F = u.field();
        if (u.num().degree() < u.den().degree()) return F.elem(0);
        return F.elem(F.div(u.num().lead(), u.den().lead()));
    }
    return residue_eval(u, P, extension_of_degree(u.field(), P.degree()));
}

FFElem residue_eval(const RatFunc& u, const Place& P, const SubfieldEmbedding& emb) {
    if (P.infinite) return residue_eval(u, P);
    if (valuation(u, P) < 0) throw Error(ErrorKind::PoleAtPlace, "pole at " + P.to_string());
    const Code nu = designated_root(P.P, emb);
    const Field& t = emb.target();
    return t.elem(t.div(u.num().eval_in(emb, nu), u.den().eval_in(emb, nu)));
}

}  // namespace aspw
