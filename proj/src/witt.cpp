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

#include "aspw/witt.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

namespace aspw {

namespace {

using boost::multiprecision::cpp_int;
using Mono = std::vector<std::uint16_t>;
using IPoly = std::map<Mono, cpp_int>;

void ip_add_to(IPoly& acc, const IPoly& b, const cpp_int& scale = 1) {
    for (const auto& [mono, c] : b) {
        cpp_int& slot = acc[mono];
        slot += c * scale;
        if (slot == 0) acc.erase(mono);
    }
}

IPoly ip_mul(const IPoly& a, const IPoly& b) {
    IPoly out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            Mono mono(ma.size());
            for (std::size_t k = 0; k < ma.size(); ++k) mono[k] = static_cast<std::uint16_t>(ma[k] + mb[k]);
            cpp_int& slot = out[mono];
            slot += ca * cb;
            if (slot == 0) out.erase(mono);
        }
    }
    return out;
}

IPoly ip_pow(const IPoly& a, long long e, std::size_t nvars) {
    IPoly result{{Mono(nvars, 0), 1}};
    IPoly base = a;
    while (e > 0) {
        if (e & 1) result = ip_mul(result, base);
        e >>= 1;
        if (e > 0) base = ip_mul(base, base);
    }
    return result;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

IPoly ghost(int p, int i, int offset, std::size_t nvars) {
    IPoly g;
    for (int j = 1; j <= i; ++j) {
        Mono mono(nvars, 0);
        mono[offset + j - 1] = static_cast<std::uint16_t>(ipow(p, i - j));
        g[mono] = cpp_int(ipow(p, j - 1));
    }
    return g;
}

enum class Op { Sum, Diff, Prod };

std::vector<WittPoly> universal(int p, int m, Op op) {
    const std::size_t nv = 2 * static_cast<std::size_t>(m);
    std::vector<IPoly> P;
    std::vector<WittPoly> out;
    for (int i = 1; i <= m; ++i) {
        const IPoly gx = ghost(p, i, 0, nv);
        const IPoly gy = ghost(p, i, m, nv);
        IPoly target;
        switch (op) {
            case Op::Sum:
                target = gx;
                ip_add_to(target, gy);
                break;
            case Op::Diff:
                target = gx;
                ip_add_to(target, gy, -1);
                break;
            case Op::Prod:
                target = ip_mul(gx, gy);
                break;
        }
        for (int j = 1; j < i; ++j) ip_add_to(target, ip_pow(P[j - 1], ipow(p, i - j), nv), -cpp_int(ipow(p, j - 1)));
        const cpp_int d = cpp_int(ipow(p, i - 1));
        for (auto& [mono, c] : target) {
            if (c % d != 0) throw std::logic_error("Witt recursion: inexact division by p^(i-1)");
            c /= d;
        }
        WittPoly wp;
        for (const auto& [mono, c] : target) {
            cpp_int r = c % p;
            if (r < 0) r += p;
            if (r == 0) continue;
            int deg = 0;
            for (auto e : mono) deg += e;
            wp.max_degree = std::max(wp.max_degree, deg);
            wp.terms.push_back({mono, static_cast<int>(r)});
        }
        P.push_back(std::move(target));
        out.push_back(std::move(wp));
    }
    return out;
}

// Coefficient-ring adapters.
Field field_of(const FFElem& x) { return x.field(); }
Field field_of(const RatFunc& x) { return x.field(); }
FFElem pth(const FFElem& x, int i) { return x.frob(i); }
RatFunc pth(const RatFunc& x, int i) { return x.pth_power(i); }
FFElem zero_like(const FFElem& x) { return {x.field(), 0}; }
RatFunc zero_like(const RatFunc& x) { return RatFunc(x.field()); }

template <class C>
void check_pair(const WittVector<C>& a, const WittVector<C>& b) {
    if (a.length() != b.length()) throw Error(ErrorKind::LengthMismatch, "Witt vectors of different lengths");
    if (a.comps.empty()) throw Error(ErrorKind::InvalidArgument, "empty Witt vector");
    const Field f = field_of(a.comps[0]);
    for (const auto& c : a.comps)
        if (!(field_of(c) == f)) throw Error(ErrorKind::RingMismatch, "mixed coefficient fields");
    for (const auto& c : b.comps)
        if (!(field_of(c) == f)) throw Error(ErrorKind::RingMismatch, "mixed coefficient fields");
}

std::vector<FFElem> eval_polys(const std::vector<WittPoly>& polys, const std::vector<FFElem>& vars) {
    const Field f = vars[0].field();
    std::vector<FFElem> out;
    for (const auto& poly : polys) {
        Code acc = 0;
        for (const auto& t : poly.terms) {
            Code v = f.from_int(t.coeff);
            for (std::size_t k = 0; k < vars.size() && v != 0; ++k)
                if (t.exps[k] != 0) v = f.mul(v, f.pow(vars[k].code(), t.exps[k]));
            acc = f.add(acc, v);
        }
        out.emplace_back(f, acc);
    }
    return out;
}

// Powers of a polynomial, using p-th powers where possible.
class PowerCache {
public:
    PowerCache(Poly base, int p) : base_(std::move(base)), p_(p) {}
    const Poly& get(int e) {
        auto it = cache_.find(e);
        if (it != cache_.end()) return it->second;
        Poly v;
        if (e == 0) {
            v = Poly::constant(base_.field(), base_.field().one());
        } else if (e == 1) {
            v = base_;
        } else if (e % p_ == 0) {
            v = get(e / p_).pth_power(1);
        } else {
            v = get(e - 1) * base_;
        }
        return cache_.emplace(e, std::move(v)).first->second;
    }

private:
    Poly base_;
    int p_;
    std::map<int, Poly> cache_;
};

// Common denominator L of all inputs; each monomial of total degree d is
// multiplied by L^(D - d) so that every component has denominator L^D.
std::vector<RatFunc> eval_polys(const std::vector<WittPoly>& polys, const std::vector<RatFunc>& vars) {
    const Field f = vars[0].field();
    const int p = f.p();
    Poly L = Poly::constant(f, f.one());
    for (const auto& v : vars) L = L * (v.den() / gcd(L, v.den()));
    std::vector<PowerCache> pw;
    std::vector<bool> zero;
    for (const auto& v : vars) {
        pw.emplace_back(v.num() * (L / v.den()), p);
        zero.push_back(v.is_zero());
    }
    PowerCache lpow(L, p);
    std::vector<RatFunc> out;
    for (const auto& poly : polys) {
        Poly acc(f);
        for (const auto& t : poly.terms) {
            bool skip = false;
            int deg = 0;
            for (std::size_t k = 0; k < vars.size(); ++k) {
                if (t.exps[k] != 0 && zero[k]) skip = true;
                deg += t.exps[k];
            }
            if (skip) continue;
            Poly v = Poly::constant(f, f.from_int(t.coeff));
            for (std::size_t k = 0; k < vars.size(); ++k)
                if (t.exps[k] != 0) v = v * pw[k].get(t.exps[k]);
            if (L.degree() > 0 && poly.max_degree > deg) v = v * lpow.get(poly.max_degree - deg);
            acc += v;
        }
        if (L.degree() > 0) {
            out.emplace_back(acc, lpow.get(poly.max_degree));
        } else {
            out.emplace_back(acc);
        }
    }
    return out;
}

template <class C>
WittVector<C> apply(const WittVector<C>& a, const WittVector<C>& b, Op op) {
    check_pair(a, b);
    const int m = a.length();
    const WittTables& t = build_tables(field_of(a.comps[0]).p(), m);
    std::vector<C> vars = a.comps;
    vars.insert(vars.end(), b.comps.begin(), b.comps.end());
    const auto& polys = op == Op::Sum ? t.sum : op == Op::Diff ? t.diff : t.prod;
    return {eval_polys(polys, vars)};
}

long long encode(const WittF& a) {
    long long code = 0;
    const long long q = static_cast<long long>(a.comps[0].field().order());
    for (auto it = a.comps.rbegin(); it != a.comps.rend(); ++it) code = code * q + static_cast<long long>(it->code());
    return code;
}

WittF decode(const Field& f, int m, long long code) {
    WittF out;
    const long long q = static_cast<long long>(f.order());
    for (int i = 0; i < m; ++i) {
        out.comps.emplace_back(f, static_cast<Code>(code % q));
        code /= q;
    }
    return out;
}

long long ring_size(const Field& f, int m, long long cap) {
    long long n = 1;
    for (int i = 0; i < m; ++i) {
        n *= static_cast<long long>(f.order());
        if (n > cap) return -1;
    }
    return n;
}

}  // namespace

const WittTables& build_tables(int p, int m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "Witt length must be positive");
    if (m > kMaxWittLength) throw Error(ErrorKind::LengthCapExceeded, "Witt length " + std::to_string(m) + " exceeds 4");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<WittTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, m}];
    if (!slot) {
        auto t = std::make_unique<WittTables>();
        t->p = p;
        t->m = m;
        t->sum = universal(p, m, Op::Sum);
        t->diff = universal(p, m, Op::Diff);
        t->prod = universal(p, m, Op::Prod);
        slot = std::move(t);
    }
    return *slot;
}

template <class C>
bool WittVector<C>::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](const C& c) { return c.is_zero(); });
}

template <class C>
WittVector<C> witt_add(const WittVector<C>& a, const WittVector<C>& b) {
    return apply(a, b, Op::Sum);
}

template <class C>
WittVector<C> witt_sub(const WittVector<C>& a, const WittVector<C>& b) {
    return apply(a, b, Op::Diff);
}

template <class C>
WittVector<C> witt_mul(const WittVector<C>& a, const WittVector<C>& b) {
    return apply(a, b, Op::Prod);
}

template <class C>
WittVector<C> witt_neg(const WittVector<C>& a) {
    WittVector<C> z;
    for (const auto& c : a.comps) z.comps.push_back(zero_like(c));
    return witt_sub(z, a);
}

template <class C>
WittVector<C> witt_frobenius(const WittVector<C>& a, int i) {
    WittVector<C> out;
    for (const auto& c : a.comps) out.comps.push_back(pth(c, i));
    return out;
}

template <class C>
WittVector<C> asw_operator(const WittVector<C>& a, int e) {
    return witt_sub(witt_frobenius(a, e), a);
}

template <class C>
WittVector<C> verschiebung(const WittVector<C>& a, int k) {
    WittVector<C> out;
    const int m = a.length();
    for (int i = 0; i < m; ++i) out.comps.push_back(i < k ? zero_like(a.comps[0]) : a.comps[i - k]);
    return out;
}

template <class C>
WittVector<C> witt_inverse(const WittVector<C>& a) {
    if (a.comps.empty() || a.comps[0].is_zero()) throw Error(ErrorKind::DivisionByZero, "Witt vector is not a unit");
    const int m = a.length();
    const C zero = zero_like(a.comps[0]);
    WittVector<C> x;
    x.comps.assign(m, zero);
    const C inv0 = a.comps[0].inv();
    x.comps[0] = inv0;
    for (int i = 1; i < m; ++i) {
        const WittVector<C> prod = witt_mul(a, x);
        x.comps[i] = zero - prod.comps[i] * pth(inv0, i);
    }
    return x;
}

#define ASPW_WITT_INSTANTIATE(C)                                                   \
    template struct WittVector<C>;                                                 \
    template WittVector<C> witt_add(const WittVector<C>&, const WittVector<C>&); \
    template WittVector<C> witt_sub(const WittVector<C>&, const WittVector<C>&); \
    template WittVector<C> witt_mul(const WittVector<C>&, const WittVector<C>&); \
    template WittVector<C> witt_neg(const WittVector<C>&);                       \
    template WittVector<C> witt_frobenius(const WittVector<C>&, int);            \
    template WittVector<C> asw_operator(const WittVector<C>&, int);              \
    template WittVector<C> verschiebung(const WittVector<C>&, int);              \
    template WittVector<C> witt_inverse(const WittVector<C>&);

ASPW_WITT_INSTANTIATE(FFElem)
ASPW_WITT_INSTANTIATE(RatFunc)
#undef ASPW_WITT_INSTANTIATE

WittF witt_zero(const Field& f, int m) {
    return WittF{std::vector<FFElem>(static_cast<std::size_t>(m), FFElem(f, 0))};
}

WittF witt_one(const Field& f, int m) {
    WittF out = witt_zero(f, m);
    out.comps[0] = FFElem(f, f.one());
    return out;
}

WittF witt_from_int(const Field& f, int m, long long t) {
    build_tables(f.p(), m);
    const long long mod = ipow(f.p(), m);
    t %= mod;
    if (t < 0) t += mod;
    const WittF one = witt_one(f, m);
    WittF acc = witt_zero(f, m);
    for (long long i = 0; i < t; ++i) acc = witt_add(acc, one);
    return acc;
}

WittF teichmuller(const FFElem& u, int m) {
    WittF out = witt_zero(u.field(), m);
    out.comps[0] = u;
    return out;
}

WittK witt_zero_k(const Field& f, int m) {
    return WittK{std::vector<RatFunc>(static_cast<std::size_t>(m), RatFunc(f))};
}

WittK teichmuller(const RatFunc& u, int m) {
    WittK out = witt_zero_k(u.field(), m);
    out.comps[0] = u;
    return out;
}

WittK lift(const WittF& a) {
    WittK out;
    for (const auto& c : a.comps) out.comps.push_back(RatFunc::constant(c.field(), c.code()));
    return out;
}

std::optional<long long> witt_to_int(const WittF& a) {
    const Field f = a.comps.at(0).field();
    if (f.degree() != 1) return std::nullopt;
    const int m = a.length();
    const long long mod = ipow(f.p(), m);
    const WittF one = witt_one(f, m);
    WittF acc = witt_zero(f, m);
    for (long long t = 0; t < mod; ++t) {
        if (acc == a) return t;
        acc = witt_add(acc, one);
    }
    return std::nullopt;
}

std::vector<std::string> ghost_of_lift(const WittF& a) {
    const Field f = a.comps.at(0).field();
    const int p = f.p();
    std::vector<std::string> out;
    for (int i = 1; i <= a.length(); ++i) {
        cpp_int g = 0;
        for (int j = 1; j <= i; ++j) {
            const auto digits = f.coeffs(a.comps[j - 1].code());
            cpp_int c = digits.empty() ? 0 : digits[0];
            g += cpp_int(ipow(p, j - 1)) * boost::multiprecision::pow(c, static_cast<unsigned>(ipow(p, i - j)));
        }
        out.push_back(g.str());
    }
    return out;
}

std::string to_string(const WittF& a) {
    std::string s = "[";
    for (int i = 0; i < a.length(); ++i) {
        if (i > 0) s += ";";
        s += a.comps[i].to_string();
    }
    return s + "]";
}

std::string to_string(const WittK& a) {
    std::string s = "[";
    for (int i = 0; i < a.length(); ++i) {
        if (i > 0) s += ";";
        s += a.comps[i].to_string();
    }
    return s + "]";
}

bool basis_check(const std::vector<WittF>& xs) {
    if (xs.empty()) return false;
    const Field f = xs[0].comps.at(0).field();
    if (static_cast<int>(xs.size()) != f.degree()) return false;
    std::vector<Code> firsts;
    for (const auto& x : xs) firsts.push_back(x.comps.at(0).code());
    return fp_independent(f, firsts);
}

bool basis_check_exhaustive(const std::vector<WittF>& xs) {
    if (xs.empty()) return false;
    const Field f = xs[0].comps.at(0).field();
    const int m = xs[0].length();
    const long long target = ring_size(f, m, 1 << 22);
    if (target < 0) throw Error(ErrorKind::InvalidArgument, "ring too large for enumeration");
    const long long pm = ipow(f.p(), m);
    std::vector<WittF> scalars;
    for (long long t = 0; t < pm; ++t) scalars.push_back(witt_from_int(f, m, t));
    // Products xi * t for each generator, then all sums.
    std::set<long long> reach{encode(witt_zero(f, m))};
    for (const auto& x : xs) {
        std::vector<WittF> multiples;
        for (const auto& s : scalars) multiples.push_back(witt_mul(s, x));
        std::set<long long> next;
        for (long long r : reach) {
            const WittF base = decode(f, m, r);
            for (const auto& mlt : multiples) next.insert(encode(witt_add(base, mlt)));
        }
        reach = std::move(next);
    }
    return static_cast<long long>(reach.size()) == target;
}

WittF witt_trace_map(const WittF& xi, const WittF& delta, int n) {
    const WittF prod = witt_mul(xi, delta);
    WittF acc = prod;
    for (int i = 1; i < n; ++i) acc = witt_add(acc, witt_frobenius(prod, i));
    return acc;
}

CyclicSubextension cyclic_subextension(const WittF& xi, const WittK& alpha, int n) {
    CyclicSubextension out;
    out.rhs = witt_mul(lift(xi), alpha);
    out.full_degree = !xi.comps.at(0).is_zero();
    const int p = xi.comps[0].field().p();
    for (int i = 0; i < n; ++i) {
        if (i > 0) out.generator += " (+) ";
        const long long e = ipow(p, i);
        out.generator += to_string(witt_frobenius(xi, i)) + "*y";
        if (e > 1) out.generator += "^" + std::to_string(e);
    }
    return out;
}

CyclicCount count_cyclic_subextensions(const Field& fq, int m) {
    const long long size = ring_size(fq, m, 1 << 16);
    if (size < 0) throw Error(ErrorKind::InvalidArgument, "ring too large for enumeration");
    const int p = fq.p();
    const int n = fq.degree();
    std::vector<WittF> all;
    for (long long c = 0; c < size; ++c) all.push_back(decode(fq, m, c));
    std::vector<WittF> fp_units;
    for (long long t = 0; t < ipow(p, m); ++t)
        if (t % p != 0) fp_units.push_back(witt_from_int(fq, m, t));
    std::set<std::vector<long long>> kernels;
    std::set<long long> orbits;
    for (const auto& xi : all) {
        if (xi.comps[0].is_zero()) continue;
        std::vector<long long> ker;
        for (const auto& d : all)
            if (witt_trace_map(xi, d, n).is_zero()) ker.push_back(encode(d));
        kernels.insert(std::move(ker));
        long long best = -1;
        for (const auto& u : fp_units) {
            const long long c = encode(witt_mul(u, xi));
            if (best < 0 || c < best) best = c;
        }
        orbits.insert(best);
    }
    CyclicCount out;
    out.by_kernel = static_cast<long long>(kernels.size());
    out.by_orbit = static_cast<long long>(orbits.size());
    const long long q = static_cast<long long>(fq.order());
    out.formula = (ipow(q, m) - ipow(q, m - 1)) / (ipow(p, m) - ipow(p, m - 1));
    return out;
}

namespace {

struct Solved {
    std::vector<WittF> x;
    WittF det;
};

Solved gauss(std::vector<std::vector<WittF>> M, std::vector<WittF> b) {
    const std::size_t n = M.size();
    if (n == 0 || b.size() != n) throw Error(ErrorKind::InvalidArgument, "system shape mismatch");
    const Field f = b[0].comps.at(0).field();
    const int m = b[0].length();
    WittF det = witt_one(f, m);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col].comps[0].is_zero()) ++piv;
        if (piv == n) throw Error(ErrorKind::SingularWittSystem, "no unit pivot in column " + std::to_string(col));
        if (piv != col) {
            std::swap(M[piv], M[col]);
            std::swap(b[piv], b[col]);
            det = witt_neg(det);
        }
        det = witt_mul(det, M[col][col]);
        const WittF inv = witt_inverse(M[col][col]);
        for (auto& e : M[col]) e = witt_mul(e, inv);
        b[col] = witt_mul(b[col], inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            const WittF factor = M[r][col];
            for (std::size_t c = 0; c < n; ++c) M[r][c] = witt_sub(M[r][c], witt_mul(factor, M[col][c]));
            b[r] = witt_sub(b[r], witt_mul(factor, b[col]));
        }
    }
    return {std::move(b), std::move(det)};
}

template <class V>
V relation_impl(const std::vector<WittF>& A, const V& x, V (*lift_fn)(const WittF&)) {
    V acc;
    for (std::size_t i = 0; i < A.size(); ++i) {
        const V term = witt_mul(lift_fn(A[i]), witt_frobenius(x, static_cast<int>(i)));
        acc = i == 0 ? term : witt_add(acc, term);
    }
    return acc;
}

WittF same(const WittF& a) { return a; }

}  // namespace

std::vector<WittF> witt_solve(std::vector<std::vector<WittF>> M, std::vector<WittF> b) {
    return gauss(std::move(M), std::move(b)).x;
}

WittK apply_relation(const std::vector<WittF>& A, const WittK& x) {
    if (A.empty()) throw Error(ErrorKind::InvalidArgument, "empty relation");
    return relation_impl<WittK>(A, x, &lift);
}

WittF apply_relation(const std::vector<WittF>& A, const WittF& x) {
    if (A.empty()) throw Error(ErrorKind::InvalidArgument, "empty relation");
    return relation_impl<WittF>(A, x, &same);
}

std::vector<Code> subfield_basis(const Field& k0, int n) {
    if (n < 1 || k0.degree() % n != 0)
        throw Error(ErrorKind::NotASubfield, "F_(p^" + std::to_string(n) + ") is not inside k0");
    const Code Q = k0.order();
    const Code q = static_cast<Code>(ipow(k0.p(), n));
    const Code z = k0.pow(k0.generator(), static_cast<long long>((Q - 1) / (q - 1)));
    std::vector<Code> basis;
    Code acc = k0.one();
    for (int i = 0; i < n; ++i) {
        basis.push_back(acc);
        acc = k0.mul(acc, z);
    }
    return basis;
}

namespace {

WittReduction reduce_once(const Field& k0, int n, const WittK& alpha) {
    const int m = alpha.length();
    const AdditivePoly f = AdditivePoly::frobenius_minus_identity(k0, n);
    WittReduction out;
    out.alpha = alpha;
    WittK cur = alpha;
    std::map<Place, std::vector<RatFunc>> dcomps;
    std::vector<RatFunc> gcomps(static_cast<std::size_t>(m), RatFunc(k0));
    auto assemble = [&]() {
        WittK acc{gcomps};
        std::vector<std::pair<Place, WittK>> parts;
        for (const auto& [P, comps] : dcomps) {
            WittK d{comps};
            acc = witt_add(acc, d);
            parts.emplace_back(P, std::move(d));
        }
        return std::make_pair(acc, parts);
    };
    WittK X = witt_zero_k(k0, m);
    for (int i = 0; i < m; ++i) {
        const WittK R = witt_sub(cur, X);
        const Reduction red = reduce_rhs(f, R.comps[i]);
        const RatFunc t = red.log.total(k0);
        if (!t.is_zero()) {
            const WittK theta = verschiebung(teichmuller(t, m), i);
            cur = witt_sub(cur, asw_operator(theta, n));
            out.shifts.push_back(theta);
        }
        const PartialFractions pf = partial_fractions(red.u);
        for (const auto& term : pf.terms) {
            auto& v = dcomps[Place{false, term.P}];
            if (v.empty()) v.assign(static_cast<std::size_t>(m), RatFunc(k0));
            v[i] = term.value();
        }
        gcomps[i] = RatFunc(pf.poly_part);
        X = assemble().first;
    }
    if (!witt_sub(cur, X).is_zero()) throw std::logic_error("Witt reduction left a residue");
    auto [beta, parts] = assemble();
    out.beta = std::move(beta);
    out.deltas = std::move(parts);
    out.gamma = WittK{gcomps};
    out.theta = witt_zero_k(k0, m);
    for (const auto& s : out.shifts) out.theta = witt_add(out.theta, s);
    return out;
}

}  // namespace

WittReduction witt_reduce(const WittExtensionSpec& spec, bool allow_twist) {
    const int m = spec.alpha.length();
    if (m > 3) throw Error(ErrorKind::LengthCapExceeded, "Witt reduction supports m <= 3");
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "empty Witt vector");
    for (const auto& c : spec.alpha.comps)
        if (!(c.field() == spec.k0)) throw Error(ErrorKind::RingMismatch, "component outside k0(T)");
    if (spec.n < 1 || spec.k0.degree() % spec.n != 0)
        throw Error(ErrorKind::NotASubfield, "F_q is not inside k0");
    if (!allow_twist) return reduce_once(spec.k0, spec.n, spec.alpha);
    std::optional<WittReduction> best;
    int best_score = 0;
    for (int j = 0; j < spec.n; ++j) {
        WittReduction r = reduce_once(spec.k0, spec.n, witt_frobenius(spec.alpha, j));
        r.twist = j;
        const int score = ramification_score(r.beta.comps[0], spec.k0.p());
        if (!best || score < best_score) {
            best = std::move(r);
            best_score = score;
        }
    }
    return *best;
}

bool witt_full_split_at_infinity(const WittReduction& r) { return r.gamma.is_zero(); }

WittRelation witt_generator_relation(const WittExtensionSpec& alpha, const WittK& beta, const std::vector<WittF>& xi) {
    const Field& k0 = alpha.k0;
    const int n = alpha.n;
    const int m = alpha.alpha.length();
    if (beta.length() != m) throw Error(ErrorKind::LengthMismatch, "alpha and beta lengths differ");
    if (static_cast<int>(xi.size()) != n) throw Error(ErrorKind::InvalidArgument, "need n target vectors");
    for (const auto& x : xi) {
        if (x.length() != m) throw Error(ErrorKind::LengthMismatch, "target length differs from m");
        if (!(x.comps[0].field() == k0)) throw Error(ErrorKind::RingMismatch, "targets must live over k0");
        for (const auto& c : x.comps)
            if (k0.frob(c.code(), n) != c.code()) throw Error(ErrorKind::RingMismatch, "target outside W_m(F_q)");
    }
    std::vector<Code> firsts;
    for (const auto& x : xi) firsts.push_back(x.comps[0].code());
    if (!fp_independent(k0, firsts)) throw Error(ErrorKind::InvalidArgument, "targets do not form a basis");

    const std::vector<Code> mu = subfield_basis(k0, n);
    std::vector<std::vector<WittF>> M(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i].push_back(teichmuller(FFElem(k0, k0.frob(mu[i], j)), m));
    Solved sol = gauss(M, xi);
    WittRelation rel;
    rel.A = std::move(sol.x);
    rel.moore_det = std::move(sol.det);
    for (int i = 0; i < n; ++i)
        if (!(apply_relation(rel.A, teichmuller(FFElem(k0, mu[i]), m)) == xi[i]))
            throw Error(ErrorKind::IdentityFailure, "R(mu_" + std::to_string(i + 1) + ") differs from its target");

    const long long qm = static_cast<long long>(ipow(k0.p(), n * m));
    if (qm <= 4096) {
        const long long q = ipow(k0.p(), n);
        std::vector<Code> fq;
        for (Code c = 0; c < k0.order(); ++c)
            if (k0.frob(c, n) == c) fq.push_back(c);
        for (long long c = 1; c < qm; ++c) {
            WittF x = witt_zero(k0, m);
            long long r = c;
            for (int i = 0; i < m; ++i, r /= q) x.comps[i] = FFElem(k0, fq[static_cast<std::size_t>(r % q)]);
            if (apply_relation(rel.A, x).is_zero()) throw Error(ErrorKind::IdentityFailure, "R has a nontrivial kernel");
        }
        rel.kernel_checked = true;
    }

    const WittK delta = witt_sub(beta, apply_relation(rel.A, alpha.alpha));
    const WittReduction red = reduce_once(k0, n, delta);
    if (!red.beta.is_zero())
        throw Error(ErrorKind::IdentityFailure, "beta - R(alpha) is not of the form D^q - D");
    rel.D = red.theta;
    if (!(witt_add(apply_relation(rel.A, alpha.alpha), asw_operator(rel.D, n)) == beta))
        throw Error(ErrorKind::IdentityFailure, "beta != R(alpha) + D^q - D");
    return rel;
}

InfinitySplitting witt_infinity_splitting(const WittK& gamma) {
    const int m = gamma.length();
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "empty Witt vector");
    const Field k0 = gamma.comps[0].field();
    const int p = k0.p();
    for (const auto& c : gamma.comps)
        if (!c.is_polynomial()) throw Error(ErrorKind::NotReduced, "polynomial part has a finite pole");
    InfinitySplitting out;
    int s = 0;
    while (s < m && gamma.comps[s].is_zero()) ++s;
    int t = s;
    while (t < m && gamma.comps[t].is_constant()) ++t;
    for (int j = s; j < m; ++j) {
        const int d = gamma.comps[j].num().degree();
        if (d > 0 && d % p == 0) throw Error(ErrorKind::NotReduced, "component " + std::to_string(j + 1) + " has degree divisible by p");
    }
    if (s < m && gamma.comps[s].is_constant() && k0.absolute_trace(gamma.comps[s].constant_value()) == 0)
        throw Error(ErrorKind::NotReduced, "leading constant lies in wp(k0)");
    out.s = s;
    out.t = t;
    out.e = ipow(p, m - t);
    out.f = ipow(p, t - s);
    out.g = ipow(p, s);
    const LocalBehaviour first = degree_p_behaviour(gamma.comps[0], Place::at_infinity());
    const LocalBehaviour expect = s >= 1 ? LocalBehaviour::Split : t >= 1 ? LocalBehaviour::Inert : LocalBehaviour::Ramified;
    out.consistent = first == expect;
    return out;
}

}  // namespace aspw
