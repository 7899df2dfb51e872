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

#include "aspw/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "aspw/witt.hpp"

namespace aspw {

namespace {

template <class Fn>
void parallel_chunks(Code n, int jobs, Fn fn) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<Code>(n, 64))));
    if (jobs == 1) {
        fn(Code{0}, n, 0);
        return;
    }
    std::vector<std::thread> pool;
    const Code step = (n + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        const Code lo = std::min(n, step * j);
        const Code hi = std::min(n, lo + step);
        pool.emplace_back([=, &fn] { fn(lo, hi, j); });
    }
    for (auto& t : pool) t.join();
}

void require_small(const Field& K) {
    if (K.order() > kOracleFieldCap)
        throw Error(ErrorKind::FieldTooLarge, "oracle field has " + std::to_string(K.order()) + " elements, cap 729");
}

Code horner(const Poly& g, const SubfieldEmbedding& emb, Code x) {
    const Field& K = emb.target();
    Code acc = 0;
    for (int i = g.degree(); i >= 0; --i) acc = K.add(K.mul(acc, x), emb.map(g.coeff(i)));
    return acc;
}

std::vector<Code> fq_inside(const Field& K, long long q) {
    std::vector<Code> out;
    for (Code x = 0; x < K.order(); ++x)
        if (K.pow(x, q) == x) out.push_back(x);
    return out;
}

nlohmann::json format_set(const Field& K, const std::vector<Code>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Code c : v) out.push_back(K.format(c));
    return out;
}

}  // namespace

nlohmann::json OracleReport::to_json() const {
    nlohmann::json j;
    j["claim"] = claim;
    j["parameters"] = parameters;
    j["mode"] = mode;
    if (seed) j["seed"] = *seed;
    j["verdict"] = verdict;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

std::vector<Code> image_set(const Field& K, const std::function<Code(Code)>& map, int jobs) {
    require_small(K);
    const Code n = K.order();
    std::vector<std::vector<char>> marks(static_cast<std::size_t>(std::max(1, jobs)), std::vector<char>(n, 0));
    parallel_chunks(n, jobs, [&](Code lo, Code hi, int t) {
        for (Code x = lo; x < hi; ++x) marks[static_cast<std::size_t>(t)][map(x)] = 1;
    });
    std::vector<Code> out;
    for (Code y = 0; y < n; ++y)
        if (std::any_of(marks.begin(), marks.end(), [y](const auto& mk) { return mk[y] != 0; })) out.push_back(y);
    return out;
}

Code naive_additive(const Field& K, const std::vector<Code>& coeffs, Code x) {
    Code acc = 0;
    Code power = x;  // x^(p^i)
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) {
            Code next = K.one();
            for (int k = 0; k < K.p(); ++k) next = K.mul(next, power);
            power = next;
        }
        acc = K.add(acc, K.mul(coeffs[i], power));
    }
    return acc;
}

Code naive_wp_a(const Field& K, Code a, Code x) {
    Code xp = K.one();
    Code ap = K.one();
    for (int k = 0; k < K.p(); ++k) xp = K.mul(xp, x);
    for (int k = 0; k + 1 < K.p(); ++k) ap = K.mul(ap, a);
    return K.sub(xp, K.mul(ap, x));
}

Lemma62Result verify_lemma_62(long long q, int m, int jobs) {
    int p = 0;
    int n = 0;
    for (int c = 2; c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            break;
        }
    }
    long long r = q;
    while (p > 0 && r % p == 0) {
        r /= p;
        ++n;
    }
    if (p == 0 || r != 1) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
    long long size = 1;
    for (int i = 0; i < n * m; ++i) size *= p;
    if (size > static_cast<long long>(kOracleFieldCap))
        throw Error(ErrorKind::FieldTooLarge, "q^m exceeds 729");
    const Field K = Field::make(p, n * m);
    const std::vector<Code> fq = fq_inside(K, q);
    const auto wp = image_set(K, [&](Code x) { return K.sub(K.pow(x, p), x); }, jobs);
    const auto img = image_set(K, [&](Code x) { return K.sub(K.pow(x, q), x); }, jobs);
    const std::set<Code> wp_set(wp.begin(), wp.end());
    const std::set<Code> img_set(img.begin(), img.end());
    Lemma62Result out;
    for (Code S = 0; S < K.order(); ++S) {
        bool lhs = true;
        for (Code mu : fq) lhs = lhs && wp_set.count(K.mul(mu, S)) > 0;
        const bool rhs = img_set.count(S) > 0;
        if (lhs != rhs) {
            out.holds = false;
            out.counterexample = S;
            break;
        }
    }
    out.report.claim = "lemma62";
    out.report.parameters = {{"q", q}, {"m", m}, {"field_order", K.order()}};
    out.report.verdict = out.holds ? "pass" : "fail";
    if (out.counterexample) out.report.witness = K.format(*out.counterexample);
    out.report.parameters["image_size"] = img.size();
    out.report.parameters["kernel_size"] = fq.size();
    return out;
}

EqStarResult verify_eq_star(const AdditivePoly& f, int jobs) {
    const Field& K = f.field();
    require_small(K);
    const int p = K.p();
    const int n = f.p_degree();
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "f must have p-degree at least 1");
    std::vector<Code> roots;
    for (Code x = 0; x < K.order(); ++x)
        if (naive_additive(K, f.coeffs(), x) == 0) roots.push_back(x);
    long long expected = 1;
    for (int i = 0; i < n; ++i) expected *= p;
    if (static_cast<long long>(roots.size()) != expected)
        throw Error(ErrorKind::RootsNotInBaseField, "f has " + std::to_string(roots.size()) + " roots in k0");

    // Greedy basis in code order.
    std::vector<Code> basis;
    std::set<Code> span{0};
    for (Code x : roots) {
        if (span.count(x)) continue;
        basis.push_back(x);
        std::set<Code> next;
        for (Code s : span)
            for (int c = 0; c < p; ++c) next.insert(K.add(s, K.mul(K.from_int(c), x)));
        span = std::move(next);
    }

    const SubfieldEmbedding& id = extension_of_degree(K, 1);
    EqStarResult out;
    std::vector<char> in_all(K.order(), 1);
    for (int i = 0; i < n; ++i) {
        std::set<Code> H{0};
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            std::set<Code> next;
            for (Code s : H)
                for (int c = 0; c < p; ++c) next.insert(K.add(s, K.mul(K.from_int(c), basis[j])));
            H = std::move(next);
        }
        Poly fi = Poly::constant(K, K.one());
        for (Code v : H) fi = fi * Poly(K, {K.neg(v), K.one()});
        const Code a = horner(fi, id, basis[i]);
        out.a.push_back(a);
        const auto img = image_set(K, [&](Code x) { return naive_wp_a(K, a, x); }, jobs);
        std::vector<char> mark(K.order(), 0);
        for (Code y : img) mark[y] = 1;
        for (Code y = 0; y < K.order(); ++y) in_all[y] = static_cast<char>(in_all[y] && mark[y]);
    }
    const auto imf = image_set(K, [&](Code x) { return naive_additive(K, f.coeffs(), x); }, jobs);
    std::vector<char> in_f(K.order(), 0);
    for (Code y : imf) in_f[y] = 1;
    out.image_f = imf.size();
    for (Code y = 0; y < K.order(); ++y) {
        if (in_all[y]) ++out.intersection;
        if (in_f[y] && !in_all[y]) out.containment = false;
        if (in_all[y] && !in_f[y] && !out.witness) out.witness = y;
    }
    out.equal = out.containment && !out.witness;
    out.report.claim = "eqstar";
    out.report.parameters = {{"f", f.to_string()},
                             {"field", "p=" + std::to_string(p) + ",s=" + std::to_string(K.degree())},
                             {"a", format_set(K, out.a)},
                             {"image_f", out.image_f},
                             {"intersection", out.intersection}};
    out.report.verdict = out.equal ? "pass" : out.containment ? "counterexample" : "fail";
    if (out.witness) out.report.witness = K.format(*out.witness);
    return out;
}

namespace {

// Roots of f(X) = u(nu) over the degree-`deg` extension of k0, nu a root of P there.
long long count_roots(const ExtensionSpec& spec, const Place& P, int deg) {
    const Field& k0 = spec.k0();
    const SubfieldEmbedding& emb = extension_of_degree(k0, deg);
    const Field& E = emb.target();
    const RatFunc& u = spec.u();
    Code value = 0;
    if (P.infinite) {
        const int dn = u.num().degree();
        const int dd = u.den().degree();
        if (dn > dd) throw Error(ErrorKind::PoleAtPlace, "u has a pole at infinity");
        value = dn == dd ? emb.map(k0.div(u.num().lead(), u.den().lead())) : 0;
    } else {
        std::optional<Code> nu;
        for (Code x = 0; x < E.order() && !nu; ++x)
            if (horner(P.P, emb, x) == 0) nu = x;
        if (!nu) throw std::logic_error("place has no root in its residue field");
        const Code den = horner(u.den(), emb, *nu);
        if (den == 0) throw Error(ErrorKind::PoleAtPlace, "u has a pole at " + P.to_string());
        value = E.div(horner(u.num(), emb, *nu), den);
    }
    std::vector<Code> coeffs;
    for (Code a : spec.f().coeffs()) coeffs.push_back(emb.map(a));
    long long count = 0;
    for (Code x = 0; x < E.order(); ++x)
        if (naive_additive(E, coeffs, x) == value) ++count;
    return count;
}

Code power_cap(Code base, int e, Code cap) {
    Code r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / base + 1) return cap + 1;
        r *= base;
    }
    return r;
}

}  // namespace

SplittingOracle splitting_oracle(const ExtensionSpec& spec, const Place& P, Code ext_cap) {
    const Field& k0 = spec.k0();
    const int p = k0.p();
    const int d = P.infinite ? 1 : P.P.degree();
    if (power_cap(k0.order(), d, kOracleFieldCap) > kOracleFieldCap)
        throw Error(ErrorKind::FieldTooLarge, "residue field exceeds 729 elements");
    SplittingOracle out;
    out.roots_expected = 1;
    for (int i = 0; i < spec.n(); ++i) out.roots_expected *= p;
    out.count = count_roots(spec, P, d);
    out.two_valued = out.count == 0 || out.count == out.roots_expected;
    if (out.count > 0) {
        out.inertia_degree = 1;
    } else if (power_cap(k0.order(), d * p, ext_cap) <= ext_cap) {
        const long long c2 = count_roots(spec, P, d * p);
        if (c2 == out.roots_expected) out.inertia_degree = p;
    }
    out.report.claim = "splitting";
    out.report.parameters = {{"f", spec.f().to_string()}, {"u", spec.u().to_string()}, {"place", P.to_string()}};
    out.report.verdict = out.two_valued ? "pass" : "fail";
    out.report.witness = {{"count", out.count}, {"inertia_degree", out.inertia_degree}};
    return out;
}

namespace {

RatFunc random_ratfunc(const Field& k0, std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<Code> coeff(0, k0.order() - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Code> num(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : num) c = coeff(rng);
    Poly den = Poly::constant(k0, k0.one());
    if (rng() % 2 == 0) den = Poly(k0, {coeff(rng), k0.one()});
    return RatFunc(Poly(k0, num), den);
}

template <class C>
struct AxiomCheck {
    AxiomResult& res;
    int n;  // Frobenius exponent for the q-operator

    void expect(bool ok, const char* name) {
        ++res.checks;
        if (ok) return;
        ++res.failures;
        if (std::find(res.failed.begin(), res.failed.end(), name) == res.failed.end()) res.failed.emplace_back(name);
    }

    void run(const WittVector<C>& x, const WittVector<C>& y, const WittVector<C>& z, const WittVector<C>& zero,
             const WittVector<C>& one) {
        const auto xy = witt_add(x, y);
        expect(witt_add(xy, z) == witt_add(x, witt_add(y, z)), "add_associative");
        expect(xy == witt_add(y, x), "add_commutative");
        expect(witt_add(x, zero) == x, "add_identity");
        expect(witt_add(x, witt_neg(x)).is_zero() && witt_sub(x, x).is_zero(), "add_inverse");
        expect(witt_add(witt_sub(x, y), y) == x, "sub_consistent");
        const auto mxy = witt_mul(x, y);
        expect(witt_mul(mxy, z) == witt_mul(x, witt_mul(y, z)), "mul_associative");
        expect(mxy == witt_mul(y, x), "mul_commutative");
        expect(witt_mul(x, one) == x, "mul_identity");
        expect(witt_mul(x, witt_add(y, z)) == witt_add(mxy, witt_mul(x, z)), "distributive");
        expect(witt_frobenius(xy) == witt_add(witt_frobenius(x), witt_frobenius(y)), "frobenius_add");
        expect(witt_frobenius(witt_sub(x, y)) == witt_sub(witt_frobenius(x), witt_frobenius(y)), "frobenius_sub");
        expect(witt_frobenius(mxy) == witt_mul(witt_frobenius(x), witt_frobenius(y)), "frobenius_mul");
        expect(asw_operator(xy) == witt_add(asw_operator(x), asw_operator(y)), "wp_additive");
        if (n > 1) expect(asw_operator(xy, n) == witt_add(asw_operator(x, n), asw_operator(y, n)), "wpq_additive");
    }
};

}  // namespace

AxiomResult witt_axiom_sampler(const AxiomOptions& opt) {
    if (opt.m > 3) throw Error(ErrorKind::LengthCapExceeded, "axiom sampler supports m <= 3");
    const Field k0 = Field::make(opt.p, opt.s);
    AxiomResult res;
    std::mt19937_64 rng(opt.seed);
    res.report.claim = "witt_axioms";
    res.report.parameters = {{"p", opt.p}, {"s", opt.s}, {"m", opt.m},
                             {"ring", opt.ring == AxiomRing::FiniteField ? "F_q" : "F_q(T)"}};
    if (opt.ring == AxiomRing::FiniteField) {
        AxiomCheck<FFElem> chk{res, opt.s};
        const WittF zero = witt_zero(k0, opt.m);
        const WittF one = witt_one(k0, opt.m);
        long long size = 1;
        for (int i = 0; i < opt.m; ++i) size *= static_cast<long long>(k0.order());
        auto decode = [&](long long c) {
            WittF v = zero;
            for (int i = 0; i < opt.m; ++i, c /= static_cast<long long>(k0.order()))
                v.comps[i] = FFElem(k0, static_cast<Code>(c % static_cast<long long>(k0.order())));
            return v;
        };
        if (opt.exhaustive && size <= 27) {
            res.report.mode = "exhaustive";
            for (long long a = 0; a < size; ++a)
                for (long long b = 0; b < size; ++b)
                    for (long long c = 0; c < size; ++c) chk.run(decode(a), decode(b), decode(c), zero, one);
        } else {
            res.report.mode = "sampled";
            res.report.seed = opt.seed;
            res.report.parameters["samples"] = opt.samples;
            std::uniform_int_distribution<long long> pick(0, size - 1);
            for (int i = 0; i < opt.samples; ++i) chk.run(decode(pick(rng)), decode(pick(rng)), decode(pick(rng)), zero, one);
        }
    } else {
        AxiomCheck<RatFunc> chk{res, opt.s};
        const WittK zero = witt_zero_k(k0, opt.m);
        const WittK one = lift(witt_one(k0, opt.m));
        auto sample = [&] {
            WittK v = zero;
            for (auto& c : v.comps) c = random_ratfunc(k0, rng, opt.max_degree);
            return v;
        };
        res.report.mode = "sampled";
        res.report.seed = opt.seed;
        res.report.parameters["samples"] = opt.samples;
        res.report.parameters["max_degree"] = opt.max_degree;
        for (int i = 0; i < opt.samples; ++i) {
            const WittK x = sample();
            const WittK y = sample();
            const WittK z = sample();
            chk.run(x, y, z, zero, one);
        }
    }
    res.report.parameters["checks"] = res.checks;
    res.report.verdict = res.failures == 0 ? "pass" : "fail";
    if (!res.failed.empty()) res.report.witness = res.failed;
    return res;
}

}  // namespace aspw
