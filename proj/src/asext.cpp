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

#include "aspw/asext.hpp"

#include <algorithm>
#include <set>

namespace aspw {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void require_irreducible(const ExtensionSpec& spec) {
    if (!spec.irreducible())
        throw Error(ErrorKind::NotIrreducible, "f(X) - u is reducible over k for u = " + spec.u().to_string());
}

// C with C^(p^n) = Q in k0[T]/(P).
Poly root_mod(const Poly& Q, const Poly& P, int n) {
    const Field& k0 = P.field();
    const int N = k0.degree() * P.degree();
    const int k = ((-n) % N + N) % N;
    Poly c = Q % P;
    for (int i = 0; i < k; ++i) c = powmod(c, static_cast<unsigned long long>(k0.p()), P);
    return c;
}

std::optional<Code> preimage(const AdditivePoly& f, Code c) {
    const Field& k0 = f.field();
    for (Code x = 0; x < k0.order(); ++x)
        if (f.eval(x) == c) return x;
    return std::nullopt;
}

bool hyperplane_test_irreducible(const RatFunc& u, const std::vector<Hyperplane>& hs) {
    const Field& k0 = u.field();
    for (const auto& h : hs) {
        const RatFunc rhs = u.scale(k0.inv(k0.frob(h.fH_at_eps, 1)));
        if (wp_membership(rhs).member) return false;
    }
    return true;
}

}  // namespace

ExtensionSpec ExtensionSpec::make(AdditivePoly f, RatFunc u) {
    require_same_field(f.field(), u.field());
    ExtensionSpec s;
    s.group_ = std::make_shared<const RootGroup>(root_group(f));
    s.hyperplanes_ = std::make_shared<const std::vector<Hyperplane>>(enumerate_hyperplanes(*s.group_));
    s.f_ = std::move(f);
    s.u_ = std::move(u);
    s.irreducible_ = hyperplane_test_irreducible(s.u_, *s.hyperplanes_);
    return s;
}

ExtensionSpec ExtensionSpec::with_u(RatFunc u) const {
    require_same_field(f_.field(), u.field());
    ExtensionSpec s = *this;
    s.u_ = std::move(u);
    s.irreducible_ = hyperplane_test_irreducible(s.u_, *s.hyperplanes_);
    return s;
}

RatFunc SubstitutionLog::total(const Field& k0) const {
    RatFunc acc(k0);
    for (const auto& d : shifts) acc = acc + d;
    return acc;
}

RatFunc SubstitutionLog::replay(const AdditivePoly& f, const RatFunc& u) const {
    return u - f.eval(total(f.field()));
}

Reduction reduce_rhs(const AdditivePoly& f, const RatFunc& u, const std::optional<Place>& only) {
    require_same_field(f.field(), u.field());
    const Field& k0 = f.field();
    const int n = f.p_degree();
    const long long q = f.degree();
    Reduction r{{}, u};
    auto apply = [&](RatFunc delta) {
        r.u = r.u - f.eval(delta);
        r.log.shifts.push_back(std::move(delta));
    };
    while (true) {
        const PartialFractions pf = partial_fractions(r.u);
        bool changed = false;
        for (const auto& t : pf.terms) {
            if (only && (only->infinite || !(only->P == t.P))) continue;
            const int beta = t.order();
            if (beta == 0 || beta % q != 0) continue;
            const Poly C = root_mod(t.parts[beta - 1], t.P, n);
            apply(RatFunc(C, t.P.pow(beta / q)));
            changed = true;
            break;
        }
        if (changed) continue;
        const Poly& R = pf.poly_part;
        if (!only || only->infinite) {
            const int d = R.degree();
            if (d > 0 && d % q == 0) {
                apply(RatFunc(Poly::monomial(k0, k0.frob(R.lead(), -n), static_cast<int>(d / q))));
                continue;
            }
        }
        if (!only && R.degree() == 0) {
            if (auto x = preimage(f, R.coeff(0)); x && *x != 0) apply(RatFunc::constant(k0, *x));
        }
        break;
    }
    return r;
}

WpMembership wp_membership(const RatFunc& w) {
    const AdditivePoly f = AdditivePoly::frobenius_minus_identity(w.field(), 1);
    const Reduction r = reduce_rhs(f, w);
    if (!r.u.is_zero()) return {false, std::nullopt};
    return {true, r.log.total(w.field())};
}

bool check_irreducible(const ExtensionSpec& spec) { return hyperplane_test_irreducible(spec.u(), spec.hyperplanes()); }

Reduction normalize_at(const ExtensionSpec& spec, const Place& P) {
    require_irreducible(spec);
    return reduce_rhs(spec.f(), spec.u(), P);
}

GlobalReduction reduce_global(const ExtensionSpec& spec) {
    require_irreducible(spec);
    Reduction r = reduce_rhs(spec.f(), spec.u());
    return {std::move(r.log), spec.with_u(std::move(r.u))};
}

PoleShape pole_shape(long long beta, int p) {
    PoleShape s{beta, 0};
    while (s.lambda != 0 && s.lambda % p == 0) {
        s.lambda /= p;
        ++s.m;
    }
    return s;
}

int ramification_score(const RatFunc& u, int p) {
    const PartialFractions pf = partial_fractions(u);
    int score = 0;
    for (const auto& t : pf.terms) score += pole_shape(t.order(), p).m;
    if (pf.poly_part.degree() > 0) score += pole_shape(pf.poly_part.degree(), p).m;
    return score;
}

TwistedForm twist_normalize(const ExtensionSpec& spec) {
    require_irreducible(spec);
    const int p = spec.k0().p();
    std::optional<TwistedForm> best;
    for (int j = 0; j < std::max(1, spec.n()); ++j) {
        TwistedForm t;
        t.j = j;
        t.f = spec.f().twist(j);
        t.u = spec.u().pth_power(j);
        t.reduction = reduce_rhs(t.f, t.u);
        t.score = ramification_score(t.reduction.u, p);
        if (!best || t.score < best->score) best = std::move(t);
    }
    return *best;
}

RamificationReport ramification_report(const ExtensionSpec& spec) {
    const GlobalReduction g = reduce_global(spec);
    const int p = spec.k0().p();
    const int n = spec.n();
    RamificationReport rep;
    rep.reduced_u = g.reduced.u();
    const PartialFractions pf = partial_fractions(rep.reduced_u);
    auto entry = [&](Place place, long long beta) {
        const PoleShape s = pole_shape(beta, p);
        return RamifiedEntry{std::move(place), s.lambda, s.m, ipow(p, n - s.m), s.m == 0};
    };
    for (const auto& t : pf.terms) rep.finite.push_back(entry(Place{false, t.P}, t.order()));
    if (pf.poly_part.degree() > 0) rep.infinity = entry(Place::at_infinity(), pf.poly_part.degree());
    return rep;
}

std::vector<SubextensionDesc> subextensions(const ExtensionSpec& spec, bool verify) {
    require_irreducible(spec);
    const Field& k0 = spec.k0();
    std::optional<QuotientAlgebra> qa;
    if (verify) qa.emplace(spec);
    std::vector<SubextensionDesc> out;
    const auto& hs = spec.hyperplanes();
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const Hyperplane& h = hs[i];
        SubextensionDesc d;
        d.index = i;
        d.a = h.fH_at_eps;
        d.rhs = spec.u().scale(k0.inv(k0.frob(d.a, 1)));
        d.generator = "(" + h.fH.to_string("y") + ")/(" + k0.format(d.a) + ")";
        if (verify) {
            const QAElem z = h.fH.eval(qa->y()).scale(k0.inv(d.a));
            const QAElem one = qa->constant(RatFunc::constant(k0, k0.one()));
            d.verified = qa_verify(Satisfies{z, d.rhs}) && qa_verify(FixedBy{z, h.basis}) && z.shift(h.eps) == z + one;
        }
        out.push_back(std::move(d));
    }
    return out;
}

std::string_view to_string(LocalBehaviour b) {
    switch (b) {
        case LocalBehaviour::Split: return "split";
        case LocalBehaviour::Inert: return "inert";
        case LocalBehaviour::Ramified: return "ramified";
    }
    return "?";
}

namespace {

// Value of u at P inside the residue field, which is the target of the
// returned embedding of k0.
std::pair<Code, const SubfieldEmbedding*> local_value(const RatFunc& u, const Place& P) {
    const SubfieldEmbedding& emb = extension_of_degree(u.field(), P.degree());
    if (P.infinite) return {emb.map(residue_eval(u, P).code()), &emb};
    return {residue_eval(u, P, emb).code(), &emb};
}

}  // namespace

LocalBehaviour degree_p_behaviour(const RatFunc& w, const Place& P) {
    const Reduction r = reduce_rhs(AdditivePoly::frobenius_minus_identity(w.field(), 1), w);
    if (valuation(r.u, P) < 0) return LocalBehaviour::Ramified;
    const auto [v, emb] = local_value(r.u, P);
    return emb->target().absolute_trace(v) == 0 ? LocalBehaviour::Split : LocalBehaviour::Inert;
}

SplitVerdict place_splitting(const ExtensionSpec& spec, const Place& P, bool require_unramified) {
    const GlobalReduction g = reduce_global(spec);
    const RatFunc& u = g.reduced.u();
    const int p = spec.k0().p();
    const int v = valuation(u, P);
    if (v < 0) {
        if (require_unramified)
            throw Error(ErrorKind::RamifiedPlaceForSplitTest, "place " + P.to_string() + " ramifies");
        const PoleShape s = pole_shape(-static_cast<long long>(v), p);
        SplitVerdict out;
        out.kind = SplitKind::Ramified;
        out.ramified = RamifiedEntry{P, s.lambda, s.m, ipow(p, spec.n() - s.m), s.m == 0};
        return out;
    }
    const auto [value, emb] = local_value(u, P);
    const Field& t = emb->target();
    for (const auto& h : spec.hyperplanes()) {
        const Code x = t.div(value, t.frob(emb->map(h.fH_at_eps), 1));
        if (t.absolute_trace(x) != 0) return {SplitKind::Inert, p, std::nullopt};
    }
    return {SplitKind::FullySplit, 1, std::nullopt};
}

int fp_rank(std::vector<std::vector<int>> rows, int p) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        int inv = 1;
        while ((rows[rank][c] * inv) % p != 1) ++inv;
        for (auto& x : rows[rank]) x = (x * inv) % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][c] % p == 0) continue;
            const int fct = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - fct * rows[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

DecompositionType decomposition_type(const ExtensionSpec& spec, const Place& P) {
    require_irreducible(spec);
    const Field& k0 = spec.k0();
    const int p = k0.p();
    const int n = spec.n();
    const auto& hs = spec.hyperplanes();
    DecompositionType dt;
    std::vector<std::vector<int>> split_rows, unram_rows;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const RatFunc rhs = spec.u().scale(k0.inv(k0.frob(hs[i].fH_at_eps, 1)));
        const LocalBehaviour b = degree_p_behaviour(rhs, P);
        dt.behaviour.push_back(b);
        if (b == LocalBehaviour::Split) {
            dt.split.push_back(i);
            split_rows.push_back(hs[i].functional);
        }
        if (b != LocalBehaviour::Ramified) {
            dt.unramified.push_back(i);
            unram_rows.push_back(hs[i].functional);
        }
    }
    dt.dim_decomposition = n - fp_rank(split_rows, p);
    dt.dim_inertia = n - fp_rank(unram_rows, p);
    dt.e = ipow(p, dt.dim_inertia);
    dt.f = ipow(p, dt.dim_decomposition - dt.dim_inertia);
    dt.g = ipow(p, n - dt.dim_decomposition);
    auto closed = [&](std::size_t count, int dim) {
        return static_cast<long long>(count) == (ipow(p, n - dim) - 1) / (p - 1);
    };
    dt.consistent = closed(dt.split.size(), dt.dim_decomposition) && closed(dt.unramified.size(), dt.dim_inertia) &&
                    dt.dim_inertia <= dt.dim_decomposition;
    return dt;
}

Combination combine_generators(const std::vector<RatFunc>& gammas, const std::vector<Code>& mu) {
    if (gammas.empty() || gammas.size() != mu.size())
        throw Error(ErrorKind::InvalidArgument, "need one mu per generator");
    const Field& k0 = gammas[0].field();
    const int p = k0.p();
    const int r = static_cast<int>(gammas.size());
    const AdditivePoly f = subspace_poly(k0, mu);
    // Every nonzero F_p-combination, normalized to a leading 1, must avoid wp(k).
    std::vector<int> c(static_cast<std::size_t>(r), 0);
    for (long long code = 1; code < ipow(p, r); ++code) {
        long long x = code;
        for (int i = r - 1; i >= 0; --i) {
            c[i] = static_cast<int>(x % p);
            x /= p;
        }
        if (*std::find_if(c.begin(), c.end(), [](int v) { return v != 0; }) != 1) continue;
        RatFunc w(k0);
        for (int i = 0; i < r; ++i) w = w + gammas[i].scale(k0.from_int(c[i]));
        if (wp_membership(w).member) throw Error(ErrorKind::DependentSubextensions, "generators are dependent modulo wp(k)");
    }
    RatFunc u(k0);
    const auto& a = f.coeffs();
    for (int i = 0; i < r; ++i) {
        RatFunc l(k0);  // l_j(gamma_i)
        for (std::size_t j = 1; j < a.size(); ++j) {
            l = l + gammas[i].pth_power(static_cast<int>(j) - 1);
            if (a[j] == 0) continue;
            u = u + l.scale(k0.mul(a[j], k0.frob(mu[i], static_cast<long long>(j))));
        }
    }
    Combination out{ExtensionSpec::make(f, u), mu, "y ="};
    for (int i = 0; i < r; ++i) {
        out.generator += (i ? " + " : " ");
        if (mu[i] != k0.one()) out.generator += "(" + k0.format(mu[i]) + ")*";
        out.generator += "z" + std::to_string(i + 1);
    }
    return out;
}

struct QAData {
    ExtensionSpec spec;
    long long dim = 0;
};

QAElem::QAElem(std::shared_ptr<const QAData> d, std::vector<RatFunc> c) : d_(std::move(d)), c_(std::move(c)) {
    reduce();
}

void QAElem::reduce() {
    const auto D = static_cast<std::size_t>(d_->dim);
    const AdditivePoly& f = d_->spec.f();
    const Field& k0 = f.field();
    const auto& a = f.coeffs();
    for (std::size_t e = c_.size(); e-- > D;) {
        if (c_[e].is_zero()) continue;
        const RatFunc ce = c_[e];
        c_[e - D] = c_[e - D] + ce * d_->spec.u();
        std::size_t pi = 1;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) {
            if (a[i] != 0) c_[e - D + pi] = c_[e - D + pi] - ce.scale(a[i]);
            pi *= static_cast<std::size_t>(k0.p());
        }
    }
    if (c_.size() > D) c_.resize(D, RatFunc(k0));
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int QAElem::degree() const { return static_cast<int>(c_.size()) - 1; }

RatFunc QAElem::constant_term() const { return c_.empty() ? RatFunc(d_->spec.k0()) : c_[0]; }

QAElem QAElem::operator+(const QAElem& o) const {
    std::vector<RatFunc> r(std::max(c_.size(), o.c_.size()), RatFunc(d_->spec.k0()));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return {d_, std::move(r)};
}

QAElem QAElem::operator-() const {
    std::vector<RatFunc> r;
    for (const auto& x : c_) r.push_back(-x);
    return {d_, std::move(r)};
}

QAElem QAElem::operator-(const QAElem& o) const { return *this + (-o); }

QAElem QAElem::operator*(const QAElem& o) const {
    if (c_.empty() || o.c_.empty()) return {d_, {}};
    std::vector<RatFunc> r(c_.size() + o.c_.size() - 1, RatFunc(d_->spec.k0()));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return {d_, std::move(r)};
}

QAElem QAElem::scale(Code c) const {
    std::vector<RatFunc> r;
    for (const auto& x : c_) r.push_back(x.scale(c));
    return {d_, std::move(r)};
}

QAElem QAElem::scale(const RatFunc& s) const {
    std::vector<RatFunc> r;
    for (const auto& x : c_) r.push_back(x * s);
    return {d_, std::move(r)};
}

QAElem QAElem::pth_power(int i) const {
    QAElem cur = *this;
    const auto p = static_cast<std::size_t>(d_->spec.k0().p());
    for (int k = 0; k < i; ++k) {
        if (cur.c_.empty()) return cur;
        std::vector<RatFunc> r((cur.c_.size() - 1) * p + 1, RatFunc(d_->spec.k0()));
        for (std::size_t j = 0; j < cur.c_.size(); ++j) r[j * p] = cur.c_[j].pth_power(1);
        cur = QAElem(d_, std::move(r));
    }
    return cur;
}

QAElem QAElem::shift(Code xi) const {
    const Field& k0 = d_->spec.k0();
    std::vector<RatFunc> acc;
    for (std::size_t j = c_.size(); j-- > 0;) {
        // acc <- acc * (Y + xi) + c_j
        std::vector<RatFunc> next(acc.size() + 1, RatFunc(k0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] = next[i + 1] + acc[i];
            next[i] = next[i] + acc[i].scale(xi);
        }
        next[0] = next[0] + c_[j];
        acc = std::move(next);
    }
    return {d_, std::move(acc)};
}

QuotientAlgebra::QuotientAlgebra(const ExtensionSpec& spec) {
    auto d = std::make_shared<QAData>();
    d->spec = spec;
    d->dim = spec.f().degree();
    d_ = std::move(d);
}

const ExtensionSpec& QuotientAlgebra::spec() const { return d_->spec; }
long long QuotientAlgebra::dimension() const { return d_->dim; }

QAElem QuotientAlgebra::y() const {
    const Field& k0 = d_->spec.k0();
    return QAElem(d_, {RatFunc(k0), RatFunc::constant(k0, k0.one())});
}

QAElem QuotientAlgebra::constant(const RatFunc& r) const { return QAElem(d_, {r}); }

QAElem QuotientAlgebra::element(std::vector<RatFunc> coeffs) const {
    if (static_cast<long long>(coeffs.size()) > d_->dim)
        throw Error(ErrorKind::DegreeOverflow, "expression degree exceeds " + std::to_string(d_->dim - 1));
    return QAElem(d_, std::move(coeffs));
}

bool qa_verify(const FixedBy& claim) {
    for (Code xi : claim.subgroup)
        if (!(claim.element.shift(xi) == claim.element)) return false;
    return true;
}

bool qa_verify(const Satisfies& claim) {
    const QAElem lhs = claim.element.pth_power(1) - claim.element;
    return lhs.is_constant() && lhs.constant_term() == claim.rhs;
}

GeneratorRelation generator_relation(const QuotientAlgebra& qa, const QAElem& z, const std::vector<Code>& target) {
    const ExtensionSpec& spec = qa.spec();
    const Field& k0 = spec.k0();
    const RootGroup& G = spec.group();
    const auto& mu = G.basis();
    GeneratorRelation rel;
    for (Code m : mu) {
        const QAElem diff = z.shift(m) - z;
        if (!diff.is_constant() || !diff.constant_term().is_constant())
            throw Error(ErrorKind::NotAFixedField, "sigma(z) - z is not a constant");
        rel.gammas.push_back(diff.constant_term().constant_value());
    }
    const MooreMatrix M = moore_matrix(k0, mu);
    rel.moore_det = M.det;
    if (M.det == 0) throw Error(ErrorKind::SingularSystem, "Moore matrix of the root basis is singular");
    rel.A = solve_linear(k0, M.rows, rel.gammas);

    QAElem l = qa.constant(RatFunc(k0));
    for (std::size_t j = 0; j < rel.A.size(); ++j)
        if (rel.A[j] != 0) l = l + qa.y().pth_power(static_cast<int>(j)).scale(rel.A[j]);
    const QAElem rest = z - l;
    if (!rest.is_constant()) throw Error(ErrorKind::NotAFixedField, "z - l(y) is not in k");
    rel.D = rest.constant_term();

    for (Code xi : G.elements()) {
        Code acc = 0;
        for (std::size_t j = 0; j < rel.A.size(); ++j)
            acc = k0.add(acc, k0.mul(rel.A[j], k0.frob(xi, static_cast<long long>(j))));
        if (acc == 0) rel.kernel.push_back(xi);
    }
    for (Code t : target)
        if (!G.contains(t)) throw Error(ErrorKind::NotASubgroup, "target is not inside the root group");
    if (fp_span(k0, target) != rel.kernel)
        throw Error(ErrorKind::NotAFixedField, "z does not generate the fixed field of the target subgroup");

    std::vector<Code> vbasis;
    std::vector<Code> span{0};
    for (Code g : rel.gammas) {
        if (std::binary_search(span.begin(), span.end(), g)) continue;
        vbasis.push_back(g);
        span = fp_span(k0, vbasis);
    }
    const QAElem chi = subspace_poly(k0, vbasis).eval(z);
    if (!chi.is_constant()) throw Error(ErrorKind::NotAFixedField, "f_V(z) is not in k");
    rel.chi = chi.constant_term();
    return rel;
}

}  // namespace aspw
