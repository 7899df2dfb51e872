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

#include "aspw/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace aspw {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::NotASubfield: return "NotASubfield";
        case ErrorKind::IncompatibleContexts: return "IncompatibleContexts";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::PoleAtPlace: return "PoleAtPlace";
        case ErrorKind::RootsNotInBaseField: return "RootsNotInBaseField";
        case ErrorKind::DependentGenerators: return "DependentGenerators";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::ZeroScale: return "ZeroScale";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::RamifiedPlaceForSplitTest: return "RamifiedPlaceForSplitTest";
        case ErrorKind::DependentSubextensions: return "DependentSubextensions";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::NotAFixedField: return "NotAFixedField";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::LengthCapExceeded: return "LengthCapExceeded";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::SingularWittSystem: return "SingularWittSystem";
        case ErrorKind::IdentityFailure: return "IdentityFailure";
        case ErrorKind::NotReduced: return "NotReduced";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Dense polynomials over F_p with int coefficients, low-to-high, trimmed.
using SmallPoly = std::vector<int>;

void trim(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
        if (e & 1) r = r * b % p;
    return r;
}

SmallPoly poly_mod(SmallPoly a, const SmallPoly& f, int p) {
    trim(a);
    const int df = static_cast<int>(f.size()) - 1;
    const int lc_inv = inv_mod(f.back(), p);
    while (static_cast<int>(a.size()) - 1 >= df) {
        const int shift = static_cast<int>(a.size()) - 1 - df;
        const int c = a.back() * lc_inv % p;
        for (int i = 0; i <= df; ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

SmallPoly poly_mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& f, int p) {
    if (a.empty() || b.empty()) return {};
    SmallPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), f, p);
}

SmallPoly poly_gcd(SmallPoly a, SmallPoly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

SmallPoly poly_powmod(SmallPoly base, long long e, const SmallPoly& f, int p) {
    SmallPoly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
    SmallPoly f = poly;
    for (int& c : f) c = ((c % p) + p) % p;
    trim(f);
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    SmallPoly h{0, 1};
    for (int i = 1; i <= d / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        SmallPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] - 1 + p) % p;
        trim(diff);
        SmallPoly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

namespace detail {

struct FieldData {
    int p = 0;
    int s = 0;
    Code q = 0;
    std::vector<int> modulus;
    std::string symbol;
    std::vector<Code> place;  // place[i] = p^(s-1-i)
    std::vector<Code> exp;    // exp[k] = g^k, size q-1
    std::vector<Code> log;    // log[code], log[0] unused
    std::vector<std::int64_t> zech;  // log(1 + g^k) or -1 when 1 + g^k = 0
    Code half = 0;            // log(-1)
    Code one = 0;
    Code gen = 0;

    std::vector<int> digits(Code c) const {
        std::vector<int> out(s);
        for (int i = 0; i < s; ++i) {
            out[i] = static_cast<int>(c / place[i]);
            c %= place[i];
        }
        return out;
    }
    Code pack(const std::vector<int>& c) const {
        Code r = 0;
        for (int i = 0; i < s; ++i) r += static_cast<Code>(c[i]) * place[i];
        return r;
    }
    Code slow_mul(Code a, Code b) const {
        SmallPoly x = digits(a), y = digits(b);
        trim(x);
        trim(y);
        SmallPoly r = poly_mulmod(x, y, modulus, p);
        r.resize(s, 0);
        return pack(r);
    }
    Code slow_pow(Code a, std::uint64_t e) const {
        Code r = one;
        while (e > 0) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace detail

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<int> default_modulus(int p, int s) {
    // Counter over (m_0, ..., m_{s-1}) with m_0 the most significant digit.
    std::vector<int> m(s, 0);
    while (true) {
        std::vector<int> cand = m;
        cand.push_back(1);
        if (is_irreducible_mod_p(cand, p)) return cand;
        int i = s - 1;
        while (i >= 0 && ++m[i] == p) m[i--] = 0;
        if (i < 0) break;
    }
    throw Error(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
}

std::shared_ptr<detail::FieldData> build_field(int p, int s, std::vector<int> modulus, std::string symbol) {
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->s = s;
    d->modulus = std::move(modulus);
    d->symbol = std::move(symbol);
    d->place.resize(s);
    Code pw = 1;
    for (int i = s - 1; i >= 0; --i) {
        d->place[i] = pw;
        pw *= static_cast<Code>(p);
    }
    d->q = pw;
    d->one = d->place[0];
    if (s >= 2) {
        d->gen = d->place[1];
    } else {
        d->gen = static_cast<Code>((p - d->modulus[0]) % p);
    }

    const std::uint64_t order = d->q - 1;
    const auto factors = prime_factors(order);
    Code g = 0;
    for (Code c = 1; c < d->q; ++c) {
        bool primitive = true;
        for (auto r : factors) {
            if (d->slow_pow(c, order / r) == d->one) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = c;
            break;
        }
    }
    d->exp.resize(order);
    d->log.assign(d->q, 0);
    Code e = d->one;
    for (std::uint64_t k = 0; k < order; ++k) {
        d->exp[k] = e;
        d->log[e] = static_cast<Code>(k);
        e = d->slow_mul(e, g);
    }
    d->zech.assign(order, -1);
    const Code top = d->place[0];
    for (std::uint64_t k = 0; k < order; ++k) {
        const Code v = d->exp[k];
        const Code digit0 = v / top;
        const Code w = (digit0 == static_cast<Code>(p - 1)) ? v - digit0 * top : v + top;
        d->zech[k] = (w == 0) ? -1 : static_cast<std::int64_t>(d->log[w]);
    }
    d->half = (p == 2) ? 0 : static_cast<Code>(order / 2);
    return d;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

using FieldKey = std::tuple<int, int, std::vector<int>, std::string>;

std::map<FieldKey, std::shared_ptr<const detail::FieldData>>& registry() {
    static std::map<FieldKey, std::shared_ptr<const detail::FieldData>> r;
    return r;
}

}  // namespace

Field Field::make(int p, int s, std::optional<std::vector<int>> modulus, std::string symbol) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (s < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (int i = 0; i < s; ++i) {
        q *= static_cast<std::uint64_t>(p);
        if (q > max_order) throw Error(ErrorKind::FieldTooLarge, "p^s exceeds " + std::to_string(max_order));
    }
    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
        for (int& c : mod) c = ((c % p) + p) % p;
        if (static_cast<int>(mod.size()) != s + 1 || mod.back() != 1)
            throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree " + std::to_string(s));
        if (!is_irreducible_mod_p(mod, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
    } else {
        mod = default_modulus(p, s);
    }
    FieldKey key{p, s, mod, symbol};
    std::lock_guard lock(registry_mutex());
    auto& reg = registry();
    if (auto it = reg.find(key); it != reg.end()) return Field(it->second);
    auto data = build_field(p, s, mod, symbol);
    reg.emplace(std::move(key), data);
    return Field(std::move(data));
}

const detail::FieldData& Field::d() const {
    if (!data_) throw Error(ErrorKind::InvalidArgument, "use of an empty field handle");
    return *data_;
}

int Field::p() const { return d().p; }
int Field::degree() const { return d().s; }
Code Field::order() const { return d().q; }
const std::vector<int>& Field::modulus() const { return d().modulus; }
const std::string& Field::symbol() const { return d().symbol; }
Code Field::one() const { return d().one; }
Code Field::generator() const { return d().gen; }

Code Field::from_int(long long c) const {
    const auto& f = d();
    const long long r = ((c % f.p) + f.p) % f.p;
    return static_cast<Code>(r) * f.one;
}

Code Field::add(Code a, Code b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    const auto& f = d();
    const std::uint64_t n = f.q - 1;
    const std::uint64_t la = f.log[a], lb = f.log[b];
    const std::uint64_t diff = (lb + n - la) % n;
    const std::int64_t z = f.zech[diff];
    if (z < 0) return 0;
    return f.exp[(la + static_cast<std::uint64_t>(z)) % n];
}

Code Field::neg(Code a) const {
    if (a == 0) return 0;
    const auto& f = d();
    if (f.p == 2) return a;
    return f.exp[(static_cast<std::uint64_t>(f.log[a]) + f.half) % (f.q - 1)];
}

Code Field::mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    const auto& f = d();
    return f.exp[(static_cast<std::uint64_t>(f.log[a]) + f.log[b]) % (f.q - 1)];
}

Code Field::inv(Code a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const auto& f = d();
    const std::uint64_t n = f.q - 1;
    return f.exp[(n - f.log[a]) % n];
}

Code Field::pow(Code a, long long e) const {
    const auto& f = d();
    if (e == 0) return f.one;
    if (a == 0) {
        if (e < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return 0;
    }
    const long long n = static_cast<long long>(f.q - 1);
    const long long r = ((e % n) + n) % n;
    return f.exp[(static_cast<std::uint64_t>(f.log[a]) * static_cast<std::uint64_t>(r)) % static_cast<std::uint64_t>(n)];
}

Code Field::frob(Code a, long long i) const {
    if (a == 0) return 0;
    const auto& f = d();
    const long long e = ((i % f.s) + f.s) % f.s;
    std::uint64_t pe = 1;
    const std::uint64_t n = f.q - 1;
    for (long long k = 0; k < e; ++k) pe = pe * static_cast<std::uint64_t>(f.p) % n;
    if (n == 1) return a;
    return f.exp[(static_cast<std::uint64_t>(f.log[a]) * pe) % n];
}

Code Field::trace(Code a, int target_degree) const {
    const auto& f = d();
    if (target_degree < 1 || f.s % target_degree != 0)
        throw Error(ErrorKind::NotASubfield,
                    std::to_string(target_degree) + " does not divide " + std::to_string(f.s));
    Code acc = 0;
    Code x = a;
    for (int j = 0; j < f.s / target_degree; ++j) {
        acc = add(acc, x);
        x = frob(x, target_degree);
    }
    return acc;
}

std::optional<int> Field::prime_value(Code a) const {
    const auto& f = d();
    if (a % f.one != 0) return std::nullopt;
    return static_cast<int>(a / f.one);
}

std::vector<int> Field::coeffs(Code a) const { return d().digits(a); }

Code Field::from_coeffs(std::span<const int> c) const {
    const auto& f = d();
    std::vector<int> v(f.s, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < static_cast<std::size_t>(f.s)) {
            v[i] = ((c[i] % f.p) + f.p) % f.p;
        } else if (c[i] % f.p != 0) {
            throw Error(ErrorKind::InvalidArgument, "coordinate vector longer than the field degree");
        }
    }
    return f.pack(v);
}

FFElem Field::elem(Code c) const {
    if (c >= order()) throw Error(ErrorKind::InvalidArgument, "code out of range");
    return {*this, c};
}
FFElem Field::operator()(long long c) const { return {*this, from_int(c)}; }
FFElem Field::gen() const { return {*this, generator()}; }

std::vector<FFElem> Field::elements() const {
    std::vector<FFElem> out;
    out.reserve(order());
    for (Code c = 0; c < order(); ++c) out.emplace_back(*this, c);
    return out;
}

std::string Field::format(Code a) const {
    const auto& f = d();
    if (a == 0) return "0";
    const auto c = f.digits(a);
    std::ostringstream os;
    bool first = true;
    for (int i = f.s - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i] << '*';
        os << f.symbol;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw Error(ErrorKind::IncompatibleContexts, "elements belong to different fields");
}

FFElem FFElem::operator+(const FFElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_.add(code_, o.code_)};
}
FFElem FFElem::operator-(const FFElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_.sub(code_, o.code_)};
}
FFElem FFElem::operator*(const FFElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_.mul(code_, o.code_)};
}
FFElem FFElem::operator/(const FFElem& o) const {
    require_same_field(field_, o.field_);
    return {field_, field_.div(code_, o.code_)};
}

FFElem frobenius_power(const FFElem& x, long long i) { return x.frob(i); }
FFElem trace_map(const FFElem& x, int target_degree) { return x.trace(target_degree); }

namespace {

Code eval_prime_poly(const Field& t, const std::vector<int>& poly, Code x) {
    Code acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = t.add(t.mul(acc, x), t.from_int(*it));
    return acc;
}

}  // namespace

SubfieldEmbedding SubfieldEmbedding::make(const Field& source, const Field& target) {
    if (source.p() != target.p() || target.degree() % source.degree() != 0)
        throw Error(ErrorKind::NotASubfield, "degree " + std::to_string(source.degree()) + " does not divide " +
                                                 std::to_string(target.degree()));
    for (Code c = 0; c < target.order(); ++c) {
        if (eval_prime_poly(target, source.modulus(), c) == 0) return make(source, target, c);
    }
    throw Error(ErrorKind::NotASubfield, "source modulus has no root in target");
}

SubfieldEmbedding SubfieldEmbedding::make(const Field& source, const Field& target, Code image) {
    if (source.p() != target.p() || target.degree() % source.degree() != 0)
        throw Error(ErrorKind::NotASubfield, "degree " + std::to_string(source.degree()) + " does not divide " +
                                                 std::to_string(target.degree()));
    if (eval_prime_poly(target, source.modulus(), image) != 0)
        throw Error(ErrorKind::NotASubfield, "image is not a root of the source modulus");
    SubfieldEmbedding e;
    e.source_ = source;
    e.target_ = target;
    e.image_ = image;
    std::vector<Code> powers(source.degree());
    Code x = target.one();
    for (int i = 0; i < source.degree(); ++i) {
        powers[i] = x;
        x = target.mul(x, image);
    }
    e.table_.resize(source.order());
    for (Code c = 0; c < source.order(); ++c) {
        const auto digits = source.coeffs(c);
        Code acc = 0;
        for (int i = 0; i < source.degree(); ++i)
            acc = target.add(acc, target.mul(target.from_int(digits[i]), powers[i]));
        e.table_[c] = acc;
    }
    return e;
}

FFElem SubfieldEmbedding::operator()(const FFElem& e) const {
    if (!(e.field() == source_)) throw Error(ErrorKind::IncompatibleContexts, "element is not in the source field");
    return {target_, table_[e.code()]};
}

FFElem embed(const FFElem& e, const SubfieldEmbedding& emb) { return emb(e); }

const SubfieldEmbedding& extension_of_degree(const Field& base, int m) {
    static std::mutex mtx;
    static std::map<std::pair<const void*, int>, std::unique_ptr<SubfieldEmbedding>> cache;
    std::lock_guard lock(mtx);
    auto key = std::make_pair(base.id(), m);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
    auto emb = std::make_unique<SubfieldEmbedding>(
        m == 1 ? SubfieldEmbedding::make(base, base, base.generator())
               : SubfieldEmbedding::make(base, Field::make(base.p(), base.degree() * m)));
    auto& ref = *emb;
    cache.emplace(key, std::move(emb));
    return ref;
}

}  // namespace aspw
