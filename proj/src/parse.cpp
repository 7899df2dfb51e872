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

#include "aspw/parse.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace aspw {

namespace {

class Parser {
public:
    Parser(const Field& k0, std::string_view text, std::string_view var) : k0_(k0), s_(text), var_(var) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + msg + " in \"" +
                                               std::string(s_) + "\"");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        const unsigned char c = static_cast<unsigned char>(s_[pos_]);
        return std::isalnum(c) || c == '(' || c == '_';
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc = acc + term();
            } else if (peek('-')) {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (peek('/')) {
                ++pos_;
                const std::size_t at = pos_;
                RatFunc d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = acc / d;
            } else if (starts_atom()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    RatFunc unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    long long exponent() {
        skip();
        bool paren = false;
        if (peek('(')) {
            paren = true;
            ++pos_;
            skip();
        }
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
            skip();
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer exponent");
        long long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_++] - '0');
            if (e > 1'000'000) fail("exponent too large");
        }
        if (paren) {
            if (!peek(')')) fail("expected ')'");
            ++pos_;
        }
        return neg ? -e : e;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (peek('^')) {
            ++pos_;
            const std::size_t at = pos_;
            const long long e = exponent();
            if (e < 0 && base.is_zero()) {
                pos_ = at;
                fail("negative power of zero");
            }
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            const int p = k0_.p();
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = (v * 10 + (s_[pos_++] - '0')) % p;
            return RatFunc::constant(k0_, k0_.from_int(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string_view id = s_.substr(start, pos_ - start);
            if (!var_.empty() && id == var_) return RatFunc::t(k0_);
            if (id == k0_.symbol()) return RatFunc::constant(k0_, k0_.generator());
            pos_ = start;
            fail("unknown identifier '" + std::string(id) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const Field& k0_;
    std::string_view s_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits on `sep` outside parentheses and brackets.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

std::optional<std::string_view> bracket_body(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return s.substr(1, s.size() - 2);
    return std::nullopt;
}

int parse_int(std::string_view s, const std::string& what) {
    s = trim(s);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty value for " + what);
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::ParseError, "expected an integer for " + what + ", got \"" + std::string(s) + "\"");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw Error(ErrorKind::ParseError, what + " is too large");
    }
    return v;
}

}  // namespace

RatFunc parse_expression(const Field& k0, std::string_view text, std::string_view var) {
    return Parser(k0, text, var).parse();
}

std::vector<int> parse_prime_poly(int p, std::string_view text, std::string_view var) {
    const Field fp = Field::make(p, 1);
    const RatFunc r = parse_expression(fp, text, var);
    if (!r.is_polynomial()) throw Error(ErrorKind::ParseError, "modulus must be a polynomial: " + std::string(text));
    std::vector<int> out;
    for (Code c : r.num().coeffs()) out.push_back(static_cast<int>(c));
    return out;
}

Field parse_field(std::string_view text) {
    std::map<std::string, std::string> kv;
    for (auto part : split_top(text, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorKind::ParseError, "expected key=value in field spec, got \"" + std::string(part) + "\"");
        kv[std::string(trim(part.substr(0, eq)))] = std::string(trim(part.substr(eq + 1)));
    }
    for (const auto& [k, v] : kv)
        if (k != "p" && k != "s" && k != "mod" && k != "sym")
            throw Error(ErrorKind::ParseError, "unknown field key \"" + k + "\"");
    if (!kv.count("p")) throw Error(ErrorKind::ParseError, "field spec needs p=");
    const int p = parse_int(kv["p"], "p");
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    std::optional<std::vector<int>> mod;
    if (kv.count("mod")) mod = parse_prime_poly(p, kv["mod"], "x");
    int s = 0;
    if (kv.count("s")) s = parse_int(kv["s"], "s");
    if (mod) {
        const int d = static_cast<int>(mod->size()) - 1;
        if (s != 0 && s != d) throw Error(ErrorKind::InvalidArgument, "modulus degree differs from s");
        s = d;
    }
    if (s == 0) s = 1;
    return Field::make(p, s, mod, kv.count("sym") ? kv["sym"] : "w");
}

Code parse_element(const Field& k0, std::string_view text) {
    const RatFunc r = parse_expression(k0, text, "");
    return r.is_zero() ? 0 : r.constant_value();
}

RatFunc parse_ratfunc(const Field& k0, std::string_view text) { return parse_expression(k0, text, "T"); }

AdditivePoly parse_additive(const Field& k0, std::string_view text) {
    if (auto body = bracket_body(text)) {
        std::vector<Code> a;
        for (auto part : split_top(*body, ',')) a.push_back(parse_element(k0, part));
        return AdditivePoly(k0, std::move(a));
    }
    const RatFunc r = parse_expression(k0, text, "X");
    if (!r.is_polynomial()) throw Error(ErrorKind::ParseError, "additive polynomial must be a polynomial in X");
    const auto& c = r.num().coeffs();
    std::vector<Code> a;
    long long pe = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        while (pe < static_cast<long long>(i)) pe *= k0.p();
        if (pe != static_cast<long long>(i))
            throw Error(ErrorKind::ParseError, "X^" + std::to_string(i) + " is not a p-power term");
    }
    pe = 1;
    while (pe < static_cast<long long>(c.size())) {
        a.push_back(c[static_cast<std::size_t>(pe)]);
        pe *= k0.p();
    }
    return AdditivePoly(k0, std::move(a));
}

Place parse_place(const Field& k0, std::string_view text) {
    const auto t = trim(text);
    if (t == "inf" || t == "infinity" || t == "oo") return Place::at_infinity();
    const RatFunc r = parse_ratfunc(k0, t);
    if (!r.is_polynomial() || r.num().degree() < 1)
        throw Error(ErrorKind::ParseError, "place must be a nonconstant polynomial in T or \"inf\"");
    return Place::finite(r.num());
}

std::vector<RatFunc> parse_witt(const Field& k0, std::string_view text) {
    const auto body = bracket_body(text);
    if (!body) throw Error(ErrorKind::ParseError, "Witt vector must be written as [c1; c2; ...]");
    std::vector<RatFunc> out;
    for (auto part : split_top(*body, ';')) out.push_back(parse_ratfunc(k0, part));
    return out;
}

}  // namespace aspw
