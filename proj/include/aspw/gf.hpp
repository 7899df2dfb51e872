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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aspw/error.hpp"

namespace aspw {

/// Element handle inside a field: the base-p integer whose digits are the
/// power-basis coordinates c_0..c_{s-1}, with c_0 the most significant digit.
/// Integer order on codes is therefore the lexicographic order on coordinate
/// tuples (low index compared first).
using Code = std::uint32_t;

namespace detail {
struct FieldData;
}

class FFElem;

/// Explicit finite field F_{p^s} = F_p[w]/(modulus). Cheap to copy; all copies
/// share one immutable table set. Two handles compare equal iff they refer to
/// the same interned context.
class Field {
public:
    /// Largest supported order; arithmetic tables are O(p^s).
    static constexpr std::uint64_t max_order = 1u << 20;

    Field() = default;

    /// `modulus` is low-to-high and monic of degree s. When absent, the
    /// lexicographically smallest monic irreducible (low coefficient compared
    /// first) is used.
    static Field make(int p, int s, std::optional<std::vector<int>> modulus = std::nullopt,
                      std::string symbol = "w");

    bool valid() const noexcept { return data_ != nullptr; }
    int p() const;
    int degree() const;
    Code order() const;
    const std::vector<int>& modulus() const;
    const std::string& symbol() const;

    Code zero() const noexcept { return 0; }
    Code one() const;
    Code generator() const;
    Code from_int(long long c) const;

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, long long e) const;
    /// a^(p^i); negative i gives iterated p-th roots.
    Code frob(Code a, long long i) const;
    /// Sum of the conjugates of `a` over the subfield of degree `target_degree`.
    Code trace(Code a, int target_degree) const;
    Code absolute_trace(Code a) const { return trace(a, 1); }
    /// Integer value 0..p-1 when `a` lies in the prime field.
    std::optional<int> prime_value(Code a) const;

    std::vector<int> coeffs(Code a) const;
    Code from_coeffs(std::span<const int> c) const;

    FFElem elem(Code c) const;
    FFElem operator()(long long c) const;
    FFElem gen() const;
    /// All elements in code order.
    std::vector<FFElem> elements() const;

    std::string format(Code a) const;

    const void* id() const noexcept { return data_.get(); }
    friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
    const detail::FieldData& d() const;

    std::shared_ptr<const detail::FieldData> data_;
};

class FFElem {
public:
    FFElem() = default;
    FFElem(Field f, Code c) : field_(std::move(f)), code_(c) {}

    const Field& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const { return code_ == field_.one(); }

    FFElem operator+(const FFElem& o) const;
    FFElem operator-(const FFElem& o) const;
    FFElem operator*(const FFElem& o) const;
    FFElem operator/(const FFElem& o) const;
    FFElem operator-() const { return {field_, field_.neg(code_)}; }
    FFElem& operator+=(const FFElem& o) { return *this = *this + o; }
    FFElem& operator-=(const FFElem& o) { return *this = *this - o; }
    FFElem& operator*=(const FFElem& o) { return *this = *this * o; }

    FFElem inv() const { return {field_, field_.inv(code_)}; }
    FFElem pow(long long e) const { return {field_, field_.pow(code_, e)}; }
    FFElem frob(long long i) const { return {field_, field_.frob(code_, i)}; }
    FFElem trace(int target_degree) const { return {field_, field_.trace(code_, target_degree)}; }

    std::string to_string() const { return field_.format(code_); }

    friend bool operator==(const FFElem& a, const FFElem& b) noexcept {
        return a.field_ == b.field_ && a.code_ == b.code_;
    }
    /// Code order; only meaningful within one field.
    friend bool operator<(const FFElem& a, const FFElem& b) noexcept { return a.code_ < b.code_; }

private:
    Field field_;
    Code code_ = 0;
};

void require_same_field(const Field& a, const Field& b);

/// Frobenius power on a value: free function mirroring Field::frob.
FFElem frobenius_power(const FFElem& x, long long i);
FFElem trace_map(const FFElem& x, int target_degree);

/// Ring homomorphism F_{p^n} -> F_{p^s} fixed by the image of the source
/// generator. The full map is tabulated at construction.
class SubfieldEmbedding {
public:
    SubfieldEmbedding() = default;

    /// Picks the smallest-code root of the source modulus inside the target.
    static SubfieldEmbedding make(const Field& source, const Field& target);
    /// Uses a caller-chosen image; it must be a root of the source modulus.
    static SubfieldEmbedding make(const Field& source, const Field& target, Code image_of_generator);

    const Field& source() const noexcept { return source_; }
    const Field& target() const noexcept { return target_; }
    Code image_of_generator() const noexcept { return image_; }

    Code map(Code c) const { return table_.at(c); }
    FFElem operator()(const FFElem& e) const;

private:
    Field source_;
    Field target_;
    Code image_ = 0;
    std::vector<Code> table_;
};

FFElem embed(const FFElem& e, const SubfieldEmbedding& emb);

/// Residue-field helper: F_{p^(s*m)} with the default modulus and the default
/// embedding of `base`; m = 1 gives the identity on `base`. Memoized.
const SubfieldEmbedding& extension_of_degree(const Field& base, int m);

bool is_prime(long long n) noexcept;

/// Irreducibility of a monic polynomial over F_p (low-to-high coefficients).
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace aspw
