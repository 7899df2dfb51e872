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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aspw/asext.hpp"

namespace aspw {

/// Machine-readable record of one oracle run.
struct OracleReport {
    std::string claim;
    nlohmann::json parameters = nlohmann::json::object();
    std::string mode = "exhaustive";  // or "sampled"
    std::optional<std::uint64_t> seed;
    std::string verdict;  // "pass", "fail" or "counterexample"
    nlohmann::json witness;

    bool passed() const { return verdict == "pass"; }
    nlohmann::json to_json() const;
};

/// Largest field an exhaustive scan accepts.
constexpr Code kOracleFieldCap = 729;

/// Sorted image of `map` over all of K. Throws FieldTooLarge above the cap.
std::vector<Code> image_set(const Field& K, const std::function<Code(Code)>& map, int jobs = 1);

/// sum a_i x^(p^i) by plain multiplication; coefficients already in K.
Code naive_additive(const Field& K, const std::vector<Code>& coeffs, Code x);
/// x^p - a^(p-1) x.
Code naive_wp_a(const Field& K, Code a, Code x);

struct Lemma62Result {
    bool holds = true;
    std::optional<Code> counterexample;
    OracleReport report;
};

/// Over F_(q^m): S has mu*S in wp(F_(q^m)) for all mu in F_q iff S = l^q - l.
Lemma62Result verify_lemma_62(long long q, int m, int jobs = 1);

struct EqStarResult {
    bool equal = false;
    bool containment = true;  // im f inside every im wp_(a_i)
    std::vector<Code> a;      // a_i = f_i(eps_i)
    std::size_t image_f = 0;
    std::size_t intersection = 0;
    std::optional<Code> witness;  // in the intersection but not in im f
    OracleReport report;
};

/// Compares the intersection of the images of wp_(a_i) over the coordinate
/// hyperplanes of the root group with the image of f, exhaustively over k0.
EqStarResult verify_eq_star(const AdditivePoly& f, int jobs = 1);

struct SplittingOracle {
    long long count = 0;            // roots of f(X) = u(nu) in the residue field
    long long roots_expected = 0;   // p^n
    bool two_valued = true;         // count is 0 or p^n
    int inertia_degree = 0;         // 1 or p when determined, else 0
    OracleReport report;
};

/// Exhaustive root count at P; requires v_P(u) >= 0. The inertia degree is
/// determined by a second count in the degree-p extension of the residue
/// field when that field has at most `ext_cap` elements.
SplittingOracle splitting_oracle(const ExtensionSpec& spec, const Place& P, Code ext_cap = 1 << 16);

enum class AxiomRing { FiniteField, RationalFunctions };

struct AxiomOptions {
    int p = 2;
    int s = 1;
    int m = 2;
    AxiomRing ring = AxiomRing::FiniteField;
    bool exhaustive = true;  // only honoured for finite fields
    int samples = 500;
    int max_degree = 3;
    std::uint64_t seed = 1;
};

struct AxiomResult {
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> failed;  // axiom names, first failure each
    OracleReport report;
};

/// Ring axioms of W_m, Frobenius distribution and additivity of wp.
AxiomResult witt_axiom_sampler(const AxiomOptions& opt);

}  // namespace aspw
