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

#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "aspw/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = aspw::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::vector<std::string> kExample = {"--field", "p=3,s=3,mod=x^3-x-2", "--f", "X^27-X", "--u",
                                          "1/(T+1)^54 + 1/(T+1) + T^9+T^3+T+w+1"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

}  // namespace

TEST_CASE("witt arithmetic") {
    const Result r = run({"witt", "add", "--p", "2", "--m", "2", "[1;0]", "[1;0]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[0;1]") != std::string::npos);
    CHECK(run({"witt", "mul", "--p", "3", "--m", "2", "[2;0]", "[2;0]"}).out.find("[1;0]") != std::string::npos);
}

TEST_CASE("reduce and ramify") {
    const Result r = run(with({"reduce"}, kExample));
    CHECK(r.code == 0);
    CHECK(r.out.find("T^9 + T^3 + T + (w+1) + 1/(T+1)^2 + 1/(T+1)") != std::string::npos);
    const Result j = run(with({"--json", "ramify"}, kExample));
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("schema") == "aspw/1");
    CHECK(doc.at("command") == "ramify");
}

TEST_CASE("split verdict") {
    const Result r = run(with({"split", "--place", "inf"}, kExample));
    CHECK(r.code == 0);
    CHECK(r.out.find("ramified inertia_degree=1") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    Result r = run({"reduce", "--field", "p=4", "--f", "X^4-X", "--u", "T"});
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error:", 0) == 0);
    r = run({"reduce", "--field", "p=2,s=2", "--f", "X^4-X", "--u", "T+("});
    CHECK(r.code == 2);
    r = run({"frobnicate"});
    CHECK(r.code == 2);
    r = run({"--json", "witt", "add", "--p", "2", "--m", "2", "[1]", "[1;0]"});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.out).contains("error"));
}

TEST_CASE("oracle verification") {
    CHECK(run({"verify", "lemma62", "--q", "4", "--m", "2"}).code == 0);
    CHECK(run({"verify", "eqstar", "--field", "p=2,s=4", "--f", "X^4-X"}).code == 0);
    CHECK(run({"verify", "axioms", "--p", "2", "--s", "1", "--m", "2"}).code == 0);
}
