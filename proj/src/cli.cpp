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

#include "aspw/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aspw/asext.hpp"
#include "aspw/oracle.hpp"
#include "aspw/parse.hpp"
#include "aspw/witt.hpp"

namespace aspw::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "aspw/1";

struct Common {
    bool json = false;
    int jobs = 1;
};

// Collects a report as JSON and as text lines; one of them is printed.
struct Report {
    json j;
    std::vector<std::string> lines;

    explicit Report(const std::string& command) {
        j["schema"] = kSchema;
        j["command"] = command;
    }
    void line(std::string s) { lines.push_back(std::move(s)); }
    void emit(std::ostream& out, bool as_json) const {
        if (as_json) {
            out << j.dump(2) << "\n";
        } else {
            for (const auto& l : lines) out << l << "\n";
        }
    }
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string fmt_vec(const std::vector<int>& v) {
    std::vector<std::string> s;
    for (int x : v) s.push_back(std::to_string(x));
    return "(" + join(s, ",") + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json field_json(const Field& k0) {
    std::vector<int> mod = k0.modulus();
    return {{"p", k0.p()}, {"s", k0.degree()}, {"modulus", mod}, {"symbol", k0.symbol()}};
}

struct SpecArgs {
    std::string field = "p=2,s=1";
    std::string f;
    std::string u;

    void add_to(CLI::App* app) {
        app->add_option("--field", field, "Constant field, e.g. p=3,s=3,mod=x^3-x-2")->capture_default_str();
        app->add_option("--f", f, "Additive polynomial, e.g. X^27-X or [a0,...,1]")->required();
        app->add_option("--u", u, "Right-hand side in T")->required();
    }
    ExtensionSpec spec() const {
        const Field k0 = parse_field(field);
        return ExtensionSpec::make(parse_additive(k0, f), parse_ratfunc(k0, u));
    }
};

void spec_header(Report& r, const ExtensionSpec& spec) {
    r.j["field"] = field_json(spec.k0());
    r.j["f"] = spec.f().to_string();
    r.j["u"] = spec.u().to_string();
    r.j["irreducible"] = spec.irreducible();
}

json entry_json(const RamifiedEntry& e) {
    return {{"place", e.place.to_string()}, {"lambda", e.lambda}, {"m", e.m}, {"e_bound", e.e_bound}, {"exact", e.exact}};
}

std::string entry_text(const RamifiedEntry& e) {
    return "place " + e.place.to_string() + ": lambda=" + std::to_string(e.lambda) + " m=" + std::to_string(e.m) +
           (e.exact ? " e=" : " e_bound=") + std::to_string(e.e_bound) + (e.exact ? " (exact)" : "");
}

int cmd_reduce(const SpecArgs& a, bool twist, const Common& c, std::ostream& out) {
    const ExtensionSpec spec = a.spec();
    Report r("reduce");
    spec_header(r, spec);
    std::vector<std::string> shifts;
    if (twist) {
        const TwistedForm t = twist_normalize(spec);
        for (const auto& s : t.reduction.log.shifts) shifts.push_back(s.to_string());
        r.j["twist"] = t.j;
        r.j["twisted_f"] = t.f.to_string();
        r.j["reduced"] = t.reduction.u.to_string();
        r.j["score"] = t.score;
        r.line("twist j=" + std::to_string(t.j) + " f=" + t.f.to_string());
        r.line("r(T) = " + t.reduction.u.to_string());
    } else {
        const GlobalReduction g = reduce_global(spec);
        for (const auto& s : g.log.shifts) shifts.push_back(s.to_string());
        r.j["reduced"] = g.reduced.u().to_string();
        r.j["total_shift"] = g.log.total(spec.k0()).to_string();
        r.line("r(T) = " + g.reduced.u().to_string());
    }
    r.j["shifts"] = shifts;
    for (const auto& s : shifts) r.line("shift y -> y - (" + s + ")");
    r.emit(out, c.json);
    return kOk;
}

int cmd_ramify(const SpecArgs& a, const Common& c, std::ostream& out) {
    const ExtensionSpec spec = a.spec();
    const RamificationReport rep = ramification_report(spec);
    Report r("ramify");
    spec_header(r, spec);
    r.j["reduced"] = rep.reduced_u.to_string();
    r.line("r(T) = " + rep.reduced_u.to_string());
    json places = json::array();
    for (const auto& e : rep.finite) {
        places.push_back(entry_json(e));
        r.line(entry_text(e));
    }
    if (rep.infinity) {
        places.push_back(entry_json(*rep.infinity));
        r.line(entry_text(*rep.infinity));
    }
    if (places.empty()) r.line("unramified everywhere");
    r.j["ramified"] = places;
    r.emit(out, c.json);
    return kOk;
}

int cmd_subext(const SpecArgs& a, bool verify, const Common& c, std::ostream& out) {
    const ExtensionSpec spec = a.spec();
    const Field& k0 = spec.k0();
    const auto subs = subextensions(spec, verify);
    const AdditivePoly wp = AdditivePoly::frobenius_minus_identity(k0, 1);
    Report r("subext");
    spec_header(r, spec);
    json arr = json::array();
    for (const auto& d : subs) {
        const Hyperplane& h = spec.hyperplanes()[d.index];
        const RatFunc reduced = reduce_rhs(wp, d.rhs).u;
        json e{{"index", d.index},
               {"phi", h.functional},
               {"a", k0.format(d.a)},
               {"generator", d.generator},
               {"rhs", d.rhs.to_string()},
               {"reduced", reduced.to_string()}};
        if (verify) e["verified"] = d.verified;
        arr.push_back(e);
        r.line("H" + std::to_string(d.index) + " phi=" + fmt_vec(h.functional) + " z=" + d.generator);
        r.line("  z^p - z = " + d.rhs.to_string());
        r.line("  reduced: " + reduced.to_string() + (verify ? std::string(" verified=") + yes_no(d.verified) : ""));
    }
    r.j["subextensions"] = arr;
    r.emit(out, c.json);
    if (verify && std::any_of(subs.begin(), subs.end(), [](const auto& d) { return !d.verified; })) return kDisagreement;
    return kOk;
}

std::string kind_name(SplitKind k) {
    switch (k) {
        case SplitKind::FullySplit:
            return "fully_split";
        case SplitKind::Inert:
            return "inert";
        case SplitKind::Ramified:
            return "ramified";
    }
    return "?";
}

int cmd_split(const SpecArgs& a, const std::string& place, const Common& c, std::ostream& out) {
    const ExtensionSpec spec = a.spec();
    const Place P = parse_place(spec.k0(), place);
    const DecompositionType dt = decomposition_type(spec, P);
    const SplitVerdict v = place_splitting(spec, P);
    Report r("split");
    spec_header(r, spec);
    r.j["place"] = P.to_string();
    r.j["e"] = dt.e;
    r.j["f"] = dt.f;
    r.j["g"] = dt.g;
    r.j["consistent"] = dt.consistent;
    r.j["verdict"] = kind_name(v.kind);
    r.j["inertia_degree"] = v.inertia_degree;
    json hs = json::array();
    std::vector<std::string> beh;
    for (std::size_t i = 0; i < dt.behaviour.size(); ++i) {
        const Hyperplane& h = spec.hyperplanes()[i];
        hs.push_back({{"index", i}, {"phi", h.functional}, {"behaviour", std::string(to_string(dt.behaviour[i]))}});
        beh.push_back("H" + std::to_string(i) + fmt_vec(h.functional) + "=" + std::string(to_string(dt.behaviour[i])));
    }
    r.j["hyperplanes"] = hs;
    r.j["decomposition_field"] = dt.split;
    r.j["inertia_field"] = dt.unramified;
    auto idx = [](const std::vector<std::size_t>& v) {
        std::vector<std::string> s;
        for (auto i : v) s.push_back("H" + std::to_string(i));
        return s.empty() ? std::string("none") : join(s, ",");
    };
    r.line("e=" + std::to_string(dt.e) + " f=" + std::to_string(dt.f) + " g=" + std::to_string(dt.g));
    r.line("verdict: " + kind_name(v.kind) + " inertia_degree=" + std::to_string(v.inertia_degree));
    r.line("decomposition field: " + idx(dt.split));
    r.line("inertia field: " + idx(dt.unramified));
    r.line("behaviour: " + join(beh, " "));
    if (!dt.consistent) r.line("warning: subextension data inconsistent");
    r.emit(out, c.json);
    return dt.consistent ? kOk : kDisagreement;
}

std::vector<Code> parse_elements(const Field& k0, const std::vector<std::string>& v) {
    std::vector<Code> out;
    for (const auto& s : v) out.push_back(parse_element(k0, s));
    return out;
}

std::vector<std::string> format_elements(const Field& k0, const std::vector<Code>& v) {
    std::vector<std::string> out;
    for (Code x : v) out.push_back(k0.format(x));
    return out;
}

int cmd_relate(const SpecArgs& a, const std::string& z, const std::vector<std::string>& target, const Common& c,
               std::ostream& out) {
    const ExtensionSpec spec = a.spec();
    const Field& k0 = spec.k0();
    const QuotientAlgebra qa(spec);
    Report r("relate");
    spec_header(r, spec);
    QAElem elem;
    std::vector<Code> tgt = parse_elements(k0, target);
    if (z.empty()) {
        const TwistedForm t = twist_normalize(spec);
        elem = qa.y().pth_power(t.j) - qa.constant(t.reduction.log.total(k0));
        r.j["twist"] = t.j;
        r.j["normal_form"] = t.reduction.u.to_string();
        r.line("normal form: y^(p^" + std::to_string(t.j) + ") shifted, u' = " + t.reduction.u.to_string());
        const RamificationReport rep = ramification_report(ExtensionSpec::make(t.f, t.reduction.u));
        json ram = json::array();
        for (const auto& e : rep.finite) ram.push_back(entry_json(e));
        if (rep.infinity) ram.push_back(entry_json(*rep.infinity));
        for (const auto& e : rep.finite) r.line(entry_text(e));
        if (rep.infinity) r.line(entry_text(*rep.infinity));
        r.j["ramified"] = ram;
    } else {
        elem = qa.element(parse_witt(k0, z));
    }
    const GeneratorRelation rel = generator_relation(qa, elem, tgt);
    r.j["A"] = format_elements(k0, rel.A);
    r.j["D"] = rel.D.to_string();
    r.j["gammas"] = format_elements(k0, rel.gammas);
    r.j["moore_det"] = k0.format(rel.moore_det);
    r.j["kernel"] = format_elements(k0, rel.kernel);
    r.j["chi"] = rel.chi.to_string();
    r.line("A = [" + join(format_elements(k0, rel.A), ", ") + "]");
    r.line("D = " + rel.D.to_string());
    r.line("gammas = [" + join(format_elements(k0, rel.gammas), ", ") + "] det=" + k0.format(rel.moore_det));
    r.line("kernel = {" + join(format_elements(k0, rel.kernel), ", ") + "}");
    r.line("f_V(z) = " + rel.chi.to_string());
    r.emit(out, c.json);
    return kOk;
}

int cmd_combine(const std::string& field, const std::vector<std::string>& gammas, const std::vector<std::string>& mus,
                const std::string& place, const Common& c, std::ostream& out) {
    const Field k0 = parse_field(field);
    std::vector<RatFunc> gs;
    for (const auto& g : gammas) gs.push_back(parse_ratfunc(k0, g));
    const Combination comb = combine_generators(gs, parse_elements(k0, mus));
    const ExtensionSpec& spec = comb.spec;
    Report r("combine");
    spec_header(r, spec);
    r.j["generator"] = comb.generator;
    r.j["mu"] = format_elements(k0, comb.mu);
    r.line("f = " + spec.f().to_string());
    r.line(comb.generator);
    r.line("u = " + spec.u().to_string());
    const int v = valuation(spec.u(), Place::at_infinity());
    r.j["v_inf"] = v;
    r.line("v_inf(u) = " + std::to_string(v));
    const RamificationReport rep = ramification_report(spec);
    json ram = json::array();
    for (const auto& e : rep.finite) {
        ram.push_back(entry_json(e));
        r.line(entry_text(e));
    }
    if (rep.infinity) {
        ram.push_back(entry_json(*rep.infinity));
        r.line(entry_text(*rep.infinity));
    }
    r.j["ramified"] = ram;
    const Place P = parse_place(k0, place);
    const DecompositionType dt = decomposition_type(spec, P);
    r.j["place"] = P.to_string();
    r.j["e"] = dt.e;
    r.j["f_inertia"] = dt.f;
    r.j["g"] = dt.g;
    r.line("at " + P.to_string() + ": e=" + std::to_string(dt.e) + " f=" + std::to_string(dt.f) +
           " g=" + std::to_string(dt.g));
    r.emit(out, c.json);
    return dt.consistent ? kOk : kDisagreement;
}

// Witt commands.

struct WittArgs {
    std::string field;
    int p = 2;
    int s = 1;
    int m = 0;

    void add_to(CLI::App* app) {
        app->add_option("--field", field, "Constant field (overrides --p/--s)");
        app->add_option("--p", p, "Characteristic")->capture_default_str();
        app->add_option("--s", s, "Degree of the constant field over F_p")->capture_default_str();
        app->add_option("--m", m, "Witt length (default: number of components)");
    }
    Field k0() const { return field.empty() ? Field::make(p, s) : parse_field(field); }
    WittK vec(const Field& k0, const std::string& text) const {
        WittK v{parse_witt(k0, text)};
        if (m > 0 && v.length() != m)
            throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(m) + " components in " + text);
        return v;
    }
};

bool all_constant(const WittK& v) {
    return std::all_of(v.comps.begin(), v.comps.end(), [](const RatFunc& c) { return c.is_constant(); });
}

WittF to_constants(const WittK& v) {
    WittF out;
    for (const auto& c : v.comps) out.comps.emplace_back(c.field(), c.is_zero() ? 0 : c.constant_value());
    return out;
}

void witt_diagnostics(Report& r, const WittK& v, const std::string& key) {
    if (!all_constant(v) || v.comps[0].field().degree() != 1) return;
    const WittF w = to_constants(v);
    const auto ghosts = ghost_of_lift(w);
    r.j[key + "_ghost"] = ghosts;
    if (auto t = witt_to_int(w)) r.j[key + "_integer"] = *t;
    r.line(key + " ghost components of the lift: " + join(ghosts, " "));
}

int cmd_witt_binary(const std::string& op, const WittArgs& a, const std::string& x, const std::string& y,
                    const Common& c, std::ostream& out) {
    const Field k0 = a.k0();
    const WittK vx = a.vec(k0, x);
    const WittK vy = a.vec(k0, y);
    const WittK res = op == "add" ? witt_add(vx, vy) : op == "sub" ? witt_sub(vx, vy) : witt_mul(vx, vy);
    Report r("witt " + op);
    r.j["field"] = field_json(k0);
    r.j["x"] = to_string(vx);
    r.j["y"] = to_string(vy);
    r.j["result"] = to_string(res);
    r.line(to_string(res));
    witt_diagnostics(r, res, "result");
    r.emit(out, c.json);
    return kOk;
}

int cmd_witt_wp(const WittArgs& a, const std::string& x, int e, const Common& c, std::ostream& out) {
    const Field k0 = a.k0();
    const WittK vx = a.vec(k0, x);
    const WittK res = asw_operator(vx, e);
    Report r("witt wp");
    r.j["field"] = field_json(k0);
    r.j["x"] = to_string(vx);
    r.j["frobenius_exponent"] = e;
    r.j["result"] = to_string(res);
    r.line(to_string(res));
    r.emit(out, c.json);
    return kOk;
}

json witt_list(const std::vector<WittK>& v) {
    json arr = json::array();
    for (const auto& w : v) arr.push_back(to_string(w));
    return arr;
}

int cmd_witt_reduce(const WittArgs& a, const std::string& alpha, int n, bool twist, const Common& c, std::ostream& out) {
    const Field k0 = a.k0();
    const WittReduction red = witt_reduce({k0, n, a.vec(k0, alpha)}, twist);
    Report r("witt reduce");
    r.j["field"] = field_json(k0);
    r.j["n"] = n;
    r.j["alpha"] = alpha;
    r.j["twist"] = red.twist;
    r.j["beta"] = to_string(red.beta);
    r.j["gamma"] = to_string(red.gamma);
    r.j["theta"] = to_string(red.theta);
    r.j["shifts"] = witt_list(red.shifts);
    json deltas = json::array();
    for (const auto& [P, d] : red.deltas) deltas.push_back({{"place", P.to_string()}, {"delta", to_string(d)}});
    r.j["deltas"] = deltas;
    r.j["full_split_at_infinity"] = witt_full_split_at_infinity(red);
    if (red.twist > 0) r.line("twist: alpha^(p^" + std::to_string(red.twist) + ")");
    r.line("beta = " + to_string(red.beta));
    for (const auto& [P, d] : red.deltas) r.line("delta at " + P.to_string() + " = " + to_string(d));
    r.line("gamma = " + to_string(red.gamma));
    r.line("theta = " + to_string(red.theta));
    r.emit(out, c.json);
    return kOk;
}

int cmd_witt_subext(const WittArgs& a, const std::string& xi, const std::string& alpha, int n, bool count,
                    const Common& c, std::ostream& out) {
    const Field k0 = a.k0();
    const WittK vxi = a.vec(k0, xi);
    if (!all_constant(vxi)) throw Error(ErrorKind::RingMismatch, "xi must have constant components");
    const WittF fxi = to_constants(vxi);
    for (const auto& comp : fxi.comps)
        if (k0.frob(comp.code(), n) != comp.code()) throw Error(ErrorKind::RingMismatch, "xi is not in W_m(F_q)");
    const CyclicSubextension cs = cyclic_subextension(fxi, a.vec(k0, alpha), n);
    Report r("witt subext");
    r.j["field"] = field_json(k0);
    r.j["xi"] = to_string(fxi);
    r.j["rhs"] = to_string(cs.rhs);
    r.j["full_degree"] = cs.full_degree;
    r.j["generator"] = cs.generator;
    r.line("y_xi = " + cs.generator);
    r.line("wp(y_xi) = " + to_string(cs.rhs));
    r.line(std::string("degree p^m: ") + yes_no(cs.full_degree));
    if (count) {
        const CyclicCount cc = count_cyclic_subextensions(Field::make(k0.p(), n), fxi.length());
        r.j["count"] = {{"by_kernel", cc.by_kernel}, {"by_orbit", cc.by_orbit}, {"formula", cc.formula}};
        r.line("cyclic subextensions of degree p^m: " + std::to_string(cc.by_kernel) + " (orbits " +
               std::to_string(cc.by_orbit) + ", formula " + std::to_string(cc.formula) + ")");
    }
    r.emit(out, c.json);
    return kOk;
}

int cmd_witt_relate(const WittArgs& a, const std::string& alpha, const std::string& beta,
                    const std::vector<std::string>& xis, int n, const Common& c, std::ostream& out) {
    const Field k0 = a.k0();
    std::vector<WittF> targets;
    for (const auto& x : xis) {
        const WittK v = a.vec(k0, x);
        if (!all_constant(v)) throw Error(ErrorKind::RingMismatch, "targets must have constant components");
        targets.push_back(to_constants(v));
    }
    const WittRelation rel = witt_generator_relation({k0, n, a.vec(k0, alpha)}, a.vec(k0, beta), targets);
    Report r("witt relate");
    r.j["field"] = field_json(k0);
    json A = json::array();
    std::vector<std::string> as;
    for (const auto& x : rel.A) {
        A.push_back(to_string(x));
        as.push_back(to_string(x));
    }
    r.j["A"] = A;
    r.j["D"] = to_string(rel.D);
    r.j["moore_det"] = to_string(rel.moore_det);
    r.j["kernel_checked"] = rel.kernel_checked;
    r.line("A = " + join(as, ", "));
    r.line("D = " + to_string(rel.D));
    r.line("det = " + to_string(rel.moore_det));
    r.emit(out, c.json);
    return kOk;
}

int cmd_witt_infty(const WittArgs& a, const std::string& gamma, const Common& c, std::ostream& out) {
    const Field k0 = a.k0();
    const InfinitySplitting sp = witt_infinity_splitting(a.vec(k0, gamma));
    Report r("witt infty");
    r.j["field"] = field_json(k0);
    r.j["gamma"] = gamma;
    r.j["s"] = sp.s;
    r.j["t"] = sp.t;
    r.j["e"] = sp.e;
    r.j["f"] = sp.f;
    r.j["g"] = sp.g;
    r.j["consistent"] = sp.consistent;
    r.line("s=" + std::to_string(sp.s) + " t=" + std::to_string(sp.t));
    r.line("e=" + std::to_string(sp.e) + " f=" + std::to_string(sp.f) + " g=" + std::to_string(sp.g));
    r.emit(out, c.json);
    return sp.consistent ? kOk : kDisagreement;
}

// Verification commands.

int emit_oracle(const std::string& command, const OracleReport& rep, const Common& c, std::ostream& out,
                const std::vector<std::string>& text) {
    Report r(command);
    r.j["report"] = rep.to_json();
    for (const auto& l : text) r.line(l);
    r.line("verdict: " + rep.verdict);
    r.emit(out, c.json);
    return rep.passed() ? kOk : kDisagreement;
}

int cmd_verify_oracle(const SpecArgs& a, const std::string& place, const Common& c, std::ostream& out) {
    const ExtensionSpec spec = a.spec();
    const Place P = parse_place(spec.k0(), place);
    const SplitVerdict v = place_splitting(spec, P, true);
    const SplittingOracle o = splitting_oracle(spec, P);
    bool agree = o.two_valued && ((v.kind == SplitKind::FullySplit) == (o.count == o.roots_expected));
    if (agree && o.inertia_degree > 0) agree = v.inertia_degree == o.inertia_degree;
    OracleReport rep = o.report;
    rep.claim = "place_splitting";
    rep.witness["criterion"] = kind_name(v.kind);
    rep.witness["criterion_inertia_degree"] = v.inertia_degree;
    rep.verdict = agree ? "pass" : "fail";
    return emit_oracle("verify oracle", rep, c, out,
                       {"criterion: " + kind_name(v.kind) + " inertia_degree=" + std::to_string(v.inertia_degree),
                        "oracle: roots=" + std::to_string(o.count) + "/" + std::to_string(o.roots_expected) +
                            " inertia_degree=" + (o.inertia_degree ? std::to_string(o.inertia_degree) : "?")});
}

std::string error_kind(const std::exception& e) {
    if (const auto* ae = dynamic_cast<const Error*>(&e)) return std::string(to_string(ae->kind()));
    return "InvalidArgument";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Artin-Schreier and Artin-Schreier-Witt extensions of F_q(T)", "aspw"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json, "Emit JSON (schema aspw/1)");
    app.add_option("--jobs", common.jobs, "Threads for exhaustive oracle scans")->capture_default_str();
    std::function<int()> action;

    SpecArgs reduce_args;
    bool reduce_twist = false;
    auto* reduce = app.add_subcommand("reduce", "Globally reduced right-hand side");
    reduce_args.add_to(reduce);
    reduce->add_flag("--twist", reduce_twist, "Allow y -> y^(p^j) before shifting");
    reduce->callback([&] { action = [&] { return cmd_reduce(reduce_args, reduce_twist, common, out); }; });

    SpecArgs ramify_args;
    auto* ramify = app.add_subcommand("ramify", "Ramified places with pole shapes");
    ramify_args.add_to(ramify);
    ramify->callback([&] { action = [&] { return cmd_ramify(ramify_args, common, out); }; });

    SpecArgs subext_args;
    bool no_verify = false;
    auto* subext = app.add_subcommand("subext", "Degree-p subextensions, one per hyperplane");
    subext_args.add_to(subext);
    subext->add_flag("--no-verify", no_verify, "Skip the quotient-algebra check");
    subext->callback([&] { action = [&] { return cmd_subext(subext_args, !no_verify, common, out); }; });

    SpecArgs split_args;
    std::string split_place;
    auto* split = app.add_subcommand("split", "Decomposition type (e, f, g) at a place");
    split_args.add_to(split);
    split->add_option("--place", split_place, "inf or a monic irreducible in T")->required();
    split->callback([&] { action = [&] { return cmd_split(split_args, split_place, common, out); }; });

    SpecArgs relate_args;
    std::string relate_z;
    std::vector<std::string> relate_target;
    auto* relate = app.add_subcommand("relate", "Express a generator of a subfield through y");
    relate_args.add_to(relate);
    relate->add_option("--z", relate_z, "Y-coefficients [c0;c1;...]; default: the twisted normal form");
    relate->add_option("--target", relate_target, "Root-group elements spanning the fixing subgroup");
    relate->callback([&] { action = [&] { return cmd_relate(relate_args, relate_z, relate_target, common, out); }; });

    std::string comb_field = "p=2,s=1";
    std::vector<std::string> comb_gammas, comb_mu;
    std::string comb_place = "inf";
    auto* combine = app.add_subcommand("combine", "Join degree-p extensions into one generator");
    combine->add_option("--field", comb_field, "Constant field")->capture_default_str();
    combine->add_option("--gamma", comb_gammas, "Right-hand sides of z_i^p - z_i (repeat)")->required();
    combine->add_option("--mu", comb_mu, "F_p-basis of the root group (repeat)")->required();
    combine->add_option("--place", comb_place, "Place for the decomposition type")->capture_default_str();
    combine->callback([&] {
        action = [&] { return cmd_combine(comb_field, comb_gammas, comb_mu, comb_place, common, out); };
    });

    auto* witt = app.add_subcommand("witt", "Witt vector arithmetic and extensions");
    witt->require_subcommand(1);
    WittArgs wa;
    std::string wx, wy, walpha, wbeta, wxi, wgamma;
    std::vector<std::string> wxis;
    int wn = 1;
    bool wtwist = false, wcount = false;
    std::string wpower = "p";
    for (const char* op : {"add", "sub", "mul"}) {
        auto* sc = witt->add_subcommand(op, std::string("Witt ") + op);
        wa.add_to(sc);
        sc->add_option("x", wx, "First vector [c1;c2;...]")->required();
        sc->add_option("y", wy, "Second vector")->required();
        const std::string name = op;
        sc->callback([&, name] { action = [&, name] { return cmd_witt_binary(name, wa, wx, wy, common, out); }; });
    }
    auto* wwp = witt->add_subcommand("wp", "x^p - x, or x^q - x with --power q");
    wa.add_to(wwp);
    wwp->add_option("x", wx, "Vector")->required();
    wwp->add_option("--power", wpower, "p or q")->check(CLI::IsMember({"p", "q"}))->capture_default_str();
    wwp->add_option("--n", wn, "q = p^n")->capture_default_str();
    wwp->callback([&] { action = [&] { return cmd_witt_wp(wa, wx, wpower == "q" ? wn : 1, common, out); }; });
    auto* wred = witt->add_subcommand("reduce", "Reduced form of alpha for y^q - y = alpha");
    wa.add_to(wred);
    wred->add_option("--alpha", walpha, "Vector over k0(T)")->required();
    wred->add_option("--n", wn, "q = p^n")->capture_default_str();
    wred->add_flag("--twist", wtwist, "Allow a Frobenius twist first");
    wred->callback([&] { action = [&] { return cmd_witt_reduce(wa, walpha, wn, wtwist, common, out); }; });
    auto* wsub = witt->add_subcommand("subext", "Cyclic subextension for a scalar xi");
    wa.add_to(wsub);
    wsub->add_option("--xi", wxi, "Vector in W_m(F_q)")->required();
    wsub->add_option("--alpha", walpha, "Vector over k0(T)")->required();
    wsub->add_option("--n", wn, "q = p^n")->capture_default_str();
    wsub->add_flag("--count", wcount, "Also count cyclic subextensions of degree p^m");
    wsub->callback([&] { action = [&] { return cmd_witt_subext(wa, wxi, walpha, wn, wcount, common, out); }; });
    auto* wrel = witt->add_subcommand("relate", "A_i and D with beta = R(alpha) + D^q - D");
    wa.add_to(wrel);
    wrel->add_option("--alpha", walpha, "Vector for y")->required();
    wrel->add_option("--beta", wbeta, "Vector for z")->required();
    wrel->add_option("--xi", wxis, "Targets R(mu_i) (repeat n times)")->required();
    wrel->add_option("--n", wn, "q = p^n")->capture_default_str();
    wrel->callback([&] { action = [&] { return cmd_witt_relate(wa, walpha, wbeta, wxis, wn, common, out); }; });
    auto* winf = witt->add_subcommand("infty", "(e, f, g) at infinity, cyclic case");
    wa.add_to(winf);
    winf->add_option("--gamma", wgamma, "Reduced polynomial part")->required();
    winf->callback([&] { action = [&] { return cmd_witt_infty(wa, wgamma, common, out); }; });

    auto* verify = app.add_subcommand("verify", "Exhaustive and sampled oracles");
    verify->require_subcommand(1);
    long long vq = 4;
    int vm = 2;
    auto* vl = verify->add_subcommand("lemma62", "Images of x^q - x against wp");
    vl->add_option("--q", vq, "q")->capture_default_str();
    vl->add_option("--m", vm, "Degree of F_(q^m) over F_q")->capture_default_str();
    vl->callback([&] {
        action = [&] {
            const Lemma62Result res = verify_lemma_62(vq, vm, common.jobs);
            return emit_oracle("verify lemma62", res.report, common, out, {});
        };
    });
    std::string ve_field = "p=2,s=4", ve_f = "X^4-X";
    auto* ve = verify->add_subcommand("eqstar", "Intersection of wp_(a_i) images against im f");
    ve->add_option("--field", ve_field, "Constant field")->capture_default_str();
    ve->add_option("--f", ve_f, "Additive polynomial")->capture_default_str();
    ve->callback([&] {
        action = [&] {
            const Field k0 = parse_field(ve_field);
            const EqStarResult res = verify_eq_star(parse_additive(k0, ve_f), common.jobs);
            return emit_oracle("verify eqstar", res.report, common, out,
                               {"|im f|=" + std::to_string(res.image_f) +
                                " |intersection|=" + std::to_string(res.intersection)});
        };
    });
    AxiomOptions ax;
    bool ax_ratfunc = false;
    auto* va = verify->add_subcommand("axioms", "Witt ring axioms");
    va->add_option("--p", ax.p, "Characteristic")->capture_default_str();
    va->add_option("--s", ax.s, "Field degree")->capture_default_str();
    va->add_option("--m", ax.m, "Witt length")->capture_default_str();
    va->add_flag("--ratfunc", ax_ratfunc, "Sample over F_q(T) instead of F_q");
    va->add_option("--samples", ax.samples, "Sample count")->capture_default_str();
    va->add_option("--seed", ax.seed, "Sampler seed")->capture_default_str();
    va->add_option("--degree", ax.max_degree, "Numerator degree bound for F_q(T)")->capture_default_str();
    va->callback([&] {
        action = [&] {
            ax.ring = ax_ratfunc ? AxiomRing::RationalFunctions : AxiomRing::FiniteField;
            const AxiomResult res = witt_axiom_sampler(ax);
            return emit_oracle("verify axioms", res.report, common, out,
                               {"checks=" + std::to_string(res.checks) + " failures=" + std::to_string(res.failures)});
        };
    });
    SpecArgs vo_args;
    std::string vo_place;
    auto* vo = verify->add_subcommand("oracle", "Hyperplane splitting test against a root count");
    vo_args.add_to(vo);
    vo->add_option("--place", vo_place, "Unramified place")->required();
    vo->callback([&] { action = [&] { return cmd_verify_oracle(vo_args, vo_place, common, out); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }
    try {
        return action ? action() : kInputError;
    } catch (const std::exception& e) {
        if (common.json) {
            json j{{"schema", kSchema}, {"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
            out << j.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace aspw::cli
