// Copyright 2026 The agqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "agqc/asymptotics.h"
#include "agqc/css.h"
#include "agqc/expand.h"
#include "agqc/minweight.h"
#include "agqc/riemann_roch.h"
#include "agqc/tables.h"
#include "json.hpp"
#include "verify.h"

namespace {

using nlohmann::json;
using namespace agqc;

struct Output {
    bool json = false;
    bool csv = false;
};

std::string fixed(double v, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string optional_int(const std::optional<std::int64_t> &v) {
    if (!v) return "";
    if (*v == kInfiniteWeight) return "inf";
    return std::to_string(*v);
}

json optional_json(const std::optional<std::int64_t> &v) {
    if (!v) return nullptr;
    if (*v == kInfiniteWeight) return "inf";
    return *v;
}

void load_config(const std::string &path, SearchOptions &opts) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw Error(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "budget")
                opts.budget = std::stoull(value);
            else if (key == "workers")
                opts.workers = static_cast<unsigned>(std::stoul(value));
            else
                throw Error(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        } catch (const std::logic_error &) {
            throw Error(path + ":" + std::to_string(lineno) + ": bad value for " + key);
        }
    }
}

json code_json(const LinearCode &c) {
    json j{{"n", c.length()},
           {"k", c.dimension()},
           {"q", c.field().order()},
           {"designed_d", optional_json(c.designed_distance)}};
    if (c.exact_distance) j["exact_d"] = optional_json(c.exact_distance);
    const auto &p = c.provenance();
    if (!p.curve.empty())
        j["provenance"] = {{"curve", p.curve}, {"D", p.d_description}, {"G", p.g_description},
                           {"code", p.dual ? "C_Omega" : "C_L"}};
    return j;
}

json params_json(const QuantumParams &p) {
    return json{{"n", p.n},
                {"k", p.k},
                {"d_lb", optional_json(p.d_lb)},
                {"d_exact", optional_json(p.d_exact)},
                {"q", p.q},
                {"SD", optional_json(p.singleton_defect())}};
}

std::string sd_text(const QuantumParams &p) {
    const auto sd = p.singleton_defect();
    if (!sd) return "";
    return (p.d_exact ? "SD=" : "SD<=") + std::to_string(*sd);
}

void print_matrix(const Matrix &m) { std::cout << m.to_csv(); }

int cmd_field(std::uint64_t p, std::uint32_t k, const Output &out) {
    const Field f = Field::make(p, k);
    std::ostringstream mod;
    const auto coeffs = f.modulus();
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (!coeffs[i]) continue;
        if (!first) mod << " + ";
        first = false;
        if (coeffs[i] != 1 || i == 0) mod << coeffs[i];
        if (i > 0) mod << (coeffs[i] != 1 ? "*" : "") << "w" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (out.json) {
        std::cout << json{{"name", f.name()},
                          {"p", f.characteristic()},
                          {"k", f.degree()},
                          {"order", f.order()},
                          {"modulus", std::vector<std::uint32_t>(coeffs.begin(), coeffs.end())},
                          {"primitive", f.format(f.primitive())}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << f.name() << " = F_" << p << "[w]/(" << mod.str() << ")\n";
    std::cout << "order " << f.order() << ", primitive element " << f.format(f.primitive()) << "\n";
    return 0;
}

int cmd_curve(std::uint32_t q, std::uint32_t m, bool list, bool deg2, const Output &out) {
    const Curve c = Curve::make(q, m);
    const auto &places = c.rational_places();
    if (out.json) {
        json j{{"curve", c.describe()}, {"q", q}, {"m", m}, {"genus", c.genus()}, {"N", c.rational_place_count()}};
        if (list) {
            j["places"] = json::array();
            for (const auto &p : places) j["places"].push_back(p.to_string());
        }
        if (deg2) j["degree2_place"] = c.find_degree2_place().to_string();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << c.describe() << "\n";
    std::cout << "genus " << c.genus() << ", " << c.rational_place_count() << " rational places\n";
    if (list)
        for (std::size_t i = 0; i < places.size(); ++i) std::cout << "P" << i + 1 << " " << places[i].to_string() << "\n";
    if (deg2) std::cout << "degree-2 place " << c.find_degree2_place().to_string() << "\n";
    return 0;
}

int cmd_rrspace(std::uint32_t q, std::uint32_t m, const std::string &divisor, const Output &out) {
    const Curve c = Curve::make(q, m);
    const Divisor g = parse_divisor(c, divisor);
    const auto basis = rr_space(c, g);
    if (out.json) {
        json fns = json::array();
        for (const auto &f : basis) {
            json num = json::array();
            for (std::size_t i = 0; i < f.monomials.size(); ++i)
                if (f.numerator[i])
                    num.push_back({{"i", f.monomials[i].x_exp}, {"j", f.monomials[i].y_exp},
                                   {"c", f.field.format(f.numerator[i])}});
            json den = json::array();
            for (auto d : f.denominator) den.push_back(f.field.format(d));
            fns.push_back({{"numerator", num}, {"denominator", den}});
        }
        std::cout << json{{"G", g.to_string()}, {"degree", g.degree()}, {"dimension", basis.size()}, {"basis", fns}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "L(" << g.to_string() << ") on " << c.describe() << "\n";
    for (const auto &f : basis) std::cout << "  " << f.to_string() << "\n";
    std::cout << "dimension " << basis.size() << "\n";
    return 0;
}

LinearCode build_code(const Curve &c, const std::string &divisor, bool dual) {
    const LinearCode code = evaluation_code(c, parse_divisor(c, divisor));
    return dual ? omega_code(code) : code;
}

int cmd_build(std::uint32_t q, std::uint32_t m, const std::string &divisor, bool dual, bool matrix, bool certify,
              const SearchOptions &opts, const Output &out) {
    const Curve c = Curve::make(q, m);
    LinearCode code = build_code(c, divisor, dual);
    if (certify) {
        const auto b = bz_min_weight(code, opts);
        if (b.exact()) code.exact_distance = b.upper;
    }
    if (out.json) {
        json j = code_json(code);
        if (matrix) j["generator"] = code.generator().to_csv();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (out.csv) {
        print_matrix(code.generator());
        return 0;
    }
    std::cout << code.summary() << "  " << (dual ? "C_Omega" : "C_L") << "(D, " << code.provenance().g_description
              << ") on " << code.provenance().curve << "\n";
    if (matrix) print_matrix(code.generator());
    return 0;
}

int cmd_css(std::uint32_t q, std::uint32_t m, const std::vector<std::int64_t> &a, const std::vector<std::int64_t> &b,
            std::int64_t t1, std::int64_t t2, bool build, bool matrix, const Output &out) {
    const Curve c = Curve::make(q, m);
    const bool degree2 = t1 >= 0 || t2 >= 0;
    if (degree2 && (t1 < 0 || t2 < 0)) throw Error("--t1 and --t2 go together");
    if (!degree2 && (a.empty() || b.empty())) throw Error("give --a/--b or --t1/--t2");
    QuantumParams params;
    std::optional<CssCode> code;
    if (degree2) {
        const std::int64_t av[] = {t1}, bv[] = {t2}, deg[] = {2};
        params = non_rational_params(c.rational_place_count(), c.genus(), c.base_field().order(), av, bv, deg);
        if (build) code = hyperelliptic_build(c, t1, t2);
    } else {
        params = t_point_params(c, a, b);
        if (build) code = t_point_build(c, a, b);
    }
    if (out.json) {
        json j = params_json(params);
        if (code) j["matrix_k"] = code->params.k;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (out.csv) {
        std::cout << "n,k,d_lb,q,SD\n"
                  << params.n << "," << params.k << "," << optional_int(params.d_lb) << "," << params.q << ","
                  << optional_int(params.singleton_defect()) << "\n";
        return 0;
    }
    std::cout << params.to_string() << "  " << sd_text(params) << "\n";
    if (code) {
        std::cout << "# X-type rows generate C1, Z-type rows generate C2^perp\n";
        std::cout << "built: C1 = " << code->c1.summary() << ", C2 = " << code->c2.summary()
                  << ", matrix k = " << code->params.k << ", stabilizers commute\n";
        if (matrix) {
            std::cout << "H_X\n";
            print_matrix(code->stabilizers.h_x);
            std::cout << "H_Z\n";
            print_matrix(code->stabilizers.h_z);
        }
    }
    return 0;
}

int cmd_certify(std::uint32_t q, std::uint32_t m, const std::string &divisor, bool dual,
                const std::vector<std::int64_t> &a, const std::vector<std::int64_t> &b, const SearchOptions &opts,
                const Output &out) {
    const Curve c = Curve::make(q, m);
    if (!divisor.empty()) {
        const LinearCode code = build_code(c, divisor, dual);
        const WeightBracket w = bz_min_weight(code, opts);
        const bool consistent = !code.designed_distance || w.lower >= *code.designed_distance ||
                                w.upper >= *code.designed_distance;
        if (out.json) {
            std::cout << json{{"code", code_json(code)},
                              {"lower", optional_json(w.lower)},
                              {"upper", optional_json(w.upper)},
                              {"exact", w.exact()},
                              {"candidates", w.candidates}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << code.summary() << "  minimum weight " << w.to_string() << (w.exact() ? " (exact)" : " (bracket)")
                      << ", " << w.candidates << " candidates\n";
        }
        if (!consistent) throw InternalError("minimum weight below the designed distance");
        return 0;
    }
    if (a.empty() || b.empty()) throw Error("give --divisor or --a/--b");
    const CssCode code = t_point_build(c, a, b);
    const CssDistance d = css_distance(code.c1, code.c2, opts);
    QuantumParams params = code.params;
    if (d.exact()) params.d_exact = d.upper();
    if (out.json) {
        json j = params_json(params);
        j["x_side"] = {{"lower", optional_json(d.x_side.lower)}, {"upper", optional_json(d.x_side.upper)}};
        j["z_side"] = {{"lower", optional_json(d.z_side.lower)}, {"upper", optional_json(d.z_side.upper)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << params.to_string() << "  designed d>=" << optional_int(code.params.d_lb) << "\n";
        std::cout << "  C2 \\ C1:           " << d.x_side.to_string() << "\n";
        std::cout << "  C1^perp \\ C2^perp: " << d.z_side.to_string() << "\n";
    }
    if (code.params.d_lb && d.upper() < *code.params.d_lb)
        throw InternalError("CSS distance below the designed bound");
    return 0;
}

int cmd_tables(int which, bool formula_only, const Output &out) {
    const auto rows = reproduce_table(which, !formula_only);
    bool all = true;
    if (out.json) {
        json arr = json::array();
        for (const auto &r : rows) {
            json j = params_json(r.computed);
            j["inputs"] = r.inputs();
            j["reference"] = {{"n", r.fixture.n}, {"k", r.fixture.k}, {"d_lb", r.fixture.d}, {"q", r.fixture.field}};
            j["matrix_k"] = optional_json(r.matrix_k);
            j["match"] = r.match;
            arr.push_back(j);
            all = all && r.match;
        }
        std::cout << arr.dump(2) << "\n";
    } else if (out.csv) {
        std::cout << "inputs,n,k,d_lb,q,SD,ref_n,ref_k,ref_d,matrix_k,status\n";
        for (const auto &r : rows) {
            std::cout << r.inputs() << "," << r.computed.n << "," << r.computed.k << ","
                      << optional_int(r.computed.d_lb) << "," << r.computed.q << ","
                      << optional_int(r.computed.singleton_defect()) << "," << r.fixture.n << "," << r.fixture.k << ","
                      << r.fixture.d << "," << optional_int(r.matrix_k) << "," << (r.match ? "MATCH" : "MISMATCH")
                      << "\n";
            all = all && r.match;
        }
    } else {
        std::printf("%-28s %-24s %-24s %-6s %-9s %s\n", "inputs", "reference", "computed", "SD", "matrix k", "status");
        for (const auto &r : rows) {
            QuantumParams ref;
            ref.n = r.fixture.n;
            ref.k = r.fixture.k;
            ref.d_lb = r.fixture.d;
            ref.q = r.fixture.field;
            std::printf("%-28s %-24s %-24s %-6s %-9s %s\n", r.inputs().c_str(), ref.to_string().c_str(),
                        r.computed.to_string().c_str(), optional_int(r.computed.singleton_defect()).c_str(),
                        r.matrix_k ? std::to_string(*r.matrix_k).c_str() : "-", r.match ? "MATCH" : "MISMATCH");
            all = all && r.match;
        }
    }
    return all ? 0 : 1;
}

int cmd_tower(std::uint64_t q2, int levels, const std::string &c_text, int t, std::uint64_t prime, const Output &out) {
    const auto [p, e] = prime_power_decompose(q2);
    if (e % 2) throw Error(std::to_string(q2) + " is not a square");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e / 2; ++i) q *= p;
    const Rational c = Rational::parse(c_text);
    const Rational edge = window_edge(q);
    if (!(Rational(0) < c && c <= edge))
        throw Error("c = " + c.to_string() + " lies outside the window (0, " + edge.to_string() + "]");
    if (prime && prime != p) throw Error("F_" + std::to_string(prime) + " is not a subfield of F_" + std::to_string(q2));
    if (prime && t != 2) throw Error("--prime uses the two-point schedule");
    const int r = static_cast<int>(e / 2);
    json arr = json::array();
    if (!out.json) {
        std::cout << "# note: d_lb >= proof_bound = (N - K - 2g - t + 1)/2; for t = 2 this is the -1 variant "
                     "(N - K - 2g - 1)/2, the +1 variant (N - K - 2g + 1)/2 is not used\n";
        std::cout << "level,g,N,ratio,n,K,sum_b,d_lb,rate,rel_dist\n";
    }
    for (const auto &lv : gs_tower_metrics(q, levels)) {
        const std::string ratio = lv.ratio ? fixed(lv.ratio->to_double()) : "undefined";
        RateSchedule s;
        try {
            s = prime ? expansion_schedule(lv, c, p, r) : t_point_schedule(lv, c, t);
        } catch (const Error &err) {
            if (out.json)
                arr.push_back({{"level", lv.index}, {"g", lv.genus}, {"N", lv.places}, {"skipped", err.what()}});
            else
                std::cout << "# level " << lv.index << " skipped: " << err.what() << "\n";
            continue;
        }
        if (out.json) {
            arr.push_back({{"level", lv.index},
                           {"g", lv.genus},
                           {"N", lv.places},
                           {"ratio", lv.ratio ? json(lv.ratio->to_string()) : json(nullptr)},
                           {"n", s.n},
                           {"K", s.dimension},
                           {"sum_b", s.sum_b},
                           {"b", s.b},
                           {"a", s.a},
                           {"d_lb", s.d_lb},
                           {"proof_bound", s.proof_bound.to_string()},
                           {"rate", s.rate},
                           {"rel_dist", s.relative_distance}});
            continue;
        }
        std::cout << lv.index << "," << lv.genus << "," << lv.places << "," << ratio << "," << s.n << ","
                  << s.dimension << "," << s.sum_b << "," << s.d_lb << "," << fixed(s.rate) << ","
                  << fixed(s.relative_distance) << "\n";
    }
    if (out.json) {
        const double limit = prime ? limit_prime_relative_distance(p, r, c) : limit_relative_distance(q, c);
        std::cout << json{{"q2", q2}, {"c", c.to_string()}, {"t", t}, {"limit_rel_dist", limit}, {"levels", arr}}.dump(2)
                  << "\n";
    }
    return 0;
}

int cmd_expand(std::uint32_t q, std::uint32_t m, const std::string &divisor, bool dual, bool matrix,
               const Output &out) {
    const Curve c = Curve::make(q, m);
    const LinearCode code = build_code(c, divisor, dual);
    const auto basis = polynomial_basis(code.field());
    const LinearCode expanded = expand_code(code, basis);
    const bool duality = verify_expansion_duality(code, basis);
    if (out.json) {
        json j{{"original", code_json(code)}, {"expanded", code_json(expanded)}, {"duality", duality}};
        if (matrix) j["generator"] = expanded.generator().to_csv();
        std::cout << j.dump(2) << "\n";
    } else if (out.csv) {
        print_matrix(expanded.generator());
    } else {
        std::cout << code.summary() << " -> " << expanded.summary() << "\n";
        std::cout << "[beta(C)]^perp = beta^perp(C^perp): " << (duality ? "yes" : "no") << "\n";
        if (matrix) print_matrix(expanded.generator());
    }
    if (!duality) throw InternalError("expansion duality identity failed");
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"agqc: algebraic-geometry codes and CSS quantum codes"};
    app.require_subcommand(1);
    Output out;
    SearchOptions opts;
    std::string config;
    app.add_flag("--json", out.json, "JSON output");
    app.add_flag("--csv", out.csv, "CSV output");
    app.add_option("--config", config, "key=value file (budget, workers)");
    std::uint64_t budget = 0;
    unsigned workers = 0;
    app.add_option("--budget", budget, "search budget in candidate codewords");
    app.add_option("--workers", workers, "worker threads (0 = all cores)");

    std::uint64_t fp = 0;
    std::uint32_t fk = 1;
    auto *field = app.add_subcommand("field", "finite field data");
    field->add_option("--p", fp, "characteristic")->required();
    field->add_option("--k", fk, "extension degree");

    std::uint32_t q = 0, m = 0;
    auto add_curve = [&](CLI::App *sub) {
        sub->add_option("--q", q, "q (curve over F_{q^2})")->required();
        sub->add_option("--m", m, "m, dividing q + 1")->required();
    };
    bool list = false, deg2 = false;
    auto *curve = app.add_subcommand("curve", "curve y^q + y = x^m");
    add_curve(curve);
    curve->add_flag("--places", list, "list rational places");
    curve->add_flag("--deg2", deg2, "show the first degree-2 place");

    std::string divisor;
    auto *rrs = app.add_subcommand("rrspace", "basis of L(G)");
    add_curve(rrs);
    rrs->add_option("--divisor,-G", divisor, "e.g. 7*inf+3*P5")->required();

    bool dual = false, matrix = false, certify_flag = false;
    auto *build = app.add_subcommand("build", "evaluation code C_L(D, G) or its dual");
    add_curve(build);
    build->add_option("--divisor,-G", divisor, "e.g. 7*inf")->required();
    build->add_flag("--dual", dual, "C_Omega(D, G)");
    build->add_flag("--matrix", matrix, "print the generator matrix");
    build->add_flag("--certify", certify_flag, "compute the exact minimum distance");

    std::vector<std::int64_t> a, b;
    std::int64_t t1 = -1, t2 = -1;
    bool do_build = false;
    auto *css = app.add_subcommand("css", "CSS parameters from nested AG codes");
    add_curve(css);
    css->add_option("--a", a, "coefficients of G1 on the last t rational places")->delimiter(',');
    css->add_option("--b", b, "coefficients of G2")->delimiter(',');
    css->add_option("--t1", t1, "G1 = t1 times the degree-2 place");
    css->add_option("--t2", t2, "G2 = t2 times the degree-2 place");
    css->add_flag("--build", do_build, "construct the stabilizer matrices");
    css->add_flag("--matrix", matrix, "print H_X and H_Z (with --build)");

    auto *cert = app.add_subcommand("certify", "minimum distance of a code or CSS pair");
    add_curve(cert);
    cert->add_option("--divisor,-G", divisor, "classical code C_L(D, G)");
    cert->add_flag("--dual", dual, "use C_Omega(D, G)");
    cert->add_option("--a", a, "CSS pair: G1 coefficients")->delimiter(',');
    cert->add_option("--b", b, "CSS pair: G2 coefficients")->delimiter(',');

    int which = 0;
    bool formula_only = false;
    auto *tables = app.add_subcommand("tables", "reproduce the reference parameter tables");
    tables->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    tables->add_flag("--formula-only", formula_only, "skip the explicit matrix constructions");

    std::uint64_t q2 = 0, prime = 0;
    int levels = 0, t = 2;
    std::string c_text;
    auto *tower = app.add_subcommand("tower", "tower metrics and rate schedules");
    tower->add_option("--q2", q2, "field size q^2")->required();
    tower->add_option("--levels", levels, "number of levels")->required();
    tower->add_option("--c", c_text, "target rate, e.g. 1/10 or 0.1")->required();
    tower->add_option("--t", t, "support size");
    tower->add_option("--prime", prime, "expand to F_p");

    bool to_prime = true;
    auto *expand = app.add_subcommand("expand", "expand a code to the prime field");
    add_curve(expand);
    expand->add_option("--divisor,-G", divisor, "e.g. 7*inf")->required();
    expand->add_flag("--dual", dual, "expand C_Omega(D, G)");
    expand->add_flag("--to-prime", to_prime, "expand down to F_p (the only target)");
    expand->add_flag("--matrix", matrix, "print the expanded generator");

    std::uint64_t seed = 1;
    auto *verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        if (code == 0) return 0;
        std::cerr << app.help();
        return 2;
    }

    try {
        if (!config.empty()) load_config(config, opts);
        if (budget) opts.budget = budget;
        if (workers) opts.workers = workers;
        if (*field) return cmd_field(fp, fk, out);
        if (*curve) return cmd_curve(q, m, list, deg2, out);
        if (*rrs) return cmd_rrspace(q, m, divisor, out);
        if (*build) return cmd_build(q, m, divisor, dual, matrix, certify_flag, opts, out);
        if (*css) return cmd_css(q, m, a, b, t1, t2, do_build, matrix, out);
        if (*cert) return cmd_certify(q, m, divisor, dual, a, b, opts, out);
        if (*tables) return cmd_tables(which, formula_only, out);
        if (*tower) return cmd_tower(q2, levels, c_text, t, prime, out);
        if (*expand) return cmd_expand(q, m, divisor, dual, matrix, out);
        if (*verify) {
            const int failures = agqc::tools::run_verify(std::cout, opts, seed);
            std::cout << (failures ? std::to_string(failures) + " suite(s) failed" : std::string("all suites passed"))
                      << "\n";
            return failures ? 1 : 0;
        }
    } catch (const InternalError &e) {
        std::cerr << "invariant failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
