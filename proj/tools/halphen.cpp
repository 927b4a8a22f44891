/*
   Copyright 2026 The Halphen Library Authors

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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <halphen/checks.hpp>

using namespace halphen;

namespace {

Json load_json(const std::string& input) {
    // a leading '{' means inline JSON, anything else is a path
    std::string text;
    if (!input.empty() && input[0] == '{') {
        text = input;
    } else {
        std::ifstream in(input);
        if (!in) throw Error("BAD_INPUT", "cannot open input file: " + input);
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw Error("BAD_INPUT", std::string("invalid JSON: ") + e.what());
    }
}

// Working precision: --precision beats HALPHEN_PRECISION beats n+8; inputs
// are truncated down to it, never extended.
int working_precision(int n, int override_precision) {
    if (override_precision > 0) return override_precision;
    if (const char* env = std::getenv("HALPHEN_PRECISION")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return n + 8;
}

Arc load_arc(const std::string& input, int override_precision) {
    Arc a = arc_from_json(load_json(input));
    int target = working_precision(a.n(), override_precision);
    return target < a.precision() ? a.truncated(target) : a;
}

DiffOperator load_ode(const std::string& input, int override_precision) {
    DiffOperator l = ode_from_json(load_json(input));
    int target = working_precision(l.order() - 1, override_precision);
    if (target < l.precision()) {
        std::vector<TruncSeries> c;
        for (int i = 1; i <= l.order(); ++i) c.push_back(l.coeff(i).truncated(target));
        return DiffOperator(std::move(c));
    }
    return l;
}

void emit(const Json& j, const std::string& format) {
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // text mode: flat key rendering
    std::function<void(const Json&, const std::string&)> walk =
        [&](const Json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (node.is_array() && !node.empty() && !node.front().is_primitive()) {
                for (std::size_t k = 0; k < node.size(); ++k)
                    walk(node[k], prefix + "[" + std::to_string(k) + "]");
            } else {
                std::cout << prefix << ": " << node.dump() << "\n";
            }
        };
    walk(j, "");
}

Json halphen_p_json(const DiffOperator& l) {
    Json p = Json::array();
    for (int i = 1; i <= l.order(); ++i) p.push_back(series_to_json(l.halphen_p(i)));
    return p;
}

int run_invariants(const std::string& input, const std::vector<std::string>& exprs,
                   int override_precision, int weight_bound, const std::string& format) {
    Arc a = load_arc(input, override_precision);
    int n = a.n();
    Json out;
    out["n"] = n;
    out["precision"] = a.precision();
    out["wronskian"] = to_string(wronskian(a));
    try {
        GapSequence g = gap_sequence(a);
        Json gj;
        gj["indices"] = g.indices;
        gj["gaps"] = g.gaps;
        gj["total"] = g.total;
        out["gap_sequence"] = std::move(gj);
    } catch (const Error& e) {
        out["gap_sequence"] = Json{{"error", e.code()}};
    }

    // U_lambda table up to the weight bound, precision permitting
    Json table = Json::array();
    {
        Json row;
        row["partition"] = "U";
        row["weight"] = 0;
        row["value"] = to_string(wronskian(a));
        table.push_back(std::move(row));
    }
    std::function<void(std::vector<int>&, int)> emit_partitions = [&](std::vector<int>& parts,
                                                                      int max_next) {
        if (!parts.empty()) {
            Partition lambda(parts);
            if (lambda.length() <= n + 1 && lambda.largest() + n + 1 <= a.precision()) {
                Json row;
                row["partition"] = lambda.token();
                row["weight"] = lambda.weight();
                row["value"] = to_string(u_lambda(a, lambda));
                table.push_back(std::move(row));
            }
        }
        int used = 0;
        for (int v : parts) used += v;
        int last = parts.empty() ? weight_bound : parts.back();
        for (int next = 1; next <= std::min({max_next, last, weight_bound - used}); ++next) {
            parts.push_back(next);
            emit_partitions(parts, max_next);
            parts.pop_back();
        }
    };
    std::vector<int> parts;
    emit_partitions(parts, weight_bound);
    out["u_table"] = std::move(table);

    if (n >= 2 && a.precision() >= n + 4) out["monge"] = to_string(monge_formula(a));

    Json evals = Json::array();
    for (const std::string& text : exprs) {
        InvariantPoly poly = parse_invariant(text, n);
        Json row;
        row["expr"] = text;
        row["reduced_degree"] = poly.reduced_degree();
        row["reduced_weight"] = poly.reduced_weight();
        row["value"] = to_string(poly.eval(a));
        evals.push_back(std::move(row));
    }
    if (!exprs.empty()) out["expressions"] = std::move(evals);
    emit(out, format);
    return 0;
}

int run_check(std::uint64_t seed, int samples, bool corrupt, const std::string& format) {
    CheckReport rep = run_checks(seed, samples, corrupt);
    Json out;
    out["seed"] = seed;
    out["samples"] = samples;
    Json suites = Json::array();
    for (const SuiteResult& s : rep.suites) {
        Json row;
        row["suite"] = s.name;
        row["samples"] = s.samples;
        row["passed"] = s.passed;
        if (!s.note.empty()) row["note"] = s.note;
        suites.push_back(std::move(row));
    }
    out["suites"] = std::move(suites);
    Json comp;
    comp["adjoint_qi"] = rep.qi.note;
    comp["bilinear_B"] = rep.bilinear.note;
    comp["involution"] = rep.involution.note;
    comp["involution_matches_printed"] = rep.involution.matches_printed;
    comp["printed_squares_to_identity"] = rep.involution.printed_squares_to_identity;
    out["comparators"] = std::move(comp);
    out["iota_projection"] = rep.iota_note;
    out["all_passed"] = rep.all_passed();
    emit(out, format);
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"halphen — exact differential invariants of formal arcs in projective space"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("-f,--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    int precision_override = 0;

    std::string input;
    std::vector<std::string> exprs;
    int weight_bound = 3;

    auto* inv = app.add_subcommand("invariants", "U_lambda table, gaps and expression values");
    inv->add_option("-i,--input", input, "arc JSON (path or inline)")->required();
    inv->add_option("-e,--expr", exprs, "invariant expression, repeatable");
    inv->add_option("--max-weight", weight_bound, "partition weight bound for the table");
    inv->add_option("--precision", precision_override, "working precision override");

    std::string ode_direction;
    auto* ode = app.add_subcommand("ode", "arc/ODE dictionary, Gram matrix, Liouville form");
    ode->add_option("-i,--input", input, "arc or ODE JSON (path or inline)")->required();
    ode->add_flag_callback("--to-arc", [&] { ode_direction = "to-arc"; },
                           "solve the operator into its fundamental arc");
    ode->add_flag_callback("--to-ode", [&] { ode_direction = "to-ode"; },
                           "associated operator of an arc");
    ode->add_flag_callback("--gram", [&] { ode_direction = "gram"; },
                           "Gram matrix of the duality pairing");
    ode->add_flag_callback("--liouville", [&] { ode_direction = "liouville"; },
                           "kill the sub-leading Halphen coefficient");
    ode->add_option("--precision", precision_override, "working precision override");

    auto* adj = app.add_subcommand("adjoint", "formal adjoint of an operator");
    adj->add_option("-i,--input", input, "ODE JSON (path or inline)")->required();
    adj->add_option("--precision", precision_override, "working precision override");

    std::string slice = "b";
    bool approx = false;
    auto* canon = app.add_subcommand("canonical", "slice normal forms");
    canon->add_option("-i,--input", input, "arc JSON (path or inline)")->required();
    canon->add_option("--slice", slice, "which slice")->check(CLI::IsMember({"b", "mu3"}));
    canon->add_flag("--approx", approx,
                    "complete an inexact mu3 scaling numerically (doubles)");
    canon->add_option("--precision", precision_override, "working precision override");

    auto* monge = app.add_subcommand("monge", "Monge invariant and membership");
    monge->add_option("-i,--input", input, "arc JSON (path or inline)")->required();
    monge->add_option("--precision", precision_override, "working precision override");

    std::uint64_t seed = 42;
    int samples = 100;
    bool corrupt = false;
    auto* check = app.add_subcommand("check", "run the property suites");
    check->add_option("--seed", seed, "PRNG seed");
    check->add_option("--samples", samples, "instances per suite");
    check->add_flag("--self-test-corrupt", corrupt,
                    "corrupt a frozen constant to verify the harness fails");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed())
            return run_invariants(input, exprs, precision_override, weight_bound, format);
        if (ode->parsed()) {
            if (ode_direction.empty())
                throw Error("BAD_USAGE", "pick one of --to-arc, --to-ode, --gram, --liouville");
            Json out;
            if (ode_direction == "to-ode") {
                DiffOperator l = arc_to_ode(load_arc(input, precision_override));
                out["ode"] = ode_to_json(l);
                out["halphen_p"] = halphen_p_json(l);
            } else {
                DiffOperator l = load_ode(input, precision_override);
                if (ode_direction == "to-arc") {
                    out["arc"] = arc_to_json(ode_to_arc(l));
                } else if (ode_direction == "gram") {
                    GramMatrix g = gram_matrix(l);
                    out["gram"] = matrix_to_json(g.matrix);
                    out["det"] = to_string(g.det);
                    out["nondegenerate"] = (g.det != 0);
                } else {
                    auto [lt, phi] = liouville_normalize(l);
                    out["ode"] = ode_to_json(lt);
                    out["halphen_p"] = halphen_p_json(lt);
                    out["multiplier"] = series_to_json(phi);
                }
            }
            emit(out, format);
            return 0;
        }
        if (adj->parsed()) {
            DiffOperator l = adjoint(load_ode(input, precision_override));
            Json out;
            out["adjoint"] = ode_to_json(l);
            out["halphen_p"] = halphen_p_json(l);
            emit(out, format);
            return 0;
        }
        if (canon->parsed()) {
            Arc a = load_arc(input, precision_override);
            Json out;
            if (slice == "b") {
                out["canonical_b"] = form_b_to_json(normalize_to_B(a));
            } else {
                CanonicalFormMu3 f = normalize_to_mu3(a);
                out["canonical_mu3"] = form_mu3_to_json(f);
                if (!f.exact && approx)
                    out["canonical_mu3"]["approx_coords"] = mu3_scaling_approx(f);
            }
            emit(out, format);
            return 0;
        }
        if (monge->parsed()) {
            Arc a = load_arc(input, precision_override);
            Json out;
            Rational value = monge_formula(a);
            out["monge"] = to_string(value);
            out["member"] = (value == 0);
            out["member_geometric"] = monge_member_geometric(a);
            emit(out, format);
            return 0;
        }
        if (check->parsed()) return run_check(seed, samples, corrupt, format);
    } catch (const Error& e) {
        Json err;
        err["error"]["code"] = e.code();
        err["error"]["message"] = e.what();
        emit(err, format);
        return 1;
    } catch (const std::exception& e) {
        Json err;
        err["error"]["code"] = "INTERNAL";
        err["error"]["message"] = e.what();
        emit(err, format);
        return 1;
    }
    return 0;
}
