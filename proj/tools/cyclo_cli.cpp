// Command-line front end: every library operation with exact, machine
// readable output. Rationals are always printed as "num/den"; no floating
// point appears anywhere.

#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/arith.hpp"
#include "cyclo/cp_sets.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/limit_points.hpp"
#include "cyclo/parse.hpp"
#include "cyclo/quadforms.hpp"
#include "cyclo/thue.hpp"
#include "cyclo/trace_height.hpp"

using json = nlohmann::ordered_json;
using namespace cyclo;

namespace {

std::string fmt = "json";

std::string csv_cell(const json& v) {
    if (v.is_array()) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ' ';
            out += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
        }
        return "\"" + out + "\"";
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print_table(const json& rows, std::ostream& os) {
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it)
        keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i)
            os << (i ? "," : "") << csv_cell(row.at(keys[i]));
        os << "\n";
    }
}

// Renders a flat object, or an object holding one array of row objects
// under `table_key`, in the requested format.
void emit(const json& result, const std::string& table_key = "") {
    if (fmt == "json") {
        std::cout << result.dump() << "\n";
        return;
    }
    json rows;
    if (!table_key.empty() && result.contains(table_key)) {
        rows = result.at(table_key);
    } else if (result.is_array()) {
        rows = result;
    } else {
        rows = json::array({result});
    }
    if (fmt == "csv") {
        print_table(rows, std::cout);
        return;
    }
    // text
    for (const auto& row : rows) {
        for (auto it = row.begin(); it != row.end(); ++it)
            std::cout << it.key() << " = " << csv_cell(it.value()) << "\n";
    }
}

json rat_json(const Rat& q) { return rat_string(q); }

json witness_json(const std::vector<std::int64_t>& a) { return json(a); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cassels heights of cyclotomic integers, restricted height sets, "
                 "universal quadratic polynomials, limit-point constructions, Thue labels"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    long long seed = 0;
    app.add_option("--seed", seed, "reserved for randomized test drivers; unused here");

    std::string expr, expr2, rat_arg;
    long long p = 0, s = 0, r = 0, n_arg = 0, conductor = 0;
    int max_terms = 8, count = 10;
    long long factor_bound = 1'000'000;

    auto* c_height = app.add_subcommand("height", "Cassels height of an expression");
    c_height->add_option("expr", expr, "cyclotomic integer, e.g. \"1 - 2*w5^3 + w5\"")->required();

    auto* c_mtrace = app.add_subcommand("mtrace", "exact mean trace of an expression");
    c_mtrace->add_option("expr", expr, "cyclotomic integer")->required();

    auto* c_shift = app.add_subcommand("shift", "smallest i with nonzero mean trace of w^i x");
    c_shift->add_option("expr", expr, "nonzero cyclotomic integer")->required();

    auto* c_minroots = app.add_subcommand("minroots", "bounded upper bound for the minimal "
                                                      "number of roots of unity summing to x");
    c_minroots->add_option("expr", expr, "nonzero cyclotomic integer")->required();
    c_minroots->add_option("--conductor", conductor, "orders of roots divide this")->required();
    c_minroots->add_option("--max-terms", max_terms, "largest sum length tried")
        ->capture_default_str();

    auto* c_cpenum = app.add_subcommand("cp-enum", "restricted height set elements up to a bound");
    c_cpenum->add_option("p", p, "odd prime >= 5")->required();
    std::string bound_str = "4";
    c_cpenum->add_option("--bound", bound_str, "rational bound, e.g. 7/2")->capture_default_str();

    auto* c_cpwit = app.add_subcommand("cp-witness", "constructive witness for (p, s, r)");
    c_cpwit->add_option("p", p)->required();
    c_cpwit->add_option("s", s)->required();
    c_cpwit->add_option("r", r)->required();

    auto* c_cpmem = app.add_subcommand("cp-member", "invert the height formula for a rational");
    c_cpmem->add_option("p", p)->required();
    c_cpmem->add_option("value", rat_arg, "rational, e.g. 7/2")->required();

    auto* c_c3 = app.add_subcommand("c3", "membership and witness for the p = 3 height set");
    c_c3->add_option("N", n_arg, "non-negative integer")->required();
    c_c3->add_option("--factor-bound", factor_bound, "trial division limit")
        ->capture_default_str();

    auto* c_quad = app.add_subcommand("quad", "solve one of the quadratic forms");
    std::string form;
    std::vector<long long> quad_args;
    bool x_odd = false, x_ndiv3 = false;
    c_quad->add_option("form", form, "poly1|poly2|foursq|a4|a3a1|diag")
        ->required()
        ->check(CLI::IsMember({"poly1", "poly2", "foursq", "a4", "a3a1", "diag"}));
    c_quad->add_option("args", quad_args, "m, or d1 d2 d3 t for diag")->required();
    c_quad->add_flag("--x-odd", x_odd, "diag: require x odd");
    c_quad->add_flag("--x-ndiv3", x_ndiv3, "diag: require 3 not dividing x");

    auto* c_limit2 = app.add_subcommand("limit2", "two-term one-sided height sequence");
    std::string side_str = "below";
    c_limit2->add_option("g1", expr, "nonzero cyclotomic integer")->required();
    c_limit2->add_option("g2", expr2, "nonzero cyclotomic integer")->required();
    c_limit2->add_option("--side", side_str, "above|below")
        ->check(CLI::IsMember({"above", "below"}))
        ->capture_default_str();
    c_limit2->add_option("--count", count, "number of steps")->capture_default_str();

    auto* c_limitn = app.add_subcommand("limitn", "multi-term height sequence");
    std::vector<std::string> gamma_exprs;
    c_limitn->add_option("gammas", gamma_exprs, "g0 g1 [g2 ...]")->required()->expected(-1);
    c_limitn->add_option("--count", count, "number of steps")->capture_default_str();

    auto* c_label = app.add_subcommand("label", "Thue-set labels against a built-in oracle");
    std::string oracle_kind;
    long long max_k = 2, depth = 2, breadth = 3;
    std::string value_str;
    c_label->add_option("oracle", oracle_kind, "synthetic|fragment")
        ->required()
        ->check(CLI::IsMember({"synthetic", "fragment"}));
    c_label->add_option("--max-k", max_k, "synthetic: largest first term")->capture_default_str();
    c_label->add_option("--depth", depth, "synthetic: most index terms")->capture_default_str();
    c_label->add_option("--breadth", breadth, "synthetic: largest index magnitude")
        ->capture_default_str();
    c_label->add_option("--value", value_str, "label this rational instead of dumping the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_height) {
            auto rep = cassels_height(parse_cyclotomic(expr));
            emit(json{{"value", rat_json(rep.value)},
                      {"conductor_used", rep.conductor_used},
                      {"term_count", rep.term_count}});
        } else if (*c_mtrace) {
            emit(json{{"value", rat_json(mean_trace(parse_cyclotomic(expr)))}});
        } else if (*c_shift) {
            auto x = parse_cyclotomic(expr);
            auto i = find_nonzero_trace_shift(x);
            Rat tr = mean_trace(mul(CycInt::root_of_unity(x.conductor(), i), x));
            emit(json{{"shift", i}, {"trace", rat_json(tr)}});
        } else if (*c_minroots) {
            auto bound = min_roots_upper(parse_cyclotomic(expr), conductor, max_terms);
            json out{{"conductor", conductor}, {"max_terms", max_terms}};
            out["upper_bound"] = bound ? json(*bound) : json(nullptr);
            emit(out);
        } else if (*c_cpenum) {
            auto elems = cp_enumerate(p, rat_from_string(bound_str), true);
            json rows = json::array();
            for (const auto& e : elems) {
                json row;
                row["p"] = e.p;
                row["s"] = e.s;
                row["r"] = e.r;
                row["value"] = rat_json(e.value);
                row["witness"] = witness_json(e.witness->a);
                rows.push_back(std::move(row));
            }
            emit(rows);
        } else if (*c_cpwit) {
            auto w = cp_witness(p, s, r);
            emit(json{{"a", witness_json(w.a)}, {"value", rat_json(cp_value(p, s, r))}});
        } else if (*c_cpmem) {
            auto sr = cp_membership(p, rat_from_string(rat_arg));
            if (sr)
                emit(json{{"member", true}, {"s", sr->first}, {"r", sr->second}});
            else
                emit(json{{"member", false}});
        } else if (*c_c3) {
            bool member = c3_membership(n_arg, factor_bound);
            json out{{"member", member}};
            if (member) {
                auto w = c3_witness(n_arg, factor_bound);
                out["witness"] = json::array({w->first, w->second});
            }
            emit(out);
        } else if (*c_quad) {
            QuadSolution sol;
            sol.diag = {0, 0, 0};
            if (form == "diag") {
                if (quad_args.size() != 4)
                    throw std::invalid_argument("quad diag needs d1 d2 d3 t");
                sol.form = FormId::diag;
                sol.diag = {quad_args[0], quad_args[1], quad_args[2]};
                sol.target = quad_args[3];
                DiagConstraint constraint;
                if (x_odd)
                    constraint = [](std::int64_t x, std::int64_t, std::int64_t) { return x % 2 != 0; };
                else if (x_ndiv3)
                    constraint = [](std::int64_t x, std::int64_t, std::int64_t) { return x % 3 != 0; };
                auto got = represent_diag(sol.diag[0], sol.diag[1], sol.diag[2], sol.target,
                                          constraint);
                json out{{"form", form},
                         {"d", json(std::vector<long long>{sol.diag.begin(), sol.diag.end()})},
                         {"m", sol.target}};
                if (got) {
                    sol.variables.assign(got->begin(), got->end());
                    out["solution"] = json(sol.variables);
                    out["verified"] = verify_solution(sol);
                } else {
                    out["solution"] = nullptr;
                }
                emit(out);
            } else {
                if (quad_args.size() != 1) throw std::invalid_argument("quad " + form + " needs m");
                std::int64_t m = quad_args[0];
                sol.target = m;
                if (form == "poly1") {
                    sol.form = FormId::poly1;
                    auto a = universal_poly1(m);
                    sol.variables.assign(a.begin(), a.end());
                } else if (form == "poly2") {
                    sol.form = FormId::poly2;
                    auto a = universal_poly2(m);
                    sol.variables.assign(a.begin(), a.end());
                } else if (form == "foursq") {
                    sol.form = FormId::foursq;
                    auto a = four_squares(m);
                    sol.variables.assign(a.begin(), a.end());
                } else if (form == "a4") {
                    sol.form = FormId::a4;
                    auto a = a4_form(m);
                    sol.variables.assign(a.begin(), a.end());
                } else {
                    sol.form = FormId::a3a1;
                    auto a = a3a1_form(m);
                    sol.variables.assign(a.begin(), a.end());
                }
                emit(json{{"form", form},
                          {"m", m},
                          {"solution", json(sol.variables)},
                          {"verified", verify_solution(sol)}});
            }
        } else if (*c_limit2) {
            auto g1 = parse_cyclotomic(expr);
            auto g2 = parse_cyclotomic(expr2);
            Side side = side_str == "above" ? Side::above : Side::below;
            auto steps = two_term_sequence(g1, g2, side, count);
            Rat limit = cassels_height(g1).value + cassels_height(g2).value;
            json rows = json::array();
            for (const auto& st : steps)
                rows.push_back(json{{"ell_star", st.ell_star},
                                    {"doubled", st.doubled},
                                    {"shift", st.shift},
                                    {"height", rat_json(st.height)},
                                    {"error", rat_json(st.cross)},
                                    {"predicted", rat_json(st.predicted_cross)}});
            emit(json{{"limit", rat_json(limit)}, {"side", side_str}, {"steps", rows}}, "steps");
        } else if (*c_limitn) {
            std::vector<CycInt> gs;
            for (const auto& g : gamma_exprs) gs.push_back(parse_cyclotomic(g));
            Rat limit(0);
            for (const auto& g : gs) limit += cassels_height(g).value;
            auto steps = multi_term_limit(gs, count);
            json rows = json::array();
            for (const auto& st : steps)
                rows.push_back(json{{"orders", json(st.orders)},
                                    {"height", rat_json(st.height)},
                                    {"deviation", rat_json(st.deviation)}});
            emit(json{{"limit", rat_json(limit)}, {"steps", rows}}, "steps");
        } else if (*c_label) {
            std::unique_ptr<ThueOracle> oracle;
            const std::map<Rat, ThueLabel>* table = nullptr;
            if (oracle_kind == "synthetic") {
                auto syn = std::make_unique<SyntheticThue>(max_k, depth, breadth);
                table = &syn->points();
                oracle = std::move(syn);
            } else {
                auto fr = std::make_unique<CasselsFragment>();
                table = &fr->points();
                oracle = std::move(fr);
            }
            if (!value_str.empty()) {
                Rat v = rat_from_string(value_str);
                emit(json{{"value", rat_json(v)}, {"label", label(v, *oracle).str()}});
            } else {
                json rows = json::array();
                for (const auto& [v, l] : *table)
                    rows.push_back(json{{"value", rat_json(v)}, {"label", l.str()}});
                emit(rows);
            }
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource bound exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
