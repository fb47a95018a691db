// Command-line surface: evaluation, truth tables, canonical form, identity
// checks, the law suite, the vector-field and character enumerations, the
// cochain-complex engine, and the two-slit demo.
//
// Exit codes: 0 success, 1 check/laws mismatch against the expectation,
// 2 parse or usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <superlogic/superlogic.hpp>

#include "laws_expected.hpp"

namespace {

using namespace superlogic;

constexpr const char* grammar_excerpt =
    "  formula := sum\n"
    "  sum     := clause ('+' clause)*\n"
    "  clause  := term ('|' term)*\n"
    "  term    := factor ('&' factor)*\n"
    "  factor  := '!' factor | 'n' '(' formula ')' | '(' formula ')'\n"
    "           | '0' | '1' | 'n' | atom\n"
    "  atom    := [A-Za-z_][A-Za-z0-9_]*  (\"n\" is reserved)\n";

struct options {
    sum_semantics semantics = sum_semantics::xor_sum;
    sum_semantics char_sum = sum_semantics::xor_sum;
    bool as_json = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

valuation parse_assignments(const std::vector<std::string>& raw) {
    valuation val;
    for (const auto& item : raw) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--assign expects name=value, got \"" + item + "\"");
        std::string name = item.substr(0, eq);
        std::string text = item.substr(eq + 1);
        if (name == "n" || !formula::valid_atom_name(name))
            throw std::invalid_argument("bad atom name in assignment: \"" + name + "\"");
        auto v = parse_value(text);
        if (!v)
            throw std::invalid_argument("bad value \"" + text +
                                        "\" (expected 0, 1, n or 1+n)");
        val[name] = *v;
    }
    return val;
}

int cmd_eval(const options& opt, const std::string& expr,
             const std::vector<std::string>& assigns) {
    formula f = parse(expr);
    valuation val = parse_assignments(assigns);
    super_value result = evaluate(f, val, opt.semantics);
    if (opt.as_json) {
        json j{{"formula", to_string(f)},
               {"semantics", to_string(opt.semantics)},
               {"assignment", val},
               {"value", result}};
        emit(j);
    } else {
        std::cout << to_string(result) << "\n";
    }
    return 0;
}

int cmd_table(const options& opt, const std::string& expr) {
    truth_table t = tabulate(parse(expr), opt.semantics);
    if (opt.as_json) {
        emit(json(t));
        return 0;
    }
    for (const auto& a : t.atoms) std::cout << std::setw(4) << a;
    std::cout << "  | " << expr << "\n";
    for (const auto& [in, out] : t.rows) {
        for (super_value v : in) std::cout << std::setw(4) << to_string(v);
        std::cout << "  | " << to_string(out) << "\n";
    }
    return 0;
}

int cmd_canon(const options& opt, const std::string& expr) {
    canonical_pair c = canonicalize(parse(expr), opt.semantics);
    if (opt.as_json) {
        json j{{"formula", expr},
               {"semantics", to_string(opt.semantics)},
               {"p", to_string(c.p)},
               {"q", to_string(c.q)}};
        emit(j);
    } else {
        std::cout << "P = " << to_string(c.p) << "\n"
                  << "Q = " << to_string(c.q) << "\n";
    }
    return 0;
}

void print_witness(const law_verdict& v) {
    std::cout << "  witness:";
    for (const auto& [name, value] : *v.witness)
        std::cout << " " << name << "=" << to_string(value);
    std::cout << "  lhs=" << to_string(*v.lhs_value)
              << " rhs=" << to_string(*v.rhs_value) << "\n";
}

int cmd_check(const options& opt, const std::string& lhs, const std::string& rhs) {
    law_verdict v = check_identity(parse(lhs), parse(rhs), opt.semantics);
    if (opt.as_json) {
        emit(json(v));
    } else if (v.holds) {
        std::cout << "holds under " << to_string(opt.semantics) << "-sum\n";
    } else {
        std::cout << "fails under " << to_string(opt.semantics) << "-sum\n";
        print_witness(v);
    }
    return v.holds ? 0 : 1;
}

int cmd_laws(const options& opt) {
    law_report report = run_suite(opt.semantics);
    bool matches = failing_names(report) == superlogic_cli::expected_failures(opt.semantics);
    if (opt.as_json) {
        emit(json(report));
    } else {
        for (const auto& e : report.entries) {
            std::cout << (e.holds ? "  ok  " : "  FAIL") << "  " << e.name << "\n";
            if (!e.holds) print_witness(e);
        }
        std::cout << (matches ? "failing set matches the shipped expectation\n"
                              : "failing set DIFFERS from the shipped expectation\n");
    }
    return matches ? 0 : 1;
}

int cmd_chars(const options& opt) {
    auto chars = enumerate_characters(opt.semantics, opt.char_sum);
    if (opt.as_json) {
        json j{{"semantics", to_string(opt.semantics)},
               {"char_sum", to_string(opt.char_sum)},
               {"count", chars.size()},
               {"characters", chars}};
        emit(j);
        return 0;
    }
    std::cout << "characters under semantics=" << to_string(opt.semantics)
              << ", char-sum=" << to_string(opt.char_sum) << ": "
              << chars.size() << " of 16 candidates\n";
    if (chars.empty()) {
        std::cout << "finding: no table satisfies all five clauses in this mode\n";
        return 0;
    }
    for (const auto& chi : chars) {
        std::cout << " ";
        for (super_value v : carrier)
            std::cout << " " << to_string(v) << "->" << (chi(v) ? 1 : 0);
        std::cout << "\n";
    }
    return 0;
}

int cmd_vfields(const options& opt, bool with_closure) {
    auto fields = enumerate_vector_fields(opt.semantics);
    if (opt.as_json) {
        json j{{"semantics", to_string(opt.semantics)},
               {"count", fields.size()},
               {"fields", fields}};
        if (with_closure) j["closure"] = vector_field_closure(opt.semantics);
        emit(j);
        return 0;
    }
    std::cout << "vector fields under semantics=" << to_string(opt.semantics)
              << ": " << fields.size() << " of 256 candidates\n";
    if (fields.empty()) {
        std::cout << "finding: no endomap satisfies the four axioms in this mode\n";
        return 0;
    }
    for (const auto& x : fields) {
        std::cout << " ";
        for (super_value v : carrier)
            std::cout << " " << to_string(v) << "->" << to_string(x(v));
        std::cout << "\n";
    }
    if (with_closure) {
        closure_report closure = vector_field_closure(opt.semantics);
        for (const auto& e : closure.entries)
            std::cout << "  " << to_string(e.op) << "(" << e.x_index
                      << (e.op == field_op::negation
                              ? std::string()
                              : ", " + std::to_string(e.y_index))
                      << ") still a field: " << (e.still_vector_field ? "yes" : "no")
                      << "\n";
    }
    return 0;
}

std::vector<f2_function> parse_generators(const std::string& spec, const options& opt) {
    if (spec == "chars") return enumerate_characters(opt.semantics, opt.char_sum);
    std::vector<f2_function> gens;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t comma = spec.find(',', start);
        std::string item = spec.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.size() != 4 || item.find_first_not_of("01") != std::string::npos)
            throw std::invalid_argument(
                "generator \"" + item + "\" must be 4 bits over {0,1} "
                "(values at 0, 1, n, 1+n), e.g. 0101");
        f2_function f;
        for (std::size_t i = 0; i < 4; ++i) f.bits[i] = item[i] == '1';
        gens.push_back(f);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return gens;
}

int cmd_cohomology(const options& opt, const std::string& complex_file,
                   const std::string& generators, std::size_t max_degree) {
    cochain_complex complex = [&] {
        if (!complex_file.empty()) {
            std::ifstream in(complex_file);
            if (!in) throw std::invalid_argument("cannot open " + complex_file);
            json j = json::parse(in);
            return complex_from_json(j);
        }
        return bar_complex(parse_generators(generators, opt), max_degree);
    }();
    std::vector<std::size_t> betti = betti_numbers(complex);
    if (opt.as_json) {
        json j{{"source", complex_file.empty() ? "generators" : "file"},
               {"dims", complex.dims()},
               {"betti", betti}};
        emit(j);
    } else {
        std::cout << "dims: ";
        for (auto d : complex.dims()) std::cout << d << " ";
        std::cout << "\nbetti:";
        for (auto b : betti) std::cout << " " << b;
        std::cout << "\n";
    }
    return 0;
}

int cmd_two_slit(const options& opt, const two_slit_scenario& s) {
    two_slit_result r = two_slit(s, opt.semantics);
    if (opt.as_json) {
        emit(json(r));
    } else {
        std::cout << "symbolic: P = " << to_string(r.symbolic.p) << "\n"
                  << "          Q = " << to_string(r.symbolic.q) << "\n"
                  << "numeric (interpretation): body = " << r.body_weight
                  << ", interference = " << r.interference_weight << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"superlogic: four-valued logic with a nilpotent element n (n^2 = 0)"};
    app.require_subcommand(1);

    options opt;
    std::string semantics_name = "xor", char_sum_name = "xor";
    app.add_option("--semantics", semantics_name, "same-grade '+' mode: xor | or")
        ->check(CLI::IsMember({"xor", "or"}));
    app.add_option("--char-sum", char_sum_name,
                   "character additivity '+' mode: xor | or")
        ->check(CLI::IsMember({"xor", "or"}));
    app.add_flag("--json", opt.as_json, "emit JSON instead of text");

    std::string expr, lhs, rhs, complex_file, generators = "chars";
    std::vector<std::string> assigns;
    std::size_t max_degree = 2;
    two_slit_scenario scenario;
    bool with_closure = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula under an assignment");
    eval_cmd->fallthrough();
    eval_cmd->add_option("expr", expr, "formula text")->required();
    eval_cmd->add_option("--assign", assigns, "atom assignment name=value (0|1|n|1+n)");

    auto* table_cmd = app.add_subcommand("table", "print the full truth table");
    table_cmd->fallthrough();
    table_cmd->add_option("expr", expr, "formula text (at most 8 atoms)")->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonical P + n(Q) form");
    canon_cmd->fallthrough();
    canon_cmd->add_option("expr", expr, "formula text")->required();

    auto* check_cmd = app.add_subcommand("check", "check two formulas for equivalence");
    check_cmd->fallthrough();
    check_cmd->add_option("lhs", lhs, "left formula")->required();
    check_cmd->add_option("rhs", rhs, "right formula")->required();

    app.add_subcommand("laws", "run the identity suite and compare to the expectation")
        ->fallthrough();

    app.add_subcommand("chars", "enumerate characters (16 candidates)")->fallthrough();

    auto* vfields_cmd = app.add_subcommand("vfields", "enumerate vector fields (256 candidates)");
    vfields_cmd->fallthrough();
    vfields_cmd->add_flag("--closure", with_closure,
                          "also report pointwise combinations of the findings");

    auto* coh_cmd = app.add_subcommand("cohomology", "Betti numbers of a cochain complex");
    coh_cmd->fallthrough();
    auto* file_opt = coh_cmd->add_option("--complex", complex_file,
                                         "JSON file with a user-supplied complex");
    coh_cmd->add_option("--generators", generators,
                        "comma-separated 4-bit tables, or \"chars\"")
        ->excludes(file_opt);
    coh_cmd->add_option("--max-degree", max_degree, "bar complex degree cap (<= 3)");

    auto* demo_cmd = app.add_subcommand("demo", "worked quantum-style demos");
    demo_cmd->fallthrough();
    demo_cmd->require_subcommand(1);
    auto* slit_cmd = demo_cmd->add_subcommand("two-slit", "two-slit interference expansion");
    slit_cmd->fallthrough();
    slit_cmd->add_option("--p1", scenario.p1, "P(part I uses slit 1)")->required();
    slit_cmd->add_option("--p2", scenario.p2, "P(part II uses slit 2)")->required();
    slit_cmd->add_option("--q12", scenario.q12, "first-order leak of part I to slit 2")->required();
    slit_cmd->add_option("--q21", scenario.q21, "first-order leak of part II to slit 1")->required();
    auto* epr_cmd = demo_cmd->add_subcommand("epr", "entanglement demo (not implemented)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    opt.semantics = *parse_semantics(semantics_name);
    opt.char_sum = *parse_semantics(char_sum_name);

    try {
        if (eval_cmd->parsed()) return cmd_eval(opt, expr, assigns);
        if (table_cmd->parsed()) return cmd_table(opt, expr);
        if (canon_cmd->parsed()) return cmd_canon(opt, expr);
        if (check_cmd->parsed()) return cmd_check(opt, lhs, rhs);
        if (app.got_subcommand("laws")) return cmd_laws(opt);
        if (app.got_subcommand("chars")) return cmd_chars(opt);
        if (vfields_cmd->parsed()) return cmd_vfields(opt, with_closure);
        if (coh_cmd->parsed())
            return cmd_cohomology(opt, complex_file, generators, max_degree);
        if (slit_cmd->parsed()) return cmd_two_slit(opt, scenario);
        if (epr_cmd->parsed()) {
            std::cerr << "epr: not implemented. No construction is available for "
                         "entanglement in this model; see the two-slit demo for the "
                         "worked expansion.\n";
            return 1;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\ngrammar:\n" << grammar_excerpt;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
