// Command-line interface. Exit codes: 0 success, 1 domain error (with the
// reason on stderr), 2 usage error. Machine-readable output is written to
// stdout only on exit 0.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ferrers/christoffel.hpp"
#include "ferrers/decompose.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/formulas.hpp"
#include "ferrers/kreweras.hpp"
#include "ferrers/oracle.hpp"
#include "ferrers/verify.hpp"

namespace {

using namespace ferrers;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t node_cap_from_env() {
    const char* raw = std::getenv("FERRERS_NODE_CAP");
    if (raw == nullptr || *raw == '\0') return default_node_cap;
    char* end = nullptr;
    long long cap = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || cap < 1)
        raise(errc::cap_exceeded, std::string("bad FERRERS_NODE_CAP \"") + raw + "\"");
    return cap;
}

Natural count_by_method(const Diagram& d, const std::string& method) {
    if (method == "oracle") return count_contained(d);
    if (method == "alternative") {
        AlternativeDecomposition alt = decompose_alternative(d);
        Integer value = Integer(catalan(alt.staircase)) - alt.subtracted.evaluate_signed();
        if (value < 0) raise(errc::negative_count, value.str());
        return value;
    }
    Natural via_decompose = count(d);
    if (method == "auto" && d.cells() <= 64) {
        Natural via_oracle = count_contained(d);
        if (via_oracle != via_decompose)
            raise(errc::domain_violation, "ORACLE MISMATCH: decompose=" + via_decompose.str() +
                                              " oracle=" + via_oracle.str());
    }
    return via_decompose;
}

void cmd_count(const std::string& diagram_text, const std::string& method) {
    std::cout << count_by_method(parse_diagram(diagram_text), method).str() << "\n";
}

void cmd_poly(const std::string& diagram_text, const std::string& format, bool alternative) {
    Diagram d = parse_diagram(diagram_text);
    if (alternative) {
        AlternativeDecomposition alt = decompose_alternative(d);
        if (format == "json") {
            nlohmann::json out = {{"staircase", alt.staircase},
                                  {"subtracted", alt.subtracted.to_json()}};
            std::cout << out.dump() << "\n";
        } else if (alt.subtracted.is_zero()) {
            std::cout << "C" << alt.staircase << "\n";
        } else {
            std::cout << "C" << alt.staircase << " - (" << alt.subtracted.text() << ")\n";
        }
        return;
    }
    CatalanPolynomial p = decompose(d);
    if (format == "json")
        std::cout << p.to_json().dump() << "\n";
    else
        std::cout << p.text() << "\n";
}

void cmd_christoffel(std::int64_t a, std::int64_t b) {
    Lattice lat(a, b);
    Diagram d = christoffel_diagram(lat);
    nlohmann::json out = {{"diagram", d.rows()},
                          {"word", christoffel_word(lat).letters()},
                          {"cells", christoffel_cell_count(lat).str()}};
    std::cout << out.dump() << "\n";
}

void cmd_formula(const std::string& name, const std::vector<std::int64_t>& args) {
    auto need = [&](std::size_t arity) {
        if (args.size() != arity)
            throw UsageError("formula " + name + " takes " + std::to_string(arity) +
                             " integer argument(s)");
    };
    if (name == "catalan") {
        need(1);
        std::cout << catalan(args[0]).str() << "\n";
    } else if (name == "fuss") {
        need(2);
        std::cout << fuss_catalan(args[0], args[1]).str() << "\n";
    } else if (name == "general") {
        need(2);
        std::cout << general_catalan(args[0], args[1]).str() << "\n";
    } else if (name == "prime") {
        need(2);
        std::cout << dyck_count_prime(args[0], args[1]).str() << "\n";
    } else if (name == "ballot") {
        need(3);
        Ratio q = ballot_general(args[0], args[1], args[2]);
        if (is_integral(q))
            std::cout << numerator(q).str() << "\n";
        else
            std::cout << numerator(q).str() << "/" << denominator(q).str() << "\n";
    } else if (name == "avoidline") {
        need(2);
        std::cout << avoid_line_count(args[0], args[1]).str() << "\n";
    } else if (name == "bizley") {
        need(2);
        std::cout << bizley_count(args[0], args[1]).str() << "\n";
    } else {
        throw UsageError("unknown formula \"" + name +
                         "\" (catalan, fuss, general, prime, ballot, avoidline, bizley)");
    }
}

void cmd_tree(std::int64_t a, std::int64_t b, const std::optional<std::string>& branch_text,
              const std::string& out_format) {
    PosetGraph g = build_poset(Lattice(a, b), node_cap_from_env());
    std::optional<Diagram> highlight;
    if (branch_text) {
        highlight = parse_diagram(*branch_text);
        std::cout << "branch_size=" << branch(g, *highlight).nodes.size() << "\n";
    }
    if (out_format == "json")
        std::cout << to_json(g).dump() << "\n";
    else
        std::cout << to_dot(g, highlight);
}

int cmd_verify(std::int64_t max_cells, std::int64_t max_lattice, bool inject_fault) {
    VerifyOptions options;
    options.max_cells = max_cells;
    options.max_lattice = max_lattice;
    options.inject_fault = inject_fault;
    bool all_passed = true;
    std::int64_t total_checks = 0;
    for (const SuiteResult& suite : run_verification(options)) {
        total_checks += suite.checks;
        if (suite.passed) {
            std::cout << "PASS " << suite.name << " (" << suite.checks << " checks)\n";
        } else {
            all_passed = false;
            std::cout << "FAIL " << suite.name << ": " << suite.counterexample << "\n";
        }
    }
    if (all_passed) {
        std::cout << "PASS (" << total_checks << " checks)\n";
        return 0;
    }
    std::cout << "FAIL\n";
    return 1;
}

void cmd_bench(const std::string& diagram_text, std::int64_t repetitions) {
    Diagram d = parse_diagram(diagram_text);
    using clock = std::chrono::steady_clock;

    auto timed = [&](auto&& body) {
        auto start = clock::now();
        for (std::int64_t i = 0; i < repetitions; ++i) body();
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
        return ns.count();
    };

    nlohmann::json out = {{"diagram", d.bracket()}, {"repetitions", repetitions}};
    for (bool memoize : {true, false}) {
        DecomposeStats stats;
        DecomposeOptions options{memoize, &stats};
        Natural value;
        auto total_ns = timed([&] {
            stats = DecomposeStats{};
            value = evaluate(decompose(d, options));
        });
        out[memoize ? "decompose_memoized" : "decompose_unmemoized"] = {
            {"value", value.str()},
            {"splits", stats.splits},
            {"total_ns", total_ns},
            {"mean_ns", total_ns / repetitions}};
    }
    {
        Natural value;
        auto total_ns = timed([&] { value = count_contained(d); });
        out["oracle_dp"] = {{"value", value.str()},
                            {"total_ns", total_ns},
                            {"mean_ns", total_ns / repetitions}};
    }
    std::cout << out.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Dyck-path counts under Ferrers diagrams"};
    app.require_subcommand(1);

    std::string diagram_text;
    std::string method = "auto";
    auto* count_cmd = app.add_subcommand("count", "Count the paths below a diagram");
    count_cmd->add_option("diagram", diagram_text, "Comma-separated row lengths; \"\" is empty")
        ->required();
    count_cmd->add_option("--method", method, "decompose|oracle|alternative|auto")
        ->check(CLI::IsMember({"decompose", "oracle", "alternative", "auto"}));

    std::string poly_diagram;
    std::string poly_format = "text";
    bool poly_alternative = false;
    auto* poly_cmd = app.add_subcommand("poly", "Catalan-number polynomial of a diagram");
    poly_cmd->add_option("diagram", poly_diagram, "Comma-separated row lengths")->required();
    poly_cmd->add_option("--format", poly_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    poly_cmd->add_flag("--alternative", poly_alternative,
                       "Staircase-minus-correction form instead of the direct sum");

    std::int64_t chris_a = 0, chris_b = 0;
    auto* chris_cmd = app.add_subcommand("christoffel", "Extremal diagram of an a x b lattice");
    chris_cmd->add_option("a", chris_a, "South steps")->required()->check(CLI::PositiveNumber);
    chris_cmd->add_option("b", chris_b, "East steps")->required()->check(CLI::PositiveNumber);

    std::string formula_name;
    std::vector<std::int64_t> formula_args;
    auto* formula_cmd = app.add_subcommand("formula", "Closed-form counts");
    formula_cmd->add_option("name", formula_name,
                            "catalan|fuss|general|prime|ballot|avoidline|bizley")
        ->required();
    formula_cmd->add_option("args", formula_args, "Integer arguments");

    std::int64_t tree_a = 0, tree_b = 0;
    std::string tree_out = "dot";
    std::string tree_branch;
    bool tree_branch_set = false;
    auto* tree_cmd = app.add_subcommand("tree", "Containment poset of a lattice");
    tree_cmd->add_option("a", tree_a, "South steps")->required()->check(CLI::PositiveNumber);
    tree_cmd->add_option("b", tree_b, "East steps")->required()->check(CLI::PositiveNumber);
    auto* branch_opt = tree_cmd->add_option("--branch", tree_branch,
                                            "Highlight the down-set of this diagram");
    tree_cmd->add_option("--out", tree_out, "dot|json")->check(CLI::IsMember({"dot", "json"}));

    std::int64_t verify_cells = 28, verify_lattice = 6;
    bool verify_fault = false;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the library against itself");
    verify_cmd->add_option("--max-cells", verify_cells, "Diagram sweep bound")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-lattice", verify_lattice, "Lattice sweep bound")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--inject-fault", verify_fault)->group("");  // test hook, hidden

    std::string bench_diagram;
    std::int64_t bench_reps = 10;
    auto* bench_cmd = app.add_subcommand("bench", "Time the counting methods");
    bench_cmd->add_option("diagram", bench_diagram, "Comma-separated row lengths")->required();
    bench_cmd->add_option("-r,--repetitions", bench_reps, "Runs per method")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        tree_branch_set = branch_opt->count() > 0;
        if (count_cmd->parsed()) cmd_count(diagram_text, method);
        if (poly_cmd->parsed()) cmd_poly(poly_diagram, poly_format, poly_alternative);
        if (chris_cmd->parsed()) cmd_christoffel(chris_a, chris_b);
        if (formula_cmd->parsed()) cmd_formula(formula_name, formula_args);
        if (tree_cmd->parsed())
            cmd_tree(tree_a, tree_b,
                     tree_branch_set ? std::optional<std::string>(tree_branch) : std::nullopt,
                     tree_out);
        if (verify_cmd->parsed()) return cmd_verify(verify_cells, verify_lattice, verify_fault);
        if (bench_cmd->parsed()) cmd_bench(bench_diagram, bench_reps);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ferrers::error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
