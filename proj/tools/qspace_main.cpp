#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qspace/ladder.hpp"
#include "qspace/observables.hpp"
#include "qspace/oracle.hpp"
#include "qspace/products.hpp"
#include "qspace/state_json.hpp"

namespace {

using namespace qspace;

// 15 significant digits, C locale, with a decimal point always present so
// integral values print as "1.0" rather than "1".
std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void print_notes(const LoadedState& loaded, const std::string& label) {
    for (const std::string& note : loaded.notes) {
        std::cerr << "note: " << label << ": " << note << '\n';
    }
}

// Output files are written whole or not at all.
void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot open " + path + " for writing");
    }
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text(out_path, content);
    }
}

int cmd_inner(const std::string& in, const std::string& in2) {
    const LoadedState a = load_state_file(in);
    const LoadedState b = load_state_file(in2);
    print_notes(a, in);
    print_notes(b, in2);
    const Amplitude value = inner(a.state, b.state);
    std::cout << fmt15(value.real()) << ' ' << fmt15(value.imag()) << '\n';
    return 0;
}

int cmd_apply(const std::string& in, const std::string& in2, const std::string& out_path) {
    const LoadedState state = load_state_file(in);
    print_notes(state, in);
    const LoadedOperator op = load_operator_file(in2);
    if (op.dim != state.state.dim()) {
        throw std::domain_error("operator dimension " + std::to_string(op.dim) +
                                " does not match state dimension " +
                                std::to_string(state.state.dim()));
    }
    const StateVector result = apply_expr(op.expr, state.state);
    emit(out_path, state_to_json(result).dump(2) + "\n");
    return 0;
}

int cmd_expect(const std::string& in, const std::string& in2) {
    const LoadedState state = load_state_file(in);
    print_notes(state, in);
    const LoadedOperator op = load_operator_file(in2);
    if (op.dim != state.state.dim()) {
        throw std::domain_error("operator dimension " + std::to_string(op.dim) +
                                " does not match state dimension " +
                                std::to_string(state.state.dim()));
    }
    const Amplitude value = expectation(op.expr, state.state);
    std::cout << fmt15(value.real()) << ' ' << fmt15(value.imag()) << '\n';
    return 0;
}

int cmd_correlate(const std::string& in, std::size_t theta_steps, std::size_t phi_steps,
                  const std::string& out_path) {
    const LoadedState state = load_state_file(in);
    print_notes(state, in);
    const auto samples = spin_correlation_scan(state.state, theta_steps, phi_steps);
    std::ostringstream csv;
    csv << "theta,phi,correlation\n";
    for (const auto& s : samples) {
        csv << fmt15(s.theta) << ',' << fmt15(s.phi) << ',' << fmt15(s.value) << '\n';
    }
    emit(out_path, csv.str());
    return 0;
}

int cmd_demo_epr(std::size_t theta_steps, std::size_t phi_steps, const std::string& out_path,
                 double tol) {
    const auto samples = spin_correlation_scan(up_down_pair_state(), theta_steps, phi_steps);
    std::ostringstream csv;
    csv << "theta,phi,correlation,expected,abs_err\n";
    double max_err = 0.0;
    for (const auto& s : samples) {
        const double expected = -std::cos(s.theta);
        const double err = std::abs(s.value - expected);
        max_err = std::max(max_err, err);
        csv << fmt15(s.theta) << ',' << fmt15(s.phi) << ',' << fmt15(s.value) << ','
            << fmt15(expected) << ',' << fmt15(err) << '\n';
    }
    emit(out_path, csv.str());
    if (max_err > tol) {
        std::cerr << "demo-epr: max |error| " << fmt15(max_err) << " exceeds tolerance "
                  << fmt15(tol) << '\n';
        return 1;
    }
    std::cerr << "demo-epr: " << samples.size() << " grid points within " << fmt15(tol)
              << " (max |error| " << fmt15(max_err) << ")\n";
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    bool all_ok = true;
    if (suite == "ccr" || suite == "all") {
        const auto trials = basis_states(Statistics::Bose, 4, 4);
        const RelationReport report = check_ccr(4, trials);
        std::cout << "ccr: " << (report.checks - report.violations.size()) << '/' << report.checks
                  << " checks passed, max residual " << fmt15(report.max_residual) << '\n';
        for (const auto& v : report.violations) {
            std::cout << "  violation: " << v.relation << " at modes (" << v.i << ',' << v.j
                      << ") trial " << v.trial << " residual " << fmt15(v.residual) << '\n';
        }
        all_ok = all_ok && report.ok();
    }
    if (suite == "car" || suite == "all") {
        const auto trials = basis_states(Statistics::Fermi, 5, 5);
        const RelationReport report = check_car(5, trials);
        std::cout << "car: " << (report.checks - report.violations.size()) << '/' << report.checks
                  << " checks passed, max residual " << fmt15(report.max_residual) << '\n';
        for (const auto& v : report.violations) {
            std::cout << "  violation: " << v.relation << " at modes (" << v.i << ',' << v.j
                      << ") trial " << v.trial << " residual " << fmt15(v.residual) << '\n';
        }
        all_ok = all_ok && report.ok();
    }
    if (suite == "oracle" || suite == "all") {
        const ComparisonReport report = compare_formulations(seed, 200);
        std::cout << "oracle: " << (report.checks - report.failures.size()) << '/' << report.checks
                  << " checks passed, max error " << fmt15(report.max_error) << " (seed " << seed
                  << ")\n";
        for (const std::string& f : report.failures) {
            std::cout << "  failure: " << f << '\n';
        }
        all_ok = all_ok && report.ok();
    }
    std::cout << (all_ok ? "verify: PASS" : "verify: FAIL") << '\n';
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"occupation-number second-quantization toolkit"};
    app.require_subcommand(1);

    std::string in_path;
    std::string in2_path;
    std::string out_path;
    std::size_t theta_steps = 19;
    std::size_t phi_steps = 12;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    std::string suite;

    CLI::App* inner_cmd = app.add_subcommand("inner", "Inner product of two state files");
    inner_cmd->add_option("--in", in_path, "first state (JSON)")->required();
    inner_cmd->add_option("--in2", in2_path, "second state (JSON)")->required();

    CLI::App* apply_cmd = app.add_subcommand("apply", "Apply a ladder-operator expression to a state");
    apply_cmd->add_option("--in", in_path, "state (JSON)")->required();
    apply_cmd->add_option("--in2", in2_path, "operator expression (JSON)")->required();
    apply_cmd->add_option("--out", out_path, "output state file (stdout if omitted)");

    CLI::App* expect_cmd = app.add_subcommand("expect", "Expectation value of an operator expression");
    expect_cmd->add_option("--in", in_path, "state (JSON)")->required();
    expect_cmd->add_option("--in2", in2_path, "operator expression (JSON)")->required();

    CLI::App* correlate_cmd =
        app.add_subcommand("correlate", "Scan the z-vs-n spin correlation over a direction grid");
    correlate_cmd->add_option("--in", in_path, "two-mode pair state (JSON)")->required();
    correlate_cmd->add_option("--theta-steps", theta_steps, "polar grid points")
        ->check(CLI::PositiveNumber);
    correlate_cmd->add_option("--phi-steps", phi_steps, "azimuthal grid points")
        ->check(CLI::PositiveNumber);
    correlate_cmd->add_option("--out", out_path, "output CSV file (stdout if omitted)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the built-in verification suites");
    verify_cmd->add_option("suite", suite, "one of: ccr, car, oracle, all")
        ->required()
        ->check(CLI::IsMember({"ccr", "car", "oracle", "all"}));
    verify_cmd->add_option("--seed", seed, "seed for the randomized oracle comparison");

    CLI::App* demo_cmd =
        app.add_subcommand("demo-epr", "Opposite-spin pair correlation vs -cos(theta)");
    demo_cmd->add_option("--theta-steps", theta_steps, "polar grid points")
        ->check(CLI::PositiveNumber);
    demo_cmd->add_option("--phi-steps", phi_steps, "azimuthal grid points")
        ->check(CLI::PositiveNumber);
    demo_cmd->add_option("--out", out_path, "output CSV file (stdout if omitted)");
    demo_cmd->add_option("--tol", tol, "per-row tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(inner_cmd)) {
            return cmd_inner(in_path, in2_path);
        }
        if (app.got_subcommand(apply_cmd)) {
            return cmd_apply(in_path, in2_path, out_path);
        }
        if (app.got_subcommand(expect_cmd)) {
            return cmd_expect(in_path, in2_path);
        }
        if (app.got_subcommand(correlate_cmd)) {
            return cmd_correlate(in_path, theta_steps, phi_steps, out_path);
        }
        if (app.got_subcommand(verify_cmd)) {
            return cmd_verify(suite, seed);
        }
        if (app.got_subcommand(demo_cmd)) {
            return cmd_demo_epr(theta_steps, phi_steps, out_path, tol);
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
