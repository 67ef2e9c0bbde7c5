#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "whphase/cli.hpp"

namespace {

void add_spec_flags(CLI::App* cmd, whphase::cli::RunConfig& config) {
    cmd->add_option("--spec", config.spec.path, "AlgebraSpec JSON file {\"two_s\", \"f\", \"phi\"}");
    cmd->add_option("--two-s", config.spec.two_s, "2s (dimension d = 2s+1)");
    cmd->add_option("--f", config.spec.f, "f eigenvalues: comma list, identity, or multiphoton:m")
        ->capture_default_str();
    cmd->add_option("--phi", config.spec.phi, "phase parameter")->capture_default_str();
}

void add_common_flags(CLI::App* cmd, whphase::cli::RunConfig& config, std::string& format) {
    cmd->add_option("--output,-o", config.output, "output file (default stdout)");
    cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

void add_state_flags(CLI::App* cmd, whphase::cli::RunConfig& config) {
    cmd->add_option("--coeffs", config.coeffs, "partial phase state amplitudes Phi_n")->delimiter(',');
    cmd->add_flag("--uniform", config.uniform, "Phi_n = 1/sqrt(d) (default)");
    cmd->add_option("--alpha", config.alpha, "linear phase alpha, or auto = pi/d")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace whphase::cli;

    CLI::App app{"Finite Weyl-Heisenberg phase operator toolkit"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format;
    std::string structure_list = "daoud";
    std::vector<int> dims;

    auto* validate = app.add_subcommand("validate-algebra", "commutators, nilpotency, Hamiltonian, realizations");
    add_spec_flags(validate, config);
    add_common_flags(validate, config, format);

    auto* table = app.add_subcommand("phase-table", "phase probability distribution table");
    add_spec_flags(table, config);
    add_common_flags(table, config, format);
    add_state_flags(table, config);

    auto* expectation = app.add_subcommand("expectation", "Hermitian phase operator expectation value");
    add_spec_flags(expectation, config);
    add_common_flags(expectation, config, format);
    add_state_flags(expectation, config);

    auto* sweep = app.add_subcommand("depolarizer-sweep", "defect table for the depolarizer maps");
    add_common_flags(sweep, config, format);
    sweep->add_option("--d", dims, "dimensions (comma list)")->delimiter(',')->required();
    sweep->add_option("--F", structure_list, "presets: daoud, linear, zero, multiphoton:m (comma list)")
        ->capture_default_str();
    sweep->add_option("--map", config.map, "discrete, continuous, or both")
        ->check(CLI::IsMember({"discrete", "continuous", "both"}))
        ->capture_default_str();
    sweep->add_option("--seed", config.seed, "seed for random operators")->capture_default_str();
    sweep->add_option("--samples", config.samples, "random operators per (d, F)")->capture_default_str();
    sweep->add_option("--witnesses", config.witnesses_output, "write aliasing witnesses CSV here");

    auto* bell = app.add_subcommand("bell-check", "Bell state and MUB identity checks");
    add_common_flags(bell, config, format);
    bell->add_option("--d", dims, "odd dimensions (comma list)")->delimiter(',')->required();

    auto* mub = app.add_subcommand("mub-check", "mutual unbiasedness of the B_p bases");
    add_common_flags(mub, config, format);
    mub->add_option("--d", dims, "odd dimensions (comma list)")->delimiter(',')->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    for (auto* sub : app.get_subcommands()) config.command = *parse_command(sub->get_name());
    if (format == "csv") config.format = Format::Csv;
    if (format == "json") config.format = Format::Json;
    config.dims = dims;
    config.structure_presets.clear();
    std::string item;
    for (char c : structure_list + ",") {
        if (c == ',') {
            if (!item.empty()) config.structure_presets.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }

    try {
        const auto report = run(config);
        write_outputs(config, report);
        if (config.command == Command::DepolarizerSweep && config.witnesses_output.empty())
            std::cerr << report.witnesses;
        for (const auto& c : report.checks)
            if (!c.pass) std::cerr << "FAIL " << c.name << " residual=" << format_double(c.residual) << "\n";
        std::cerr << report.suite << ": " << (report.pass ? "pass" : "FAIL") << " (" << report.wall_seconds << " s)\n";
        return report.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
