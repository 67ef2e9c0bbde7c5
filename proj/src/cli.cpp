#include "whphase/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "whphase/bellmub.hpp"
#include "whphase/errors.hpp"
#include "whphase/phase.hpp"

namespace whphase::cli {

using json = nlohmann::ordered_json;

namespace {

struct CommandName {
    Command command;
    const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::ValidateAlgebra, "validate-algebra"}, {Command::PhaseTable, "phase-table"},
    {Command::Expectation, "expectation"},          {Command::DepolarizerSweep, "depolarizer-sweep"},
    {Command::BellCheck, "bell-check"},             {Command::MubCheck, "mub-check"},
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

double parse_number(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ValidationError(what + ": '" + text + "' is not a number");
    }
    if (used != text.size() || !std::isfinite(value)) throw ValidationError(what + ": '" + text + "' is not a number");
    return value;
}

int parse_int(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ValidationError(what + ": '" + text + "' is not an integer");
    }
    if (used != text.size()) throw ValidationError(what + ": '" + text + "' is not an integer");
    return value;
}

Check make_check(std::string name, double residual, double tolerance) {
    const double tol = effective_tolerance(tolerance);
    const bool pass = tol == 0.0 ? residual == 0.0 : residual < tol;
    return {std::move(name), residual, tol, pass};
}

void finish(SuiteReport& report) {
    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const Check& c) { return c.pass; });
}

json checks_json(const std::vector<Check>& checks) {
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    return arr;
}

std::string checks_csv(const std::vector<Check>& checks) {
    std::string out = "check,residual,tolerance,pass\n";
    for (const auto& c : checks)
        out += c.name + "," + format_double(c.residual) + "," + format_double(c.tolerance) + "," +
               (c.pass ? "true" : "false") + "\n";
    return out;
}

json spec_json(const algebra::AlgebraSpec& spec) {
    return {{"two_s", spec.two_s}, {"f", spec.f}, {"phi", spec.phi}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Format format_or(const RunConfig& config, Format fallback) { return config.format.value_or(fallback); }

// ---- validate-algebra ------------------------------------------------------

SuiteReport run_validate_algebra(const RunConfig& config) {
    const auto spec = load_spec(config.spec);
    const int d = spec.dim();
    SuiteReport report;
    report.suite = "validate-algebra";

    report.checks.push_back(make_check("F_endpoints", std::abs(spec.F(0)) + std::abs(spec.F(d)), 0.0));
    double worst_positive = 0.0;
    for (int n = 1; n < d; ++n) worst_positive = std::max(worst_positive, -std::min(0.0, spec.F(n)));
    report.checks.push_back(make_check("F_positive", worst_positive, 0.0));

    const auto g = algebra::g_from_F(spec);
    double sum_g = 0.0;
    for (double v : g) sum_g += v;
    report.checks.push_back(make_check("trace_G", std::abs(sum_g), 1e-12));

    const auto pair = algebra::ladder_matrices(spec);
    report.checks.push_back(make_check("adjoint", hs_distance(pair.raising, pair.lowering.adjoint()), 1e-12));
    report.checks.push_back(make_check("commutators", algebra::check_commutators(spec, pair), 1e-12));
    report.checks.push_back(make_check("nilpotency", algebra::nilpotency_residual(pair), 0.0));
    report.checks.push_back(
        make_check("hamiltonian", max_abs_entry(algebra::hamiltonian(spec) - pair.raising * pair.lowering), 1e-12));
    if (spec.phi == 0.0) {
        const auto boson = algebra::boson_realization(spec);
        report.checks.push_back(make_check("boson_realization", std::max(hs_distance(boson.lowering, pair.lowering),
                                                                         hs_distance(boson.raising, pair.raising)),
                                           1e-12));
    }
    if (algebra::is_identity_f(spec))
        report.checks.push_back(make_check("su2_closure", algebra::su2_residual(algebra::stokes_operators(spec)), 1e-12));
    finish(report);

    if (format_or(config, Format::Json) == Format::Csv) {
        report.body = checks_csv(report.checks);
    } else {
        json j{{"suite", report.suite}, {"spec", spec_json(spec)}, {"checks", checks_json(report.checks)},
               {"pass", report.pass}};
        j["spec"]["F"] = spec.structure;
        report.body = dump(j);
    }
    return report;
}

// ---- phase-table / expectation ----------------------------------------------

phase::PartialPhaseState state_from_config(const RunConfig& config, const algebra::AlgebraSpec& spec) {
    const int d = spec.dim();
    double alpha = 0.0;
    if (config.alpha == "auto")
        alpha = kPi / d;
    else
        alpha = parse_number(config.alpha, "alpha");
    if (config.coeffs && config.uniform) throw ValidationError("give either --coeffs or --uniform, not both");
    if (config.coeffs) {
        if (static_cast<int>(config.coeffs->size()) != d)
            throw ValidationError("coeffs must have length 2s+1 = " + std::to_string(d));
        return phase::make_partial_phase_state(*config.coeffs, alpha, spec.phi);
    }
    return phase::uniform_partial_phase_state(d, alpha, spec.phi);
}

SuiteReport run_phase_table(const RunConfig& config) {
    const auto spec = load_spec(config.spec);
    const int d = spec.dim();
    const auto state = state_from_config(config, spec);
    const auto probs = phase::phase_distribution(state, spec);
    const auto closed = phase::phase_distribution_closed_form(state, d);
    const auto [lo, hi] = phase::distribution_bounds(state);

    SuiteReport report;
    report.suite = "phase-table";
    double total = 0.0, closed_dev = 0.0, bound_violation = 0.0;
    for (int m = 0; m < d; ++m) {
        const double p = probs[static_cast<std::size_t>(m)];
        total += p;
        closed_dev = std::max(closed_dev, std::abs(p - closed[static_cast<std::size_t>(m)]));
        bound_violation = std::max({bound_violation, lo - p, p - hi});
    }
    report.checks.push_back(make_check("normalization", std::abs(total - 1.0), 1e-12));
    report.checks.push_back(make_check("closed_form", closed_dev, 1e-12));
    report.checks.push_back(make_check("bounds", std::max(0.0, bound_violation), 1e-12));
    finish(report);

    if (format_or(config, Format::Csv) == Format::Csv) {
        std::string out = "m,theta_m,probability\n";
        for (int m = 0; m < d; ++m)
            out += std::to_string(m) + "," + format_double(phase::phase_angle(d, m)) + "," +
                   format_double(probs[static_cast<std::size_t>(m)]) + "\n";
        report.body = out;
    } else {
        json rows = json::array();
        for (int m = 0; m < d; ++m)
            rows.push_back({{"m", m},
                            {"theta_m", phase::phase_angle(d, m)},
                            {"probability", probs[static_cast<std::size_t>(m)]}});
        report.body = dump({{"suite", report.suite},
                            {"spec", spec_json(spec)},
                            {"alpha", state.alpha},
                            {"rows", rows},
                            {"checks", checks_json(report.checks)},
                            {"pass", report.pass}});
    }
    return report;
}

SuiteReport run_expectation(const RunConfig& config) {
    const auto spec = load_spec(config.spec);
    const int d = spec.dim();
    const auto state = state_from_config(config, spec);
    const auto ex = phase::theta_expectation(state, spec);
    const double expected_diag = 2.0 * kPi * spec.s() / d;

    // printed kernel / commutator closed forms vs the spectral ground truth
    double kernel_dev = 0.0;
    for (int n = 0; n < d; ++n)
        for (int np = 0; np < d; ++np) kernel_dev = std::max(kernel_dev, phase::theta_kernel(spec, n, np).discrepancy);
    const double commutator_dev = hs_distance(phase::phase_number_commutator(spec),
                                              phase::phase_number_commutator_closed_form(spec));

    SuiteReport report;
    report.suite = "expectation";
    report.checks.push_back(make_check("diag_equals_2pi_s_over_d", std::abs(ex.diag - expected_diag), 1e-12));
    if (config.alpha == "auto")
        report.checks.push_back(make_check("total_equals_2pi_s_over_d", std::abs(ex.total - expected_diag), 1e-12));
    finish(report);

    if (format_or(config, Format::Json) == Format::Csv) {
        std::string out = "quantity,value\n";
        const std::pair<const char*, double> rows[] = {{"alpha", state.alpha},
                                                       {"total", ex.total},
                                                       {"diag", ex.diag},
                                                       {"nondiag", ex.nondiag},
                                                       {"nondiag_closed_form", ex.nondiag_closed_form},
                                                       {"expected_diag", expected_diag},
                                                       {"kernel_closed_form_discrepancy", kernel_dev},
                                                       {"commutator_closed_form_discrepancy", commutator_dev}};
        for (const auto& [name, value] : rows) out += std::string(name) + "," + format_double(value) + "\n";
        report.body = out + "\n" + checks_csv(report.checks);
    } else {
        report.body = dump({{"suite", report.suite},
                            {"spec", spec_json(spec)},
                            {"alpha", state.alpha},
                            {"coeffs", state.coeffs},
                            {"total", ex.total},
                            {"diag", ex.diag},
                            {"nondiag", ex.nondiag},
                            {"nondiag_closed_form", ex.nondiag_closed_form},
                            {"expected_diag", expected_diag},
                            {"informational",
                             {{"kernel_closed_form_discrepancy", kernel_dev},
                              {"commutator_closed_form_discrepancy", commutator_dev}}},
                            {"checks", checks_json(report.checks)},
                            {"pass", report.pass}});
    }
    return report;
}

// ---- depolarizer-sweep -------------------------------------------------------

struct LabeledOperator {
    std::string label;
    Matrix op;
};

std::vector<LabeledOperator> sweep_operators(int d, int samples, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const auto sz = static_cast<std::size_t>(d);
    std::vector<LabeledOperator> ops;
    ops.push_back({"identity", Matrix::identity(sz)});

    Matrix diag(sz);
    for (std::size_t n = 0; n < sz; ++n) diag(n, n) = Complex(unit(rng), unit(rng));
    ops.push_back({"diag", diag});
    ops.push_back({"unit_0_" + std::to_string(d - 1), Matrix::unit(sz, 0, sz - 1)});

    for (int i = 0; i < samples; ++i) {
        Matrix o(sz);
        for (std::size_t r = 0; r < sz; ++r)
            for (std::size_t c = 0; c < sz; ++c) o(r, c) = Complex(unit(rng), unit(rng));
        ops.push_back({"rand" + std::to_string(i), o});
    }
    return ops;
}

SuiteReport run_depolarizer_sweep(const RunConfig& config) {
    if (config.dims.empty()) throw ValidationError("depolarizer-sweep requires --d");
    if (config.map != "discrete" && config.map != "continuous" && config.map != "both")
        throw ValidationError("map must be one of discrete, continuous, both");
    if (config.samples < 0) throw ValidationError("samples must be >= 0");

    SuiteReport report;
    report.suite = "depolarizer-sweep";
    report.informational = true;
    std::mt19937_64 rng(config.seed);

    std::string table = "d,F_label,O_label,map,defect_hs,exact,basis_orthogonal\n";
    std::string witnesses = "d,F_label,map,n,n_prime,k\n";
    json rows = json::array();
    json witness_rows = json::array();

    for (int d : config.dims) {
        for (const auto& label : config.structure_presets) {
            const auto F = structure_preset(label, d);
            const bool orthogonal = depolarizer::error_basis_orthogonality(F).basis_orthogonal;
            const auto ops = sweep_operators(d, config.samples, rng);
            std::vector<std::string> maps;
            if (config.map != "continuous") maps.push_back("discrete");
            if (config.map != "discrete") maps.push_back("continuous");

            for (const auto& map : maps) {
                std::vector<depolarizer::AliasingWitness> seen;
                for (const auto& [op_label, op] : ops) {
                    const auto res = map == "discrete" ? depolarizer::depolarize_discrete(op, F)
                                                       : depolarizer::depolarize_continuous(op, F);
                    table += std::to_string(d) + "," + label + "," + op_label + "," + map + "," +
                             format_double(res.report.defect_hs) + "," + (res.report.exact ? "true" : "false") + "," +
                             (orthogonal ? "true" : "false") + "\n";
                    rows.push_back({{"d", d},
                                    {"F_label", label},
                                    {"O_label", op_label},
                                    {"map", map},
                                    {"defect_hs", res.report.defect_hs},
                                    {"exact", res.report.exact},
                                    {"basis_orthogonal", orthogonal}});
                    seen = res.report.aliasing_witnesses;
                }
                for (const auto& w : seen) {
                    witnesses += std::to_string(d) + "," + label + "," + map + "," + std::to_string(w.n) + "," +
                                 std::to_string(w.n_prime) + "," + std::to_string(w.k) + "\n";
                    witness_rows.push_back(
                        {{"d", d}, {"F_label", label}, {"map", map}, {"n", w.n}, {"n_prime", w.n_prime}, {"k", w.k}});
                }
            }
        }
    }

    if (format_or(config, Format::Csv) == Format::Csv) {
        report.body = table;
        report.witnesses = witnesses;
    } else {
        report.body = dump({{"suite", report.suite}, {"seed", config.seed}, {"rows", rows}, {"aliasing_witnesses", witness_rows}});
        report.witnesses = witnesses;
    }
    return report;
}

// ---- bell-check / mub-check ------------------------------------------------

SuiteReport run_bell_check(const RunConfig& config) {
    if (config.dims.empty()) throw ValidationError("bell-check requires --d");
    SuiteReport report;
    report.suite = "bell-check";
    json arr = json::array();
    std::string csv = "identity,d,params,residual,pass\n";
    for (int d : config.dims) {
        for (const auto& c : bellmub::identity_checks(d, effective_tolerance(1e-12))) {
            json params = json::object();
            std::string params_text;
            for (const auto& [key, value] : c.params) {
                params[key] = value;
                params_text += (params_text.empty() ? "" : ";") + key + "=" + std::to_string(value);
            }
            arr.push_back({{"identity", c.identity}, {"d", c.d}, {"params", params}, {"residual", c.residual}, {"pass", c.pass}});
            csv += c.identity + "," + std::to_string(d) + "," + params_text + "," + format_double(c.residual) + "," +
                   (c.pass ? "true" : "false") + "\n";
            report.checks.push_back({c.identity + "(d=" + std::to_string(d) + (params_text.empty() ? "" : ";") +
                                         params_text + ")",
                                     c.residual, c.tolerance, c.pass});
        }
    }
    finish(report);
    report.body = format_or(config, Format::Json) == Format::Csv
                      ? csv
                      : dump({{"suite", report.suite}, {"reports", arr}, {"pass", report.pass}});
    return report;
}

SuiteReport run_mub_check(const RunConfig& config) {
    if (config.dims.empty()) throw ValidationError("mub-check requires --d");
    SuiteReport report;
    report.suite = "mub-check";
    json arr = json::array();
    std::string csv = "d,prime,max_deviation,status\n";
    const double tol = effective_tolerance(1e-10);
    for (int d : config.dims) {
        const auto r = bellmub::unbiasedness_check(d);
        std::string status = r.status;
        if (r.prime) status = r.max_deviation < tol ? "ok" : "fail";
        // composite d is reported, not asserted
        if (r.prime) report.checks.push_back({"unbiased(d=" + std::to_string(d) + ")", r.max_deviation, tol, status == "ok"});
        arr.push_back({{"d", d}, {"prime", r.prime}, {"max_deviation", r.max_deviation}, {"status", status}});
        csv += std::to_string(d) + "," + (r.prime ? "true" : "false") + "," + format_double(r.max_deviation) + "," +
               status + "\n";
    }
    finish(report);
    report.body = format_or(config, Format::Json) == Format::Csv
                      ? csv
                      : dump({{"suite", report.suite}, {"results", arr}, {"pass", report.pass}});
    return report;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
    for (const auto& c : kCommands)
        if (name == c.name) return c.command;
    return std::nullopt;
}

std::string command_name(Command command) {
    for (const auto& c : kCommands)
        if (command == c.command) return c.name;
    return "unknown";
}

std::vector<double> parse_f(const std::string& text, int two_s) {
    if (text == "identity") return std::vector<double>(static_cast<std::size_t>(two_s) + 1, 1.0);
    if (text.rfind("multiphoton:", 0) == 0)
        return algebra::multiphoton_f(two_s, parse_int(text.substr(12), "multiphoton order"));
    std::vector<double> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_number(item, "f"));
    return out;
}

algebra::AlgebraSpec spec_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("spec: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("spec: top level must be an object");
    for (const auto& field : {"two_s", "f", "phi"})
        if (!j.contains(field)) throw ValidationError(std::string("spec: field '") + field + "' is required");
    for (const auto& [key, _] : j.items())
        if (key != "two_s" && key != "f" && key != "phi") throw ValidationError("spec: unknown field '" + key + "'");

    if (!j["two_s"].is_number_integer()) throw ValidationError("spec: field 'two_s' must be an integer");
    if (!j["phi"].is_number()) throw ValidationError("spec: field 'phi' must be a number");
    if (!j["f"].is_array()) throw ValidationError("spec: field 'f' must be an array of numbers");
    std::vector<double> f;
    for (std::size_t i = 0; i < j["f"].size(); ++i) {
        if (!j["f"][i].is_number()) throw ValidationError("spec: f[" + std::to_string(i) + "] must be a number");
        f.push_back(j["f"][i].get<double>());
    }
    return algebra::build_spec(j["two_s"].get<int>(), std::move(f), j["phi"].get<double>());
}

algebra::AlgebraSpec load_spec(const SpecSource& source) {
    if (source.path) {
        std::ifstream in(*source.path);
        if (!in) throw ValidationError("spec: cannot open '" + *source.path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        return spec_from_json_text(buffer.str());
    }
    if (!source.two_s) throw ValidationError("spec: give --spec <file> or --two-s");
    if (*source.two_s < 1) throw ValidationError("two_s must be >= 1");
    return algebra::build_spec(*source.two_s, parse_f(source.f, *source.two_s), source.phi);
}

depolarizer::CyclicStructureFunction structure_preset(const std::string& label, int d) {
    using depolarizer::CyclicStructureFunction;
    if (label == "daoud") return CyclicStructureFunction::daoud(d);
    if (label == "linear") return CyclicStructureFunction::linear(d);
    if (label == "zero") return CyclicStructureFunction::zero(d);
    if (label.rfind("multiphoton:", 0) == 0)
        return CyclicStructureFunction::multiphoton(d, parse_int(label.substr(12), "multiphoton order"));
    throw ValidationError("unknown structure function preset '" + label + "'");
}

double effective_tolerance(double fallback) {
    const char* env = std::getenv("WHPHASE_TOL");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0) return fallback;
    return v;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

SuiteReport run(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    switch (config.command) {
        case Command::ValidateAlgebra: report = run_validate_algebra(config); break;
        case Command::PhaseTable: report = run_phase_table(config); break;
        case Command::Expectation: report = run_expectation(config); break;
        case Command::DepolarizerSweep: report = run_depolarizer_sweep(config); break;
        case Command::BellCheck: report = run_bell_check(config); break;
        case Command::MubCheck: report = run_mub_check(config); break;
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + path + "'");
    out << text;
}

}  // namespace

void write_outputs(const RunConfig& config, const SuiteReport& report) {
    if (config.output.empty())
        std::cout << report.body;
    else
        write_text(config.output, report.body);
    if (!config.witnesses_output.empty() && !report.witnesses.empty()) write_text(config.witnesses_output, report.witnesses);
}

}  // namespace whphase::cli
