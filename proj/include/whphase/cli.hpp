#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "whphase/algebra.hpp"
#include "whphase/depolarizer.hpp"

namespace whphase::cli {

enum class Command { ValidateAlgebra, PhaseTable, Expectation, DepolarizerSweep, BellCheck, MubCheck };
enum class Format { Csv, Json };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command command);

// Either a JSON file ({"two_s": int, "f": [float...], "phi": float}) or inline flags.
struct SpecSource {
    std::optional<std::string> path;
    std::optional<int> two_s;
    std::string f = "identity";  // comma list, "identity", or "multiphoton:m"
    double phi = 0.0;
};

struct RunConfig {
    Command command = Command::ValidateAlgebra;
    SpecSource spec;
    std::string output;  // empty: stdout
    std::optional<Format> format;
    std::uint64_t seed = 0;

    // depolarizer-sweep, bell-check, mub-check
    std::vector<int> dims;
    std::vector<std::string> structure_presets{"daoud"};
    std::string map = "both";  // discrete | continuous | both
    int samples = 20;
    std::string witnesses_output;

    // phase-table, expectation
    std::optional<std::vector<double>> coeffs;
    bool uniform = false;
    std::string alpha = "0";  // number or "auto" (= pi/d)
};

struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass = true;            // all checks pass
    bool informational = false;  // exit 0 regardless of pass
    double wall_seconds = 0.0;   // never written into `body`
    std::string body;            // primary output
    std::string witnesses;       // depolarizer-sweep witness table (csv)

    int exit_code() const { return informational || pass ? 0 : 1; }
};

algebra::AlgebraSpec load_spec(const SpecSource& source);
algebra::AlgebraSpec spec_from_json_text(const std::string& text);

// "1,2,3" | "identity" | "multiphoton:m"
std::vector<double> parse_f(const std::string& text, int two_s);

// daoud | linear | zero | multiphoton:m
depolarizer::CyclicStructureFunction structure_preset(const std::string& label, int d);

// WHPHASE_TOL, when set to a positive number, replaces `fallback`.
double effective_tolerance(double fallback);

// %.17g
std::string format_double(double value);

// Deterministic given config (including seed). Throws ValidationError /
// InvalidDimension on bad input.
SuiteReport run(const RunConfig& config);

// Writes body (and witnesses if requested) to the configured destinations.
void write_outputs(const RunConfig& config, const SuiteReport& report);

}  // namespace whphase::cli
