// Command-line front end.
#pragma once

#include "m0n/complex.hpp"
#include "m0n/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace m0n::cli {

enum class Command { cells, betti, sw, verify, export_graph };
enum class ExportFormat { json, dot };

enum ExitCode : int {
    ok = 0,
    mismatch = 1,
    usage = 2,
    oracle = 3,
    io = 4,
};

struct RunConfig {
    int n = 0;
    Command command = Command::cells;
    std::optional<std::string> output_path;
    ExportFormat format = ExportFormat::json;
    std::optional<Rational> epsilon;
    int max_n = 8;
};

/// Executes one command; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs. Usage errors return ExitCode::usage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

std::string export_json(const CellComplex& c);
std::string export_dot(const CellComplex& c);

}  // namespace m0n::cli
