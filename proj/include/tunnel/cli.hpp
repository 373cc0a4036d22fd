#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tunnel::cli {

enum class OutputFormat { json, csv };

struct RunConfig {
    std::string subcommand;
    std::map<std::string, double> parameters;  // omega, ell, s, T, nu, L, N, k, tau, ...
    std::set<std::string> flags;               // e.g. "with-oracle"
    OutputFormat output_format = OutputFormat::json;
    std::optional<std::string> output_path;
    std::optional<double> tol;
};

struct ResultEntry {
    std::string name;
    double value = 0.0;
    std::string paper_ref;  // formula or identity the quantity realizes
    std::string method;     // closed_form, integrated, k_integral, oracle, ...
    double tolerance = 0.0; // achieved error estimate
};

struct Report {
    std::string subcommand;
    std::vector<std::pair<std::string, double>> inputs;
    std::vector<ResultEntry> results;
    std::string status = "ok";
    /// Tabular payload for sweeps: header and rows, in sweep order.
    std::vector<std::string> table_header;
    std::vector<std::vector<double>> table_rows;
};

/// Thrown for flag and parameter problems; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse command-line arguments (without the program name). Throws UsageError.
/// Returns std::nullopt when help was requested; the help text goes to `help`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::string* help = nullptr);

/// Execute the library call mapped to the subcommand.
Report run(const RunConfig& config);

std::string render(const Report& report, OutputFormat format);
std::string render_error(const std::string& subcommand, const std::string& kind,
                         const std::string& message);

/// 17 significant digits, '.' decimal point, independent of the C++ locale.
std::string format_number(double value);

struct Invocation {
    int exit_code = 0;
    std::string output;
    std::optional<std::string> output_path;
};

/// parse + run + render with exit codes 0 (ok), 1 (numeric failure), 2 (usage).
Invocation invoke(const std::vector<std::string>& args);

}  // namespace tunnel::cli
