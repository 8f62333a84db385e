#ifndef GAUSSKERN_CLI_HPP
#define GAUSSKERN_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gausskern::cli
{

enum class Method
{
    hermite,
    pencil,
    pencil_truncated,
    prony,
};

enum class Format
{
    csv,
    json,
};

std::string method_name(Method m);
/// Throws DomainError on an unknown name.
Method parse_method(const std::string& name);

struct RunConfig
{
    double sigma = 1.0;
    double rho   = 0.5;
    int n_min    = 1;
    int n_max    = 1;
    std::vector<Method> methods{Method::hermite};
    std::optional<double> truncation;
    std::optional<int> prony_order;
    double svd_cutoff = 1.0e-13;
    std::optional<std::string> output;
    Format format = Format::json;
    bool allow_unstable = false;
    bool oracle = true;
};

/// Exit codes.
inline constexpr int exit_ok        = 0;
inline constexpr int exit_usage     = 1;
inline constexpr int exit_breakdown = 2;
inline constexpr int exit_check     = 3;

/// Checks the config against the RunConfig invariants; DomainError on
/// violation.
void validate(const RunConfig& config);

int cmd_approx(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_error_table(const RunConfig& config, std::ostream& out, std::ostream& err);
/// `checks` empty or {"all"} runs every check.
int cmd_bound_check(const RunConfig& config, const std::vector<std::string>& checks, bool n_max_given,
                    std::ostream& out, std::ostream& err);

/// Full command line (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gausskern::cli

#endif
