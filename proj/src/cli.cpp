#include "gausskern/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "gausskern/error_analysis.hpp"
#include "gausskern/errors.hpp"
#include "gausskern/gaussian_approx.hpp"
#include "gausskern/kernels.hpp"
#include "gausskern/pencil_method.hpp"
#include "gausskern/prony_derivative.hpp"
#include "gausskern/rule_cache.hpp"
#include "gausskern/serialization.hpp"

namespace gausskern::cli
{

namespace
{

using Approximant = std::variant<CosineSumApprox, ExponentialSum>;

// Result of one (method, N) work item; `text` is filled on success.
struct Item
{
    std::string text;
    std::string error;
    int code = exit_ok;
};

bool half_rho(const RunConfig& c)
{
    return std::abs(c.rho - 0.5 * c.sigma) <= 1.0e-12 * c.sigma;
}

std::vector<HermiteRule> load_rules(int n_max)
{
    std::vector<HermiteRule> rules(n_max + 1);
    for (int n = 1; n <= n_max; ++n)
    {
        rules[n] = cached_hermite_rule(n);
    }
    return rules;
}

Approximant build(Method method, const RunConfig& config, int n, const std::vector<HermiteRule>& rules)
{
    const GaussianTarget target(config.sigma, config.rho);
    PencilOptions pencil;
    pencil.cutoff = config.svd_cutoff;
    if (config.allow_unstable)
    {
        pencil.max_order = pencil_build_limit;
    }
    switch (method)
    {
    case Method::hermite:
        if (n > default_max_order)
        {
            throw DomainError("hermite: N = " + std::to_string(n) + " exceeds the cap " +
                              std::to_string(default_max_order));
        }
        return approximate(target, rules.at(n));
    case Method::pencil:
        return approximate_pencil(target, n, pencil);
    case Method::pencil_truncated:
        return approximate_pencil(target, n, pencil, config.truncation);
    case Method::prony:
        return approximate_prony(target, n, config.prony_order.value_or(0), config.svd_cutoff);
    }
    throw DomainError("unknown method");
}

// Runs `body` and maps library exceptions onto exit codes.
Item guarded(Method method, int n, const std::function<std::string()>& body)
{
    Item item;
    try
    {
        item.text = body();
    }
    catch (const NotPositiveDefinite& e)
    {
        item.code  = exit_breakdown;
        item.error = method_name(method) + " breakdown at N = " + std::to_string(n) + ": " + e.what();
    }
    catch (const ProjectionFailure& e)
    {
        item.code  = exit_breakdown;
        item.error = method_name(method) + " breakdown at N = " + std::to_string(n) + ": " + e.what();
    }
    catch (const ConvergenceFailure& e)
    {
        item.code  = exit_breakdown;
        item.error = method_name(method) + " breakdown at N = " + std::to_string(n) + ": " + e.what();
    }
    catch (const std::exception& e)
    {
        item.code  = exit_usage;
        item.error = method_name(method) + " at N = " + std::to_string(n) + ": " + e.what();
    }
    return item;
}

std::vector<Item> sweep(const RunConfig& config, const std::function<std::string(Method, int)>& body)
{
    std::vector<Item> items;
    for (Method m : config.methods)
    {
        auto part = kernels::parallel_map(config.n_min, config.n_max,
                                          [&](int n) { return guarded(m, n, [&] { return body(m, n); }); });
        std::move(part.begin(), part.end(), std::back_inserter(items));
    }
    return items;
}

// Cosine sums store μ with λ = iμ.
std::complex<double> as_exponent(double mu)
{
    return {0.0, mu};
}

std::complex<double> as_exponent(std::complex<double> lambda)
{
    return lambda;
}

std::string approx_csv(const Approximant& a, Method method)
{
    std::ostringstream os;
    std::visit(
        [&](const auto& approx) {
            for (int j = 0; j < approx.order(); ++j)
            {
                const std::complex<double> f = as_exponent(approx.freqs[j]);
                const std::complex<double> g = approx.coeffs[j];
                os << format_real(approx.target.sigma()) << ',' << format_real(approx.target.rho())
                   << ',' << approx.order() << ',' << method_name(method) << ',' << (j + 1) << ','
                   << format_real(f.real()) << ',' << format_real(f.imag()) << ','
                   << format_real(g.real()) << ',' << format_real(g.imag()) << '\n';
            }
        },
        a);
    return os.str();
}

ErrorReport report_for(const Approximant& a, Method method, const RunConfig& config, int n,
                       const HermiteRule& rule)
{
    ErrorReport r;
    r.sigma       = config.sigma;
    r.rho         = config.rho;
    r.order       = n;
    r.method      = method_name(method);
    r.bound_thm31 = thm31_bound(config.rho / config.sigma, n);
    r.mn          = MN_diagnostic(rule).mn;
    std::visit(
        [&](const auto& approx) {
            r.weighted_error_closed = closed_form_error(approx).value;
            if (config.oracle)
            {
                r.weighted_error_oracle = oracle_error(approx).value;
            }
        },
        a);
    if (const auto* cosine = std::get_if<CosineSumApprox>(&a); cosine && half_rho(config))
    {
        const auto t      = truncated_L2_error(*cosine);
        r.truncated_T     = t.truncation;
        r.truncated_error = t.error;
    }
    return r;
}

std::string report_json(const ErrorReport& r)
{
    auto opt = [](const std::optional<double>& x) {
        return x ? nlohmann::ordered_json(format_real(*x)) : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json j{{"sigma", format_real(r.sigma)},
                     {"rho", format_real(r.rho)},
                     {"N", r.order},
                     {"method", r.method},
                     {"weighted_error", format_real(r.weighted_error_closed)},
                     {"oracle_error", opt(r.weighted_error_oracle)},
                     {"bound", format_real(r.bound_thm31)},
                     {"truncT", opt(r.truncated_T)},
                     {"trunc_error", opt(r.truncated_error)},
                     {"MN", opt(r.mn)}};
    return j.dump();
}

// Writes `text` to config.output or `out`; returns false on I/O failure.
bool emit(const RunConfig& config, const std::string& text, std::ostream& out, std::ostream& err)
{
    if (!config.output)
    {
        out << text;
        out.flush();
        return static_cast<bool>(out);
    }
    std::ofstream file(*config.output, std::ios::binary | std::ios::trunc);
    if (!file)
    {
        err << "error: cannot open '" << *config.output << "' for writing\n";
        return false;
    }
    file << text;
    file.close();
    if (!file)
    {
        err << "error: failed writing '" << *config.output << "'\n";
        return false;
    }
    return true;
}

int finish(const RunConfig& config, const std::vector<Item>& items, const std::string& head,
           std::ostream& out, std::ostream& err)
{
    std::string text = head;
    int code         = exit_ok;
    for (const auto& item : items)
    {
        if (item.code == exit_ok)
        {
            text += item.text;
        }
        else
        {
            err << "error: " << item.error << '\n';
            code = std::max(code, item.code == exit_usage ? exit_usage : exit_breakdown);
        }
    }
    // A usage error anywhere outranks breakdowns.
    for (const auto& item : items)
    {
        if (item.code == exit_usage)
        {
            code = exit_usage;
        }
    }
    if (!emit(config, text, out, err))
    {
        return exit_usage;
    }
    return code;
}

// ---- bound checks --------------------------------------------------------

struct CheckLine
{
    std::string status;
    std::string text;
};

std::string fmt(double x)
{
    std::ostringstream os;
    os << std::setprecision(4) << std::scientific << x;
    return os.str();
}

std::vector<double> hermite_errors(const RunConfig& config, int n_max)
{
    const GaussianTarget target(config.sigma, config.rho);
    const auto rules = load_rules(n_max);
    auto errs        = kernels::parallel_map(
        1, n_max, [&](int n) { return closed_form_error(approximate(target, rules[n])).value; });
    errs.insert(errs.begin(), std::nan(""));
    return errs;
}

CheckLine check_thm31(const RunConfig& config, int n_max)
{
    const double r    = config.rho / config.sigma;
    const double base = thm31_base(r);
    if (base >= 1.0)
    {
        return {"N/A", "thm31: rate base " + fmt(base) + " >= 1 (r = " + fmt(r) +
                           " >= 2+sqrt(6)), no decay to check"};
    }
    if (n_max < 3)
    {
        return {"N/A", "thm31: needs n-max >= 3"};
    }
    const auto errs = hermite_errors(config, n_max);
    const double c  = errs[2] / thm31_bound(r, 2);
    double worst    = 0.0;
    int worst_n     = 3;
    for (int n = 3; n <= n_max; ++n)
    {
        const double q = errs[n] / (c * thm31_bound(r, n));
        if (q > worst)
        {
            worst   = q;
            worst_n = n;
        }
    }
    return {worst <= 1.0 ? "PASS" : "FAIL",
            "thm31: base " + fmt(base) + ", c = " + fmt(c) + " fitted at N=2, max err/(c*rate) = " +
                fmt(worst) + " at N=" + std::to_string(worst_n) + " over N=3.." + std::to_string(n_max)};
}

CheckLine check_thm33(const RunConfig& config, int n_max)
{
    if (!half_rho(config))
    {
        return {"N/A", "thm33: requires rho = sigma/2"};
    }
    if (n_max < 5)
    {
        return {"N/A", "thm33: needs n-max >= 5"};
    }
    const GaussianTarget target(config.sigma, config.rho);
    const auto rules = load_rules(n_max);
    auto sq          = kernels::parallel_map(4, n_max, [&](int n) {
        const double e = truncated_L2_error(approximate(target, rules[n])).error;
        return e * e;
    });
    auto law = [](int n) { return std::pow(2.0, -2.0 * n) * std::pow(static_cast<double>(n), 1.5); };
    const double c = sq[0] / law(4);
    double worst   = 0.0;
    int worst_n    = 5;
    for (int n = 5; n <= n_max; ++n)
    {
        const double q = sq[n - 4] / (c * law(n));
        if (q > worst)
        {
            worst   = q;
            worst_n = n;
        }
    }
    return {worst <= 1.0 ? "PASS" : "FAIL",
            "thm33: c~ = " + fmt(c) + " fitted at N=4, max err^2/(c~*2^-2N*N^1.5) = " + fmt(worst) +
                " at N=" + std::to_string(worst_n) + " over N=5.." + std::to_string(n_max)};
}

CheckLine check_mn(int n_max, std::string& table)
{
    if (n_max < 5)
    {
        return {"N/A", "mn: needs n-max >= 5"};
    }
    auto diag = kernels::parallel_map(5, n_max, [](int n) { return MN_diagnostic(cached_hermite_rule(n)); });
    const double ref = diag[0].ratio;
    double worst     = 0.0;
    std::ostringstream os;
    os << "  N    M_N            M_N/N^1.5\n";
    for (int n = 5; n <= n_max; ++n)
    {
        const auto& d = diag[n - 5];
        worst         = std::max(worst, d.ratio / ref);
        os << "  " << std::setw(3) << n << "  " << fmt(d.mn) << "     " << fmt(d.ratio) << '\n';
    }
    table = os.str();
    return {worst <= 1.2 ? "PASS" : "FAIL",
            "mn: max (M_N/N^1.5)/(value at N=5) = " + fmt(worst) + " over N=5.." + std::to_string(n_max)};
}

CheckLine check_lemma31(const RunConfig& config, int n_max)
{
    const GaussianTarget target(config.sigma, config.rho);
    double worst = 0.0;
    int worst_n  = 1;
    int worst_k  = 1;
    for (int n = 1; n <= n_max; ++n)
    {
        const auto rule = cached_hermite_rule(n);
        for (int k = 0; k < n; ++k)
        {
            const auto c   = lemma31_bound_check(target, rule, k);
            const double q = c.lhs / c.rhs;
            if (q >= worst)
            {
                worst   = q;
                worst_n = n;
                worst_k = k + 1;
            }
        }
    }
    return {worst < 1.0 ? "PASS" : "FAIL",
            "lemma31: max lhs/rhs = " + fmt(worst) + " at N=" + std::to_string(worst_n) +
                ", k=" + std::to_string(worst_k) + " over N=1.." + std::to_string(n_max)};
}

CheckLine check_oracle(const RunConfig& config, int n_max)
{
    const GaussianTarget target(config.sigma, config.rho);
    const auto rules = load_rules(n_max);
    auto rel         = kernels::parallel_map(1, n_max, [&](int n) {
        const auto approx = approximate(target, rules[n]);
        const double c    = closed_form_error(approx).value;
        const double o    = oracle_error(approx).value;
        return std::abs(c - o) / std::max(c, 1.0e-16);
    });
    const auto it = std::max_element(rel.begin(), rel.end());
    return {*it <= 1.0e-7 ? "PASS" : "FAIL",
            "oracle: max |closed - oracle|/closed = " + fmt(*it) + " at N=" +
                std::to_string(1 + static_cast<int>(it - rel.begin())) + " over N=1.." +
                std::to_string(n_max)};
}

CheckLine check_monotone(const RunConfig& config, int n_max)
{
    const auto errs = hermite_errors(config, n_max);
    for (int n = 2; n <= n_max; ++n)
    {
        if (errs[n] > errs[n - 1])
        {
            return {"FAIL", "monotone: error rises from " + fmt(errs[n - 1]) + " at N=" +
                                std::to_string(n - 1) + " to " + fmt(errs[n]) + " at N=" +
                                std::to_string(n)};
        }
    }
    return {"PASS", "monotone: weighted error nonincreasing over N=1.." + std::to_string(n_max)};
}

std::vector<Method> parse_method_list(const std::string& list)
{
    std::vector<Method> methods;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ','))
    {
        if (!name.empty())
        {
            methods.push_back(parse_method(name));
        }
    }
    if (methods.empty())
    {
        throw DomainError("--method: no method given");
    }
    return methods;
}

} // namespace

std::string method_name(Method m)
{
    switch (m)
    {
    case Method::hermite:
        return "hermite";
    case Method::pencil:
        return "pencil";
    case Method::pencil_truncated:
        return "pencil_truncated";
    case Method::prony:
        return "prony";
    }
    return "unknown";
}

Method parse_method(const std::string& name)
{
    if (name == "hermite")
    {
        return Method::hermite;
    }
    if (name == "pencil")
    {
        return Method::pencil;
    }
    if (name == "pencil_truncated")
    {
        return Method::pencil_truncated;
    }
    if (name == "prony")
    {
        return Method::prony;
    }
    throw DomainError("unknown method '" + name + "' (hermite, pencil, pencil_truncated, prony)");
}

void validate(const RunConfig& c)
{
    if (!(c.sigma > 0.0) || !(c.rho > 0.0) || !std::isfinite(c.sigma) || !std::isfinite(c.rho))
    {
        throw DomainError("--sigma and --rho must be positive");
    }
    if (c.n_min < 1 || c.n_max < c.n_min)
    {
        throw DomainError("empty N range [" + std::to_string(c.n_min) + ", " + std::to_string(c.n_max) + "]");
    }
    auto uses = [&](Method m) { return std::find(c.methods.begin(), c.methods.end(), m) != c.methods.end(); };
    if (uses(Method::pencil_truncated) != c.truncation.has_value())
    {
        throw DomainError("--truncation-T is required with, and only with, method pencil_truncated");
    }
    if (c.truncation && !(*c.truncation > 0.0))
    {
        throw DomainError("--truncation-T must be positive");
    }
    if (c.prony_order)
    {
        if (!uses(Method::prony))
        {
            throw DomainError("--prony-L only applies to method prony");
        }
        if (*c.prony_order < 2 * c.n_max - 1)
        {
            throw DomainError("--prony-L must be at least 2*n-max - 1 = " + std::to_string(2 * c.n_max - 1));
        }
    }
    if (!(c.svd_cutoff > 0.0) || !(c.svd_cutoff < 1.0))
    {
        throw DomainError("--svd-cutoff must lie in (0, 1)");
    }
}

int cmd_approx(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const int rule_max = std::min(config.n_max, default_max_order);
    const auto rules   = load_rules(rule_max);
    const auto items   = sweep(config, [&](Method m, int n) {
        const auto a = build(m, config, n, rules);
        if (config.format == Format::csv)
        {
            return approx_csv(a, m);
        }
        return std::visit([](const auto& x) { return to_json(x); }, a) + "\n";
    });
    const std::string head =
        config.format == Format::csv ? "sigma,rho,N,method,j,freq_re,freq_im,coeff_re,coeff_im\n" : "";
    return finish(config, items, head, out, err);
}

int cmd_error_table(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto rules = load_rules(std::min(config.n_max, 200));
    const auto items = sweep(config, [&](Method m, int n) {
        const auto a = build(m, config, n, rules);
        const auto r = report_for(a, m, config, n, rules.at(n));
        return (config.format == Format::csv ? csv_row(r) : report_json(r)) + "\n";
    });
    const std::string head = config.format == Format::csv ? csv_header() + "\n" : "";
    return finish(config, items, head, out, err);
}

int cmd_bound_check(const RunConfig& config, const std::vector<std::string>& checks, bool n_max_given,
                    std::ostream& out, std::ostream& err)
{
    static const std::vector<std::string> all{"thm31", "thm33", "mn", "lemma31", "oracle", "monotone"};
    std::vector<std::string> selected;
    bool explicit_mn = false;
    for (const auto& c : checks)
    {
        if (c == "all")
        {
            selected    = all;
            explicit_mn = false;
            break;
        }
        explicit_mn = explicit_mn || c == "mn";
        if (std::find(all.begin(), all.end(), c) == all.end())
        {
            err << "error: unknown check '" << c << "'\n";
            return exit_usage;
        }
        selected.push_back(c);
    }
    if (selected.empty())
    {
        selected = all;
    }
    const int n_max    = n_max_given ? config.n_max : 12;
    const int n_max_mn = n_max_given ? config.n_max : 100;

    std::ostringstream os;
    bool failed = false;
    for (const auto& name : selected)
    {
        CheckLine line;
        std::string table;
        try
        {
            if (name == "thm31")
            {
                line = check_thm31(config, n_max);
            }
            else if (name == "thm33")
            {
                line = check_thm33(config, n_max);
            }
            else if (name == "mn")
            {
                line = check_mn(n_max_mn, table);
            }
            else if (name == "lemma31")
            {
                line = check_lemma31(config, n_max);
            }
            else if (name == "oracle")
            {
                line = check_oracle(config, n_max);
            }
            else
            {
                line = check_monotone(config, n_max);
            }
        }
        catch (const std::exception& e)
        {
            line = {"FAIL", name + ": " + e.what()};
        }
        failed = failed || line.status == "FAIL";
        os << line.status << ' ' << line.text << '\n' << (explicit_mn ? table : std::string());
    }
    if (!emit(config, os.str(), out, err))
    {
        return exit_usage;
    }
    return failed ? exit_check : exit_ok;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gaussian approximation by short exponential sums"};
    app.name(args.empty() ? "gausskern" : args[0]);
    app.require_subcommand(1);

    RunConfig config;
    std::optional<int> n_single;
    std::string methods = "hermite";
    std::string format;
    std::vector<std::string> checks;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--sigma", config.sigma, "Target e^{-t^2/(2 sigma)}")->capture_default_str();
        sub->add_option("--rho", config.rho, "Weight e^{-t^2/(2 rho)}")->capture_default_str();
        auto* n    = sub->add_option("--n", n_single, "Single order N");
        auto* nmin = sub->add_option("--n-min", config.n_min, "First order")->capture_default_str();
        auto* nmax = sub->add_option("--n-max", config.n_max, "Last order")->capture_default_str();
        n->excludes(nmin)->excludes(nmax);
        sub->add_option("--out", config.output, "Output file (default stdout)");
    };
    auto method_opts = [&](CLI::App* sub) {
        sub->add_option("--method", methods, "hermite, pencil, pencil_truncated, prony (comma list)")
            ->capture_default_str();
        sub->add_option("--truncation-T", config.truncation, "Interval half-width for pencil_truncated");
        sub->add_option("--prony-L", config.prony_order, "Highest derivative order (default 2N)");
        sub->add_option("--svd-cutoff", config.svd_cutoff, "Relative singular value cutoff")
            ->capture_default_str();
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--allow-unstable", config.allow_unstable,
                      "Run the pencil method past the double-precision window (N <= 20)");
    };

    auto* approx = app.add_subcommand("approx", "Build approximations, one JSON line per N");
    common(approx);
    method_opts(approx);

    auto* table = app.add_subcommand("error-table", "Error table over N and methods");
    common(table);
    method_opts(table);
    bool no_oracle = false;
    table->add_flag("--no-oracle", no_oracle, "Skip the quadrature oracle column");

    auto* bounds = app.add_subcommand("bound-check", "Check the error bounds, PASS/FAIL per check");
    common(bounds);
    bounds->add_option("--check", checks, "all, thm31, thm33, mn, lemma31, oracle, monotone")
        ->delimiter(',');

    std::vector<const char*> argv;
    for (const auto& a : args)
    {
        argv.push_back(a.c_str());
    }
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (n_single)
        {
            config.n_min = config.n_max = *n_single;
        }
        config.oracle = !no_oracle;
        if (bounds->parsed())
        {
            config.methods = {Method::hermite};
            const bool n_max_given = bounds->count("--n-max") > 0 || n_single.has_value();
            if (n_max_given)
            {
                validate(config);
            }
            else if (!(config.sigma > 0.0) || !(config.rho > 0.0))
            {
                throw DomainError("--sigma and --rho must be positive");
            }
            return cmd_bound_check(config, checks, n_max_given, out, err);
        }
        config.methods = parse_method_list(methods);
        if (approx->parsed())
        {
            config.format = format == "csv" ? Format::csv : Format::json;
            validate(config);
            return cmd_approx(config, out, err);
        }
        config.format = format == "json" ? Format::json : Format::csv;
        validate(config);
        return cmd_error_table(config, out, err);
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }
}

} // namespace gausskern::cli
