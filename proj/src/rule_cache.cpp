#include "gausskern/rule_cache.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gausskern/errors.hpp"

namespace gausskern
{

namespace
{

std::string format17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void write_rule(std::ostream& os, const HermiteRule& rule)
{
    for (int j = 0; j < rule.degree; ++j)
    {
        os << rule.degree << ' ' << (j + 1) << ' ' << format17(rule.zeros[j]) << ' '
           << format17(rule.weights[j]) << '\n';
    }
}

std::map<int, HermiteRule> read_rules(std::istream& is)
{
    std::map<int, HermiteRule> rules;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line))
    {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
        {
            continue;
        }
        std::istringstream fields(line);
        int n = 0;
        int j = 0;
        double t = 0.0;
        double w = 0.0;
        if (!(fields >> n >> j >> t >> w) || n < 1 || j < 1 || j > n)
        {
            throw DomainError("rule cache: malformed record on line " + std::to_string(line_no));
        }
        auto& rule = rules[n];
        if (rule.degree == 0)
        {
            rule.degree = n;
            rule.zeros.assign(n, std::nan(""));
            rule.weights.assign(n, std::nan(""));
        }
        rule.zeros[j - 1]   = t;
        rule.weights[j - 1] = w;
    }

    for (auto& [n, rule] : rules)
    {
        rule.scaled_weights.resize(n);
        for (int j = 0; j < n; ++j)
        {
            if (std::isnan(rule.zeros[j]) || std::isnan(rule.weights[j]))
            {
                throw DomainError("rule cache: rule " + std::to_string(n) + " is incomplete");
            }
            const double psi      = hermite_function(n + 1, rule.zeros[j]);
            rule.scaled_weights[j] = 1.0 / ((n + 1.0) * psi * psi);
        }
    }
    return rules;
}

std::optional<std::filesystem::path> rule_cache_path_from_env()
{
    const char* value = std::getenv(rule_cache_env);
    if (value == nullptr || *value == '\0')
    {
        return std::nullopt;
    }
    return std::filesystem::path(value);
}

HermiteRule cached_hermite_rule(int n, const std::filesystem::path& cache)
{
    std::ifstream in(cache);
    if (in)
    {
        auto rules = read_rules(in);
        if (auto it = rules.find(n); it != rules.end())
        {
            return std::move(it->second);
        }
    }
    return hermite_rule(n);
}

HermiteRule cached_hermite_rule(int n)
{
    if (auto path = rule_cache_path_from_env())
    {
        return cached_hermite_rule(n, *path);
    }
    return hermite_rule(n);
}

void store_rule(const HermiteRule& rule, const std::filesystem::path& cache)
{
    {
        std::ifstream in(cache);
        if (in && read_rules(in).contains(rule.degree))
        {
            return;
        }
    }
    std::ofstream out(cache, std::ios::app);
    if (!out)
    {
        throw Error("rule cache: cannot open " + cache.string() + " for writing");
    }
    write_rule(out, rule);
}

} // namespace gausskern
