#ifndef GAUSSKERN_RULE_CACHE_HPP
#define GAUSSKERN_RULE_CACHE_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>

#include "gausskern/hermite.hpp"

namespace gausskern
{

/// Environment variable naming the Gauss-Hermite rule cache file.
inline constexpr const char* rule_cache_env = "GAUSSKERN_RULE_CACHE";

///
/// Plain-text rule records: one line "N j t_j w_j" per node (j is 1-based,
/// reals with 17 significant digits). A file may hold any number of rules.
///
void write_rule(std::ostream& os, const HermiteRule& rule);

/// Parses every complete rule in the stream. Scaled weights are recomputed
/// from the nodes. Throws DomainError on malformed or incomplete records.
std::map<int, HermiteRule> read_rules(std::istream& is);

/// Rule of degree n from `cache` if present there, else computed.
HermiteRule cached_hermite_rule(int n, const std::filesystem::path& cache);

/// As above with the path taken from GAUSSKERN_RULE_CACHE; computes
/// directly when the variable is unset.
HermiteRule cached_hermite_rule(int n);

/// Appends the rule to the cache file unless a rule of that degree is
/// already stored. Not safe against concurrent writers.
void store_rule(const HermiteRule& rule, const std::filesystem::path& cache);

std::optional<std::filesystem::path> rule_cache_path_from_env();

} // namespace gausskern

#endif
