#ifndef EFFSPEC_TOOLS_CLI_HPP
#define EFFSPEC_TOOLS_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace effspec::cli {

/// Enumeration cap resolved from EFFSPEC_MAX_N (unset: library defaults).
struct Limits {
  std::size_t subset_cap;
  std::size_t clan_cap;
};

/// Parses an EFFSPEC_MAX_N value. Returns nullopt for a malformed value;
/// values above the hard ceiling are clamped to it.
std::optional<Limits> limits_from_env(const char* value);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* max_n_env = nullptr);

}  // namespace effspec::cli

#endif  // EFFSPEC_TOOLS_CLI_HPP
