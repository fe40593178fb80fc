#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hvml::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_check_failed = 1,
    exit_parse_error = 2,
    exit_cap_exceeded = 3,
    exit_unknown_verb = 4,
    exit_usage = 5,
    exit_library_error = 6,
};

enum class OutputMode
{
    Human,
    Machine,
    Json,
};

struct RunConfig
{
    std::string verb;
    std::vector< std::string > inputs;
    std::size_t max_lattice = 8;
    std::size_t max_points = 4;
    std::size_t max_candidates = 1'000'000;
    std::uint64_t seed = 0;
    OutputMode mode = OutputMode::Human;
    std::optional< std::size_t > world;  // modelcheck
    std::optional< std::size_t > target; // homs: subalgebra index
    std::size_t points = 0;              // generate
    std::string output;                  // write the produced instance here
};

inline constexpr const char* verbs[] = { "check-lattice", "check-algebra", "homs",       "dualize",
                                         "roundtrip",     "vietoris",      "coalg-roundtrip", "modelcheck",
                                         "battery",       "generate" };

// Caps default from HVML_MAX_LATTICE, HVML_MAX_POINTS and
// HVML_MAX_CANDIDATES when set.
RunConfig default_config();

int run( const RunConfig& config, std::ostream& out, std::ostream& err );

// argv without the program name.
int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace hvml::cli
