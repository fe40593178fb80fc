#pragma once

#include "hvml/duality.hpp"
#include "hvml/report.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace hvml::cli
{

struct BatteryOptions
{
    std::uint64_t seed = 0;
    std::size_t max_candidates = default_max_candidates;
    std::set< int > only; // empty: criteria 1..9
};

struct CriterionResult
{
    int number = 0;
    std::string title;
    Report report; // one line per instance, named c<number>.<instance>
    double seconds = 0;
};

std::vector< CriterionResult > run_battery( const BatteryOptions& options );

// Check lines only; timings are left out so the text is seed-deterministic.
std::string battery_lines( const std::vector< CriterionResult >& results );

// Algebras shared by criteria 3 to 6 and 9.
struct BatteryAlgebra
{
    std::string name;
    MVAlgebra algebra;
    bool powerset = false; // L^P with a frame box, so |homs| = points
    std::size_t points = 0;
};

std::vector< BatteryAlgebra > battery_algebras( std::uint64_t seed );
std::vector< std::pair< std::string, PRBSObject > > battery_objects( std::uint64_t seed );

} // namespace hvml::cli
