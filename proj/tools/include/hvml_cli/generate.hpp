#pragma once

#include "hvml/bitopology.hpp"
#include "hvml/lattice.hpp"
#include "hvml/relation.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hvml::cli
{

using Rng = std::mt19937_64;

// Uniform enough for instance generation and stable across standard
// libraries, unlike std::uniform_int_distribution.
inline std::size_t draw( Rng& rng, std::size_t n ) { return static_cast< std::size_t >( rng() % n ); }

// Distributive lattices with at most 8 elements.
const std::vector< std::string >& lattice_catalogue();

// Edge density in percent drawn first, then each edge independently.
Relation random_frame( Rng& rng, std::size_t points );

// Discrete PRBS object on `points` points: every point p gets a random
// subalgebra F(p), alpha(L') = { p : F(p) inside L' }, and edges p -> q
// only when F(q) is inside F(p).
PRBSObject random_prbs_object( Rng& rng, const FiniteLattice& lattice, std::size_t points );

// Random subbases for both topologies, redrawn until the result is
// pairwise Boolean. Gives up after `attempts` and refines to discrete.
BitopSpace random_boolean_space( Rng& rng, std::size_t points, std::size_t attempts = 64 );

struct GenerateOptions
{
    std::uint64_t seed = 0;
    std::size_t points = 0; // 0: drawn from the seed, 1..max_points
    std::size_t max_points = 4;
};

// kind is one of lattice, powerset-algebra, frame, bitop-space, prbs-object.
// Output is in the matching file format. Throws ParseError for an unknown
// kind.
std::string generate_instance( std::string_view kind, const GenerateOptions& options );

inline constexpr std::string_view generate_kinds = "lattice, powerset-algebra, frame, bitop-space, prbs-object";

} // namespace hvml::cli
