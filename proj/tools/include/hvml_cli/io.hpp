#pragma once

#include "hvml/bitopology.hpp"
#include "hvml/logic.hpp"
#include "hvml/mvalgebra.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace hvml::cli
{

// Either a catalogue name (chain:N, boolean:K, product:MxN, diamond, m3)
// or a path to a lattice file. Relative paths resolve against `base`.
FiniteLattice resolve_lattice( std::string_view spec, const std::filesystem::path& base = {} );

// Lattice file:
//   elements: 4
//   labels: 0 a b 1        (optional)
//   covers:
//   0 < 1
//   ...
// Throws ParseError with the line number.
FiniteLattice parse_lattice( std::string_view text );
std::string serialize_lattice( const FiniteLattice& lattice );

// Algebra file, one of
//   powerset L=<lattice> P=<n>      followed by an optional R: edge block
// or
//   algebra
//   lattice: <lattice>
//   size: n
//   bottom: i
//   top: i
//   labels: ...                     (optional)
//   meet: / join: / implies:        n rows of n entries each
//   T <level>:                      one row of n entries per level
//   box:                            one row (optional)
MVAlgebra parse_algebra( std::string_view text, const std::filesystem::path& base = {},
                         std::size_t max_carrier = default_max_carrier );
// Always the explicit table form.
std::string serialize_algebra( const MVAlgebra& algebra, std::string_view lattice_spec );

// Space file:
//   lattice: <lattice>              (optional, default chain:2)
//   points: n
//   tau1:                           subbasis sets as brace lists
//   {0} {1,2}
//   tau2:
//   ...
//   R:                              optional edge block "p q"
//   alpha:                          optional, "index: {set}"; missing
//   0: {0}                          entries default to all points
struct SpaceFile
{
    PBSObject object;
    std::optional< Relation > relation;
    std::string lattice_spec;
};

SpaceFile parse_space( std::string_view text, const std::filesystem::path& base = {} );
std::string serialize_space( const PBSObject& object, const std::optional< Relation >& relation,
                             std::string_view lattice_spec );

// Model (or frame) file:
//   worlds: n
//   R:
//   0 1
//   valuation:                      optional
//   p = v0 v1 ...                   ordinals or lattice labels
KripkeModel parse_model( std::string_view text, const FiniteLattice& lattice );
// Values are written as labels of `lattice`.
std::string serialize_model( const KripkeModel& model, const FiniteLattice& lattice );

std::string read_file( const std::filesystem::path& path );

} // namespace hvml::cli
