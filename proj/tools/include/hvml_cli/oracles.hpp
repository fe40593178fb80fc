#pragma once

#include "hvml/lattice.hpp"
#include "hvml/mvalgebra.hpp"

#include <vector>

// Slow reference implementations used to cross-check the library.
namespace hvml::cli::oracle
{

// Every map A -> L' built element by element; a partial map is dropped as
// soon as some constraint between already assigned elements fails. No
// propagation, no generating sets. Sorted by map table.
std::vector< AlgebraHom > brute_force_homs( const MVAlgebra& algebra, ElementSet target );

// Subsets of L containing 0 and 1 and closed under every operation, by
// plain scan. Sorted by mask.
std::vector< ElementSet > scan_subalgebras( const FiniteLattice& lattice );

// Greatest x with a & x <= b, by scanning. Only meaningful when L is
// distributive.
Element max_implication( const FiniteLattice& lattice, Element a, Element b );

} // namespace hvml::cli::oracle
