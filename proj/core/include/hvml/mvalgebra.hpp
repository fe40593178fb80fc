#pragma once

#include "hvml/lattice.hpp"
#include "hvml/relation.hpp"
#include "hvml/report.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hvml
{

inline constexpr std::size_t default_max_carrier = 4096;

// Raw operation tables of a finite algebra over a truth lattice L.
// Binary tables are row-major (a * size + b); `t` holds one row per level
// of L (level * size + a).
struct AlgebraTables
{
    std::size_t size = 0;
    std::vector< Element > meet;
    std::vector< Element > join;
    std::vector< Element > implies;
    std::vector< Element > t;
    Element bottom = 0;
    Element top = 0;
    std::optional< std::vector< Element > > box;

    friend bool operator==( const AlgebraTables&, const AlgebraTables& ) = default;
};

// A finite algebra with the Heyting operations and the truth-level operators
// T_l for every l in L, optionally with a modal operator. Whether it is an
// L-VL (or, with box, L-ML) algebra is a property checked by
// check_lvl_axioms / check_lml_axioms, not an invariant of the type.
class MVAlgebra
{
    FiniteLattice _truth;
    AlgebraTables _tables;
    std::vector< std::string > _labels;

public:
    MVAlgebra() = default;

    // Validates table shapes (ArityMismatch, TruthLatticeMismatch) and
    // ranges (ElementOutOfRange). The truth lattice must be Heyting.
    MVAlgebra( FiniteLattice truth, AlgebraTables tables, std::vector< std::string > labels = {} );

    [[nodiscard]] const FiniteLattice& truth() const { return _truth; }
    [[nodiscard]] const AlgebraTables& tables() const { return _tables; }
    [[nodiscard]] std::size_t size() const { return _tables.size; }
    [[nodiscard]] std::size_t levels() const { return _truth.size(); }

    [[nodiscard]] Element bottom() const { return _tables.bottom; }
    [[nodiscard]] Element top() const { return _tables.top; }
    [[nodiscard]] Element meet( Element a, Element b ) const { return _tables.meet[ a * size() + b ]; }
    [[nodiscard]] Element join( Element a, Element b ) const { return _tables.join[ a * size() + b ]; }
    [[nodiscard]] Element implies( Element a, Element b ) const { return _tables.implies[ a * size() + b ]; }
    [[nodiscard]] Element t( Element level, Element a ) const { return _tables.t[ level * size() + a ]; }
    [[nodiscard]] Element negate( Element a ) const { return implies( a, bottom() ); }
    [[nodiscard]] Element iff( Element a, Element b ) const { return meet( implies( a, b ), implies( b, a ) ); }
    [[nodiscard]] bool leq( Element a, Element b ) const { return meet( a, b ) == a; }

    [[nodiscard]] bool has_box() const { return _tables.box.has_value(); }
    // Throws MissingBox.
    [[nodiscard]] Element box( Element a ) const;

    [[nodiscard]] MVAlgebra with_box( std::vector< Element > box ) const;
    [[nodiscard]] MVAlgebra without_box() const;

    [[nodiscard]] const std::string& label( Element a ) const { return _labels[ a ]; }

    friend bool operator==( const MVAlgebra& a, const MVAlgebra& b )
    {
        return a._truth == b._truth && a._tables == b._tables;
    }
};

// L itself, with T_l given by t_op.
MVAlgebra lattice_algebra( const FiniteLattice& lattice );

// The subalgebra `members` of L as an algebra in its own right, elements
// renumbered in increasing order of their ids in L.
MVAlgebra lattice_subalgebra( const FiniteLattice& lattice, ElementSet members );

// Functions f on points 0..k-1 with f(p) in factors[p], all operations
// pointwise. Elements are numbered lexicographically in (f(0), ..., f(k-1)),
// point 0 most significant. Throws SizeOverflow above `max_carrier`.
MVAlgebra product_algebra( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                           std::size_t max_carrier = default_max_carrier );

// Coordinates (f(0), ..., f(k-1)) of element `index` of product_algebra.
std::vector< Element > product_coordinates( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                                            Element index );
Element product_index( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                       std::span< const Element > coordinates );

// The L-valued powerset algebra L^P with |P| = points. points == 0 gives
// the one-element algebra.
MVAlgebra powerset_algebra( const FiniteLattice& lattice, std::size_t points,
                            std::size_t max_carrier = default_max_carrier );

// L^P with (box f)(x) = meet { f(y) : x R y }, the empty meet being top.
MVAlgebra box_from_frame( const FiniteLattice& lattice, const Relation& frame,
                          std::size_t max_carrier = default_max_carrier );

// product_algebra(factors) with the frame's box. Throws NotWellDefined if
// the box leaves the carrier.
MVAlgebra product_frame_algebra( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                                 const Relation& frame, std::size_t max_carrier = default_max_carrier );

// Checks the seven axiom groups of an L-VL algebra, one report line each
// (axiom_i .. axiom_vii) with the first counterexample (a, b, l1, l2).
Report check_lvl_axioms( const MVAlgebra& algebra );

// box(a & b) = box a & box b (axiom_ml_ii) and box U_l(a) = U_l(box a)
// (axiom_ml_iii). Throws MissingBox.
Report check_lml_axioms( const MVAlgebra& algebra );

// U_l(a) = join { T_l'(a) : l <= l' }.
Element derived_u( const MVAlgebra& algebra, Element level, Element a );

struct AlgebraHom
{
    std::vector< Element > map;

    [[nodiscard]] Element operator()( Element a ) const { return map[ a ]; }

    friend auto operator<=>( const AlgebraHom&, const AlgebraHom& ) = default;
};

struct HomCheck
{
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
};

// True iff `map` preserves meet, join, implication, 0, 1 and every T_l,
// and box when both algebras have one. Throws ArityMismatch when the map
// has the wrong length, TruthLatticeMismatch when the truth lattices differ.
HomCheck is_homomorphism( std::span< const Element > map, const MVAlgebra& source, const MVAlgebra& target );

// All L-VL homomorphisms A -> L' where L' is the subalgebra `target` of the
// truth lattice (box is ignored), sorted lexicographically by map table.
std::vector< AlgebraHom > enumerate_homs( const MVAlgebra& algebra, ElementSet target );
std::vector< AlgebraHom > enumerate_homs( const MVAlgebra& algebra );

// All homomorphisms A -> B; box is required to be preserved only when
// `preserve_box` is set and both sides carry one.
std::vector< AlgebraHom > enumerate_homs_between( const MVAlgebra& source, const MVAlgebra& target,
                                                  bool preserve_box = false );

} // namespace hvml
