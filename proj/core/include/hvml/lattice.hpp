#pragma once

#include "hvml/report.hpp"
#include "hvml/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hvml
{

struct Cover
{
    Element lower;
    Element upper;
};

// A finite lattice on the ordinals 0..n-1 with every operation table filled
// at construction. Lattices are immutable; copying is cheap at the sizes used
// here (n <= 64).
//
// The Heyting implication a -> b is max{ x : a & x <= b }. In a finite
// lattice it exists for all a, b exactly when the lattice is distributive;
// for non-distributive input the table is left empty and is_heyting() is
// false, so the value can still be handed to check_lattice_laws().
class FiniteLattice
{
    std::size_t _size = 0;
    std::vector< char > _leq;
    std::vector< Element > _join;
    std::vector< Element > _meet;
    std::vector< Element > _implies;
    Element _bottom = 0;
    Element _top = 0;
    bool _distributive = false;
    std::vector< std::string > _labels;

    friend FiniteLattice build_lattice( std::size_t, const std::vector< Cover >&, std::vector< std::string > );

public:
    FiniteLattice() = default;

    [[nodiscard]] std::size_t size() const { return _size; }
    [[nodiscard]] Element bottom() const { return _bottom; }
    [[nodiscard]] Element top() const { return _top; }
    [[nodiscard]] bool is_distributive() const { return _distributive; }
    [[nodiscard]] bool is_heyting() const { return !_implies.empty(); }

    [[nodiscard]] bool leq( Element a, Element b ) const { return _leq[ a * _size + b ] != 0; }
    [[nodiscard]] Element join( Element a, Element b ) const { return _join[ a * _size + b ]; }
    [[nodiscard]] Element meet( Element a, Element b ) const { return _meet[ a * _size + b ]; }
    [[nodiscard]] Element implies( Element a, Element b ) const { return _implies[ a * _size + b ]; }
    [[nodiscard]] Element negate( Element a ) const { return implies( a, _bottom ); }

    [[nodiscard]] ElementSet carrier() const { return full_set( _size ); }
    [[nodiscard]] const std::string& label( Element a ) const { return _labels[ a ]; }
    [[nodiscard]] const std::vector< std::string >& labels() const { return _labels; }

    // Throws ElementOutOfRange.
    void require_element( Element a ) const;
    // Throws NotDistributive when the implication table is missing.
    void require_heyting() const;

    // Cover pairs of the Hasse diagram, sorted.
    [[nodiscard]] std::vector< Cover > covers() const;

    // Tables only; labels are presentation.
    friend bool operator==( const FiniteLattice& a, const FiniteLattice& b )
    {
        return a._size == b._size && a._leq == b._leq;
    }
};

// Builds the lattice whose order is the reflexive-transitive closure of
// `covers` on n elements. Throws CyclicCovers, NotALattice (with the
// offending pair) or ElementOutOfRange. Labels default to "0"/"1" for
// bottom/top and "e<i>" otherwise.
FiniteLattice build_lattice( std::size_t n, const std::vector< Cover >& covers,
                             std::vector< std::string > labels = {} );

// As build_lattice, but rejects non-distributive lattices (NotDistributive).
FiniteLattice build_heyting( std::size_t n, const std::vector< Cover >& covers,
                             std::vector< std::string > labels = {} );

// Catalogue constructors. All of these are distributive.
FiniteLattice chain( std::size_t n );
FiniteLattice boolean_lattice( std::size_t atoms );
FiniteLattice chain_product( std::size_t m, std::size_t n );
// The diamond 0 < a, b < 1 with ids 0 = bottom, 1 = a, 2 = b, 3 = top.
FiniteLattice diamond();
// M3: 0 < a, b, c < 1 (not distributive).
FiniteLattice m3();

// f(l1, l2, l3, l4) = l3 if l1 == l2 else l4.
Element term_switch( const FiniteLattice& lattice, Element l1, Element l2, Element l3, Element l4 );

// The same function written as a term over meet, join, implication and the
// T operators: (E & l3) | (~E & l4) with E = join_l ( T_l(l1) & T_l(l2) ).
Element term_switch_by_term( const FiniteLattice& lattice, Element l1, Element l2, Element l3, Element l4 );

// T_level(x): top if x == level, bottom otherwise.
Element t_op( const FiniteLattice& lattice, Element level, Element x );

// U_level(x): top if x >= level, bottom otherwise.
Element u_op( const FiniteLattice& lattice, Element level, Element x );

// Subsets closed under meet, join, implication and every T operator that
// contain bottom and top. Members are sorted by bitmask value, so
// { bottom, top } comes first and the full carrier last.
class SubalgebraFamily
{
    FiniteLattice _parent;
    std::vector< ElementSet > _members;

public:
    SubalgebraFamily() = default;
    SubalgebraFamily( FiniteLattice parent, std::vector< ElementSet > members );

    [[nodiscard]] const FiniteLattice& parent() const { return _parent; }
    [[nodiscard]] const std::vector< ElementSet >& members() const { return _members; }
    [[nodiscard]] std::size_t size() const { return _members.size(); }
    [[nodiscard]] ElementSet operator[]( std::size_t i ) const { return _members[ i ]; }

    [[nodiscard]] std::optional< std::size_t > index_of( ElementSet s ) const;
    [[nodiscard]] std::size_t full_index() const { return _members.size() - 1; }

    friend bool operator==( const SubalgebraFamily&, const SubalgebraFamily& ) = default;
};

bool is_subalgebra( const FiniteLattice& lattice, ElementSet s );

// Plain subset scan for |L| <= 12, closure search above that.
SubalgebraFamily enumerate_subalgebras( const FiniteLattice& lattice );
// Closure search: every subalgebra reached by adjoining one element at a time
// to { bottom, top }. Exposed for cross-checking against the subset scan.
SubalgebraFamily enumerate_subalgebras_by_closure( const FiniteLattice& lattice );

// Smallest subalgebra containing `generators`.
ElementSet subalgebra_closure( const FiniteLattice& lattice, ElementSet generators );

// Law-by-law verification with the first counterexample on failure.
// Valid on non-distributive input; residuation is reported as failing when
// the implication table is absent.
Report check_lattice_laws( const FiniteLattice& lattice );

// Lukasiewicz n-valued operations on the ordinals 0..n-1, value(k) = k/(n-1).
class LukasiewiczTables
{
    std::size_t _n = 0;
    std::vector< Element > _max, _min, _strong_and, _strong_or, _implies, _complement;

    friend LukasiewiczTables lukasiewicz_tables( std::size_t );

public:
    [[nodiscard]] std::size_t size() const { return _n; }
    [[nodiscard]] std::pair< std::size_t, std::size_t > value( Element k ) const { return { k, _n - 1 }; }

    [[nodiscard]] Element join( Element p, Element q ) const { return _max[ p * _n + q ]; }
    [[nodiscard]] Element meet( Element p, Element q ) const { return _min[ p * _n + q ]; }
    // max(0, p + q - 1)
    [[nodiscard]] Element strong_and( Element p, Element q ) const { return _strong_and[ p * _n + q ]; }
    // min(1, p + q)
    [[nodiscard]] Element strong_or( Element p, Element q ) const { return _strong_or[ p * _n + q ]; }
    // min(1, 1 - p + q)
    [[nodiscard]] Element implies( Element p, Element q ) const { return _implies[ p * _n + q ]; }
    // 1 - p
    [[nodiscard]] Element complement( Element p ) const { return _complement[ p ]; }
};

// Throws InvalidArity for n < 2.
LukasiewiczTables lukasiewicz_tables( std::size_t n );

} // namespace hvml
