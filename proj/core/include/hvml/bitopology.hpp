#pragma once

#include "hvml/lattice.hpp"
#include "hvml/relation.hpp"
#include "hvml/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hvml
{

// Upper bound on the points of a space whose open sets may be listed
// explicitly (open_sets, beta1/beta2 enumeration).
inline constexpr std::size_t max_enumerated_points = 20;

// A topology on the points 0..n-1. A finite topology is determined by the
// smallest open set containing each point, so that is all we keep: S is
// open iff min_open(x) is inside S for every x in S. This keeps spaces with
// thousands of open sets (Vietoris spaces) at n words of storage.
class Topology
{
    std::vector< PointSet > _min_open;

public:
    Topology() = default;
    // Throws NotWellDefined unless x is in m[x] and y in m[x] implies
    // m[y] is inside m[x].
    explicit Topology( std::vector< PointSet > min_open );

    static Topology discrete( std::size_t n );
    static Topology indiscrete( std::size_t n );

    [[nodiscard]] std::size_t size() const { return _min_open.size(); }
    [[nodiscard]] PointSet points() const { return full_set( size() ); }
    [[nodiscard]] PointSet minimal_open( std::size_t x ) const { return _min_open[ x ]; }
    [[nodiscard]] const std::vector< PointSet >& minimal_opens() const { return _min_open; }

    [[nodiscard]] bool is_open( PointSet s ) const;
    [[nodiscard]] bool is_closed( PointSet s ) const { return is_open( complement( s, size() ) ); }
    [[nodiscard]] PointSet interior( PointSet s ) const;
    [[nodiscard]] PointSet closure( PointSet s ) const;
    [[nodiscard]] bool is_discrete() const;

    // All open sets in increasing mask order. Throws CapExceeded above
    // max_enumerated_points.
    [[nodiscard]] std::vector< PointSet > open_sets() const;
    // Number of open sets without listing them; nullopt past 2^64 - 1.
    [[nodiscard]] std::optional< std::uint64_t > count_open_sets() const;

    friend bool operator==( const Topology&, const Topology& ) = default;
};

// Smallest topology containing every set of the subbasis.
Topology generate_topology( std::size_t n, const std::vector< PointSet >& subbasis );

// tau1 v tau2, the topology generated by the union of the two.
Topology join_topology( const Topology& a, const Topology& b );

// The topology whose open sets are exactly `family`, or nullopt when the
// family is not closed under finite intersection and union or misses the
// empty or full set.
std::optional< Topology > topology_from_family( std::size_t n, const std::vector< PointSet >& family );

struct BitopSpace
{
    Topology tau1;
    Topology tau2;

    BitopSpace() = default;
    // Throws ArityMismatch when the topologies live on different point sets.
    BitopSpace( Topology t1, Topology t2 );

    static BitopSpace discrete( std::size_t n ) { return { Topology::discrete( n ), Topology::discrete( n ) }; }

    [[nodiscard]] std::size_t size() const { return tau1.size(); }
    [[nodiscard]] PointSet points() const { return tau1.points(); }

    // beta1 = tau1-open and tau2-closed; beta2 the other way round.
    [[nodiscard]] bool in_beta1( PointSet s ) const { return tau1.is_open( s ) && tau2.is_closed( s ); }
    [[nodiscard]] bool in_beta2( PointSet s ) const { return tau2.is_open( s ) && tau1.is_closed( s ); }
    [[nodiscard]] std::vector< PointSet > beta1() const;
    [[nodiscard]] std::vector< PointSet > beta2() const;

    [[nodiscard]] Topology join() const { return join_topology( tau1, tau2 ); }

    friend bool operator==( const BitopSpace&, const BitopSpace& ) = default;
};

struct PredicateResult
{
    bool holds = true;
    std::string witness;

    explicit operator bool() const { return holds; }
};

// Ordered: every ordered pair (x, y), x != y, needs disjoint U in tau1
// around x and V in tau2 around y. Unordered: one of (x, y), (y, x) is
// enough.
enum class HausdorffReading
{
    Ordered,
    Unordered,
};

PredicateResult is_pairwise_hausdorff( const BitopSpace& space, HausdorffReading reading = HausdorffReading::Ordered );
PredicateResult is_pairwise_zero_dimensional( const BitopSpace& space );
PredicateResult is_pairwise_compact( const BitopSpace& space );
PredicateResult is_pairwise_boolean( const BitopSpace& space,
                                     HausdorffReading reading = HausdorffReading::Ordered );

// Indices of a finite subfamily of `cover` whose union is `target`, or
// nullopt when `cover` does not cover it.
std::optional< std::vector< std::size_t > > finite_subcover( PointSet target, const std::vector< PointSet >& cover );

// Closed in tau1 v tau2.
bool is_pairwise_closed( const BitopSpace& space, PointSet s );

// A pairwise Boolean space with a subspace alpha(L') for every subalgebra
// L' of the truth lattice, indexed like `family`.
struct PBSObject
{
    SubalgebraFamily family;
    BitopSpace space;
    std::vector< PointSet > alpha;

    friend bool operator==( const PBSObject&, const PBSObject& ) = default;
};

// (L, discrete, discrete) with alpha(L') = L'.
PBSObject canonical_lattice_object( const FiniteLattice& lattice );

// pairwise_boolean, alpha_top, alpha_meet, alpha_closed. Throws
// AlphaDomainMismatch when alpha does not have one entry per subalgebra.
Report check_pbs_object( const PBSObject& object );

struct PRBSObject
{
    PBSObject base;
    Relation relation;

    friend bool operator==( const PRBSObject&, const PRBSObject& ) = default;
};

// pbs.* from check_pbs_object, then prbs_i (each R[p] pairwise compact),
// prbs_ii ([R]C and <R>C in beta1 for C in beta1), prbs_iii (R[m] inside
// alpha(L') for m in alpha(L')).
Report check_prbs_object( const PRBSObject& object );

// f(x) for every point x of the source.
using PointMap = std::vector< std::size_t >;

PredicateResult is_pairwise_continuous( const PointMap& f, const BitopSpace& from, const BitopSpace& to );
PredicateResult is_subspace_preserving( const PointMap& f, const PBSObject& from, const PBSObject& to );
PredicateResult is_pbs_morphism( const PointMap& f, const PBSObject& from, const PBSObject& to );
// PBS morphism plus forth (p R q gives f(p) R' f(q)) and back (f(p) R' q'
// gives some q with p R q and f(q) = q').
PredicateResult is_prbs_morphism( const PointMap& f, const PRBSObject& from, const PRBSObject& to );

// f[s]
PointSet image( const PointMap& f, PointSet s );
// f^-1[s]
PointSet preimage( const PointMap& f, PointSet s );

} // namespace hvml
