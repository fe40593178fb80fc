#include "hvml/bitopology.hpp"

#include <algorithm>
#include <unordered_map>

namespace hvml
{

namespace
{

void require_points( std::size_t n )
{
    if ( n > max_set_universe )
        throw Error( ErrorKind::SizeOverflow, "spaces hold at most 64 points, got " + std::to_string( n ) );
}

std::string pair_text( std::size_t x, std::size_t y )
{
    return "(" + std::to_string( x ) + "," + std::to_string( y ) + ")";
}

void check_map( const PointMap& f, std::size_t from, std::size_t to )
{
    if ( f.size() != from )
        throw Error( ErrorKind::ArityMismatch, "map has " + std::to_string( f.size() ) + " entries, source has " +
                                                   std::to_string( from ) + " points" );
    for ( auto y : f )
        if ( y >= to )
            throw Error( ErrorKind::ElementOutOfRange, "map sends a point to " + std::to_string( y ) );
}

} // namespace

Topology::Topology( std::vector< PointSet > min_open ) : _min_open{ std::move( min_open ) }
{
    require_points( _min_open.size() );
    const PointSet all = points();
    for ( std::size_t x = 0; x < _min_open.size(); ++x )
    {
        const PointSet m = _min_open[ x ];
        if ( !contains( m, x ) || !is_subset( m, all ) )
            throw Error( ErrorKind::NotWellDefined, "minimal open set of point " + std::to_string( x ) + " is invalid" );
        for ( auto y : members( m ) )
            if ( !is_subset( _min_open[ y ], m ) )
                throw Error( ErrorKind::NotWellDefined, "minimal open sets are not nested at " + pair_text( x, y ) );
    }
}

Topology Topology::discrete( std::size_t n )
{
    require_points( n );
    std::vector< PointSet > m( n );
    for ( std::size_t x = 0; x < n; ++x )
        m[ x ] = bit( x );
    return Topology( std::move( m ) );
}

Topology Topology::indiscrete( std::size_t n )
{
    require_points( n );
    return Topology( std::vector< PointSet >( n, full_set( n ) ) );
}

bool Topology::is_open( PointSet s ) const
{
    for ( auto x : members( s ) )
        if ( x >= size() || !is_subset( _min_open[ x ], s ) )
            return false;
    return true;
}

PointSet Topology::interior( PointSet s ) const
{
    PointSet out = 0;
    for ( std::size_t x = 0; x < size(); ++x )
        if ( is_subset( _min_open[ x ], s ) )
            out |= bit( x );
    return out;
}

PointSet Topology::closure( PointSet s ) const
{
    PointSet out = 0;
    for ( std::size_t x = 0; x < size(); ++x )
        if ( ( _min_open[ x ] & s ) != 0 )
            out |= bit( x );
    return out;
}

bool Topology::is_discrete() const
{
    for ( std::size_t x = 0; x < size(); ++x )
        if ( _min_open[ x ] != bit( x ) )
            return false;
    return true;
}

std::optional< std::uint64_t > Topology::count_open_sets() const
{
    // Deciding the lowest undecided point x either pulls all of m[x] in or
    // pushes every y with x in m[y] out. After that the count only depends
    // on the undecided set, so it is memoised on that alone.
    const std::size_t n = size();
    std::vector< PointSet > above( n, 0 );
    for ( std::size_t y = 0; y < n; ++y )
        for ( auto x : members( _min_open[ y ] ) )
            above[ x ] |= bit( y );

    std::unordered_map< PointSet, std::optional< std::uint64_t > > memo;
    auto count = [ & ]( auto&& self, PointSet undecided ) -> std::optional< std::uint64_t > {
        if ( undecided == 0 )
            return 1;
        if ( auto it = memo.find( undecided ); it != memo.end() )
            return it->second;
        const auto x = static_cast< std::size_t >( std::countr_zero( undecided ) );
        const auto with = self( self, undecided & ~_min_open[ x ] );
        const auto without = self( self, undecided & ~above[ x ] );
        std::optional< std::uint64_t > total;
        std::uint64_t sum = 0;
        if ( with && without && !__builtin_add_overflow( *with, *without, &sum ) )
            total = sum;
        memo.emplace( undecided, total );
        return total;
    };
    return count( count, points() );
}

std::vector< PointSet > Topology::open_sets() const
{
    if ( size() > max_enumerated_points )
        throw Error( ErrorKind::CapExceeded, "refusing to list the open sets of a " + std::to_string( size() ) +
                                                 "-point space" );
    std::vector< PointSet > out;
    const PointSet end = bit( size() );
    for ( PointSet s = 0; s < end; ++s )
        if ( is_open( s ) )
            out.push_back( s );
    return out;
}

Topology generate_topology( std::size_t n, const std::vector< PointSet >& subbasis )
{
    require_points( n );
    std::vector< PointSet > m( n, full_set( n ) );
    for ( auto s : subbasis )
    {
        if ( !is_subset( s, full_set( n ) ) )
            throw Error( ErrorKind::ElementOutOfRange, "subbasis set " + format_set( s ) + " is not inside the space" );
        for ( auto x : members( s ) )
            m[ x ] &= s;
    }
    return Topology( std::move( m ) );
}

Topology join_topology( const Topology& a, const Topology& b )
{
    if ( a.size() != b.size() )
        throw Error( ErrorKind::ArityMismatch, "topologies on different point sets" );
    std::vector< PointSet > m( a.size() );
    for ( std::size_t x = 0; x < a.size(); ++x )
        m[ x ] = a.minimal_open( x ) & b.minimal_open( x );
    return Topology( std::move( m ) );
}

std::optional< Topology > topology_from_family( std::size_t n, const std::vector< PointSet >& family )
{
    require_points( n );
    if ( n > max_enumerated_points )
        throw Error( ErrorKind::CapExceeded, "explicit families are limited to 20 points" );
    Topology t = generate_topology( n, family );
    std::vector< PointSet > sorted = family;
    std::sort( sorted.begin(), sorted.end() );
    sorted.erase( std::unique( sorted.begin(), sorted.end() ), sorted.end() );
    if ( sorted != t.open_sets() )
        return std::nullopt;
    return t;
}

BitopSpace::BitopSpace( Topology t1, Topology t2 ) : tau1{ std::move( t1 ) }, tau2{ std::move( t2 ) }
{
    if ( tau1.size() != tau2.size() )
        throw Error( ErrorKind::ArityMismatch, "tau1 has " + std::to_string( tau1.size() ) + " points, tau2 has " +
                                                   std::to_string( tau2.size() ) );
}

std::vector< PointSet > BitopSpace::beta1() const
{
    std::vector< PointSet > out;
    for ( auto s : tau1.open_sets() )
        if ( tau2.is_closed( s ) )
            out.push_back( s );
    return out;
}

std::vector< PointSet > BitopSpace::beta2() const
{
    std::vector< PointSet > out;
    for ( auto s : tau2.open_sets() )
        if ( tau1.is_closed( s ) )
            out.push_back( s );
    return out;
}

// The smallest tau1-open set around x and tau2-open set around y are the
// best candidates: any disjoint pair shrinks to them.
PredicateResult is_pairwise_hausdorff( const BitopSpace& space, HausdorffReading reading )
{
    const auto n = space.size();
    auto separated = [ & ]( std::size_t x, std::size_t y ) {
        return ( space.tau1.minimal_open( x ) & space.tau2.minimal_open( y ) ) == 0;
    };
    for ( std::size_t x = 0; x < n; ++x )
        for ( std::size_t y = 0; y < n; ++y )
        {
            if ( x == y )
                continue;
            if ( reading == HausdorffReading::Ordered && !separated( x, y ) )
                return { false, pair_text( x, y ) };
            if ( reading == HausdorffReading::Unordered && x < y && !separated( x, y ) && !separated( y, x ) )
                return { false, pair_text( x, y ) };
        }
    return {};
}

// beta1 is a basis for tau1 iff each minimal tau1-open set is itself in
// beta1, i.e. tau2-closed.
PredicateResult is_pairwise_zero_dimensional( const BitopSpace& space )
{
    for ( std::size_t x = 0; x < space.size(); ++x )
    {
        if ( !space.tau2.is_closed( space.tau1.minimal_open( x ) ) )
            return { false, "tau1 at point " + std::to_string( x ) };
        if ( !space.tau1.is_closed( space.tau2.minimal_open( x ) ) )
            return { false, "tau2 at point " + std::to_string( x ) };
    }
    return {};
}

std::optional< std::vector< std::size_t > > finite_subcover( PointSet target, const std::vector< PointSet >& cover )
{
    std::vector< std::size_t > chosen;
    PointSet covered = 0;
    while ( !is_subset( target, covered ) )
    {
        std::size_t best = cover.size();
        std::size_t gain = 0;
        for ( std::size_t i = 0; i < cover.size(); ++i )
        {
            const std::size_t g = cardinality( cover[ i ] & target & ~covered );
            if ( g > gain )
            {
                gain = g;
                best = i;
            }
        }
        if ( best == cover.size() )
            return std::nullopt;
        chosen.push_back( best );
        covered |= cover[ best ];
    }
    return chosen;
}

// Every tau1- or tau2-open cover is refined by the minimal open sets, so
// covering by those is the general case.
PredicateResult is_pairwise_compact( const BitopSpace& space )
{
    std::vector< PointSet > cover;
    for ( std::size_t x = 0; x < space.size(); ++x )
    {
        cover.push_back( space.tau1.minimal_open( x ) );
        cover.push_back( space.tau2.minimal_open( x ) );
    }
    if ( !finite_subcover( space.points(), cover ) )
        return { false, "no finite subcover" };
    return {};
}

PredicateResult is_pairwise_boolean( const BitopSpace& space, HausdorffReading reading )
{
    if ( auto h = is_pairwise_hausdorff( space, reading ); !h )
        return { false, "hausdorff " + h.witness };
    if ( auto z = is_pairwise_zero_dimensional( space ); !z )
        return { false, "zero_dimensional " + z.witness };
    if ( auto c = is_pairwise_compact( space ); !c )
        return { false, "compact " + c.witness };
    return {};
}

bool is_pairwise_closed( const BitopSpace& space, PointSet s )
{
    return space.join().is_closed( s );
}

PBSObject canonical_lattice_object( const FiniteLattice& lattice )
{
    auto family = enumerate_subalgebras( lattice );
    std::vector< PointSet > alpha = family.members();
    return { std::move( family ), BitopSpace::discrete( lattice.size() ), std::move( alpha ) };
}

Report check_pbs_object( const PBSObject& object )
{
    const auto& family = object.family;
    if ( object.alpha.size() != family.size() )
        throw Error( ErrorKind::AlphaDomainMismatch, "alpha has " + std::to_string( object.alpha.size() ) +
                                                         " entries for " + std::to_string( family.size() ) +
                                                         " subalgebras" );
    Report report;
    const auto boolean = is_pairwise_boolean( object.space );
    report.add( "pairwise_boolean", boolean.holds, boolean.witness );

    const PointSet top = object.alpha[ family.full_index() ];
    report.add( "alpha_top", top == object.space.points(), top == object.space.points() ? "" : format_set( top ) );

    std::string meet_witness;
    for ( std::size_t i = 0; i < family.size() && meet_witness.empty(); ++i )
        for ( std::size_t j = i + 1; j < family.size(); ++j )
        {
            const auto k = family.index_of( family[ i ] & family[ j ] );
            if ( !k )
                continue; // not a family produced by enumerate_subalgebras
            if ( object.alpha[ *k ] != ( object.alpha[ i ] & object.alpha[ j ] ) )
            {
                meet_witness = "(" + std::to_string( i ) + "," + std::to_string( j ) + ")";
                break;
            }
        }
    report.add( "alpha_meet", meet_witness.empty(), meet_witness );

    std::string closed_witness;
    const Topology join = object.space.join();
    for ( std::size_t i = 0; i < family.size(); ++i )
        if ( !is_subset( object.alpha[ i ], object.space.points() ) || !join.is_closed( object.alpha[ i ] ) )
        {
            closed_witness = std::to_string( i ) + " " + format_set( object.alpha[ i ] );
            break;
        }
    report.add( "alpha_closed", closed_witness.empty(), closed_witness );
    return report;
}

Report check_prbs_object( const PRBSObject& object )
{
    const auto& space = object.base.space;
    const auto& r = object.relation;
    if ( r.size() != space.size() )
        throw Error( ErrorKind::ArityMismatch, "relation has " + std::to_string( r.size() ) + " points, space has " +
                                                   std::to_string( space.size() ) );
    Report report;
    report.merge( check_pbs_object( object.base ), "pbs" );

    // A subset of a finite space is compact in any topology; the check is
    // still run so a non-covering subfamily would show up.
    std::string compact_witness;
    for ( std::size_t p = 0; p < r.size(); ++p )
    {
        std::vector< PointSet > cover;
        for ( auto x : members( r.successors( p ) ) )
        {
            cover.push_back( space.tau1.minimal_open( x ) );
            cover.push_back( space.tau2.minimal_open( x ) );
        }
        if ( !finite_subcover( r.successors( p ), cover ) )
        {
            compact_witness = std::to_string( p );
            break;
        }
    }
    report.add( "prbs_i", compact_witness.empty(), compact_witness );

    std::string beta_witness;
    for ( auto c : space.beta1() )
    {
        if ( !space.in_beta1( box_rel( r, c ) ) )
            beta_witness = "[R]" + format_set( c );
        else if ( !space.in_beta1( diamond_rel( r, c ) ) )
            beta_witness = "<R>" + format_set( c );
        if ( !beta_witness.empty() )
            break;
    }
    report.add( "prbs_ii", beta_witness.empty(), beta_witness );

    std::string alpha_witness;
    const auto& alpha = object.base.alpha;
    for ( std::size_t i = 0; i < alpha.size() && alpha_witness.empty(); ++i )
        for ( auto m : members( alpha[ i ] ) )
            if ( !is_subset( r.successors( m ), alpha[ i ] ) )
            {
                alpha_witness = "point " + std::to_string( m ) + " subalgebra " + std::to_string( i );
                break;
            }
    report.add( "prbs_iii", alpha_witness.empty(), alpha_witness );
    return report;
}

PointSet image( const PointMap& f, PointSet s )
{
    PointSet out = 0;
    for ( auto x : members( s ) )
        out |= bit( f[ x ] );
    return out;
}

PointSet preimage( const PointMap& f, PointSet s )
{
    PointSet out = 0;
    for ( std::size_t x = 0; x < f.size(); ++x )
        if ( contains( s, f[ x ] ) )
            out |= bit( x );
    return out;
}

// Preimages of the minimal open sets suffice: every open set is a union
// of them.
PredicateResult is_pairwise_continuous( const PointMap& f, const BitopSpace& from, const BitopSpace& to )
{
    check_map( f, from.size(), to.size() );
    for ( std::size_t y = 0; y < to.size(); ++y )
    {
        if ( !from.tau1.is_open( preimage( f, to.tau1.minimal_open( y ) ) ) )
            return { false, "tau1 preimage of " + format_set( to.tau1.minimal_open( y ) ) };
        if ( !from.tau2.is_open( preimage( f, to.tau2.minimal_open( y ) ) ) )
            return { false, "tau2 preimage of " + format_set( to.tau2.minimal_open( y ) ) };
    }
    return {};
}

PredicateResult is_subspace_preserving( const PointMap& f, const PBSObject& from, const PBSObject& to )
{
    check_map( f, from.space.size(), to.space.size() );
    if ( !( from.family == to.family ) || from.alpha.size() != to.alpha.size() )
        throw Error( ErrorKind::TruthLatticeMismatch, "objects are over different truth lattices" );
    for ( std::size_t i = 0; i < from.alpha.size(); ++i )
        for ( auto x : members( from.alpha[ i ] ) )
            if ( !contains( to.alpha[ i ], f[ x ] ) )
                return { false, "point " + std::to_string( x ) + " subalgebra " + std::to_string( i ) };
    return {};
}

PredicateResult is_pbs_morphism( const PointMap& f, const PBSObject& from, const PBSObject& to )
{
    if ( auto c = is_pairwise_continuous( f, from.space, to.space ); !c )
        return { false, "continuity " + c.witness };
    if ( auto s = is_subspace_preserving( f, from, to ); !s )
        return { false, "subspace " + s.witness };
    return {};
}

PredicateResult is_prbs_morphism( const PointMap& f, const PRBSObject& from, const PRBSObject& to )
{
    if ( auto m = is_pbs_morphism( f, from.base, to.base ); !m )
        return m;
    for ( std::size_t p = 0; p < f.size(); ++p )
    {
        const PointSet succ_image = image( f, from.relation.successors( p ) );
        const PointSet target = to.relation.successors( f[ p ] );
        if ( !is_subset( succ_image, target ) )
        {
            for ( auto q : members( from.relation.successors( p ) ) )
                if ( !to.relation.holds( f[ p ], f[ q ] ) )
                    return { false, "forth " + pair_text( p, q ) };
        }
        if ( !is_subset( target, succ_image ) )
        {
            for ( auto q : members( target & ~succ_image ) )
                return { false, "back " + pair_text( p, q ) };
        }
    }
    return {};
}

} // namespace hvml
