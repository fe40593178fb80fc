#include <doctest.h>

#include "hvml/bitopology.hpp"
#include "hvml/mvalgebra.hpp"
#include "hvml/duality.hpp"

#include <random>

using namespace hvml;

namespace
{

using Family = std::vector< PointSet >;

// Closure of a family under pairwise intersection and union, plus {} and X.
Family close_family( std::size_t n, Family f )
{
    f.push_back( 0 );
    f.push_back( full_set( n ) );
    bool grew = true;
    while ( grew )
    {
        grew = false;
        const Family snapshot = f;
        for ( auto a : snapshot )
            for ( auto b : snapshot )
                for ( auto c : { a & b, a | b } )
                    if ( std::find( f.begin(), f.end(), c ) == f.end() )
                    {
                        f.push_back( c );
                        grew = true;
                    }
    }
    std::sort( f.begin(), f.end() );
    f.erase( std::unique( f.begin(), f.end() ), f.end() );
    return f;
}

bool brute_hausdorff( const BitopSpace& s )
{
    const auto o1 = s.tau1.open_sets(), o2 = s.tau2.open_sets();
    for ( std::size_t x = 0; x < s.size(); ++x )
        for ( std::size_t y = 0; y < s.size(); ++y )
        {
            if ( x == y )
                continue;
            bool found = false;
            for ( auto u : o1 )
                for ( auto v : o2 )
                    found = found || ( contains( u, x ) && contains( v, y ) && ( u & v ) == 0 );
            if ( !found )
                return false;
        }
    return true;
}

// Every open set is the union of the basis members it contains.
bool is_basis( const Family& basis, const Family& opens )
{
    for ( auto u : opens )
    {
        PointSet covered = 0;
        for ( auto b : basis )
            if ( is_subset( b, u ) )
                covered |= b;
        if ( covered != u )
            return false;
    }
    return true;
}

bool brute_zero_dimensional( const BitopSpace& s )
{
    Family b1, b2;
    const auto o1 = s.tau1.open_sets(), o2 = s.tau2.open_sets();
    for ( auto u : o1 )
        if ( s.tau2.is_closed( u ) )
            b1.push_back( u );
    for ( auto u : o2 )
        if ( s.tau1.is_closed( u ) )
            b2.push_back( u );
    return is_basis( b1, o1 ) && is_basis( b2, o2 );
}

BitopSpace random_space( std::mt19937_64& rng, std::size_t n )
{
    auto sub = [ & ] {
        Family f( 1 + rng() % 4 );
        for ( auto& s : f )
            s = rng() & full_set( n );
        return f;
    };
    return { generate_topology( n, sub() ), generate_topology( n, sub() ) };
}

BitopSpace two_point_space()
{
    return { generate_topology( 2, { 0b01 } ), generate_topology( 2, { 0b10 } ) };
}

} // namespace

TEST_CASE( "generate_topology" )
{
    CHECK( generate_topology( 3, {} ).open_sets() == Family{ 0, 0b111 } );
    CHECK( generate_topology( 3, { 0b001, 0b010, 0b100 } ).open_sets().size() == 8 );
    CHECK( generate_topology( 3, { 0b011, 0b110 } ).open_sets() == Family{ 0, 0b010, 0b011, 0b110, 0b111 } );

    std::mt19937_64 rng( 5 );
    for ( int i = 0; i < 200; ++i )
    {
        const std::size_t n = 1 + rng() % 6;
        Family sub( rng() % 5 );
        for ( auto& s : sub )
            s = rng() & full_set( n );
        const auto t = generate_topology( n, sub );
        REQUIRE( t.open_sets() == close_family( n, sub ) );
        // idempotent
        REQUIRE( generate_topology( n, t.open_sets() ) == t );
        REQUIRE( topology_from_family( n, t.open_sets() ) == t );
        REQUIRE( t.count_open_sets() == t.open_sets().size() );
    }
    CHECK_FALSE( topology_from_family( 2, { 0, 0b01 } ).has_value() );
}

TEST_CASE( "count_open_sets beyond enumeration" )
{
    CHECK( Topology::discrete( 30 ).count_open_sets() == std::uint64_t{ 1 } << 30 );
    CHECK( Topology::discrete( 63 ).count_open_sets() == std::uint64_t{ 1 } << 63 );
    CHECK_FALSE( Topology::discrete( 64 ).count_open_sets().has_value() );
    CHECK( Topology::indiscrete( 40 ).count_open_sets() == 2u );
    CHECK_THROWS_AS( (void)Topology::discrete( 21 ).open_sets(), Error );
}

TEST_CASE( "join topology" )
{
    std::mt19937_64 rng( 11 );
    for ( int i = 0; i < 2; ++i )
    {
        const auto s = random_space( rng, 4 );
        auto sub = s.tau1.open_sets();
        const auto o2 = s.tau2.open_sets();
        sub.insert( sub.end(), o2.begin(), o2.end() );
        CHECK( s.join() == generate_topology( 4, sub ) );
    }
}

TEST_CASE( "pairwise Hausdorff" )
{
    CHECK( is_pairwise_hausdorff( BitopSpace::discrete( 3 ) ) );
    const BitopSpace coarse( Topology::indiscrete( 2 ), Topology::discrete( 2 ) );
    const auto r = is_pairwise_hausdorff( coarse );
    CHECK_FALSE( r.holds );
    CHECK( r.witness == "(0,1)" );

    // {0} in tau1, {1} in tau2: only the pair (0,1) can be separated
    const auto s = two_point_space();
    const auto ordered = is_pairwise_hausdorff( s );
    CHECK_FALSE( ordered.holds );
    CHECK( ordered.witness == "(1,0)" );
    CHECK( is_pairwise_hausdorff( s, HausdorffReading::Unordered ) );
}

TEST_CASE( "pairwise zero-dimensional" )
{
    CHECK( is_pairwise_zero_dimensional( BitopSpace::discrete( 3 ) ) );
    CHECK_FALSE( is_pairwise_zero_dimensional( { generate_topology( 2, { 0b01 } ), Topology::indiscrete( 2 ) } ) );
    CHECK( is_pairwise_zero_dimensional( two_point_space() ) );
}

TEST_CASE( "predicates agree with brute force" )
{
    std::mt19937_64 rng( 3 );
    for ( int i = 0; i < 300; ++i )
    {
        const auto s = random_space( rng, 1 + rng() % 5 );
        REQUIRE( is_pairwise_hausdorff( s ).holds == brute_hausdorff( s ) );
        REQUIRE( is_pairwise_zero_dimensional( s ).holds == brute_zero_dimensional( s ) );
        REQUIRE( is_pairwise_compact( s ) );
    }
    CHECK( is_pairwise_compact( BitopSpace::discrete( 0 ) ) );
}

TEST_CASE( "finite_subcover" )
{
    const auto chosen = finite_subcover( 0b111, { 0b001, 0b110, 0b011 } );
    REQUIRE( chosen );
    PointSet covered = 0;
    for ( auto i : *chosen )
        covered |= std::vector< PointSet >{ 0b001, 0b110, 0b011 }[ i ];
    CHECK( covered == 0b111 );
    CHECK_FALSE( finite_subcover( 0b111, { 0b001, 0b010 } ) );
}

TEST_CASE( "pairwise Boolean" )
{
    CHECK( is_pairwise_boolean( BitopSpace::discrete( 2 ) ) );
    CHECK_FALSE( is_pairwise_boolean( { Topology::indiscrete( 2 ), Topology::discrete( 2 ) } ) );
    const auto d = dual_space( powerset_algebra( chain( 2 ), 2 ) );
    CHECK( d.points.size() == 2 );
    CHECK( is_pairwise_boolean( d.object.space ) );
}

TEST_CASE( "beta families" )
{
    std::mt19937_64 rng( 8 );
    for ( int i = 0; i < 50; ++i )
    {
        const auto s = random_space( rng, 1 + rng() % 5 );
        Family b1;
        for ( auto u : s.tau1.open_sets() )
            if ( s.tau2.is_open( complement( u, s.size() ) ) )
                b1.push_back( u );
        REQUIRE( s.beta1() == b1 );
    }
}

TEST_CASE( "PBS objects" )
{
    for ( const auto& l : { chain( 2 ), chain( 4 ), diamond(), boolean_lattice( 3 ) } )
        CHECK( check_pbs_object( canonical_lattice_object( l ) ).passed() );

    auto broken = canonical_lattice_object( diamond() );
    broken.alpha.back() = 0b0111;
    CHECK_FALSE( check_pbs_object( broken ).passed( "alpha_top" ) );

    auto short_alpha = canonical_lattice_object( diamond() );
    short_alpha.alpha.pop_back();
    CHECK_THROWS_AS( check_pbs_object( short_alpha ), Error );

    CHECK( check_pbs_object( dual_space( powerset_algebra( chain( 3 ), 3 ) ).object ).passed() );
}

TEST_CASE( "box_rel and diamond_rel" )
{
    const Relation none( 3 );
    CHECK( box_rel( none, 0b010 ) == 0b111 );
    CHECK( diamond_rel( none, 0b010 ) == 0 );
    const auto id = Relation::identity( 3 );
    for ( PointSet c = 0; c < 8; ++c )
    {
        CHECK( box_rel( id, c ) == c );
        CHECK( diamond_rel( id, c ) == c );
    }
    const auto r = Relation::from_edges( 2, { { 0, 1 } } );
    CHECK( box_rel( r, 0b10 ) == 0b11 );
    CHECK( diamond_rel( r, 0b10 ) == 0b01 );

    std::mt19937_64 rng( 1 );
    for ( std::size_t n = 0; n <= 6; ++n )
        for ( int k = 0; k < 20; ++k )
        {
            Relation rel( n );
            for ( std::size_t p = 0; p < n; ++p )
                for ( std::size_t q = 0; q < n; ++q )
                    if ( rng() % 3 == 0 )
                        rel.add( p, q );
            for ( PointSet c = 0; c <= full_set( n ); ++c )
                REQUIRE( box_rel( rel, complement( c, n ) ) == complement( diamond_rel( rel, c ), n ) );
        }
}

TEST_CASE( "PRBS objects" )
{
    const auto a = box_from_frame( chain( 3 ), Relation::from_edges( 3, { { 0, 1 }, { 1, 2 } } ) );
    CHECK( check_prbs_object( dual_space( a ).prbs() ).passed() );

    const auto base = canonical_lattice_object( diamond() );
    CHECK( check_prbs_object( { base, Relation::identity( 4 ) } ).passed() );

    // over the 3-chain alpha({0,1}) = {0,2}; an edge from 0 to the middle leaves it
    const auto bad = check_prbs_object( { canonical_lattice_object( chain( 3 ) ), Relation::from_edges( 3, { { 0, 1 } } ) } );
    CHECK_FALSE( bad.passed( "prbs_iii" ) );
    CHECK( bad.passed( "prbs_ii" ) );
}

TEST_CASE( "morphism predicates" )
{
    const auto o = canonical_lattice_object( diamond() );
    const PointMap id{ 0, 1, 2, 3 };
    CHECK( is_pairwise_continuous( id, o.space, o.space ) );
    CHECK( is_subspace_preserving( id, o, o ) );
    CHECK( is_pbs_morphism( id, o, o ) );
    CHECK( is_prbs_morphism( id, { o, Relation::identity( 4 ) }, { o, Relation::identity( 4 ) } ) );

    // everything to a: bottom lies in alpha({0,b,1}) but a does not
    const auto r = is_subspace_preserving( { 1, 1, 1, 1 }, o, o );
    CHECK_FALSE( r.holds );

    // points 1 and 2 are dead ends, so they are bisimilar and collapse
    const auto two = chain( 2 );
    auto family = enumerate_subalgebras( two );
    const PBSObject three{ family, BitopSpace::discrete( 3 ), { 0b111 } };
    const PBSObject pair{ family, BitopSpace::discrete( 2 ), { 0b11 } };
    const PRBSObject from{ three, Relation::from_edges( 3, { { 0, 1 }, { 0, 2 } } ) };
    const PRBSObject to{ pair, Relation::from_edges( 2, { { 0, 1 } } ) };
    CHECK( check_prbs_object( from ).passed() );
    CHECK( is_prbs_morphism( { 0, 1, 1 }, from, to ) );
    // collapsing the root with a leaf breaks forth
    CHECK_FALSE( is_prbs_morphism( { 1, 1, 0 }, from, to ) );
    // a target edge with no source counterpart breaks back
    const PRBSObject loop{ pair, Relation::from_edges( 2, { { 0, 1 }, { 1, 1 } } ) };
    const auto back = is_prbs_morphism( { 0, 1, 1 }, from, loop );
    CHECK_FALSE( back.holds );
    CHECK( back.witness.rfind( "back", 0 ) == 0 );

    CHECK( image( { 0, 1, 1 }, 0b110 ) == 0b10 );
    CHECK( preimage( { 0, 1, 1 }, 0b10 ) == 0b110 );
}
