#include <doctest.h>

#include "hvml/duality.hpp"
#include "hvml/vietoris.hpp"

#include <random>

using namespace hvml;

namespace
{

PRBSObject discrete_object( std::size_t n, const Relation& r )
{
    const auto l = chain( 2 );
    return { { enumerate_subalgebras( l ), BitopSpace::discrete( n ), { full_set( n ) } }, r };
}

} // namespace

TEST_CASE( "pairwise closed sets" )
{
    CHECK( pairwise_closed_sets( BitopSpace::discrete( 2 ) ) == std::vector< PointSet >{ 0, 1, 2, 3 } );
    CHECK( pairwise_closed_sets( BitopSpace::discrete( 1 ) ) == std::vector< PointSet >{ 0, 1 } );

    const BitopSpace s( generate_topology( 3, { 0b011 } ), Topology::discrete( 3 ) );
    CHECK( pairwise_closed_sets( s ).size() == 8 );

    // complements of the join topology's open sets, by closing tau1 u tau2
    std::mt19937_64 rng( 2 );
    for ( int i = 0; i < 100; ++i )
    {
        const std::size_t n = 1 + rng() % 5;
        const BitopSpace t( generate_topology( n, { rng() & full_set( n ), rng() & full_set( n ) } ),
                            generate_topology( n, { rng() & full_set( n ) } ) );
        std::vector< PointSet > expect;
        for ( PointSet c = 0; c <= full_set( n ); ++c )
        {
            bool open = true;
            const PointSet u = complement( c, n );
            for ( auto x : members( u ) )
                open = open && is_subset( t.tau1.minimal_open( x ) & t.tau2.minimal_open( x ), u );
            if ( open )
                expect.push_back( c );
        }
        REQUIRE( pairwise_closed_sets( t ) == expect );
    }
}

TEST_CASE( "Vietoris space examples" )
{
    const auto one = vietoris_space( BitopSpace::discrete( 1 ) );
    CHECK( one.members.size() == 2 );
    CHECK( one.space.tau1.is_discrete() );
    CHECK( one.space.tau2.is_discrete() );

    const auto two = vietoris_space( BitopSpace::discrete( 2 ) );
    CHECK( two.members.size() == 4 );
    CHECK( is_pairwise_boolean( two.space ) );

    const auto none = vietoris_space( BitopSpace::discrete( 0 ) );
    CHECK( none.members == std::vector< PointSet >{ 0 } );

    // box and diamond follow their definitions
    const auto v = vietoris_space( BitopSpace::discrete( 3 ) );
    for ( PointSet u = 0; u < 8; ++u )
    {
        PointSet box = 0, dia = 0;
        for ( std::size_t i = 0; i < v.members.size(); ++i )
        {
            if ( is_subset( v.members[ i ], u ) )
                box |= bit( i );
            if ( v.members[ i ] & u )
                dia |= bit( i );
        }
        REQUIRE( v.box( u ) == box );
        REQUIRE( v.diamond( u ) == dia );
    }
    CHECK( check_box_diamond_duality( v ) );
}

TEST_CASE( "Vietoris objects" )
{
    const auto l = diamond();
    const auto vo = vietoris_object( canonical_lattice_object( l ) );
    const auto& family = vo.object.family;
    for ( std::size_t i = 0; i < family.size(); ++i )
    {
        PointSet expect = 0;
        for ( std::size_t k = 0; k < vo.vietoris.members.size(); ++k )
            if ( is_subset( vo.vietoris.members[ k ], family[ i ] ) )
                expect |= bit( k );
        REQUIRE( vo.object.alpha[ i ] == expect );
    }
    CHECK( check_pbs_object( vo.object ).passed() );

    auto empty = canonical_lattice_object( l );
    for ( std::size_t i = 0; i + 1 < empty.alpha.size(); ++i )
        empty.alpha[ i ] = 0;
    const auto ve = vietoris_object( empty );
    for ( std::size_t i = 0; i + 1 < ve.object.alpha.size(); ++i )
        CHECK( ve.object.alpha[ i ] == 1 ); // only the empty set, member 0

    const auto dual = dual_space( powerset_algebra( chain( 3 ), 2 ) );
    CHECK( check_pbs_object( vietoris_object( dual.object ).object ).passed() );
}

TEST_CASE( "Vietoris arrows" )
{
    const auto from = vietoris_space( BitopSpace::discrete( 3 ) );
    const auto to = vietoris_space( BitopSpace::discrete( 2 ) );

    const auto same = vietoris_arrow( { 0, 1, 2 }, from, from );
    for ( std::size_t i = 0; i < same.size(); ++i )
        CHECK( same[ i ] == i );

    // constant 1: K -> {1}, empty stays empty
    const auto constant = vietoris_arrow( { 1, 1, 1 }, from, to );
    for ( std::size_t i = 0; i < from.members.size(); ++i )
        CHECK( to.members[ constant[ i ] ] == ( from.members[ i ] ? PointSet{ 0b10 } : PointSet{ 0 } ) );

    const PointMap squash{ 0, 1, 1 };
    const auto image_map = vietoris_arrow( squash, from, to );
    for ( std::size_t i = 0; i < from.members.size(); ++i )
        CHECK( to.members[ image_map[ i ] ] == image( squash, from.members[ i ] ) );
    CHECK( check_vietoris_arrow( squash, from, to ).passed() );

    // composition: V(g . f) = V(g) . V(f)
    const auto mid = vietoris_space( BitopSpace::discrete( 3 ) );
    const PointMap f{ 2, 0, 0 }, g{ 1, 0, 1 };
    PointMap gf;
    for ( auto x : f )
        gf.push_back( g[ x ] );
    const auto vf = vietoris_arrow( f, from, mid ), vg = vietoris_arrow( g, mid, to );
    const auto vgf = vietoris_arrow( gf, from, to );
    for ( std::size_t i = 0; i < vf.size(); ++i )
        CHECK( vgf[ i ] == vg[ vf[ i ] ] );
}

TEST_CASE( "coalgebras from relations" )
{
    const auto id = relation_to_coalgebra( discrete_object( 3, Relation::identity( 3 ) ) );
    CHECK( id.structure == std::vector< PointSet >{ 0b001, 0b010, 0b100 } );
    CHECK( check_coalgebra( id ).passed() );
    CHECK( coalgebra_to_relation( id ).relation == Relation::identity( 3 ) );

    const auto dead = relation_to_coalgebra( discrete_object( 3, Relation( 3 ) ) );
    CHECK( dead.structure == std::vector< PointSet >( 3, 0 ) );
    CHECK( coalgebra_to_relation( dead ).relation == Relation( 3 ) );

    const auto frame = Relation::from_edges( 3, { { 0, 1 }, { 1, 2 }, { 2, 0 }, { 2, 2 } } );
    const auto d = dual_space( box_from_frame( chain( 3 ), frame ) );
    const auto c = relation_to_coalgebra( d.prbs() );
    for ( std::size_t p = 0; p < 3; ++p )
        CHECK( c.structure[ p ] == d.relation->successors( p ) );
    CHECK( coalgebra_to_relation( c ) == d.prbs() );
    CHECK( check_coalgebra( c ).passed() );
}

TEST_CASE( "coalgebra morphisms" )
{
    const auto o1 = discrete_object( 3, Relation::from_edges( 3, { { 0, 1 }, { 0, 2 } } ) );
    const auto o2 = discrete_object( 2, Relation::from_edges( 2, { { 0, 1 } } ) );
    const auto c1 = relation_to_coalgebra( o1 ), c2 = relation_to_coalgebra( o2 );
    CHECK( check_coalgebra_morphism( { 0, 1, 2 }, c1, c1 ) );
    REQUIRE( is_prbs_morphism( { 0, 1, 1 }, o1, o2 ) );
    CHECK( check_coalgebra_morphism( { 0, 1, 1 }, c1, c2 ) );

    // target has an extra loop at 1 that no source edge accounts for
    const auto loop = relation_to_coalgebra( discrete_object( 2, Relation::from_edges( 2, { { 0, 1 }, { 1, 1 } } ) ) );
    const auto r = check_coalgebra_morphism( { 0, 1, 1 }, c1, loop );
    CHECK_FALSE( r.holds );
    CHECK_FALSE( r.witness.empty() );
}

TEST_CASE( "category isomorphism" )
{
    const auto single = discrete_object( 1, Relation::identity( 1 ) );
    CHECK( verify_category_iso( { single }, { relation_to_coalgebra( single ) }, { { 0, 0, { 0 } } } ).passed() );

    const auto o1 = discrete_object( 3, Relation::from_edges( 3, { { 0, 1 }, { 0, 2 } } ) );
    const auto o2 = discrete_object( 2, Relation::from_edges( 2, { { 0, 1 } } ) );
    const auto report = verify_category_iso( { o1, o2 }, { relation_to_coalgebra( o1 ), relation_to_coalgebra( o2 ) },
                                             { { 0, 1, { 0, 1, 1 } }, { 1, 1, { 0, 1 } } } );
    CHECK( report.passed() );

    // duality composed with the isomorphism leaves G(A) unchanged
    const auto a = box_from_frame( chain( 4 ), Relation::from_edges( 2, { { 0, 1 }, { 1, 0 } } ) );
    const auto g = dual_space( a ).prbs();
    CHECK( coalgebra_to_relation( relation_to_coalgebra( g ) ) == g );
}
