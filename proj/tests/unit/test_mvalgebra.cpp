#include <doctest.h>

#include "hvml/mvalgebra.hpp"
#include "hvml_cli/oracles.hpp"

using namespace hvml;
namespace oracle = hvml::cli::oracle;

namespace
{

std::vector< Element > identity_map( std::size_t n )
{
    std::vector< Element > m( n );
    for ( std::size_t i = 0; i < n; ++i )
        m[ i ] = static_cast< Element >( i );
    return m;
}

// Whether |L|^|A| is small enough to try every map.
bool few_maps( const MVAlgebra& a )
{
    double n = 1;
    for ( std::size_t i = 0; i < a.size(); ++i )
        n *= static_cast< double >( a.truth().size() );
    return n <= double( 1 << 20 );
}

// Every map A -> L filtered through is_homomorphism.
std::vector< AlgebraHom > filter_all_maps( const MVAlgebra& a )
{
    const auto target = lattice_algebra( a.truth() );
    const auto plain = a.without_box();
    std::vector< AlgebraHom > out;
    std::vector< Element > map( a.size(), 0 );
    while ( true )
    {
        if ( is_homomorphism( map, plain, target ) )
            out.push_back( { map } );
        std::size_t i = a.size();
        while ( i > 0 && ++map[ i - 1 ] == a.truth().size() )
            map[ --i ] = 0;
        if ( i == 0 )
            break;
    }
    return out;
}

} // namespace

TEST_CASE( "two-chain over itself is a Boolean algebra" )
{
    const auto l = chain( 2 );
    AlgebraTables t;
    t.size = 2;
    t.bottom = 0;
    t.top = 1;
    t.meet = { 0, 0, 0, 1 };
    t.join = { 0, 1, 1, 1 };
    t.implies = { 1, 1, 0, 1 };
    t.t = { 1, 0, 0, 1 }; // T_0 = negation, T_1 = identity
    const MVAlgebra a( l, t );
    CHECK( check_lvl_axioms( a ).passed() );
    CHECK( a == lattice_algebra( l ) );
}

TEST_CASE( "L is an algebra over itself" )
{
    for ( const auto& l : { chain( 3 ), chain( 5 ), diamond(), boolean_lattice( 3 ), chain_product( 2, 3 ) } )
        CHECK( check_lvl_axioms( lattice_algebra( l ) ).passed() );
}

TEST_CASE( "constant T operators break the disjointness axiom" )
{
    const auto l = diamond();
    auto t = lattice_algebra( l ).tables();
    std::fill( t.t.begin(), t.t.end(), l.top() );
    const auto report = check_lvl_axioms( MVAlgebra( l, t ) );
    const auto* iv = report.find( "axiom_iv" );
    REQUIRE( iv != nullptr );
    CHECK_FALSE( iv->passed );
    CHECK( iv->witness.find( "T_l1(a)&T_l2(a)" ) != std::string::npos );
}

TEST_CASE( "constructor validation" )
{
    const auto l = chain( 2 );
    auto t = lattice_algebra( l ).tables();
    t.t.pop_back();
    CHECK_THROWS_AS( MVAlgebra( l, t ), Error );
    t = lattice_algebra( l ).tables();
    t.meet[ 0 ] = 7;
    CHECK_THROWS_AS( MVAlgebra( l, t ), Error );
    CHECK_THROWS_AS( (void)lattice_algebra( l ).box( 0 ), Error );
    CHECK_THROWS_AS( check_lml_axioms( lattice_algebra( l ) ), Error );
}

TEST_CASE( "modal axioms: identity box and frame boxes" )
{
    for ( const auto& l : { chain( 2 ), chain( 3 ), diamond() } )
    {
        const auto a = powerset_algebra( l, 2 );
        CHECK( check_lml_axioms( a.with_box( identity_map( a.size() ) ) ).passed() );
        const auto frame = Relation::from_edges( 3, { { 0, 1 }, { 1, 2 }, { 2, 2 }, { 0, 2 } } );
        CHECK( check_lml_axioms( box_from_frame( l, frame ) ).passed() );
    }
}

TEST_CASE( "constant boxes" )
{
    const auto l = chain( 3 );
    const auto a = powerset_algebra( l, 2 ); // 9 elements
    // constant top is the box of the empty frame, so both groups hold
    const auto top = a.with_box( std::vector< Element >( a.size(), a.top() ) );
    CHECK( top == box_from_frame( l, Relation( 2 ) ) );
    CHECK( check_lml_axioms( top ).passed() );

    // constant (1/2,1/2) keeps meets but not the U_l commutation
    const Element half = product_index( l, { l.carrier(), l.carrier() }, std::vector< Element >{ 1, 1 } );
    const auto mid = a.with_box( std::vector< Element >( a.size(), half ) );
    const auto report = check_lml_axioms( mid );
    CHECK( report.passed( "axiom_ml_ii" ) );
    CHECK_FALSE( report.passed( "axiom_ml_iii" ) );

    const auto bottom = a.with_box( std::vector< Element >( a.size(), a.bottom() ) );
    CHECK_FALSE( check_lml_axioms( bottom ).passed( "axiom_ml_iii" ) );
}

TEST_CASE( "derived_u" )
{
    const auto l = chain( 4 );
    const auto a = powerset_algebra( l, 2 );
    const std::vector< ElementSet > factors{ l.carrier(), l.carrier() };
    for ( Element f = 0; f < a.size(); ++f )
    {
        CHECK( derived_u( a, l.bottom(), f ) == a.top() );
        const auto coords = product_coordinates( l, factors, f );
        for ( Element level = 0; level < l.size(); ++level )
        {
            std::vector< Element > expect;
            for ( auto v : coords )
                expect.push_back( l.leq( level, v ) ? l.top() : l.bottom() );
            REQUIRE( derived_u( a, level, f ) == product_index( l, factors, expect ) );
        }
    }
    for ( const auto& k : { chain( 5 ), diamond(), chain_product( 2, 3 ) } )
    {
        const auto self = lattice_algebra( k );
        for ( Element level = 0; level < k.size(); ++level )
            for ( Element x = 0; x < k.size(); ++x )
                REQUIRE( derived_u( self, level, x ) == u_op( k, level, x ) );
    }
}

TEST_CASE( "powerset_algebra" )
{
    const auto b4 = powerset_algebra( chain( 2 ), 2 );
    CHECK( b4.size() == 4 );
    CHECK( check_lvl_axioms( b4 ).passed() );

    const auto d16 = powerset_algebra( diamond(), 2 );
    CHECK( d16.size() == 16 );
    CHECK( check_lvl_axioms( d16 ).passed() );

    // one point: the same tables as L
    for ( const auto& l : { chain( 3 ), diamond() } )
        CHECK( powerset_algebra( l, 1 ) == lattice_algebra( l ) );

    const auto empty = powerset_algebra( chain( 3 ), 0 );
    CHECK( empty.size() == 1 );
    CHECK( empty.bottom() == empty.top() );
    CHECK( check_lvl_axioms( empty ).passed() );

    CHECK_THROWS_AS( powerset_algebra( chain( 8 ), 5 ), Error ); // 32768 > 4096
}

TEST_CASE( "box_from_frame" )
{
    const auto l = chain( 3 );
    const auto id = box_from_frame( l, Relation::identity( 2 ) );
    for ( Element f = 0; f < id.size(); ++f )
        CHECK( id.box( f ) == f );

    const auto dead = box_from_frame( l, Relation( 2 ) );
    for ( Element f = 0; f < dead.size(); ++f )
        CHECK( dead.box( f ) == dead.top() );

    // P = {x, y}, R = {(x, y)}, L = 2: box f = (f(y), 1)
    const auto two = chain( 2 );
    const auto a = box_from_frame( two, Relation::from_edges( 2, { { 0, 1 } } ) );
    const std::vector< ElementSet > factors{ two.carrier(), two.carrier() };
    for ( Element f = 0; f < 4; ++f )
    {
        const auto c = product_coordinates( two, factors, f );
        CHECK( product_coordinates( two, factors, a.box( f ) ) == std::vector< Element >{ c[ 1 ], 1 } );
    }
}

TEST_CASE( "is_homomorphism" )
{
    const auto l = chain( 3 );
    const auto a = powerset_algebra( l, 3 );
    CHECK( is_homomorphism( identity_map( a.size() ), a, a ) );

    const auto target = lattice_algebra( l );
    const std::vector< ElementSet > factors( 3, l.carrier() );
    for ( std::size_t p = 0; p < 3; ++p )
    {
        std::vector< Element > eval( a.size() );
        for ( Element f = 0; f < a.size(); ++f )
            eval[ f ] = product_coordinates( l, factors, f )[ p ];
        CHECK( is_homomorphism( eval, a, target ) );
    }

    const auto check = is_homomorphism( std::vector< Element >( a.size(), l.top() ), a, target );
    CHECK_FALSE( check.ok );
    CHECK_FALSE( check.violation.empty() );

    CHECK_THROWS_AS( is_homomorphism( std::vector< Element >{ 0 }, a, target ), Error );
}

TEST_CASE( "enumerate_homs: point evaluations of L^P" )
{
    for ( const auto& l : { chain( 2 ), chain( 3 ), chain( 4 ), diamond() } )
        for ( std::size_t p = 0; p <= 3; ++p )
        {
            const auto a = powerset_algebra( l, p );
            const auto homs = enumerate_homs( a );
            REQUIRE( homs.size() == p );
            if ( few_maps( a ) )
                REQUIRE( homs == filter_all_maps( a ) );
            REQUIRE( homs == oracle::brute_force_homs( a, l.carrier() ) );
        }
}

TEST_CASE( "enumerate_homs: L over itself has only the identity" )
{
    for ( const auto& l : { chain( 2 ), chain( 4 ), diamond(), boolean_lattice( 3 ), chain_product( 2, 4 ) } )
    {
        const auto a = lattice_algebra( l );
        const auto homs = enumerate_homs( a );
        REQUIRE( homs.size() == 1 );
        CHECK( homs[ 0 ].map == identity_map( l.size() ) );
        if ( few_maps( a ) )
            CHECK( homs == filter_all_maps( a ) );
        CHECK( homs == oracle::brute_force_homs( a, l.carrier() ) );
    }
}

TEST_CASE( "enumerate_homs: subalgebra targets and boxes are ignored" )
{
    const auto l = diamond();
    const auto family = enumerate_subalgebras( l );
    // L' x L with a frame that respects the factors
    const std::vector< ElementSet > factors{ family[ 0 ], l.carrier() };
    const auto a = product_frame_algebra( l, factors, Relation::from_edges( 2, { { 1, 0 }, { 1, 1 } } ) );
    for ( auto target : family.members() )
        CHECK( enumerate_homs( a, target ) == oracle::brute_force_homs( a, target ) );
    CHECK( enumerate_homs( a, family[ 0 ] ).size() == 1 );
    CHECK( enumerate_homs( a ).size() == 2 );
}

TEST_CASE( "homs preserve every T operator" )
{
    const auto l = chain( 3 );
    const auto a = box_from_frame( l, Relation::from_edges( 3, { { 0, 1 }, { 1, 2 } } ) );
    for ( const auto& h : enumerate_homs( a ) )
        for ( Element x = 0; x < a.size(); ++x )
            for ( Element level = 0; level < l.size(); ++level )
                REQUIRE( h( a.t( level, x ) ) == t_op( l, level, h( x ) ) );
}

TEST_CASE( "enumerate_homs_between" )
{
    const auto l = chain( 3 );
    const auto a = box_from_frame( l, Relation::from_edges( 2, { { 0, 1 } } ) );
    const auto all = enumerate_homs_between( a, a, false );
    const auto boxed = enumerate_homs_between( a, a, true );
    CHECK( std::find( boxed.begin(), boxed.end(), AlgebraHom{ identity_map( a.size() ) } ) != boxed.end() );
    CHECK( boxed.size() <= all.size() );
    for ( const auto& h : boxed )
        CHECK( is_homomorphism( h.map, a, a ) );
}
