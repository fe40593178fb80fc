#include <doctest.h>

#include "hvml/duality.hpp"
#include "hvml/logic.hpp"

#include <random>

using namespace hvml;

namespace
{

using F = Formula;

ErrorKind error_of( std::string_view text, std::optional< std::size_t > levels = std::nullopt )
{
    try
    {
        parse_formula( text, levels );
    }
    catch ( const Error& e )
    {
        return e.kind();
    }
    FAIL( "parsed" );
    return ErrorKind::ParseError;
}

FormulaPtr random_formula( std::mt19937_64& rng, int depth, std::size_t levels )
{
    static const char* names[] = { "p", "q", "r" };
    if ( depth == 0 )
    {
        switch ( rng() % 5 )
        {
        case 0:
            return F::zero();
        case 1:
            return F::one();
        default:
            return F::var( names[ rng() % 3 ] );
        }
    }
    const auto sub = [ & ] { return random_formula( rng, depth - 1, levels ); };
    switch ( rng() % 6 )
    {
    case 0:
        return F::conj( sub(), sub() );
    case 1:
        return F::disj( sub(), sub() );
    case 2:
        return F::imp( sub(), sub() );
    case 3:
        return F::truth( static_cast< Element >( rng() % levels ), sub() );
    case 4:
        return F::box( sub() );
    default:
        return sub();
    }
}

KripkeModel random_model( std::mt19937_64& rng, std::size_t worlds, std::size_t levels )
{
    KripkeModel m{ worlds, Relation( worlds ), {} };
    for ( std::size_t p = 0; p < worlds; ++p )
        for ( std::size_t q = 0; q < worlds; ++q )
            if ( rng() % 3 == 0 )
                m.relation.add( p, q );
    for ( const char* name : { "p", "q", "r" } )
    {
        std::vector< Element > v( worlds );
        for ( auto& x : v )
            x = static_cast< Element >( rng() % levels );
        m.valuation[ name ] = v;
    }
    return m;
}

} // namespace

TEST_CASE( "parser examples" )
{
    CHECK( *parse_formula( "[]( p & q )" ) == *F::box( F::conj( F::var( "p" ), F::var( "q" ) ) ) );
    CHECK( *parse_formula( "T{2} p -> q" ) == *F::imp( F::truth( 2, F::var( "p" ) ), F::var( "q" ) ) );
    CHECK( *parse_formula( "p -> q -> r" ) == *F::imp( F::var( "p" ), F::imp( F::var( "q" ), F::var( "r" ) ) ) );
    CHECK( *parse_formula( "p | q & r" ) == *F::disj( F::var( "p" ), F::conj( F::var( "q" ), F::var( "r" ) ) ) );
    CHECK( *parse_formula( "  0|1 " ) == *F::disj( F::zero(), F::one() ) );
    CHECK( *parse_formula( "[][]p" ) == *F::box( F::box( F::var( "p" ) ) ) );
}

TEST_CASE( "parser errors" )
{
    CHECK( error_of( "p &" ) == ErrorKind::SyntaxError );
    CHECK( error_of( "(p" ) == ErrorKind::SyntaxError );
    CHECK( error_of( "p q" ) == ErrorKind::SyntaxError );
    CHECK( error_of( "" ) == ErrorKind::SyntaxError );
    CHECK( error_of( "T{x} p" ) == ErrorKind::SyntaxError );
    CHECK( error_of( "T{4} p", 4 ) == ErrorKind::UnknownTruthConstant );
    CHECK_NOTHROW( parse_formula( "T{3} p", 4 ) );
    try
    {
        parse_formula( "p & & q" );
    }
    catch ( const Error& e )
    {
        CHECK( std::string( e.what() ).find( "offset 4" ) != std::string::npos );
    }
}

TEST_CASE( "pretty_print round trip" )
{
    std::mt19937_64 rng( 4 );
    for ( int i = 0; i < 500; ++i )
    {
        const auto f = random_formula( rng, 4, 5 );
        const auto text = pretty_print( *f );
        REQUIRE( *parse_formula( text ) == *f );
    }
}

TEST_CASE( "evaluation examples" )
{
    const auto l = diamond();
    KripkeModel m{ 2, Relation::from_edges( 2, { { 0, 1 } } ), { { "p", { 0, 1 } } } };
    CHECK( evaluate_all( m, l, *F::one() ) == std::vector< Element >{ 3, 3 } );
    CHECK( evaluate( m, l, 1, *parse_formula( "[] 0" ) ) == l.top() );
    CHECK( evaluate( m, l, 0, *parse_formula( "[] p" ) ) == 1 );

    CHECK_THROWS_AS( evaluate( m, l, 0, *parse_formula( "q" ) ), Error );
    CHECK_THROWS_AS( evaluate( m, l, 2, *parse_formula( "p" ) ), Error );
}

TEST_CASE( "evaluation is compositional" )
{
    std::mt19937_64 rng( 9 );
    for ( const auto& l : { chain( 3 ), diamond(), chain_product( 2, 3 ) } )
        for ( int i = 0; i < 100; ++i )
        {
            const auto m = random_model( rng, 1 + rng() % 4, l.size() );
            const auto f = random_formula( rng, 3, l.size() );
            const auto v = evaluate_all( m, l, *f );
            for ( std::size_t w = 0; w < m.worlds; ++w )
            {
                Element expect = 0;
                switch ( f->kind )
                {
                case Formula::Kind::Var:
                    expect = m.valuation.at( f->name )[ w ];
                    break;
                case Formula::Kind::Zero:
                    expect = l.bottom();
                    break;
                case Formula::Kind::One:
                    expect = l.top();
                    break;
                case Formula::Kind::And:
                    expect = l.meet( evaluate( m, l, w, *f->left ), evaluate( m, l, w, *f->right ) );
                    break;
                case Formula::Kind::Or:
                    expect = l.join( evaluate( m, l, w, *f->left ), evaluate( m, l, w, *f->right ) );
                    break;
                case Formula::Kind::Imp:
                    expect = l.implies( evaluate( m, l, w, *f->left ), evaluate( m, l, w, *f->right ) );
                    break;
                case Formula::Kind::T: {
                    expect = t_op( l, f->level, evaluate( m, l, w, *f->left ) );
                    REQUIRE( ( v[ w ] == l.top() || v[ w ] == l.bottom() ) );
                    break;
                }
                case Formula::Kind::Box: {
                    expect = l.top();
                    for ( auto u : members( m.relation.successors( w ) ) )
                        expect = l.meet( expect, evaluate( m, l, u, *f->left ) );
                    break;
                }
                }
                REQUIRE( v[ w ] == expect );
            }
        }
}

TEST_CASE( "evaluation in L^P matches the Kripke model" )
{
    const auto l = chain( 3 );
    const auto frame = Relation::from_edges( 3, { { 0, 1 }, { 1, 2 }, { 2, 2 } } );
    const auto a = box_from_frame( l, frame );
    const std::vector< ElementSet > factors( 3, l.carrier() );
    std::mt19937_64 rng( 12 );
    for ( int i = 0; i < 200; ++i )
    {
        const std::map< std::string, Element > assignment{ { "p", static_cast< Element >( rng() % a.size() ) },
                                                           { "q", static_cast< Element >( rng() % a.size() ) },
                                                           { "r", static_cast< Element >( rng() % a.size() ) } };
        KripkeModel m{ 3, frame, {} };
        for ( const auto& [ name, e ] : assignment )
            m.valuation[ name ] = product_coordinates( l, factors, e );
        const auto f = random_formula( rng, 3, l.size() );
        REQUIRE( product_coordinates( l, factors, evaluate_in_algebra( a, assignment, *f ) ) ==
                 evaluate_all( m, l, *f ) );
    }
}

TEST_CASE( "canonical model" )
{
    const auto l = chain( 4 );
    const auto frame = Relation::from_edges( 3, { { 0, 0 }, { 0, 2 }, { 2, 1 } } );
    const auto a = box_from_frame( l, frame );
    const auto c = canonical_model( a );
    CHECK( c.worlds.size() == 3 );
    CHECK( c.relation == frame );
    CHECK( c.relation == dual_space( a ).relation );

    // variables as elements of A agree with the valuation w(a)
    const std::map< std::string, Element > assignment{ { "p", 5 }, { "q", 17 } };
    const auto k = c.kripke( assignment );
    for ( std::size_t w = 0; w < 3; ++w )
    {
        CHECK( evaluate( k, l, w, *parse_formula( "p" ) ) == c.value( w, 5 ) );
        CHECK( evaluate( k, l, w, *parse_formula( "[] q" ) ) == c.value( w, a.box( 17 ) ) );
    }

    const auto two = canonical_model( lattice_algebra( chain( 2 ) ).with_box( { 0, 1 } ) );
    CHECK( two.worlds.size() == 1 );
    CHECK( two.relation.holds( 0, 0 ) );

    const auto p = powerset_algebra( chain( 3 ), 2 );
    const auto top = canonical_model( p.with_box( std::vector< Element >( p.size(), p.top() ) ) );
    CHECK( top.relation == Relation( 2 ) );

    CHECK_THROWS_AS( canonical_model( p ), Error );
}

TEST_CASE( "truth lemma" )
{
    CHECK( check_truth_lemma( lattice_algebra( chain( 2 ) ).with_box( { 0, 1 } ) ).passed() );
    for ( const auto& l : { chain( 3 ), diamond() } )
    {
        const auto a = box_from_frame( l, Relation::from_edges( 3, { { 0, 1 }, { 1, 0 }, { 2, 2 }, { 2, 0 } } ) );
        CHECK( check_truth_lemma( a ).passed( "truth_lemma" ) );
    }

    // constant (1/2,1/2) breaks the U_l axiom, and the lemma with it
    const auto l = chain( 3 );
    const auto p = powerset_algebra( l, 2 );
    const Element half = product_index( l, { l.carrier(), l.carrier() }, std::vector< Element >{ 1, 1 } );
    const auto bad = p.with_box( std::vector< Element >( p.size(), half ) );
    REQUIRE_FALSE( check_lml_axioms( bad ).passed() );
    const auto r = check_truth_lemma( bad );
    CHECK_FALSE( r.passed() );
    CHECK_FALSE( r.checks().front().witness.empty() );
}
