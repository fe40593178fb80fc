#include "hvml_cli/battery.hpp"

#include "hvml_cli/generate.hpp"
#include "hvml_cli/io.hpp"
#include "hvml_cli/oracles.hpp"
#include "hvml/logic.hpp"
#include "hvml/vietoris.hpp"

#include <chrono>
#include <functional>

namespace hvml::cli
{

namespace
{

// Specs small enough for the full duality round trip on L^3.
const std::vector< std::string > duality_lattices = { "chain:2", "chain:3", "chain:4", "boolean:2", "product:2x3" };

void summarize( Report& out, const std::string& name, const Report& sub )
{
    for ( const auto& c : sub.checks() )
        if ( !c.passed )
        {
            out.add( name, false, c.name + ( c.witness.empty() ? "" : " " + c.witness ) );
            return;
        }
    out.add( name, true );
}

// Runs one instance; a library error becomes a failing line.
void guarded( Report& out, const std::string& name, const std::function< Report() >& body )
{
    try
    {
        summarize( out, name, body() );
    }
    catch ( const std::exception& e )
    {
        out.add( name, false, e.what() );
    }
}

Report single( const std::string& name, bool ok, const std::string& witness = {} )
{
    Report r;
    r.add( name, ok, witness );
    return r;
}

std::vector< Element > identity_map( std::size_t n )
{
    std::vector< Element > m( n );
    for ( std::size_t i = 0; i < n; ++i )
        m[ i ] = static_cast< Element >( i );
    return m;
}

std::string map_text( const std::vector< Element >& m )
{
    std::string s = "[";
    for ( std::size_t i = 0; i < m.size(); ++i )
        s += ( i ? "," : "" ) + std::to_string( m[ i ] );
    return s + "]";
}

Report criterion1()
{
    Report out;
    for ( const auto& spec : lattice_catalogue() )
    {
        guarded( out, spec, [ & ] {
            const auto l = resolve_lattice( spec );
            const Element n = static_cast< Element >( l.size() );
            Report r;
            std::string bad;
            for ( Element a = 0; a < n && bad.empty(); ++a )
                for ( Element b = 0; b < n && bad.empty(); ++b )
                    for ( Element c = 0; c < n && bad.empty(); ++c )
                        for ( Element d = 0; d < n && bad.empty(); ++d )
                        {
                            const Element expect = a == b ? c : d;
                            if ( term_switch( l, a, b, c, d ) != expect || term_switch_by_term( l, a, b, c, d ) != expect )
                                bad = "(" + l.label( a ) + "," + l.label( b ) + "," + l.label( c ) + "," + l.label( d ) + ")";
                        }
            r.add( "switch", bad.empty(), bad );

            bad.clear();
            const auto alg = lattice_algebra( l );
            for ( Element level = 0; level < n && bad.empty(); ++level )
                for ( Element x = 0; x < n && bad.empty(); ++x )
                {
                    const Element t = t_op( l, level, x ), u = u_op( l, level, x );
                    Element joined = l.bottom();
                    for ( Element k = 0; k < n; ++k )
                        if ( l.leq( level, k ) )
                            joined = l.join( joined, t_op( l, k, x ) );
                    if ( t != ( x == level ? l.top() : l.bottom() ) || u != ( l.leq( level, x ) ? l.top() : l.bottom() ) ||
                         u != joined || derived_u( alg, level, x ) != u || alg.t( level, x ) != t )
                        bad = "(l=" + l.label( level ) + ",x=" + l.label( x ) + ")";
                }
            r.add( "truth_operators", bad.empty(), bad );
            return r;
        } );
    }
    return out;
}

Report criterion2( std::uint64_t seed )
{
    Report out;
    Rng rng( seed ^ 0x2 );
    for ( const auto& spec : lattice_catalogue() )
    {
        const auto l = resolve_lattice( spec );
        for ( std::size_t p = 0; p <= 3; ++p )
            guarded( out, spec + "^" + std::to_string( p ),
                     [ & ] { return check_lvl_axioms( powerset_algebra( l, p ) ); } );
        Report frames;
        for ( int i = 0; i < 50; ++i )
        {
            const std::size_t p = 1 + draw( rng, 3 );
            const auto frame = random_frame( rng, p );
            guarded( frames, "frame" + std::to_string( i ), [ & ] {
                const auto a = box_from_frame( l, frame );
                Report r = check_lvl_axioms( a );
                r.merge( check_lml_axioms( a ) );
                return r;
            } );
        }
        summarize( out, spec + ".frames", frames );
    }
    return out;
}

Report criterion3( const std::vector< BatteryAlgebra >& algebras )
{
    Report out;
    std::vector< BatteryAlgebra > small;
    for ( const auto& spec : lattice_catalogue() )
    {
        const auto l = resolve_lattice( spec );
        small.push_back( { spec, lattice_algebra( l ), true, 1 } );
        if ( l.size() * l.size() <= 16 )
            small.push_back( { spec + "^2", powerset_algebra( l, 2 ), true, 2 } );
    }
    for ( const auto& b : algebras )
        small.push_back( b );
    for ( const auto& b : small )
    {
        if ( b.algebra.size() > 16 )
            continue;
        guarded( out, b.name + ".oracle", [ & ] {
            Report r;
            for ( auto target : enumerate_subalgebras( b.algebra.truth() ).members() )
            {
                const auto fast = enumerate_homs( b.algebra, target );
                const auto slow = oracle::brute_force_homs( b.algebra, target );
                r.add( "target" + format_set( target ), fast == slow,
                       std::to_string( fast.size() ) + " vs " + std::to_string( slow.size() ) + " homs" );
            }
            return r;
        } );
    }
    for ( const auto& spec : lattice_catalogue() )
    {
        const auto l = resolve_lattice( spec );
        for ( std::size_t p = 0; p <= 3; ++p )
            guarded( out, spec + "^" + std::to_string( p ) + ".count", [ & ] {
                const auto n = enumerate_homs( powerset_algebra( l, p ) ).size();
                return single( "count", n == p, std::to_string( n ) + " homs" );
            } );
    }
    for ( const auto& b : algebras )
        if ( b.powerset )
            guarded( out, b.name + ".count", [ & ] {
                const auto n = enumerate_homs( b.algebra ).size();
                return single( "count", n == b.points, std::to_string( n ) + " homs" );
            } );
    return out;
}

Report criterion4( const std::vector< BatteryAlgebra >& algebras,
                   const std::vector< std::pair< std::string, PRBSObject > >& objects, std::size_t cap )
{
    Report out;
    for ( const auto& b : algebras )
        guarded( out, b.name + ".dual_space", [ & ] {
            const auto d = dual_space( b.algebra );
            Report r = check_prbs_object( d.prbs() );
            r.merge( check_lml_axioms( dual_algebra( d.prbs(), cap ).algebra ), "dual_algebra" );
            return r;
        } );
    for ( const auto& [ name, o ] : objects )
        guarded( out, name + ".dual_algebra", [ & ] {
            Report r = check_prbs_object( o );
            const auto f = dual_algebra( o, cap ).algebra;
            r.merge( check_lvl_axioms( f ) );
            r.merge( check_lml_axioms( f ) );
            return r;
        } );
    return out;
}

Report criterion5( const std::vector< BatteryAlgebra >& algebras,
                   const std::vector< std::pair< std::string, PRBSObject > >& objects, std::size_t cap )
{
    Report out;
    for ( const auto& b : algebras )
    {
        guarded( out, b.name + ".ml", [ & ] { return verify_ml_duality( b.algebra, cap ); } );
        guarded( out, b.name + ".lvl", [ & ] { return verify_lvl_duality( b.algebra.without_box(), cap ); } );
    }
    for ( const auto& [ name, o ] : objects )
        guarded( out, name + ".space", [ & ] { return verify_space_duality( o, cap ); } );
    return out;
}

Report criterion6( const std::vector< BatteryAlgebra >& algebras )
{
    Report out;
    for ( const auto& b : algebras )
        guarded( out, b.name, [ & ] { return check_truth_lemma( b.algebra ); } );
    return out;
}

Report criterion7( std::uint64_t seed )
{
    Report out;
    Rng rng( seed ^ 0x7 );
    for ( int i = 0; i < 100; ++i )
    {
        const std::size_t n = 1 + draw( rng, 5 );
        const auto s = random_boolean_space( rng, n );
        guarded( out, "space" + std::to_string( i ), [ & ] {
            Report r;
            const auto base = is_pairwise_boolean( s );
            r.add( "base_boolean", base.holds, base.witness );
            const auto v = vietoris_space( s );
            for ( auto [ name, res ] : { std::pair{ "hausdorff", is_pairwise_hausdorff( v.space ) },
                                         std::pair{ "zero_dimensional", is_pairwise_zero_dimensional( v.space ) },
                                         std::pair{ "compact", is_pairwise_compact( v.space ) },
                                         std::pair{ "de_morgan", check_box_diamond_duality( v ) } } )
                r.add( name, res.holds, res.witness );
            return r;
        } );
    }
    return out;
}

Report criterion8( const std::vector< std::pair< std::string, PRBSObject > >& objects )
{
    Report out;
    for ( std::size_t i = 0; i < objects.size(); ++i )
    {
        const auto& [ name, o ] = objects[ i ];
        guarded( out, name, [ & ] {
            const auto c = relation_to_coalgebra( o );
            std::vector< PRBSArrow > arrows;
            for ( auto& f : auto_space_morphisms( o, 4 ) )
                arrows.push_back( { 0, 0, std::move( f ) } );
            Report r = verify_category_iso( { o }, { c }, arrows );
            r.merge( check_coalgebra( c ), "coalgebra" );
            const auto back = coalgebra_to_relation( c );
            r.add( "bytes_object", serialize_space( back.base, back.relation, "L" ) ==
                                       serialize_space( o.base, o.relation, "L" ) );
            r.add( "bytes_coalgebra", relation_to_coalgebra( back ) == c );
            return r;
        } );
    }
    return out;
}

Report criterion9( const std::vector< BatteryAlgebra >& algebras, std::size_t cap )
{
    Report out;
    for ( const auto& b : algebras )
        guarded( out, b.name, [ & ] {
            Report r;
            const auto& a = b.algebra;
            const auto g = dual_space( a );
            const auto coalgebra = relation_to_coalgebra( g.prbs() );
            r.merge( check_coalgebra( coalgebra ), "coalgebra" );
            const auto back = coalgebra_to_relation( coalgebra );
            const auto f = dual_algebra( back, cap );
            const auto gamma = unit_gamma( a, g, f );
            r.merge( gamma.report );
            if ( !gamma.report.passed() )
                return r;
            std::vector< std::string > labels;
            for ( Element e = 0; e < a.size(); ++e )
                labels.push_back( a.label( e ) );
            const auto recovered = transport( f.algebra, gamma.gamma.map, labels );
            r.add( "recovered", recovered == a, "gamma " + map_text( gamma.gamma.map ) );
            r.add( "bytes", serialize_algebra( recovered, "L" ) == serialize_algebra( a, "L" ) );
            return r;
        } );
    return out;
}

} // namespace

std::vector< BatteryAlgebra > battery_algebras( std::uint64_t seed )
{
    Rng rng( seed ^ 0xA );
    std::vector< BatteryAlgebra > out;
    for ( const auto& spec : duality_lattices )
    {
        const auto l = resolve_lattice( spec );
        out.push_back( { spec + "[id]", lattice_algebra( l ).with_box( identity_map( l.size() ) ), true, 1 } );
        for ( std::size_t p = 1; p <= 3; ++p )
            for ( int k = 0; k < 2; ++k )
            {
                const auto frame = random_frame( rng, p );
                out.push_back( { spec + "^" + std::to_string( p ) + "#" + std::to_string( k ),
                                 box_from_frame( l, frame ), true, p } );
            }

        // Restricted product with a frame that keeps each factor closed.
        const auto family = enumerate_subalgebras( l );
        const std::size_t p = 2 + draw( rng, 2 );
        std::vector< ElementSet > factors( p );
        for ( auto& f : factors )
            f = family[ draw( rng, family.size() ) ];
        Relation frame( p );
        for ( std::size_t x = 0; x < p; ++x )
            for ( std::size_t y = 0; y < p; ++y )
                if ( draw( rng, 2 ) && is_subset( factors[ y ], factors[ x ] ) )
                    frame.add( x, y );
        out.push_back( { spec + "^" + std::to_string( p ) + "#restricted", product_frame_algebra( l, factors, frame ),
                         false, p } );
    }
    return out;
}

std::vector< std::pair< std::string, PRBSObject > > battery_objects( std::uint64_t seed )
{
    Rng rng( seed ^ 0x0B );
    std::vector< std::pair< std::string, PRBSObject > > out;
    for ( const auto& b : battery_algebras( seed ) )
        out.emplace_back( "G(" + b.name + ")", dual_space( b.algebra ).prbs() );
    for ( int i = 0; i < 20; ++i )
    {
        const auto& spec = duality_lattices[ draw( rng, duality_lattices.size() ) ];
        const std::size_t n = 1 + draw( rng, 3 );
        out.emplace_back( "O" + std::to_string( i ) + "(" + spec + ")",
                          random_prbs_object( rng, resolve_lattice( spec ), n ) );
    }
    return out;
}

std::vector< CriterionResult > run_battery( const BatteryOptions& options )
{
    using clock = std::chrono::steady_clock;
    std::vector< CriterionResult > results;
    auto wanted = [ & ]( int c ) { return options.only.empty() || options.only.count( c ) > 0; };
    auto timed = [ & ]( int number, std::string title, const std::function< Report() >& body ) {
        if ( !wanted( number ) )
            return;
        const auto start = clock::now();
        Report r = body();
        const std::chrono::duration< double > elapsed = clock::now() - start;
        results.push_back( { number, std::move( title ), std::move( r ), elapsed.count() } );
    };

    const auto algebras = battery_algebras( options.seed );
    const auto objects = battery_objects( options.seed );
    const auto cap = options.max_candidates;

    timed( 1, "term functions", [] { return criterion1(); } );
    timed( 2, "axiom soundness", [ & ] { return criterion2( options.seed ); } );
    timed( 3, "hom enumeration oracle", [ & ] { return criterion3( algebras ); } );
    timed( 4, "dual well-definedness", [ & ] { return criterion4( algebras, objects, cap ); } );
    timed( 5, "duality round trips", [ & ] { return criterion5( algebras, objects, cap ); } );
    timed( 6, "truth lemma", [ & ] { return criterion6( algebras ); } );
    timed( 7, "vietoris preservation", [ & ] { return criterion7( options.seed ); } );
    timed( 8, "category isomorphism", [ & ] { return criterion8( objects ); } );
    timed( 9, "end-to-end chain", [ & ] { return criterion9( algebras, cap ); } );
    return results;
}

std::string battery_lines( const std::vector< CriterionResult >& results )
{
    std::string out;
    for ( const auto& c : results )
    {
        Report prefixed;
        prefixed.merge( c.report, "c" + std::to_string( c.number ) );
        out += prefixed.machine_lines();
    }
    return out;
}

} // namespace hvml::cli
