#include "hvml_cli/generate.hpp"

#include "hvml_cli/io.hpp"
#include "hvml/logic.hpp"

#include <sstream>

namespace hvml::cli
{

const std::vector< std::string >& lattice_catalogue()
{
    static const std::vector< std::string > names = {
        "chain:2", "chain:3", "chain:4", "chain:5", "chain:6", "chain:7",
        "chain:8", "boolean:2", "boolean:3", "product:2x3", "product:2x4",
    };
    return names;
}

Relation random_frame( Rng& rng, std::size_t points )
{
    Relation r( points );
    const std::size_t density = draw( rng, 101 );
    for ( std::size_t p = 0; p < points; ++p )
        for ( std::size_t q = 0; q < points; ++q )
            if ( draw( rng, 100 ) < density )
                r.add( p, q );
    return r;
}

PRBSObject random_prbs_object( Rng& rng, const FiniteLattice& lattice, std::size_t points )
{
    auto family = enumerate_subalgebras( lattice );
    std::vector< ElementSet > f( points );
    for ( auto& s : f )
        s = family[ draw( rng, family.size() ) ];

    std::vector< PointSet > alpha;
    for ( auto sub : family.members() )
    {
        PointSet a = 0;
        for ( std::size_t p = 0; p < points; ++p )
            if ( is_subset( f[ p ], sub ) )
                a |= bit( p );
        alpha.push_back( a );
    }

    Relation r( points );
    const std::size_t density = draw( rng, 101 );
    for ( std::size_t p = 0; p < points; ++p )
        for ( std::size_t q = 0; q < points; ++q )
            if ( draw( rng, 100 ) < density && is_subset( f[ q ], f[ p ] ) )
                r.add( p, q );

    return { { std::move( family ), BitopSpace::discrete( points ), std::move( alpha ) }, std::move( r ) };
}

namespace
{

std::vector< PointSet > random_subbasis( Rng& rng, std::size_t points )
{
    std::vector< PointSet > sets( 1 + draw( rng, points + 2 ) );
    for ( auto& s : sets )
        s = rng() & full_set( points );
    return sets;
}

} // namespace

BitopSpace random_boolean_space( Rng& rng, std::size_t points, std::size_t attempts )
{
    for ( std::size_t i = 0; i < attempts; ++i )
    {
        BitopSpace s( generate_topology( points, random_subbasis( rng, points ) ),
                      generate_topology( points, random_subbasis( rng, points ) ) );
        if ( is_pairwise_boolean( s ) )
            return s;
    }
    return BitopSpace::discrete( points );
}

std::string generate_instance( std::string_view kind, const GenerateOptions& options )
{
    Rng rng( options.seed );
    const auto& catalogue = lattice_catalogue();
    auto pick_points = [ & ] { return options.points ? options.points : 1 + draw( rng, options.max_points ); };

    if ( kind == "lattice" )
        return serialize_lattice( resolve_lattice( catalogue[ draw( rng, catalogue.size() ) ] ) );

    if ( kind == "powerset-algebra" )
    {
        const auto& spec = catalogue[ draw( rng, catalogue.size() ) ];
        const auto n = pick_points();
        const auto frame = random_frame( rng, n );
        std::ostringstream out;
        out << "powerset L=" << spec << " P=" << n << "\nR:\n";
        for ( auto [ p, q ] : frame.edges() )
            out << p << ' ' << q << '\n';
        return out.str();
    }

    if ( kind == "frame" )
    {
        const auto n = pick_points();
        return serialize_model( { n, random_frame( rng, n ), {} }, chain( 2 ) );
    }

    if ( kind == "bitop-space" )
    {
        const auto n = pick_points();
        const auto space = random_boolean_space( rng, n );
        const auto lattice = chain( 2 );
        auto family = enumerate_subalgebras( lattice );
        std::vector< PointSet > alpha( family.size(), full_set( n ) );
        return serialize_space( { std::move( family ), space, std::move( alpha ) }, std::nullopt, "chain:2" );
    }

    if ( kind == "prbs-object" )
    {
        const auto& spec = catalogue[ draw( rng, catalogue.size() ) ];
        const auto n = pick_points();
        const auto object = random_prbs_object( rng, resolve_lattice( spec ), n );
        return serialize_space( object.base, object.relation, spec );
    }

    throw Error( ErrorKind::ParseError,
                 "unknown instance kind '" + std::string{ kind } + "' (expected " + std::string{ generate_kinds } + ")" );
}

} // namespace hvml::cli
