#include "hvml_cli/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace hvml::cli
{

namespace
{

struct Line
{
    std::size_t number;
    std::string text;
};

std::string trim( std::string_view s )
{
    const auto first = s.find_first_not_of( " \t\r" );
    if ( first == std::string_view::npos )
        return {};
    const auto last = s.find_last_not_of( " \t\r" );
    return std::string{ s.substr( first, last - first + 1 ) };
}

std::vector< Line > split_lines( std::string_view text )
{
    std::vector< Line > out;
    std::size_t number = 0;
    std::size_t start = 0;
    while ( start <= text.size() )
    {
        auto end = text.find( '\n', start );
        if ( end == std::string_view::npos )
            end = text.size();
        ++number;
        auto line = text.substr( start, end - start );
        if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
            line = line.substr( 0, hash );
        auto t = trim( line );
        if ( !t.empty() )
            out.push_back( { number, std::move( t ) } );
        start = end + 1;
    }
    return out;
}

[[noreturn]] void fail( std::size_t line, const std::string& what )
{
    throw Error( ErrorKind::ParseError, "line " + std::to_string( line ) + ": " + what );
}

std::vector< std::string > words( std::string_view s )
{
    std::istringstream in{ std::string{ s } };
    std::vector< std::string > out;
    for ( std::string w; in >> w; )
        out.push_back( w );
    return out;
}

std::size_t to_number( std::string_view s, std::size_t line )
{
    std::size_t v = 0;
    auto [ p, ec ] = std::from_chars( s.data(), s.data() + s.size(), v );
    if ( ec != std::errc{} || p != s.data() + s.size() )
        fail( line, "expected a number, got '" + std::string{ s } + "'" );
    return v;
}

// "key: value" -> value, when the line starts with key.
std::optional< std::string > header( const Line& l, std::string_view key )
{
    if ( l.text.size() > key.size() && l.text.compare( 0, key.size(), key ) == 0 && l.text[ key.size() ] == ':' )
        return trim( std::string_view{ l.text }.substr( key.size() + 1 ) );
    return std::nullopt;
}

// Brace lists "{0,2} {} {1}" on one line.
std::vector< PointSet > parse_sets( const Line& l, std::size_t points )
{
    std::vector< PointSet > out;
    std::size_t i = 0;
    const auto& s = l.text;
    while ( i < s.size() )
    {
        if ( s[ i ] == ' ' || s[ i ] == '\t' )
        {
            ++i;
            continue;
        }
        if ( s[ i ] != '{' )
            fail( l.number, "expected '{'" );
        const auto close = s.find( '}', i );
        if ( close == std::string::npos )
            fail( l.number, "unterminated set" );
        PointSet set = 0;
        std::string body = s.substr( i + 1, close - i - 1 );
        std::replace( body.begin(), body.end(), ',', ' ' );
        for ( const auto& w : words( body ) )
        {
            const auto p = to_number( w, l.number );
            if ( p >= points )
                fail( l.number, "point " + w + " out of range" );
            set |= bit( p );
        }
        out.push_back( set );
        i = close + 1;
    }
    return out;
}

std::pair< std::size_t, std::size_t > parse_edge( const Line& l, std::size_t n )
{
    const auto w = words( l.text );
    if ( w.size() != 2 )
        fail( l.number, "expected an edge 'p q'" );
    const auto p = to_number( w[ 0 ], l.number );
    const auto q = to_number( w[ 1 ], l.number );
    if ( p >= n || q >= n )
        fail( l.number, "edge endpoint out of range" );
    return { p, q };
}

Element parse_value( const std::string& w, const FiniteLattice& lattice, std::size_t line )
{
    for ( Element e = 0; e < lattice.size(); ++e )
        if ( lattice.label( e ) == w )
            return e;
    const auto v = to_number( w, line );
    if ( v >= lattice.size() )
        fail( line, "value " + w + " is not in the lattice" );
    return static_cast< Element >( v );
}

std::vector< Element > parse_row( const Line& l, std::size_t n, std::size_t range )
{
    const auto w = words( l.text );
    if ( w.size() != n )
        fail( l.number, "expected " + std::to_string( n ) + " entries" );
    std::vector< Element > row;
    for ( const auto& x : w )
    {
        const auto v = to_number( x, l.number );
        if ( v >= range )
            fail( l.number, "entry " + x + " out of range" );
        row.push_back( static_cast< Element >( v ) );
    }
    return row;
}

std::string set_text( PointSet s )
{
    return format_set( s );
}

template < typename F >
auto with_line_context( std::size_t line, F&& f )
{
    try
    {
        return f();
    }
    catch ( const Error& e )
    {
        if ( e.kind() == ErrorKind::ParseError )
            throw;
        fail( line, e.what() );
    }
}

} // namespace

std::string read_file( const std::filesystem::path& path )
{
    std::ifstream in( path, std::ios::binary );
    if ( !in )
        throw Error( ErrorKind::ParseError, "cannot read " + path.string() );
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FiniteLattice resolve_lattice( std::string_view spec, const std::filesystem::path& base )
{
    static const std::regex chain_re( R"(chain:(\d+))" );
    static const std::regex boolean_re( R"(boolean:(\d+))" );
    static const std::regex product_re( R"(product:(\d+)x(\d+))" );
    const std::string s{ spec };
    std::smatch m;
    if ( std::regex_match( s, m, chain_re ) )
    {
        const auto n = std::stoul( m[ 1 ] );
        if ( n < 1 || n > max_set_universe )
            throw Error( ErrorKind::ParseError, "chain length out of range in '" + s + "'" );
        return chain( n );
    }
    if ( std::regex_match( s, m, boolean_re ) )
    {
        const auto k = std::stoul( m[ 1 ] );
        if ( k > 6 )
            throw Error( ErrorKind::ParseError, "too many atoms in '" + s + "'" );
        return boolean_lattice( k );
    }
    if ( std::regex_match( s, m, product_re ) )
    {
        const auto a = std::stoul( m[ 1 ] ), b = std::stoul( m[ 2 ] );
        if ( a < 1 || b < 1 || a * b > max_set_universe )
            throw Error( ErrorKind::ParseError, "product out of range in '" + s + "'" );
        return chain_product( a, b );
    }
    if ( s == "diamond" )
        return diamond();
    if ( s == "m3" )
        return m3();
    std::filesystem::path p{ s };
    if ( p.is_relative() && !base.empty() )
        p = base / p;
    return parse_lattice( read_file( p ) );
}

FiniteLattice parse_lattice( std::string_view text )
{
    const auto lines = split_lines( text );
    if ( lines.empty() )
        throw Error( ErrorKind::ParseError, "empty lattice file" );
    std::optional< std::size_t > n;
    std::vector< std::string > labels;
    std::vector< Cover > covers;
    bool in_covers = false;
    for ( const auto& l : lines )
    {
        if ( auto v = header( l, "elements" ) )
        {
            n = to_number( *v, l.number );
            if ( *n == 0 || *n > max_set_universe )
                fail( l.number, "element count must be 1..64" );
            in_covers = false;
        }
        else if ( auto v = header( l, "labels" ) )
        {
            labels = words( *v );
            in_covers = false;
        }
        else if ( header( l, "covers" ) || l.text == "covers:" )
            in_covers = true;
        else if ( in_covers )
        {
            auto w = words( l.text );
            if ( w.size() != 3 || w[ 1 ] != "<" )
                fail( l.number, "expected 'i < j'" );
            if ( !n )
                fail( l.number, "covers before elements:" );
            const auto a = to_number( w[ 0 ], l.number ), b = to_number( w[ 2 ], l.number );
            if ( a >= *n || b >= *n )
                fail( l.number, "element out of range" );
            covers.push_back( { static_cast< Element >( a ), static_cast< Element >( b ) } );
        }
        else
            fail( l.number, "unexpected '" + l.text + "'" );
    }
    if ( !n )
        throw Error( ErrorKind::ParseError, "missing 'elements:'" );
    if ( !labels.empty() && labels.size() != *n )
        throw Error( ErrorKind::ParseError, "label count does not match element count" );
    return build_lattice( *n, covers, labels );
}

std::string serialize_lattice( const FiniteLattice& lattice )
{
    std::ostringstream out;
    out << "elements: " << lattice.size() << "\nlabels:";
    for ( const auto& l : lattice.labels() )
        out << ' ' << l;
    out << "\ncovers:\n";
    for ( const auto& c : lattice.covers() )
        out << c.lower << " < " << c.upper << '\n';
    return out.str();
}

MVAlgebra parse_algebra( std::string_view text, const std::filesystem::path& base, std::size_t max_carrier )
{
    const auto lines = split_lines( text );
    if ( lines.empty() )
        throw Error( ErrorKind::ParseError, "empty algebra file" );
    const auto first = words( lines[ 0 ].text );

    if ( first[ 0 ] == "powerset" )
    {
        std::string lattice_spec;
        std::optional< std::size_t > points;
        for ( std::size_t i = 1; i < first.size(); ++i )
        {
            if ( first[ i ].rfind( "L=", 0 ) == 0 )
                lattice_spec = first[ i ].substr( 2 );
            else if ( first[ i ].rfind( "P=", 0 ) == 0 )
                points = to_number( first[ i ].substr( 2 ), lines[ 0 ].number );
            else
                fail( lines[ 0 ].number, "unknown powerset argument '" + first[ i ] + "'" );
        }
        if ( lattice_spec.empty() || !points )
            fail( lines[ 0 ].number, "powerset needs L= and P=" );
        if ( *points > max_set_universe )
            fail( lines[ 0 ].number, "too many points" );
        const auto lattice = with_line_context( lines[ 0 ].number, [ & ] { return resolve_lattice( lattice_spec, base ); } );
        std::optional< Relation > frame;
        for ( std::size_t i = 1; i < lines.size(); ++i )
        {
            const auto& l = lines[ i ];
            if ( l.text == "R:" )
                frame.emplace( *points );
            else if ( frame )
            {
                auto [ p, q ] = parse_edge( l, *points );
                frame->add( p, q );
            }
            else
                fail( l.number, "unexpected '" + l.text + "'" );
        }
        if ( frame )
            return box_from_frame( lattice, *frame, max_carrier );
        return powerset_algebra( lattice, *points, max_carrier );
    }

    if ( first[ 0 ] != "algebra" || first.size() != 1 )
        fail( lines[ 0 ].number, "expected 'powerset ...' or 'algebra'" );

    std::optional< FiniteLattice > lattice;
    std::size_t n = 0;
    std::optional< Element > bottom, top;
    std::vector< std::string > labels;
    AlgebraTables t;
    std::vector< std::optional< std::vector< Element > > > levels;
    std::size_t i = 1;
    auto need_size = [ & ]( std::size_t line ) {
        if ( n == 0 )
            fail( line, "size: must come before the tables" );
    };
    auto read_rows = [ & ]( std::size_t rows ) {
        std::vector< Element > out;
        for ( std::size_t r = 0; r < rows; ++r )
        {
            if ( i >= lines.size() )
                throw Error( ErrorKind::ParseError, "table ends early" );
            auto row = parse_row( lines[ i++ ], n, n );
            out.insert( out.end(), row.begin(), row.end() );
        }
        return out;
    };
    while ( i < lines.size() )
    {
        const auto& l = lines[ i++ ];
        if ( auto v = header( l, "lattice" ) )
        {
            lattice = with_line_context( l.number, [ & ] { return resolve_lattice( *v, base ); } );
            levels.assign( lattice->size(), std::nullopt );
        }
        else if ( auto v = header( l, "size" ) )
        {
            n = to_number( *v, l.number );
            if ( n == 0 || n > max_carrier )
                fail( l.number, "size out of range" );
        }
        else if ( auto v = header( l, "bottom" ) )
            bottom = static_cast< Element >( to_number( *v, l.number ) );
        else if ( auto v = header( l, "top" ) )
            top = static_cast< Element >( to_number( *v, l.number ) );
        else if ( auto v = header( l, "labels" ) )
            labels = words( *v );
        else if ( l.text == "meet:" )
        {
            need_size( l.number );
            t.meet = read_rows( n );
        }
        else if ( l.text == "join:" )
        {
            need_size( l.number );
            t.join = read_rows( n );
        }
        else if ( l.text == "implies:" )
        {
            need_size( l.number );
            t.implies = read_rows( n );
        }
        else if ( l.text == "box:" )
        {
            need_size( l.number );
            t.box = read_rows( 1 );
        }
        else if ( l.text.rfind( "T ", 0 ) == 0 && l.text.back() == ':' )
        {
            need_size( l.number );
            if ( !lattice )
                fail( l.number, "lattice: must come before T tables" );
            const auto level = to_number( trim( l.text.substr( 2, l.text.size() - 3 ) ), l.number );
            if ( level >= lattice->size() )
                throw Error( ErrorKind::TruthLatticeMismatch, "line " + std::to_string( l.number ) + ": level " +
                                                                  std::to_string( level ) + " is not in L" );
            levels[ level ] = read_rows( 1 );
        }
        else
            fail( l.number, "unexpected '" + l.text + "'" );
    }
    if ( !lattice || n == 0 || !bottom || !top || t.meet.empty() || t.join.empty() || t.implies.empty() )
        throw Error( ErrorKind::ParseError, "algebra block needs lattice, size, bottom, top, meet, join, implies" );
    for ( std::size_t level = 0; level < levels.size(); ++level )
    {
        if ( !levels[ level ] )
            throw Error( ErrorKind::TruthLatticeMismatch, "no T table for level " + std::to_string( level ) );
        t.t.insert( t.t.end(), levels[ level ]->begin(), levels[ level ]->end() );
    }
    t.size = n;
    t.bottom = *bottom;
    t.top = *top;
    if ( !labels.empty() && labels.size() != n )
        throw Error( ErrorKind::ParseError, "label count does not match size" );
    return MVAlgebra( *lattice, std::move( t ), std::move( labels ) );
}

std::string serialize_algebra( const MVAlgebra& algebra, std::string_view lattice_spec )
{
    const std::size_t n = algebra.size();
    std::ostringstream out;
    out << "algebra\nlattice: " << lattice_spec << "\nsize: " << n << "\nbottom: " << algebra.bottom()
        << "\ntop: " << algebra.top() << "\nlabels:";
    for ( Element a = 0; a < n; ++a )
        out << ' ' << algebra.label( a );
    out << '\n';
    auto table = [ & ]( const char* name, auto op ) {
        out << name << ":\n";
        for ( Element a = 0; a < n; ++a )
        {
            for ( Element b = 0; b < n; ++b )
                out << ( b ? " " : "" ) << op( a, b );
            out << '\n';
        }
    };
    table( "meet", [ & ]( Element a, Element b ) { return algebra.meet( a, b ); } );
    table( "join", [ & ]( Element a, Element b ) { return algebra.join( a, b ); } );
    table( "implies", [ & ]( Element a, Element b ) { return algebra.implies( a, b ); } );
    for ( Element level = 0; level < algebra.levels(); ++level )
    {
        out << "T " << level << ":\n";
        for ( Element a = 0; a < n; ++a )
            out << ( a ? " " : "" ) << algebra.t( level, a );
        out << '\n';
    }
    if ( algebra.has_box() )
    {
        out << "box:\n";
        for ( Element a = 0; a < n; ++a )
            out << ( a ? " " : "" ) << algebra.box( a );
        out << '\n';
    }
    return out.str();
}

SpaceFile parse_space( std::string_view text, const std::filesystem::path& base )
{
    const auto lines = split_lines( text );
    if ( lines.empty() )
        throw Error( ErrorKind::ParseError, "empty space file" );
    SpaceFile out;
    out.lattice_spec = "chain:2";
    std::optional< std::size_t > points;
    std::vector< PointSet > sub1, sub2;
    std::optional< Relation > relation;
    std::vector< std::pair< std::size_t, PointSet > > alpha_entries;
    enum class Block
    {
        None,
        Tau1,
        Tau2,
        R,
        Alpha,
    } block = Block::None;
    std::size_t lattice_line = 0;

    for ( const auto& l : lines )
    {
        if ( auto v = header( l, "lattice" ) )
        {
            out.lattice_spec = *v;
            lattice_line = l.number;
            block = Block::None;
        }
        else if ( auto v = header( l, "points" ) )
        {
            points = to_number( *v, l.number );
            if ( *points > max_set_universe )
                fail( l.number, "at most 64 points" );
            block = Block::None;
        }
        else if ( l.text == "tau1:" )
            block = Block::Tau1;
        else if ( l.text == "tau2:" )
            block = Block::Tau2;
        else if ( l.text == "R:" )
        {
            if ( !points )
                fail( l.number, "points: must come first" );
            relation.emplace( *points );
            block = Block::R;
        }
        else if ( l.text == "alpha:" )
            block = Block::Alpha;
        else
        {
            if ( !points )
                fail( l.number, "points: must come first" );
            switch ( block )
            {
            case Block::Tau1:
                for ( auto s : parse_sets( l, *points ) )
                    sub1.push_back( s );
                break;
            case Block::Tau2:
                for ( auto s : parse_sets( l, *points ) )
                    sub2.push_back( s );
                break;
            case Block::R: {
                auto [ p, q ] = parse_edge( l, *points );
                relation->add( p, q );
                break;
            }
            case Block::Alpha: {
                const auto colon = l.text.find( ':' );
                if ( colon == std::string::npos )
                    fail( l.number, "expected 'index: {set}'" );
                const auto idx = to_number( trim( l.text.substr( 0, colon ) ), l.number );
                const auto sets = parse_sets( { l.number, trim( l.text.substr( colon + 1 ) ) }, *points );
                if ( sets.size() != 1 )
                    fail( l.number, "expected exactly one set" );
                alpha_entries.emplace_back( idx, sets[ 0 ] );
                break;
            }
            case Block::None:
                fail( l.number, "unexpected '" + l.text + "'" );
            }
        }
    }
    if ( !points )
        throw Error( ErrorKind::ParseError, "missing 'points:'" );
    const auto lattice = with_line_context( lattice_line, [ & ] { return resolve_lattice( out.lattice_spec, base ); } );
    auto family = enumerate_subalgebras( lattice );
    std::vector< PointSet > alpha( family.size(), full_set( *points ) );
    for ( auto [ idx, set ] : alpha_entries )
    {
        if ( idx >= family.size() )
            throw Error( ErrorKind::AlphaDomainMismatch, "alpha index " + std::to_string( idx ) + " but L has only " +
                                                             std::to_string( family.size() ) + " subalgebras" );
        alpha[ idx ] = set;
    }
    out.object = { std::move( family ),
                   BitopSpace( generate_topology( *points, sub1 ), generate_topology( *points, sub2 ) ),
                   std::move( alpha ) };
    out.relation = std::move( relation );
    return out;
}

std::string serialize_space( const PBSObject& object, const std::optional< Relation >& relation,
                             std::string_view lattice_spec )
{
    std::ostringstream out;
    const std::size_t n = object.space.size();
    out << "lattice: " << lattice_spec << "\npoints: " << n << "\ntau1:\n";
    auto opens = [ & ]( const Topology& t ) {
        for ( std::size_t x = 0; x < n; ++x )
            out << ( x ? " " : "" ) << set_text( t.minimal_open( x ) );
        if ( n > 0 )
            out << '\n';
    };
    opens( object.space.tau1 );
    out << "tau2:\n";
    opens( object.space.tau2 );
    if ( relation )
    {
        out << "R:\n";
        for ( auto [ p, q ] : relation->edges() )
            out << p << ' ' << q << '\n';
    }
    out << "alpha:\n";
    for ( std::size_t i = 0; i < object.alpha.size(); ++i )
        out << i << ": " << set_text( object.alpha[ i ] ) << '\n';
    return out.str();
}

KripkeModel parse_model( std::string_view text, const FiniteLattice& lattice )
{
    const auto lines = split_lines( text );
    if ( lines.empty() )
        throw Error( ErrorKind::ParseError, "empty model file" );
    KripkeModel m;
    std::optional< std::size_t > worlds;
    enum class Block
    {
        None,
        R,
        Valuation,
    } block = Block::None;
    for ( const auto& l : lines )
    {
        if ( auto v = header( l, "worlds" ) )
        {
            worlds = to_number( *v, l.number );
            if ( *worlds > max_set_universe )
                fail( l.number, "at most 64 worlds" );
            m.worlds = *worlds;
            m.relation = Relation( *worlds );
            block = Block::None;
        }
        else if ( l.text == "R:" )
            block = Block::R;
        else if ( l.text == "valuation:" )
            block = Block::Valuation;
        else
        {
            if ( !worlds )
                fail( l.number, "worlds: must come first" );
            if ( block == Block::R )
            {
                auto [ p, q ] = parse_edge( l, *worlds );
                m.relation.add( p, q );
            }
            else if ( block == Block::Valuation )
            {
                const auto eq = l.text.find( '=' );
                if ( eq == std::string::npos )
                    fail( l.number, "expected 'name = values'" );
                const auto name = trim( l.text.substr( 0, eq ) );
                if ( name.empty() )
                    fail( l.number, "missing variable name" );
                const auto w = words( l.text.substr( eq + 1 ) );
                if ( w.size() != *worlds )
                    fail( l.number, "expected one value per world" );
                std::vector< Element > values;
                for ( const auto& x : w )
                    values.push_back( parse_value( x, lattice, l.number ) );
                m.valuation[ name ] = std::move( values );
            }
            else
                fail( l.number, "unexpected '" + l.text + "'" );
        }
    }
    if ( !worlds )
        throw Error( ErrorKind::ParseError, "missing 'worlds:'" );
    return m;
}

std::string serialize_model( const KripkeModel& model, const FiniteLattice& lattice )
{
    std::ostringstream out;
    out << "worlds: " << model.worlds << "\nR:\n";
    for ( auto [ p, q ] : model.relation.edges() )
        out << p << ' ' << q << '\n';
    if ( !model.valuation.empty() )
    {
        out << "valuation:\n";
        for ( const auto& [ name, values ] : model.valuation )
        {
            out << name << " =";
            for ( auto v : values )
                out << ' ' << lattice.label( v );
            out << '\n';
        }
    }
    return out.str();
}

} // namespace hvml::cli
