#include "hvml/lattice.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hvml
{

namespace
{

std::string pair_text( const FiniteLattice& l, Element a, Element b )
{
    return "(" + l.label( a ) + "," + l.label( b ) + ")";
}

std::string triple_text( const FiniteLattice& l, Element a, Element b, Element c )
{
    return "(" + l.label( a ) + "," + l.label( b ) + "," + l.label( c ) + ")";
}

// Least element of `candidates` under `leq`, if any.
template < typename Leq >
std::optional< Element > least_of( const std::vector< Element >& candidates, Leq leq )
{
    for ( auto c : candidates )
        if ( std::all_of( candidates.begin(), candidates.end(), [ & ]( Element d ) { return leq( c, d ); } ) )
            return c;
    return std::nullopt;
}

} // namespace

void FiniteLattice::require_element( Element a ) const
{
    if ( a >= _size )
        throw Error( ErrorKind::ElementOutOfRange,
                     "element " + std::to_string( a ) + " not in a lattice of size " + std::to_string( _size ) );
}

void FiniteLattice::require_heyting() const
{
    if ( !is_heyting() )
        throw Error( ErrorKind::NotDistributive, "truth lattice has no Heyting implication" );
}

std::vector< Cover > FiniteLattice::covers() const
{
    std::vector< Cover > out;
    for ( Element a = 0; a < _size; ++a )
        for ( Element b = 0; b < _size; ++b )
        {
            if ( a == b || !leq( a, b ) )
                continue;
            bool direct = true;
            for ( Element c = 0; c < _size && direct; ++c )
                if ( c != a && c != b && leq( a, c ) && leq( c, b ) )
                    direct = false;
            if ( direct )
                out.push_back( { a, b } );
        }
    return out;
}

FiniteLattice build_lattice( std::size_t n, const std::vector< Cover >& covers, std::vector< std::string > labels )
{
    if ( n == 0 )
        throw Error( ErrorKind::NotALattice, "a lattice needs at least one element" );
    if ( n > max_set_universe )
        throw Error( ErrorKind::SizeOverflow, "lattices are limited to 64 elements" );
    if ( !labels.empty() && labels.size() != n )
        throw Error( ErrorKind::InvalidArity, "expected " + std::to_string( n ) + " labels" );

    FiniteLattice l;
    l._size = n;
    l._leq.assign( n * n, 0 );
    for ( std::size_t i = 0; i < n; ++i )
        l._leq[ i * n + i ] = 1;
    for ( const auto& c : covers )
    {
        if ( c.lower >= n || c.upper >= n )
            throw Error( ErrorKind::ElementOutOfRange, "cover " + std::to_string( c.lower ) + " < " +
                                                           std::to_string( c.upper ) + " names a missing element" );
        if ( c.lower == c.upper )
            throw Error( ErrorKind::CyclicCovers, "element " + std::to_string( c.lower ) + " covers itself" );
        l._leq[ c.lower * n + c.upper ] = 1;
    }
    for ( std::size_t k = 0; k < n; ++k )
        for ( std::size_t i = 0; i < n; ++i )
            if ( l._leq[ i * n + k ] )
                for ( std::size_t j = 0; j < n; ++j )
                    if ( l._leq[ k * n + j ] )
                        l._leq[ i * n + j ] = 1;
    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = i + 1; j < n; ++j )
            if ( l._leq[ i * n + j ] && l._leq[ j * n + i ] )
                throw Error( ErrorKind::CyclicCovers,
                             "elements " + std::to_string( i ) + " and " + std::to_string( j ) + " lie on a cycle" );

    auto leq = [ & ]( Element a, Element b ) { return l._leq[ a * n + b ] != 0; };
    l._join.resize( n * n );
    l._meet.resize( n * n );
    std::vector< Element > bounds;
    for ( Element a = 0; a < n; ++a )
        for ( Element b = 0; b < n; ++b )
        {
            bounds.clear();
            for ( Element c = 0; c < n; ++c )
                if ( leq( a, c ) && leq( b, c ) )
                    bounds.push_back( c );
            auto lub = least_of( bounds, leq );
            if ( !lub )
                throw Error( ErrorKind::NotALattice, "pair (" + std::to_string( a ) + "," + std::to_string( b ) +
                                                         ") has no least upper bound" );
            bounds.clear();
            for ( Element c = 0; c < n; ++c )
                if ( leq( c, a ) && leq( c, b ) )
                    bounds.push_back( c );
            auto glb = least_of( bounds, [ & ]( Element x, Element y ) { return leq( y, x ); } );
            if ( !glb )
                throw Error( ErrorKind::NotALattice, "pair (" + std::to_string( a ) + "," + std::to_string( b ) +
                                                         ") has no greatest lower bound" );
            l._join[ a * n + b ] = *lub;
            l._meet[ a * n + b ] = *glb;
        }

    Element bottom = 0, top = 0;
    for ( Element a = 0; a < n; ++a )
    {
        bottom = l._meet[ bottom * n + a ];
        top = l._join[ top * n + a ];
    }
    l._bottom = bottom;
    l._top = top;

    l._distributive = true;
    for ( Element a = 0; a < n && l._distributive; ++a )
        for ( Element b = 0; b < n && l._distributive; ++b )
            for ( Element c = 0; c < n; ++c )
                if ( l._meet[ a * n + l._join[ b * n + c ] ] !=
                     l._join[ l._meet[ a * n + b ] * n + l._meet[ a * n + c ] ] )
                {
                    l._distributive = false;
                    break;
                }

    // a -> b = greatest x with a & x <= b, when every pair has one.
    std::vector< Element > implies( n * n );
    bool heyting = true;
    for ( Element a = 0; a < n && heyting; ++a )
        for ( Element b = 0; b < n && heyting; ++b )
        {
            bounds.clear();
            for ( Element x = 0; x < n; ++x )
                if ( leq( l._meet[ a * n + x ], b ) )
                    bounds.push_back( x );
            auto greatest = least_of( bounds, [ & ]( Element x, Element y ) { return leq( y, x ); } );
            if ( !greatest )
                heyting = false;
            else
                implies[ a * n + b ] = *greatest;
        }
    if ( heyting )
        l._implies = std::move( implies );

    if ( labels.empty() )
    {
        labels.resize( n );
        for ( Element a = 0; a < n; ++a )
            labels[ a ] = a == bottom ? "0" : a == top ? "1" : "e" + std::to_string( a );
    }
    l._labels = std::move( labels );
    return l;
}

FiniteLattice build_heyting( std::size_t n, const std::vector< Cover >& covers, std::vector< std::string > labels )
{
    auto l = build_lattice( n, covers, std::move( labels ) );
    if ( !l.is_distributive() )
        throw Error( ErrorKind::NotDistributive, "truth lattice must be distributive" );
    return l;
}

FiniteLattice chain( std::size_t n )
{
    std::vector< Cover > covers;
    std::vector< std::string > labels( n );
    for ( Element k = 0; k < n; ++k )
    {
        if ( k + 1 < n )
            covers.push_back( { k, k + 1 } );
        labels[ k ] = k == 0 ? "0" : k + 1 == n ? "1" : std::to_string( k ) + "/" + std::to_string( n - 1 );
    }
    return build_lattice( n, covers, std::move( labels ) );
}

FiniteLattice boolean_lattice( std::size_t atoms )
{
    const std::size_t n = std::size_t{ 1 } << atoms;
    std::vector< Cover > covers;
    std::vector< std::string > labels( n );
    for ( Element s = 0; s < n; ++s )
    {
        for ( std::size_t i = 0; i < atoms; ++i )
        {
            if ( !contains( s, i ) )
                covers.push_back( { s, static_cast< Element >( s | bit( i ) ) } );
            if ( contains( s, i ) )
                labels[ s ] += static_cast< char >( 'a' + i );
        }
    }
    labels[ 0 ] = "0";
    labels[ n - 1 ] = "1";
    return build_lattice( n, covers, std::move( labels ) );
}

FiniteLattice chain_product( std::size_t m, std::size_t n )
{
    std::vector< Cover > covers;
    std::vector< std::string > labels( m * n );
    for ( Element i = 0; i < m; ++i )
        for ( Element j = 0; j < n; ++j )
        {
            Element id = i * n + j;
            if ( i + 1 < m )
                covers.push_back( { id, static_cast< Element >( id + n ) } );
            if ( j + 1 < n )
                covers.push_back( { id, id + 1 } );
            labels[ id ] = "(" + std::to_string( i ) + "," + std::to_string( j ) + ")";
        }
    labels.front() = "0";
    labels.back() = "1";
    return build_lattice( m * n, covers, std::move( labels ) );
}

FiniteLattice diamond()
{
    return build_lattice( 4, { { 0, 1 }, { 0, 2 }, { 1, 3 }, { 2, 3 } }, { "0", "a", "b", "1" } );
}

FiniteLattice m3()
{
    return build_lattice( 5, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 4 }, { 2, 4 }, { 3, 4 } },
                          { "0", "a", "b", "c", "1" } );
}

Element term_switch( const FiniteLattice& lattice, Element l1, Element l2, Element l3, Element l4 )
{
    for ( auto e : { l1, l2, l3, l4 } )
        lattice.require_element( e );
    return l1 == l2 ? l3 : l4;
}

Element term_switch_by_term( const FiniteLattice& lattice, Element l1, Element l2, Element l3, Element l4 )
{
    for ( auto e : { l1, l2, l3, l4 } )
        lattice.require_element( e );
    lattice.require_heyting();
    Element equal = lattice.bottom();
    for ( Element level = 0; level < lattice.size(); ++level )
        equal = lattice.join( equal,
                              lattice.meet( t_op( lattice, level, l1 ), t_op( lattice, level, l2 ) ) );
    return lattice.join( lattice.meet( equal, l3 ), lattice.meet( lattice.negate( equal ), l4 ) );
}

Element t_op( const FiniteLattice& lattice, Element level, Element x )
{
    lattice.require_element( level );
    lattice.require_element( x );
    return x == level ? lattice.top() : lattice.bottom();
}

Element u_op( const FiniteLattice& lattice, Element level, Element x )
{
    lattice.require_element( level );
    lattice.require_element( x );
    return lattice.leq( level, x ) ? lattice.top() : lattice.bottom();
}

SubalgebraFamily::SubalgebraFamily( FiniteLattice parent, std::vector< ElementSet > members )
    : _parent{ std::move( parent ) }, _members{ std::move( members ) }
{
    std::sort( _members.begin(), _members.end() );
    _members.erase( std::unique( _members.begin(), _members.end() ), _members.end() );
}

std::optional< std::size_t > SubalgebraFamily::index_of( ElementSet s ) const
{
    auto it = std::lower_bound( _members.begin(), _members.end(), s );
    if ( it == _members.end() || *it != s )
        return std::nullopt;
    return static_cast< std::size_t >( it - _members.begin() );
}

bool is_subalgebra( const FiniteLattice& lattice, ElementSet s )
{
    lattice.require_heyting();
    if ( !contains( s, lattice.bottom() ) || !contains( s, lattice.top() ) )
        return false;
    const auto elems = members( s );
    for ( auto a : elems )
    {
        for ( auto b : elems )
        {
            auto ea = static_cast< Element >( a ), eb = static_cast< Element >( b );
            if ( !contains( s, lattice.meet( ea, eb ) ) || !contains( s, lattice.join( ea, eb ) ) ||
                 !contains( s, lattice.implies( ea, eb ) ) )
                return false;
        }
        for ( Element level = 0; level < lattice.size(); ++level )
            if ( !contains( s, t_op( lattice, level, static_cast< Element >( a ) ) ) )
                return false;
    }
    return true;
}

ElementSet subalgebra_closure( const FiniteLattice& lattice, ElementSet generators )
{
    lattice.require_heyting();
    ElementSet s = generators | bit( lattice.bottom() ) | bit( lattice.top() );
    for ( ;; )
    {
        ElementSet next = s;
        for ( auto a : members( s ) )
            for ( auto b : members( s ) )
            {
                auto ea = static_cast< Element >( a ), eb = static_cast< Element >( b );
                next |= bit( lattice.meet( ea, eb ) ) | bit( lattice.join( ea, eb ) ) | bit( lattice.implies( ea, eb ) );
            }
        if ( next == s )
            return s;
        s = next;
    }
}

SubalgebraFamily enumerate_subalgebras_by_closure( const FiniteLattice& lattice )
{
    std::set< ElementSet > seen;
    std::deque< ElementSet > queue;
    const ElementSet start = subalgebra_closure( lattice, 0 );
    seen.insert( start );
    queue.push_back( start );
    while ( !queue.empty() )
    {
        const ElementSet s = queue.front();
        queue.pop_front();
        for ( auto x : members( complement( s, lattice.size() ) ) )
        {
            const ElementSet next = subalgebra_closure( lattice, s | bit( x ) );
            if ( seen.insert( next ).second )
                queue.push_back( next );
        }
    }
    return { lattice, { seen.begin(), seen.end() } };
}

SubalgebraFamily enumerate_subalgebras( const FiniteLattice& lattice )
{
    lattice.require_heyting();
    const std::size_t n = lattice.size();
    if ( n > 12 )
        return enumerate_subalgebras_by_closure( lattice );

    const ElementSet fixed = bit( lattice.bottom() ) | bit( lattice.top() );
    const auto free = members( complement( fixed, n ) );
    std::vector< ElementSet > found;
    for ( std::uint64_t pick = 0; pick < ( std::uint64_t{ 1 } << free.size() ); ++pick )
    {
        ElementSet s = fixed;
        for ( std::size_t i = 0; i < free.size(); ++i )
            if ( contains( pick, i ) )
                s |= bit( free[ i ] );
        if ( is_subalgebra( lattice, s ) )
            found.push_back( s );
    }
    return { lattice, std::move( found ) };
}

Report check_lattice_laws( const FiniteLattice& l )
{
    const Element n = static_cast< Element >( l.size() );
    Report report;

    // Each law scans in lexicographic order and stops at the first witness.
    auto scan2 = [ & ]( const char* name, auto&& holds ) {
        for ( Element a = 0; a < n; ++a )
            for ( Element b = 0; b < n; ++b )
                if ( !holds( a, b ) )
                {
                    report.add( name, false, pair_text( l, a, b ) );
                    return;
                }
        report.add( name, true );
    };
    auto scan3 = [ & ]( const char* name, auto&& holds ) {
        for ( Element a = 0; a < n; ++a )
            for ( Element b = 0; b < n; ++b )
                for ( Element c = 0; c < n; ++c )
                    if ( !holds( a, b, c ) )
                    {
                        report.add( name, false, triple_text( l, a, b, c ) );
                        return;
                    }
        report.add( name, true );
    };

    scan2( "reflexive", [ & ]( Element a, Element ) { return l.leq( a, a ); } );
    scan2( "antisymmetric", [ & ]( Element a, Element b ) { return !( l.leq( a, b ) && l.leq( b, a ) ) || a == b; } );
    scan3( "transitive", [ & ]( Element a, Element b, Element c ) {
        return !( l.leq( a, b ) && l.leq( b, c ) ) || l.leq( a, c );
    } );
    scan3( "join_is_lub", [ & ]( Element a, Element b, Element c ) {
        const Element j = l.join( a, b );
        return l.leq( a, j ) && l.leq( b, j ) && ( !( l.leq( a, c ) && l.leq( b, c ) ) || l.leq( j, c ) );
    } );
    scan3( "meet_is_glb", [ & ]( Element a, Element b, Element c ) {
        const Element m = l.meet( a, b );
        return l.leq( m, a ) && l.leq( m, b ) && ( !( l.leq( c, a ) && l.leq( c, b ) ) || l.leq( c, m ) );
    } );
    scan2( "commutative", [ & ]( Element a, Element b ) {
        return l.join( a, b ) == l.join( b, a ) && l.meet( a, b ) == l.meet( b, a );
    } );
    scan3( "associative", [ & ]( Element a, Element b, Element c ) {
        return l.join( a, l.join( b, c ) ) == l.join( l.join( a, b ), c ) &&
               l.meet( a, l.meet( b, c ) ) == l.meet( l.meet( a, b ), c );
    } );
    scan2( "idempotent", [ & ]( Element a, Element ) { return l.join( a, a ) == a && l.meet( a, a ) == a; } );
    scan2( "absorption", [ & ]( Element a, Element b ) {
        return l.join( a, l.meet( a, b ) ) == a && l.meet( a, l.join( a, b ) ) == a;
    } );
    scan3( "distributive", [ & ]( Element a, Element b, Element c ) {
        return l.meet( a, l.join( b, c ) ) == l.join( l.meet( a, b ), l.meet( a, c ) );
    } );
    if ( l.is_heyting() )
        scan3( "residuation", [ & ]( Element a, Element b, Element x ) {
            return l.leq( l.meet( a, x ), b ) == l.leq( x, l.implies( a, b ) );
        } );
    else
        report.add( "residuation", false, "(no relative pseudo-complement)" );
    scan2( "bounded", [ & ]( Element a, Element ) { return l.leq( l.bottom(), a ) && l.leq( a, l.top() ); } );
    return report;
}

LukasiewiczTables lukasiewicz_tables( std::size_t n )
{
    if ( n < 2 )
        throw Error( ErrorKind::InvalidArity, "Lukasiewicz chains need at least 2 values" );
    LukasiewiczTables t;
    t._n = n;
    const auto top = static_cast< Element >( n - 1 );
    for ( auto* table : { &t._max, &t._min, &t._strong_and, &t._strong_or, &t._implies } )
        table->resize( n * n );
    t._complement.resize( n );
    for ( Element p = 0; p < n; ++p )
    {
        t._complement[ p ] = top - p;
        for ( Element q = 0; q < n; ++q )
        {
            const std::size_t i = p * n + q;
            t._max[ i ] = std::max( p, q );
            t._min[ i ] = std::min( p, q );
            t._strong_and[ i ] = p + q > top ? p + q - top : 0;
            t._strong_or[ i ] = std::min( top, p + q );
            t._implies[ i ] = std::min( top, top - p + q );
        }
    }
    return t;
}

} // namespace hvml
