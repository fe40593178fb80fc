#include "hvml/mvalgebra.hpp"

#include <algorithm>

namespace hvml
{

namespace
{

void check_table( const std::vector< Element >& table, std::size_t expected, std::size_t range, const char* name )
{
    if ( table.size() != expected )
        throw Error( ErrorKind::ArityMismatch, std::string{ name } + " table has " + std::to_string( table.size() ) +
                                                   " entries, expected " + std::to_string( expected ) );
    for ( auto v : table )
        if ( v >= range )
            throw Error( ErrorKind::ElementOutOfRange,
                         std::string{ name } + " table mentions element " + std::to_string( v ) );
}

// Mixed-radix numbering of the functions of a product algebra.
struct ProductShape
{
    std::vector< std::vector< Element > > values; // factor members per point
    std::vector< std::vector< Element > > rank;   // rank[p][l], or size of lattice if absent
    std::vector< std::size_t > weight;
    std::size_t count = 1;

    ProductShape( const FiniteLattice& lattice, const std::vector< ElementSet >& factors, std::size_t cap )
    {
        const std::size_t k = factors.size();
        values.resize( k );
        rank.assign( k, std::vector< Element >( lattice.size(), static_cast< Element >( lattice.size() ) ) );
        weight.assign( k, 1 );
        for ( std::size_t p = 0; p < k; ++p )
        {
            if ( ( factors[ p ] & ~lattice.carrier() ) != 0 || factors[ p ] == 0 )
                throw Error( ErrorKind::ElementOutOfRange, "factor " + std::to_string( p ) + " is not a subset of L" );
            for ( auto e : members( factors[ p ] ) )
            {
                rank[ p ][ e ] = static_cast< Element >( values[ p ].size() );
                values[ p ].push_back( static_cast< Element >( e ) );
            }
        }
        for ( std::size_t p = k; p-- > 0; )
        {
            weight[ p ] = count;
            if ( count > cap / values[ p ].size() )
                throw Error( ErrorKind::SizeOverflow, "carrier exceeds the cap of " + std::to_string( cap ) );
            count *= values[ p ].size();
        }
        if ( count > cap )
            throw Error( ErrorKind::SizeOverflow, "carrier exceeds the cap of " + std::to_string( cap ) );
    }

    std::vector< Element > coordinates( Element index ) const
    {
        std::vector< Element > out( values.size() );
        for ( std::size_t p = 0; p < values.size(); ++p )
            out[ p ] = values[ p ][ ( index / weight[ p ] ) % values[ p ].size() ];
        return out;
    }

    // npos-like sentinel when some coordinate is outside its factor.
    std::optional< Element > index( std::span< const Element > coords ) const
    {
        std::size_t idx = 0;
        for ( std::size_t p = 0; p < values.size(); ++p )
        {
            const Element r = rank[ p ][ coords[ p ] ];
            if ( r >= values[ p ].size() )
                return std::nullopt;
            idx += r * weight[ p ];
        }
        return static_cast< Element >( idx );
    }
};

std::string coordinates_label( const FiniteLattice& lattice, const std::vector< Element >& coords )
{
    std::string out = "(";
    for ( std::size_t p = 0; p < coords.size(); ++p )
    {
        if ( p > 0 )
            out += ',';
        out += lattice.label( coords[ p ] );
    }
    return out + ")";
}

MVAlgebra build_product( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                         const Relation* frame, std::size_t cap )
{
    lattice.require_heyting();
    const ProductShape shape( lattice, factors, cap );
    const std::size_t n = shape.count;
    const std::size_t k = factors.size();
    const std::size_t m = lattice.size();

    std::vector< std::vector< Element > > coords( n );
    std::vector< std::string > labels( n );
    for ( Element i = 0; i < n; ++i )
    {
        coords[ i ] = shape.coordinates( i );
        labels[ i ] = coordinates_label( lattice, coords[ i ] );
    }

    auto encode = [ & ]( const std::vector< Element >& c ) {
        auto idx = shape.index( c );
        if ( !idx )
            throw Error( ErrorKind::NotWellDefined, "operation leaves the product carrier at " +
                                                        coordinates_label( lattice, c ) );
        return *idx;
    };

    AlgebraTables t;
    t.size = n;
    t.meet.resize( n * n );
    t.join.resize( n * n );
    t.implies.resize( n * n );
    t.t.resize( m * n );
    std::vector< Element > scratch( k );
    for ( Element a = 0; a < n; ++a )
        for ( Element b = 0; b < n; ++b )
        {
            for ( std::size_t p = 0; p < k; ++p )
                scratch[ p ] = lattice.meet( coords[ a ][ p ], coords[ b ][ p ] );
            t.meet[ a * n + b ] = encode( scratch );
            for ( std::size_t p = 0; p < k; ++p )
                scratch[ p ] = lattice.join( coords[ a ][ p ], coords[ b ][ p ] );
            t.join[ a * n + b ] = encode( scratch );
            for ( std::size_t p = 0; p < k; ++p )
                scratch[ p ] = lattice.implies( coords[ a ][ p ], coords[ b ][ p ] );
            t.implies[ a * n + b ] = encode( scratch );
        }
    for ( Element level = 0; level < m; ++level )
        for ( Element a = 0; a < n; ++a )
        {
            for ( std::size_t p = 0; p < k; ++p )
                scratch[ p ] = t_op( lattice, level, coords[ a ][ p ] );
            t.t[ level * n + a ] = encode( scratch );
        }
    std::fill( scratch.begin(), scratch.end(), lattice.bottom() );
    t.bottom = encode( scratch );
    std::fill( scratch.begin(), scratch.end(), lattice.top() );
    t.top = encode( scratch );

    if ( frame != nullptr )
    {
        if ( frame->size() != k )
            throw Error( ErrorKind::ArityMismatch, "frame has " + std::to_string( frame->size() ) +
                                                       " worlds, algebra has " + std::to_string( k ) + " points" );
        std::vector< Element > box( n );
        for ( Element a = 0; a < n; ++a )
        {
            for ( std::size_t x = 0; x < k; ++x )
            {
                Element v = lattice.top();
                for ( auto y : members( frame->successors( x ) ) )
                    v = lattice.meet( v, coords[ a ][ y ] );
                scratch[ x ] = v;
            }
            box[ a ] = encode( scratch );
        }
        t.box = std::move( box );
    }
    return MVAlgebra( lattice, std::move( t ), std::move( labels ) );
}

std::string quad( const MVAlgebra& alg, Element a, Element b, Element l1, Element l2 )
{
    const auto& l = alg.truth();
    return "(a=" + alg.label( a ) + ",b=" + alg.label( b ) + ",l1=" + l.label( l1 ) + ",l2=" + l.label( l2 ) + ")";
}

// Depth-first search for homomorphisms with forward propagation: once a
// value is fixed, the images of its T_l, box and all pairwise operations
// with already-fixed elements are forced. Branching happens only on a
// generating set of the source.
class HomSearch
{
    const MVAlgebra& _src;
    const MVAlgebra& _dst;
    std::vector< char > _allowed;
    bool _box;

    std::vector< Element > _value;
    std::vector< char > _assigned;
    std::vector< Element > _trail;
    std::size_t _processed = 0;
    std::vector< Element > _generators;
    std::vector< AlgebraHom > _found;

    bool force( Element x, Element v )
    {
        if ( _assigned[ x ] )
            return _value[ x ] == v;
        if ( !_allowed[ v ] )
            return false;
        _assigned[ x ] = 1;
        _value[ x ] = v;
        _trail.push_back( x );
        return true;
    }

    bool propagate()
    {
        const auto levels = static_cast< Element >( _src.levels() );
        while ( _processed < _trail.size() )
        {
            const Element x = _trail[ _processed++ ];
            const Element vx = _value[ x ];
            for ( Element level = 0; level < levels; ++level )
                if ( !force( _src.t( level, x ), _dst.t( level, vx ) ) )
                    return false;
            if ( _box && !force( _src.box( x ), _dst.box( vx ) ) )
                return false;
            for ( std::size_t j = 0; j < _trail.size(); ++j )
            {
                const Element z = _trail[ j ];
                const Element vz = _value[ z ];
                if ( !force( _src.meet( x, z ), _dst.meet( vx, vz ) ) ||
                     !force( _src.join( x, z ), _dst.join( vx, vz ) ) ||
                     !force( _src.implies( x, z ), _dst.implies( vx, vz ) ) ||
                     !force( _src.implies( z, x ), _dst.implies( vz, vx ) ) )
                    return false;
            }
        }
        return true;
    }

    void undo( std::size_t mark )
    {
        while ( _trail.size() > mark )
        {
            _assigned[ _trail.back() ] = 0;
            _trail.pop_back();
        }
        _processed = mark;
    }

    void compute_generators()
    {
        const std::size_t n = _src.size();
        std::vector< char > closed( n, 0 );
        std::vector< Element > list;
        auto add = [ & ]( Element x ) {
            if ( !closed[ x ] )
            {
                closed[ x ] = 1;
                list.push_back( x );
            }
        };
        std::size_t done = 0;
        auto close = [ & ] {
            while ( done < list.size() )
            {
                const Element x = list[ done++ ];
                for ( Element level = 0; level < _src.levels(); ++level )
                    add( _src.t( level, x ) );
                if ( _box )
                    add( _src.box( x ) );
                for ( std::size_t j = 0; j < list.size(); ++j )
                {
                    const Element z = list[ j ];
                    add( _src.meet( x, z ) );
                    add( _src.join( x, z ) );
                    add( _src.implies( x, z ) );
                    add( _src.implies( z, x ) );
                }
            }
        };
        add( _src.bottom() );
        add( _src.top() );
        close();
        for ( Element x = 0; x < n; ++x )
            if ( !closed[ x ] )
            {
                _generators.push_back( x );
                add( x );
                close();
            }
    }

    void search( std::size_t g )
    {
        while ( g < _generators.size() && _assigned[ _generators[ g ] ] )
            ++g;
        if ( g == _generators.size() )
        {
            if ( !is_homomorphism( _value, _src, _dst ) )
                throw Error( ErrorKind::NotWellDefined, "propagated assignment is not a homomorphism" );
            _found.push_back( { _value } );
            return;
        }
        const Element x = _generators[ g ];
        for ( Element v = 0; v < _dst.size(); ++v )
        {
            if ( !_allowed[ v ] )
                continue;
            const std::size_t mark = _trail.size();
            if ( force( x, v ) && propagate() )
                search( g + 1 );
            undo( mark );
        }
    }

public:
    HomSearch( const MVAlgebra& src, const MVAlgebra& dst, std::vector< char > allowed, bool box )
        : _src{ src }, _dst{ dst }, _allowed{ std::move( allowed ) }, _box{ box },
          _value( src.size(), 0 ), _assigned( src.size(), 0 )
    {
    }

    std::vector< AlgebraHom > run()
    {
        if ( _src.size() == 0 )
            return {};
        compute_generators();
        if ( force( _src.bottom(), _dst.bottom() ) && force( _src.top(), _dst.top() ) && propagate() )
            search( 0 );
        std::sort( _found.begin(), _found.end() );
        return std::move( _found );
    }
};

} // namespace

MVAlgebra::MVAlgebra( FiniteLattice truth, AlgebraTables tables, std::vector< std::string > labels )
    : _truth{ std::move( truth ) }, _tables{ std::move( tables ) }, _labels{ std::move( labels ) }
{
    _truth.require_heyting();
    const std::size_t n = _tables.size;
    if ( n == 0 )
        throw Error( ErrorKind::ArityMismatch, "an algebra needs at least one element" );
    check_table( _tables.meet, n * n, n, "meet" );
    check_table( _tables.join, n * n, n, "join" );
    check_table( _tables.implies, n * n, n, "implies" );
    if ( _tables.t.size() != _truth.size() * n )
        throw Error( ErrorKind::TruthLatticeMismatch,
                     "T table has " + std::to_string( _tables.t.size() / n ) + " levels, truth lattice has " +
                         std::to_string( _truth.size() ) );
    check_table( _tables.t, _truth.size() * n, n, "T" );
    if ( _tables.box )
        check_table( *_tables.box, n, n, "box" );
    if ( _tables.bottom >= n || _tables.top >= n )
        throw Error( ErrorKind::ElementOutOfRange, "constant outside the carrier" );
    if ( _labels.empty() )
        for ( Element a = 0; a < n; ++a )
            _labels.push_back( std::to_string( a ) );
    if ( _labels.size() != n )
        throw Error( ErrorKind::ArityMismatch, "label count does not match carrier" );
}

Element MVAlgebra::box( Element a ) const
{
    if ( !_tables.box )
        throw Error( ErrorKind::MissingBox, "algebra has no modal operator" );
    return ( *_tables.box )[ a ];
}

MVAlgebra MVAlgebra::with_box( std::vector< Element > box ) const
{
    auto t = _tables;
    t.box = std::move( box );
    return MVAlgebra( _truth, std::move( t ), _labels );
}

MVAlgebra MVAlgebra::without_box() const
{
    auto t = _tables;
    t.box.reset();
    return MVAlgebra( _truth, std::move( t ), _labels );
}

MVAlgebra lattice_algebra( const FiniteLattice& lattice )
{
    return lattice_subalgebra( lattice, lattice.carrier() );
}

MVAlgebra lattice_subalgebra( const FiniteLattice& lattice, ElementSet subset )
{
    lattice.require_heyting();
    if ( !is_subalgebra( lattice, subset ) )
        throw Error( ErrorKind::NotWellDefined, format_set( subset ) + " is not a subalgebra" );
    const auto elems = members( subset );
    const std::size_t n = elems.size();
    std::vector< Element > rank( lattice.size(), 0 );
    for ( std::size_t i = 0; i < n; ++i )
        rank[ elems[ i ] ] = static_cast< Element >( i );

    AlgebraTables t;
    t.size = n;
    t.meet.resize( n * n );
    t.join.resize( n * n );
    t.implies.resize( n * n );
    t.t.resize( lattice.size() * n );
    std::vector< std::string > labels;
    for ( std::size_t i = 0; i < n; ++i )
    {
        const auto a = static_cast< Element >( elems[ i ] );
        labels.push_back( lattice.label( a ) );
        for ( std::size_t j = 0; j < n; ++j )
        {
            const auto b = static_cast< Element >( elems[ j ] );
            t.meet[ i * n + j ] = rank[ lattice.meet( a, b ) ];
            t.join[ i * n + j ] = rank[ lattice.join( a, b ) ];
            t.implies[ i * n + j ] = rank[ lattice.implies( a, b ) ];
        }
        for ( Element level = 0; level < lattice.size(); ++level )
            t.t[ level * n + i ] = rank[ t_op( lattice, level, a ) ];
    }
    t.bottom = rank[ lattice.bottom() ];
    t.top = rank[ lattice.top() ];
    return MVAlgebra( lattice, std::move( t ), std::move( labels ) );
}

MVAlgebra product_algebra( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                           std::size_t max_carrier )
{
    return build_product( lattice, factors, nullptr, max_carrier );
}

std::vector< Element > product_coordinates( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                                            Element index )
{
    return ProductShape( lattice, factors, ~std::size_t{ 0 } ).coordinates( index );
}

Element product_index( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                       std::span< const Element > coordinates )
{
    if ( coordinates.size() != factors.size() )
        throw Error( ErrorKind::ArityMismatch, "coordinate count does not match the number of points" );
    auto idx = ProductShape( lattice, factors, ~std::size_t{ 0 } ).index( coordinates );
    if ( !idx )
        throw Error( ErrorKind::ElementOutOfRange, "coordinates outside the product" );
    return *idx;
}

MVAlgebra powerset_algebra( const FiniteLattice& lattice, std::size_t points, std::size_t max_carrier )
{
    return product_algebra( lattice, std::vector< ElementSet >( points, lattice.carrier() ), max_carrier );
}

MVAlgebra box_from_frame( const FiniteLattice& lattice, const Relation& frame, std::size_t max_carrier )
{
    return build_product( lattice, std::vector< ElementSet >( frame.size(), lattice.carrier() ), &frame,
                          max_carrier );
}

MVAlgebra product_frame_algebra( const FiniteLattice& lattice, const std::vector< ElementSet >& factors,
                                 const Relation& frame, std::size_t max_carrier )
{
    return build_product( lattice, factors, &frame, max_carrier );
}

Report check_lvl_axioms( const MVAlgebra& alg )
{
    const auto& L = alg.truth();
    L.require_heyting();
    const auto n = static_cast< Element >( alg.size() );
    const auto m = static_cast< Element >( L.size() );
    const Element zero = alg.bottom(), one = alg.top();
    Report report;

    // (i) Heyting algebra laws on the tables.
    {
        std::string witness;
        auto fail = [ & ]( const char* law, Element a, Element b, Element c ) {
            witness = std::string{ law } + " (" + alg.label( a ) + "," + alg.label( b ) + "," + alg.label( c ) + ")";
        };
        for ( Element a = 0; a < n && witness.empty(); ++a )
        {
            if ( alg.meet( a, a ) != a || alg.join( a, a ) != a )
                fail( "idempotent", a, a, a );
            else if ( alg.meet( zero, a ) != zero || alg.meet( a, one ) != a || alg.join( a, zero ) != a ||
                      alg.join( a, one ) != one )
                fail( "bounded", a, zero, one );
            for ( Element b = 0; b < n && witness.empty(); ++b )
            {
                if ( alg.meet( a, b ) != alg.meet( b, a ) || alg.join( a, b ) != alg.join( b, a ) )
                    fail( "commutative", a, b, b );
                else if ( alg.join( a, alg.meet( a, b ) ) != a || alg.meet( a, alg.join( a, b ) ) != a )
                    fail( "absorption", a, b, b );
            }
        }
        for ( Element a = 0; a < n && witness.empty(); ++a )
            for ( Element b = 0; b < n && witness.empty(); ++b )
            {
                const Element ab_meet = alg.meet( a, b ), ab_join = alg.join( a, b ), ab_imp = alg.implies( a, b );
                for ( Element c = 0; c < n; ++c )
                {
                    if ( alg.meet( ab_meet, c ) != alg.meet( a, alg.meet( b, c ) ) ||
                         alg.join( ab_join, c ) != alg.join( a, alg.join( b, c ) ) )
                    {
                        fail( "associative", a, b, c );
                        break;
                    }
                    if ( alg.meet( a, alg.join( b, c ) ) != alg.join( ab_meet, alg.meet( a, c ) ) )
                    {
                        fail( "distributive", a, b, c );
                        break;
                    }
                    // residuation with c in the role of x
                    if ( alg.leq( alg.meet( a, c ), b ) != alg.leq( c, ab_imp ) )
                    {
                        fail( "residuation", a, b, c );
                        break;
                    }
                }
            }
        report.add( "axiom_i", witness.empty(), witness );
    }

    // (ii)
    {
        std::string witness;
        for ( Element a = 0; a < n && witness.empty(); ++a )
            for ( Element b = 0; b < n && witness.empty(); ++b )
                for ( Element l1 = 0; l1 < m && witness.empty(); ++l1 )
                    for ( Element l2 = 0; l2 < m; ++l2 )
                    {
                        const Element lhs = alg.meet( alg.t( l1, a ), alg.t( l2, b ) );
                        const Element rhs = alg.meet( alg.t( L.implies( l1, l2 ), alg.implies( a, b ) ),
                                                      alg.meet( alg.t( L.meet( l1, l2 ), alg.meet( a, b ) ),
                                                                alg.t( L.join( l1, l2 ), alg.join( a, b ) ) ) );
                        if ( !alg.leq( lhs, rhs ) )
                        {
                            witness = "T_l1(a)&T_l2(b) " + quad( alg, a, b, l1, l2 );
                            break;
                        }
                    }
        for ( Element a = 0; a < n && witness.empty(); ++a )
            for ( Element l1 = 0; l1 < m && witness.empty(); ++l1 )
                for ( Element l2 = 0; l2 < m; ++l2 )
                    if ( !alg.leq( alg.t( l2, a ), alg.t( t_op( L, l1, l2 ), alg.t( l1, a ) ) ) )
                    {
                        witness = "T_l2(a)<=T_{T_l1(l2)}(T_l1(a)) " + quad( alg, a, a, l1, l2 );
                        break;
                    }
        report.add( "axiom_ii", witness.empty(), witness );
    }

    // (iii)
    {
        std::string witness;
        for ( Element level = 0; level < m && witness.empty(); ++level )
        {
            const Element at_zero = level == L.bottom() ? one : zero;
            const Element at_one = level == L.top() ? one : zero;
            if ( alg.t( level, zero ) != at_zero )
                witness = "T_l(0) " + quad( alg, zero, zero, level, level );
            else if ( alg.t( level, one ) != at_one )
                witness = "T_l(1) " + quad( alg, one, one, level, level );
        }
        report.add( "axiom_iii", witness.empty(), witness );
    }

    // (iv) The complement clause is read with a single level,
    // T_l(a) | (T_l(a) -> 0) = 1, the only reading L itself satisfies.
    {
        std::string witness;
        for ( Element a = 0; a < n && witness.empty(); ++a )
        {
            Element all = zero;
            for ( Element level = 0; level < m; ++level )
                all = alg.join( all, alg.t( level, a ) );
            if ( all != one )
            {
                witness = "join_l T_l(a) " + quad( alg, a, a, 0, 0 );
                break;
            }
            for ( Element l1 = 0; l1 < m && witness.empty(); ++l1 )
            {
                const Element t1 = alg.t( l1, a );
                if ( alg.join( t1, alg.negate( t1 ) ) != one )
                    witness = "T_l(a)|~T_l(a) " + quad( alg, a, a, l1, l1 );
                for ( Element l2 = 0; l2 < m && witness.empty(); ++l2 )
                    if ( l1 != l2 && alg.meet( t1, alg.t( l2, a ) ) != zero )
                        witness = "T_l1(a)&T_l2(a) " + quad( alg, a, a, l1, l2 );
            }
        }
        report.add( "axiom_iv", witness.empty(), witness );
    }

    // (v)
    {
        std::string witness;
        for ( Element a = 0; a < n && witness.empty(); ++a )
            for ( Element l1 = 0; l1 < m && witness.empty(); ++l1 )
            {
                const Element t1 = alg.t( l1, a );
                if ( alg.t( L.top(), t1 ) != t1 )
                    witness = "T_1(T_l(a)) " + quad( alg, a, a, l1, L.top() );
                else if ( alg.t( L.bottom(), t1 ) != alg.negate( t1 ) )
                    witness = "T_0(T_l(a)) " + quad( alg, a, a, l1, L.bottom() );
                for ( Element l2 = 0; l2 < m && witness.empty(); ++l2 )
                    if ( l2 != L.bottom() && l2 != L.top() && alg.t( l2, t1 ) != zero )
                        witness = "T_l2(T_l1(a)) " + quad( alg, a, a, l1, l2 );
            }
        report.add( "axiom_v", witness.empty(), witness );
    }

    // (vi)
    {
        std::string witness;
        const Element top_level = L.top();
        for ( Element a = 0; a < n && witness.empty(); ++a )
        {
            if ( !alg.leq( alg.t( top_level, a ), a ) )
            {
                witness = "T_1(a)<=a " + quad( alg, a, a, top_level, top_level );
                break;
            }
            for ( Element b = 0; b < n; ++b )
                if ( alg.t( top_level, alg.meet( a, b ) ) != alg.meet( alg.t( top_level, a ), alg.t( top_level, b ) ) )
                {
                    witness = "T_1(a&b) " + quad( alg, a, b, top_level, top_level );
                    break;
                }
        }
        report.add( "axiom_vi", witness.empty(), witness );
    }

    // (vii)
    {
        std::string witness;
        for ( Element a = 0; a < n && witness.empty(); ++a )
            for ( Element b = 0; b < n; ++b )
            {
                Element agree = one;
                for ( Element level = 0; level < m; ++level )
                    agree = alg.meet( agree, alg.iff( alg.t( level, a ), alg.t( level, b ) ) );
                if ( !alg.leq( agree, alg.iff( a, b ) ) )
                {
                    witness = "meet_l(T_l(a)<->T_l(b))<=(a<->b) " + quad( alg, a, b, 0, 0 );
                    break;
                }
            }
        report.add( "axiom_vii", witness.empty(), witness );
    }
    return report;
}

Element derived_u( const MVAlgebra& alg, Element level, Element a )
{
    alg.truth().require_element( level );
    Element out = alg.bottom();
    for ( Element upper = 0; upper < alg.levels(); ++upper )
        if ( alg.truth().leq( level, upper ) )
            out = alg.join( out, alg.t( upper, a ) );
    return out;
}

Report check_lml_axioms( const MVAlgebra& alg )
{
    if ( !alg.has_box() )
        throw Error( ErrorKind::MissingBox, "L-ML axioms need a modal operator" );
    const auto n = static_cast< Element >( alg.size() );
    Report report;
    {
        std::string witness;
        for ( Element a = 0; a < n && witness.empty(); ++a )
            for ( Element b = 0; b < n; ++b )
                if ( alg.box( alg.meet( a, b ) ) != alg.meet( alg.box( a ), alg.box( b ) ) )
                {
                    witness = "(a=" + alg.label( a ) + ",b=" + alg.label( b ) + ")";
                    break;
                }
        report.add( "axiom_ml_ii", witness.empty(), witness );
    }
    {
        std::string witness;
        for ( Element level = 0; level < alg.levels() && witness.empty(); ++level )
            for ( Element a = 0; a < n; ++a )
                if ( alg.box( derived_u( alg, level, a ) ) != derived_u( alg, level, alg.box( a ) ) )
                {
                    witness = "(a=" + alg.label( a ) + ",l=" + alg.truth().label( level ) + ")";
                    break;
                }
        report.add( "axiom_ml_iii", witness.empty(), witness );
    }
    return report;
}

HomCheck is_homomorphism( std::span< const Element > map, const MVAlgebra& src, const MVAlgebra& dst )
{
    if ( !( src.truth() == dst.truth() ) )
        throw Error( ErrorKind::TruthLatticeMismatch, "algebras are over different truth lattices" );
    if ( map.size() != src.size() )
        throw Error( ErrorKind::ArityMismatch, "map has " + std::to_string( map.size() ) + " entries, source has " +
                                                   std::to_string( src.size() ) + " elements" );
    const auto n = static_cast< Element >( src.size() );
    for ( Element a = 0; a < n; ++a )
        if ( map[ a ] >= dst.size() )
            return { false, "value of " + src.label( a ) + " outside the target" };
    if ( map[ src.bottom() ] != dst.bottom() )
        return { false, "0 not preserved" };
    if ( map[ src.top() ] != dst.top() )
        return { false, "1 not preserved" };
    for ( Element level = 0; level < src.levels(); ++level )
        for ( Element a = 0; a < n; ++a )
            if ( map[ src.t( level, a ) ] != dst.t( level, map[ a ] ) )
                return { false, "T_" + src.truth().label( level ) + " not preserved at " + src.label( a ) };
    const bool box = src.has_box() && dst.has_box();
    for ( Element a = 0; a < n; ++a )
    {
        if ( box && map[ src.box( a ) ] != dst.box( map[ a ] ) )
            return { false, "box not preserved at " + src.label( a ) };
        for ( Element b = 0; b < n; ++b )
        {
            const Element x = map[ a ], y = map[ b ];
            const char* op = nullptr;
            if ( map[ src.meet( a, b ) ] != dst.meet( x, y ) )
                op = "meet";
            else if ( map[ src.join( a, b ) ] != dst.join( x, y ) )
                op = "join";
            else if ( map[ src.implies( a, b ) ] != dst.implies( x, y ) )
                op = "implies";
            if ( op != nullptr )
                return { false, std::string{ op } + " not preserved at (" + src.label( a ) + "," + src.label( b ) + ")" };
        }
    }
    return {};
}

std::vector< AlgebraHom > enumerate_homs( const MVAlgebra& algebra, ElementSet target )
{
    const auto& L = algebra.truth();
    const MVAlgebra lattice = lattice_algebra( L );
    std::vector< char > allowed( L.size(), 0 );
    for ( auto e : members( target & L.carrier() ) )
        allowed[ e ] = 1;
    const MVAlgebra source = algebra.has_box() ? algebra.without_box() : algebra;
    return HomSearch( source, lattice, std::move( allowed ), false ).run();
}

std::vector< AlgebraHom > enumerate_homs( const MVAlgebra& algebra )
{
    return enumerate_homs( algebra, algebra.truth().carrier() );
}

std::vector< AlgebraHom > enumerate_homs_between( const MVAlgebra& source, const MVAlgebra& target, bool preserve_box )
{
    if ( !( source.truth() == target.truth() ) )
        throw Error( ErrorKind::TruthLatticeMismatch, "algebras are over different truth lattices" );
    const bool box = preserve_box && source.has_box() && target.has_box();
    const MVAlgebra src = box || !source.has_box() ? source : source.without_box();
    const MVAlgebra dst = box || !target.has_box() ? target : target.without_box();
    return HomSearch( src, dst, std::vector< char >( dst.size(), 1 ), box ).run();
}

} // namespace hvml
