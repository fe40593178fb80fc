#include "hvml_cli/oracles.hpp"

namespace hvml::cli::oracle
{

std::vector< AlgebraHom > brute_force_homs( const MVAlgebra& algebra, ElementSet target )
{
    const FiniteLattice& l = algebra.truth();
    const std::size_t n = algebra.size();
    std::vector< Element > values;
    for ( Element v = 0; v < l.size(); ++v )
        if ( contains( target, v ) )
            values.push_back( v );

    std::vector< AlgebraHom > out;
    std::vector< Element > map( n, 0 );

    // Constraints that only involve elements 0..k.
    auto consistent = [ & ]( Element k ) {
        const Element fk = map[ k ];
        if ( k == algebra.bottom() && fk != l.bottom() )
            return false;
        if ( k == algebra.top() && fk != l.top() )
            return false;
        for ( Element level = 0; level < l.size(); ++level )
        {
            const Element t = algebra.t( level, k );
            if ( t <= k && map[ t ] != t_op( l, level, fk ) )
                return false;
        }
        for ( Element a = 0; a <= k; ++a )
            for ( Element b = 0; b <= k; ++b )
            {
                if ( a != k && b != k )
                    continue;
                const Element fa = map[ a ], fb = map[ b ];
                const Element m = algebra.meet( a, b ), j = algebra.join( a, b ), i = algebra.implies( a, b );
                if ( m <= k && map[ m ] != l.meet( fa, fb ) )
                    return false;
                if ( j <= k && map[ j ] != l.join( fa, fb ) )
                    return false;
                if ( i <= k && map[ i ] != l.implies( fa, fb ) )
                    return false;
            }
        // Constraints whose result is k but whose arguments came earlier.
        for ( Element a = 0; a < k; ++a )
        {
            for ( Element level = 0; level < l.size(); ++level )
                if ( algebra.t( level, a ) == k && fk != t_op( l, level, map[ a ] ) )
                    return false;
            for ( Element b = 0; b < k; ++b )
            {
                if ( algebra.meet( a, b ) == k && fk != l.meet( map[ a ], map[ b ] ) )
                    return false;
                if ( algebra.join( a, b ) == k && fk != l.join( map[ a ], map[ b ] ) )
                    return false;
                if ( algebra.implies( a, b ) == k && fk != l.implies( map[ a ], map[ b ] ) )
                    return false;
            }
        }
        return true;
    };

    auto rec = [ & ]( auto&& self, Element k ) -> void {
        if ( k == n )
        {
            out.push_back( { map } );
            return;
        }
        for ( Element v : values )
        {
            map[ k ] = v;
            if ( consistent( k ) )
                self( self, k + 1 );
        }
    };
    if ( n > 0 )
        rec( rec, 0 );
    return out;
}

std::vector< ElementSet > scan_subalgebras( const FiniteLattice& lattice )
{
    const std::size_t n = lattice.size();
    std::vector< ElementSet > out;
    const ElementSet ends = bit( lattice.bottom() ) | bit( lattice.top() );
    for ( ElementSet s = 0; s <= full_set( n ); ++s )
    {
        if ( ( s & ends ) != ends )
            continue;
        bool closed = true;
        for ( Element a = 0; a < n && closed; ++a )
        {
            if ( !contains( s, a ) )
                continue;
            for ( Element level = 0; level < n && closed; ++level )
                closed = contains( s, t_op( lattice, level, a ) );
            for ( Element b = 0; b < n && closed; ++b )
                if ( contains( s, b ) )
                    closed = contains( s, lattice.meet( a, b ) ) && contains( s, lattice.join( a, b ) ) &&
                             contains( s, lattice.implies( a, b ) );
        }
        if ( closed )
            out.push_back( s );
        if ( s == full_set( n ) )
            break;
    }
    return out;
}

Element max_implication( const FiniteLattice& lattice, Element a, Element b )
{
    Element best = lattice.bottom();
    bool found = false;
    for ( Element x = 0; x < lattice.size(); ++x )
    {
        if ( !lattice.leq( lattice.meet( a, x ), b ) )
            continue;
        if ( !found || lattice.leq( best, x ) )
        {
            best = x;
            found = true;
        }
    }
    return best;
}

} // namespace hvml::cli::oracle
