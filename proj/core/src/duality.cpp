#include "hvml/duality.hpp"

#include <algorithm>
#include <numeric>

namespace hvml
{

namespace
{

std::string map_text( const std::vector< Element >& m )
{
    std::string out = "[";
    for ( std::size_t i = 0; i < m.size(); ++i )
    {
        if ( i > 0 )
            out += ' ';
        out += std::to_string( m[ i ] );
    }
    return out + "]";
}

// Index of `h` in a sorted list, or the list size.
template < typename T >
std::size_t sorted_index( const std::vector< T >& list, const T& h )
{
    auto it = std::lower_bound( list.begin(), list.end(), h );
    if ( it == list.end() || !( *it == h ) )
        return list.size();
    return static_cast< std::size_t >( it - list.begin() );
}

PointMap inverse_map( const PointMap& f )
{
    PointMap inv( f.size(), 0 );
    for ( std::size_t p = 0; p < f.size(); ++p )
        inv[ f[ p ] ] = p;
    return inv;
}

bool is_bijection( const PointMap& f, std::size_t target_size )
{
    if ( f.size() != target_size )
        return false;
    std::vector< char > seen( target_size, 0 );
    for ( auto y : f )
    {
        if ( y >= target_size || seen[ y ] )
            return false;
        seen[ y ] = 1;
    }
    return true;
}

struct Bidual
{
    DualSpace space;
    DualAlgebra algebra;
};

DualAlgebra dual_algebra_impl( const PBSObject& object, const Relation* relation, std::size_t max_candidates )
{
    const auto& L = object.family.parent();
    const std::size_t m = L.size();
    const std::size_t k = object.space.size();
    if ( object.alpha.size() != object.family.size() )
        throw Error( ErrorKind::AlphaDomainMismatch, "alpha does not cover every subalgebra" );
    if ( relation != nullptr && relation->size() != k )
        throw Error( ErrorKind::ArityMismatch, "relation and space differ in size" );

    std::size_t candidates = 1;
    for ( std::size_t p = 0; p < k; ++p )
    {
        if ( candidates > max_candidates / m )
            throw Error( ErrorKind::CapExceeded, "more than " + std::to_string( max_candidates ) +
                                                     " candidate maps (|L|^|P| with |L|=" + std::to_string( m ) +
                                                     ", |P|=" + std::to_string( k ) + ")" );
        candidates *= m;
    }

    // Subspace preservation pins each point's value to the subalgebras
    // whose alpha contains it.
    std::vector< ElementSet > allowed( k, L.carrier() );
    for ( std::size_t j = 0; j < object.family.size(); ++j )
        for ( auto p : members( object.alpha[ j ] ) )
            allowed[ p ] &= object.family[ j ];

    std::vector< std::vector< Element > > elements;
    std::vector< std::size_t > codes;
    std::vector< Element > f( k, 0 );
    for ( std::size_t code = 0; code < candidates; ++code )
    {
        std::size_t rest = code;
        for ( std::size_t p = k; p-- > 0; )
        {
            f[ p ] = static_cast< Element >( rest % m );
            rest /= m;
        }
        bool ok = true;
        for ( std::size_t p = 0; p < k && ok; ++p )
        {
            if ( !contains( allowed[ p ], f[ p ] ) )
                ok = false;
            // preimages of points of the discrete L must be open in both
            // topologies: f is constant on each minimal open set
            for ( auto q : members( object.space.tau1.minimal_open( p ) | object.space.tau2.minimal_open( p ) ) )
                if ( f[ q ] != f[ p ] )
                {
                    ok = false;
                    break;
                }
        }
        if ( ok )
        {
            elements.push_back( f );
            codes.push_back( code );
        }
    }

    const std::size_t n = elements.size();
    auto encode = [ & ]( const std::vector< Element >& g ) {
        std::size_t code = 0;
        for ( auto v : g )
            code = code * m + v;
        const std::size_t i = sorted_index( codes, code );
        if ( i == n )
            throw Error( ErrorKind::NotWellDefined, "pointwise result " + map_text( g ) + " is not in the carrier" );
        return static_cast< Element >( i );
    };

    AlgebraTables t;
    t.size = n;
    t.meet.resize( n * n );
    t.join.resize( n * n );
    t.implies.resize( n * n );
    t.t.resize( m * n );
    std::vector< Element > g( k );
    for ( std::size_t a = 0; a < n; ++a )
        for ( std::size_t b = 0; b < n; ++b )
        {
            const auto& x = elements[ a ];
            const auto& y = elements[ b ];
            for ( std::size_t p = 0; p < k; ++p )
                g[ p ] = L.meet( x[ p ], y[ p ] );
            t.meet[ a * n + b ] = encode( g );
            for ( std::size_t p = 0; p < k; ++p )
                g[ p ] = L.join( x[ p ], y[ p ] );
            t.join[ a * n + b ] = encode( g );
            for ( std::size_t p = 0; p < k; ++p )
                g[ p ] = L.implies( x[ p ], y[ p ] );
            t.implies[ a * n + b ] = encode( g );
        }
    for ( Element level = 0; level < m; ++level )
        for ( std::size_t a = 0; a < n; ++a )
        {
            for ( std::size_t p = 0; p < k; ++p )
                g[ p ] = t_op( L, level, elements[ a ][ p ] );
            t.t[ level * n + a ] = encode( g );
        }
    std::fill( g.begin(), g.end(), L.bottom() );
    t.bottom = encode( g );
    std::fill( g.begin(), g.end(), L.top() );
    t.top = encode( g );
    if ( relation != nullptr )
    {
        std::vector< Element > box( n );
        for ( std::size_t a = 0; a < n; ++a )
        {
            for ( std::size_t p = 0; p < k; ++p )
            {
                Element v = L.top();
                for ( auto q : members( relation->successors( p ) ) )
                    v = L.meet( v, elements[ a ][ q ] );
                g[ p ] = v;
            }
            box[ a ] = encode( g );
        }
        t.box = std::move( box );
    }

    std::vector< std::string > labels;
    labels.reserve( n );
    for ( const auto& e : elements )
    {
        std::string s = "(";
        for ( std::size_t p = 0; p < k; ++p )
        {
            if ( p > 0 )
                s += ',';
            s += L.label( e[ p ] );
        }
        labels.push_back( s + ")" );
    }
    return { MVAlgebra( L, std::move( t ), std::move( labels ) ), std::move( elements ) };
}

Bidual bidual_of_algebra( const MVAlgebra& algebra, std::size_t max_candidates )
{
    DualSpace space = dual_space( algebra );
    DualAlgebra bidual = dual_algebra_impl( space.object, space.relation ? &*space.relation : nullptr, max_candidates );
    return { std::move( space ), std::move( bidual ) };
}

UnitResult unit_from( const MVAlgebra& algebra, const DualSpace& dual, const DualAlgebra& bidual )
{
    const auto n = static_cast< Element >( algebra.size() );
    UnitResult out;
    out.gamma.map.assign( n, no_element );

    std::string undefined;
    std::vector< Element > v( dual.points.size() );
    for ( Element a = 0; a < n; ++a )
    {
        for ( std::size_t i = 0; i < dual.points.size(); ++i )
            v[ i ] = dual.points[ i ]( a );
        if ( auto idx = bidual.index_of( v ) )
            out.gamma.map[ a ] = *idx;
        else if ( undefined.empty() )
            undefined = algebra.label( a );
    }
    out.report.add( "gamma_defined", undefined.empty(), undefined );

    std::string bijective;
    if ( undefined.empty() )
    {
        std::vector< char > hit( bidual.algebra.size(), 0 );
        for ( Element a = 0; a < n && bijective.empty(); ++a )
        {
            if ( hit[ out.gamma( a ) ] )
                bijective = "not injective at " + algebra.label( a );
            hit[ out.gamma( a ) ] = 1;
        }
        if ( bijective.empty() && bidual.algebra.size() != n )
            bijective = "not surjective: " + std::to_string( n ) + " elements onto " +
                        std::to_string( bidual.algebra.size() );
    }
    else
        bijective = "undefined";
    out.report.add( "gamma_bijective", bijective.empty(), bijective );

    std::string ops = "undefined";
    if ( undefined.empty() )
    {
        const MVAlgebra src = algebra.has_box() ? algebra.without_box() : algebra;
        const MVAlgebra dst = bidual.algebra.has_box() ? bidual.algebra.without_box() : bidual.algebra;
        ops = is_homomorphism( out.gamma.map, src, dst ).violation;
    }
    out.report.add( "gamma_ops", ops.empty(), ops );

    if ( algebra.has_box() )
    {
        std::string box = "undefined";
        if ( undefined.empty() )
        {
            box.clear();
            if ( !bidual.algebra.has_box() )
                box = "dual algebra has no box";
            for ( Element a = 0; a < n && box.empty(); ++a )
                if ( out.gamma( algebra.box( a ) ) != bidual.algebra.box( out.gamma( a ) ) )
                    box = algebra.label( a );
        }
        out.report.add( "gamma_box", box.empty(), box );
    }
    out.report.add( "gamma_iso", out.report.passed() );
    return out;
}

} // namespace

std::size_t DualSpace::index_of( const AlgebraHom& h ) const
{
    return sorted_index( points, h );
}

PRBSObject DualSpace::prbs() const
{
    if ( !relation )
        throw Error( ErrorKind::MissingBox, "dual space of an algebra without box has no relation" );
    return { object, *relation };
}

Relation box_relation( const MVAlgebra& algebra, const std::vector< AlgebraHom >& homs )
{
    const auto& L = algebra.truth();
    Relation r( homs.size() );
    for ( std::size_t i = 0; i < homs.size(); ++i )
        for ( std::size_t j = 0; j < homs.size(); ++j )
        {
            bool related = true;
            for ( Element level = 0; level < L.size() && related; ++level )
                for ( Element a = 0; a < algebra.size(); ++a )
                    if ( L.leq( level, homs[ i ]( algebra.box( a ) ) ) && !L.leq( level, homs[ j ]( a ) ) )
                    {
                        related = false;
                        break;
                    }
            if ( related )
                r.add( i, j );
        }
    return r;
}

DualSpace dual_space( const MVAlgebra& algebra )
{
    const auto& L = algebra.truth();
    DualSpace out;
    out.points = enumerate_homs( algebra );
    const std::size_t k = out.points.size();
    if ( k > max_set_universe )
        throw Error( ErrorKind::SizeOverflow, std::to_string( k ) + " homomorphisms exceed the 64-point limit" );

    out.basis.assign( algebra.size(), 0 );
    std::vector< PointSet > complements;
    for ( Element a = 0; a < algebra.size(); ++a )
    {
        for ( std::size_t i = 0; i < k; ++i )
            if ( out.points[ i ]( a ) == L.top() )
                out.basis[ a ] |= bit( i );
        complements.push_back( complement( out.basis[ a ], k ) );
    }

    auto family = enumerate_subalgebras( L );
    std::vector< PointSet > alpha( family.size(), 0 );
    for ( std::size_t j = 0; j < family.size(); ++j )
        for ( const auto& h : enumerate_homs( algebra, family[ j ] ) )
        {
            const std::size_t i = out.index_of( h );
            if ( i == k )
                throw Error( ErrorKind::NotWellDefined, "hom into a subalgebra missing from the full hom list" );
            alpha[ j ] |= bit( i );
        }

    out.object = { std::move( family ),
                   BitopSpace( generate_topology( k, out.basis ), generate_topology( k, complements ) ),
                   std::move( alpha ) };
    if ( algebra.has_box() )
        out.relation = box_relation( algebra, out.points );
    return out;
}

std::optional< Element > DualAlgebra::index_of( const std::vector< Element >& map ) const
{
    const std::size_t i = sorted_index( elements, map );
    if ( i == elements.size() )
        return std::nullopt;
    return static_cast< Element >( i );
}

DualAlgebra dual_algebra( const PBSObject& object, std::size_t max_candidates )
{
    return dual_algebra_impl( object, nullptr, max_candidates );
}

DualAlgebra dual_algebra( const PRBSObject& object, std::size_t max_candidates )
{
    return dual_algebra_impl( object.base, &object.relation, max_candidates );
}

PointMap dual_morphism_space( const AlgebraHom& psi, const DualSpace& source_dual, const DualSpace& target_dual )
{
    PointMap out;
    out.reserve( target_dual.points.size() );
    AlgebraHom composite;
    composite.map.resize( psi.map.size() );
    for ( const auto& phi : target_dual.points )
    {
        for ( std::size_t a = 0; a < psi.map.size(); ++a )
            composite.map[ a ] = phi( psi( static_cast< Element >( a ) ) );
        const std::size_t i = source_dual.index_of( composite );
        if ( i == source_dual.points.size() )
            throw Error( ErrorKind::NotWellDefined, "composite " + map_text( composite.map ) + " is not a point" );
        out.push_back( i );
    }
    return out;
}

AlgebraHom dual_morphism_algebra( const PointMap& f, const DualAlgebra& source_dual, const DualAlgebra& target_dual )
{
    AlgebraHom out;
    std::vector< Element > composite( f.size() );
    for ( const auto& eta : target_dual.elements )
    {
        for ( std::size_t p = 0; p < f.size(); ++p )
            composite[ p ] = eta[ f[ p ] ];
        auto i = source_dual.index_of( composite );
        if ( !i )
            throw Error( ErrorKind::NotWellDefined, "composite " + map_text( composite ) + " is not an element" );
        out.map.push_back( *i );
    }
    return out;
}

UnitResult unit_gamma( const MVAlgebra& algebra, const DualSpace& dual, const DualAlgebra& bidual )
{
    return unit_from( algebra, dual, bidual );
}

UnitResult unit_gamma( const MVAlgebra& algebra, std::size_t max_candidates )
{
    const auto b = bidual_of_algebra( algebra, max_candidates );
    return unit_from( algebra, b.space, b.algebra );
}

CounitResult counit_zeta( const PBSObject& object, const std::optional< Relation >& relation,
                          std::size_t max_candidates )
{
    const DualAlgebra f = dual_algebra_impl( object, relation ? &*relation : nullptr, max_candidates );
    const DualSpace g = dual_space( f.algebra );
    const std::size_t k = object.space.size();
    CounitResult out;
    out.zeta.assign( k, g.points.size() );

    std::string undefined;
    AlgebraHom h;
    h.map.resize( f.elements.size() );
    for ( std::size_t p = 0; p < k; ++p )
    {
        for ( std::size_t e = 0; e < f.elements.size(); ++e )
            h.map[ e ] = f.elements[ e ][ p ];
        out.zeta[ p ] = g.index_of( h );
        if ( out.zeta[ p ] == g.points.size() && undefined.empty() )
            undefined = "point " + std::to_string( p );
    }
    out.report.add( "zeta_defined", undefined.empty(), undefined );

    const bool bijective = undefined.empty() && is_bijection( out.zeta, g.points.size() );
    out.report.add( "zeta_bijective", bijective,
                    bijective ? "" : std::to_string( k ) + " points onto " + std::to_string( g.points.size() ) );

    if ( undefined.empty() )
    {
        const auto c = is_pairwise_continuous( out.zeta, object.space, g.object.space );
        out.report.add( "zeta_continuous", c.holds, c.witness );
    }
    else
        out.report.add( "zeta_continuous", false, "undefined" );

    if ( bijective )
    {
        const auto c = is_pairwise_continuous( inverse_map( out.zeta ), g.object.space, object.space );
        out.report.add( "zeta_inverse_continuous", c.holds, c.witness );
        std::string alpha;
        for ( std::size_t j = 0; j < object.alpha.size(); ++j )
            if ( image( out.zeta, object.alpha[ j ] ) != g.object.alpha[ j ] )
            {
                alpha = "subalgebra " + std::to_string( j );
                break;
            }
        out.report.add( "zeta_alpha", alpha.empty(), alpha );
        if ( relation )
        {
            std::string rel;
            for ( std::size_t p = 0; p < k && rel.empty(); ++p )
                for ( std::size_t q = 0; q < k; ++q )
                    if ( relation->holds( p, q ) != g.relation->holds( out.zeta[ p ], out.zeta[ q ] ) )
                    {
                        rel = "(" + std::to_string( p ) + "," + std::to_string( q ) + ")";
                        break;
                    }
            out.report.add( "zeta_relation", rel.empty(), rel );
        }
    }
    else
    {
        out.report.add( "zeta_inverse_continuous", false, "not bijective" );
        out.report.add( "zeta_alpha", false, "not bijective" );
        if ( relation )
            out.report.add( "zeta_relation", false, "not bijective" );
    }
    out.report.add( "zeta_iso", out.report.passed() );
    return out;
}

CounitResult counit_zeta( const PRBSObject& object, std::size_t max_candidates )
{
    return counit_zeta( object.base, object.relation, max_candidates );
}

PredicateResult check_unit_naturality( const AlgebraHom& psi, const MVAlgebra& source, const MVAlgebra& target,
                                       std::size_t max_candidates )
{
    const bool box = source.has_box() && target.has_box();
    const MVAlgebra a = box || !source.has_box() ? source : source.without_box();
    const MVAlgebra b = box || !target.has_box() ? target : target.without_box();
    if ( auto h = is_homomorphism( psi.map, a, b ); !h )
        return { false, "not a homomorphism: " + h.violation };

    const auto ga = bidual_of_algebra( a, max_candidates );
    const auto gb = bidual_of_algebra( b, max_candidates );
    const PointMap gpsi = dual_morphism_space( psi, ga.space, gb.space );
    if ( box )
    {
        if ( auto m = is_prbs_morphism( gpsi, gb.space.prbs(), ga.space.prbs() ); !m )
            return { false, "G(psi) " + m.witness };
    }
    else if ( auto m = is_pbs_morphism( gpsi, gb.space.object, ga.space.object ); !m )
        return { false, "G(psi) " + m.witness };

    const AlgebraHom fgpsi = dual_morphism_algebra( gpsi, gb.algebra, ga.algebra );
    if ( auto h = is_homomorphism( fgpsi.map, ga.algebra.algebra, gb.algebra.algebra ); !h )
        return { false, "FG(psi) " + h.violation };

    const auto gamma_a = unit_from( a, ga.space, ga.algebra ).gamma;
    const auto gamma_b = unit_from( b, gb.space, gb.algebra ).gamma;
    for ( Element x = 0; x < a.size(); ++x )
    {
        if ( gamma_a( x ) == no_element || gamma_b( psi( x ) ) == no_element )
            return { false, "gamma undefined at " + a.label( x ) };
        if ( gamma_b( psi( x ) ) != fgpsi( gamma_a( x ) ) )
            return { false, "square fails at " + a.label( x ) };
    }
    return {};
}

PredicateResult check_counit_naturality( const PointMap& f, const PBSObject& from,
                                         const std::optional< Relation >& from_relation, const PBSObject& to,
                                         const std::optional< Relation >& to_relation, std::size_t max_candidates )
{
    const bool rel = from_relation.has_value() && to_relation.has_value();
    if ( rel )
    {
        if ( auto m = is_prbs_morphism( f, { from, *from_relation }, { to, *to_relation } ); !m )
            return { false, "not a morphism: " + m.witness };
    }
    else if ( auto m = is_pbs_morphism( f, from, to ); !m )
        return { false, "not a morphism: " + m.witness };

    const std::optional< Relation > r1 = rel ? from_relation : std::nullopt;
    const std::optional< Relation > r2 = rel ? to_relation : std::nullopt;
    const DualAlgebra f1 = dual_algebra_impl( from, r1 ? &*r1 : nullptr, max_candidates );
    const DualAlgebra f2 = dual_algebra_impl( to, r2 ? &*r2 : nullptr, max_candidates );
    const AlgebraHom ff = dual_morphism_algebra( f, f1, f2 );
    if ( auto h = is_homomorphism( ff.map, f2.algebra, f1.algebra ); !h )
        return { false, "F(f) " + h.violation };

    const DualSpace g1 = dual_space( f1.algebra );
    const DualSpace g2 = dual_space( f2.algebra );
    const PointMap gff = dual_morphism_space( ff, g2, g1 );
    const auto zeta1 = counit_zeta( from, r1, max_candidates ).zeta;
    const auto zeta2 = counit_zeta( to, r2, max_candidates ).zeta;
    for ( std::size_t p = 0; p < f.size(); ++p )
    {
        if ( zeta1[ p ] >= g1.points.size() || zeta2[ f[ p ] ] >= g2.points.size() )
            return { false, "zeta undefined at " + std::to_string( p ) };
        if ( zeta2[ f[ p ] ] != gff[ zeta1[ p ] ] )
            return { false, "square fails at point " + std::to_string( p ) };
    }
    return {};
}

PredicateResult check_counit_naturality( const PointMap& f, const PRBSObject& from, const PRBSObject& to,
                                         std::size_t max_candidates )
{
    return check_counit_naturality( f, from.base, from.relation, to.base, to.relation, max_candidates );
}

std::vector< AlgebraArrow > auto_algebra_morphisms( const MVAlgebra& algebra, bool box, std::size_t limit )
{
    std::vector< AlgebraArrow > out;
    AlgebraHom id;
    id.map.resize( algebra.size() );
    std::iota( id.map.begin(), id.map.end(), Element{ 0 } );
    out.push_back( { algebra, id } );
    if ( box )
    {
        for ( auto& h : enumerate_homs_between( algebra, algebra, true ) )
        {
            if ( out.size() >= limit )
                break;
            if ( !( h == id ) )
                out.push_back( { algebra, std::move( h ) } );
        }
    }
    else
    {
        const MVAlgebra lattice = lattice_algebra( algebra.truth() );
        for ( auto& h : enumerate_homs( algebra ) )
        {
            if ( out.size() >= limit )
                break;
            out.push_back( { lattice, std::move( h ) } );
        }
    }
    return out;
}

std::vector< PointMap > auto_space_morphisms( const PRBSObject& object, std::size_t limit )
{
    const std::size_t k = object.base.space.size();
    PointMap id( k );
    std::iota( id.begin(), id.end(), std::size_t{ 0 } );
    std::vector< PointMap > out{ id };
    std::size_t total = 1;
    for ( std::size_t i = 0; i < k; ++i )
    {
        total *= k;
        if ( total > 4096 )
            return out;
    }
    PointMap f( k, 0 );
    for ( std::size_t code = 0; code < total && out.size() < limit; ++code )
    {
        std::size_t rest = code;
        for ( std::size_t p = k; p-- > 0; )
        {
            f[ p ] = rest % k;
            rest /= k;
        }
        if ( f != id && is_prbs_morphism( f, object, object ) )
            out.push_back( f );
    }
    return out;
}

namespace
{

void add_naturality( Report& report, const std::string& name, const std::vector< PredicateResult >& results )
{
    for ( std::size_t i = 0; i < results.size(); ++i )
        if ( !results[ i ] )
        {
            report.add( name, false, "arrow " + std::to_string( i ) + ": " + results[ i ].witness );
            return;
        }
    report.add( name, true );
}

} // namespace

Report verify_lvl_duality( const MVAlgebra& algebra, std::size_t max_candidates )
{
    const MVAlgebra a = algebra.has_box() ? algebra.without_box() : algebra;
    const auto b = bidual_of_algebra( a, max_candidates );
    Report report;
    report.merge( check_pbs_object( b.space.object ), "dual_space" );
    report.merge( check_lvl_axioms( b.algebra.algebra ), "dual_algebra" );
    report.merge( unit_from( a, b.space, b.algebra ).report );
    report.merge( counit_zeta( b.space.object, std::nullopt, max_candidates ).report );

    std::vector< PredicateResult > unit, counit;
    for ( const auto& arrow : auto_algebra_morphisms( a, false ) )
    {
        unit.push_back( check_unit_naturality( arrow.map, a, arrow.target, max_candidates ) );
        const auto target = bidual_of_algebra( arrow.target, max_candidates );
        const PointMap g = dual_morphism_space( arrow.map, b.space, target.space );
        counit.push_back( check_counit_naturality( g, target.space.object, std::nullopt, b.space.object, std::nullopt,
                                                   max_candidates ) );
    }
    add_naturality( report, "naturality_unit", unit );
    add_naturality( report, "naturality_counit", counit );
    return report;
}

Report verify_ml_duality( const MVAlgebra& algebra, std::size_t max_candidates )
{
    if ( !algebra.has_box() )
        throw Error( ErrorKind::MissingBox, "modal duality needs an algebra with box" );
    const auto b = bidual_of_algebra( algebra, max_candidates );
    const PRBSObject object = b.space.prbs();
    Report report;
    report.merge( check_prbs_object( object ), "dual_space" );
    report.merge( check_lvl_axioms( b.algebra.algebra ), "dual_algebra" );
    report.merge( check_lml_axioms( b.algebra.algebra ), "dual_algebra" );
    report.merge( unit_from( algebra, b.space, b.algebra ).report );
    report.merge( counit_zeta( object, max_candidates ).report );

    std::vector< PredicateResult > unit, counit;
    for ( const auto& arrow : auto_algebra_morphisms( algebra, true ) )
    {
        unit.push_back( check_unit_naturality( arrow.map, algebra, arrow.target, max_candidates ) );
        const PointMap g = dual_morphism_space( arrow.map, b.space, b.space );
        counit.push_back( check_counit_naturality( g, object, object, max_candidates ) );
    }
    for ( const auto& f : auto_space_morphisms( object ) )
        counit.push_back( check_counit_naturality( f, object, object, max_candidates ) );
    add_naturality( report, "naturality_unit", unit );
    add_naturality( report, "naturality_counit", counit );
    return report;
}

Report verify_space_duality( const PRBSObject& object, std::size_t max_candidates )
{
    Report report;
    report.merge( check_prbs_object( object ), "object" );
    const DualAlgebra f = dual_algebra( object, max_candidates );
    report.merge( check_lvl_axioms( f.algebra ), "dual_algebra" );
    report.merge( check_lml_axioms( f.algebra ), "dual_algebra" );
    report.merge( counit_zeta( object, max_candidates ).report );
    report.merge( unit_gamma( f.algebra, max_candidates ).report );

    std::vector< PredicateResult > unit, counit;
    for ( const auto& g : auto_space_morphisms( object ) )
    {
        counit.push_back( check_counit_naturality( g, object, object, max_candidates ) );
        const AlgebraHom fg = dual_morphism_algebra( g, f, f );
        unit.push_back( check_unit_naturality( fg, f.algebra, f.algebra, max_candidates ) );
    }
    add_naturality( report, "naturality_unit", unit );
    add_naturality( report, "naturality_counit", counit );
    return report;
}

MVAlgebra transport( const MVAlgebra& algebra, const std::vector< Element >& perm, std::vector< std::string > labels )
{
    const std::size_t n = algebra.size();
    if ( perm.size() != n )
        throw Error( ErrorKind::ArityMismatch, "permutation length does not match the carrier" );
    std::vector< Element > inv( n, no_element );
    for ( std::size_t i = 0; i < n; ++i )
    {
        if ( perm[ i ] >= n || inv[ perm[ i ] ] != no_element )
            throw Error( ErrorKind::NotWellDefined, "not a permutation of the carrier" );
        inv[ perm[ i ] ] = static_cast< Element >( i );
    }
    AlgebraTables t;
    t.size = n;
    t.meet.resize( n * n );
    t.join.resize( n * n );
    t.implies.resize( n * n );
    t.t.resize( algebra.levels() * n );
    for ( std::size_t i = 0; i < n; ++i )
        for ( std::size_t j = 0; j < n; ++j )
        {
            t.meet[ i * n + j ] = inv[ algebra.meet( perm[ i ], perm[ j ] ) ];
            t.join[ i * n + j ] = inv[ algebra.join( perm[ i ], perm[ j ] ) ];
            t.implies[ i * n + j ] = inv[ algebra.implies( perm[ i ], perm[ j ] ) ];
        }
    for ( Element level = 0; level < algebra.levels(); ++level )
        for ( std::size_t i = 0; i < n; ++i )
            t.t[ level * n + i ] = inv[ algebra.t( level, perm[ i ] ) ];
    t.bottom = inv[ algebra.bottom() ];
    t.top = inv[ algebra.top() ];
    if ( algebra.has_box() )
    {
        std::vector< Element > box( n );
        for ( std::size_t i = 0; i < n; ++i )
            box[ i ] = inv[ algebra.box( perm[ i ] ) ];
        t.box = std::move( box );
    }
    if ( labels.empty() )
        for ( std::size_t i = 0; i < n; ++i )
            labels.push_back( algebra.label( perm[ i ] ) );
    return MVAlgebra( algebra.truth(), std::move( t ), std::move( labels ) );
}

} // namespace hvml
