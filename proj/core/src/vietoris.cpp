#include "hvml/vietoris.hpp"

#include <algorithm>

namespace hvml
{

std::vector< PointSet > pairwise_closed_sets( const BitopSpace& space )
{
    const Topology join = space.join();
    std::vector< PointSet > out;
    for ( auto open : join.open_sets() )
        out.push_back( complement( open, space.size() ) );
    std::sort( out.begin(), out.end() );
    if ( out.size() > max_set_universe )
        throw Error( ErrorKind::SizeOverflow, std::to_string( out.size() ) +
                                                  " pairwise closed sets exceed the 64-point limit" );
    return out;
}

std::size_t VietorisSpace::index_of( PointSet c ) const
{
    auto it = std::lower_bound( members.begin(), members.end(), c );
    if ( it == members.end() || *it != c )
        return members.size();
    return static_cast< std::size_t >( it - members.begin() );
}

PointSet VietorisSpace::box( PointSet u ) const
{
    PointSet out = 0;
    for ( std::size_t i = 0; i < members.size(); ++i )
        if ( is_subset( members[ i ], u ) )
            out |= bit( i );
    return out;
}

PointSet VietorisSpace::diamond( PointSet u ) const
{
    PointSet out = 0;
    for ( std::size_t i = 0; i < members.size(); ++i )
        if ( ( members[ i ] & u ) != 0 )
            out |= bit( i );
    return out;
}

VietorisSpace vietoris_space( const BitopSpace& space )
{
    VietorisSpace v;
    v.base = space;
    v.members = pairwise_closed_sets( space );
    if ( auto z = is_pairwise_zero_dimensional( space ); !z )
        v.warning = "base is not pairwise zero-dimensional (" + z.witness + "); beta is not a basis";
    std::vector< PointSet > sub1, sub2;
    for ( auto u : space.beta1() )
    {
        sub1.push_back( v.box( u ) );
        sub1.push_back( v.diamond( u ) );
    }
    for ( auto u : space.beta2() )
    {
        sub2.push_back( v.box( u ) );
        sub2.push_back( v.diamond( u ) );
    }
    const std::size_t n = v.members.size();
    v.space = BitopSpace( generate_topology( n, sub1 ), generate_topology( n, sub2 ) );
    return v;
}

VietorisObject vietoris_object( const PBSObject& object )
{
    VietorisObject out{ vietoris_space( object.space ), {} };
    out.object.family = object.family;
    out.object.space = out.vietoris.space;
    for ( auto a : object.alpha )
        out.object.alpha.push_back( out.vietoris.box( a ) );
    return out;
}

PointMap vietoris_arrow( const PointMap& f, const VietorisSpace& from, const VietorisSpace& to )
{
    if ( f.size() != from.base.size() )
        throw Error( ErrorKind::ArityMismatch, "map and base space differ in size" );
    PointMap out;
    for ( auto k : from.members )
    {
        const PointSet img = image( f, k );
        const std::size_t i = to.index_of( img );
        if ( i == to.members.size() )
            throw Error( ErrorKind::NotWellDefined, "image " + format_set( img ) + " is not pairwise closed" );
        out.push_back( i );
    }
    return out;
}

Report check_vietoris_arrow( const PointMap& f, const VietorisSpace& from, const VietorisSpace& to )
{
    Report report;
    const PointMap vf = vietoris_arrow( f, from, to );
    std::string witness;
    auto check = [ & ]( const std::vector< PointSet >& beta ) {
        for ( auto u : beta )
        {
            if ( preimage( vf, to.box( u ) ) != from.box( preimage( f, u ) ) )
                witness = "box " + format_set( u );
            else if ( preimage( vf, to.diamond( u ) ) != from.diamond( preimage( f, u ) ) )
                witness = "diamond " + format_set( u );
            if ( !witness.empty() )
                return;
        }
    };
    check( to.base.beta1() );
    if ( witness.empty() )
        check( to.base.beta2() );
    report.add( "preimage_identities", witness.empty(), witness );
    const auto c = is_pairwise_continuous( vf, from.space, to.space );
    report.add( "continuous", c.holds, c.witness );
    return report;
}

PredicateResult check_box_diamond_duality( const VietorisSpace& v )
{
    const std::size_t n = v.base.size();
    const std::size_t m = v.members.size();
    const PointSet end = bit( n );
    for ( PointSet u = 0; u < end; ++u )
    {
        const PointSet uc = complement( u, n );
        if ( complement( v.box( u ), m ) != v.diamond( uc ) )
            return { false, "box " + format_set( u ) };
        if ( complement( v.diamond( u ), m ) != v.box( uc ) )
            return { false, "diamond " + format_set( u ) };
    }
    return {};
}

Coalgebra relation_to_coalgebra( const PRBSObject& object )
{
    Coalgebra c{ object.base, {} };
    for ( std::size_t s = 0; s < object.relation.size(); ++s )
        c.structure.push_back( object.relation.successors( s ) );
    return c;
}

PRBSObject coalgebra_to_relation( const Coalgebra& coalgebra )
{
    const std::size_t n = coalgebra.carrier.space.size();
    if ( coalgebra.structure.size() != n )
        throw Error( ErrorKind::ArityMismatch, "structure map and carrier differ in size" );
    Relation r( n );
    for ( std::size_t c = 0; c < n; ++c )
        for ( std::size_t d = 0; d < n; ++d )
            if ( contains( coalgebra.structure[ c ], d ) )
                r.add( c, d );
    return { coalgebra.carrier, std::move( r ) };
}

Report check_coalgebra( const Coalgebra& coalgebra )
{
    const auto& space = coalgebra.carrier.space;
    const auto v = vietoris_object( coalgebra.carrier );
    Report report;

    PointMap xi;
    std::string closed;
    for ( std::size_t c = 0; c < coalgebra.structure.size(); ++c )
    {
        const std::size_t i = v.vietoris.index_of( coalgebra.structure[ c ] );
        if ( i == v.vietoris.members.size() && closed.empty() )
            closed = "point " + std::to_string( c ) + " " + format_set( coalgebra.structure[ c ] );
        xi.push_back( i );
    }
    report.add( "coalg_closed", closed.empty(), closed );
    if ( !closed.empty() )
    {
        report.add( "coalg_continuous", false, "not closed" );
        report.add( "coalg_subspace", false, "not closed" );
        return report;
    }

    const Relation r = coalgebra_to_relation( coalgebra ).relation;
    std::string cont;
    auto check = [ & ]( const std::vector< PointSet >& beta, bool first ) {
        for ( auto u : beta )
        {
            const PointSet pb = preimage( xi, v.vietoris.box( u ) );
            const PointSet pd = preimage( xi, v.vietoris.diamond( u ) );
            const bool in_pb = first ? space.in_beta1( pb ) : space.in_beta2( pb );
            const bool in_pd = first ? space.in_beta1( pd ) : space.in_beta2( pd );
            if ( pb != box_rel( r, u ) || !in_pb )
                cont = "box " + format_set( u );
            else if ( pd != diamond_rel( r, u ) || !in_pd )
                cont = "diamond " + format_set( u );
            if ( !cont.empty() )
                return;
        }
    };
    check( space.beta1(), true );
    if ( cont.empty() )
        check( space.beta2(), false );
    if ( cont.empty() )
        if ( auto c = is_pairwise_continuous( xi, space, v.object.space ); !c )
            cont = c.witness;
    report.add( "coalg_continuous", cont.empty(), cont );

    const auto s = is_subspace_preserving( xi, coalgebra.carrier, v.object );
    report.add( "coalg_subspace", s.holds, s.witness );
    return report;
}

PredicateResult check_coalgebra_morphism( const PointMap& f, const Coalgebra& from, const Coalgebra& to )
{
    if ( f.size() != from.structure.size() )
        throw Error( ErrorKind::ArityMismatch, "map and coalgebra differ in size" );
    for ( std::size_t c = 0; c < f.size(); ++c )
    {
        if ( f[ c ] >= to.structure.size() )
            throw Error( ErrorKind::ElementOutOfRange, "map leaves the target carrier" );
        if ( to.structure[ f[ c ] ] != image( f, from.structure[ c ] ) )
            return { false, "point " + std::to_string( c ) };
    }
    return {};
}

Report verify_category_iso( const std::vector< PRBSObject >& objects, const std::vector< Coalgebra >& coalgebras,
                            const std::vector< PRBSArrow >& arrows )
{
    Report report;
    std::string objects_witness;
    for ( std::size_t i = 0; i < objects.size(); ++i )
        if ( !( coalgebra_to_relation( relation_to_coalgebra( objects[ i ] ) ) == objects[ i ] ) )
        {
            objects_witness = "object " + std::to_string( i );
            break;
        }
    report.add( "c_after_b_identity", objects_witness.empty(), objects_witness );

    std::string coalg_witness;
    for ( std::size_t i = 0; i < coalgebras.size(); ++i )
        if ( !( relation_to_coalgebra( coalgebra_to_relation( coalgebras[ i ] ) ) == coalgebras[ i ] ) )
        {
            coalg_witness = "coalgebra " + std::to_string( i );
            break;
        }
    report.add( "b_after_c_identity", coalg_witness.empty(), coalg_witness );

    std::string arrow_witness;
    for ( std::size_t i = 0; i < arrows.size() && arrow_witness.empty(); ++i )
    {
        const auto& a = arrows[ i ];
        const auto& o1 = objects.at( a.from );
        const auto& o2 = objects.at( a.to );
        if ( auto m = is_prbs_morphism( a.map, o1, o2 ); !m )
            arrow_witness = "arrow " + std::to_string( i ) + " is not a morphism: " + m.witness;
        else if ( auto sq = check_coalgebra_morphism( a.map, relation_to_coalgebra( o1 ), relation_to_coalgebra( o2 ) );
                  !sq )
            arrow_witness = "arrow " + std::to_string( i ) + ": " + sq.witness;
    }
    report.add( "arrows_commute", arrow_witness.empty(), arrow_witness );
    return report;
}

} // namespace hvml
