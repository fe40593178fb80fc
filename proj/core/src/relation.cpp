#include "hvml/relation.hpp"

namespace hvml
{

Relation Relation::identity( std::size_t n )
{
    Relation r( n );
    for ( std::size_t p = 0; p < n; ++p )
        r.add( p, p );
    return r;
}

Relation Relation::from_edges( std::size_t n, const std::vector< std::pair< std::size_t, std::size_t > >& edges )
{
    Relation r( n );
    for ( auto [ p, q ] : edges )
        r.add( p, q );
    return r;
}

void Relation::add( std::size_t p, std::size_t q )
{
    if ( p >= size() || q >= size() )
        throw Error( ErrorKind::ElementOutOfRange,
                     "edge " + std::to_string( p ) + " " + std::to_string( q ) + " leaves the point set" );
    _successors[ p ] |= bit( q );
}

std::vector< std::pair< std::size_t, std::size_t > > Relation::edges() const
{
    std::vector< std::pair< std::size_t, std::size_t > > out;
    for ( std::size_t p = 0; p < size(); ++p )
        for ( auto q : members( _successors[ p ] ) )
            out.emplace_back( p, q );
    return out;
}

PointSet box_rel( const Relation& r, PointSet c )
{
    PointSet out = 0;
    for ( std::size_t p = 0; p < r.size(); ++p )
        if ( is_subset( r.successors( p ), c ) )
            out |= bit( p );
    return out;
}

PointSet diamond_rel( const Relation& r, PointSet c )
{
    PointSet out = 0;
    for ( std::size_t p = 0; p < r.size(); ++p )
        if ( ( r.successors( p ) & c ) != 0 )
            out |= bit( p );
    return out;
}

} // namespace hvml
