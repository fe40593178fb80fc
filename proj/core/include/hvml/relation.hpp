#pragma once

#include "hvml/types.hpp"

#include <utility>
#include <vector>

namespace hvml
{

// Binary relation on the points 0..n-1 (n <= 64), stored as successor sets.
class Relation
{
    std::vector< PointSet > _successors;

public:
    Relation() = default;
    explicit Relation( std::size_t n ) : _successors( n, 0 ) {}

    static Relation identity( std::size_t n );
    static Relation from_edges( std::size_t n, const std::vector< std::pair< std::size_t, std::size_t > >& edges );

    [[nodiscard]] std::size_t size() const { return _successors.size(); }
    // R[p]
    [[nodiscard]] PointSet successors( std::size_t p ) const { return _successors[ p ]; }
    [[nodiscard]] bool holds( std::size_t p, std::size_t q ) const { return contains( _successors[ p ], q ); }
    void add( std::size_t p, std::size_t q );

    [[nodiscard]] std::vector< std::pair< std::size_t, std::size_t > > edges() const;

    friend bool operator==( const Relation&, const Relation& ) = default;
};

// [R]C = { p : R[p] is a subset of C }
PointSet box_rel( const Relation& r, PointSet c );
// <R>C = { p : R[p] meets C }
PointSet diamond_rel( const Relation& r, PointSet c );

} // namespace hvml
