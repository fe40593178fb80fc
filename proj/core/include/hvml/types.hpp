#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvml
{

// Dense ordinal of an element of a finite lattice or algebra.
using Element = std::uint32_t;

// Subsets of a universe of at most 64 points / elements, one bit each.
using PointSet = std::uint64_t;
using ElementSet = std::uint64_t;

inline constexpr std::size_t max_set_universe = 64;

constexpr PointSet bit( std::size_t i ) { return PointSet{ 1 } << i; }

constexpr PointSet full_set( std::size_t n )
{
    return n >= 64 ? ~PointSet{ 0 } : ( PointSet{ 1 } << n ) - 1;
}

constexpr bool contains( PointSet s, std::size_t i ) { return ( s >> i ) & 1U; }

constexpr bool is_subset( PointSet a, PointSet b ) { return ( a & ~b ) == 0; }

constexpr PointSet complement( PointSet s, std::size_t n ) { return ~s & full_set( n ); }

constexpr std::size_t cardinality( PointSet s ) { return static_cast< std::size_t >( std::popcount( s ) ); }

// Members of s in increasing order.
std::vector< std::size_t > members( PointSet s );

// "{0,2,5}"
std::string format_set( PointSet s );

enum class ErrorKind
{
    NotALattice,
    NotDistributive,
    CyclicCovers,
    ElementOutOfRange,
    InvalidArity,
    TruthLatticeMismatch,
    MissingBox,
    SizeOverflow,
    ArityMismatch,
    AlphaDomainMismatch,
    SyntaxError,
    UnknownTruthConstant,
    UnboundVariable,
    CapExceeded,
    ParseError,
    NotWellDefined,
};

const char* to_string( ErrorKind kind );

class Error : public std::runtime_error
{
    ErrorKind _kind;

public:
    Error( ErrorKind kind, const std::string& what )
        : std::runtime_error{ std::string{ to_string( kind ) } + ": " + what }, _kind{ kind } {}

    [[nodiscard]] ErrorKind kind() const { return _kind; }
};

} // namespace hvml
