#include "hvml/types.hpp"

namespace hvml
{

std::vector< std::size_t > members( PointSet s )
{
    std::vector< std::size_t > out;
    out.reserve( cardinality( s ) );
    while ( s != 0 )
    {
        out.push_back( static_cast< std::size_t >( std::countr_zero( s ) ) );
        s &= s - 1;
    }
    return out;
}

std::string format_set( PointSet s )
{
    std::string out = "{";
    bool first = true;
    for ( auto i : members( s ) )
    {
        if ( !first )
            out += ',';
        out += std::to_string( i );
        first = false;
    }
    out += '}';
    return out;
}

const char* to_string( ErrorKind kind )
{
    switch ( kind )
    {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::CyclicCovers: return "CyclicCovers";
    case ErrorKind::ElementOutOfRange: return "ElementOutOfRange";
    case ErrorKind::InvalidArity: return "InvalidArity";
    case ErrorKind::TruthLatticeMismatch: return "TruthLatticeMismatch";
    case ErrorKind::MissingBox: return "MissingBox";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::AlphaDomainMismatch: return "AlphaDomainMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownTruthConstant: return "UnknownTruthConstant";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    }
    return "Unknown";
}

} // namespace hvml
