#include "hvml/report.hpp"

#include <algorithm>

namespace hvml
{

void Report::add( std::string name, bool passed, std::string witness )
{
    _checks.push_back( { std::move( name ), passed, passed ? std::string{} : std::move( witness ) } );
}

void Report::merge( const Report& other, const std::string& prefix )
{
    for ( const auto& c : other._checks )
        _checks.push_back( { prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.witness } );
}

bool Report::passed() const
{
    return std::all_of( _checks.begin(), _checks.end(), []( const auto& c ) { return c.passed; } );
}

const CheckResult* Report::find( const std::string& name ) const
{
    auto it = std::find_if( _checks.begin(), _checks.end(), [ & ]( const auto& c ) { return c.name == name; } );
    return it == _checks.end() ? nullptr : &*it;
}

bool Report::passed( const std::string& name ) const
{
    const auto* c = find( name );
    return c != nullptr && c->passed;
}

std::string Report::machine_lines() const
{
    std::string out;
    for ( const auto& c : _checks )
    {
        out += "CHECK " + c.name + ( c.passed ? " PASS" : " FAIL" );
        if ( !c.passed && !c.witness.empty() )
            out += " " + c.witness;
        out += '\n';
    }
    return out;
}

} // namespace hvml
