// Runs the battery for seed 0 and prints one line per criterion.
#include "hvml_cli/battery.hpp"
#include "hvml_cli/cli.hpp"

#include <cstdio>
#include <map>
#include <sstream>

using namespace hvml::cli;

int main()
{
    // Wall-clock bounds in seconds; criteria without one are untimed.
    const std::map< int, double > bounds{ { 1, 1.0 }, { 2, 60.0 }, { 3, 120.0 }, { 5, 300.0 } };

    const auto first = run_battery( { 0 } );
    bool all = true;
    for ( const auto& c : first )
    {
        bool ok = c.report.passed();
        std::string note;
        if ( !ok )
            for ( const auto& check : c.report.checks() )
                if ( !check.passed )
                {
                    note = check.name + " " + check.witness;
                    break;
                }
        if ( const auto b = bounds.find( c.number ); b != bounds.end() && c.seconds > b->second )
        {
            ok = false;
            note = "took " + std::to_string( c.seconds ) + " s";
        }
        all = all && ok;
        std::printf( "%s criterion %d: %s (%zu checks, %.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                     c.title.c_str(), c.report.checks().size(), c.seconds, note.empty() ? "" : " ",
                     note.c_str() );
    }

    const std::vector< std::string > args{ "battery", "--seed", "0", "--machine" };
    std::ostringstream out1, out2, err;
    const int code1 = run( args, out1, err );
    const int code2 = run( args, out2, err );
    const bool same = code1 == code2 && !out1.str().empty() && out1.str() == out2.str();
    all = all && same;
    std::printf( "%s criterion 10: battery --seed 0 twice gives identical bytes\n", same ? "PASS" : "FAIL" );
    return all ? 0 : 1;
}
