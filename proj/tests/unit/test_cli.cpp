#include <doctest.h>

#include "hvml_cli/cli.hpp"
#include "hvml_cli/generate.hpp"
#include "hvml_cli/io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace hvml;
using namespace hvml::cli;

namespace
{

const std::string data = HVML_TEST_DATA;

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run hvml_run( std::vector< std::string > args )
{
    std::ostringstream out, err;
    const int code = run( args, out, err );
    return { code, out.str(), err.str() };
}

bool has_line( const std::string& text, const std::string& line )
{
    std::istringstream in( text );
    for ( std::string l; std::getline( in, l ); )
        if ( l == line )
            return true;
    return false;
}

ErrorKind error_of( auto&& f )
{
    try
    {
        f();
    }
    catch ( const Error& e )
    {
        return e.kind();
    }
    FAIL( "no error" );
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE( "exit codes" )
{
    auto r = hvml_run( { "roundtrip", data + "/chain2_powerset.alg", "--machine" } );
    CHECK( r.code == exit_ok );
    CHECK( has_line( r.out, "CHECK gamma_iso PASS" ) );

    r = hvml_run( { "check-lattice", data + "/m3.lattice", "--machine" } );
    CHECK( r.code == exit_check_failed );
    CHECK( has_line( r.out, "CHECK distributive FAIL (a,b,c)" ) );
    CHECK( hvml_run( { "check-lattice", "m3" } ).code == exit_check_failed );
    CHECK( hvml_run( { "check-lattice", data + "/diamond.lattice" } ).code == exit_ok );

    CHECK( hvml_run( { "check-lattice", data + "/empty.txt" } ).code == exit_parse_error );
    CHECK( hvml_run( { "dualize", data + "/empty.txt" } ).code == exit_parse_error );
    CHECK( hvml_run( { "modelcheck", "diamond", data + "/diamond.model", "p &" } ).code == exit_parse_error );
    CHECK( hvml_run( { "modelcheck", "diamond", data + "/diamond.model", "T{9} p" } ).code == exit_parse_error );

    CHECK( hvml_run( { "check-lattice", "chain:9" } ).code == exit_cap_exceeded );
    CHECK( hvml_run( { "check-lattice", "chain:3", "--max-lattice", "2" } ).code == exit_cap_exceeded );
    CHECK( hvml_run( { "roundtrip", data + "/frame3.alg", "--max-points", "2" } ).code == exit_cap_exceeded );

    CHECK( hvml_run( { "frobnicate", "x" } ).code == exit_unknown_verb );
    CHECK( hvml_run( {} ).code == exit_usage );
    CHECK( hvml_run( { "check-lattice" } ).code == exit_usage );
    CHECK( hvml_run( { "check-lattice", "m3", "--bogus" } ).code == exit_usage );
    CHECK( hvml_run( { "check-lattice", "m3", "--machine", "--json" } ).code == exit_usage );
    CHECK( hvml_run( { "modelcheck", "diamond", data + "/diamond.model", "p", "--world", "7" } ).code == exit_usage );
}

TEST_CASE( "verbs on the data files" )
{
    CHECK( hvml_run( { "check-algebra", data + "/frame3.alg" } ).code == exit_ok );
    CHECK( hvml_run( { "dualize", data + "/frame3.alg" } ).code == exit_ok );
    CHECK( hvml_run( { "dualize", data + "/space.bitop" } ).code == exit_ok );
    CHECK( hvml_run( { "roundtrip", data + "/frame3.alg" } ).code == exit_ok );
    CHECK( hvml_run( { "roundtrip", data + "/space.bitop" } ).code == exit_ok );
    CHECK( hvml_run( { "vietoris", data + "/space.bitop" } ).code == exit_ok );
    CHECK( hvml_run( { "coalg-roundtrip", data + "/space.bitop" } ).code == exit_ok );

    auto r = hvml_run( { "homs", data + "/frame3.alg", "--machine" } );
    CHECK( r.code == exit_ok );
    CHECK( has_line( r.out, "INFO count 3" ) );

    r = hvml_run( { "modelcheck", "diamond", data + "/diamond.model", "[] p", "--machine" } );
    CHECK( r.code == exit_ok );
    CHECK( has_line( r.out, "INFO world.0 1 a" ) );
    CHECK( has_line( r.out, "INFO world.1 3 1" ) );
}

TEST_CASE( "json output" )
{
    const auto r = hvml_run( { "check-lattice", "m3", "--json" } );
    const auto j = nlohmann::json::parse( r.out );
    CHECK( j.at( "verb" ) == "check-lattice" );
    CHECK( j.at( "exit_code" ) == 1 );
    CHECK( j.at( "passed" ) == false );
    CHECK_FALSE( j.at( "checks" ).empty() );
}

TEST_CASE( "caps from the environment" )
{
    ::setenv( "HVML_MAX_LATTICE", "3", 1 );
    CHECK( hvml_run( { "check-lattice", "chain:4" } ).code == exit_cap_exceeded );
    CHECK( hvml_run( { "check-lattice", "chain:4", "--max-lattice", "4" } ).code == exit_ok );
    ::unsetenv( "HVML_MAX_LATTICE" );
    CHECK( hvml_run( { "check-lattice", "chain:4" } ).code == exit_ok );
}

TEST_CASE( "file formats round trip" )
{
    for ( const auto& spec : lattice_catalogue() )
    {
        const auto l = resolve_lattice( spec );
        const auto text = serialize_lattice( l );
        CHECK( serialize_lattice( parse_lattice( text ) ) == text );
    }

    const auto a = parse_algebra( read_file( data + "/frame3.alg" ) );
    const auto text = serialize_algebra( a, "chain:3" );
    const auto back = parse_algebra( text );
    CHECK( back == a );
    CHECK( serialize_algebra( back, "chain:3" ) == text );

    const auto s = parse_space( read_file( data + "/space.bitop" ) );
    const auto st = serialize_space( s.object, s.relation, s.lattice_spec );
    const auto s2 = parse_space( st );
    CHECK( serialize_space( s2.object, s2.relation, s2.lattice_spec ) == st );

    const auto l = diamond();
    const auto m = parse_model( read_file( data + "/diamond.model" ), l );
    CHECK( m.valuation.at( "p" ) == std::vector< Element >{ 0, 1 } );
    CHECK( serialize_model( m, l ) == read_file( data + "/diamond.model" ) );
    CHECK( parse_model( serialize_model( m, l ), l ).valuation == m.valuation );
}

TEST_CASE( "parse errors carry line numbers" )
{
    auto message = []( auto&& f ) -> std::string {
        try
        {
            f();
        }
        catch ( const Error& e )
        {
            return e.what();
        }
        return {};
    };
    CHECK( message( [] { parse_lattice( "elements: 2\ncovers:\n0 < 5\n" ); } ).find( "line 3" ) !=
           std::string::npos );
    CHECK( error_of( [] { parse_lattice( "elements: x\n" ); } ) == ErrorKind::ParseError );
    CHECK( error_of( [] { parse_lattice( "" ); } ) == ErrorKind::ParseError );
    CHECK( error_of( [] { parse_algebra( "powerset L=chain:2\n" ); } ) == ErrorKind::ParseError );
    CHECK( error_of( [] { parse_space( "points: 2\ntau1:\n{0,7}\n" ); } ) != ErrorKind::CapExceeded );
    CHECK( error_of( [] { resolve_lattice( "boolean:7" ); } ) == ErrorKind::ParseError );
}

TEST_CASE( "generate" )
{
    CHECK( generate_instance( "frame", { 0, 3, 4 } ) == "worlds: 3\nR:\n1 1\n2 1\n" );
    for ( const auto kind : { "lattice", "powerset-algebra", "frame", "bitop-space", "prbs-object" } )
        for ( std::uint64_t seed = 0; seed < 10; ++seed )
            CHECK( generate_instance( kind, { seed } ) == generate_instance( kind, { seed } ) );

    for ( std::uint64_t seed = 0; seed < 30; ++seed )
    {
        const auto l = parse_lattice( generate_instance( "lattice", { seed } ) );
        CHECK( check_lattice_laws( l ).passed() );
    }
    CHECK( error_of( [] { (void)generate_instance( "nope", {} ); } ) == ErrorKind::ParseError );

    const auto a = hvml_run( { "generate", "prbs-object", "--seed", "5" } );
    const auto b = hvml_run( { "generate", "prbs-object", "--seed", "5" } );
    CHECK( a.code == exit_ok );
    CHECK( a.out == b.out );
}
