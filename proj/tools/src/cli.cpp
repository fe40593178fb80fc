#include "hvml_cli/cli.hpp"

#include "hvml_cli/battery.hpp"
#include "hvml_cli/generate.hpp"
#include "hvml_cli/io.hpp"
#include "hvml/duality.hpp"
#include "hvml/logic.hpp"
#include "hvml/vietoris.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hvml::cli
{

namespace
{

namespace fs = std::filesystem;

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Outcome
{
    Report report;
    std::vector< std::pair< std::string, std::string > > info;
    std::string payload;
    bool checks = true; // false for verbs that only report values
};

std::size_t env_cap( const char* name, std::size_t fallback )
{
    const char* v = std::getenv( name );
    if ( v == nullptr || *v == '\0' )
        return fallback;
    try
    {
        const auto n = std::stoull( v );
        return n > 0 ? static_cast< std::size_t >( n ) : fallback;
    }
    catch ( const std::exception& )
    {
        return fallback;
    }
}

void require_inputs( const RunConfig& c, std::size_t n, const char* shape )
{
    if ( c.inputs.size() != n )
        throw UsageError( "usage: hvml " + c.verb + " " + shape );
}

fs::path dir_of( const std::string& path ) { return fs::path( path ).parent_path(); }

void cap_lattice( const FiniteLattice& l, const RunConfig& c )
{
    if ( l.size() > c.max_lattice )
        throw Error( ErrorKind::CapExceeded, "lattice has " + std::to_string( l.size() ) + " elements, cap is " +
                                                 std::to_string( c.max_lattice ) + " (--max-lattice)" );
}

void cap_algebra( const MVAlgebra& a, const RunConfig& c )
{
    cap_lattice( a.truth(), c );
    // |L|^max_points, the size of the largest powerset algebra allowed.
    std::size_t bound = 1;
    for ( std::size_t i = 0; i < c.max_points && bound <= default_max_carrier; ++i )
        bound *= a.truth().size();
    if ( a.size() > bound )
        throw Error( ErrorKind::CapExceeded, "algebra has " + std::to_string( a.size() ) +
                                                 " elements, more than |L|^" + std::to_string( c.max_points ) +
                                                 " (--max-points)" );
}

// First word of the first non-comment line.
std::string first_word( const std::string& text )
{
    std::istringstream in( text );
    for ( std::string line; std::getline( in, line ); )
    {
        if ( auto hash = line.find( '#' ); hash != std::string::npos )
            line.resize( hash );
        std::istringstream words( line );
        std::string w;
        if ( words >> w )
            return w;
    }
    return {};
}

bool is_algebra_text( const std::string& text )
{
    const auto w = first_word( text );
    return w == "powerset" || w == "algebra";
}

// The lattice an algebra file names, as written.
std::string algebra_lattice_spec( const std::string& text )
{
    std::istringstream in( text );
    for ( std::string w; in >> w; )
    {
        if ( w.rfind( "L=", 0 ) == 0 )
            return w.substr( 2 );
        if ( w == "lattice:" && in >> w )
            return w;
    }
    return {};
}

struct LoadedAlgebra
{
    MVAlgebra algebra;
    std::string lattice_spec;
};

LoadedAlgebra load_algebra( const std::string& path, const std::string& text, const RunConfig& c )
{
    auto a = parse_algebra( text, dir_of( path ) );
    cap_algebra( a, c );
    return { std::move( a ), algebra_lattice_spec( text ) };
}

SpaceFile load_space( const std::string& path, const std::string& text, const RunConfig& c )
{
    auto s = parse_space( text, dir_of( path ) );
    cap_lattice( s.object.family.parent(), c );
    return s;
}

std::string hom_text( const AlgebraHom& h, const MVAlgebra& a )
{
    std::string s = "[";
    for ( std::size_t i = 0; i < h.map.size(); ++i )
        s += ( i ? " " : "" ) + a.truth().label( h.map[ i ] );
    return s + "]";
}

std::string count_text( const std::optional< std::uint64_t >& n )
{
    return n ? std::to_string( *n ) : std::string{ "overflow" };
}

Outcome check_lattice_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<lattice>" );
    const auto l = resolve_lattice( c.inputs[ 0 ] );
    cap_lattice( l, c );
    Outcome o;
    o.report = check_lattice_laws( l );
    o.info.emplace_back( "elements", std::to_string( l.size() ) );
    if ( l.is_heyting() )
        o.info.emplace_back( "subalgebras", std::to_string( enumerate_subalgebras( l ).size() ) );
    return o;
}

Outcome check_algebra_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<algebra>" );
    const auto [ a, spec ] = load_algebra( c.inputs[ 0 ], read_file( c.inputs[ 0 ] ), c );
    Outcome o;
    o.report = check_lvl_axioms( a );
    if ( a.has_box() )
        o.report.merge( check_lml_axioms( a ) );
    o.info.emplace_back( "elements", std::to_string( a.size() ) );
    o.info.emplace_back( "box", a.has_box() ? "yes" : "no" );
    return o;
}

Outcome homs_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<algebra> [--target i]" );
    const auto [ a, spec ] = load_algebra( c.inputs[ 0 ], read_file( c.inputs[ 0 ] ), c );
    const auto family = enumerate_subalgebras( a.truth() );
    const auto t = c.target.value_or( family.full_index() );
    if ( t >= family.size() )
        throw UsageError( "--target " + std::to_string( t ) + " but L has " + std::to_string( family.size() ) +
                          " subalgebras" );
    const auto homs = enumerate_homs( a, family[ t ] );
    Outcome o;
    o.checks = false;
    o.info.emplace_back( "target", format_set( family[ t ] ) );
    o.info.emplace_back( "count", std::to_string( homs.size() ) );
    for ( std::size_t i = 0; i < homs.size(); ++i )
        o.info.emplace_back( "hom." + std::to_string( i ), hom_text( homs[ i ], a ) );
    return o;
}

Outcome dualize_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<algebra|space>" );
    const auto text = read_file( c.inputs[ 0 ] );
    Outcome o;
    if ( is_algebra_text( text ) )
    {
        const auto [ a, spec ] = load_algebra( c.inputs[ 0 ], text, c );
        const auto d = dual_space( a );
        if ( d.relation )
            o.report = check_prbs_object( d.prbs() );
        else
            o.report = check_pbs_object( d.object );
        o.info.emplace_back( "points", std::to_string( d.points.size() ) );
        for ( std::size_t i = 0; i < d.points.size(); ++i )
            o.info.emplace_back( "point." + std::to_string( i ), hom_text( d.points[ i ], a ) );
        o.payload = serialize_space( d.object, d.relation, spec );
        return o;
    }
    const auto s = load_space( c.inputs[ 0 ], text, c );
    const auto f = s.relation ? dual_algebra( PRBSObject{ s.object, *s.relation }, c.max_candidates )
                              : dual_algebra( s.object, c.max_candidates );
    o.report = check_lvl_axioms( f.algebra );
    if ( s.relation )
        o.report.merge( check_lml_axioms( f.algebra ) );
    o.info.emplace_back( "elements", std::to_string( f.algebra.size() ) );
    o.payload = serialize_algebra( f.algebra, s.lattice_spec );
    return o;
}

Outcome roundtrip_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<algebra|space>" );
    const auto text = read_file( c.inputs[ 0 ] );
    Outcome o;
    if ( is_algebra_text( text ) )
    {
        const auto [ a, spec ] = load_algebra( c.inputs[ 0 ], text, c );
        o.report = a.has_box() ? verify_ml_duality( a, c.max_candidates ) : verify_lvl_duality( a, c.max_candidates );
        return o;
    }
    const auto s = load_space( c.inputs[ 0 ], text, c );
    if ( s.relation )
        o.report = verify_space_duality( { s.object, *s.relation }, c.max_candidates );
    else
    {
        o.report.merge( check_pbs_object( s.object ), "object" );
        o.report.merge( counit_zeta( s.object, std::nullopt, c.max_candidates ).report );
    }
    return o;
}

Outcome vietoris_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<space>" );
    const auto s = load_space( c.inputs[ 0 ], read_file( c.inputs[ 0 ] ), c );
    const auto v = vietoris_space( s.object.space );
    Outcome o;
    o.info.emplace_back( "members", std::to_string( v.members.size() ) );
    o.info.emplace_back( "tau1_open_sets", count_text( v.space.tau1.count_open_sets() ) );
    o.info.emplace_back( "tau2_open_sets", count_text( v.space.tau2.count_open_sets() ) );
    const auto boolean = is_pairwise_boolean( v.space );
    o.info.emplace_back( "pairwise_boolean", boolean.holds ? "yes" : "no" );
    if ( !v.warning.empty() )
        o.info.emplace_back( "warning", v.warning );
    for ( auto [ name, r ] : { std::pair{ "hausdorff", is_pairwise_hausdorff( v.space ) },
                               std::pair{ "zero_dimensional", is_pairwise_zero_dimensional( v.space ) },
                               std::pair{ "compact", is_pairwise_compact( v.space ) },
                               std::pair{ "de_morgan", check_box_diamond_duality( v ) } } )
        o.report.add( name, r.holds, r.witness );
    return o;
}

Outcome coalg_roundtrip_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<space with R:>" );
    const auto s = load_space( c.inputs[ 0 ], read_file( c.inputs[ 0 ] ), c );
    if ( !s.relation )
        throw Error( ErrorKind::ParseError, c.inputs[ 0 ] + ": no R: block" );
    const PRBSObject object{ s.object, *s.relation };
    const auto coalgebra = relation_to_coalgebra( object );
    std::vector< PRBSArrow > arrows;
    for ( auto& f : auto_space_morphisms( object ) )
        arrows.push_back( { 0, 0, std::move( f ) } );
    Outcome o;
    o.report = verify_category_iso( { object }, { coalgebra }, arrows );
    o.report.merge( check_coalgebra( coalgebra ), "coalgebra" );
    for ( std::size_t p = 0; p < coalgebra.structure.size(); ++p )
        o.info.emplace_back( "xi." + std::to_string( p ), format_set( coalgebra.structure[ p ] ) );
    return o;
}

Outcome modelcheck_verb( const RunConfig& c )
{
    require_inputs( c, 3, "<lattice> <model> \"<formula>\" [--world w]" );
    const auto l = resolve_lattice( c.inputs[ 0 ] );
    cap_lattice( l, c );
    const auto model = parse_model( read_file( c.inputs[ 1 ] ), l );
    const auto f = parse_formula( c.inputs[ 2 ], l.size() );
    if ( c.world && *c.world >= model.worlds )
        throw UsageError( "--world " + std::to_string( *c.world ) + " but the model has " +
                          std::to_string( model.worlds ) + " worlds" );
    const auto values = evaluate_all( model, l, *f );
    Outcome o;
    o.checks = false;
    o.info.emplace_back( "formula", pretty_print( *f ) );
    for ( std::size_t w = 0; w < values.size(); ++w )
        if ( !c.world || *c.world == w )
            o.info.emplace_back( "world." + std::to_string( w ),
                                 std::to_string( values[ w ] ) + " " + l.label( values[ w ] ) );
    return o;
}

Outcome battery_verb( const RunConfig& c )
{
    require_inputs( c, 0, "[--seed n]" );
    BatteryOptions options;
    options.seed = c.seed;
    options.max_candidates = c.max_candidates;
    const auto results = run_battery( options );
    Outcome o;
    for ( const auto& r : results )
    {
        o.report.merge( r.report, "c" + std::to_string( r.number ) );
        o.info.emplace_back( "criterion." + std::to_string( r.number ),
                             std::string{ r.report.passed() ? "PASS " : "FAIL " } + r.title );
    }
    return o;
}

Outcome generate_verb( const RunConfig& c )
{
    require_inputs( c, 1, "<kind> [--seed n] [--points n]" );
    if ( c.points > c.max_points )
        throw Error( ErrorKind::CapExceeded, "--points " + std::to_string( c.points ) + " above the cap of " +
                                                 std::to_string( c.max_points ) );
    Outcome o;
    o.checks = false;
    o.payload = generate_instance( c.inputs[ 0 ], { c.seed, c.points, c.max_points } );
    return o;
}

Outcome dispatch( const RunConfig& c )
{
    if ( c.verb == "check-lattice" )
        return check_lattice_verb( c );
    if ( c.verb == "check-algebra" )
        return check_algebra_verb( c );
    if ( c.verb == "homs" )
        return homs_verb( c );
    if ( c.verb == "dualize" )
        return dualize_verb( c );
    if ( c.verb == "roundtrip" )
        return roundtrip_verb( c );
    if ( c.verb == "vietoris" )
        return vietoris_verb( c );
    if ( c.verb == "coalg-roundtrip" )
        return coalg_roundtrip_verb( c );
    if ( c.verb == "modelcheck" )
        return modelcheck_verb( c );
    if ( c.verb == "battery" )
        return battery_verb( c );
    return generate_verb( c );
}

void emit( const RunConfig& c, const Outcome& o, int code, std::ostream& out )
{
    switch ( c.mode )
    {
    case OutputMode::Machine:
        if ( c.verb == "generate" )
            out << o.payload;
        for ( const auto& [ k, v ] : o.info )
            out << "INFO " << k << ' ' << v << '\n';
        out << o.report.machine_lines();
        break;
    case OutputMode::Json: {
        nlohmann::ordered_json j;
        j[ "verb" ] = c.verb;
        j[ "exit_code" ] = code;
        j[ "passed" ] = o.report.passed();
        j[ "info" ] = nlohmann::ordered_json::object();
        for ( const auto& [ k, v ] : o.info )
            j[ "info" ][ k ] = v;
        j[ "checks" ] = nlohmann::ordered_json::array();
        for ( const auto& ch : o.report.checks() )
            j[ "checks" ].push_back( { { "name", ch.name }, { "passed", ch.passed }, { "witness", ch.witness } } );
        if ( !o.payload.empty() )
            j[ "payload" ] = o.payload;
        out << j.dump( 2 ) << '\n';
        break;
    }
    case OutputMode::Human:
        if ( !o.payload.empty() )
            out << o.payload;
        for ( const auto& [ k, v ] : o.info )
            out << k << ": " << v << '\n';
        if ( c.verb == "battery" )
        {
            // Failing lines only; the full list is in --machine.
            for ( const auto& ch : o.report.checks() )
                if ( !ch.passed )
                    out << "FAIL " << ch.name << ' ' << ch.witness << '\n';
        }
        else
            for ( const auto& ch : o.report.checks() )
                out << ( ch.passed ? "PASS " : "FAIL " ) << ch.name
                    << ( ch.witness.empty() ? "" : " " + ch.witness ) << '\n';
        if ( o.checks )
        {
            const auto failed = std::count_if( o.report.checks().begin(), o.report.checks().end(),
                                               []( const auto& ch ) { return !ch.passed; } );
            out << "result: " << ( failed ? "FAIL" : "PASS" ) << " (" << o.report.checks().size() - failed << "/"
                << o.report.checks().size() << " checks)\n";
        }
        break;
    }
}

int error_code( ErrorKind kind )
{
    switch ( kind )
    {
    case ErrorKind::ParseError:
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownTruthConstant:
        return exit_parse_error;
    case ErrorKind::CapExceeded:
        return exit_cap_exceeded;
    default:
        return exit_library_error;
    }
}

} // namespace

RunConfig default_config()
{
    RunConfig c;
    c.max_lattice = env_cap( "HVML_MAX_LATTICE", c.max_lattice );
    c.max_points = env_cap( "HVML_MAX_POINTS", c.max_points );
    c.max_candidates = env_cap( "HVML_MAX_CANDIDATES", c.max_candidates );
    return c;
}

int run( const RunConfig& config, std::ostream& out, std::ostream& err )
{
    if ( std::find( std::begin( verbs ), std::end( verbs ), config.verb ) == std::end( verbs ) )
    {
        err << "error: unknown verb '" << config.verb << "'\n";
        return exit_unknown_verb;
    }
    try
    {
        const auto outcome = dispatch( config );
        const int code = outcome.report.passed() ? exit_ok : exit_check_failed;
        if ( !config.output.empty() )
        {
            std::ofstream file( config.output, std::ios::binary );
            if ( !file )
                throw UsageError( "cannot write " + config.output );
            file << outcome.payload;
        }
        emit( config, outcome, code, out );
        return code;
    }
    catch ( const UsageError& e )
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch ( const Error& e )
    {
        err << "error: " << e.what() << '\n';
        return error_code( e.kind() );
    }
    catch ( const std::bad_alloc& )
    {
        err << "error: out of memory\n";
        return exit_library_error;
    }
}

int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    RunConfig c = default_config();
    CLI::App app{ "Verification tool for lattice-valued modal algebras and their dual spaces", "hvml" };
    app.add_option( "verb", c.verb, "check-lattice, check-algebra, homs, dualize, roundtrip, vietoris, "
                                    "coalg-roundtrip, modelcheck, battery, generate" )
        ->required();
    app.add_option( "inputs", c.inputs, "Input files, lattice specs, formula or generator kind" );
    bool machine = false, json = false;
    app.add_flag( "--machine", machine, "One CHECK line per assertion" );
    app.add_flag( "--json", json, "JSON report" );
    app.add_option( "--seed", c.seed, "Seed for battery and generate" );
    app.add_option( "--max-lattice", c.max_lattice, "Largest truth lattice accepted" )->check( CLI::PositiveNumber );
    app.add_option( "--max-points", c.max_points, "Largest |P| for powerset algebras and generators" )
        ->check( CLI::PositiveNumber );
    app.add_option( "--max-candidates", c.max_candidates, "Cap on candidate maps when building dual algebras" )
        ->check( CLI::PositiveNumber );
    std::size_t world = 0, target = 0;
    auto* world_opt = app.add_option( "--world", world, "modelcheck: report this world only" );
    auto* target_opt = app.add_option( "--target", target, "homs: subalgebra index of the target" );
    app.add_option( "--points", c.points, "generate: number of points (default drawn from the seed)" );
    app.add_option( "--output,-o", c.output, "Write the produced instance to this file" );

    try
    {
        std::vector< std::string > reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::CallForHelp& )
    {
        out << app.help();
        return exit_ok;
    }
    catch ( const CLI::ParseError& e )
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    if ( machine && json )
    {
        err << "error: --machine and --json are exclusive\n";
        return exit_usage;
    }
    c.mode = machine ? OutputMode::Machine : json ? OutputMode::Json : OutputMode::Human;
    if ( world_opt->count() )
        c.world = world;
    if ( target_opt->count() )
        c.target = target;
    return run( c, out, err );
}

} // namespace hvml::cli
