#include "hvml/logic.hpp"

#include "hvml/duality.hpp"

#include <cctype>
#include <set>
#include <unordered_map>

namespace hvml
{

namespace
{

FormulaPtr make( Formula f )
{
    return std::make_shared< const Formula >( std::move( f ) );
}

class Parser
{
    std::string_view _text;
    std::size_t _pos = 0;
    std::optional< std::size_t > _levels;

    [[noreturn]] void fail( const std::string& what ) const
    {
        throw Error( ErrorKind::SyntaxError, what + " at offset " + std::to_string( _pos ) );
    }

    void skip()
    {
        while ( _pos < _text.size() && std::isspace( static_cast< unsigned char >( _text[ _pos ] ) ) )
            ++_pos;
    }

    bool accept( std::string_view token )
    {
        skip();
        if ( _text.substr( _pos, token.size() ) == token )
        {
            _pos += token.size();
            return true;
        }
        return false;
    }

    void expect( std::string_view token )
    {
        if ( !accept( token ) )
            fail( "expected '" + std::string{ token } + "'" );
    }

    FormulaPtr implication()
    {
        auto lhs = disjunction();
        if ( accept( "->" ) )
            return Formula::imp( lhs, implication() );
        return lhs;
    }

    FormulaPtr disjunction()
    {
        auto lhs = conjunction();
        while ( accept( "|" ) )
            lhs = Formula::disj( lhs, conjunction() );
        return lhs;
    }

    FormulaPtr conjunction()
    {
        auto lhs = unary();
        while ( accept( "&" ) )
            lhs = Formula::conj( lhs, unary() );
        return lhs;
    }

    FormulaPtr unary()
    {
        if ( accept( "[]" ) )
            return Formula::box( unary() );
        if ( accept( "T{" ) )
        {
            skip();
            const std::size_t start = _pos;
            while ( _pos < _text.size() && std::isdigit( static_cast< unsigned char >( _text[ _pos ] ) ) )
                ++_pos;
            if ( start == _pos )
                fail( "expected a level index" );
            if ( _pos - start > 9 )
                throw Error( ErrorKind::UnknownTruthConstant,
                             "T{" + std::string{ _text.substr( start, _pos - start ) } + "}" );
            const auto level = static_cast< Element >( std::stoul( std::string{ _text.substr( start, _pos - start ) } ) );
            if ( _levels && level >= *_levels )
                throw Error( ErrorKind::UnknownTruthConstant, "T{" + std::to_string( level ) + "} with only " +
                                                                  std::to_string( *_levels ) + " truth values" );
            expect( "}" );
            return Formula::truth( level, unary() );
        }
        return atom();
    }

    FormulaPtr atom()
    {
        skip();
        if ( _pos >= _text.size() )
            fail( "unexpected end of input" );
        const char c = _text[ _pos ];
        if ( c == '(' )
        {
            ++_pos;
            auto inner = implication();
            expect( ")" );
            return inner;
        }
        if ( c == '0' || c == '1' )
        {
            ++_pos;
            if ( _pos < _text.size() && std::isalnum( static_cast< unsigned char >( _text[ _pos ] ) ) )
                fail( "unexpected character after constant" );
            return c == '0' ? Formula::zero() : Formula::one();
        }
        if ( std::isalpha( static_cast< unsigned char >( c ) ) || c == '_' )
        {
            const std::size_t start = _pos;
            while ( _pos < _text.size() &&
                    ( std::isalnum( static_cast< unsigned char >( _text[ _pos ] ) ) || _text[ _pos ] == '_' ) )
                ++_pos;
            return Formula::var( std::string{ _text.substr( start, _pos - start ) } );
        }
        fail( std::string{ "unexpected '" } + c + "'" );
    }

public:
    Parser( std::string_view text, std::optional< std::size_t > levels ) : _text{ text }, _levels{ levels } {}

    FormulaPtr run()
    {
        auto f = implication();
        skip();
        if ( _pos != _text.size() )
            fail( "trailing input" );
        return f;
    }
};

void collect( const Formula& f, std::set< std::string >& out )
{
    if ( f.kind == Formula::Kind::Var )
        out.insert( f.name );
    if ( f.left )
        collect( *f.left, out );
    if ( f.right )
        collect( *f.right, out );
}

class Evaluator
{
    const KripkeModel& _model;
    const FiniteLattice& _lattice;
    std::unordered_map< const Formula*, std::vector< Element > > _memo;

public:
    Evaluator( const KripkeModel& model, const FiniteLattice& lattice ) : _model{ model }, _lattice{ lattice } {}

    const std::vector< Element >& eval( const Formula& f )
    {
        if ( auto it = _memo.find( &f ); it != _memo.end() )
            return it->second;
        const std::size_t n = _model.worlds;
        std::vector< Element > out( n );
        using K = Formula::Kind;
        switch ( f.kind )
        {
        case K::Var: {
            auto it = _model.valuation.find( f.name );
            if ( it == _model.valuation.end() )
                throw Error( ErrorKind::UnboundVariable, f.name );
            if ( it->second.size() != n )
                throw Error( ErrorKind::ArityMismatch, "valuation of " + f.name + " has the wrong length" );
            for ( auto v : it->second )
                _lattice.require_element( v );
            out = it->second;
            break;
        }
        case K::Zero:
            std::fill( out.begin(), out.end(), _lattice.bottom() );
            break;
        case K::One:
            std::fill( out.begin(), out.end(), _lattice.top() );
            break;
        case K::And:
        case K::Or:
        case K::Imp: {
            const auto lhs = eval( *f.left );
            const auto& rhs = eval( *f.right );
            for ( std::size_t w = 0; w < n; ++w )
                out[ w ] = f.kind == K::And  ? _lattice.meet( lhs[ w ], rhs[ w ] )
                           : f.kind == K::Or ? _lattice.join( lhs[ w ], rhs[ w ] )
                                             : _lattice.implies( lhs[ w ], rhs[ w ] );
            break;
        }
        case K::T: {
            _lattice.require_element( f.level );
            const auto& sub = eval( *f.left );
            for ( std::size_t w = 0; w < n; ++w )
                out[ w ] = t_op( _lattice, f.level, sub[ w ] );
            break;
        }
        case K::Box: {
            const auto& sub = eval( *f.left );
            for ( std::size_t w = 0; w < n; ++w )
            {
                Element v = _lattice.top();
                for ( auto u : members( _model.relation.successors( w ) ) )
                    v = _lattice.meet( v, sub[ u ] );
                out[ w ] = v;
            }
            break;
        }
        }
        return _memo.emplace( &f, std::move( out ) ).first->second;
    }
};

} // namespace

FormulaPtr Formula::var( std::string name )
{
    Formula f;
    f.kind = Kind::Var;
    f.name = std::move( name );
    return make( std::move( f ) );
}

FormulaPtr Formula::zero()
{
    return make( Formula{} );
}

FormulaPtr Formula::one()
{
    Formula f;
    f.kind = Kind::One;
    return make( std::move( f ) );
}

FormulaPtr Formula::conj( FormulaPtr a, FormulaPtr b )
{
    Formula f;
    f.kind = Kind::And;
    f.left = std::move( a );
    f.right = std::move( b );
    return make( std::move( f ) );
}

FormulaPtr Formula::disj( FormulaPtr a, FormulaPtr b )
{
    Formula f;
    f.kind = Kind::Or;
    f.left = std::move( a );
    f.right = std::move( b );
    return make( std::move( f ) );
}

FormulaPtr Formula::imp( FormulaPtr a, FormulaPtr b )
{
    Formula f;
    f.kind = Kind::Imp;
    f.left = std::move( a );
    f.right = std::move( b );
    return make( std::move( f ) );
}

FormulaPtr Formula::truth( Element level, FormulaPtr a )
{
    Formula f;
    f.kind = Kind::T;
    f.level = level;
    f.left = std::move( a );
    return make( std::move( f ) );
}

FormulaPtr Formula::box( FormulaPtr a )
{
    Formula f;
    f.kind = Kind::Box;
    f.left = std::move( a );
    return make( std::move( f ) );
}

bool operator==( const Formula& a, const Formula& b )
{
    if ( a.kind != b.kind || a.name != b.name || a.level != b.level )
        return false;
    auto same = []( const FormulaPtr& x, const FormulaPtr& y ) {
        if ( !x || !y )
            return !x && !y;
        return *x == *y;
    };
    return same( a.left, b.left ) && same( a.right, b.right );
}

FormulaPtr parse_formula( std::string_view text, std::optional< std::size_t > levels )
{
    return Parser( text, levels ).run();
}

std::string pretty_print( const Formula& f )
{
    using K = Formula::Kind;
    switch ( f.kind )
    {
    case K::Var:
        return f.name;
    case K::Zero:
        return "0";
    case K::One:
        return "1";
    case K::And:
        return "(" + pretty_print( *f.left ) + " & " + pretty_print( *f.right ) + ")";
    case K::Or:
        return "(" + pretty_print( *f.left ) + " | " + pretty_print( *f.right ) + ")";
    case K::Imp:
        return "(" + pretty_print( *f.left ) + " -> " + pretty_print( *f.right ) + ")";
    case K::T:
        return "T{" + std::to_string( f.level ) + "} " + pretty_print( *f.left );
    case K::Box:
        return "[] " + pretty_print( *f.left );
    }
    return {};
}

std::vector< std::string > variables( const Formula& f )
{
    std::set< std::string > names;
    collect( f, names );
    return { names.begin(), names.end() };
}

std::vector< Element > evaluate_all( const KripkeModel& model, const FiniteLattice& lattice, const Formula& f )
{
    if ( model.relation.size() != model.worlds )
        throw Error( ErrorKind::ArityMismatch, "relation and world count differ" );
    Evaluator ev( model, lattice );
    return ev.eval( f );
}

Element evaluate( const KripkeModel& model, const FiniteLattice& lattice, std::size_t world, const Formula& f )
{
    if ( world >= model.worlds )
        throw Error( ErrorKind::ElementOutOfRange, "world " + std::to_string( world ) + " does not exist" );
    return evaluate_all( model, lattice, f )[ world ];
}

Element evaluate_in_algebra( const MVAlgebra& algebra, const std::map< std::string, Element >& assignment,
                             const Formula& f )
{
    using K = Formula::Kind;
    switch ( f.kind )
    {
    case K::Var: {
        auto it = assignment.find( f.name );
        if ( it == assignment.end() )
            throw Error( ErrorKind::UnboundVariable, f.name );
        if ( it->second >= algebra.size() )
            throw Error( ErrorKind::ElementOutOfRange, "assignment of " + f.name );
        return it->second;
    }
    case K::Zero:
        return algebra.bottom();
    case K::One:
        return algebra.top();
    case K::And:
        return algebra.meet( evaluate_in_algebra( algebra, assignment, *f.left ),
                             evaluate_in_algebra( algebra, assignment, *f.right ) );
    case K::Or:
        return algebra.join( evaluate_in_algebra( algebra, assignment, *f.left ),
                             evaluate_in_algebra( algebra, assignment, *f.right ) );
    case K::Imp:
        return algebra.implies( evaluate_in_algebra( algebra, assignment, *f.left ),
                                evaluate_in_algebra( algebra, assignment, *f.right ) );
    case K::T:
        algebra.truth().require_element( f.level );
        return algebra.t( f.level, evaluate_in_algebra( algebra, assignment, *f.left ) );
    case K::Box:
        return algebra.box( evaluate_in_algebra( algebra, assignment, *f.left ) );
    }
    return algebra.bottom();
}

KripkeModel CanonicalModel::kripke( const std::map< std::string, Element >& assignment ) const
{
    KripkeModel m{ worlds.size(), relation, {} };
    for ( const auto& [ name, a ] : assignment )
    {
        std::vector< Element > values;
        for ( const auto& w : worlds )
            values.push_back( w( a ) );
        m.valuation.emplace( name, std::move( values ) );
    }
    return m;
}

CanonicalModel canonical_model( const MVAlgebra& algebra )
{
    if ( !algebra.has_box() )
        throw Error( ErrorKind::MissingBox, "the canonical model needs a box" );
    auto worlds = enumerate_homs( algebra );
    if ( worlds.size() > max_set_universe )
        throw Error( ErrorKind::SizeOverflow, std::to_string( worlds.size() ) + " worlds exceed the 64-world limit" );
    Relation r = box_relation( algebra, worlds );
    return { std::move( worlds ), std::move( r ) };
}

Report check_truth_lemma( const MVAlgebra& algebra )
{
    const auto model = canonical_model( algebra );
    const auto& L = algebra.truth();
    std::string witness;
    for ( std::size_t w = 0; w < model.worlds.size() && witness.empty(); ++w )
        for ( Element a = 0; a < algebra.size(); ++a )
        {
            Element meet = L.top();
            for ( auto u : members( model.relation.successors( w ) ) )
                meet = L.meet( meet, model.value( u, a ) );
            if ( model.value( w, algebra.box( a ) ) != meet )
            {
                witness = "(world=" + std::to_string( w ) + ",a=" + algebra.label( a ) + ")";
                break;
            }
        }
    Report report;
    report.add( "truth_lemma", witness.empty(), witness );
    return report;
}

} // namespace hvml
