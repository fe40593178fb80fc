#pragma once

#include "hvml/lattice.hpp"
#include "hvml/mvalgebra.hpp"
#include "hvml/relation.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hvml
{

struct Formula;
using FormulaPtr = std::shared_ptr< const Formula >;

struct Formula
{
    enum class Kind
    {
        Var,
        Zero,
        One,
        And,
        Or,
        Imp,
        T,
        Box,
    };

    Kind kind = Kind::Zero;
    std::string name; // Var
    Element level = 0; // T
    FormulaPtr left;   // And, Or, Imp; the operand of T and Box
    FormulaPtr right;

    static FormulaPtr var( std::string name );
    static FormulaPtr zero();
    static FormulaPtr one();
    static FormulaPtr conj( FormulaPtr a, FormulaPtr b );
    static FormulaPtr disj( FormulaPtr a, FormulaPtr b );
    static FormulaPtr imp( FormulaPtr a, FormulaPtr b );
    static FormulaPtr truth( Element level, FormulaPtr a );
    static FormulaPtr box( FormulaPtr a );
};

// Structural equality.
bool operator==( const Formula& a, const Formula& b );

// Grammar, loosest first:
//   imp  := or ( "->" imp )?
//   or   := and ( "|" and )*
//   and  := unary ( "&" unary )*
//   unary:= "[]" unary | "T{" k "}" unary | atom
//   atom := ident | "0" | "1" | "(" imp ")"
// Throws SyntaxError (message carries the offset) and, when `levels` is
// given, UnknownTruthConstant for T{k} with k >= levels.
FormulaPtr parse_formula( std::string_view text, std::optional< std::size_t > levels = std::nullopt );

// Fully parenthesised binary connectives; parses back to the same tree.
std::string pretty_print( const Formula& f );

std::vector< std::string > variables( const Formula& f );

struct KripkeModel
{
    std::size_t worlds = 0;
    Relation relation;
    std::map< std::string, std::vector< Element > > valuation; // one value per world
};

// Values at every world. Throws UnboundVariable, ElementOutOfRange for T
// levels outside L.
std::vector< Element > evaluate_all( const KripkeModel& model, const FiniteLattice& lattice, const Formula& f );
Element evaluate( const KripkeModel& model, const FiniteLattice& lattice, std::size_t world, const Formula& f );

// Value of a formula in an algebra under an assignment of its elements.
Element evaluate_in_algebra( const MVAlgebra& algebra, const std::map< std::string, Element >& assignment,
                             const Formula& f );

// Worlds are the homs A -> L (sorted), related by the canonical relation;
// value(w, a) = w(a).
struct CanonicalModel
{
    std::vector< AlgebraHom > worlds;
    Relation relation;

    [[nodiscard]] Element value( std::size_t world, Element a ) const { return worlds[ world ]( a ); }
    // Kripke model whose valuation of p at w is w(assignment[p]).
    [[nodiscard]] KripkeModel kripke( const std::map< std::string, Element >& assignment ) const;
};

// Throws MissingBox.
CanonicalModel canonical_model( const MVAlgebra& algebra );

// psi(box a) = meet { phi(a) : psi R phi } for every world psi and a.
Report check_truth_lemma( const MVAlgebra& algebra );

} // namespace hvml
