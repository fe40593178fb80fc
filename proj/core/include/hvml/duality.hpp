#pragma once

#include "hvml/bitopology.hpp"
#include "hvml/mvalgebra.hpp"

#include <optional>
#include <vector>

namespace hvml
{

inline constexpr std::size_t default_max_candidates = 1'000'000;
inline constexpr Element no_element = ~Element{ 0 };

// The dual space of an algebra: its homomorphisms into L as points,
// tau1 generated by the sets <a> = { h : h(a) = 1 }, tau2 by their
// complements, alpha(L') = the homs landing in L', and, when the algebra
// has a box, the canonical relation.
struct DualSpace
{
    PBSObject object;
    std::optional< Relation > relation;
    std::vector< AlgebraHom > points; // sorted by map table
    std::vector< PointSet > basis;    // basis[a] = <a>

    [[nodiscard]] std::size_t index_of( const AlgebraHom& h ) const;
    // Throws MissingBox when there is no relation.
    [[nodiscard]] PRBSObject prbs() const;
};

// psi R phi iff for every level l and element a, psi(box a) >= l implies
// phi(a) >= l. Evaluated literally over all l and a.
Relation box_relation( const MVAlgebra& algebra, const std::vector< AlgebraHom >& homs );

// Throws SizeOverflow when there are more than 64 homs.
DualSpace dual_space( const MVAlgebra& algebra );

// The algebra of pairwise continuous, subspace preserving maps P -> L with
// pointwise operations, and box from the relation when given.
struct DualAlgebra
{
    MVAlgebra algebra;
    std::vector< std::vector< Element > > elements; // sorted, element i is elements[i]

    [[nodiscard]] std::optional< Element > index_of( const std::vector< Element >& map ) const;
};

// Filters all |L|^|P| maps. Throws CapExceeded above `max_candidates`,
// NotWellDefined if box or an operation leaves the carrier.
DualAlgebra dual_algebra( const PBSObject& object, std::size_t max_candidates = default_max_candidates );
DualAlgebra dual_algebra( const PRBSObject& object, std::size_t max_candidates = default_max_candidates );

// For psi: A1 -> A2, the map dual(A2) -> dual(A1), phi -> phi . psi.
// Throws NotWellDefined if some composite is not a point of dual(A1).
PointMap dual_morphism_space( const AlgebraHom& psi, const DualSpace& source_dual, const DualSpace& target_dual );

// For f: O1 -> O2, the homomorphism F(O2) -> F(O1), eta -> eta . f.
AlgebraHom dual_morphism_algebra( const PointMap& f, const DualAlgebra& source_dual, const DualAlgebra& target_dual );

struct UnitResult
{
    AlgebraHom gamma; // a -> index of (g -> g(a)) in F(G(A)), no_element when missing
    Report report;
};

// gamma(a)(g) = g(a). Checks gamma_defined, gamma_bijective, gamma_ops and,
// with a box, gamma_box, then gamma_iso as their conjunction.
UnitResult unit_gamma( const MVAlgebra& algebra, const DualSpace& dual, const DualAlgebra& bidual );
UnitResult unit_gamma( const MVAlgebra& algebra, std::size_t max_candidates = default_max_candidates );

struct CounitResult
{
    PointMap zeta; // point p -> index of (psi -> psi(p)) in G(F(O))
    Report report;
};

// zeta(p)(psi) = psi(p). Checks zeta_defined, zeta_bijective,
// zeta_continuous, zeta_inverse_continuous, zeta_alpha and, with a
// relation, zeta_relation, then zeta_iso.
CounitResult counit_zeta( const PBSObject& object, const std::optional< Relation >& relation,
                          std::size_t max_candidates = default_max_candidates );
CounitResult counit_zeta( const PRBSObject& object, std::size_t max_candidates = default_max_candidates );

// For psi: A -> B, gamma_B . psi = FG(psi) . gamma_A, pointwise.
PredicateResult check_unit_naturality( const AlgebraHom& psi, const MVAlgebra& source, const MVAlgebra& target,
                                       std::size_t max_candidates = default_max_candidates );

// For f: O1 -> O2, zeta_O2 . f = GF(f) . zeta_O1, pointwise. Relations are
// used when both sides have one.
PredicateResult check_counit_naturality( const PointMap& f, const PBSObject& from,
                                         const std::optional< Relation >& from_relation, const PBSObject& to,
                                         const std::optional< Relation >& to_relation,
                                         std::size_t max_candidates = default_max_candidates );
PredicateResult check_counit_naturality( const PointMap& f, const PRBSObject& from, const PRBSObject& to,
                                         std::size_t max_candidates = default_max_candidates );

struct AlgebraArrow
{
    MVAlgebra target;
    AlgebraHom map;
};

// Without `box`: the identity and the point homs A -> L. With `box`: the
// identity and box-preserving endomorphisms. At most `limit` arrows.
std::vector< AlgebraArrow > auto_algebra_morphisms( const MVAlgebra& algebra, bool box, std::size_t limit = 8 );

// Identity plus PRBS endomorphisms found by scanning all maps when
// |P|^|P| <= 4096; at most `limit` in total.
std::vector< PointMap > auto_space_morphisms( const PRBSObject& object, std::size_t limit = 8 );

// Dual space object checks, lattice axioms of the bidual, unit, counit on
// the dual space, and naturality for auto-generated morphisms.
Report verify_lvl_duality( const MVAlgebra& algebra, std::size_t max_candidates = default_max_candidates );
Report verify_ml_duality( const MVAlgebra& algebra, std::size_t max_candidates = default_max_candidates );
Report verify_space_duality( const PRBSObject& object, std::size_t max_candidates = default_max_candidates );

// The algebra with its elements renumbered through a bijection: element
// i of the result is element perm[i] of `algebra`. Used to carry F(G(A))
// back along gamma.
MVAlgebra transport( const MVAlgebra& algebra, const std::vector< Element >& perm,
                     std::vector< std::string > labels = {} );

} // namespace hvml
