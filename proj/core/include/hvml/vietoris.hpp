#pragma once

#include "hvml/bitopology.hpp"

#include <string>
#include <vector>

namespace hvml
{

// Subsets closed in tau1 v tau2, in increasing mask order. Includes the
// empty set. Throws CapExceeded for bases above max_enumerated_points and
// SizeOverflow when there are more than 64 of them.
std::vector< PointSet > pairwise_closed_sets( const BitopSpace& space );

// The hyperspace K(S) of pairwise closed sets. Point i of `space` is the
// subset members[i] of the base.
struct VietorisSpace
{
    BitopSpace base;
    std::vector< PointSet > members;
    BitopSpace space;
    std::string warning; // set when beta_i fails to be a basis of the base

    [[nodiscard]] std::size_t index_of( PointSet c ) const; // members.size() if absent
    // { C : C inside u } and { C : C meets u } as sets of member indices.
    [[nodiscard]] PointSet box( PointSet u ) const;
    [[nodiscard]] PointSet diamond( PointSet u ) const;
};

// tau1 from { box U, diamond U : U in beta1 }, tau2 likewise from beta2.
VietorisSpace vietoris_space( const BitopSpace& space );

struct VietorisObject
{
    VietorisSpace vietoris;
    PBSObject object; // alpha(L') = { C : C inside alpha(L') }
};

VietorisObject vietoris_object( const PBSObject& object );

// K -> f[K]. Throws NotWellDefined when an image is not pairwise closed.
PointMap vietoris_arrow( const PointMap& f, const VietorisSpace& from, const VietorisSpace& to );

// Continuity of V(f) through the identities V(f)^-1(box U) = box f^-1(U)
// and V(f)^-1(diamond U) = diamond f^-1(U) for U in beta1 and beta2.
Report check_vietoris_arrow( const PointMap& f, const VietorisSpace& from, const VietorisSpace& to );

// (box U)^c = diamond(U^c) and (diamond U)^c = box(U^c) for every U.
PredicateResult check_box_diamond_duality( const VietorisSpace& v );

// A carrier object with a structure map point -> pairwise closed subset.
struct Coalgebra
{
    PBSObject carrier;
    std::vector< PointSet > structure;

    friend bool operator==( const Coalgebra&, const Coalgebra& ) = default;
};

// s -> R[s].
Coalgebra relation_to_coalgebra( const PRBSObject& object );
// d in R[c] iff d in xi(c).
PRBSObject coalgebra_to_relation( const Coalgebra& coalgebra );

// The structure map is an arrow into the Vietoris object: values are
// pairwise closed (coalg_closed), the preimages of box U and diamond U are
// [R]U and <R>U and lie in beta_i (coalg_continuous), alpha is respected
// (coalg_subspace).
Report check_coalgebra( const Coalgebra& coalgebra );

// xi2(f(c)) = f[xi1(c)] for every c.
PredicateResult check_coalgebra_morphism( const PointMap& f, const Coalgebra& from, const Coalgebra& to );

struct PRBSArrow
{
    std::size_t from;
    std::size_t to;
    PointMap map;
};

// C(B(O)) = O for every object, B(C(X)) = X for every coalgebra, and every
// arrow between objects gives a commuting coalgebra square.
Report verify_category_iso( const std::vector< PRBSObject >& objects, const std::vector< Coalgebra >& coalgebras,
                            const std::vector< PRBSArrow >& arrows );

} // namespace hvml
