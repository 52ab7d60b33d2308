#pragma once

#include "hodgelab/torelli.hpp"

namespace hodgelab {

/// Unramified Z/d cover of a genus g_y curve (free cyclic action).
CoverSpec free_cyclic_cover(long d, long g_y);

/// Z/3 cover of the rational line branched in 3k-2 points of monodromy 1 and
/// one point of monodromy 2 (k >= 2); k = 2 is the five-point triple cover.
CoverSpec k_family_cover(long k);

/// Product of the unramified triple cover of a genus-3 curve with the
/// k-family cover.
ProductSurfaceSpec k_family_surface(long k);

/// (Z/d)^2 cover of the rational line branched at two points of monodromies
/// (1,0), (-1,0) and d points of monodromy (0,1).
CoverSpec squared_cover_c1(long d);

/// (Z/d)^2 cover branched at four points with monodromies (1,0), (-1,0),
/// (0,1), (0,-1).
CoverSpec squared_cover_c2(long d);

/// The twist (1,0) -> (1,1), (0,1) -> (r,1).
GroupAutomorphism squared_cover_twist(long d, long r);

/// The twisted product C1 x C2 / (Z/d)^2; requires d prime and r not 0 or 1
/// mod d.
ProductSurfaceSpec squared_cover_surface(long d, long r);

/// Free cyclic action on factor 1 over a genus g' quotient paired with a
/// rational-quotient factor 2 whose nonzero eigenspaces are all nonzero;
/// the configurations of the dimension-failure table.
ProductSurfaceSpec dimension_failure_surface(long d, long g_prime);

/// The per-pair image bound closed form: (d/2 - 1)(g'-1)^2 + g'(g'-1)/2 for
/// even d, ((d-1)/2)(g'-1)^2 for odd d.
long dimension_failure_closed_form(long d, long g_prime);

}  // namespace hodgelab
