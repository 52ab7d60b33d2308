#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hodgelab/covers.hpp"
#include "hodgelab/numeric.hpp"

namespace hodgelab {

struct RationalDivisor {
    std::map<Point, long> coeff;

    long degree() const;
    long at(const Point& p) const;
    void add(const Point& p, long mult);
};

struct FunctionBasis {
    std::vector<RatFun> elements;
    RationalDivisor bound;

    std::size_t size() const { return elements.size(); }
};

/// Basis of L(D) = { f : div(f) + D >= 0 } on the rational line,
/// of size max(0, deg D + 1).
FunctionBasis rr_basis(const RationalDivisor& d);

/// Coordinates of f in L(D); throws InconsistencyError when f is not in L(D).
std::vector<Rat> coordinates_in(const RationalDivisor& d, const RatFun& f);

/// Fills in default branch coordinates 0, 1, 2, ... with the last point at
/// infinity when the spec carries none. A partially-assigned spec is an error.
CoverSpec assign_default_coordinates(const CoverSpec& spec);

/// Functions phi such that phi * (reference eigenform) spans the
/// chi-eigenspace of holomorphic 1-forms; requires a validated spec with
/// quotient genus 0 and branch coordinates. The basis size equals the
/// eigentable dimension of chi. chi = 0 yields the empty basis.
FunctionBasis eigenform_model(const CoverSpec& spec, const Character& chi);

/// Product of the linear factors at the finite branch points where chi is
/// nontrivial on the inertia; multiplying one factor of a model pair by this
/// turns eigenform pair products into plain function products inside the
/// invariant bicanonical space.
RatFun branch_factor(const CoverSpec& spec, const Character& chi);

/// Divisor bound for the invariant bicanonical space of a genus-0 quotient:
/// B_red - 4 * infinity as a divisor on the rational line.
RationalDivisor invariant_bicanonical_divisor(const CoverSpec& spec);

/// Exact rank over the rationals of the span of all pairwise products
/// f * g, (f, g) in basis1 x basis2 for each listed pair, inside L(target).
long multiplication_rank(const std::vector<std::pair<FunctionBasis, FunctionBasis>>& pairs,
                         const RationalDivisor& target);

}  // namespace hodgelab
