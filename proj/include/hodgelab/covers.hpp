#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodgelab/groups.hpp"
#include "hodgelab/numeric.hpp"

namespace hodgelab {

/// Point on the rational line: a finite rational coordinate or infinity.
struct Point {
    bool at_infinity = false;
    Rat coord = Rat(0);

    static Point infinity() { return Point{true, Rat(0)}; }
    static Point finite(Rat v) { return Point{false, std::move(v)}; }

    bool operator==(const Point& other) const;
    bool operator<(const Point& other) const;  // finite points first, by value
};

std::string point_to_string(const Point& p);
Point parse_point(const std::string& text);

struct BranchPoint {
    std::string label;
    GroupElement monodromy;
    std::optional<Point> coordinate;
};

/// Abelian branched cover of a curve: quotient genus, group, branch
/// monodromies. The monodromies must sum to zero; for quotient genus zero
/// they must generate the group.
struct CoverSpec {
    FiniteAbelianGroup group;
    long quotient_genus = 0;
    std::vector<BranchPoint> branch;
    /// Set by validation for quotient genus >= 1: connectedness is assumed
    /// realizable through handle monodromies and recorded here.
    bool connectedness_assumed = false;
};

/// Checks the spec invariants and returns the normalized spec.
/// Throws InputError with one of: "zero monodromy at branch point",
/// "monodromy sum nonzero", "disconnected (g_Y=0, monodromies do not
/// generate)", or a duplicate-coordinate message.
CoverSpec validate_spec(CoverSpec spec);

/// Genus of the covering curve by Riemann-Hurwitz.
long genus(const CoverSpec& spec);

/// Genus of C/H for a subgroup H, via Riemann-Hurwitz for the G/H cover.
long quotient_genus(const CoverSpec& spec, const Subgroup& h);

struct EigenTable {
    FiniteAbelianGroup group;
    std::map<Character, long> dims;
    long genus = 0;

    long dim(const Character& chi) const;
};

/// Character eigenspace dimensions of holomorphic 1-forms:
/// dims(0) = g_Y, and for chi != 0
///   dims(chi) = g_Y - 1 + sum_j char_pairing(chi, monodromy_j).
EigenTable eigentable(const CoverSpec& spec);

/// h^0 on the quotient of 2K_Y + B_red, B_red the reduced branch divisor.
long invariant_bicanonical_dim(const CoverSpec& spec);

struct BuildingData {
    FiniteAbelianGroup group;
    std::map<Character, long> l_degrees;
    /// Keyed by the monodromy element g representing the pair
    /// (inertia subgroup <g>, distinguished generator of <g>^*).
    std::map<GroupElement, long> d_degrees;
};

/// 0 when i_chi + i_chi' < m_H for the inertia pair represented by g, else 1.
int pardini_epsilon(const FiniteAbelianGroup& group, const Character& chi, const Character& chi2,
                    const GroupElement& g);

/// Line-bundle degrees and branch-divisor degrees on a rational quotient.
BuildingData building_degrees(const CoverSpec& spec);

struct PardiniViolation {
    Character chi;
    Character chi2;
    long lhs = 0;
    long rhs = 0;
};

struct PardiniResult {
    bool ok = true;
    std::vector<PardiniViolation> violations;
};

/// Verifies L(chi) + L(chi') = L(chi chi') + sum eps * deg D over all pairs.
PardiniResult pardini_check(const BuildingData& bd);

/// Replaces every monodromy g_j by phi(g_j); coordinates unchanged.
CoverSpec twist_spec(const CoverSpec& spec, const GroupAutomorphism& phi);

/// Markdown grid of an eigentable (rows = last tuple coordinate for rank-2
/// groups, mirroring the layout used for (Z/d)^2 tables).
std::string eigentable_markdown(const EigenTable& table);

}  // namespace hodgelab
