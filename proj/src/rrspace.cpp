#include "hodgelab/rrspace.hpp"

#include <algorithm>

namespace hodgelab {

long RationalDivisor::degree() const {
    long d = 0;
    for (const auto& [p, m] : coeff) d += m;
    return d;
}

long RationalDivisor::at(const Point& p) const {
    auto it = coeff.find(p);
    return it == coeff.end() ? 0 : it->second;
}

void RationalDivisor::add(const Point& p, long mult) {
    if (mult == 0) return;
    long& v = coeff[p];
    v += mult;
    if (v == 0) coeff.erase(p);
}

namespace {

// Linear factor (x - a).
Poly linear_at(const Rat& a) {
    return Poly({-a, Rat(1)});
}

// Splits D into the polynomial of allowed finite poles (positive part),
// required finite zeros (negative part), and the infinity coefficient.
struct DivisorShape {
    Poly den;       // prod (x - a)^{n_a} over finite a with n_a > 0
    Poly num;       // prod (x - a)^{-n_a} over finite a with n_a < 0
    long den_deg = 0;
    long num_deg = 0;
    long inf = 0;
};

DivisorShape shape_of(const RationalDivisor& d) {
    DivisorShape s;
    s.den = Poly::constant(1);
    s.num = Poly::constant(1);
    for (const auto& [p, m] : d.coeff) {
        if (p.at_infinity) {
            s.inf = m;
            continue;
        }
        Poly f = linear_at(p.coord);
        for (long k = 0; k < std::labs(m); ++k) {
            if (m > 0) {
                s.den = s.den * f;
                ++s.den_deg;
            } else {
                s.num = s.num * f;
                ++s.num_deg;
            }
        }
    }
    return s;
}

}  // namespace

FunctionBasis rr_basis(const RationalDivisor& d) {
    FunctionBasis basis;
    basis.bound = d;
    long deg = d.degree();
    if (deg < 0) return basis;
    DivisorShape s = shape_of(d);
    // Elements x^k num / den, k = 0..deg: poles within the positive part,
    // k bounded so the order at infinity stays >= -inf coefficient.
    for (long k = 0; k <= deg; ++k) {
        basis.elements.emplace_back(Poly::monomial(static_cast<std::size_t>(k), Rat(1)) * s.num,
                                    s.den);
    }
    return basis;
}

std::vector<Rat> coordinates_in(const RationalDivisor& d, const RatFun& f) {
    long deg = d.degree();
    if (f.is_zero()) return std::vector<Rat>(static_cast<std::size_t>(std::max(0L, deg + 1)), Rat(0));
    if (deg < 0) throw InconsistencyError("nonzero function in a negative-degree bound");
    DivisorShape s = shape_of(d);
    // f in L(D) iff f * den / num is a polynomial of degree <= den_deg - num_deg + inf.
    Poly numerator = f.num * s.den;
    Poly denominator = f.den * s.num;
    auto [q, r] = poly_divmod(numerator, denominator);
    if (!r.is_zero()) throw InconsistencyError("function violates the divisor bound (finite pole)");
    if (q.degree() > s.den_deg - s.num_deg + s.inf)
        throw InconsistencyError("function violates the divisor bound at infinity");
    std::vector<Rat> out(static_cast<std::size_t>(deg + 1), Rat(0));
    for (std::size_t i = 0; i < q.c.size(); ++i) out[i] = q.c[i];
    return out;
}

CoverSpec assign_default_coordinates(const CoverSpec& spec) {
    std::size_t assigned = 0;
    for (const auto& bp : spec.branch)
        if (bp.coordinate) ++assigned;
    if (assigned == spec.branch.size()) return spec;
    if (assigned != 0)
        throw InputError("branch coordinates must be assigned for all points or none");
    CoverSpec out = spec;
    for (std::size_t j = 0; j + 1 < out.branch.size(); ++j)
        out.branch[j].coordinate = Point::finite(Rat(static_cast<long>(j)));
    if (!out.branch.empty()) out.branch.back().coordinate = Point::infinity();
    return out;
}

namespace {

struct BranchGeometry {
    std::vector<std::pair<Point, GroupElement>> finite;  // coordinate, monodromy
    bool has_infinity = false;
    GroupElement infinity_monodromy;
};

BranchGeometry branch_geometry(const CoverSpec& spec) {
    BranchGeometry geo;
    for (const auto& bp : spec.branch) {
        if (!bp.coordinate)
            throw InputError("missing branch coordinates (assign them or use defaults)");
        if (bp.coordinate->at_infinity) {
            geo.has_infinity = true;
            geo.infinity_monodromy = bp.monodromy;
        } else {
            geo.finite.emplace_back(*bp.coordinate, bp.monodromy);
        }
    }
    return geo;
}

}  // namespace

FunctionBasis eigenform_model(const CoverSpec& spec, const Character& chi) {
    if (spec.quotient_genus != 0)
        throw InputError("eigenform models require a rational quotient");
    if (is_zero(GroupElement{chi.residues})) return FunctionBasis{};  // no invariant forms

    BranchGeometry geo = branch_geometry(spec);
    Character dual = dual_character(spec.group, chi);

    // The multiplier prod_j (x - a_j)^{<chi*, g_j>} makes phi * multiplier * dx
    // a chi-eigenform; phi may then take a simple pole at each branch point
    // where chi is nontrivial on the inertia, and its pole order at infinity
    // is capped by the total multiplier weight plus the double pole of dx.
    RationalDivisor bound;
    Rat total_dual_weight(0);
    for (const auto& [pt, mono] : geo.finite) {
        Rat w = char_pairing(spec.group, dual, mono);
        total_dual_weight += w;
        if (w != 0) bound.add(pt, 1);
    }
    bool inf_nontrivial = false;
    if (geo.has_infinity) {
        Rat w = char_pairing(spec.group, dual, geo.infinity_monodromy);
        total_dual_weight += w;
        inf_nontrivial = (w != 0);
    }
    if (total_dual_weight.get_den() != 1)
        throw InconsistencyError("dual pairing weights do not sum to an integer");
    long a = static_cast<long>(total_dual_weight.get_num().get_si());
    bound.add(Point::infinity(), -a - 2 + (inf_nontrivial ? 1 : 0));
    return rr_basis(bound);
}

RatFun branch_factor(const CoverSpec& spec, const Character& chi) {
    BranchGeometry geo = branch_geometry(spec);
    Poly p = Poly::constant(1);
    for (const auto& [pt, mono] : geo.finite) {
        if (char_pairing(spec.group, chi, mono) != 0) p = p * Poly({-pt.coord, Rat(1)});
    }
    return RatFun(p, Poly::constant(1));
}

RationalDivisor invariant_bicanonical_divisor(const CoverSpec& spec) {
    if (spec.quotient_genus != 0)
        throw InputError("bicanonical divisor model requires a rational quotient");
    BranchGeometry geo = branch_geometry(spec);
    RationalDivisor t;
    for (const auto& [pt, mono] : geo.finite) t.add(pt, 1);
    t.add(Point::infinity(), -4 + (geo.has_infinity ? 1 : 0));
    return t;
}

long multiplication_rank(const std::vector<std::pair<FunctionBasis, FunctionBasis>>& pairs,
                         const RationalDivisor& target) {
    Matrix rows;
    for (const auto& [b1, b2] : pairs) {
        for (const auto& f : b1.elements) {
            for (const auto& g : b2.elements) {
                rows.push_back(coordinates_in(target, f * g));
            }
        }
    }
    if (rows.empty()) return 0;
    return static_cast<long>(matrix_rank(std::move(rows)));
}

}  // namespace hodgelab
