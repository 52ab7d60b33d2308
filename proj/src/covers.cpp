#include "hodgelab/covers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hodgelab {

bool Point::operator==(const Point& other) const {
    if (at_infinity != other.at_infinity) return false;
    return at_infinity || coord == other.coord;
}

bool Point::operator<(const Point& other) const {
    if (at_infinity != other.at_infinity) return !at_infinity;
    if (at_infinity) return false;
    return coord < other.coord;
}

std::string point_to_string(const Point& p) {
    return p.at_infinity ? "inf" : rat_to_string(p.coord);
}

Point parse_point(const std::string& text) {
    if (text == "inf" || text == "infinity") return Point::infinity();
    return Point::finite(parse_rat(text));
}

CoverSpec validate_spec(CoverSpec spec) {
    if (spec.quotient_genus < 0) throw InputError("quotient genus must be nonnegative");
    GroupElement sum = zero_element(spec.group);
    std::set<Point> coords;
    for (auto& bp : spec.branch) {
        bp.monodromy = reduce_element(spec.group, bp.monodromy.residues);
        if (is_zero(bp.monodromy))
            throw InputError("zero monodromy at branch point" +
                             (bp.label.empty() ? std::string() : " " + bp.label));
        sum = add(spec.group, sum, bp.monodromy);
        if (bp.coordinate) {
            if (!coords.insert(*bp.coordinate).second)
                throw InputError("duplicate branch coordinate " + point_to_string(*bp.coordinate));
        }
    }
    if (!is_zero(sum)) throw InputError("monodromy sum nonzero");

    if (spec.quotient_genus == 0) {
        std::vector<GroupElement> gens;
        for (const auto& bp : spec.branch) gens.push_back(bp.monodromy);
        if (closure(spec.group, gens).order() != spec.group.order())
            throw InputError("disconnected (g_Y=0, monodromies do not generate)");
        spec.connectedness_assumed = false;
    } else {
        spec.connectedness_assumed = true;
    }

    if (genus(spec) < 0) throw InputError("negative genus");
    return spec;
}

long genus(const CoverSpec& spec) {
    long n = spec.group.order();
    // 2g - 2 = |G| (2 g_Y - 2) + sum_j (|G|/e_j)(e_j - 1)
    long rhs = n * (2 * spec.quotient_genus - 2);
    for (const auto& bp : spec.branch) {
        long e = element_order(spec.group, bp.monodromy);
        rhs += (n / e) * (e - 1);
    }
    if (rhs % 2 != 0) throw InconsistencyError("Riemann-Hurwitz parity failure");
    return rhs / 2 + 1;
}

long quotient_genus(const CoverSpec& spec, const Subgroup& h) {
    long n = spec.group.order();
    long h_order = h.order();
    if (n % h_order != 0) throw InputError("subgroup order does not divide group order");
    long deg = n / h_order;  // degree of C/H -> C/G
    long rhs = deg * (2 * spec.quotient_genus - 2);
    for (const auto& bp : spec.branch) {
        // Inertia order of the image in G/H: least k with k*g in H.
        long e_full = element_order(spec.group, bp.monodromy);
        long e = 1;
        GroupElement acc = bp.monodromy;
        while (e <= e_full && !h.contains(acc)) {
            acc = add(spec.group, acc, bp.monodromy);
            ++e;
        }
        rhs += (deg / e) * (e - 1);
    }
    if (rhs % 2 != 0) throw InconsistencyError("Riemann-Hurwitz parity failure in quotient");
    return rhs / 2 + 1;
}

long EigenTable::dim(const Character& chi) const {
    auto it = dims.find(chi);
    if (it == dims.end()) throw InputError("character not in eigentable");
    return it->second;
}

EigenTable eigentable(const CoverSpec& spec) {
    EigenTable table;
    table.group = spec.group;
    table.genus = genus(spec);
    for (const auto& chi : all_characters(spec.group)) {
        long d;
        if (is_zero(GroupElement{chi.residues})) {
            d = spec.quotient_genus;
        } else {
            Rat s(0);
            for (const auto& bp : spec.branch) s += char_pairing(spec.group, chi, bp.monodromy);
            if (s.get_den() != 1)
                throw InconsistencyError("pairing sum is not an integer; monodromy sum nonzero?");
            d = spec.quotient_genus - 1 + static_cast<long>(s.get_num().get_si());
        }
        table.dims.emplace(chi, d);
    }
    long total = 0;
    for (const auto& [chi, d] : table.dims) total += d;
    if (total != table.genus)
        throw InconsistencyError("eigentable dimensions do not sum to the genus");
    return table;
}

long invariant_bicanonical_dim(const CoverSpec& spec) {
    long r = static_cast<long>(spec.branch.size());
    long g = spec.quotient_genus;
    if (g == 0) return std::max(0L, r - 3);
    if (g == 1) return r >= 1 ? r : 1;
    return 3 * g - 3 + r;
}

int pardini_epsilon(const FiniteAbelianGroup& group, const Character& chi, const Character& chi2,
                    const GroupElement& g) {
    long e = element_order(group, g);
    // chi restricted to <g> is psi^{i_chi} where psi is the generator of
    // <g>^* attached to g; i_chi = e * <chi, g> as an integer in [0, e).
    Rat p1 = char_pairing(group, chi, g) * e;
    Rat p2 = char_pairing(group, chi2, g) * e;
    long i1 = static_cast<long>(p1.get_num().get_si());
    long i2 = static_cast<long>(p2.get_num().get_si());
    return (i1 + i2 < e) ? 0 : 1;
}

BuildingData building_degrees(const CoverSpec& spec) {
    if (spec.quotient_genus != 0)
        throw InputError("building degrees are only defined over a rational quotient");
    BuildingData bd;
    bd.group = spec.group;
    for (const auto& chi : all_characters(spec.group)) {
        Rat s(0);
        for (const auto& bp : spec.branch) s += char_pairing(spec.group, chi, bp.monodromy);
        if (s.get_den() != 1) throw InconsistencyError("pairing sum is not an integer");
        bd.l_degrees.emplace(chi, static_cast<long>(s.get_num().get_si()));
    }
    for (const auto& bp : spec.branch) bd.d_degrees[bp.monodromy] += 1;
    return bd;
}

PardiniResult pardini_check(const BuildingData& bd) {
    PardiniResult res;
    auto chars = all_characters(bd.group);
    for (std::size_t a = 0; a < chars.size(); ++a) {
        for (std::size_t b = a; b < chars.size(); ++b) {
            const Character& chi = chars[a];
            const Character& chi2 = chars[b];
            long lhs = bd.l_degrees.at(chi) + bd.l_degrees.at(chi2);
            long rhs = bd.l_degrees.at(add_characters(bd.group, chi, chi2));
            for (const auto& [g, deg] : bd.d_degrees)
                rhs += pardini_epsilon(bd.group, chi, chi2, g) * deg;
            if (lhs != rhs) {
                res.ok = false;
                res.violations.push_back({chi, chi2, lhs, rhs});
            }
        }
    }
    return res;
}

CoverSpec twist_spec(const CoverSpec& spec, const GroupAutomorphism& phi) {
    auto check = validate_automorphism(spec.group, phi);
    if (!check.valid) throw InputError("invalid automorphism: " + check.reason);
    CoverSpec out = spec;
    for (auto& bp : out.branch) bp.monodromy = apply_automorphism(spec.group, phi, bp.monodromy);
    return out;
}

std::string eigentable_markdown(const EigenTable& table) {
    std::ostringstream os;
    const auto& orders = table.group.factor_orders;
    if (orders.size() == 2) {
        long na = orders[0], nb = orders[1];
        os << "|     |";
        for (long a = 0; a < na; ++a) os << " a=" << a << " |";
        os << "\n|-----|";
        for (long a = 0; a < na; ++a) os << "-----|";
        os << "\n";
        for (long b = 0; b < nb; ++b) {
            os << "| b=" << b << " |";
            for (long a = 0; a < na; ++a) os << " " << table.dim(Character{{a, b}}) << " |";
            os << "\n";
        }
    } else {
        os << "| chi | dim |\n|-----|-----|\n";
        for (const auto& [chi, d] : table.dims) {
            os << "| (";
            for (std::size_t i = 0; i < chi.residues.size(); ++i) {
                if (i) os << ",";
                os << chi.residues[i];
            }
            os << ") | " << d << " |\n";
        }
    }
    os << "\ngenus: " << table.genus << "\n";
    return os.str();
}

}  // namespace hodgelab
