#include "hodgelab/torelli.hpp"

#include <algorithm>

#include "hodgelab/rrspace.hpp"

namespace hodgelab {

ProductSurfaceSpec validate_product_spec(ProductSurfaceSpec ps) {
    ps.spec1 = validate_spec(ps.spec1);
    ps.spec2 = validate_spec(ps.spec2);
    if (!(ps.spec1.group == ps.spec2.group))
        throw InputError("product factors must share the same group");
    if (ps.twist) {
        auto check = validate_automorphism(ps.spec1.group, *ps.twist);
        if (!check.valid) throw InputError("invalid twist: " + check.reason);
    }
    if (genus(ps.spec1) < 2 || genus(effective_spec2(ps)) < 2)
        throw InputError("both factor curves must have genus >= 2");
    return ps;
}

CoverSpec effective_spec2(const ProductSurfaceSpec& ps) {
    return ps.twist ? twist_spec(ps.spec2, *ps.twist) : ps.spec2;
}

namespace {

// Nonzero elements of all inertia subgroups, in branch-list order.
std::vector<GroupElement> stabilizer_elements(const CoverSpec& spec) {
    std::vector<GroupElement> out;
    std::set<GroupElement> seen;
    for (const auto& bp : spec.branch) {
        long e = element_order(spec.group, bp.monodromy);
        GroupElement acc = bp.monodromy;
        for (long k = 1; k < e; ++k) {
            if (seen.insert(acc).second) out.push_back(acc);
            acc = add(spec.group, acc, bp.monodromy);
        }
    }
    return out;
}

}  // namespace

FreenessResult freeness_check(const ProductSurfaceSpec& ps) {
    if (!(ps.spec1.group == ps.spec2.group))
        throw InputError("product factors must share the same group");
    CoverSpec second = effective_spec2(ps);
    auto stab2 = stabilizer_elements(second);
    std::set<GroupElement> stab2_set(stab2.begin(), stab2.end());
    for (const auto& g : stabilizer_elements(ps.spec1)) {
        if (stab2_set.count(g)) return {false, g};
    }
    return {true, std::nullopt};
}

HodgeSummary hodge_from_tables(const EigenTable& t1, const EigenTable& t2, long bicanon1,
                               long bicanon2) {
    const FiniteAbelianGroup& g = t1.group;
    HodgeSummary s;
    s.q = t1.dim(zero_character(g)) + t2.dim(zero_character(g));
    for (const auto& chi : all_characters(g)) {
        Character dual = dual_character(g, chi);
        s.p_g += t1.dim(chi) * t2.dim(dual);
        s.h11 += t1.dim(chi) * t2.dim(chi) + t1.dim(dual) * t2.dim(dual);
    }
    s.h11 += 2;
    s.t1 = bicanon1;
    s.t2 = bicanon2;
    s.h1_theta = s.t1 + s.t2;

    long n = g.order();
    long g1 = t1.genus, g2 = t2.genus;
    long euler_num = (2 - 2 * g1) * (2 - 2 * g2);
    if (euler_num % n != 0) throw InconsistencyError("Euler number not divisible by group order");
    s.euler = euler_num / n;
    long chi_num = (g1 - 1) * (g2 - 1);
    if (chi_num % n != 0) throw InconsistencyError("chi(O) not divisible by group order");
    s.chi_o = chi_num / n;
    return s;
}

HodgeSummary hodge_summary(const ProductSurfaceSpec& ps) {
    FreenessResult fr = freeness_check(ps);
    if (!fr.free) throw InputError("the action on the product is not free");
    CoverSpec second = effective_spec2(ps);
    return hodge_from_tables(eigentable(ps.spec1), eigentable(second),
                             invariant_bicanonical_dim(ps.spec1),
                             invariant_bicanonical_dim(second));
}

long image_bound_from_tables(const EigenTable& self, const EigenTable& other, long target) {
    const FiniteAbelianGroup& g = self.group;
    long bound = 0;
    std::set<Character> done;
    for (const auto& chi : all_characters(g)) {
        if (done.count(chi)) continue;
        Character dual = dual_character(g, chi);
        done.insert(chi);
        done.insert(dual);
        // The pair {chi, chi*} feeds the map when either member is admissible.
        if (other.dim(chi) == 0 && other.dim(dual) == 0) continue;
        if (chi == dual) {
            long d = self.dim(chi);
            bound += d * (d + 1) / 2;
        } else {
            bound += self.dim(chi) * self.dim(dual);
        }
    }
    return std::min(bound, target);
}

long image_dim_bound(const ProductSurfaceSpec& ps, int factor) {
    if (factor != 1 && factor != 2) throw InputError("factor must be 1 or 2");
    CoverSpec second = effective_spec2(ps);
    EigenTable t1 = eigentable(ps.spec1);
    EigenTable t2 = eigentable(second);
    if (factor == 1)
        return image_bound_from_tables(t1, t2, invariant_bicanonical_dim(ps.spec1));
    return image_bound_from_tables(t2, t1, invariant_bicanonical_dim(second));
}

std::string to_string(TorelliVerdict v) {
    switch (v) {
        case TorelliVerdict::FAILS_BY_DIMENSION: return "FAILS_BY_DIMENSION";
        case TorelliVerdict::NECESSARY_CONDITION_HOLDS: return "NECESSARY_CONDITION_HOLDS";
        case TorelliVerdict::SURJECTIVE_EXACT: return "SURJECTIVE_EXACT";
    }
    return "?";
}

std::string to_string(DPhi1Verdict v) {
    switch (v) {
        case DPhi1Verdict::FAILS_BY_DIMENSION: return "FAILS_BY_DIMENSION";
        case DPhi1Verdict::UNDETERMINED_BY_DIMENSION: return "UNDETERMINED_BY_DIMENSION";
        case DPhi1Verdict::VACUOUSLY_SURJECTIVE: return "VACUOUSLY_SURJECTIVE";
    }
    return "?";
}

std::string to_string(HypothesisStatus s) {
    switch (s) {
        case HypothesisStatus::SATISFIED: return "SATISFIED";
        case HypothesisStatus::VIOLATED: return "VIOLATED";
        case HypothesisStatus::NOT_APPLICABLE: return "NOT_APPLICABLE";
    }
    return "?";
}

DPhi1Factor dphi1_factor(long q_i, long t_i) {
    DPhi1Factor f;
    f.source = q_i * (q_i + 1) / 2;
    f.target = t_i;
    if (t_i == 0)
        f.verdict = DPhi1Verdict::VACUOUSLY_SURJECTIVE;
    else if (f.source < t_i)
        f.verdict = DPhi1Verdict::FAILS_BY_DIMENSION;
    else
        f.verdict = DPhi1Verdict::UNDETERMINED_BY_DIMENSION;
    return f;
}

namespace {

struct ExactRankInput {
    const CoverSpec& self;
    const EigenTable& self_table;
    const std::set<Character>& admissible;
};

long exact_multiplication_rank(const ExactRankInput& in) {
    CoverSpec spec = assign_default_coordinates(in.self);
    RationalDivisor target = invariant_bicanonical_divisor(spec);
    std::vector<std::pair<FunctionBasis, FunctionBasis>> pairs;
    std::set<Character> done;
    const FiniteAbelianGroup& g = spec.group;
    for (const Character& chi : in.admissible) {
        if (done.count(chi)) continue;
        Character dual = dual_character(g, chi);
        done.insert(chi);
        done.insert(dual);
        if (in.self_table.dim(chi) == 0 || in.self_table.dim(dual) == 0) continue;
        FunctionBasis left = eigenform_model(spec, chi);
        RatFun factor = branch_factor(spec, chi);
        for (auto& f : left.elements) f = f * factor;
        pairs.emplace_back(std::move(left), eigenform_model(spec, dual));
    }
    return multiplication_rank(pairs, target);
}

FactorReport factor_report(const CoverSpec& self, const EigenTable& self_table,
                           const EigenTable& other_table, bool exact,
                           std::vector<std::string>& warnings, const char* name) {
    FactorReport rep;
    rep.target = invariant_bicanonical_dim(self);
    for (const auto& [chi, dim] : other_table.dims)
        if (dim != 0) rep.admissible.insert(chi);
    rep.image_bound = image_bound_from_tables(self_table, other_table, rep.target);
    if (exact) {
        if (self.quotient_genus == 0) {
            rep.exact_rank = exact_multiplication_rank({self, self_table, rep.admissible});
        } else {
            warnings.push_back(std::string(name) +
                               ": exact rank needs a rational quotient; dimension bound reported");
        }
    }
    long effective = rep.exact_rank.value_or(rep.image_bound);
    if (effective < rep.target)
        rep.verdict = TorelliVerdict::FAILS_BY_DIMENSION;
    else if (rep.exact_rank && *rep.exact_rank == rep.target)
        rep.verdict = TorelliVerdict::SURJECTIVE_EXACT;
    else
        rep.verdict = TorelliVerdict::NECESSARY_CONDITION_HOLDS;
    return rep;
}

}  // namespace

TorelliReport torelli_report(const ProductSurfaceSpec& ps, bool exact) {
    FreenessResult fr = freeness_check(ps);
    if (!fr.free) throw InputError("the action on the product is not free");
    CoverSpec second = effective_spec2(ps);
    EigenTable t1 = eigentable(ps.spec1);
    EigenTable t2 = eigentable(second);

    TorelliReport rep;
    rep.factor1 = factor_report(ps.spec1, t1, t2, exact, rep.warnings, "factor 1");
    rep.factor2 = factor_report(second, t2, t1, exact, rep.warnings, "factor 2");

    auto deficit = [](const FactorReport& f) {
        long effective = f.exact_rank.value_or(f.image_bound);
        return std::max(0L, f.target - effective);
    };
    rep.kernel_lower_bound = deficit(rep.factor1) + deficit(rep.factor2);

    const FiniteAbelianGroup& g = ps.spec1.group;
    rep.dphi1_factor1 = dphi1_factor(t1.dim(zero_character(g)), rep.factor1.target);
    rep.dphi1_factor2 = dphi1_factor(t2.dim(zero_character(g)), rep.factor2.target);
    return rep;
}

std::pair<DPhi1Factor, DPhi1Factor> dphi1_report(const ProductSurfaceSpec& ps) {
    FreenessResult fr = freeness_check(ps);
    if (!fr.free) throw InputError("the action on the product is not free");
    CoverSpec second = effective_spec2(ps);
    const FiniteAbelianGroup& g = ps.spec1.group;
    long q1 = eigentable(ps.spec1).dim(zero_character(g));
    long q2 = eigentable(second).dim(zero_character(g));
    return {dphi1_factor(q1, invariant_bicanonical_dim(ps.spec1)),
            dphi1_factor(q2, invariant_bicanonical_dim(second))};
}

namespace {

HypothesisFactor hypothesis_factor(const CoverSpec& spec, long guard) {
    HypothesisFactor f;
    if (genus(spec) < 2) {
        f.status = HypothesisStatus::NOT_APPLICABLE;
        f.reason = "curve genus below 2";
        return f;
    }
    if (spec.quotient_genus >= 2) {
        f.status = HypothesisStatus::SATISFIED;
        return f;
    }
    if (spec.quotient_genus == 0) {
        f.status = HypothesisStatus::VIOLATED;
        f.reason = "quotient genus 0";
        return f;
    }
    // Quotient genus 1: look for a proper nontrivial subgroup with a genus-1
    // intermediate quotient.
    for (const Subgroup& h : subgroups(spec.group, guard)) {
        if (h.order() == 1 || h.order() == spec.group.order()) continue;
        if (quotient_genus(spec, h) == 1) {
            f.status = HypothesisStatus::VIOLATED;
            f.witness = h;
            f.reason = "intermediate quotient of genus 1";
            return f;
        }
    }
    f.status = HypothesisStatus::SATISFIED;
    return f;
}

}  // namespace

std::pair<HypothesisFactor, HypothesisFactor> double_torelli_hypothesis(const ProductSurfaceSpec& ps,
                                                    long subgroup_guard) {
    FreenessResult fr = freeness_check(ps);
    if (!fr.free) throw InputError("the action on the product is not free");
    return {hypothesis_factor(ps.spec1, subgroup_guard),
            hypothesis_factor(effective_spec2(ps), subgroup_guard)};
}

TensorRecovery tensor_factor_recovery(const std::vector<Matrix>& span) {
    if (span.empty()) throw InputError("tensor recovery needs a nonzero subspace");
    const std::size_t m = span.front().size();
    if (m == 0) throw InputError("tensor recovery: empty matrices");
    const std::size_t n = span.front().front().size();

    Matrix flattened, rows, cols;
    for (const Matrix& a : span) {
        if (a.size() != m || a.front().size() != n)
            throw InputError("tensor recovery: mismatched matrix shapes");
        std::vector<Rat> flat;
        flat.reserve(m * n);
        for (const auto& row : a) {
            if (row.size() != n) throw InputError("tensor recovery: ragged matrix");
            flat.insert(flat.end(), row.begin(), row.end());
            rows.push_back(row);
        }
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rat> col(m);
            for (std::size_t i = 0; i < m; ++i) col[i] = a[i][j];
            cols.push_back(std::move(col));
        }
        flattened.push_back(std::move(flat));
    }

    TensorRecovery rec;
    rec.u_basis = row_space_basis(std::move(cols));
    rec.v_basis = row_space_basis(std::move(rows));
    rec.span_dim = matrix_rank(std::move(flattened));
    rec.is_product = (rec.span_dim == rec.u_basis.size() * rec.v_basis.size()) && rec.span_dim > 0;
    return rec;
}

}  // namespace hodgelab
