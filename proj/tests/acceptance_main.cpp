// Acceptance suite: prints one PASS/FAIL line per criterion; the process
// exits nonzero when any criterion fails.

#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include "hodgelab/families.hpp"
#include "hodgelab/lemma46.hpp"
#include "hodgelab/repro.hpp"
#include "hodgelab/rrspace.hpp"
#include "test_support.hpp"

using namespace hodgelab;
using hodgelab::testing::Rng;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : (" [" + detail + "]").c_str());
    if (!ok) ++failures;
}

bool criterion1_dimension_failure_table() {
    for (auto [d, gp] : {std::pair<long, long>{2, 2}, {2, 3}, {2, 4}, {2, 5},
                         {3, 3}, {3, 2}, {4, 2}, {5, 2}}) {
        ProductSurfaceSpec ps = dimension_failure_surface(d, gp);
        long bound = image_dim_bound(ps, 1);
        if (bound != dimension_failure_closed_form(d, gp)) return false;
        if (bound >= 3 * gp - 3) return false;
    }
    // The two spelled-out instances: 4 < 6 and 2 < 3.
    if (image_dim_bound(dimension_failure_surface(3, 3), 1) != 4) return false;
    if (image_dim_bound(dimension_failure_surface(5, 2), 1) != 2) return false;
    return true;
}

bool criterion2_five_point_example() {
    CoverSpec spec = k_family_cover(2);
    if (genus(spec) != 3) return false;
    EigenTable t = eigentable(spec);
    std::multiset<long> dims;
    for (const auto& [chi, d] : t.dims) dims.insert(d);
    if (dims != std::multiset<long>{0, 1, 2}) return false;
    BuildingData bd = building_degrees(spec);
    std::multiset<long> degs;
    for (const auto& [chi, d] : bd.l_degrees) degs.insert(d);
    return degs == std::multiset<long>{0, 2, 3};
}

bool criterion3_k_family(std::string& detail) {
    for (long k = 2; k <= 10; ++k) {
        ProductSurfaceSpec ps = k_family_surface(k);
        HodgeSummary h = hodge_summary(ps);
        TorelliReport rep = torelli_report(ps);
        bool ok = h.p_g == 6 * k - 6 && h.h11 == 12 * k - 10 && h.h1_theta == 3 * k + 2 &&
                  invariant_bicanonical_dim(ps.spec2) == 3 * k - 4 &&
                  rep.kernel_lower_bound >= 2 && rep.factor1.image_bound == 4 &&
                  rep.factor1.target == 6;
        if (!ok) {
            detail = "k = " + std::to_string(k);
            return false;
        }
    }
    detail = "k = 2..10";
    return true;
}

bool criterion4_sweep(std::string& detail) {
    SweepReport wide = verify_bound(40, {4}, 4);
    SweepReport deep = verify_bound(24, {4, 5, 6}, 4);
    std::uint64_t total = wide.checked + deep.checked;
    long wall = wide.wall_time_ms + deep.wall_time_ms;
    std::ostringstream os;
    os << total << " instances in " << wall << " ms";
    detail = os.str();
    return wide.violations.empty() && deep.violations.empty() && total >= 100000 && wall < 60000;
}

bool criterion5_squared_cover_tables() {
    for (auto [d, r] : {std::pair<long, long>{3, 2}, {5, 2}, {7, 2}, {7, 3}}) {
        ReproResult res = repro_squared_cover_tables(d, r);
        if (!res.ok) return false;
    }
    return true;
}

bool criterion6_property_suites(std::string& detail) {
    long checked = 0;

    {  // genus-sum and Serre duality
        Rng rng(61001);
        for (int trial = 0; trial < 200; ++trial) {
            auto g = testing::random_group(rng, 49);
            CoverSpec spec = testing::random_valid_spec(rng, g);
            EigenTable t = eigentable(spec);
            long total = 0;
            for (const auto& [chi, dim] : t.dims) total += dim;
            if (total != genus(spec)) return false;
            for (const auto& chi : all_characters(g)) {
                if (is_zero(GroupElement{chi.residues})) continue;
                long ram = 0;
                for (const auto& bp : spec.branch)
                    if (char_pairing(g, chi, bp.monodromy) != 0) ++ram;
                if (t.dim(chi) + t.dim(dual_character(g, chi)) !=
                    2 * spec.quotient_genus - 2 + ram)
                    return false;
            }
            ++checked;
        }
    }

    {  // twist equivariance
        Rng rng(61002);
        for (int trial = 0; trial < 200; ++trial) {
            auto g = testing::random_group(rng, 36);
            CoverSpec spec = testing::random_valid_spec(rng, g);
            auto phi = testing::random_valid_automorphism(rng, g);
            EigenTable base = eigentable(spec);
            EigenTable twisted = eigentable(twist_spec(spec, phi));
            for (const auto& chi : all_characters(g))
                if (twisted.dim(chi) != base.dim(pullback_character(g, phi, chi))) return false;
            ++checked;
        }
    }

    {  // Euler and chi(O) identities on free product specs
        Rng rng(61003);
        for (int trial = 0; trial < 200; ++trial) {
            auto g = testing::random_group(rng, 36);
            ProductSurfaceSpec ps;
            CoverSpec c1;
            c1.group = g;
            c1.quotient_genus = testing::pick(rng, 2, 3);
            ps.spec1 = validate_spec(std::move(c1));
            ps.spec2 = testing::random_valid_spec(rng, g, 0, 2);
            if (genus(ps.spec2) < 2) continue;
            if (testing::pick(rng, 0, 1)) ps.twist = testing::random_valid_automorphism(rng, g);
            ps = validate_product_spec(std::move(ps));
            HodgeSummary h = hodge_summary(ps);
            long g1 = genus(ps.spec1), g2 = genus(effective_spec2(ps)), n = g.order();
            if (h.euler * n != (2 - 2 * g1) * (2 - 2 * g2)) return false;
            if (h.chi_o * n != (g1 - 1) * (g2 - 1)) return false;
            if (h.chi_o != 1 - h.q + h.p_g) return false;
            if (h.euler != 2 - 4 * h.q + 2 * h.p_g + h.h11) return false;
            ++checked;
        }
    }

    {  // Eigenspace positivity and vanishing control (cyclic covers)
        Rng rng(61004);
        for (int trial = 0; trial < 300; ++trial) {
            long d = testing::pick(rng, 2, 12);
            auto g = make_group({d});
            CoverSpec spec = testing::random_valid_spec(rng, g, 0, 3);
            EigenTable t = eigentable(spec);
            auto subs = subgroups(g);
            if (spec.quotient_genus >= 2) {
                for (const auto& [chi, dim] : t.dims)
                    if (dim < spec.quotient_genus - 1) return false;
            }
            if (spec.quotient_genus == 1 && genus(spec) >= 2) {
                for (const auto& [chi, dim] : t.dims)
                    if (std::gcd(chi.residues[0], d) == 1 && dim < 1) return false;
            }
            for (const auto& chi : all_characters(g)) {
                if (is_zero(GroupElement{chi.residues})) continue;
                const Subgroup* kernel = nullptr;
                for (const auto& h : subs) {
                    bool flat = true;
                    for (const auto& e : h.elements)
                        if (char_pairing(g, chi, e) != 0) flat = false;
                    if (flat && (!kernel || h.order() > kernel->order())) kernel = &h;
                }
                long gq = quotient_genus(spec, *kernel);
                long dim = t.dim(chi), dual_dim = t.dim(dual_character(g, chi));
                if (gq == 0 && (dim != 0 || dual_dim != 0)) return false;
                if (gq >= 2 && spec.quotient_genus == 0 && dim == 0 && dual_dim == 0) return false;
            }
            long mono_sum = 0;
            for (const auto& bp : spec.branch) mono_sum += bp.monodromy.residues[0];
            if (spec.quotient_genus == 0 && spec.branch.size() >= 4 && mono_sum == d) {
                long zeros = 0;
                for (const auto& [chi, dim] : t.dims)
                    if (!is_zero(GroupElement{chi.residues}) && dim == 0) ++zeros;
                if (2 * zeros >= d - 1) return false;
            }
            ++checked;
        }
    }

    {  // tensor recovery round trip
        Rng rng(61005);
        for (int trial = 0; trial < 200; ++trial) {
            std::size_t du = static_cast<std::size_t>(testing::pick(rng, 1, 3));
            std::size_t dv = static_cast<std::size_t>(testing::pick(rng, 1, 3));
            std::size_t au = du + static_cast<std::size_t>(testing::pick(rng, 0, 2));
            std::size_t av = dv + static_cast<std::size_t>(testing::pick(rng, 0, 2));
            auto sample = [&](std::size_t dim, std::size_t amb) {
                while (true) {
                    Matrix b(dim, std::vector<Rat>(amb));
                    for (auto& row : b)
                        for (auto& v : row) v = Rat(testing::pick(rng, -4, 4));
                    if (matrix_rank(b) == dim) return b;
                }
            };
            Matrix u = sample(du, au), v = sample(dv, av);
            std::vector<Matrix> span;
            for (const auto& uu : u)
                for (const auto& vv : v) {
                    Matrix prod(au, std::vector<Rat>(av));
                    for (std::size_t i = 0; i < au; ++i)
                        for (std::size_t j = 0; j < av; ++j) prod[i][j] = uu[i] * vv[j];
                    span.push_back(std::move(prod));
                }
            TensorRecovery rec = tensor_factor_recovery(span);
            if (!rec.is_product || rec.u_basis != row_space_basis(u) ||
                rec.v_basis != row_space_basis(v))
                return false;
            ++checked;
        }
    }

    detail = std::to_string(checked) + " randomized instances";
    return checked >= 1000;
}

bool criterion7_freeness() {
    ProductSurfaceSpec untwisted;
    untwisted.spec1 = squared_cover_c1(5);
    untwisted.spec2 = squared_cover_c2(5);
    FreenessResult shared = freeness_check(untwisted);
    if (shared.free || !shared.witness) return false;

    for (auto [d, r] : {std::pair<long, long>{3, 2}, {5, 2}, {7, 2}, {7, 3}})
        if (!freeness_check(squared_cover_surface(d, r)).free) return false;

    for (long k = 2; k <= 6; ++k)
        if (!freeness_check(k_family_surface(k)).free) return false;
    return true;
}

bool criterion8_dphi1() {
    for (long k = 2; k <= 10; ++k) {
        auto [f1, f2] = dphi1_report(k_family_surface(k));
        if (f2.verdict != DPhi1Verdict::FAILS_BY_DIMENSION || f2.source != 0 ||
            f2.target != 3 * k - 4)
            return false;
        if (f1.verdict != DPhi1Verdict::UNDETERMINED_BY_DIMENSION || f1.source != 6 ||
            f1.target != 6)
            return false;
    }
    return true;
}

}  // namespace

int main() {
    std::string detail;

    report(1, "image-bound failure table (8 configurations, exact)", criterion1_dimension_failure_table());
    report(2, "five-point triple cover: genus, eigenspace multiset, building degrees",
           criterion2_five_point_example());

    detail.clear();
    report(3, "k-family Hodge numbers and kernel bound", criterion3_k_family(detail), detail);

    detail.clear();
    report(4, "remainder-sum sweeps (d_max 40 @ r=4; d_max 24 @ r=4,5,6)",
           criterion4_sweep(detail), detail);

    report(5, "squared-cover tables d in {3,5,7} with exact factor-2 rank",
           criterion5_squared_cover_tables());

    detail.clear();
    report(6, "randomized property suites", criterion6_property_suites(detail), detail);

    report(7, "freeness verdicts with witnesses", criterion7_freeness());
    report(8, "dPhi1 dimension report across the k-family", criterion8_dphi1());

    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
