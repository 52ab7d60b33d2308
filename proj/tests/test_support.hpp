#pragma once

#include <random>
#include <vector>

#include "hodgelab/covers.hpp"
#include "hodgelab/groups.hpp"

namespace hodgelab::testing {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline FiniteAbelianGroup random_group(Rng& rng, long max_order = 49) {
    static const std::vector<std::vector<long>> pool = {
        {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {11}, {12}, {13},
        {2, 2}, {2, 4}, {3, 3}, {2, 6}, {4, 4}, {5, 5}, {6, 6}, {7, 7}, {2, 2, 2}, {3, 9}};
    while (true) {
        const auto& factors = pool[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(pool.size()) - 1))];
        FiniteAbelianGroup g = make_group(factors);
        if (g.order() <= max_order) return g;
    }
}

inline GroupElement random_nonzero_element(Rng& rng, const FiniteAbelianGroup& g) {
    while (true) {
        std::vector<long> t(g.rank());
        for (std::size_t i = 0; i < g.rank(); ++i) t[i] = pick(rng, 0, g.factor_orders[i] - 1);
        GroupElement e{std::move(t)};
        if (!is_zero(e)) return e;
    }
}

/// Random validated spec: monodromies sum to zero and generate when the
/// quotient genus is zero (standard generators are appended when a random
/// draw fails to generate).
inline CoverSpec random_valid_spec(Rng& rng, const FiniteAbelianGroup& g, long g_y_min = 0,
                                   long g_y_max = 3, long max_extra_points = 6) {
    CoverSpec spec;
    spec.group = g;
    spec.quotient_genus = pick(rng, g_y_min, g_y_max);
    long r = pick(rng, spec.quotient_genus == 0 ? 2 : 0, max_extra_points);
    GroupElement sum = zero_element(g);
    long label = 0;
    for (long j = 0; j < r; ++j) {
        GroupElement m = random_nonzero_element(rng, g);
        sum = add(g, sum, m);
        spec.branch.push_back({"P" + std::to_string(++label), m, std::nullopt});
    }
    if (!is_zero(sum))
        spec.branch.push_back({"P" + std::to_string(++label), negate(g, sum), std::nullopt});

    if (spec.quotient_genus == 0) {
        std::vector<GroupElement> gens;
        for (const auto& bp : spec.branch) gens.push_back(bp.monodromy);
        if (closure(g, gens).order() != g.order()) {
            for (std::size_t i = 0; i < g.rank(); ++i) {
                std::vector<long> e(g.rank(), 0);
                e[i] = 1;
                GroupElement gen{e};
                spec.branch.push_back({"G" + std::to_string(i), gen, std::nullopt});
                spec.branch.push_back({"G" + std::to_string(i) + "'", negate(g, gen), std::nullopt});
            }
        }
    }
    return validate_spec(std::move(spec));
}

inline GroupAutomorphism random_valid_automorphism(Rng& rng, const FiniteAbelianGroup& g) {
    const std::size_t m = g.rank();
    while (true) {
        GroupAutomorphism phi;
        phi.matrix.assign(m, std::vector<long>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                phi.matrix[i][j] = pick(rng, 0, g.factor_orders[i] - 1);
        if (validate_automorphism(g, phi).valid) return phi;
    }
}

}  // namespace hodgelab::testing
