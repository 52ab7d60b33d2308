#include "hodgelab/families.hpp"

namespace hodgelab {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

BranchPoint point(std::string label, std::vector<long> monodromy) {
    return BranchPoint{std::move(label), GroupElement{std::move(monodromy)}, std::nullopt};
}

}  // namespace

CoverSpec free_cyclic_cover(long d, long g_y) {
    if (g_y < 1) throw InputError("a free cyclic action needs quotient genus >= 1");
    CoverSpec spec;
    spec.group = make_group({d});
    spec.quotient_genus = g_y;
    return validate_spec(std::move(spec));
}

CoverSpec k_family_cover(long k) {
    if (k < 2) throw InputError("the k-family needs k >= 2");
    CoverSpec spec;
    spec.group = make_group({3});
    spec.quotient_genus = 0;
    for (long j = 1; j <= 3 * k - 2; ++j) spec.branch.push_back(point("P" + std::to_string(j), {1}));
    spec.branch.push_back(point("P" + std::to_string(3 * k - 1), {2}));
    return validate_spec(std::move(spec));
}

ProductSurfaceSpec k_family_surface(long k) {
    ProductSurfaceSpec ps;
    ps.spec1 = free_cyclic_cover(3, 3);
    ps.spec2 = k_family_cover(k);
    return validate_product_spec(std::move(ps));
}

CoverSpec squared_cover_c1(long d) {
    if (d < 3) throw InputError("the squared-cover family needs d >= 3");
    CoverSpec spec;
    spec.group = make_group({d, d});
    spec.quotient_genus = 0;
    spec.branch.push_back(point("P", {1, 0}));
    spec.branch.push_back(point("P'", {d - 1, 0}));
    for (long j = 1; j <= d; ++j) spec.branch.push_back(point("P" + std::to_string(j), {0, 1}));
    return validate_spec(std::move(spec));
}

CoverSpec squared_cover_c2(long d) {
    if (d < 3) throw InputError("the squared-cover family needs d >= 3");
    CoverSpec spec;
    spec.group = make_group({d, d});
    spec.quotient_genus = 0;
    spec.branch.push_back(point("P", {1, 0}));
    spec.branch.push_back(point("P'", {d - 1, 0}));
    spec.branch.push_back(point("Q", {0, 1}));
    spec.branch.push_back(point("Q'", {0, d - 1}));
    return validate_spec(std::move(spec));
}

GroupAutomorphism squared_cover_twist(long d, long r) {
    long rr = ((r % d) + d) % d;
    return GroupAutomorphism{{{1, rr}, {1, 1}}};
}

ProductSurfaceSpec squared_cover_surface(long d, long r) {
    if (!is_prime(d)) throw InputError("the squared-cover family requires a prime d");
    long rr = ((r % d) + d) % d;
    if (rr == 0 || rr == 1) throw InputError("twist parameter r must avoid 0 and 1 mod d");
    ProductSurfaceSpec ps;
    ps.spec1 = squared_cover_c1(d);
    ps.spec2 = squared_cover_c2(d);
    ps.twist = squared_cover_twist(d, rr);
    return validate_product_spec(std::move(ps));
}

ProductSurfaceSpec dimension_failure_surface(long d, long g_prime) {
    if (d < 2 || g_prime < 2) throw InputError("dimension-failure table needs d >= 2, g' >= 2");
    ProductSurfaceSpec ps;
    ps.spec1 = free_cyclic_cover(d, g_prime);
    // Factor 2: enough monodromy-1 points that every nonzero eigenspace is
    // nonzero and the genus is at least 2.
    long points = (d == 2) ? 6 : 2 * d;
    CoverSpec c2;
    c2.group = make_group({d});
    c2.quotient_genus = 0;
    for (long j = 1; j <= points; ++j)
        c2.branch.push_back(BranchPoint{"P" + std::to_string(j), GroupElement{{1}}, std::nullopt});
    ps.spec2 = validate_spec(std::move(c2));
    return validate_product_spec(std::move(ps));
}

long dimension_failure_closed_form(long d, long g_prime) {
    long m = g_prime - 1;
    if (d % 2 == 0) return (d / 2 - 1) * m * m + g_prime * m / 2;
    return ((d - 1) / 2) * m * m;
}

}  // namespace hodgelab
