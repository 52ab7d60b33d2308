#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hodgelab/covers.hpp"
#include "hodgelab/groups.hpp"
#include "hodgelab/numeric.hpp"

namespace hodgelab {

/// Two covers of the same group assembled into a product surface; the
/// optional twist re-parametrizes the action on the second factor.
struct ProductSurfaceSpec {
    CoverSpec spec1;
    CoverSpec spec2;
    std::optional<GroupAutomorphism> twist;
};

/// Validates both specs, the shared group, and the genus >= 2 requirement;
/// returns the normalized spec.
ProductSurfaceSpec validate_product_spec(ProductSurfaceSpec ps);

/// The second factor with the twist applied.
CoverSpec effective_spec2(const ProductSurfaceSpec& ps);

struct FreenessResult {
    bool free = false;
    std::optional<GroupElement> witness;  // a common stabilizer element
};

FreenessResult freeness_check(const ProductSurfaceSpec& ps);

struct HodgeSummary {
    long q = 0;        // irregularity
    long p_g = 0;      // h^{2,0}
    long h11 = 0;      // h^{1,1}
    long t1 = 0;       // invariant bicanonical dimension of factor 1
    long t2 = 0;
    long h1_theta = 0;  // h^1(T_S) = t1 + t2
    long euler = 0;
    long chi_o = 0;
};

HodgeSummary hodge_summary(const ProductSurfaceSpec& ps);

/// Internal form used by the reports and the inversion-invariance tests.
HodgeSummary hodge_from_tables(const EigenTable& t1, const EigenTable& t2, long bicanon1,
                               long bicanon2);

/// Upper bound for the image of the factor-i multiplication map, counting
/// unordered {chi, chi*} pairs once, symmetric squares on self-dual
/// characters, capped at the target dimension.
long image_dim_bound(const ProductSurfaceSpec& ps, int factor);
long image_bound_from_tables(const EigenTable& self, const EigenTable& other, long target);

enum class TorelliVerdict { FAILS_BY_DIMENSION, NECESSARY_CONDITION_HOLDS, SURJECTIVE_EXACT };
std::string to_string(TorelliVerdict v);

enum class DPhi1Verdict { FAILS_BY_DIMENSION, UNDETERMINED_BY_DIMENSION, VACUOUSLY_SURJECTIVE };
std::string to_string(DPhi1Verdict v);

struct DPhi1Factor {
    long source = 0;  // q_i (q_i + 1) / 2
    long target = 0;  // t_i
    DPhi1Verdict verdict = DPhi1Verdict::UNDETERMINED_BY_DIMENSION;
};

DPhi1Factor dphi1_factor(long q_i, long t_i);

struct FactorReport {
    std::set<Character> admissible;
    long image_bound = 0;
    std::optional<long> exact_rank;
    long target = 0;
    TorelliVerdict verdict = TorelliVerdict::NECESSARY_CONDITION_HOLDS;
};

struct TorelliReport {
    FactorReport factor1;
    FactorReport factor2;
    long kernel_lower_bound = 0;
    DPhi1Factor dphi1_factor1;
    DPhi1Factor dphi1_factor2;
    std::vector<std::string> warnings;
};

/// Dimension bounds, optional exact ranks (rational quotients only), and the
/// kernel lower bound for the weight-2 period map derivative.
TorelliReport torelli_report(const ProductSurfaceSpec& ps, bool exact = false);

std::pair<DPhi1Factor, DPhi1Factor> dphi1_report(const ProductSurfaceSpec& ps);

enum class HypothesisStatus { SATISFIED, VIOLATED, NOT_APPLICABLE };
std::string to_string(HypothesisStatus s);

struct HypothesisFactor {
    HypothesisStatus status = HypothesisStatus::NOT_APPLICABLE;
    std::optional<Subgroup> witness;
    std::string reason;
};

/// The genus hypothesis of the double-Torelli criterion, per factor:
/// quotient genus >= 2 passes outright; quotient genus 1 requires that no
/// proper nontrivial subgroup gives a genus-1 intermediate quotient.
std::pair<HypothesisFactor, HypothesisFactor> double_torelli_hypothesis(const ProductSurfaceSpec& ps,
                                                    long subgroup_guard = kDefaultSubgroupGuard);

struct TensorRecovery {
    bool is_product = false;
    Matrix u_basis;  // row-reduced basis of the joint column span
    Matrix v_basis;  // row-reduced basis of the joint row span
    std::size_t span_dim = 0;
};

/// Recovers U' and V' from a subspace of U (x) V given by spanning matrices;
/// reports is_product = false when dim span != dim U' * dim V'.
TensorRecovery tensor_factor_recovery(const std::vector<Matrix>& span);

}  // namespace hodgelab
