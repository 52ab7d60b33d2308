#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodgelab/covers.hpp"

namespace hodgelab {

/// Remainder-sum profile: lambda(i) * d = sum_j (i * m_j mod d) for
/// i = 1..d-1, defined for positive parts m_j with sum m_j = d.
struct LambdaProfile {
    long d = 0;
    std::vector<long> m;
    std::vector<long> lambda;  // lambda[i-1] = lambda(i)
    long count_ones = 0;

    long at(long i) const { return lambda.at(static_cast<std::size_t>(i - 1)); }
};

LambdaProfile lambda_profile(long d, const std::vector<long>& m);

struct SweepViolation {
    long d = 0;
    long r = 0;
    std::vector<long> m;
    long count_ones = 0;
};

struct SweepReport {
    std::uint64_t checked = 0;
    std::vector<SweepViolation> violations;
    long wall_time_ms = 0;
};

inline constexpr std::uint64_t kDefaultSweepGuard = 200'000'000ULL;

/// Exhaustively verifies count_ones < (d-1)/2 over all compositions of every
/// d <= d_max into r positive parts, for each r >= 4 in r_values. Workers
/// split the colexicographic enumeration into contiguous chunks; the merged
/// report is independent of the worker count.
SweepReport verify_bound(long d_max, const std::vector<long>& r_values, int jobs = 1,
                         std::uint64_t guard = kDefaultSweepGuard);

struct ZeroLinkReport {
    long d = 0;
    long zero_eigenspace_count = 0;  // # { chi != 0 : dims(chi) = 0 }
    long lambda_one_count = 0;       // # { i : sum_j <i m_j / d> = 1 }
    bool link_holds = false;
    std::optional<bool> bound_holds;  // set when the r >= 4 hypothesis applies
    std::vector<std::string> notes;
};

/// Consistency of vanishing eigenspaces with the remainder-sum count on a
/// cyclic cover of the rational line.
ZeroLinkReport zero_character_link(const CoverSpec& spec);

}  // namespace hodgelab
