#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hodgelab/json_io.hpp"

namespace hodgelab {

/// Outcome of one reproduction target: a deterministic rendered artifact, a
/// machine-readable form, and the list of failed embedded assertions.
struct ReproResult {
    bool ok = true;
    std::string markdown;
    Json json;
    std::vector<std::string> failures;
};

/// Image-bound failure table for the small cyclic configurations.
ReproResult repro_dimension_failure_table();

/// Hodge/bicanonical dimensions and kernel bound across the k-family.
ReproResult repro_k_family_dims(long k_from, long k_to);

/// The three (Z/d)^2 cohomology tables, zero-pattern assertions, and the
/// exact factor-2 multiplication rank. Requires d prime, r not 0 or 1 mod d.
ReproResult repro_squared_cover_tables(long d, long r);

/// Exhaustive remainder-sum sweeps (d_max 40 at r = 4; d_max 24 at r = 4,5,6).
ReproResult repro_lemma46_sweep(int jobs, std::uint64_t guard);

/// Building-data equivalences for the five-point triple cover, with a
/// perturbation cross-check.
ReproResult repro_pardini_example();

/// Dispatch by target id; throws InputError for unknown ids.
ReproResult run_repro(const std::string& id, long k_from, long k_to, long d, long r, int jobs,
                      std::uint64_t guard);

}  // namespace hodgelab
