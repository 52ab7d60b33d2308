#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgelab/numeric.hpp"

namespace hodgelab {

/// Finite abelian group presented as Z/n_1 x ... x Z/n_m, each n_i >= 2.
/// The dual group is identified with the group through this presentation.
struct FiniteAbelianGroup {
    std::vector<long> factor_orders;

    std::size_t rank() const { return factor_orders.size(); }
    long order() const;
    bool operator==(const FiniteAbelianGroup& other) const = default;
};

FiniteAbelianGroup make_group(std::vector<long> factor_orders);

/// Residue tuple, canonical form 0 <= residues[i] < n_i.
struct GroupElement {
    std::vector<long> residues;
    bool operator==(const GroupElement& other) const = default;
    auto operator<=>(const GroupElement& other) const = default;
};

/// Characters carry the same tuple shape; the dual character is
/// componentwise negation.
struct Character {
    std::vector<long> residues;
    bool operator==(const Character& other) const = default;
    auto operator<=>(const Character& other) const = default;
};

/// Integer matrix acting on residue tuples, column i = image of the i-th
/// standard generator.
struct GroupAutomorphism {
    std::vector<std::vector<long>> matrix;
};

GroupElement reduce_element(const FiniteAbelianGroup& g, std::vector<long> raw);
GroupElement zero_element(const FiniteAbelianGroup& g);
GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const FiniteAbelianGroup& g, const GroupElement& a);
GroupElement scalar_mul(const FiniteAbelianGroup& g, long k, const GroupElement& a);
bool is_zero(const GroupElement& a);

Character reduce_character(const FiniteAbelianGroup& g, std::vector<long> raw);
Character zero_character(const FiniteAbelianGroup& g);
Character dual_character(const FiniteAbelianGroup& g, const Character& chi);
Character add_characters(const FiniteAbelianGroup& g, const Character& a, const Character& b);

/// All characters in lexicographic tuple order (guarded by group order).
std::vector<Character> all_characters(const FiniteAbelianGroup& g);
std::vector<GroupElement> all_elements(const FiniteAbelianGroup& g);

/// Fractional part of sum_i chi_i g_i / n_i; zero exactly when chi(g) = 1.
Rat char_pairing(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& elem);

/// Least k >= 1 with k*a = 0.
long element_order(const FiniteAbelianGroup& g, const GroupElement& a);
long character_order(const FiniteAbelianGroup& g, const Character& chi);

struct Subgroup {
    std::vector<GroupElement> generators;
    std::vector<GroupElement> elements;  // sorted, canonical

    long order() const { return static_cast<long>(elements.size()); }
    bool contains(const GroupElement& e) const;
    bool operator==(const Subgroup& other) const { return elements == other.elements; }
};

Subgroup closure(const FiniteAbelianGroup& g, std::vector<GroupElement> generators);

inline constexpr long kDefaultSubgroupGuard = 1'000'000;

/// Complete duplicate-free list of subgroups, trivial and full included.
/// Throws CapacityError when the group order exceeds the guard.
std::vector<Subgroup> subgroups(const FiniteAbelianGroup& g, long guard = kDefaultSubgroupGuard);

struct AutomorphismCheck {
    bool valid = false;
    std::string reason;
};

AutomorphismCheck validate_automorphism(const FiniteAbelianGroup& g, const GroupAutomorphism& phi);

GroupElement apply_automorphism(const FiniteAbelianGroup& g, const GroupAutomorphism& phi,
                                const GroupElement& e);

/// The character chi . phi, i.e. the pullback along phi on the dual side.
Character pullback_character(const FiniteAbelianGroup& g, const GroupAutomorphism& phi,
                             const Character& chi);

/// Inverse automorphism (exists whenever phi is valid).
std::optional<GroupAutomorphism> invert_automorphism(const FiniteAbelianGroup& g,
                                                     const GroupAutomorphism& phi);

}  // namespace hodgelab
