#include "hodgelab/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hodgelab {

namespace {

long mod_reduce(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}

std::vector<long> reduce_tuple(const FiniteAbelianGroup& g, std::vector<long> raw) {
    if (raw.size() != g.rank())
        throw InputError("residue tuple length does not match group rank");
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = mod_reduce(raw[i], g.factor_orders[i]);
    return raw;
}

std::vector<std::vector<long>> enumerate_tuples(const FiniteAbelianGroup& g, long guard) {
    long n = g.order();
    if (n > guard) throw CapacityError("group order " + std::to_string(n) + " exceeds enumeration guard");
    std::vector<std::vector<long>> out;
    out.reserve(static_cast<std::size_t>(n));
    std::vector<long> cur(g.rank(), 0);
    for (long i = 0; i < n; ++i) {
        out.push_back(cur);
        for (std::size_t pos = g.rank(); pos-- > 0;) {
            if (++cur[pos] < g.factor_orders[pos]) break;
            cur[pos] = 0;
        }
    }
    return out;
}

}  // namespace

long FiniteAbelianGroup::order() const {
    long n = 1;
    for (long f : factor_orders) {
        if (n > (1L << 62) / f) throw CapacityError("group order overflows");
        n *= f;
    }
    return n;
}

FiniteAbelianGroup make_group(std::vector<long> factor_orders) {
    if (factor_orders.empty()) throw InputError("group needs at least one cyclic factor");
    for (long f : factor_orders)
        if (f < 2) throw InputError("cyclic factor orders must be >= 2");
    FiniteAbelianGroup g{std::move(factor_orders)};
    g.order();
    return g;
}

GroupElement reduce_element(const FiniteAbelianGroup& g, std::vector<long> raw) {
    return GroupElement{reduce_tuple(g, std::move(raw))};
}

GroupElement zero_element(const FiniteAbelianGroup& g) {
    return GroupElement{std::vector<long>(g.rank(), 0)};
}

GroupElement add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
    std::vector<long> r(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        r[i] = mod_reduce(a.residues.at(i) + b.residues.at(i), g.factor_orders[i]);
    return GroupElement{std::move(r)};
}

GroupElement negate(const FiniteAbelianGroup& g, const GroupElement& a) {
    std::vector<long> r(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        r[i] = mod_reduce(-a.residues.at(i), g.factor_orders[i]);
    return GroupElement{std::move(r)};
}

GroupElement scalar_mul(const FiniteAbelianGroup& g, long k, const GroupElement& a) {
    std::vector<long> r(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
        long n = g.factor_orders[i];
        r[i] = mod_reduce(mod_reduce(k, n) * a.residues.at(i) % n, n);
    }
    return GroupElement{std::move(r)};
}

bool is_zero(const GroupElement& a) {
    return std::all_of(a.residues.begin(), a.residues.end(), [](long v) { return v == 0; });
}

Character reduce_character(const FiniteAbelianGroup& g, std::vector<long> raw) {
    return Character{reduce_tuple(g, std::move(raw))};
}

Character zero_character(const FiniteAbelianGroup& g) {
    return Character{std::vector<long>(g.rank(), 0)};
}

Character dual_character(const FiniteAbelianGroup& g, const Character& chi) {
    std::vector<long> r(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        r[i] = mod_reduce(-chi.residues.at(i), g.factor_orders[i]);
    return Character{std::move(r)};
}

Character add_characters(const FiniteAbelianGroup& g, const Character& a, const Character& b) {
    std::vector<long> r(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        r[i] = mod_reduce(a.residues.at(i) + b.residues.at(i), g.factor_orders[i]);
    return Character{std::move(r)};
}

std::vector<Character> all_characters(const FiniteAbelianGroup& g) {
    std::vector<Character> out;
    for (auto& t : enumerate_tuples(g, kDefaultSubgroupGuard)) out.push_back(Character{t});
    return out;
}

std::vector<GroupElement> all_elements(const FiniteAbelianGroup& g) {
    std::vector<GroupElement> out;
    for (auto& t : enumerate_tuples(g, kDefaultSubgroupGuard)) out.push_back(GroupElement{t});
    return out;
}

Rat char_pairing(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& elem) {
    if (chi.residues.size() != g.rank() || elem.residues.size() != g.rank())
        throw InputError("character/element does not belong to the given group");
    Rat sum(0);
    for (std::size_t i = 0; i < g.rank(); ++i) {
        long n = g.factor_orders[i];
        long a = mod_reduce(chi.residues[i], n);
        long x = mod_reduce(elem.residues[i], n);
        sum += make_rat(Int(a) * Int(x), Int(n));
    }
    return frac_part(sum);
}

long element_order(const FiniteAbelianGroup& g, const GroupElement& a) {
    long ord = 1;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        long n = g.factor_orders[i];
        long k = n / std::gcd(n, mod_reduce(a.residues.at(i), n));
        ord = std::lcm(ord, k);
    }
    return ord;
}

long character_order(const FiniteAbelianGroup& g, const Character& chi) {
    return element_order(g, GroupElement{chi.residues});
}

bool Subgroup::contains(const GroupElement& e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
}

Subgroup closure(const FiniteAbelianGroup& g, std::vector<GroupElement> generators) {
    std::set<GroupElement> seen{zero_element(g)};
    std::vector<GroupElement> work{zero_element(g)};
    while (!work.empty()) {
        GroupElement e = work.back();
        work.pop_back();
        for (const auto& gen : generators) {
            GroupElement next = add(g, e, gen);
            if (seen.insert(next).second) work.push_back(next);
        }
    }
    Subgroup s;
    s.generators = std::move(generators);
    s.elements.assign(seen.begin(), seen.end());
    return s;
}

std::vector<Subgroup> subgroups(const FiniteAbelianGroup& g, long guard) {
    long n = g.order();
    if (n > guard) throw CapacityError("subgroup enumeration guard exceeded (order " +
                                       std::to_string(n) + " > " + std::to_string(guard) + ")");
    std::vector<GroupElement> ambient = all_elements(g);

    std::set<std::vector<GroupElement>> known;
    std::vector<Subgroup> out;
    std::vector<Subgroup> frontier;

    Subgroup trivial = closure(g, {});
    known.insert(trivial.elements);
    out.push_back(trivial);
    frontier.push_back(std::move(trivial));

    while (!frontier.empty()) {
        Subgroup cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& x : ambient) {
            if (cur.contains(x)) continue;
            auto gens = cur.generators;
            gens.push_back(x);
            Subgroup ext = closure(g, std::move(gens));
            if (known.insert(ext.elements).second) {
                out.push_back(ext);
                frontier.push_back(std::move(ext));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements < b.elements;
    });
    return out;
}

AutomorphismCheck validate_automorphism(const FiniteAbelianGroup& g, const GroupAutomorphism& phi) {
    const std::size_t m = g.rank();
    if (phi.matrix.size() != m)
        return {false, "matrix row count does not match group rank"};
    for (const auto& row : phi.matrix)
        if (row.size() != m) return {false, "matrix is not square of the group rank"};

    // Well-definedness: the image of n_i * e_i must be zero.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Int v = Int(phi.matrix[j][i]) * Int(g.factor_orders[i]);
            if (v % Int(g.factor_orders[j]) != 0)
                return {false, "matrix does not induce a homomorphism (factor " +
                                   std::to_string(i) + " -> " + std::to_string(j) + ")"};
        }
    }

    // Images of the standard generators, with order preservation as the
    // first diagnostic.
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<long> col(m);
        for (std::size_t j = 0; j < m; ++j) col[j] = phi.matrix[j][i];
        GroupElement img = reduce_element(g, std::move(col));
        if (element_order(g, img) != g.factor_orders[i])
            return {false, "image of generator " + std::to_string(i) + " has order " +
                               std::to_string(element_order(g, img)) + ", expected " +
                               std::to_string(g.factor_orders[i])};
        images.push_back(std::move(img));
    }

    Subgroup span = closure(g, images);
    if (span.order() != g.order())
        return {false, "generator images span a subgroup of order " + std::to_string(span.order()) +
                           " < " + std::to_string(g.order())};
    return {true, ""};
}

GroupElement apply_automorphism(const FiniteAbelianGroup& g, const GroupAutomorphism& phi,
                                const GroupElement& e) {
    const std::size_t m = g.rank();
    if (phi.matrix.size() != m) throw InputError("automorphism shape mismatch");
    std::vector<long> out(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        long n = g.factor_orders[j];
        long acc = 0;
        for (std::size_t i = 0; i < m; ++i) {
            long coef = mod_reduce(phi.matrix[j][i], n);
            acc = mod_reduce(acc + coef * mod_reduce(e.residues.at(i), n) % n, n);
        }
        out[j] = acc;
    }
    return GroupElement{std::move(out)};
}

Character pullback_character(const FiniteAbelianGroup& g, const GroupAutomorphism& phi,
                             const Character& chi) {
    const std::size_t m = g.rank();
    std::vector<long> out(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        Int acc(0);
        Int ni(g.factor_orders[i]);
        for (std::size_t j = 0; j < m; ++j) {
            Int term = Int(chi.residues.at(j)) * Int(phi.matrix[j][i]) * ni;
            Int nj(g.factor_orders[j]);
            if (term % nj != 0)
                throw InputError("pullback undefined: matrix is not a homomorphism");
            acc += term / nj;
        }
        Int red = acc % ni;
        if (red < 0) red += ni;
        out[i] = red.get_si();
    }
    return Character{std::move(out)};
}

std::optional<GroupAutomorphism> invert_automorphism(const FiniteAbelianGroup& g,
                                                     const GroupAutomorphism& phi) {
    if (!validate_automorphism(g, phi).valid) return std::nullopt;
    const std::size_t m = g.rank();
    std::vector<std::vector<long>> inv(m, std::vector<long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<long> target(m, 0);
        target[i] = 1;
        GroupElement want{target};
        bool found = false;
        for (const auto& x : all_elements(g)) {
            if (apply_automorphism(g, phi, x) == want) {
                for (std::size_t j = 0; j < m; ++j) inv[j][i] = x.residues[j];
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return GroupAutomorphism{std::move(inv)};
}

}  // namespace hodgelab
