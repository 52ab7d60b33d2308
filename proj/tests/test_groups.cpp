#include <doctest.h>

#include <set>

#include "test_support.hpp"

using namespace hodgelab;
using hodgelab::testing::Rng;

TEST_SUITE_BEGIN("groups");

TEST_CASE("char_pairing on cyclic and split groups") {
    auto z3 = make_group({3});
    CHECK(char_pairing(z3, Character{{1}}, GroupElement{{2}}) == make_rat(2, 3));

    auto z55 = make_group({5, 5});
    CHECK(char_pairing(z55, Character{{1, 1}}, GroupElement{{1, 0}}) == make_rat(1, 5));

    CHECK(char_pairing(z55, zero_character(z55), GroupElement{{3, 4}}) == 0);

    CHECK_THROWS_AS(char_pairing(z3, Character{{1}}, GroupElement{{1, 0}}), InputError);
}

TEST_CASE("element orders") {
    auto z55 = make_group({5, 5});
    CHECK(element_order(z55, GroupElement{{0, 1}}) == 5);
    auto z4 = make_group({4});
    CHECK(element_order(z4, GroupElement{{2}}) == 2);
    CHECK(element_order(z4, zero_element(z4)) == 1);
}

TEST_CASE("subgroup counts") {
    CHECK(subgroups(make_group({6})).size() == 4);
    CHECK(subgroups(make_group({7})).size() == 2);

    // Independent oracle for (Z/5)^2: closures of all element pairs.
    auto z55 = make_group({5, 5});
    std::set<std::vector<GroupElement>> oracle;
    auto elems = all_elements(z55);
    for (const auto& a : elems)
        for (const auto& b : elems) oracle.insert(closure(z55, {a, b}).elements);
    CHECK(oracle.size() == 8);
    CHECK(subgroups(z55).size() == oracle.size());
}

TEST_CASE("subgroup enumeration guard") {
    CHECK_THROWS_AS(subgroups(make_group({1024, 1024})), CapacityError);
}

TEST_CASE("automorphism validation") {
    auto z55 = make_group({5, 5});
    // Columns (1,1) and (r,1), r = 2: determinant 1 - r is invertible mod 5.
    GroupAutomorphism twist{{{1, 2}, {1, 1}}};
    CHECK(validate_automorphism(z55, twist).valid);

    GroupAutomorphism identity{{{1, 0}, {0, 1}}};
    CHECK(validate_automorphism(z55, identity).valid);

    GroupAutomorphism zero{{{0, 0}, {0, 0}}};
    auto check = validate_automorphism(z55, zero);
    CHECK_FALSE(check.valid);
    CHECK_FALSE(check.reason.empty());

    // e_0 -> (1,1) is not a homomorphism on Z/2 x Z/4; e_0 -> (1,2) is.
    auto z24 = make_group({2, 4});
    GroupAutomorphism bad{{{1, 0}, {1, 1}}};
    CHECK_FALSE(validate_automorphism(z24, bad).valid);
    GroupAutomorphism good{{{1, 0}, {2, 1}}};
    CHECK(validate_automorphism(z24, good).valid);
}

TEST_CASE("pairing duality, exhaustive on groups of order <= 200") {
    // chi and its dual pair to 0 or 1 against every element, 0 exactly when
    // chi(g) = 1.
    for (const auto& factors :
         {std::vector<long>{2}, {5}, {8}, {13}, {24}, {199}, {2, 2}, {5, 5}, {6, 4}, {2, 2, 3}, {8, 25}}) {
        auto g = make_group(factors);
        REQUIRE(g.order() <= 200);
        for (const auto& chi : all_characters(g)) {
            Character dual = dual_character(g, chi);
            for (const auto& e : all_elements(g)) {
                Rat a = char_pairing(g, chi, e);
                Rat b = char_pairing(g, dual, e);
                if (a == 0) {
                    CHECK(b == 0);
                } else {
                    CHECK(a + b == 1);
                }
            }
        }
    }
}

TEST_CASE("pairing is additive mod 1") {
    Rng rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = testing::random_group(rng);
        auto chi = Character{testing::random_nonzero_element(rng, g).residues};
        auto a = testing::random_nonzero_element(rng, g);
        auto b = testing::random_nonzero_element(rng, g);
        Rat lhs = char_pairing(g, chi, add(g, a, b));
        Rat rhs = frac_part(char_pairing(g, chi, a) + char_pairing(g, chi, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("valid automorphisms preserve element orders") {
    Rng rng(771);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = testing::random_group(rng, 36);
        auto phi = testing::random_valid_automorphism(rng, g);
        for (const auto& e : all_elements(g))
            CHECK(element_order(g, apply_automorphism(g, phi, e)) == element_order(g, e));
    }
}

TEST_CASE("subgroup list is closed under pairwise joins") {
    for (const auto& factors : {std::vector<long>{12}, {3, 3}, {2, 4}}) {
        auto g = make_group(factors);
        auto subs = subgroups(g);
        std::set<std::vector<GroupElement>> listed;
        for (const auto& s : subs) listed.insert(s.elements);
        for (const auto& s : subs) {
            for (const auto& t : subs) {
                auto gens = s.generators;
                gens.insert(gens.end(), t.generators.begin(), t.generators.end());
                CHECK(listed.count(closure(g, gens).elements) == 1);
            }
        }
    }
}

TEST_CASE("pullback character matches pointwise composition") {
    Rng rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = testing::random_group(rng, 36);
        auto phi = testing::random_valid_automorphism(rng, g);
        auto chi = Character{testing::random_nonzero_element(rng, g).residues};
        Character pulled = pullback_character(g, phi, chi);
        for (const auto& e : all_elements(g))
            CHECK(char_pairing(g, pulled, e) == char_pairing(g, chi, apply_automorphism(g, phi, e)));
    }
}

TEST_CASE("automorphism inversion round trip") {
    Rng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = testing::random_group(rng, 36);
        auto phi = testing::random_valid_automorphism(rng, g);
        auto inv = invert_automorphism(g, phi);
        REQUIRE(inv.has_value());
        for (const auto& e : all_elements(g))
            CHECK(apply_automorphism(g, *inv, apply_automorphism(g, phi, e)) == e);
    }
}

TEST_SUITE_END();
