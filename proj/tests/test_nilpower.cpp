#include "thickset/nilpower.hpp"

#include <doctest.h>

#include <set>

using namespace thickset;
using namespace thickset::nilpower;

TEST_CASE("power subgroup structure and indices") {
    CHECK(power_subgroup(1).index() == 1);
    CHECK(power_subgroup(2).index() == 4);
    CHECK(power_subgroup(3).index() == 27);
    CHECK(power_subgroup(4).index() == 32);

    HeisSubgroup h2 = power_subgroup(2);
    CHECK(h2.center_mod == 1);  // [x,y]^2-relations reach the full center
    HeisSubgroup h3 = power_subgroup(3);
    CHECK(h3.center_mod == 3);
    HeisSubgroup h4 = power_subgroup(4);
    CHECK(h4.center_mod == 2);
}

TEST_CASE("membership agrees with generator powers") {
    for (int n : {2, 3, 4}) {
        HeisSubgroup H = power_subgroup(n);
        for (const HeisElem& g :
             {HeisElem{1, 0, 0}, HeisElem{0, 1, 0}, HeisElem{1, 1, 0}, HeisElem{1, -1, 2}}) {
            CHECK(subgroup_membership(H, heis_pow(g, n)));
            CHECK(!subgroup_membership(H, g));
        }
        // Closure under product on sampled members.
        HeisElem a = heis_pow(HeisElem{1, 0, 0}, n), b = heis_pow(HeisElem{0, 1, 0}, n);
        CHECK(subgroup_membership(H, heis_mul(a, b)));
        CHECK(subgroup_membership(H, heis_commutator(a, b)));
        CHECK(subgroup_membership(H, heis_inv(a)));
    }
    // Center membership is the center_mod class.
    CHECK(subgroup_membership(power_subgroup(2), HeisElem{0, 0, 1}));
    CHECK(!subgroup_membership(power_subgroup(3), HeisElem{0, 0, 1}));
    CHECK(subgroup_membership(power_subgroup(3), HeisElem{0, 0, 3}));
    CHECK(!subgroup_membership(power_subgroup(4), HeisElem{0, 0, 1}));
    CHECK(subgroup_membership(power_subgroup(4), HeisElem{0, 0, 2}));
}

TEST_CASE("index matches a coset count on a box") {
    // Count residues (x mod n, y mod n, z mod center_mod) realized: the index
    // is the number of cosets.
    HeisSubgroup H = power_subgroup(2);
    std::set<std::tuple<Int, Int, Int>> cosets;
    for (int x = -4; x <= 4; ++x)
        for (int y = -4; y <= 4; ++y)
            for (int z = -4; z <= 4; ++z)
                cosets.insert({mod_floor(Int(x), H.m11), mod_floor(Int(y), H.m22),
                               mod_floor(Int(z), H.center_mod)});
    CHECK(Int(cosets.size()) == H.index());
}

TEST_CASE("exact roots") {
    auto r = malcev_root(HeisElem{2, 0, 0}, 2);
    REQUIRE(r.has_value());
    CHECK(*r == HeisElem{1, 0, 0});
    CHECK(!malcev_root(HeisElem{1, 0, 0}, 2).has_value());
    CHECK(!malcev_root(HeisElem{2, 2, 2}, 2).has_value());  // z residue fails
    auto s = malcev_root(HeisElem{2, 2, 3}, 2);
    REQUIRE(s.has_value());
    CHECK(heis_pow(*s, 2) == HeisElem{2, 2, 3});
    // Roots are verified by re-powering on a box.
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            for (int z = -5; z <= 5; ++z) {
                HeisElem e{x, y, z};
                auto root = malcev_root(e, 3);
                if (root) CHECK(heis_pow(*root, 3) == e);
            }
}

TEST_CASE("containment of n^2-th power subgroups in the n-th powers") {
    ContainmentReport r2 = malcev_containment(2, 5);
    CHECK(r2.holds);
    CHECK(r2.checked > 0);
    ContainmentReport r3 = malcev_containment(3, 5);
    CHECK(r3.holds);
}

TEST_CASE("stored counterexample: roots need not lie in the subgroup") {
    // (4,0,0) is in the subgroup generated by 4th powers, its unique square
    // root (2,0,0) exists in the group but is not in that subgroup.
    HeisSubgroup H4 = power_subgroup(4);
    HeisElem e{4, 0, 0};
    CHECK(subgroup_membership(H4, e));
    auto root = malcev_root(e, 2);
    REQUIRE(root.has_value());
    CHECK(*root == HeisElem{2, 0, 0});
    CHECK(!subgroup_membership(H4, *root));
}

TEST_CASE("generation profile covers the box within the cap") {
    GenerationProfile p = steps_to_generate(2, 3);
    CHECK(p.unresolved == 0);
    CHECK(p.layer_counts[0] == 1);  // identity
    size_t total = 0;
    for (size_t c : p.layer_counts) total += c;
    // Every box member of the subgroup is reached.
    HeisSubgroup H = power_subgroup(2);
    size_t members = 0;
    for (int x = -3; x <= 3; ++x)
        for (int y = -3; y <= 3; ++y)
            for (int z = -3; z <= 3; ++z)
                if (subgroup_membership(H, HeisElem{x, y, z})) ++members;
    CHECK(total == members);
    CHECK(p.max_steps >= 1);
    CHECK_THROWS_AS(steps_to_generate(5, 3), std::invalid_argument);
}

TEST_CASE("abelian power index") {
    AbelianSpec free2{2, {}};
    CHECK(abelian_power_index(free2, 4) == 16);
    AbelianSpec mixed{2, {Int(6)}};
    CHECK(abelian_power_index(mixed, 4) == 32);  // 4^2 * gcd(4,6)
    AbelianSpec torsion{0, {Int(5), Int(7)}};
    CHECK(abelian_power_index(torsion, 3) == 1);
    CHECK(abelian_power_index(torsion, 35) == 35);
}
