#include "thickset/rotation.hpp"
#include "thickset/setcalc.hpp"

#include <doctest.h>

using namespace thickset;
using namespace thickset::rotation;

TEST_CASE("rotation positions are exact") {
    CHECK(rotation_position(2, 0).sign() == 0);
    CHECK(rotation_position(2, 1).compare(Surd(-1, 1, 1, 2)) == 0);   // sqrt2 - 1
    CHECK(rotation_position(2, 5).compare(Surd(-7, 5, 1, 2)) == 0);   // 5 sqrt2 - 7
    CHECK(rotation_position(2, -1).compare(Surd(1, -1, 1, 2)) == 0);
    // Always in the fundamental domain.
    for (int n = -20; n <= 20; ++n) {
        Surd v = rotation_position(2, n);
        CHECK(v.compare(Rat(-1, 2)) >= 0);
        CHECK(v.compare(Rat(1, 2)) < 0);
    }
}

TEST_CASE("Bohr set membership at t = 1/3") {
    BohrSet X(CircleHom::surd_rotation(2), Rat(1, 3));
    CHECK(X.member(Int(0)));
    CHECK(!X.member(Int(1)));  // 0.414... >= 1/3
    CHECK(X.member(Int(2)));   // |2 sqrt2 - 3| = 0.171...
    CHECK(X.member(Int(3)));   // 0.242...
    CHECK(!X.member(Int(6)));  // 0.485...
    CHECK(X.member(Int(-2)));  // symmetric
    CHECK_THROWS_AS(BohrSet(CircleHom::surd_rotation(2), Rat(2, 3)), std::invalid_argument);
}

TEST_CASE("find_near locates orbit points exactly") {
    // Smallest |n| with |n sqrt2 mod 1| < 1/100 is the convergent denominator 70.
    auto n = find_near(2, Surd(0, 0, 1, 2), Rat(1, 100), Int(1000));
    REQUIRE(n.has_value());
    CHECK(abs(*n) == 70);
    CHECK(rotation_position(2, *n).abs().compare(Rat(1, 100)) < 0);
    // Near an off-centre target.
    Surd target = Surd::from_rational(Rat(1, 4), 2);
    auto m = find_near(2, target, Rat(1, 50), Int(100000));
    REQUIRE(m.has_value());
    CHECK(circle_distance(rotation_position(2, *m), target).compare(Rat(1, 50)) < 0);
    // Impossible within a tiny bound stays unresolved.
    CHECK(!find_near(2, Surd(0, 0, 1, 2), Rat(1, 1000000), Int(50)).has_value());
}

TEST_CASE("product, divide and derived identities on small windows") {
    auto prod = verify_product_identity(2, Rat(1, 4), Rat(1, 4), 300, 100000);
    CHECK(prod.status == VerifyStatus::Verified);
    CHECK(prod.mismatches == 0);

    auto div = verify_divide_identity(2, Rat(1, 3), 2, 2000);
    CHECK(div.status == VerifyStatus::Verified);
    CHECK_THROWS_AS(verify_divide_identity(2, Rat(1, 2), 2, 100), std::invalid_argument);

    for (const Rat& q : {Rat(1, 2), Rat(3, 2)}) {
        auto der = verify_derived_predicate(2, Rat(1, 4), q, 400, 100000);
        CHECK(der.status == VerifyStatus::Verified);
    }
}

TEST_CASE("kernel maximality witness table") {
    BohrSet X(CircleHom::surd_rotation(2), Rat(1, 3));
    WitnessTable tab = max_subgroup_witnesses(X, Int(30), Int(100000));
    CHECK(tab.complete);
    REQUIRE(tab.entries.size() == 30);
    for (const auto& e : tab.entries) {
        REQUIRE(e.multiplier.has_value());
        CHECK(!e.kernel_member);  // sqrt2 is irrational: no m maps to 0
        CHECK(!X.member(*e.multiplier * e.m));
    }
    CHECK(tab.entries[0].m == 1);
    CHECK(*tab.entries[0].multiplier == 1);  // 1 itself is outside X(1/3)
}

TEST_CASE("thickness of Bohr sets: exact values and bounds") {
    // Interior case t = 1/3: floor(1/t) = 3, no boundary; the true empirical
    // minimum is 3, against the analytic bound 4 and the stated constant 2.
    BohrThickness bt = thickness_of_bohr(2, Rat(1, 3), 10000);
    CHECK(bt.analytic_bound == 4);
    CHECK(bt.stated_constant == 2);
    CHECK(bt.empirical_min == 3);
    REQUIRE(bt.witness.size() == 2);
    BohrSet X(CircleHom::surd_rotation(2), Rat(1, 3));
    for (size_t i = 0; i < bt.witness.size(); ++i)
        for (size_t j = i + 1; j < bt.witness.size(); ++j)
            CHECK(!X.member(bt.witness[j] - bt.witness[i]));

    // Boundary case t = 1/4 (4t = 1): witness size 3, empirical minimum 4.
    BohrThickness b4 = thickness_of_bohr(2, Rat(1, 4), 10000);
    CHECK(b4.analytic_bound == 5);
    CHECK(b4.stated_constant == 3);
    CHECK(b4.empirical_min == 4);
    CHECK(b4.witness.size() == 3);

    // t = 1/2 is the whole group minus the fibre of 1/2: empirical 2.
    BohrThickness b2 = thickness_of_bohr(2, Rat(1, 2), 10000);
    CHECK(b2.empirical_min == 2);
}

TEST_CASE("brute-force cross-check: no 3-element independent set for X(1/3)") {
    // Any three points pairwise at circle distance >= 1/3 would need all three
    // gaps exactly 1/3, impossible on an irrational orbit. Verified directly
    // on a window.
    BohrSet X(CircleHom::surd_rotation(2), Rat(1, 3));
    const long long W = 60;
    auto conflict = [&](size_t i, size_t j) {
        Int a = Int(i) - W, b = Int(j) - W;
        return X.member(b - a);
    };
    auto witness = max_independent_set(static_cast<size_t>(2 * W + 1), conflict, 64);
    CHECK(witness.points.size() == 2);
}

TEST_CASE("dense homomorphism construction and density witnesses") {
    // Free rank present: scaled projection.
    AbelianSpec zr{1, {Int(6)}};
    CircleHom h = build_dense_hom(zr, 2);
    CHECK(h.kind() == CircleHom::Kind::ScaledProjection);

    // Pure torsion with the growth condition: images 1/c_i.
    AbelianSpec tor{0, {Int(2), Int(3), Int(13), Int(235)}};
    CircleHom g = build_dense_hom(tor);
    DensityWitness w = density_witness(g, Rat(1, 100), Int(100000));
    CHECK(w.resolved);
    CHECK(w.value.sign() != 0);
    CHECK(w.value.reduced_mod1().abs().compare(Rat(1, 100)) < 0);

    // Growth violation is rejected: 5 <= 2 * (2*3).
    AbelianSpec bad{0, {Int(2), Int(3), Int(5)}};
    CHECK_THROWS_AS(build_dense_hom(bad), std::invalid_argument);

    // The extension rule reproduces the published sequence 2, 3, 13, 235.
    CHECK(next_torsion_order({}) == 2);
    CHECK(next_torsion_order({Int(2)}) == 3);
    CHECK(next_torsion_order({Int(2), Int(3)}) == 13);
    CHECK(next_torsion_order({Int(2), Int(3), Int(13)}) == 235);

    // Surd rotations witness density through convergents.
    DensityWitness s = density_witness(CircleHom::surd_rotation(2), Rat(1, 1000), Int(100000));
    CHECK(s.resolved);
    CHECK(s.value.reduced_mod1().abs().compare(Rat(1, 1000)) < 0);
}
