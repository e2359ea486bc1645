#include "thickset/setcalc.hpp"

#include <doctest.h>

using namespace thickset;

TEST_CASE("max independent set on small conflict graphs") {
    // Universe 0..5, conflict when |i-j| == 1 (path): independence number 3.
    auto path = [](size_t i, size_t j) { return (i > j ? i - j : j - i) == 1; };
    auto w = max_independent_set(6, path, 64);
    CHECK(w.points.size() == 3);
    CHECK(!w.cap_hit);
    // Complete conflicts: only singletons are independent.
    auto complete = [](size_t, size_t) { return true; };
    CHECK(max_independent_set(5, complete, 64).points.size() == 1);
    // No conflicts: cap stops the search.
    auto empty = [](size_t, size_t) { return false; };
    auto capped = max_independent_set(100, empty, 8);
    CHECK(capped.points.size() == 8);
    CHECK(capped.cap_hit);
}

TEST_CASE("find_independent_set answers the existence question") {
    auto path = [](size_t i, size_t j) { return (i > j ? i - j : j - i) == 1; };
    CHECK(find_independent_set(6, path, 3).has_value());
    CHECK(!find_independent_set(6, path, 4).has_value());
}

TEST_CASE("min thickness is one plus the independence number") {
    auto path = [](size_t i, size_t j) { return (i > j ? i - j : j - i) == 1; };
    auto r = min_thickness(6, path);
    CHECK(r.min_thickness == 4);
}

TEST_CASE("exact minimum set cover") {
    CoverProblem prob;
    prob.universe = 5;
    prob.candidates = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2, 4}};
    auto cover = min_set_cover(prob);
    REQUIRE(cover.has_value());
    CHECK(cover->size() == 3);  // e.g. {0,1} {3,4} {0,2,4}
    // Infeasible: element 4 never covered.
    prob.candidates = {{0, 1, 2, 3}};
    CHECK(!min_set_cover(prob).has_value());
}

TEST_CASE("genericity by exact translate cover") {
    FiniteGroup c6 = FiniteGroup::cyclic(6);
    std::vector<bool> P(6, false);
    P[0] = P[1] = P[5] = true;  // symmetric, contains identity
    auto cert = min_genericity(c6, P);
    CHECK(cert.covers);
    CHECK(cert.translates.size() == 2);  // {0,1,5} and a shift by 3 cover Z/6
    CHECK(cover_within(c6, P, 2).has_value());
    CHECK(!cover_within(c6, P, 1).has_value());
    CHECK_THROWS_AS(min_genericity(c6, std::vector<bool>(6, false)), std::invalid_argument);
}

TEST_CASE("product sets and the subgroup construction") {
    FiniteGroup c8 = FiniteGroup::cyclic(8);
    std::vector<bool> P(8, false);
    P[0] = P[1] = P[7] = true;  // symmetric arc around the identity
    auto PP = product_set(c8, P, P);
    CHECK(PP == power_set(c8, P, 2));
    // P is 3-generic ({0,3,6} shifts work); P^(3*3-2) = P^7 covers Z/8.
    auto m = min_genericity(c8, P).translates.size();
    auto sub = subgroup_from_generic(c8, P, m);
    CHECK(sub.order * sub.index == 8);
    CHECK(sub.index <= m);
    // Violated preconditions are rejected.
    std::vector<bool> asym(8, false);
    asym[0] = asym[1] = true;
    CHECK_THROWS_AS(subgroup_from_generic(c8, asym, 3), std::invalid_argument);
}

TEST_CASE("ramsey bounds and exact small values") {
    CHECK(ramsey_bound(3, 3) == 6);
    CHECK(ramsey_bound(3, 4) == 10);
    CHECK(exact_small_ramsey(3, 3).value == 6);
    CHECK(exact_small_ramsey(2, 4).value == 4);
    CHECK(exact_small_ramsey(2, 2).value == 2);
    CHECK(exact_small_ramsey(3, 4).value == 9);
    // The witness colouring on value-1 vertices avoids both cliques.
    auto r = exact_small_ramsey(3, 3);
    CHECK(!r.witness_red_edges.empty());
}

TEST_CASE("thick intersection has bounded independent sets") {
    // On Z window: P = 2Z is 3-thick, Q = 3Z is 4-thick; the intersection
    // conflict is difference in 6Z.
    const size_t N = 40;
    auto inter = [](size_t i, size_t j) {
        size_t d = i > j ? i - j : j - i;
        return d % 6 == 0;
    };
    auto rep = check_thick_intersection(N, inter, 3, 4);
    CHECK(rep.bound == ramsey_bound(3, 4));
    CHECK(rep.verified);
}
