#pragma once

#include "thickset/groups.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace thickset {

// The calculus works over an abstract finite universe of indices 0..n-1
// together with a symmetric conflict predicate: conflict(i, j) holds when
// the quotient of the i-th and j-th elements lies in the set under study.
// An independent set is a family with no conflicting pair; the minimal
// thickness of the set on the universe is 1 + (max independent set size).

using ConflictFn = std::function<bool(size_t, size_t)>;

struct IndependentWitness {
    std::vector<size_t> points;
    uint64_t checked_pairs = 0;
    bool cap_hit = false;  // search stopped at the cap; no maximality claim
};

/// Maximum independent set by depth-first search, pruned by a greedy
/// clique-cover bound computed in universe order. Deterministic given the
/// element order. If a set of size `cap` is found the search stops and the
/// witness is flagged cap_hit.
IndependentWitness max_independent_set(size_t universe_size, const ConflictFn& conflict, size_t cap);

/// Variant that answers only whether an independent set of size >= target
/// exists (used for intersection checks where the bound is what matters).
std::optional<std::vector<size_t>> find_independent_set(size_t universe_size,
                                                        const ConflictFn& conflict, size_t target);

struct ThicknessResult {
    size_t min_thickness = 0;  // 1 + max independent size (when not capped)
    IndependentWitness witness;
};

ThicknessResult min_thickness(size_t universe_size, const ConflictFn& conflict, size_t cap = 64);

// ---------------------------------------------------------------------------
// Exact minimum set cover (shared by the genericity deciders).
// ---------------------------------------------------------------------------

struct CoverProblem {
    size_t universe = 0;
    std::vector<std::vector<uint32_t>> candidates;  // element ids covered per candidate
};

/// Optimal cover by branch and bound (greedy upper bound, branching on the
/// first uncovered element). Deterministic: ties resolve to the earliest
/// candidate. Returns nullopt when the universe cannot be covered at all.
std::optional<std::vector<size_t>> min_set_cover(const CoverProblem& problem);

// ---------------------------------------------------------------------------
// Genericity on finite groups (exact cover by translates).
// ---------------------------------------------------------------------------

enum class Side { Right, Left };

struct GenericityCertificate {
    std::vector<int> translates;  // group elements g with union of P*g (or g*P) = G
    Side side = Side::Right;
    bool covers = false;
};

/// Minimal number of right [resp. left] translates of P covering the whole
/// finite group, by exact branch-and-bound set cover. Ties broken by element
/// order. Throws if P is empty.
GenericityCertificate min_genericity(const FiniteGroup& G, const std::vector<bool>& P,
                                     Side side = Side::Right);

/// Finds a cover by at most `limit` translates if one exists (cheaper than
/// full minimality when only an upper bound is needed).
std::optional<GenericityCertificate> cover_within(const FiniteGroup& G, const std::vector<bool>& P,
                                                  size_t limit, Side side = Side::Right);

// ---------------------------------------------------------------------------
// Product-set subgroup construction on finite groups.
// ---------------------------------------------------------------------------

struct SubgroupResult {
    std::vector<bool> subgroup;  // characteristic vector of P^{3m-2}
    size_t order = 0;
    size_t index = 0;
};

/// Product set P*Q = {p q}.
std::vector<bool> product_set(const FiniteGroup& G, const std::vector<bool>& P,
                              const std::vector<bool>& Q);

/// k-fold product set P^k.
std::vector<bool> power_set(const FiniteGroup& G, const std::vector<bool>& P, size_t k);

/// For a symmetric P containing the identity that is right m-generic, the
/// (3m-2)-fold product set is a subgroup of index at most m. Preconditions
/// are verified and violations rejected with a diagnostic; the resulting set
/// is checked for closure under product and inverse.
SubgroupResult subgroup_from_generic(const FiniteGroup& G, const std::vector<bool>& P, size_t m);

// ---------------------------------------------------------------------------
// Ramsey bounds for intersection thickness.
// ---------------------------------------------------------------------------

/// Binomial upper bound C(n+m-2, n-1) for the two-colour Ramsey number.
uint64_t ramsey_bound(unsigned n, unsigned m);

struct RamseyResult {
    unsigned value = 0;
    // Witness colouring of the complete graph on value-1 vertices avoiding a
    // red K_n and a blue K_m; red edges listed as index pairs.
    std::vector<std::pair<int, int>> witness_red_edges;
};

/// Exact two-colour Ramsey number, established by a pruned exhaustive search
/// (an avoiding colouring one below, exhaustion at the value itself). Only
/// the small range max(n,m) <= 4 and n+m <= 7 is supported.
RamseyResult exact_small_ramsey(unsigned n, unsigned m);

struct IntersectionReport {
    uint64_t bound = 0;  // ramsey_bound(n, m)
    bool verified = false;
    std::optional<std::vector<size_t>> counterexample;  // independent set of size >= bound
};

/// Verifies that the intersection of an n-thick and an m-thick set has no
/// independent set of size ramsey_bound(n, m) on the given universe.
IntersectionReport check_thick_intersection(size_t universe_size, const ConflictFn& intersection,
                                            unsigned n, unsigned m);

}  // namespace thickset
