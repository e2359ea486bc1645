#pragma once

#include "thickset/groups.hpp"

#include <map>
#include <optional>
#include <vector>

namespace thickset::nilpower {

/// Finite-index subgroup of the integer Heisenberg group in canonical form:
/// the abelianized image (x, y) is the row lattice of a 2x2 Hermite-form
/// matrix [[m11, m12], [0, m22]], the intersection with the center is
/// center_mod * Z, and each lattice point carries an admissible z-residue
/// class mod center_mod (trivial for power subgroups).
struct HeisSubgroup {
    Int m11 = 1, m12 = 0, m22 = 1;
    Int center_mod = 1;
    std::map<std::pair<Int, Int>, Int> coset_z;  // canonical coset -> z residue

    Int abelianized_index() const { return m11 * m22; }
    Int index() const { return abelianized_index() * center_mod; }
};

/// Membership from the canonical form: (x, y) must lie in the row lattice
/// and z must match the coset's residue class mod center_mod.
bool subgroup_membership(const HeisSubgroup& H, const HeisElem& e);

/// The subgroup generated by all n-th powers. Computed structurally (lattice
/// nZ^2; center modulus n for odd n, n/2 for even n) and cross-checked
/// against a BFS closure of actual n-th powers inside a coordinate box;
/// disagreement is a hard internal failure.
HeisSubgroup power_subgroup(const Int& n);

struct GenerationProfile {
    Int n;
    int radius = 0;
    int cap = 0;
    std::vector<size_t> layer_counts;  // targets first reached with k factors
    size_t unresolved = 0;             // box elements not reached within cap
    int max_steps = 0;
};

/// Minimal number of n-th-power factors needed for each element of
/// power_subgroup(n) within the coordinate box |x|,|y|,|z| <= radius.
GenerationProfile steps_to_generate(const Int& n, int radius, int cap = 12);

/// Exact n-th root: (X,Y,Z) = (nx, ny, nz + C(n,2)xy) solved over Z.
std::optional<HeisElem> malcev_root(const HeisElem& e, const Int& n);

struct ContainmentReport {
    Int n;
    int radius = 0;
    size_t checked = 0;
    std::vector<HeisElem> exceptions;
    bool holds = false;
};

/// Verifies that every element of power_subgroup(n^2) in the coordinate box
/// has an n-th root in the ambient group (roots need not lie in the
/// subgroup itself — that stronger reading has a counterexample).
ContainmentReport malcev_containment(const Int& n, int radius);

/// Index of nG in G for G = Z^r + sum Z/c_i: n^r * prod gcd(n, c_i).
Int abelian_power_index(const AbelianSpec& spec, const Int& n);

}  // namespace thickset::nilpower
