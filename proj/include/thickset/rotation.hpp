#pragma once

#include "thickset/groups.hpp"
#include "thickset/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thickset::rotation {

// ---------------------------------------------------------------------------
// Exact homomorphisms into R/Z.
// ---------------------------------------------------------------------------

/// A homomorphism G -> R/Z with decidable comparisons. Three kinds:
///   SurdRotation    Z -> R/Z, n -> n*sqrt(d) mod 1 (d nonsquare, dense image)
///   RationalImages  f.g. abelian -> Q/Z, given on generators
///   ScaledProjection f.g. abelian -> R/Z, project onto one free generator
///                    and multiply by sqrt(d)
class CircleHom {
public:
    enum class Kind { SurdRotation, RationalImages, ScaledProjection };

    static CircleHom surd_rotation(unsigned d);
    static CircleHom rational_images(AbelianSpec domain, std::vector<Rat> images);
    static CircleHom scaled_projection(AbelianSpec domain, int coordinate, unsigned d);

    Kind kind() const { return kind_; }
    unsigned radicand() const { return d_; }
    const AbelianSpec& domain() const { return domain_; }
    const std::vector<Rat>& images() const { return images_; }

    /// Value on an integer argument; requires an integer-like domain
    /// (SurdRotation, or a rank/torsion-1 spec). Reduced into [-1/2, 1/2).
    Surd value(const Int& n) const;

    /// Value on a general abelian element; reduced into [-1/2, 1/2).
    Surd value(const AbelianElem& x) const;

    /// Value q*sqrt(d) for a rational argument (scaled rational evaluation).
    Surd value(const Rat& q) const;

private:
    CircleHom() = default;
    Kind kind_ = Kind::SurdRotation;
    unsigned d_ = 2;
    AbelianSpec domain_;
    std::vector<Rat> images_;
    int coordinate_ = 0;
};

/// X(t) = g^{-1}(-t, t): open interval, boundary values are not members.
class BohrSet {
public:
    BohrSet(CircleHom hom, Rat t);

    const CircleHom& hom() const { return hom_; }
    const Rat& t() const { return t_; }

    bool member(const Int& n) const;
    bool member(const AbelianElem& x) const;

private:
    CircleHom hom_;
    Rat t_;
};

// ---------------------------------------------------------------------------
// Exact point location on the rotation orbit.
// ---------------------------------------------------------------------------

/// Position of n*sqrt(d) reduced into [-1/2, 1/2).
Surd rotation_position(unsigned d, const Int& n);

/// Smallest |n| <= bound (positive preferred at ties) whose rotation position
/// by sqrt(d) lies strictly within `radius` of `center` on the circle. The
/// scan uses a 64-bit fixed-point prefilter; every hit is confirmed exactly
/// before being returned.
std::optional<Int> find_near(unsigned d, const Surd& center, const Rat& radius, const Int& bound,
                             bool allow_zero = false);

// ---------------------------------------------------------------------------
// Identity verification on windows.
// ---------------------------------------------------------------------------

enum class VerifyStatus { Verified, Mismatch, Inconclusive };

struct IdentityReport {
    VerifyStatus status = VerifyStatus::Verified;
    uint64_t checked = 0;
    uint64_t mismatches = 0;
    uint64_t inconclusive = 0;  // witness searches that hit the bound
    std::string detail;
};

/// X(t1) * X(t2) = X(t1+t2) on [-window, window]. The inclusion into
/// X(t1+t2) is immediate from additivity and is spot-checked on sampled
/// pairs; the reverse inclusion is established per member by a witness
/// search with |y| <= witness_bound.
IdentityReport verify_product_identity(unsigned d, const Rat& t1, const Rat& t2, long long window,
                                       long long witness_bound);

/// X(t/m) = X(t) and m*x in X(t), pointwise on [-window, window].
IdentityReport verify_divide_identity(unsigned d, const Rat& t, unsigned m, long long window);

/// Evaluates X(q*t) through the membership oracle of X(t) only — iterated
/// division to X(t/m!) followed by product recombination — and compares with
/// direct membership on [-window, window].
IdentityReport verify_derived_predicate(unsigned d, const Rat& t, const Rat& q, long long window,
                                        long long witness_bound);

// ---------------------------------------------------------------------------
// Kernel maximality witnesses.
// ---------------------------------------------------------------------------

struct WitnessEntry {
    Int m;
    std::optional<Int> multiplier;  // k with k*m not in X(t); nullopt = unresolved
    bool kernel_member = false;     // g(m) = 0: skipped, m*Z is inside the kernel
};

struct WitnessTable {
    std::vector<WitnessEntry> entries;
    bool complete = false;  // no unresolved entries
};

/// For each m in [1, M] with g(m) != 0, a multiplier k <= K with k*m outside
/// X(t), proving that no subgroup mZ fits inside X(t).
WitnessTable max_subgroup_witnesses(const BohrSet& X, const Int& M, const Int& K);

// ---------------------------------------------------------------------------
// Thickness of Bohr sets.
// ---------------------------------------------------------------------------

struct BohrThickness {
    unsigned analytic_bound = 0;    // floor(1/t) + 1: valid for every dense hom
    unsigned stated_constant = 0;   // floor(1/(2t)) + 1, reported for comparison
    unsigned empirical_min = 0;     // exact minimal thickness on the window
    std::vector<Int> witness;       // independent set of size empirical_min - 1
    std::string certificate;        // pigeonhole upper-bound argument
};

/// Exact minimal thickness of X(t) for the surd rotation by sqrt(d) on
/// [-window, window]: a maximum independent set is produced explicitly and
/// the matching upper bound comes from the circle pigeonhole, so no search
/// over the whole window is needed.
BohrThickness thickness_of_bohr(unsigned d, const Rat& t, long long window);

// ---------------------------------------------------------------------------
// Dense homomorphisms (construction and density witnesses).
// ---------------------------------------------------------------------------

/// Builds a homomorphism with dense image for a f.g. abelian spec: free rank
/// >= 1 projects onto the first free generator scaled by sqrt(d); a pure
/// torsion spec must satisfy the growth condition c_i > i * prod_{j<i} c_j
/// and maps e_i to 1/c_i. Violations are rejected with the first offending
/// index; torsion specs of bounded shape that fail the condition admit no
/// dense homomorphism.
CircleHom build_dense_hom(const AbelianSpec& spec, unsigned d = 2);

/// Smallest next torsion order continuing the growth condition.
Int next_torsion_order(const std::vector<Int>& torsion);

struct DensityWitness {
    bool resolved = false;
    AbelianElem element;       // for abelian-domain homs
    Int integer_argument = 0;  // for surd rotations on Z
    Surd value;                // g at the witness, in (-eps, eps) \ {0}
};

/// An element with 0 < |g(x)| < eps. For torsion constructions the generator
/// e_i with 1/c_i < eps is returned; for surd rotations the continued
/// fraction convergents of sqrt(d) give the witness. Unresolved (never a
/// false claim) if nothing is found within the bound.
DensityWitness density_witness(const CircleHom& hom, const Rat& eps, const Int& bound);

}  // namespace thickset::rotation
