#pragma once

#include "thickset/rotation.hpp"
#include "thickset/surd.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thickset::vdw {

// ---------------------------------------------------------------------------
// Coverings of Z by translates of a Bohr set, certified exactly.
// ---------------------------------------------------------------------------

/// The two covering shapes: 3n+1 translates of X(1/(6n)), or 2n+1 translates
/// of X(2/(8n+1)).
enum class Variant { ThreeNPlusOne, TwoNPlusOne };

/// Open arcs (lo, hi) around the circle positions of the translates. Cover
/// verification is exact: the union is the whole circle if and only if every
/// arc endpoint lies in the open interior of some arc (the boundary of the
/// union can only sit at an endpoint).
struct ArcCoverCertificate {
    std::vector<std::pair<Surd, Surd>> arcs;  // sorted by position of lo in [0, 1)
    bool covers = false;
    std::string detail;
};

struct Covering {
    rotation::BohrSet base;  // Q = X(t)
    std::vector<Int> translates;
    Variant variant = Variant::ThreeNPlusOne;
    unsigned n = 1;
    ArcCoverCertificate certificate;
};

/// Covering of Z by translates Q + a_i of Q = X(t) for the rotation by
/// sqrt(d): t = 1/(6n) with 3n+1 arcs, or 2/(8n+1) with 2n+1 arcs. The
/// translates are found near the evenly spaced targets i/count and the
/// result carries an exact arc-cover certificate. Throws (with the partial
/// cover in the message) if the search budget runs out before coverage —
/// never a false certificate.
Covering build_covering(unsigned n, Variant variant, unsigned d = 2);

/// Position of a circle value in the fundamental domain [0, 1).
Surd position01(const Surd& value);

/// Re-validates an arc-cover certificate from its stored endpoints alone.
bool check_arc_cover(const ArcCoverCertificate& cert);

// ---------------------------------------------------------------------------
// Difference set and subgroup-freeness.
// ---------------------------------------------------------------------------

struct DifferenceReport {
    rotation::BohrSet set;      // P = Q + Q = X(2t)
    uint64_t samples = 0;       // window samples cross-checked
    uint64_t decompositions = 0;  // members of X(2t) decomposed as u + v
    bool verified = false;
};

/// The difference set A_i - A_i = Q + Q of a covering, returned symbolically
/// as X(2t) and cross-checked on a window: sampled sums of members land in
/// X(2t), and each sampled member of X(2t) is decomposed explicitly.
DifferenceReport difference_set(const Covering& c, long long window = 200,
                                long long witness_bound = 100000);

/// Witness table proving no subgroup mZ (m in [1, M]) fits inside X(t);
/// requires t < 1/2. Delegates to the kernel-maximality search.
rotation::WitnessTable certify_no_subgroup(const rotation::BohrSet& P, const Int& M, const Int& K);

// ---------------------------------------------------------------------------
// Power covering: X(t)^k = Z once the accumulated parameter passes 1/2.
// ---------------------------------------------------------------------------

struct PowerCoverCertificate {
    unsigned k = 0;
    Rat s1, s2;  // split k*t = s1 + s2 with s1, s2 <= 1/2 and s1 + s2 > 1/2
    uint64_t samples = 0;
    uint64_t decomposed = 0;
    bool covers = false;
    std::string detail;
};

/// Certifies X(t)^k = Z for k*t > 1/2: the split X(s1) * X(s2) with
/// s1 + s2 > 1/2 covers because the two open arcs always intersect and the
/// rotation image is dense. Spot-checks explicit decompositions for window
/// samples. Throws when k*t <= 1/2 (use the product identities instead) or
/// when no admissible split exists.
PowerCoverCertificate certify_power_covers(const rotation::BohrSet& P, unsigned k,
                                           long long sample_window = 100,
                                           long long witness_bound = 100000);

// ---------------------------------------------------------------------------
// Pigeonhole difference finder on Z/N.
// ---------------------------------------------------------------------------

struct PigeonholeResult {
    bool collision = false;
    Int x = 0;               // difference h - g of a colliding pair
    unsigned verified_k = 0;  // k*x in P - P verified for all k <= verified_k
    size_t elements = 0;
    size_t distinct_signatures = 0;
    size_t largest_bucket = 0;
};

/// For each g in Z/N computes the signature (s_1, ..., s_K) where s_k is the
/// first element of S with k*g - s_k in P, buckets elements by signature and
/// returns x = h - g for the first colliding pair, verified to satisfy
/// k*x in P - P for all k <= K. Requires the cover property P + S = Z/N.
/// No collision is reported honestly with bucket statistics.
PigeonholeResult pigeonhole_difference(unsigned modulus, const std::vector<bool>& P,
                                       const std::vector<unsigned>& S, unsigned K);

// ---------------------------------------------------------------------------
// Sampled covering over finite-support rational sequences.
// ---------------------------------------------------------------------------

/// Element of the rational sequence group with support in the first three
/// coordinates, mapped to c2*sqrt(2) + c3*sqrt(3) + c5*sqrt(5) mod 1.
struct QSeqElem {
    Rat c2, c3, c5;
};

/// Tri-state membership of the mapped value in the open interval
/// (center - t, center + t) mod 1, decided by rational interval refinement.
/// Exact when all coefficients vanish; otherwise the value is irrational
/// (no nonzero rational combination of sqrt 2, 3, 5 is rational — stored
/// algebraic fact), so boundary ties cannot occur and refinement terminates.
/// Returns nullopt only if the precision cap is reached.
std::optional<bool> qseq_in_interval(const QSeqElem& x, const Rat& center, const Rat& t);

struct QSeqCoverReport {
    unsigned samples = 0;
    unsigned covered = 0;
    bool kernel_fact = true;  // stored: the map has trivial kernel on this support
    bool all_covered = false;
    std::string detail;
};

/// Verifies on random samples (seeded, small rational coefficients) that the
/// integer covering translates also cover the rational sequence group: every
/// sample lands in some Q + a_i, membership decided by interval refinement.
QSeqCoverReport sampled_qseq_covering(unsigned n, Variant variant, unsigned sample_count,
                                      uint64_t seed);

}  // namespace thickset::vdw
