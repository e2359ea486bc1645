#pragma once

#include "thickset/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thickset::presburger {

// One-variable sets built from arithmetic progressions and intervals:
// finite unions of (a + bZ) ∩ I. Everything here is exact; such sets are
// eventually periodic in both directions, which is what the decision
// procedures exploit.

struct ParseError : std::invalid_argument {
    ParseError(size_t position, const std::string& message)
        : std::invalid_argument("position " + std::to_string(position) + ": " + message),
          position(position) {}
    size_t position;
};

/// (a + bZ) ∩ [lo, hi). b = 0 encodes the singleton {a}; otherwise
/// 0 <= a < b. Intervals are stored half-open; missing bounds are infinite.
struct Term {
    Int a;
    Int b;
    std::optional<Int> lo;  // inclusive
    std::optional<Int> hi;  // exclusive

    bool contains(const Int& x) const;
    bool operator==(const Term& o) const { return a == o.a && b == o.b && lo == o.lo && hi == o.hi; }
};

struct PresburgerSet {
    std::vector<Term> terms;

    bool contains(const Int& x) const;
    bool operator==(const PresburgerSet& o) const { return terms == o.terms; }
};

/// Grammar: set := term ('|' term)*; term := ap ('&' interval)?;
/// ap := INT | INT '+' INT 'Z' | INT 'Z' | 'Z' | '-' '(' ap ')';
/// interval := ('('|'[') bound ',' bound (')'|']'); bound := INT | '-inf' | 'inf'.
/// Throws ParseError with the offending position; '0Z' is rejected (use a
/// bare integer for a singleton).
PresburgerSet parse(const std::string& text);

/// Bit-exact printer; parse(print(P)) == P for normalized sets.
std::string print(const PresburgerSet& P);

/// Residues reduced, empty terms dropped, intervals clipped to actual
/// members, same-class intervals merged, complementary residue classes
/// collapsed. Idempotent; term order is canonical.
PresburgerSet normalize(const PresburgerSet& P);

/// P ∪ -P, normalized.
PresburgerSet symmetrize(const PresburgerSet& P);

/// Semantic equality (window comparison + eventual residue comparison).
bool set_equal(const PresburgerSet& P, const PresburgerSet& Q);

bool is_symmetric(const PresburgerSet& P);

/// Periodicity skeleton: for |x| > T membership depends only on x mod L,
/// through Rplus (x > 0) or Rminus (x < 0).
struct EventualData {
    Int T = 0;
    Int L = 1;
    std::vector<bool> rplus, rminus;  // indexed by residue mod L
};

EventualData eventual_data(const PresburgerSet& P);

struct ThicknessVerdict {
    bool symmetric_input = false;
    bool thick = false;
    EventualData data;
    // Thick case: minimal thickness on the canonical window [0, 2(T+L)].
    std::optional<size_t> minimal;      // absent when the search cap was hit
    size_t minimal_lower_bound = 0;     // always valid: 1 + best independent set found
    std::vector<Int> independent_witness;
    bool capped = false;
    // Non-thick case: the family {0, s, 2s, ...} is an infinite independent set.
    Int witness_spacing = 0;
};

/// P is thick iff the symmetrization eventually contains a full residue
/// class on the positive side (0 ∈ Rplus). Thick verdicts carry the exact
/// minimal thickness from a max-independent-set search on [0, 2(T+L)]
/// (a range when the configured cap is hit); non-thick verdicts carry a
/// validated witness spacing.
ThicknessVerdict decide_thick(const PresburgerSet& P, size_t cap = 64);

struct GenericVerdict {
    bool generic = false;
    size_t m = 0;                 // translate count of the certificate
    std::vector<Int> translates;  // shifts s with ∪ (P + s) = Z
    size_t lower_bound = 0;       // certified lower bound on any cover of Z
    bool exact = false;           // lower_bound == m
};

/// Genericity of the symmetrization: generic iff both eventual sides are
/// nonempty. The certificate is an exact minimal cover over a bounded shift
/// range (sound for all of Z); a matching combinatorial lower bound makes
/// the count certified-minimal, otherwise the verdict reports the range.
GenericVerdict decide_generic(const PresburgerSet& P);

struct LatticeResult {
    Int b = 0;
    Int window = 0;  // verified P + P ⊇ bZ for all multiples within [-window, window]
    bool verified = false;
};

/// Smallest divisor b of L whose full multiple classes sit inside P
/// eventually; verifies P + P ⊇ bZ exhaustively on [-10b(T+1), 10b(T+1)]
/// via far-apart representatives. Requires a thick P.
LatticeResult lattice_in_double(const PresburgerSet& P);

struct MultidimResult {
    Int n = 0;
    std::vector<Int> axis_b;
    bool verified = false;
};

/// Per-axis doubling lattice; n = lcm of the axis moduli, verified to span
/// n * Z^m through axis-wise differences. Throws naming the first non-thick
/// axis (1-based).
MultidimResult multidim_lattice(const std::vector<PresburgerSet>& axes);

/// n * P, termwise: (a + bZ) ∩ I ↦ (na + nbZ) ∩ nI. Requires n >= 1.
PresburgerSet scale_set(const PresburgerSet& P, const Int& n);

}  // namespace thickset::presburger
