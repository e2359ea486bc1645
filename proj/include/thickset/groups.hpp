#pragma once

#include "thickset/numeric.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace thickset {

// ---------------------------------------------------------------------------
// Finite groups given by a full multiplication table.
// ---------------------------------------------------------------------------

/// A finite group over element ids 0..order-1. The table must be a Latin
/// square with an identity; validate() checks this plus associativity.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<int> table, int order);

    static FiniteGroup cyclic(int k);
    static FiniteGroup dihedral(int k);  // order 2k
    static FiniteGroup symmetric4();     // S_4 via permutation composition

    int order() const { return n_; }
    int identity() const { return identity_; }
    int op(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    const std::string& name() const { return name_; }

    /// Full check: Latin square, identity, inverses, associativity.
    void validate() const;

    /// Subgroup generated by an element (for test sweeps over subgroups).
    std::vector<int> cyclic_subgroup(int g) const;

private:
    std::string name_;
    int n_;
    std::vector<int> table_;
    std::vector<int> inv_;
    int identity_;
};

// ---------------------------------------------------------------------------
// Integer Heisenberg group: unitriangular 3x3 matrices [[1,x,z],[0,1,y],[0,0,1]].
// ---------------------------------------------------------------------------

struct HeisElem {
    Int x, y, z;

    bool operator==(const HeisElem& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator<(const HeisElem& o) const {
        if (x != o.x) return x < o.x;
        if (y != o.y) return y < o.y;
        return z < o.z;
    }
};

inline HeisElem heis_identity() { return {0, 0, 0}; }

/// (x1,y1,z1)*(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
inline HeisElem heis_mul(const HeisElem& a, const HeisElem& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
}

inline HeisElem heis_inv(const HeisElem& a) { return {-a.x, -a.y, a.x * a.y - a.z}; }

/// Closed-form power: for n >= 0, (x,y,z)^n = (nx, ny, nz + C(n,2) x y).
HeisElem heis_pow(const HeisElem& a, const Int& n);

/// a^{-1} b^{-1} a b = (0, 0, x_a*y_b - x_b*y_a).
inline HeisElem heis_commutator(const HeisElem& a, const HeisElem& b) {
    return {0, 0, a.x * b.y - b.x * a.y};
}

std::string heis_str(const HeisElem& a);

/// All products of at most `radius` factors drawn from the generators, their
/// inverses and the identity. Deterministic (sorted) enumeration order.
std::vector<HeisElem> heis_ball(const std::vector<HeisElem>& generators, int radius);

// ---------------------------------------------------------------------------
// Finitely generated abelian groups Z^r + Z/c_1 + ... + Z/c_s.
// ---------------------------------------------------------------------------

struct AbelianSpec {
    int rank = 0;
    std::vector<Int> torsion;  // each c_i >= 1

    int generator_count() const { return rank + static_cast<int>(torsion.size()); }
    bool operator==(const AbelianSpec& o) const { return rank == o.rank && torsion == o.torsion; }
};

struct AbelianElem {
    std::vector<Int> free_part;     // length rank
    std::vector<Int> torsion_part;  // coordinate i reduced into [0, c_i)

    bool operator==(const AbelianElem& o) const {
        return free_part == o.free_part && torsion_part == o.torsion_part;
    }
    bool operator<(const AbelianElem& o) const {
        if (free_part != o.free_part) return free_part < o.free_part;
        return torsion_part < o.torsion_part;
    }
};

AbelianElem abelian_zero(const AbelianSpec& spec);
AbelianElem abelian_generator(const AbelianSpec& spec, int index);
AbelianElem abelian_add(const AbelianSpec& spec, const AbelianElem& a, const AbelianElem& b);
AbelianElem abelian_neg(const AbelianSpec& spec, const AbelianElem& a);
AbelianElem abelian_scale(const AbelianSpec& spec, const Int& k, const AbelianElem& a);
bool abelian_is_zero(const AbelianElem& a);
std::string abelian_str(const AbelianElem& a);

/// Ball of products of <= radius generators (and inverses) in an abelian group.
std::vector<AbelianElem> abelian_ball(const AbelianSpec& spec, int radius);

/// Homomorphism between f.g. abelian groups, given on generators. The
/// constructor rejects maps that do not respect the torsion relations
/// c_i * image(e_i) = 0.
class AbelianHom {
public:
    AbelianHom(AbelianSpec domain, AbelianSpec codomain, std::vector<AbelianElem> images);

    const AbelianSpec& domain() const { return domain_; }
    const AbelianSpec& codomain() const { return codomain_; }

    AbelianElem apply(const AbelianElem& x) const;

    /// Preimage of a set given by a membership oracle, as a composed oracle.
    std::function<bool(const AbelianElem&)> preimage(
        std::function<bool(const AbelianElem&)> member) const;

private:
    AbelianSpec domain_;
    AbelianSpec codomain_;
    std::vector<AbelianElem> images_;
};

}  // namespace thickset
