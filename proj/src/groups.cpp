#include "thickset/groups.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace thickset {

FiniteGroup::FiniteGroup(std::string name, std::vector<int> table, int order)
    : name_(std::move(name)), n_(order), table_(std::move(table)) {
    if (n_ <= 0 || table_.size() != static_cast<size_t>(n_) * n_)
        throw std::invalid_argument("FiniteGroup: table size mismatch");
    identity_ = -1;
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int a = 0; a < n_; ++a)
            if (op(e, a) != a || op(a, e) != a) { ok = false; break; }
        if (ok) { identity_ = e; break; }
    }
    if (identity_ < 0) throw std::invalid_argument("FiniteGroup: no identity");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (op(a, b) == identity_ && op(b, a) == identity_) { inv_[a] = b; break; }
        if (inv_[a] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
    }
}

void FiniteGroup::validate() const {
    for (int a = 0; a < n_; ++a) {
        std::vector<bool> row(n_, false), col(n_, false);
        for (int b = 0; b < n_; ++b) {
            int ab = op(a, b), ba = op(b, a);
            if (ab < 0 || ab >= n_ || ba < 0 || ba >= n_)
                throw std::runtime_error("FiniteGroup: entry out of range");
            if (row[ab] || col[ba]) throw std::runtime_error("FiniteGroup: table is not a Latin square");
            row[ab] = col[ba] = true;
        }
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw std::runtime_error("FiniteGroup: associativity fails");
}

FiniteGroup FiniteGroup::cyclic(int k) {
    if (k < 1) throw std::invalid_argument("cyclic: order must be >= 1");
    std::vector<int> table(static_cast<size_t>(k) * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) table[static_cast<size_t>(a) * k + b] = (a + b) % k;
    return FiniteGroup("Z/" + std::to_string(k), std::move(table), k);
}

FiniteGroup FiniteGroup::dihedral(int k) {
    if (k < 1) throw std::invalid_argument("dihedral: k must be >= 1");
    // Elements 0..k-1: rotations r^i; k..2k-1: reflections s r^i.
    int n = 2 * k;
    auto enc = [&](bool refl, int i) { return (refl ? k : 0) + ((i % k) + k) % k; };
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        bool ra = a >= k;
        int ia = ra ? a - k : a;
        for (int b = 0; b < n; ++b) {
            bool rb = b >= k;
            int ib = rb ? b - k : b;
            // (s^e r^i)(s^f r^j) = s^{e+f} r^{(-1)^f i + j}
            int i = rb ? -ia : ia;
            table[static_cast<size_t>(a) * n + b] = enc(ra != rb, i + ib);
        }
    }
    return FiniteGroup("D_" + std::to_string(k), std::move(table), n);
}

FiniteGroup FiniteGroup::symmetric4() {
    // Enumerate the 24 permutations of {0,1,2,3} in lexicographic order.
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p = {0, 1, 2, 3};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::array<int, 4>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 4> c;
            for (int i = 0; i < 4; ++i) c[i] = perms[a][perms[b][i]];
            table[static_cast<size_t>(a) * n + b] = index_of(c);
        }
    return FiniteGroup("S_4", std::move(table), n);
}

std::vector<int> FiniteGroup::cyclic_subgroup(int g) const {
    std::vector<int> elems{identity_};
    int cur = g;
    while (cur != identity_) {
        elems.push_back(cur);
        cur = op(cur, g);
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

HeisElem heis_pow(const HeisElem& a, const Int& n) {
    if (n < 0) return heis_pow(heis_inv(a), -n);
    return {n * a.x, n * a.y, n * a.z + (n * (n - 1) / 2) * a.x * a.y};
}

std::string heis_str(const HeisElem& a) {
    std::ostringstream os;
    os << "(" << a.x << "," << a.y << "," << a.z << ")";
    return os.str();
}

std::vector<HeisElem> heis_ball(const std::vector<HeisElem>& generators, int radius) {
    std::set<HeisElem> current{heis_identity()};
    std::vector<HeisElem> step{heis_identity()};
    for (const auto& g : generators) {
        step.push_back(g);
        step.push_back(heis_inv(g));
    }
    std::set<HeisElem> frontier = current;
    for (int r = 0; r < radius; ++r) {
        std::set<HeisElem> next;
        for (const auto& a : frontier)
            for (const auto& s : step) {
                HeisElem b = heis_mul(a, s);
                if (!current.count(b)) next.insert(b);
            }
        if (next.empty()) break;
        current.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    return {current.begin(), current.end()};
}

AbelianElem abelian_zero(const AbelianSpec& spec) {
    return {std::vector<Int>(spec.rank, 0), std::vector<Int>(spec.torsion.size(), 0)};
}

AbelianElem abelian_generator(const AbelianSpec& spec, int index) {
    AbelianElem e = abelian_zero(spec);
    if (index < 0 || index >= spec.generator_count())
        throw std::invalid_argument("abelian_generator: index out of range");
    if (index < spec.rank)
        e.free_part[index] = 1;
    else
        e.torsion_part[index - spec.rank] = spec.torsion[index - spec.rank] == 1 ? 0 : 1;
    return e;
}

static void check_shape(const AbelianSpec& spec, const AbelianElem& a) {
    if (a.free_part.size() != static_cast<size_t>(spec.rank) ||
        a.torsion_part.size() != spec.torsion.size())
        throw std::invalid_argument("abelian element does not match group spec");
}

AbelianElem abelian_add(const AbelianSpec& spec, const AbelianElem& a, const AbelianElem& b) {
    check_shape(spec, a);
    check_shape(spec, b);
    AbelianElem c = abelian_zero(spec);
    for (int i = 0; i < spec.rank; ++i) c.free_part[i] = a.free_part[i] + b.free_part[i];
    for (size_t i = 0; i < spec.torsion.size(); ++i)
        c.torsion_part[i] = mod_floor(a.torsion_part[i] + b.torsion_part[i], spec.torsion[i]);
    return c;
}

AbelianElem abelian_neg(const AbelianSpec& spec, const AbelianElem& a) {
    check_shape(spec, a);
    AbelianElem c = abelian_zero(spec);
    for (int i = 0; i < spec.rank; ++i) c.free_part[i] = -a.free_part[i];
    for (size_t i = 0; i < spec.torsion.size(); ++i)
        c.torsion_part[i] = mod_floor(-a.torsion_part[i], spec.torsion[i]);
    return c;
}

AbelianElem abelian_scale(const AbelianSpec& spec, const Int& k, const AbelianElem& a) {
    check_shape(spec, a);
    AbelianElem c = abelian_zero(spec);
    for (int i = 0; i < spec.rank; ++i) c.free_part[i] = k * a.free_part[i];
    for (size_t i = 0; i < spec.torsion.size(); ++i)
        c.torsion_part[i] = mod_floor(k * a.torsion_part[i], spec.torsion[i]);
    return c;
}

bool abelian_is_zero(const AbelianElem& a) {
    for (const auto& v : a.free_part)
        if (v != 0) return false;
    for (const auto& v : a.torsion_part)
        if (v != 0) return false;
    return true;
}

std::string abelian_str(const AbelianElem& a) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto& v : a.free_part) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    for (const auto& v : a.torsion_part) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << ")";
    return os.str();
}

std::vector<AbelianElem> abelian_ball(const AbelianSpec& spec, int radius) {
    std::set<AbelianElem> current;
    current.insert(abelian_zero(spec));
    std::vector<AbelianElem> step;
    for (int i = 0; i < spec.generator_count(); ++i) {
        AbelianElem g = abelian_generator(spec, i);
        step.push_back(g);
        step.push_back(abelian_neg(spec, g));
    }
    std::set<AbelianElem> frontier = current;
    for (int r = 0; r < radius; ++r) {
        std::set<AbelianElem> next;
        for (const auto& a : frontier)
            for (const auto& s : step) {
                AbelianElem b = abelian_add(spec, a, s);
                if (!current.count(b)) next.insert(b);
            }
        if (next.empty()) break;
        current.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    return {current.begin(), current.end()};
}

AbelianHom::AbelianHom(AbelianSpec domain, AbelianSpec codomain, std::vector<AbelianElem> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
    if (images_.size() != static_cast<size_t>(domain_.generator_count()))
        throw std::invalid_argument("AbelianHom: one image per generator required");
    for (const auto& img : images_) check_shape(codomain_, img);
    // A generator of order c must map to an element killed by c.
    for (size_t i = 0; i < domain_.torsion.size(); ++i) {
        const AbelianElem& img = images_[domain_.rank + i];
        if (!abelian_is_zero(abelian_scale(codomain_, domain_.torsion[i], img)))
            throw std::invalid_argument("AbelianHom: torsion relation violated at generator " +
                                        std::to_string(domain_.rank + i));
    }
}

AbelianElem AbelianHom::apply(const AbelianElem& x) const {
    check_shape(domain_, x);
    AbelianElem out = abelian_zero(codomain_);
    for (int i = 0; i < domain_.rank; ++i)
        out = abelian_add(codomain_, out, abelian_scale(codomain_, x.free_part[i], images_[i]));
    for (size_t i = 0; i < domain_.torsion.size(); ++i)
        out = abelian_add(codomain_, out,
                          abelian_scale(codomain_, x.torsion_part[i], images_[domain_.rank + i]));
    return out;
}

std::function<bool(const AbelianElem&)> AbelianHom::preimage(
    std::function<bool(const AbelianElem&)> member) const {
    auto self = *this;
    return [self, member = std::move(member)](const AbelianElem& x) { return member(self.apply(x)); };
}

}  // namespace thickset
