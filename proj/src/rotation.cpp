#include "thickset/rotation.hpp"

#include <map>
#include <sstream>

namespace thickset::rotation {

namespace {

Surd pos_of(unsigned d, const Int& n) { return Surd(0, n, 1, d).reduced_mod1(); }

/// 1/v for v != 0: 1/((p+q*sqrt(d))/r) = r*(p - q*sqrt(d)) / (p^2 - d*q^2).
Surd surd_reciprocal(const Surd& v) {
    if (v.sign() == 0) throw std::invalid_argument("surd_reciprocal: division by zero");
    if (v.q() == 0) return Surd(v.r(), 0, v.p(), v.d());
    Int denom = v.p() * v.p() - Int(v.d()) * v.q() * v.q();
    return Surd(v.r() * v.p(), -v.r() * v.q(), denom, v.d());
}

/// Smallest integer >= v.
Int surd_ceil(const Surd& v) {
    Int f = v.floor();
    return (v - Surd(f, 0, 1, v.d())).sign() == 0 ? f : f + 1;
}

// 64-bit fixed-point snapshot of the circle: a value x in R/Z maps to
// floor(frac(x) * 2^64), accurate to one ulp. Used only as a prefilter;
// all decisions are confirmed with exact surd arithmetic.

uint64_t frac_step(unsigned d) {
    Int s = isqrt(Int(d) << 128);  // floor(2^64 * sqrt(d))
    Int f = s & ((Int(1) << 64) - 1);
    return f.convert_to<uint64_t>();
}

uint64_t fixed_of(const Surd& v) {
    Int qd;
    if (v.q() >= 0)
        qd = isqrt(v.q() * v.q() * Int(v.d()) << 128);
    else
        qd = -isqrt(v.q() * v.q() * Int(v.d()) << 128) - 1;
    Int fx = mod_floor(floor_div((v.p() << 64) + qd, v.r()), Int(1) << 64);
    return fx.convert_to<uint64_t>();
}

constexpr uint64_t kFixedMargin = uint64_t(1) << 24;

struct Arc {
    uint64_t lo = 0, hi = 0;  // wrapped half-open interval, widened by the margin
    bool full = false;

    static Arc around(const Surd& center, const Rat& radius) {
        Arc a;
        if (radius * 2 >= 1) {
            a.full = true;
            return a;
        }
        a.lo = fixed_of(center - radius) - kFixedMargin;
        a.hi = fixed_of(center + radius) + kFixedMargin;
        return a;
    }

    bool contains(uint64_t x) const {
        if (full) return true;
        return hi >= lo ? (x >= lo && x < hi) : (x >= lo || x < hi);
    }
};

/// Scans y = 1..bound checking +y and -y against all arcs, calling the exact
/// confirmation only on prefilter hits. Returns the first confirmed y.
std::optional<Int> scan_rotation(unsigned d, const std::vector<Arc>& arcs, const Int& bound,
                                 const std::function<bool(const Int&)>& exact, bool allow_zero) {
    auto in_all = [&](uint64_t x) {
        for (const auto& a : arcs)
            if (!a.contains(x)) return false;
        return true;
    };
    if (allow_zero && in_all(0) && exact(0)) return Int(0);
    if (bound <= 0) return std::nullopt;
    uint64_t step = frac_step(d);
    uint64_t cur = 0;
    unsigned long long limit =
        bound > Int(1) << 62 ? (1ULL << 62) : bound.convert_to<unsigned long long>();
    for (unsigned long long y = 1; y <= limit; ++y) {
        cur += step;
        if (in_all(cur) && exact(Int(y))) return Int(y);
        if (in_all(0 - cur) && exact(-Int(y))) return -Int(y);
    }
    return std::nullopt;
}

bool within(const Surd& value, const Surd& center, const Rat& radius) {
    return (circle_distance(value, center) - Surd::from_rational(radius, value.d())).sign() < 0;
}

}  // namespace

Surd rotation_position(unsigned d, const Int& n) { return pos_of(d, n); }

std::optional<Int> find_near(unsigned d, const Surd& center, const Rat& radius, const Int& bound,
                             bool allow_zero) {
    std::vector<Arc> arcs{Arc::around(center, radius)};
    auto exact = [&](const Int& n) { return within(pos_of(d, n), center, radius); };
    return scan_rotation(d, arcs, bound, exact, allow_zero);
}

// ---------------------------------------------------------------------------
// CircleHom
// ---------------------------------------------------------------------------

CircleHom CircleHom::surd_rotation(unsigned d) {
    CircleHom h;
    h.kind_ = Kind::SurdRotation;
    h.d_ = d;
    h.domain_ = AbelianSpec{1, {}};
    Surd::root(d);  // validates d (nonsquare, >= 2)
    return h;
}

CircleHom CircleHom::rational_images(AbelianSpec domain, std::vector<Rat> images) {
    if (images.size() != static_cast<size_t>(domain.generator_count()))
        throw std::invalid_argument("rational_images: one image per generator required");
    for (auto& img : images) img -= rat_floor(img);  // reduce into [0,1)
    for (size_t i = 0; i < domain.torsion.size(); ++i) {
        Rat killed = images[domain.rank + i] * Rat(domain.torsion[i]);
        if (denominator(killed) != 1)
            throw std::invalid_argument(
                "rational_images: torsion relation violated at generator " +
                std::to_string(domain.rank + i));
    }
    CircleHom h;
    h.kind_ = Kind::RationalImages;
    h.domain_ = std::move(domain);
    h.images_ = std::move(images);
    return h;
}

CircleHom CircleHom::scaled_projection(AbelianSpec domain, int coordinate, unsigned d) {
    if (coordinate < 0 || coordinate >= domain.rank)
        throw std::invalid_argument("scaled_projection: coordinate must index a free generator");
    CircleHom h;
    h.kind_ = Kind::ScaledProjection;
    h.d_ = d;
    h.domain_ = std::move(domain);
    h.coordinate_ = coordinate;
    Surd::root(d);
    return h;
}

Surd CircleHom::value(const Int& n) const {
    switch (kind_) {
        case Kind::SurdRotation:
            return pos_of(d_, n);
        case Kind::RationalImages: {
            if (domain_.generator_count() != 1)
                throw std::invalid_argument("CircleHom: integer argument needs a single generator");
            Rat v = Rat(n) * images_[0];
            return Surd::from_rational(v, d_).reduced_mod1();
        }
        case Kind::ScaledProjection:
            return pos_of(d_, n);
    }
    throw std::logic_error("CircleHom: unknown kind");
}

Surd CircleHom::value(const AbelianElem& x) const {
    switch (kind_) {
        case Kind::SurdRotation:
            if (x.free_part.size() != 1 || !x.torsion_part.empty())
                throw std::invalid_argument("CircleHom: surd rotation expects an integer element");
            return pos_of(d_, x.free_part[0]);
        case Kind::RationalImages: {
            if (x.free_part.size() != static_cast<size_t>(domain_.rank) ||
                x.torsion_part.size() != domain_.torsion.size())
                throw std::invalid_argument("CircleHom: element does not match the domain");
            Rat v = 0;
            for (int i = 0; i < domain_.rank; ++i) v += Rat(x.free_part[i]) * images_[i];
            for (size_t i = 0; i < domain_.torsion.size(); ++i)
                v += Rat(x.torsion_part[i]) * images_[domain_.rank + i];
            return Surd::from_rational(v, d_).reduced_mod1();
        }
        case Kind::ScaledProjection:
            if (x.free_part.size() != static_cast<size_t>(domain_.rank))
                throw std::invalid_argument("CircleHom: element does not match the domain");
            return pos_of(d_, x.free_part[coordinate_]);
    }
    throw std::logic_error("CircleHom: unknown kind");
}

Surd CircleHom::value(const Rat& q) const {
    if (kind_ == Kind::RationalImages)
        throw std::invalid_argument("CircleHom: rational scaling undefined for rational images");
    return Surd(0, numerator(q), denominator(q), d_).reduced_mod1();
}

// ---------------------------------------------------------------------------
// BohrSet
// ---------------------------------------------------------------------------

BohrSet::BohrSet(CircleHom hom, Rat t) : hom_(std::move(hom)), t_(std::move(t)) {
    if (t_ <= 0 || t_ * 2 > 1)
        throw std::invalid_argument("BohrSet: radius must satisfy 0 < t <= 1/2");
}

static bool near_zero(const Surd& reduced, const Rat& t) {
    return (reduced.abs() - Surd::from_rational(t, reduced.d())).sign() < 0;
}

bool BohrSet::member(const Int& n) const { return near_zero(hom_.value(n), t_); }
bool BohrSet::member(const AbelianElem& x) const { return near_zero(hom_.value(x), t_); }

// ---------------------------------------------------------------------------
// Identity verification
// ---------------------------------------------------------------------------

IdentityReport verify_product_identity(unsigned d, const Rat& t1, const Rat& t2, long long window,
                                       long long witness_bound) {
    if (t1 <= 0 || t2 <= 0 || (t1 + t2) * 2 > 1)
        throw std::invalid_argument("product identity requires t1, t2 > 0 and t1 + t2 <= 1/2");
    IdentityReport rep;
    Rat tsum = t1 + t2;
    Surd zero = Surd::from_rational(0, d);
    std::vector<Int> members_t1, members_t2;
    for (long long x = -window; x <= window; ++x) {
        Surd a = pos_of(d, x);
        if (within(a, zero, t1) && members_t1.size() < 64) members_t1.push_back(x);
        if (within(a, zero, t2) && members_t2.size() < 64) members_t2.push_back(x);
        if (!within(a, zero, tsum)) continue;
        ++rep.checked;
        // x = y + (x - y) with y in X(t1), x - y in X(t2).
        std::vector<Arc> arcs{Arc::around(zero, t1), Arc::around(a, t2)};
        auto exact = [&](const Int& y) {
            Surd py = pos_of(d, y);
            return within(py, zero, t1) && within(py, a, t2);
        };
        if (!scan_rotation(d, arcs, witness_bound, exact, true)) {
            ++rep.inconclusive;
            rep.status = VerifyStatus::Inconclusive;
        }
    }
    // Containment of the product in X(t1 + t2): exact spot checks on sampled
    // member pairs (it holds by additivity of the homomorphism).
    for (const Int& x1 : members_t1)
        for (const Int& x2 : members_t2)
            if (!within(pos_of(d, x1 + x2), zero, tsum)) {
                ++rep.mismatches;
                rep.status = VerifyStatus::Mismatch;
            }
    std::ostringstream os;
    os << "members checked: " << rep.checked << ", unresolved witnesses: " << rep.inconclusive
       << ", containment samples: " << members_t1.size() * members_t2.size();
    rep.detail = os.str();
    return rep;
}

IdentityReport verify_divide_identity(unsigned d, const Rat& t, unsigned m, long long window) {
    if (m < 1) throw std::invalid_argument("divide identity: m must be >= 1");
    if (t <= 0 || t * (m + 1) > 1)
        throw std::invalid_argument("divide identity requires 0 < t <= 1/(m+1)");
    IdentityReport rep;
    Surd zero = Surd::from_rational(0, d);
    Rat tm = t / m;
    for (long long x = -window; x <= window; ++x) {
        ++rep.checked;
        bool lhs = within(pos_of(d, x), zero, tm);
        bool rhs = within(pos_of(d, x), zero, t) && within(pos_of(d, Int(x) * m), zero, t);
        if (lhs != rhs) {
            ++rep.mismatches;
            rep.status = VerifyStatus::Mismatch;
        }
    }
    std::ostringstream os;
    os << "points checked: " << rep.checked << ", mismatches: " << rep.mismatches;
    rep.detail = os.str();
    return rep;
}

namespace {

/// Evaluates X(q*t) purely through the membership oracle of X(t): divide
/// down to X(t/m!) by the pointwise identity, then recombine K = q*m!
/// copies by witness search.
class DerivedChain {
public:
    DerivedChain(unsigned d, Rat t, const Rat& q, Int witness_bound)
        : d_(d), t_(std::move(t)), witness_bound_(std::move(witness_bound)) {
        Int a = numerator(q), b = denominator(q);
        mfac_ = 1;
        Int f = 1;
        while (f % b != 0) {
            ++mfac_;
            f *= mfac_;
        }
        if (mfac_ >= 2 && t_ * 3 > 1)
            throw std::invalid_argument("derived predicate: division chain requires t <= 1/3");
        s_ = t_ / Rat(f);
        K_ = (a * (f / b)).convert_to<unsigned>();
        zero_ = Surd::from_rational(0, d_);
    }

    unsigned copies() const { return K_; }
    const Rat& base_radius() const { return s_; }

    /// Membership in X(t/j!) using only the X(t) oracle.
    bool base_member(const Int& x) const { return level_member(mfac_, x); }

    /// 1 = membership established through the chain; 0 = no witness found
    /// within the bound (never a disproof on its own).
    int chain_member(unsigned k, const Int& x) {
        if (k == 1) return base_member(x) ? 1 : 0;
        auto key = std::make_pair(k, x);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Surd a = pos_of(d_, x);
        Rat reach = s_ * (k - 1);
        std::vector<Arc> arcs{Arc::around(zero_, s_), Arc::around(a, reach)};
        auto exact = [&](const Int& y) {
            if (!base_member(y)) return false;
            return chain_member(k - 1, x - y) == 1;
        };
        int result = scan_rotation(d_, arcs, witness_bound_, exact, true) ? 1 : 0;
        memo_[key] = result;
        return result;
    }

private:
    bool level_member(unsigned j, const Int& x) const {
        if (j <= 1) return within(pos_of(d_, x), zero_, t_);
        return level_member(j - 1, x) && level_member(j - 1, Int(j) * x);
    }

    unsigned d_;
    Rat t_, s_;
    unsigned mfac_ = 1, K_ = 1;
    Int witness_bound_;
    Surd zero_;
    std::map<std::pair<unsigned, Int>, int> memo_;
};

}  // namespace

IdentityReport verify_derived_predicate(unsigned d, const Rat& t, const Rat& q, long long window,
                                        long long witness_bound) {
    if (q <= 0) throw std::invalid_argument("derived predicate: q must be positive");
    Rat qt = q * t;
    if (t <= 0 || qt * 2 > 1)
        throw std::invalid_argument("derived predicate requires 0 < q*t <= 1/2");
    DerivedChain chain(d, t, q, witness_bound);
    IdentityReport rep;
    Surd zero = Surd::from_rational(0, d);
    for (long long x = -window; x <= window; ++x) {
        ++rep.checked;
        bool direct = within(pos_of(d, x), zero, qt);
        bool derived = chain.chain_member(chain.copies(), x) == 1;
        if (derived && !direct) {
            ++rep.mismatches;
            rep.status = VerifyStatus::Mismatch;
        } else if (direct && !derived) {
            ++rep.inconclusive;
            if (rep.status == VerifyStatus::Verified) rep.status = VerifyStatus::Inconclusive;
        }
    }
    std::ostringstream os;
    os << "points checked: " << rep.checked << ", copies: " << chain.copies()
       << ", base radius: " << rational_str(chain.base_radius()) << ", mismatches: "
       << rep.mismatches << ", unresolved: " << rep.inconclusive;
    rep.detail = os.str();
    return rep;
}

// ---------------------------------------------------------------------------
// Kernel maximality witnesses
// ---------------------------------------------------------------------------

WitnessTable max_subgroup_witnesses(const BohrSet& X, const Int& M, const Int& K) {
    WitnessTable table;
    table.complete = true;
    for (Int m = 1; m <= M; ++m) {
        WitnessEntry entry;
        entry.m = m;
        Surd g = X.hom().value(m);
        if (g.sign() == 0) {
            entry.kernel_member = true;  // m generates a subgroup inside the kernel
            table.entries.push_back(entry);
            continue;
        }
        if (!X.member(m)) {
            entry.multiplier = 1;
            table.entries.push_back(entry);
            continue;
        }
        // Direct candidate: the first multiple of |g(m)| reaching past t
        // stays below 1 - t whenever t <= 1/3, so it leaves X(t).
        Surd absg = g.abs();
        Int k0 = surd_ceil(surd_reciprocal(absg).scaled(X.t()));
        if (k0 >= 1 && k0 <= K && !X.member(k0 * m)) {
            entry.multiplier = k0;
            table.entries.push_back(entry);
            continue;
        }
        // Fallback: fixed-point scan over k with exact confirmation.
        uint64_t step = fixed_of(g);
        uint64_t cur = 0;
        Arc inside = Arc::around(Surd::from_rational(0, g.d()), X.t());
        for (Int k = 1; k <= K; ++k) {
            cur += step;
            // Outside the widened arc means certainly outside X(t); confirm exactly anyway.
            if (!inside.contains(cur) && !X.member(k * m)) {
                entry.multiplier = k;
                break;
            }
        }
        if (!entry.multiplier) table.complete = false;
        table.entries.push_back(entry);
    }
    for (const auto& e : table.entries)
        if (!e.kernel_member && !e.multiplier) table.complete = false;
    return table;
}

// ---------------------------------------------------------------------------
// Thickness of Bohr sets
// ---------------------------------------------------------------------------

BohrThickness thickness_of_bohr(unsigned d, const Rat& t, long long window) {
    if (t <= 0 || t * 2 > 1)
        throw std::invalid_argument("thickness_of_bohr: radius must satisfy 0 < t <= 1/2");
    BohrThickness out;
    Int kstar = rat_floor(Rat(1) / t);
    bool boundary = (t * Rat(kstar) == 1);
    out.analytic_bound = (kstar + 1).convert_to<unsigned>();
    out.stated_constant = (rat_floor(Rat(1) / (t * 2)) + 1).convert_to<unsigned>();
    unsigned ws = (boundary ? kstar - 1 : kstar).convert_to<unsigned>();

    // Explicit independent set: ws points near the equally spaced targets
    // j/ws; the slack delta keeps every pairwise circle distance >= t.
    std::vector<Int> witness{0};
    if (ws >= 2) {
        Rat delta = (Rat(1) / ws - t) / 3;
        for (unsigned j = 1; j < ws; ++j) {
            Surd center = Surd::from_rational(Rat(Int(j), Int(ws)), d);
            auto n = find_near(d, center, delta, Int(window));
            if (!n)
                throw std::runtime_error(
                    "thickness_of_bohr: window too small for an independent witness");
            witness.push_back(*n);
        }
        for (size_t i = 0; i < witness.size(); ++i)
            for (size_t j = i + 1; j < witness.size(); ++j) {
                Surd dist = circle_distance(pos_of(d, witness[i]), pos_of(d, witness[j]));
                if ((dist - Surd::from_rational(t, d)).sign() < 0)
                    throw std::runtime_error("thickness_of_bohr: witness verification failed");
            }
    }
    out.witness = std::move(witness);
    out.empirical_min = ws + 1;

    std::ostringstream os;
    os << "independent witness of size " << ws << " shown exactly; any " << (ws + 1)
       << " integers have two positions within < " << rational_str(t)
       << " of each other on the circle (" << (ws + 1)
       << " points leave some gap below the spacing bound";
    if (boundary)
        os << "; the boundary case of " << (ws + 1)
           << " points would force exact rational spacing, impossible for the irrational orbit";
    os << "), so the minimal thickness on the window and on the whole group is " << (ws + 1) << ".";
    out.certificate = os.str();
    return out;
}

// ---------------------------------------------------------------------------
// Dense homomorphisms
// ---------------------------------------------------------------------------

CircleHom build_dense_hom(const AbelianSpec& spec, unsigned d) {
    if (spec.rank >= 1) return CircleHom::scaled_projection(spec, 0, d);
    if (spec.torsion.empty())
        throw std::invalid_argument("build_dense_hom: the trivial group has no dense image");
    Int prod = 1;
    for (size_t i = 0; i < spec.torsion.size(); ++i) {
        if (spec.torsion[i] <= Int(i) * prod)
            throw std::invalid_argument(
                "build_dense_hom: growth condition fails at index " + std::to_string(i) +
                " (order " + spec.torsion[i].str() + " must exceed " + (Int(i) * prod).str() +
                "); no dense homomorphism exists for this family shape");
        prod *= spec.torsion[i];
    }
    std::vector<Rat> images;
    images.reserve(spec.torsion.size());
    for (const auto& c : spec.torsion) images.push_back(Rat(1, c));
    return CircleHom::rational_images(spec, std::move(images));
}

Int next_torsion_order(const std::vector<Int>& torsion) {
    Int prod = 1;
    for (const auto& c : torsion) prod *= c;
    Int next = Int(torsion.size()) * prod + 1;
    return next < 2 ? Int(2) : next;
}

DensityWitness density_witness(const CircleHom& hom, const Rat& eps, const Int& bound) {
    if (eps <= 0) throw std::invalid_argument("density_witness: eps must be positive");
    DensityWitness w;
    switch (hom.kind()) {
        case CircleHom::Kind::SurdRotation:
        case CircleHom::Kind::ScaledProjection: {
            for (const auto& c : sqrt_convergents(hom.radicand(), bound)) {
                Surd dist = Surd(-c.numerator, c.denominator, 1, hom.radicand()).abs();
                if ((dist - Surd::from_rational(eps, hom.radicand())).sign() < 0) {
                    w.resolved = true;
                    w.integer_argument = c.denominator;
                    w.value = Surd(-c.numerator, c.denominator, 1, hom.radicand());
                    if (hom.kind() == CircleHom::Kind::ScaledProjection) {
                        w.element = abelian_zero(hom.domain());
                        w.element.free_part[0] = c.denominator;
                    } else {
                        w.element = AbelianElem{{c.denominator}, {}};
                    }
                    return w;
                }
            }
            return w;
        }
        case CircleHom::Kind::RationalImages: {
            const auto& spec = hom.domain();
            for (int i = 0; i < spec.generator_count(); ++i) {
                const Rat& img = hom.images()[i];
                if (img > 0 && img < eps) {
                    w.resolved = true;
                    w.element = abelian_generator(spec, i);
                    w.value = hom.value(w.element);
                    return w;
                }
            }
            return w;  // unresolved: extend the torsion family for finer witnesses
        }
    }
    return w;
}

}  // namespace thickset::rotation
