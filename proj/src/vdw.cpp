#include "thickset/vdw.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace thickset::vdw {

Surd position01(const Surd& value) {
    Surd r = value.reduced_mod1();
    if (r.sign() < 0) r = r + Rat(1);
    return r;
}

namespace {

/// Does the open arc (lo, hi) — with lo in [0, 1), hi possibly past 1 —
/// contain the circle point e given by a representative in [0, 1)?
bool arc_contains(const std::pair<Surd, Surd>& arc, const Surd& e) {
    for (int shift = 0; shift <= 1; ++shift) {
        Surd cand = shift == 0 ? e : e + Rat(1);
        if (arc.first.compare(cand) < 0 && cand.compare(arc.second) < 0) return true;
    }
    return false;
}

bool bohr_member_int(unsigned d, const Rat& t, const Int& x) {
    return rotation::rotation_position(d, x).abs().compare(t) < 0;
}

/// Finds an integer y whose rotation position lies strictly inside the open
/// interval (lo, hi) (representatives on the real line, hi - lo > 0), by
/// shrinking-radius searches around the midpoint. The caller re-verifies.
std::optional<Int> find_in_interval(unsigned d, const Surd& lo, const Surd& hi,
                                    long long witness_bound) {
    Surd center = (lo + hi).scaled(Rat(1, 2));
    for (int j = 2; j <= 40; ++j) {
        Rat r(1, Int(1) << j);
        auto y = rotation::find_near(d, center, r, Int(witness_bound), true);
        if (!y) continue;
        Surd pos = rotation::rotation_position(d, *y);
        // Compare against the interval on the circle: some representative of
        // pos must land in (lo, hi).
        for (int shift = -1; shift <= 1; ++shift) {
            Surd cand = pos + Rat(shift);
            if (lo.compare(cand) < 0 && cand.compare(hi) < 0) return y;
        }
    }
    return std::nullopt;
}

}  // namespace

bool check_arc_cover(const ArcCoverCertificate& cert) {
    if (cert.arcs.empty()) return false;
    for (const auto& a : cert.arcs) {
        if ((a.second - a.first).compare(Rat(1)) >= 0) return true;  // one arc wraps fully
        if (a.second.compare(a.first) <= 0) return false;           // degenerate
    }
    // The union misses a point only if some arc endpoint is on the boundary
    // of the union, i.e. interior to no arc.
    for (const auto& a : cert.arcs)
        for (const Surd& e : {position01(a.first), position01(a.second)}) {
            bool inside = false;
            for (const auto& b : cert.arcs)
                if (arc_contains(b, e)) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
    return true;
}

Covering build_covering(unsigned n, Variant variant, unsigned d) {
    if (n < 1) throw std::invalid_argument("build_covering: n >= 1 required");
    unsigned count = variant == Variant::ThreeNPlusOne ? 3 * n + 1 : 2 * n + 1;
    Rat t = variant == Variant::ThreeNPlusOne ? Rat(1, 6 * n) : Rat(2, 8 * n + 1);
    Rat width = 2 * t;
    Rat spacing(1, count);
    Rat radius = (width - spacing) / 3;  // arcs this close to targets must overlap
    if (radius <= 0) throw std::logic_error("build_covering: arcs narrower than spacing");

    std::vector<Int> translates{0};
    for (unsigned i = 1; i < count; ++i) {
        Rat target(i, count);
        if (target > Rat(1, 2)) target -= 1;
        Surd center = Surd::from_rational(target, d);
        std::optional<Int> a;
        for (Int bound = 10000; bound <= 10000000 && !a; bound *= 10)
            a = rotation::find_near(d, center, radius, bound);
        if (!a) {
            std::ostringstream os;
            os << "build_covering: search budget exhausted at target " << i << "/" << count
               << " with " << translates.size() << " of " << count << " translates placed";
            throw std::runtime_error(os.str());
        }
        translates.push_back(*a);
    }

    Covering c{rotation::BohrSet(rotation::CircleHom::surd_rotation(d), t), translates, variant, n,
               {}};
    for (const Int& a : translates) {
        Surd lo = position01(rotation::rotation_position(d, a) - t);
        c.certificate.arcs.emplace_back(lo, lo + width);
    }
    std::sort(c.certificate.arcs.begin(), c.certificate.arcs.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    c.certificate.covers = check_arc_cover(c.certificate);
    if (!c.certificate.covers)
        throw std::runtime_error("build_covering: exact arc-cover check failed");
    std::ostringstream os;
    os << count << " open arcs of width " << rational_str(width)
       << " around sqrt(" << d << ")-orbit points; every endpoint interior to another arc";
    c.certificate.detail = os.str();
    return c;
}

DifferenceReport difference_set(const Covering& c, long long window, long long witness_bound) {
    unsigned d = c.base.hom().radicand();
    Rat t = c.base.t();
    Rat t2 = 2 * t;
    DifferenceReport rep{rotation::BohrSet(rotation::CircleHom::surd_rotation(d), t2), 0, 0, true};

    // Sums of members stay inside X(2t) (additivity); spot-check small pairs.
    std::vector<Int> members;
    for (Int u = -50; u <= 50 && members.size() < 16; ++u)
        if (bohr_member_int(d, t, u)) members.push_back(u);
    for (const Int& u : members)
        for (const Int& v : members) {
            ++rep.samples;
            if (!bohr_member_int(d, t2, u + v)) rep.verified = false;
        }

    // Every sampled member of X(2t) decomposes as u + v with both in X(t).
    long long step = std::max(1LL, window / 50);
    for (long long x = -window; x <= window; x += step) {
        if (!bohr_member_int(d, t2, Int(x))) continue;
        ++rep.samples;
        Surd px = rotation::rotation_position(d, Int(x));
        // Valid positions for u: (-t, t) intersected with (g(x) - t, g(x) + t).
        Surd lo = px - t;
        if (lo.compare(-t) < 0) lo = Surd::from_rational(-t, d);
        Surd hi = px + t;
        if (hi.compare(t) > 0) hi = Surd::from_rational(t, d);
        auto u = find_in_interval(d, lo, hi, witness_bound);
        if (u && bohr_member_int(d, t, *u) && bohr_member_int(d, t, Int(x) - *u))
            ++rep.decompositions;
        else
            rep.verified = false;
    }
    return rep;
}

rotation::WitnessTable certify_no_subgroup(const rotation::BohrSet& P, const Int& M, const Int& K) {
    if (P.t() >= Rat(1, 2))
        throw std::invalid_argument("certify_no_subgroup: requires t < 1/2");
    return rotation::max_subgroup_witnesses(P, M, K);
}

PowerCoverCertificate certify_power_covers(const rotation::BohrSet& P, unsigned k,
                                           long long sample_window, long long witness_bound) {
    Rat t = P.t();
    if (k < 2 || Rat(k) * t <= Rat(1, 2))
        throw std::invalid_argument(
            "certify_power_covers: requires k*t > 1/2; below that use the product identities");
    unsigned d = P.hom().radicand();

    // Smallest exponent already past 1/2; the remaining factors contain 0.
    unsigned keff = 2;
    while (Rat(keff) * t <= Rat(1, 2)) ++keff;
    PowerCoverCertificate cert;
    cert.k = k;
    cert.s1 = Rat(keff / 2) * t;
    cert.s2 = Rat(keff) * t - cert.s1;
    if (cert.s1 > Rat(1, 2) || cert.s2 > Rat(1, 2))
        throw std::logic_error("certify_power_covers: no admissible split");

    bool all_ok = true;
    long long step = std::max(1LL, sample_window / 50);
    for (long long x = -sample_window; x <= sample_window; x += step) {
        ++cert.samples;
        Surd px = rotation::rotation_position(d, Int(x));
        // u must satisfy |g(u)| < s1 and |g(x) - g(u)| < s2 on the circle;
        // the two arcs intersect because s1 + s2 > 1/2.
        Surd lo = px - cert.s2;
        if (lo.compare(-cert.s1) < 0) lo = Surd::from_rational(-cert.s1, d);
        Surd hi = px + cert.s2;
        if (hi.compare(cert.s1) > 0) hi = Surd::from_rational(cert.s1, d);
        auto u = find_in_interval(d, lo, hi, witness_bound);
        bool ok = false;
        if (u && bohr_member_int(d, cert.s1, *u)) {
            Surd rest = rotation::rotation_position(d, Int(x) - *u);
            ok = rest.abs().compare(cert.s2) < 0;
        }
        if (ok)
            ++cert.decomposed;
        else
            all_ok = false;
    }
    cert.covers = all_ok;
    std::ostringstream os;
    os << "split X(" << rational_str(cert.s1) << ")*X(" << rational_str(cert.s2)
       << "), sum > 1/2 so the arcs always intersect; factors below the split "
          "combine by the verified product identities";
    cert.detail = os.str();
    return cert;
}

PigeonholeResult pigeonhole_difference(unsigned modulus, const std::vector<bool>& P,
                                       const std::vector<unsigned>& S, unsigned K) {
    if (modulus == 0 || P.size() != modulus)
        throw std::invalid_argument("pigeonhole_difference: P must be a vector over Z/N");
    if (K < 1) throw std::invalid_argument("pigeonhole_difference: K >= 1 required");
    auto in_P = [&](long long v) { return P[static_cast<size_t>(mod_floor(Int(v), modulus))]; };
    for (unsigned g = 0; g < modulus; ++g) {
        bool covered = false;
        for (unsigned s : S)
            if (in_P(static_cast<long long>(g) - s)) {
                covered = true;
                break;
            }
        if (!covered)
            throw std::invalid_argument("pigeonhole_difference: P + S does not cover the group");
    }

    PigeonholeResult res;
    res.elements = modulus;
    std::map<std::vector<unsigned>, unsigned> buckets;  // signature -> first element
    std::map<std::vector<unsigned>, size_t> sizes;
    for (unsigned g = 0; g < modulus; ++g) {
        std::vector<unsigned> sig;
        sig.reserve(K);
        for (unsigned k = 1; k <= K; ++k) {
            unsigned pick = 0;
            for (unsigned idx = 0; idx < S.size(); ++idx)
                if (in_P(static_cast<long long>(k) * g - S[idx])) {
                    pick = idx;
                    break;
                }
            sig.push_back(pick);
        }
        auto [it, fresh] = buckets.emplace(std::move(sig), g);
        ++sizes[it->first];
        if (!fresh && !res.collision) {
            Int x = mod_floor(Int(g) - it->second, modulus);
            if (x != 0) {
                // Verify k*x in P - P directly for all k <= K.
                bool all = true;
                for (unsigned k = 1; k <= K && all; ++k) {
                    Int kx = mod_floor(Int(k) * x, modulus);
                    bool found = false;
                    for (unsigned p = 0; p < modulus && !found; ++p)
                        if (P[p] && in_P(static_cast<long long>(p) - static_cast<long long>(kx)))
                            found = true;
                    all = found;
                }
                if (all) {
                    res.collision = true;
                    res.x = x;
                    res.verified_k = K;
                }
            }
        }
    }
    res.distinct_signatures = buckets.size();
    for (const auto& [sig, cnt] : sizes) res.largest_bucket = std::max(res.largest_bucket, cnt);
    return res;
}

namespace {

/// Rational bounds [lo, hi] on c2*sqrt(2) + c3*sqrt(3) + c5*sqrt(5) with
/// per-root error 2^-bits.
std::pair<Rat, Rat> qseq_bounds(const QSeqElem& x, unsigned bits) {
    Rat lo = 0, hi = 0;
    const std::pair<unsigned, const Rat*> parts[] = {{2u, &x.c2}, {3u, &x.c3}, {5u, &x.c5}};
    Int scale = Int(1) << bits;
    for (auto [p, c] : parts) {
        if (*c == 0) continue;
        Int root_lo = isqrt(Int(p) * scale * scale);
        Rat slo(root_lo, scale), shi(root_lo + 1, scale);
        if (*c > 0) {
            lo += *c * slo;
            hi += *c * shi;
        } else {
            lo += *c * shi;
            hi += *c * slo;
        }
    }
    return {lo, hi};
}

}  // namespace

std::optional<bool> qseq_in_interval(const QSeqElem& x, const Rat& center, const Rat& t) {
    if (t <= 0 || 2 * t > 1) throw std::invalid_argument("qseq_in_interval: need 0 < t <= 1/2");
    if (x.c2 == 0 && x.c3 == 0 && x.c5 == 0) {
        // Exact rational case (value 0): 0 is in (center - t, center + t) mod 1
        // iff some integer shift lands inside.
        for (Int k = rat_floor(center - t); k <= rat_floor(center + t) + 1; ++k)
            if (center - t < Rat(k) && Rat(k) < center + t) return true;
        return false;
    }
    for (unsigned bits = 32; bits <= 512; bits *= 2) {
        auto [lo, hi] = qseq_bounds(x, bits);
        // Certainly inside: the whole interval fits one shifted copy of
        // (center - t, center + t). Certainly outside: it fits one shifted
        // copy of the closed complement [center + t, center + 1 - t].
        for (Int k = rat_floor(lo - center) - 1; k <= rat_floor(hi - center) + 1; ++k) {
            Rat shift(k);
            if (center - t + shift < lo && hi < center + t + shift) return true;
            if (center + t + shift <= lo && hi <= center + 1 - t + shift) return false;
        }
    }
    return std::nullopt;  // precision cap; never a false claim
}

QSeqCoverReport sampled_qseq_covering(unsigned n, Variant variant, unsigned sample_count,
                                      uint64_t seed) {
    Covering c = build_covering(n, variant, 2);
    Rat t = c.base.t();
    QSeqCoverReport rep;
    rep.samples = sample_count;
    std::mt19937_64 gen(seed);
    auto small_rat = [&]() {
        long long num = static_cast<long long>(gen() % 41) - 20;
        long long den = static_cast<long long>(gen() % 8) + 1;
        return Rat(num, den);
    };
    for (unsigned i = 0; i < sample_count; ++i) {
        QSeqElem x{small_rat(), small_rat(), small_rat()};
        bool covered = false;
        for (const Int& a : c.translates) {
            // x - a*e_1 in X(t): shift the sqrt(2) coefficient.
            QSeqElem shifted{x.c2 - Rat(a), x.c3, x.c5};
            auto verdict = qseq_in_interval(shifted, Rat(0), t);
            if (verdict && *verdict) {
                covered = true;
                break;
            }
        }
        if (covered) ++rep.covered;
    }
    rep.all_covered = rep.covered == rep.samples;
    std::ostringstream os;
    os << "generators mapped to sqrt(2), sqrt(3), sqrt(5); trivial kernel on this "
          "support is a stored algebraic fact; "
       << rep.covered << "/" << rep.samples << " samples covered";
    rep.detail = os.str();
    return rep;
}

}  // namespace thickset::vdw
