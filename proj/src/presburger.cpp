#include "thickset/presburger.hpp"

#include "thickset/setcalc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace thickset::presburger {

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

bool Term::contains(const Int& x) const {
    if (lo && x < *lo) return false;
    if (hi && x >= *hi) return false;
    if (b == 0) return x == a;
    return mod_floor(x, b) == a;
}

bool PresburgerSet::contains(const Int& x) const {
    for (const auto& t : terms)
        if (t.contains(x)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    PresburgerSet run() {
        PresburgerSet set;
        set.terms.push_back(term());
        while (eat('|')) set.terms.push_back(term());
        ws();
        if (i_ < s_.size()) fail("expected '|', '&', or end of input");
        return set;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(i_, msg); }

    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    bool peek(char c) {
        ws();
        return i_ < s_.size() && s_[i_] == c;
    }

    bool peek_word(const char* w) {
        ws();
        size_t n = std::string(w).size();
        return s_.compare(i_, n, w) == 0;
    }

    Int number() {
        ws();
        size_t start = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        size_t digits = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ == digits) {
            i_ = start;
            fail("expected an integer");
        }
        return Int(s_.substr(start, i_ - start));
    }

    // ap := INT | INT '+' INT 'Z' | INT 'Z' | 'Z' | '-' '(' ap ')'
    std::pair<Int, Int> ap() {
        ws();
        if (peek('-') && i_ + 1 < s_.size()) {
            size_t save = i_;
            ++i_;
            if (peek('(')) {
                ++i_;
                auto inner = ap();
                if (!eat(')')) fail("expected ')'");
                if (inner.second == 0) return {-inner.first, 0};
                return {mod_floor(-inner.first, inner.second), inner.second};
            }
            i_ = save;
        }
        if (peek('Z')) {
            ++i_;
            return {0, 1};
        }
        Int n = number();
        if (peek('Z')) {
            ++i_;
            if (n == 0) fail("modulus 0 is not allowed; use a bare integer for a singleton");
            if (n < 0) fail("modulus must be positive");
            return {0, n};
        }
        if (peek('+')) {
            size_t plus_pos = i_;
            ++i_;
            Int b = number();
            if (!peek('Z')) {
                i_ = plus_pos;
                fail("expected a modulus of the form INT Z after '+'");
            }
            ++i_;
            if (b == 0) fail("modulus 0 is not allowed; use a bare integer for a singleton");
            if (b < 0) fail("modulus must be positive");
            return {mod_floor(n, b), b};
        }
        return {n, 0};  // singleton
    }

    // bound := INT | '-inf' | 'inf'; returns nullopt for an infinite end.
    std::optional<Int> bound(bool lower) {
        ws();
        if (peek_word("-inf")) {
            if (!lower) fail("upper bound '-inf' makes the interval empty");
            i_ += 4;
            return std::nullopt;
        }
        if (peek_word("inf")) {
            if (lower) fail("lower bound 'inf' makes the interval empty");
            i_ += 3;
            return std::nullopt;
        }
        return number();
    }

    Term term() {
        auto [a, b] = ap();
        Term t;
        t.a = a;
        t.b = b;
        if (eat('&')) {
            bool lo_closed;
            if (eat('[')) lo_closed = true;
            else if (eat('(')) lo_closed = false;
            else fail("expected '(' or '[' to open an interval");
            auto lo = bound(true);
            if (!eat(',')) fail("expected ',' in interval");
            auto hi = bound(false);
            bool hi_closed;
            if (eat(']')) hi_closed = true;
            else if (eat(')')) hi_closed = false;
            else fail("expected ')' or ']' to close an interval");
            if (lo) t.lo = lo_closed ? *lo : *lo + 1;
            if (hi) t.hi = hi_closed ? *hi + 1 : *hi;
            if (t.lo && t.hi && *t.lo >= *t.hi) fail("empty interval");
        }
        return t;
    }

    const std::string& s_;
    size_t i_ = 0;
};

}  // namespace

PresburgerSet parse(const std::string& text) { return Parser(text).run(); }

std::string print(const PresburgerSet& P) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : P.terms) {
        if (!first) os << " | ";
        first = false;
        if (t.b == 0) os << t.a;
        else if (t.b == 1 && t.a == 0) os << "Z";
        else if (t.a == 0) os << t.b << "Z";
        else os << t.a << "+" << t.b << "Z";
        if (t.lo || t.hi) {
            os << " & ";
            if (t.lo) os << "[" << *t.lo;
            else os << "(-inf";
            os << ", ";
            if (t.hi) os << *t.hi << ")";
            else os << "inf)";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

namespace {

Int ceil_div(const Int& x, const Int& b) { return -floor_div(-x, b); }

/// Residue reduction, interval clipping to actual members, singleton
/// conversion. Returns nullopt for an empty term.
std::optional<Term> clip(Term t) {
    if (t.b < 0) throw std::invalid_argument("Term: modulus must be >= 0");
    if (t.lo && t.hi && *t.lo >= *t.hi) return std::nullopt;
    if (t.b == 0) {
        if ((t.lo && t.a < *t.lo) || (t.hi && t.a >= *t.hi)) return std::nullopt;
        t.lo.reset();
        t.hi.reset();
        return t;
    }
    t.a = mod_floor(t.a, t.b);
    if (t.lo) t.lo = t.a + t.b * ceil_div(*t.lo - t.a, t.b);
    if (t.hi) t.hi = t.a + t.b * floor_div(*t.hi - 1 - t.a, t.b) + 1;
    if (t.lo && t.hi) {
        if (*t.lo >= *t.hi) return std::nullopt;
        if (*t.hi - *t.lo <= t.b) {  // single member left
            Term s;
            s.a = *t.lo;
            s.b = 0;
            return s;
        }
    }
    return t;
}

bool term_less(const Term& x, const Term& y) {
    if (x.b != y.b) return x.b < y.b;
    if (x.a != y.a) return x.a < y.a;
    auto key = [](const std::optional<Int>& v, bool low) {
        return v ? std::make_pair(1, *v) : std::make_pair(low ? 0 : 2, Int(0));
    };
    if (key(x.lo, true) != key(y.lo, true)) return key(x.lo, true) < key(y.lo, true);
    return key(x.hi, false) < key(y.hi, false);
}

/// Every member of t also in u, by class arithmetic or small enumeration.
bool subsumed(const Term& t, const Term& u) {
    if (u.b == 0) return t.b == 0 && t.a == u.a;
    if (t.b == 0) return u.contains(t.a);
    if (t.lo && t.hi && (*t.hi - *t.lo) / t.b <= 64) {
        for (Int x = *t.lo; x < *t.hi; x += t.b)
            if (!u.contains(x)) return false;
        return true;
    }
    if (t.b % u.b != 0 || mod_floor(t.a, u.b) != u.a) return false;
    if (u.lo && (!t.lo || *t.lo < *u.lo)) return false;
    if (u.hi && (!t.hi || *t.hi > *u.hi)) return false;
    return true;
}

}  // namespace

PresburgerSet normalize(const PresburgerSet& P) {
    std::vector<Term> ts;
    for (const auto& raw : P.terms)
        if (auto t = clip(raw)) ts.push_back(*t);

    for (bool changed = true; changed;) {
        changed = false;
        std::sort(ts.begin(), ts.end(), term_less);
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

        // Merge intervals of the same residue class when they touch or
        // overlap (endpoints are member-aligned, so the gap is a multiple
        // of the modulus).
        for (size_t i = 0; i + 1 < ts.size() && !changed; ++i) {
            for (size_t j = i + 1; j < ts.size(); ++j) {
                const Term &x = ts[i], &y = ts[j];
                if (x.b == 0 || x.b != y.b || x.a != y.a) continue;
                // A gap of at least one missing class member between u and v.
                auto gap = [](const Term& u, const Term& v) {
                    return u.hi && v.lo && *v.lo > *u.hi - 1 + u.b;
                };
                if (gap(x, y) || gap(y, x)) continue;
                Term merged = x;
                if (x.lo && y.lo) merged.lo = std::min(*x.lo, *y.lo);
                else merged.lo.reset();
                if (x.hi && y.hi) merged.hi = std::max(*x.hi, *y.hi);
                else merged.hi.reset();
                ts[i] = merged;
                ts.erase(ts.begin() + static_cast<long>(j));
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // Drop terms contained in another term.
        for (size_t i = 0; i < ts.size() && !changed; ++i)
            for (size_t j = 0; j < ts.size(); ++j) {
                if (i == j) continue;
                if (subsumed(ts[j], ts[i])) {
                    ts.erase(ts.begin() + static_cast<long>(j));
                    changed = true;
                    break;
                }
            }
        if (changed) continue;

        // Collapse full-line residue classes that form a coarser full class:
        // the residues mod b, when periodic with period d | b, are exactly
        // the classes mod d.
        std::map<Int, std::set<Int>> full;
        for (const auto& t : ts)
            if (t.b > 0 && !t.lo && !t.hi) full[t.b].insert(t.a);
        for (const auto& [b, residues] : full) {
            for (Int d = 1; d < b; ++d) {
                if (b % d != 0) continue;
                bool periodic = true;
                for (const auto& r : residues)
                    if (!residues.count(mod_floor(r + d, b))) { periodic = false; break; }
                if (!periodic) continue;
                std::vector<Term> next;
                for (const auto& t : ts)
                    if (!(t.b == b && !t.lo && !t.hi)) next.push_back(t);
                std::set<Int> coarse;
                for (const auto& r : residues) coarse.insert(mod_floor(r, d));
                for (const auto& r : coarse) {
                    Term t;
                    t.a = r;
                    t.b = d;
                    next.push_back(t);
                }
                ts = std::move(next);
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return PresburgerSet{std::move(ts)};
}

// ---------------------------------------------------------------------------
// Symmetrization and semantic equality
// ---------------------------------------------------------------------------

namespace {

PresburgerSet negate_set(const PresburgerSet& P) {
    PresburgerSet out;
    for (const auto& t : P.terms) {
        Term n;
        n.b = t.b;
        n.a = t.b == 0 ? -t.a : mod_floor(-t.a, t.b);
        // -[lo, hi) = [1 - hi, 1 - lo)
        if (t.hi) n.lo = 1 - *t.hi;
        if (t.lo) n.hi = 1 - *t.lo;
        out.terms.push_back(n);
    }
    return out;
}

}  // namespace

PresburgerSet symmetrize(const PresburgerSet& P) {
    PresburgerSet both = P;
    PresburgerSet neg = negate_set(P);
    both.terms.insert(both.terms.end(), neg.terms.begin(), neg.terms.end());
    return normalize(both);
}

EventualData eventual_data(const PresburgerSet& P) {
    PresburgerSet N = normalize(P);
    EventualData d;
    Int maxmag = 0;
    for (const auto& t : N.terms) {
        if (t.b > 0) d.L = int_lcm(d.L, t.b);
        if (t.b == 0) maxmag = std::max(maxmag, Int(abs(t.a)));
        if (t.lo) maxmag = std::max(maxmag, Int(abs(*t.lo)));
        if (t.hi) maxmag = std::max(maxmag, Int(abs(*t.hi)));
    }
    d.T = maxmag + d.L;
    size_t L = d.L.convert_to<size_t>();
    d.rplus.assign(L, false);
    d.rminus.assign(L, false);
    for (size_t r = 0; r < L; ++r) {
        Int xp = d.T + 1 + mod_floor(Int(r) - (d.T + 1), d.L);
        Int xn = -(d.T + 1) - mod_floor(-(d.T + 1) - Int(r), d.L);
        d.rplus[r] = N.contains(xp);
        d.rminus[r] = N.contains(xn);
    }
    return d;
}

bool set_equal(const PresburgerSet& P, const PresburgerSet& Q) {
    EventualData dp = eventual_data(P), dq = eventual_data(Q);
    Int M = std::max(dp.T, dq.T) + int_lcm(dp.L, dq.L);
    for (Int x = -M; x <= M; ++x)
        if (P.contains(x) != Q.contains(x)) return false;
    Int LL = int_lcm(dp.L, dq.L);
    for (Int r = 0; r < LL; ++r) {
        if (dp.rplus[mod_floor(r, dp.L).convert_to<size_t>()] !=
            dq.rplus[mod_floor(r, dq.L).convert_to<size_t>()])
            return false;
        if (dp.rminus[mod_floor(r, dp.L).convert_to<size_t>()] !=
            dq.rminus[mod_floor(r, dq.L).convert_to<size_t>()])
            return false;
    }
    return true;
}

bool is_symmetric(const PresburgerSet& P) { return set_equal(P, negate_set(P)); }

// ---------------------------------------------------------------------------
// Thickness
// ---------------------------------------------------------------------------

ThicknessVerdict decide_thick(const PresburgerSet& P, size_t cap) {
    ThicknessVerdict v;
    v.symmetric_input = is_symmetric(P);
    PresburgerSet S = symmetrize(P);
    v.data = eventual_data(S);
    v.thick = v.data.rplus[0];

    if (!v.thick) {
        // All differences in the family {0, s, 2s, ...} are positive
        // multiples of L beyond T, hence outside P.
        v.witness_spacing = v.data.L * (v.data.T + 1);
        for (int k = 1; k <= 8; ++k)
            if (S.contains(v.witness_spacing * k))
                throw std::runtime_error("decide_thick: non-thick witness validation failed");
        return v;
    }

    Int Wi = 2 * (v.data.T + v.data.L);
    size_t W = Wi.convert_to<size_t>();
    std::vector<bool> diff(W + 1, false);
    for (size_t x = 1; x <= W; ++x) diff[x] = S.contains(Int(x));
    auto res = thickset::min_thickness(
        W + 1, [&diff](size_t i, size_t j) { return diff[i < j ? j - i : i - j]; }, cap);
    v.capped = res.witness.cap_hit;
    v.minimal_lower_bound = res.witness.points.size() + 1;
    if (!v.capped) v.minimal = res.min_thickness;
    for (size_t p : res.witness.points) v.independent_witness.push_back(Int(p));
    return v;
}

// ---------------------------------------------------------------------------
// Genericity
// ---------------------------------------------------------------------------

namespace {

/// Builds a cover problem over central points plus eventual residue classes.
/// Concrete shifts range over [-smax, smax]; central points over [-umax,
/// umax] with umax >= smax + T + L so that points beyond the central zone
/// are governed by the residue rules. `generous` additionally adds abstract
/// far-shift candidates, which makes the optimum a lower bound for covers
/// of Z by arbitrary shifts.
struct GenericReduction {
    std::vector<Int> shifts;  // candidate id -> shift value (far types absent)
    thickset::CoverProblem problem;
    size_t central_count = 0;
    Int umax = 0;
};

GenericReduction build_reduction(const PresburgerSet& S, const EventualData& d, const Int& smax,
                                 const Int& umax, bool generous) {
    GenericReduction red;
    red.umax = umax;
    size_t L = d.rplus.size();
    size_t central = (2 * umax + 1).convert_to<size_t>();
    red.central_count = central;
    red.problem.universe = central + 2 * L;
    auto central_id = [&](const Int& x) { return (x + umax).convert_to<uint32_t>(); };
    auto plus_id = [&](size_t r) { return static_cast<uint32_t>(central + r); };
    auto minus_id = [&](size_t r) { return static_cast<uint32_t>(central + L + r); };

    std::map<std::vector<uint32_t>, size_t> seen;
    auto add_candidate = [&](std::vector<uint32_t> covered, const Int& shift, bool concrete) {
        std::sort(covered.begin(), covered.end());
        if (seen.count(covered)) return;
        seen[covered] = red.problem.candidates.size();
        red.problem.candidates.push_back(std::move(covered));
        red.shifts.push_back(concrete ? shift : Int(0));
    };

    for (Int s = -smax; s <= smax; ++s) {
        std::vector<uint32_t> covered;
        for (Int x = -umax; x <= umax; ++x)
            if (S.contains(x - s)) covered.push_back(central_id(x));
        size_t sig = mod_floor(s, d.L).convert_to<size_t>();
        for (size_t r = 0; r < L; ++r) {
            if (d.rplus[(r + L - sig) % L]) covered.push_back(plus_id(r));
            if (d.rminus[(r + L - sig) % L]) covered.push_back(minus_id(r));
        }
        add_candidate(std::move(covered), s, true);
    }
    if (generous) {
        for (size_t sig = 0; sig < L; ++sig) {
            // Abstract far-positive shift with residue sig.
            std::vector<uint32_t> covered;
            for (Int x = -umax; x <= umax; ++x)
                if (d.rminus[mod_floor(x - Int(sig), d.L).convert_to<size_t>()])
                    covered.push_back(central_id(x));
            for (size_t r = 0; r < L; ++r) {
                if (d.rplus[(r + L - sig) % L]) covered.push_back(plus_id(r));
                if (d.rminus[(r + L - sig) % L]) covered.push_back(minus_id(r));
            }
            add_candidate(std::move(covered), Int(0), false);
            // Abstract far-negative shift.
            covered.clear();
            for (Int x = -umax; x <= umax; ++x)
                if (d.rplus[mod_floor(x - Int(sig), d.L).convert_to<size_t>()])
                    covered.push_back(central_id(x));
            for (size_t r = 0; r < L; ++r) {
                if (d.rplus[(r + L - sig) % L]) covered.push_back(plus_id(r));
                if (d.rminus[(r + L - sig) % L]) covered.push_back(minus_id(r));
            }
            add_candidate(std::move(covered), Int(0), false);
        }
    }
    return red;
}

}  // namespace

GenericVerdict decide_generic(const PresburgerSet& P) {
    GenericVerdict v;
    PresburgerSet S = symmetrize(P);
    EventualData d = eventual_data(S);
    bool has_plus = std::any_of(d.rplus.begin(), d.rplus.end(), [](bool b) { return b; });
    bool has_minus = std::any_of(d.rminus.begin(), d.rminus.end(), [](bool b) { return b; });
    if (!has_plus || !has_minus) {
        v.generic = false;  // a fixed far tail can never be reached by finitely many shifts
        return v;
    }

    // Sound upper bound: exact minimum over shifts in [-smax, smax]; such a
    // cover of the extended central window plus the residue classes covers
    // all of Z, because |x - s| > T beyond the window.
    Int smax = 2 * d.T + 4 * d.L;
    Int umax = smax + d.T + d.L;
    GenericReduction upper = build_reduction(S, d, smax, umax, false);
    auto cover = thickset::min_set_cover(upper.problem);
    if (!cover) throw std::runtime_error("decide_generic: bounded cover search failed unexpectedly");
    v.generic = true;
    v.m = cover->size();
    for (size_t id : *cover) v.translates.push_back(upper.shifts[id]);
    std::sort(v.translates.begin(), v.translates.end());

    // Combinatorial lower bound: any cover of Z induces a cover of the small
    // universe when far shifts are abstracted to their residue behaviour.
    Int smax_lb = 2 * d.T + 2 * d.L;
    Int umax_lb = d.T + d.L;
    GenericReduction lower = build_reduction(S, d, smax_lb, umax_lb, true);
    auto lb_cover = thickset::min_set_cover(lower.problem);
    v.lower_bound = lb_cover ? lb_cover->size() : 1;
    v.exact = (v.lower_bound == v.m);
    return v;
}

// ---------------------------------------------------------------------------
// Doubling lattices
// ---------------------------------------------------------------------------

LatticeResult lattice_in_double(const PresburgerSet& P) {
    PresburgerSet S = symmetrize(P);
    EventualData d = eventual_data(S);
    if (!d.rplus[0])
        throw std::invalid_argument("lattice_in_double: the set is not thick");
    size_t L = d.rplus.size();
    LatticeResult out;
    for (Int g = 1; g <= d.L; ++g) {
        if (d.L % g != 0) continue;
        bool all = true;
        for (size_t r = 0; r < L; r += g.convert_to<size_t>())
            if (!d.rplus[r]) { all = false; break; }
        if (all) {
            out.b = g;
            break;
        }
    }
    if (out.b == 0) throw std::runtime_error("lattice_in_double: no full class despite thickness");

    // P + P ⊇ bZ: write x = p1 + (x - p1) with p1 a far-positive multiple of
    // b and x - p1 far negative with the same residue class.
    out.window = 10 * out.b * (d.T + 1);
    out.verified = true;
    for (Int x = -out.window; x <= out.window; x += out.b) {
        Int p1 = out.b * ceil_div(d.T + 1 + abs(x) + d.L, out.b);
        Int p2 = x - p1;
        if (!S.contains(p1) || !S.contains(p2)) {
            out.verified = false;
            break;
        }
    }
    if (!out.verified) throw std::runtime_error("lattice_in_double: window verification failed");
    return out;
}

MultidimResult multidim_lattice(const std::vector<PresburgerSet>& axes) {
    if (axes.empty()) throw std::invalid_argument("multidim_lattice: at least one axis required");
    MultidimResult out;
    out.n = 1;
    for (size_t i = 0; i < axes.size(); ++i) {
        try {
            LatticeResult r = lattice_in_double(axes[i]);
            out.axis_b.push_back(r.b);
            out.n = int_lcm(out.n, r.b);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("multidim_lattice: axis " + std::to_string(i + 1) +
                                        " not thick");
        }
    }
    // n is a multiple of every axis modulus; re-verify each axis doubling
    // against the common lattice spacing n on its own window.
    out.verified = true;
    for (size_t i = 0; i < axes.size(); ++i) {
        PresburgerSet S = symmetrize(axes[i]);
        EventualData d = eventual_data(S);
        Int window = 10 * out.n * (d.T + 1);
        for (Int x = -window; x <= window; x += out.n) {
            Int p1 = out.axis_b[i] * ceil_div(d.T + 1 + abs(x) + d.L, out.axis_b[i]);
            if (!S.contains(p1) || !S.contains(x - p1)) {
                out.verified = false;
                break;
            }
        }
    }
    if (!out.verified) throw std::runtime_error("multidim_lattice: window verification failed");
    return out;
}

PresburgerSet scale_set(const PresburgerSet& P, const Int& n) {
    if (n < 1) throw std::invalid_argument("scale_set: n must be >= 1");
    PresburgerSet out;
    for (const auto& t : P.terms) {
        Term s;
        s.b = t.b * n;
        s.a = t.b == 0 ? t.a * n : mod_floor(t.a * n, s.b);
        if (t.lo) s.lo = *t.lo * n;
        if (t.hi) s.hi = (*t.hi - 1) * n + 1;
        out.terms.push_back(s);
    }
    return normalize(out);
}

}  // namespace thickset::presburger
