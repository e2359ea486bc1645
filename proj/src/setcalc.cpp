#include "thickset/setcalc.hpp"

#include <algorithm>
#include <stdexcept>

namespace thickset {

namespace {

// Depth-first maximum independent set (equivalently, maximum clique in the
// compatibility graph). Candidates at each node are greedily clique-covered
// in universe order; the cover index bounds how much the current set can
// still grow, which prunes the branch.
class IndependentSearcher {
public:
    IndependentSearcher(size_t n, const ConflictFn& conflict, size_t cap)
        : n_(n), conflict_(conflict), cap_(cap) {}

    IndependentWitness run() {
        // Greedy pass first: when independent sets are plentiful this reaches
        // the cap without touching the quadratic clique-cover machinery.
        std::vector<size_t> greedy;
        for (size_t v = 0; v < n_ && greedy.size() < cap_; ++v) {
            bool ok = true;
            for (size_t u : greedy)
                if (conflicts(u, v)) { ok = false; break; }
            if (ok) greedy.push_back(v);
        }
        best_ = greedy;
        if (best_.size() >= cap_) {
            cap_hit_ = true;
            done_ = true;
        }
        std::vector<size_t> all(n_);
        for (size_t i = 0; i < n_; ++i) all[i] = i;
        expand(all);
        IndependentWitness w;
        w.points = best_;
        w.checked_pairs = checked_;
        w.cap_hit = cap_hit_;
        return w;
    }

private:
    bool conflicts(size_t a, size_t b) {
        ++checked_;
        return conflict_(a, b);
    }

    // Greedy clique cover of the conflict graph restricted to `cands`: a
    // vertex joins the first class it conflicts with entirely. Returns the
    // class index (1-based) per candidate; an independent subset of `cands`
    // picks at most one vertex per class.
    std::vector<size_t> clique_cover(const std::vector<size_t>& cands,
                                     std::vector<std::vector<size_t>>& classes) {
        classes.clear();
        std::vector<size_t> color(cands.size());
        for (size_t idx = 0; idx < cands.size(); ++idx) {
            size_t v = cands[idx];
            size_t assigned = 0;
            for (size_t c = 0; c < classes.size(); ++c) {
                bool all = true;
                for (size_t u : classes[c])
                    if (!conflicts(u, v)) { all = false; break; }
                if (all) { assigned = c + 1; break; }
            }
            if (assigned == 0) {
                classes.push_back({});
                assigned = classes.size();
            }
            classes[assigned - 1].push_back(v);
            color[idx] = assigned;
        }
        return color;
    }

    void expand(const std::vector<size_t>& cands) {
        if (done_) return;
        if (cur_.size() > best_.size()) {
            best_ = cur_;
            if (best_.size() >= cap_) {
                cap_hit_ = true;
                done_ = true;
                return;
            }
        }
        if (cands.empty()) return;

        std::vector<std::vector<size_t>> classes;
        std::vector<size_t> color = clique_cover(cands, classes);

        // Order candidates by color ascending (stable: keeps universe order
        // inside a class) and process from the back.
        std::vector<size_t> order(cands.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return color[a] < color[b]; });

        std::vector<char> removed(cands.size(), 0);
        for (size_t k = order.size(); k-- > 0;) {
            if (done_) return;
            size_t idx = order[k];
            size_t v = cands[idx];
            if (cur_.size() + color[idx] <= best_.size()) return;  // all remaining have <= color
            std::vector<size_t> next;
            for (size_t j = 0; j < cands.size(); ++j) {
                if (removed[j] || j == idx) continue;
                if (!conflicts(v, cands[j])) next.push_back(cands[j]);
            }
            cur_.push_back(v);
            expand(next);
            cur_.pop_back();
            removed[idx] = 1;
        }
    }

    size_t n_;
    const ConflictFn& conflict_;
    size_t cap_;
    std::vector<size_t> cur_, best_;
    uint64_t checked_ = 0;
    bool cap_hit_ = false;
    bool done_ = false;
};

}  // namespace

IndependentWitness max_independent_set(size_t universe_size, const ConflictFn& conflict, size_t cap) {
    if (cap < 1) throw std::invalid_argument("max_independent_set: cap must be >= 1");
    IndependentSearcher s(universe_size, conflict, cap);
    return s.run();
}

std::optional<std::vector<size_t>> find_independent_set(size_t universe_size,
                                                        const ConflictFn& conflict, size_t target) {
    if (target == 0) return std::vector<size_t>{};
    IndependentSearcher s(universe_size, conflict, target);
    IndependentWitness w = s.run();
    if (w.points.size() >= target) return w.points;
    return std::nullopt;
}

ThicknessResult min_thickness(size_t universe_size, const ConflictFn& conflict, size_t cap) {
    ThicknessResult r;
    r.witness = max_independent_set(universe_size, conflict, cap);
    r.min_thickness = r.witness.points.size() + 1;
    return r;
}

// ---------------------------------------------------------------------------
// Exact set cover by translates on finite groups.
// ---------------------------------------------------------------------------

namespace {

using Mask = std::vector<uint64_t>;

Mask make_mask(size_t bits) { return Mask((bits + 63) / 64, 0); }
void set_bit(Mask& m, size_t i) { m[i / 64] |= uint64_t(1) << (i % 64); }
bool get_bit(const Mask& m, size_t i) { return (m[i / 64] >> (i % 64)) & 1; }
size_t popcount(const Mask& m) {
    size_t c = 0;
    for (uint64_t w : m) c += static_cast<size_t>(__builtin_popcountll(w));
    return c;
}
bool covers_all(const Mask& m, size_t bits) {
    for (size_t i = 0; i < bits; ++i)
        if (!get_bit(m, i)) return false;
    return true;
}

struct CoverSearch {
    size_t n;
    std::vector<Mask> candidate_masks;  // per group element
    std::vector<int> best;              // best cover found (translate ids)
    size_t limit;                       // do not search beyond this size

    std::vector<int> greedy() const {
        Mask covered = make_mask(n);
        std::vector<int> picks;
        while (!covers_all(covered, n)) {
            int best_g = -1;
            size_t best_gain = 0;
            for (size_t g = 0; g < candidate_masks.size(); ++g) {
                size_t gain = 0;
                for (size_t w = 0; w < covered.size(); ++w)
                    gain += static_cast<size_t>(
                        __builtin_popcountll(candidate_masks[g][w] & ~covered[w]));
                if (gain > best_gain) {
                    best_gain = gain;
                    best_g = static_cast<int>(g);
                }
            }
            if (best_g < 0) return {};  // cannot cover
            picks.push_back(best_g);
            for (size_t w = 0; w < covered.size(); ++w) covered[w] |= candidate_masks[best_g][w];
        }
        return picks;
    }

    void dfs(Mask covered, std::vector<int>& chosen, size_t max_gain) {
        if (!best.empty() && chosen.size() >= best.size()) return;
        if (covers_all(covered, n)) {
            best = chosen;
            return;
        }
        size_t uncovered = n - popcount(covered);
        size_t lower = (uncovered + max_gain - 1) / max_gain;
        if (!best.empty() && chosen.size() + lower >= best.size()) return;
        if (chosen.size() + lower > limit) return;
        // Branch on the first uncovered element: some translate must cover it.
        size_t pivot = 0;
        while (get_bit(covered, pivot)) ++pivot;
        for (size_t g = 0; g < candidate_masks.size(); ++g) {
            if (!get_bit(candidate_masks[g], pivot)) continue;
            Mask next = covered;
            for (size_t w = 0; w < next.size(); ++w) next[w] |= candidate_masks[g][w];
            chosen.push_back(static_cast<int>(g));
            dfs(std::move(next), chosen, max_gain);
            chosen.pop_back();
        }
    }
};

std::vector<Mask> translate_masks(const FiniteGroup& G, const std::vector<bool>& P, Side side) {
    size_t n = static_cast<size_t>(G.order());
    std::vector<Mask> masks(n, make_mask(n));
    for (size_t g = 0; g < n; ++g)
        for (size_t p = 0; p < n; ++p)
            if (P[p]) {
                int covered = side == Side::Right ? G.op(static_cast<int>(p), static_cast<int>(g))
                                                  : G.op(static_cast<int>(g), static_cast<int>(p));
                set_bit(masks[g], static_cast<size_t>(covered));
            }
    return masks;
}

GenericityCertificate run_cover(const FiniteGroup& G, const std::vector<bool>& P, Side side,
                                size_t limit) {
    size_t n = static_cast<size_t>(G.order());
    if (P.size() != n) throw std::invalid_argument("min_genericity: set size mismatch");
    size_t psize = 0;
    for (bool b : P) psize += b;
    if (psize == 0) throw std::invalid_argument("min_genericity: empty set is not generic");

    CoverSearch s;
    s.n = n;
    s.candidate_masks = translate_masks(G, P, side);
    s.limit = limit;
    std::vector<int> greedy = s.greedy();
    if (!greedy.empty()) s.best = greedy;
    std::vector<int> chosen;
    s.dfs(make_mask(n), chosen, psize);

    GenericityCertificate cert;
    cert.side = side;
    if (!s.best.empty() && s.best.size() <= limit) {
        cert.translates = s.best;
        cert.covers = true;
    }
    return cert;
}

}  // namespace

std::optional<std::vector<size_t>> min_set_cover(const CoverProblem& problem) {
    if (problem.universe == 0) return std::vector<size_t>{};
    CoverSearch s;
    s.n = problem.universe;
    s.candidate_masks.reserve(problem.candidates.size());
    size_t max_gain = 1;
    Mask all = make_mask(problem.universe);
    for (const auto& cand : problem.candidates) {
        Mask m = make_mask(problem.universe);
        for (uint32_t e : cand) {
            if (e >= problem.universe) throw std::invalid_argument("min_set_cover: element out of range");
            set_bit(m, e);
        }
        max_gain = std::max(max_gain, cand.size());
        for (size_t w = 0; w < all.size(); ++w) all[w] |= m[w];
        s.candidate_masks.push_back(std::move(m));
    }
    if (!covers_all(all, problem.universe)) return std::nullopt;
    s.limit = problem.universe + 1;
    std::vector<int> greedy = s.greedy();
    if (!greedy.empty()) s.best = greedy;
    std::vector<int> chosen;
    s.dfs(make_mask(problem.universe), chosen, max_gain);
    if (s.best.empty()) return std::nullopt;
    std::vector<size_t> out;
    out.reserve(s.best.size());
    for (int g : s.best) out.push_back(static_cast<size_t>(g));
    return out;
}

GenericityCertificate min_genericity(const FiniteGroup& G, const std::vector<bool>& P, Side side) {
    GenericityCertificate cert = run_cover(G, P, side, static_cast<size_t>(G.order()));
    if (!cert.covers) throw std::runtime_error("min_genericity: internal cover search failure");
    return cert;
}

std::optional<GenericityCertificate> cover_within(const FiniteGroup& G, const std::vector<bool>& P,
                                                  size_t limit, Side side) {
    GenericityCertificate cert = run_cover(G, P, side, limit);
    if (!cert.covers || cert.translates.size() > limit) return std::nullopt;
    return cert;
}

// ---------------------------------------------------------------------------
// Product sets and the generic-set subgroup construction.
// ---------------------------------------------------------------------------

std::vector<bool> product_set(const FiniteGroup& G, const std::vector<bool>& P,
                              const std::vector<bool>& Q) {
    size_t n = static_cast<size_t>(G.order());
    std::vector<bool> out(n, false);
    for (size_t a = 0; a < n; ++a)
        if (P[a])
            for (size_t b = 0; b < n; ++b)
                if (Q[b]) out[static_cast<size_t>(G.op(static_cast<int>(a), static_cast<int>(b)))] = true;
    return out;
}

std::vector<bool> power_set(const FiniteGroup& G, const std::vector<bool>& P, size_t k) {
    if (k == 0) {
        std::vector<bool> e(static_cast<size_t>(G.order()), false);
        e[static_cast<size_t>(G.identity())] = true;
        return e;
    }
    std::vector<bool> acc = P;
    for (size_t i = 1; i < k; ++i) {
        acc = product_set(G, acc, P);
        // Product sets of a generating family stabilize at the whole group.
        if (std::all_of(acc.begin(), acc.end(), [](bool b) { return b; })) break;
    }
    return acc;
}

SubgroupResult subgroup_from_generic(const FiniteGroup& G, const std::vector<bool>& P, size_t m) {
    size_t n = static_cast<size_t>(G.order());
    if (P.size() != n) throw std::invalid_argument("subgroup_from_generic: set size mismatch");
    if (!P[static_cast<size_t>(G.identity())])
        throw std::invalid_argument("subgroup_from_generic: identity not in P");
    for (size_t a = 0; a < n; ++a)
        if (P[a] != P[static_cast<size_t>(G.inv(static_cast<int>(a)))])
            throw std::invalid_argument("subgroup_from_generic: P is not symmetric");
    if (m < 1) throw std::invalid_argument("subgroup_from_generic: m must be >= 1");
    if (!cover_within(G, P, m, Side::Right))
        throw std::invalid_argument("subgroup_from_generic: P is not right m-generic");

    std::vector<bool> S = power_set(G, P, 3 * m - 2);
    for (size_t a = 0; a < n; ++a) {
        if (!S[a]) continue;
        if (!S[static_cast<size_t>(G.inv(static_cast<int>(a)))])
            throw std::runtime_error("subgroup_from_generic: product set not inverse-closed");
        for (size_t b = 0; b < n; ++b)
            if (S[b] && !S[static_cast<size_t>(G.op(static_cast<int>(a), static_cast<int>(b)))])
                throw std::runtime_error("subgroup_from_generic: product set not closed");
    }
    SubgroupResult r;
    r.subgroup = std::move(S);
    r.order = 0;
    for (bool b : r.subgroup) r.order += b;
    if (n % r.order != 0) throw std::runtime_error("subgroup_from_generic: order does not divide |G|");
    r.index = n / r.order;
    if (r.index > m) throw std::runtime_error("subgroup_from_generic: index exceeds m");
    return r;
}

// ---------------------------------------------------------------------------
// Ramsey numbers.
// ---------------------------------------------------------------------------

uint64_t ramsey_bound(unsigned n, unsigned m) {
    if (n < 2 || m < 2) throw std::invalid_argument("ramsey_bound: arguments must be >= 2");
    // C(n+m-2, n-1)
    uint64_t num = 1, den = 1;
    for (unsigned i = 1; i <= n - 1; ++i) {
        num *= (m - 1) + i;
        den *= i;
    }
    return num / den;
}

namespace {

// Red adjacency stored as bitmasks over previously placed vertices. Checks
// whether adding vertex v with red neighbourhood `mask` creates a red K_s or
// blue K_t within the first v vertices. s, t <= 4.
bool creates_red_clique(const std::vector<uint32_t>& red, int v, uint32_t mask, unsigned s) {
    if (s == 2) return mask != 0;
    for (int i = 0; i < v; ++i) {
        if (!((mask >> i) & 1)) continue;
        uint32_t common = red[i] & mask & ~((uint32_t(1) << (i + 1)) - 1);
        if (s == 3) {
            if (common) return true;
        } else {  // s == 4: need a red edge inside `common`
            for (int j = i + 1; j < v; ++j)
                if (((common >> j) & 1) && (red[j] & common & ~((uint32_t(1) << (j + 1)) - 1)))
                    return true;
        }
    }
    return false;
}

struct RamseySearch {
    unsigned s, t;
    int N;
    std::vector<uint32_t> red, blue;
    bool found = false;
    std::vector<uint32_t> result;

    void dfs(int v) {
        if (found) return;
        if (v == N) {
            found = true;
            result = red;
            return;
        }
        uint32_t below = (uint32_t(1) << v) - 1;
        for (uint32_t mask = 0; mask <= below && !found; ++mask) {
            uint32_t bmask = below & ~mask;
            if (creates_red_clique(red, v, mask, s)) continue;
            if (creates_red_clique(blue, v, bmask, t)) continue;
            red.push_back(mask);
            blue.push_back(bmask);
            for (int i = 0; i < v; ++i) {
                if ((mask >> i) & 1) red[i] |= uint32_t(1) << v;
                if ((bmask >> i) & 1) blue[i] |= uint32_t(1) << v;
            }
            dfs(v + 1);
            for (int i = 0; i < v; ++i) {
                red[i] &= ~(uint32_t(1) << v);
                blue[i] &= ~(uint32_t(1) << v);
            }
            red.pop_back();
            blue.pop_back();
        }
    }
};

std::optional<std::vector<uint32_t>> avoiding_coloring(int N, unsigned s, unsigned t) {
    RamseySearch rs;
    rs.s = s;
    rs.t = t;
    rs.N = N;
    rs.dfs(0);
    if (rs.found) return rs.result;
    return std::nullopt;
}

}  // namespace

RamseyResult exact_small_ramsey(unsigned n, unsigned m) {
    if (n < 2 || m < 2) throw std::invalid_argument("exact_small_ramsey: arguments must be >= 2");
    if (std::max(n, m) > 4 || n + m > 7)
        throw std::invalid_argument("exact_small_ramsey: outside the supported small range");

    RamseyResult out;
    int N = static_cast<int>(std::max(n, m)) - 1;
    std::vector<uint32_t> witness;
    for (;; ++N) {
        auto col = avoiding_coloring(N, n, m);
        if (!col) break;
        witness = *col;
    }
    out.value = static_cast<unsigned>(N);
    for (int i = 0; i < static_cast<int>(witness.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(witness.size()); ++j)
            if ((witness[i] >> j) & 1) out.witness_red_edges.emplace_back(i, j);
    return out;
}

IntersectionReport check_thick_intersection(size_t universe_size, const ConflictFn& intersection,
                                            unsigned n, unsigned m) {
    IntersectionReport rep;
    rep.bound = ramsey_bound(n, m);
    auto found = find_independent_set(universe_size, intersection, static_cast<size_t>(rep.bound));
    if (found) {
        rep.verified = false;
        rep.counterexample = *found;
    } else {
        rep.verified = true;
    }
    return rep;
}

}  // namespace thickset
