#include "thickset/nilpower.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace thickset::nilpower {

bool subgroup_membership(const HeisSubgroup& H, const HeisElem& e) {
    // (x, y) = alpha * (m11, m12) + beta * (0, m22) with integer alpha, beta.
    if (e.x % H.m11 != 0) return false;
    Int alpha = e.x / H.m11;
    Int rest = e.y - alpha * H.m12;
    if (rest % H.m22 != 0) return false;
    auto it = H.coset_z.find({Int(0), Int(0)});
    Int want = it == H.coset_z.end() ? Int(0) : it->second;
    return mod_floor(e.z - want, H.center_mod) == 0;
}

namespace {

struct Box {
    Int xy, z;
    bool inside(const HeisElem& e) const {
        return abs(e.x) <= xy && abs(e.y) <= xy && abs(e.z) <= z;
    }
};

/// Closure of the n-th powers of a generator ball under products, confined
/// to a coordinate box.
std::set<HeisElem> bfs_closure(const Int& n, const Box& box) {
    std::vector<HeisElem> gens{{1, 0, 0}, {0, 1, 0}};
    std::vector<HeisElem> powers;
    for (const auto& g : heis_ball(gens, 3)) {
        HeisElem p = heis_pow(g, n);
        if (box.inside(p)) powers.push_back(p);
    }
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

    std::set<HeisElem> closure{heis_identity()};
    std::set<HeisElem> frontier = closure;
    while (!frontier.empty()) {
        std::set<HeisElem> next;
        for (const auto& a : frontier)
            for (const auto& p : powers) {
                for (const HeisElem& b : {heis_mul(a, p), heis_mul(a, heis_inv(p))}) {
                    if (box.inside(b) && !closure.count(b)) next.insert(b);
                }
            }
        closure.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    return closure;
}

}  // namespace

HeisSubgroup power_subgroup(const Int& n) {
    if (n < 1) throw std::invalid_argument("power_subgroup: n must be >= 1");
    HeisSubgroup H;
    H.m11 = n;
    H.m12 = 0;
    H.m22 = n;
    // The center parts reachable from n-th powers and their commutators
    // generate gcd(n, n(n-1)/2) * Z.
    H.center_mod = int_gcd(n, n * (n - 1) / 2);
    if (H.center_mod == 0) H.center_mod = n;  // n = 1
    H.coset_z[{Int(0), Int(0)}] = 0;

    // Cross-check against the BFS closure of actual n-th powers: membership
    // must agree on an inner box that the (larger) closure box saturates.
    Box outer{4 * n, 8 * n * n + 8};
    Box inner{2 * n, 2 * n * n + 2};
    std::set<HeisElem> closure = bfs_closure(n, outer);
    for (Int x = -inner.xy; x <= inner.xy; ++x)
        for (Int y = -inner.xy; y <= inner.xy; ++y)
            for (Int z = -inner.z; z <= inner.z; ++z) {
                HeisElem e{x, y, z};
                bool structural = subgroup_membership(H, e);
                bool enumerated = closure.count(e) > 0;
                if (structural != enumerated)
                    throw std::runtime_error(
                        "power_subgroup: structural form and BFS closure disagree at " +
                        heis_str(e));
            }
    return H;
}

GenerationProfile steps_to_generate(const Int& n, int radius, int cap) {
    if (n < 2 || n > 4) throw std::invalid_argument("steps_to_generate: n must be in {2,3,4}");
    if (radius < 0 || radius > 6)
        throw std::invalid_argument("steps_to_generate: radius must be <= 6");
    HeisSubgroup H = power_subgroup(n);

    std::vector<HeisElem> gens{{1, 0, 0}, {0, 1, 0}};
    Box state_box{Int(radius) + 6 * n, 4 * (Int(radius) + 6 * n) * (Int(radius) + 6 * n)};
    std::vector<HeisElem> powers;
    for (const auto& g : heis_ball(gens, radius + 2)) {
        HeisElem p = heis_pow(g, n);
        if (state_box.inside(p)) powers.push_back(p);
    }
    std::sort(powers.begin(), powers.end());
    powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

    std::map<HeisElem, int> steps{{heis_identity(), 0}};
    std::set<HeisElem> frontier{heis_identity()};
    for (int k = 1; k <= cap && !frontier.empty(); ++k) {
        std::set<HeisElem> next;
        for (const auto& a : frontier)
            for (const auto& p : powers)
                for (const HeisElem& b : {heis_mul(a, p), heis_mul(a, heis_inv(p))})
                    if (state_box.inside(b) && !steps.count(b)) {
                        steps.emplace(b, k);
                        next.insert(b);
                    }
        frontier = std::move(next);
    }

    GenerationProfile prof;
    prof.n = n;
    prof.radius = radius;
    prof.cap = cap;
    prof.layer_counts.assign(static_cast<size_t>(cap) + 1, 0);
    for (Int x = -radius; x <= radius; ++x)
        for (Int y = -radius; y <= radius; ++y)
            for (Int z = -radius; z <= radius; ++z) {
                HeisElem e{x, y, z};
                if (!subgroup_membership(H, e)) continue;
                auto it = steps.find(e);
                if (it == steps.end()) {
                    ++prof.unresolved;
                } else {
                    ++prof.layer_counts[static_cast<size_t>(it->second)];
                    prof.max_steps = std::max(prof.max_steps, it->second);
                }
            }
    return prof;
}

std::optional<HeisElem> malcev_root(const HeisElem& e, const Int& n) {
    if (n < 1) throw std::invalid_argument("malcev_root: n must be >= 1");
    if (e.x % n != 0 || e.y % n != 0) return std::nullopt;
    HeisElem r{e.x / n, e.y / n, 0};
    Int zrest = e.z - (n * (n - 1) / 2) * r.x * r.y;
    if (zrest % n != 0) return std::nullopt;
    r.z = zrest / n;
    return r;
}

ContainmentReport malcev_containment(const Int& n, int radius) {
    if (n < 2) throw std::invalid_argument("malcev_containment: n must be >= 2");
    ContainmentReport rep;
    rep.n = n;
    rep.radius = radius;
    HeisSubgroup H = power_subgroup(n * n);
    for (Int x = -radius; x <= radius; ++x)
        for (Int y = -radius; y <= radius; ++y)
            for (Int z = -radius; z <= radius; ++z) {
                HeisElem e{x, y, z};
                if (!subgroup_membership(H, e)) continue;
                ++rep.checked;
                auto root = malcev_root(e, n);
                if (!root) {
                    rep.exceptions.push_back(e);
                } else if (!(heis_pow(*root, n) == e)) {
                    throw std::runtime_error("malcev_containment: root verification failed");
                }
            }
    rep.holds = rep.exceptions.empty();
    return rep;
}

Int abelian_power_index(const AbelianSpec& spec, const Int& n) {
    if (n < 1) throw std::invalid_argument("abelian_power_index: n must be >= 1");
    Int idx = 1;
    for (int i = 0; i < spec.rank; ++i) idx *= n;
    for (const auto& c : spec.torsion) idx *= int_gcd(n, c);
    return idx;
}

}  // namespace thickset::nilpower
