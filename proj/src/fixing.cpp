#include "symfix/fixing.hpp"

#include <algorithm>
#include <bit>

#include "symfix/util.hpp"

namespace symfix {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Greedy count of pairwise disjoint masks: a lower bound on the hitting set
// size for the family.
int disjoint_bound(const std::vector<std::uint64_t>& masks, std::uint64_t hit) {
    std::uint64_t used = 0;
    int count = 0;
    for (const std::uint64_t m : masks) {
        if ((m & hit) != 0) continue;
        if ((m & used) != 0) continue;
        used |= m;
        ++count;
    }
    return count;
}

bool hitting_dfs(int n, const std::vector<std::uint64_t>& masks, int slots, int first,
                 std::uint64_t candidates, std::uint64_t chosen, std::vector<int>& acc) {
    std::uint64_t uncovered_union = 0;
    int uncovered = 0;
    for (const std::uint64_t m : masks) {
        if ((m & chosen) == 0) {
            uncovered_union |= m;
            ++uncovered;
        }
    }
    if (uncovered == 0) return true;
    if (slots == 0) return false;
    if (disjoint_bound(masks, chosen) > slots) return false;
    for (int v = first; v < n; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if ((candidates & bit) == 0) continue;
        if ((uncovered_union & bit) == 0) continue;  // minimum sets only use useful vertices
        acc.push_back(v);
        if (hitting_dfs(n, masks, slots - 1, v + 1, full_mask(n), chosen | bit, acc)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

std::vector<int> min_hitting_set_lex(int n, std::vector<std::uint64_t> masks,
                                     std::uint64_t root_candidates) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    // keep only inclusion-minimal masks: hitting those hits everything
    std::vector<std::uint64_t> minimal;
    for (const std::uint64_t m : masks) {
        bool has_subset = false;
        for (const std::uint64_t other : masks)
            if (other != m && (other & m) == other) {
                has_subset = true;
                break;
            }
        if (!has_subset) minimal.push_back(m);
    }
    if (minimal.empty()) return {};
    for (const std::uint64_t m : minimal)
        if (m == 0) throw DomainError("hitting set over an empty mask is infeasible");

    for (int k = disjoint_bound(minimal, 0); k <= n; ++k) {
        std::vector<int> acc;
        if (hitting_dfs(n, minimal, k, 0, root_candidates, 0, acc)) return acc;
    }
    throw DomainError("hitting set search exhausted without cover");  // unreachable for non-empty masks
}

bool is_fixing_set(const AutGroup& a, const std::vector<int>& f) {
    return a.pointwise_stabilizer(f).trivial();
}

std::vector<std::uint64_t> maximal_fixed_point_sets(const AutGroup& a, std::uint64_t cap) {
    std::vector<std::uint64_t> distinct;
    a.for_each_element(
        [&distinct](const Permutation& p) {
            if (!p.is_identity()) distinct.push_back(p.fixed_points_mask());
        },
        cap);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::uint64_t> maximal;
    for (const std::uint64_t m : distinct) {
        bool has_superset = false;
        for (const std::uint64_t other : distinct)
            if (other != m && (other & m) == m) {
                has_superset = true;
                break;
            }
        if (!has_superset) maximal.push_back(m);
    }
    return maximal;
}

namespace {

std::uint64_t orbit_minima_mask(const AutGroup& a) {
    std::uint64_t mask = 0;
    for (const auto& block : a.orbits().blocks) mask |= std::uint64_t{1} << block.front();
    return mask;
}

// Fallback for groups too large to stream: increasing-size lexicographic
// subset search answered by chain stabilizer queries.
bool subset_fixing_dfs(const Graph& g, const AutGroup& a, int slots, int first,
                       std::uint64_t candidates, std::vector<int>& acc) {
    if (slots == 0) return is_fixing_set(a, acc);
    for (int v = first; v < g.order(); ++v) {
        if ((candidates >> v & 1) == 0) continue;
        acc.push_back(v);
        if (subset_fixing_dfs(g, a, slots - 1, v + 1, full_mask(g.order()), acc)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

WitnessedValue fixing_number(const Graph& g, const AutGroup& a, const Caps& caps) {
    if (a.trivial()) return {0, {}};
    const std::uint64_t roots = orbit_minima_mask(a);
    if (a.order() <= caps.aut_enum_cap) {
        const std::uint64_t full = full_mask(g.order());
        std::vector<std::uint64_t> supports;
        for (const std::uint64_t fixed : maximal_fixed_point_sets(a, caps.aut_enum_cap))
            supports.push_back(full & ~fixed);
        std::vector<int> witness = min_hitting_set_lex(g.order(), std::move(supports), roots);
        return {static_cast<int>(witness.size()), std::move(witness)};
    }
    if (g.order() > caps.subset_cap)
        throw CapError("group too large to stream and graph above the subset search cap");
    for (int k = 1; k <= g.order(); ++k) {
        std::vector<int> acc;
        if (subset_fixing_dfs(g, a, k, 0, roots, acc)) return {k, std::move(acc)};
    }
    return {g.order(), mask_to_vertices(full_mask(g.order()))};  // unreachable: V itself is fixing
}

WitnessedValue fixing_number(const Graph& g, const Caps& caps) {
    return fixing_number(g, AutGroup::of_graph(g, {caps.search_cap}), caps);
}

WitnessedValue fixed_number(const Graph& g, const AutGroup& a, const Caps& caps) {
    (void)g;
    if (a.trivial()) return {0, {}};
    bool seen = false;
    std::uint64_t best = 0;
    int best_count = -1;
    a.for_each_element(
        [&](const Permutation& p) {
            if (p.is_identity()) return;
            const int count = p.fixed_point_count();
            const std::uint64_t mask = p.fixed_points_mask();
            if (!seen || count > best_count || (count == best_count && set_lex_less(mask, best))) {
                seen = true;
                best = mask;
                best_count = count;
            }
        },
        caps.aut_enum_cap);
    return {best_count + 1, mask_to_vertices(best)};
}

WitnessedValue fixed_number(const Graph& g, const Caps& caps) {
    return fixed_number(g, AutGroup::of_graph(g, {caps.search_cap}), caps);
}

std::vector<int> fixed_vertices(const AutGroup& a) { return a.orbits().singletons(); }

std::vector<std::uint64_t> fixing_polynomial(const Graph& g, const AutGroup& a, const Caps& caps) {
    const int n = g.order();
    if (n > caps.subset_cap) throw CapError("graph above the subset sweep cap");
    std::vector<std::uint64_t> alpha(static_cast<std::size_t>(n) + 1, 0);
    if (a.trivial()) {
        for (int i = 0; i <= n; ++i) alpha[static_cast<std::size_t>(i)] = binomial(n, i);
        return alpha;
    }
    const auto maxfix = maximal_fixed_point_sets(a, caps.aut_enum_cap);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool fixing = true;
        for (const std::uint64_t m : maxfix) {
            if ((s & ~m) == 0) {  // s lies inside a non-identity element's fixed set
                fixing = false;
                break;
            }
        }
        if (fixing) ++alpha[static_cast<std::size_t>(std::popcount(s))];
    }
    return alpha;
}

std::optional<int> is_k_fixed(const Graph& g, const AutGroup& a, const Caps& caps) {
    const WitnessedValue fix = fixing_number(g, a, caps);
    const WitnessedValue fxd = fixed_number(g, a, caps);
    if (fix.value == fxd.value) return fix.value;
    return std::nullopt;
}

WitnessedValue metric_dimension(const Graph& g, const Caps& caps) {
    if (!g.connected()) throw DomainError("metric dimension requires a connected graph");
    const int n = g.order();
    if (n > caps.subset_cap) throw CapError("graph above the subset search cap");
    const DistanceTable t = distances(g);
    std::vector<std::uint64_t> masks;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t m = 0;
            for (int w = 0; w < n; ++w)
                if (t.at(u, w) != t.at(v, w)) m |= std::uint64_t{1} << w;
            masks.push_back(m);
        }
    }
    std::vector<int> witness = min_hitting_set_lex(n, std::move(masks), full_mask(n));
    return {static_cast<int>(witness.size()), std::move(witness)};
}

FixingReport compute_fixing_report(const Graph& g, const ReportOptions& opt, const Caps& caps) {
    const AutGroup a = AutGroup::of_graph(g, {caps.search_cap});
    FixingReport r;
    r.n = g.order();
    r.aut_order = a.order();
    WitnessedValue fix = fixing_number(g, a, caps);
    r.fix = fix.value;
    r.fix_witness = std::move(fix.witness);
    WitnessedValue fxd = fixed_number(g, a, caps);
    r.fxd = fxd.value;
    r.nonfixing_witness = std::move(fxd.witness);
    r.fixed_verts = fixed_vertices(a);
    if (r.fix == r.fxd) r.k_fixed = r.fix;
    if (opt.with_polynomial) r.polynomial = fixing_polynomial(g, a, caps);
    if (opt.with_beta) {
        WitnessedValue beta = metric_dimension(g, caps);
        r.beta = beta.value;
        r.beta_witness = std::move(beta.witness);
    }
    return r;
}

nlohmann::ordered_json to_json(const FixingReport& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["aut_order"] = r.aut_order;
    j["fix"] = r.fix;
    j["fix_witness"] = r.fix_witness;
    j["fxd"] = r.fxd;
    j["nonfixing_witness"] = r.nonfixing_witness;
    j["fixed_vertices"] = r.fixed_verts;
    if (r.k_fixed)
        j["k_fixed"] = *r.k_fixed;
    else
        j["k_fixed"] = nullptr;
    if (r.polynomial)
        j["polynomial"] = *r.polynomial;
    else
        j["polynomial"] = nullptr;
    if (r.beta)
        j["beta"] = *r.beta;
    else
        j["beta"] = nullptr;
    return j;
}

}  // namespace symfix
