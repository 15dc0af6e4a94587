#include "symfix/constructions.hpp"

#include <algorithm>
#include <bit>

#include "symfix/aut_group.hpp"
#include "symfix/errors.hpp"
#include "symfix/fixing.hpp"
#include "symfix/graph6.hpp"
#include "symfix/util.hpp"

namespace symfix {

Graph construct_fix_fxd(int p, int q) {
    if (p < 2) throw DomainError("construct_fix_fxd requires p >= 2");
    if (p > q) throw DomainError("construct_fix_fxd requires p <= q");
    if (p == q) return make_complete(p + 1);
    if (q == p + 2) {
        // A two-vertex tail is itself a pendant of w_1, so the tree below
        // degenerates to a star and overshoots the fixing number by one.
        // A clique with one pendant vertex hits both targets instead.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < p + 2; ++i)
            for (int j = i + 1; j < p + 2; ++j) edges.emplace_back(i, j);
        edges.emplace_back(0, p + 2);
        return Graph(q + 1, edges);
    }
    const int path_len = q - p;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < path_len; ++i) edges.emplace_back(i, i + 1);
    for (int j = 0; j <= p; ++j) edges.emplace_back(0, path_len + j);
    return Graph(q + 1, edges);
}

ExtendResult extend_fxd(const Graph& g, const Caps& caps) {
    const AutGroup a = AutGroup::of_graph(g, {.search_cap = caps.search_cap});
    if (a.trivial()) throw DomainError("extend_fxd requires a non-trivial automorphism group");

    const int fxd = fixed_number(g, a, caps).value;
    ExtendResult result;
    result.expected = fxd + 1;

    std::vector<std::uint64_t> largest;
    for (std::uint64_t m : maximal_fixed_point_sets(a, caps.aut_enum_cap)) {
        if (std::popcount(m) == fxd - 1) largest.push_back(m);
    }
    std::sort(largest.begin(), largest.end(),
              [](std::uint64_t x, std::uint64_t y) { return set_lex_less(x, y); });

    std::vector<std::vector<Permutation>> elements_of(largest.size());
    a.for_each_element(
        [&](const Permutation& p) {
            if (p.is_identity()) return;
            const std::uint64_t m = p.fixed_points_mask();
            for (std::size_t i = 0; i < largest.size(); ++i) {
                if (largest[i] == m) {
                    elements_of[i].push_back(p);
                    break;
                }
            }
        },
        caps.aut_enum_cap);

    for (std::size_t i = 0; i < largest.size() && !result.verified; ++i) {
        std::vector<int> fixed_set;
        for (int v = 0; v < g.order(); ++v)
            if (largest[i] >> v & 1) fixed_set.push_back(v);
        for (const Permutation& h : elements_of[i]) {
            for (const std::vector<int>& cycle : h.moved_cycles()) {
                std::vector<std::pair<int, int>> edges = g.edges();
                for (int b : cycle) edges.emplace_back(g.order(), b);
                ExtendAttempt attempt{fixed_set, h.cycles(), cycle,
                                      Graph(g.order() + 1, edges), 0, false};
                attempt.achieved = fixed_number(attempt.extended, caps).value;
                attempt.verified = attempt.achieved == result.expected;
                result.attempts.push_back(std::move(attempt));
                if (result.attempts.back().verified) {
                    result.verified = true;
                    result.chosen = result.attempts.size() - 1;
                    break;
                }
            }
            if (result.verified) break;
        }
    }
    if (result.attempts.empty()) throw DomainError("no extension candidate found");
    return result;
}

nlohmann::ordered_json to_json(const ExtendResult& result) {
    nlohmann::ordered_json j;
    j["expected"] = result.expected;
    j["verified"] = result.verified;
    j["graph6"] = encode_graph6(result.graph());
    nlohmann::ordered_json attempts = nlohmann::ordered_json::array();
    for (const ExtendAttempt& attempt : result.attempts) {
        nlohmann::ordered_json row;
        row["fixed_set"] = attempt.fixed_set;
        row["h"] = attempt.h_cycles;
        row["cycle"] = attempt.cycle;
        row["graph6"] = encode_graph6(attempt.extended);
        row["achieved"] = attempt.achieved;
        row["verified"] = attempt.verified;
        attempts.push_back(std::move(row));
    }
    j["attempts"] = attempts;
    return j;
}

}  // namespace symfix
