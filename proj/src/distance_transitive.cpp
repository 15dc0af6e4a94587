#include "symfix/distance_transitive.hpp"

#include <numeric>

#include "symfix/errors.hpp"
#include "symfix/util.hpp"

namespace symfix {

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
}

std::uint64_t merged_pairs(const Graph& g, int v) {
    std::uint64_t total = 0;
    for (const std::vector<int>& cls : distance_classes(g, v).classes)
        total += binomial(static_cast<int>(cls.size()), 2);
    return total;
}

}  // namespace

bool is_vertex_transitive(const AutGroup& a) { return a.orbits().blocks.size() == 1; }

bool is_vertex_transitive(const Graph& g) {
    return is_vertex_transitive(AutGroup::of_graph(g));
}

bool is_distance_transitive(const Graph& g) {
    return is_distance_transitive(g, AutGroup::of_graph(g));
}

bool is_distance_transitive(const Graph& g, const AutGroup& a) {
    if (!g.connected()) throw DomainError("distance transitivity requires a connected graph");
    const int n = g.order();
    const DistanceTable table = distances(g);

    std::vector<int> parent(static_cast<std::size_t>(n) * n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Permutation& p : a.generators()) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                uf_union(parent, u * n + v, p.apply(u) * n + p.apply(v));
    }

    std::vector<int> root_at(static_cast<std::size_t>(table.diameter) + 1, -1);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int delta = table.at(u, v);
            const int root = uf_find(parent, u * n + v);
            if (root_at[delta] == -1) root_at[delta] = root;
            if (root_at[delta] != root) return false;
        }
    }
    return true;
}

DtDegreeReport dt_degree_formula_check(const Graph& g, const FixingGraph& d) {
    if (!is_distance_transitive(g, d.aut()))
        throw DomainError("degree formula requires a distance-transitive graph");
    const DistanceTable table = distances(g);
    DtDegreeReport out;
    out.degrees_ok = true;
    out.split_ok = true;
    for (int i = 0; i < d.r(); ++i) {
        const int v = d.left()[i];
        out.degree.push_back(d.left_degree(i));
        out.formula.push_back(binomial(g.order(), 2) - merged_pairs(g, v));
        if (static_cast<std::uint64_t>(out.degree.back()) != out.formula.back())
            out.degrees_ok = false;
        for (int j = 0; j < d.s(); ++j) {
            const auto [x, y] = d.right()[j];
            if (d.adjacent(i, j) != (table.at(v, x) != table.at(v, y))) out.split_ok = false;
        }
    }
    out.pass = out.degrees_ok && out.split_ok;
    return out;
}

DtBoundReport dt_bound_check(const Graph& g, const FixingGraph& d, const FixingReport& rep) {
    if (!is_distance_transitive(g, d.aut()))
        throw DomainError("bound report requires a distance-transitive graph");
    const int n = g.order();
    DtBoundReport out;
    out.edge_count = d.edge_count();
    std::uint64_t merged = 0;
    for (int v = 0; v < n; ++v) merged += merged_pairs(g, v);
    out.identity_rhs = static_cast<std::uint64_t>(n) * binomial(n, 2) - merged;
    out.eq_identity_ok = out.edge_count == out.identity_rhs;
    out.diameter = distances(g).diameter;
    out.pass = out.eq_identity_ok;
    if (!rep.k_fixed) return out;

    const int k = *rep.k_fixed;
    out.k = k;
    out.thm48_bound = out.diameter == 0 ? 0.0 : static_cast<double>(n - 1) / out.diameter;
    out.thm48_ok = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(out.diameter) >=
                   static_cast<std::uint64_t>(n - 1);
    out.cor42_ok = k <= 3 || k >= n - 1;
    out.eq4_lower = binomial(n, 2) * static_cast<std::uint64_t>(n - k + 1);
    out.eq4_upper = static_cast<std::uint64_t>(n) *
                    (binomial(n, 2) - static_cast<std::uint64_t>(k) + 1);
    out.eq4_ok = out.eq4_lower <= out.edge_count && out.edge_count <= out.eq4_upper;
    out.pass = out.eq_identity_ok && out.thm48_ok && out.cor42_ok && out.eq4_ok;
    return out;
}

DtReport compute_dt_report(const Graph& g, const Caps& caps) {
    const AutGroup a = AutGroup::of_graph(g, {.search_cap = caps.search_cap});
    DtReport out;
    out.vt = is_vertex_transitive(a);
    out.dt = is_distance_transitive(g, a);
    if (!out.dt) return out;

    const FixingGraph d = FixingGraph::build(g, a);
    const FixingReport rep = compute_fixing_report(g, {}, caps);
    out.deg_formula = dt_degree_formula_check(g, d).pass;
    const DtBoundReport bounds = dt_bound_check(g, d, rep);
    out.eq_identity = bounds.eq_identity_ok;
    out.k = bounds.k;
    out.thm48_bound = bounds.thm48_bound;
    out.thm48_ok = bounds.thm48_ok;
    return out;
}

nlohmann::ordered_json to_json(const DtReport& report) {
    nlohmann::ordered_json j;
    j["dt"] = report.dt;
    j["vt"] = report.vt;
    j["deg_formula"] = report.deg_formula ? nlohmann::ordered_json(*report.deg_formula)
                                          : nlohmann::ordered_json(nullptr);
    j["eq_identity"] = report.eq_identity ? nlohmann::ordered_json(*report.eq_identity)
                                          : nlohmann::ordered_json(nullptr);
    if (report.k) {
        nlohmann::ordered_json t;
        t["k"] = *report.k;
        t["bound"] = report.thm48_bound;
        t["pass"] = report.thm48_ok;
        j["thm48"] = t;
    } else {
        j["thm48"] = nullptr;
    }
    return j;
}

}  // namespace symfix
