#include "symfix/graph.hpp"

#include <algorithm>
#include <bit>

namespace symfix {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) throw DomainError("graph order must be at least 1");
    if (n > max_vertices) throw CapError("graph order above the vertex cap of 62");
    rows_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("loops are not allowed");
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[static_cast<std::size_t>(v)]);
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(rows_[static_cast<std::size_t>(v)]));
    return best;
}

int Graph::min_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(rows_[static_cast<std::size_t>(v)]));
    return best;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(std::popcount(rows_[static_cast<std::size_t>(v)]));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m != 0; m &= m - 1)
            next |= rows_[static_cast<std::size_t>(std::countr_zero(m))];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == n_;
}

bool Graph::is_complete() const {
    return edge_count() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

Graph Graph::relabeled(const std::vector<int>& img) const {
    if (static_cast<int>(img.size()) != n_) throw DomainError("relabeling has wrong length");
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edge_count());
    for (auto [u, v] : edges()) mapped.emplace_back(img[static_cast<std::size_t>(u)], img[static_cast<std::size_t>(v)]);
    return Graph(n_, mapped);
}

DistanceTable distances(const Graph& g) {
    const int n = g.order();
    DistanceTable t;
    t.n = n;
    t.dist.assign(static_cast<std::size_t>(n) * n, DistanceTable::unreachable);
    t.ecc.assign(static_cast<std::size_t>(n), DistanceTable::unreachable);
    t.diameter = 0;
    bool all_reachable = true;
    for (int s = 0; s < n; ++s) {
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int d = 0;
        t.dist[static_cast<std::size_t>(s) * n + s] = 0;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m != 0; m &= m - 1)
                next |= g.neighbors(std::countr_zero(m));
            next &= ~seen;
            ++d;
            for (std::uint64_t m = next; m != 0; m &= m - 1)
                t.dist[static_cast<std::size_t>(s) * n + std::countr_zero(m)] = d;
            seen |= next;
            frontier = next;
        }
        if (std::popcount(seen) == n) {
            int e = 0;
            for (int v = 0; v < n; ++v) e = std::max(e, t.at(s, v));
            t.ecc[static_cast<std::size_t>(s)] = e;
        } else {
            all_reachable = false;
        }
    }
    if (all_reachable) {
        for (int v = 0; v < n; ++v) t.diameter = std::max(t.diameter, t.ecc[static_cast<std::size_t>(v)]);
    } else {
        t.diameter = DistanceTable::unreachable;
    }
    return t;
}

DistanceClasses distance_classes(const Graph& g, int v) {
    g.check_vertex(v);
    if (!g.connected()) throw DomainError("distance classes require a connected graph");
    DistanceTable t = distances(g);
    DistanceClasses c;
    c.base = v;
    c.classes.assign(static_cast<std::size_t>(t.ecc[static_cast<std::size_t>(v)]), {});
    for (int u = 0; u < g.order(); ++u) {
        int d = t.at(v, u);
        if (d > 0) c.classes[static_cast<std::size_t>(d - 1)].push_back(u);
    }
    return c;
}

std::vector<std::pair<int, int>> twin_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            std::uint64_t nu = g.neighbors(u) & ~(std::uint64_t{1} << v);
            std::uint64_t nv = g.neighbors(v) & ~(std::uint64_t{1} << u);
            if (nu == nv) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph make_path(int n) {
    if (n < 1) throw DomainError("path needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw DomainError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph make_complete(int n) {
    if (n < 1) throw DomainError("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph make_star(int leaves) {
    if (leaves < 1) throw DomainError("star needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw DomainError("complete bipartite needs both parts non-empty");
    if (a + b > Graph::max_vertices) throw CapError("graph order above the vertex cap of 62");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) e.emplace_back(u, v);
    return Graph(a + b, e);
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return Graph(10, e);
}

Graph make_johnson(int m, int k) {
    if (k < 1 || m < 1 || k > m) throw DomainError("johnson graph needs 1 <= k <= m");
    // Enumerate k-subsets of {0..m-1} as bitmasks in lexicographic order of
    // their sorted element lists.
    std::vector<std::uint64_t> subsets;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int x : pick) mask |= std::uint64_t{1} << x;
        subsets.push_back(mask);
        if (subsets.size() > static_cast<std::size_t>(Graph::max_vertices))
            throw CapError("johnson graph order above the vertex cap of 62");
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    std::vector<std::pair<int, int>> e;
    const int n = static_cast<int>(subsets.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::popcount(subsets[static_cast<std::size_t>(u)] & subsets[static_cast<std::size_t>(v)]) == k - 1)
                e.emplace_back(u, v);
    return Graph(n, e);
}

namespace {

int take_param(const std::string& family, std::map<std::string, int> params,
               const std::vector<std::string>& keys, std::vector<int>& out) {
    for (const auto& key : keys) {
        auto it = params.find(key);
        if (it == params.end()) throw DomainError(family + " requires parameter '" + key + "'");
        out.push_back(it->second);
        params.erase(it);
    }
    if (!params.empty()) throw DomainError("unknown parameter '" + params.begin()->first + "' for family " + family);
    return 0;
}

}  // namespace

Graph generate_family(const std::string& family, const std::map<std::string, int>& params) {
    std::vector<int> p;
    if (family == "path") {
        take_param(family, params, {"n"}, p);
        return make_path(p[0]);
    }
    if (family == "cycle") {
        take_param(family, params, {"n"}, p);
        return make_cycle(p[0]);
    }
    if (family == "complete") {
        take_param(family, params, {"n"}, p);
        return make_complete(p[0]);
    }
    if (family == "star") {
        take_param(family, params, {"leaves"}, p);
        return make_star(p[0]);
    }
    if (family == "complete_bipartite") {
        take_param(family, params, {"a", "b"}, p);
        return make_complete_bipartite(p[0], p[1]);
    }
    if (family == "petersen") {
        take_param(family, params, {}, p);
        return make_petersen();
    }
    if (family == "johnson") {
        take_param(family, params, {"m", "k"}, p);
        return make_johnson(p[0], p[1]);
    }
    throw DomainError("unknown family '" + family + "'");
}

}  // namespace symfix
