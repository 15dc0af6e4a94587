#include "symfix/fixing_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "symfix/errors.hpp"
#include "symfix/util.hpp"

namespace symfix {

namespace {

// Visits the size-k subsets of {0,..,m-1} in lexicographic order until the
// visitor returns false. Returns false when any visit did.
bool for_each_combination(int m, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > m) return true;
    while (true) {
        if (!visit(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

FixingGraph FixingGraph::build(const Graph& g) { return build(g, AutGroup::of_graph(g)); }

FixingGraph FixingGraph::build(const Graph& g, const AutGroup& a) {
    FixingGraph d(a);
    const OrbitPartition orbits = a.orbits();
    for (int v = 0; v < g.order(); ++v) {
        if (orbits.blocks[orbits.block_of[v]].size() >= 2) d.left_.push_back(v);
    }
    for (const std::vector<int>& block : orbits.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                d.right_.emplace_back(block[i], block[j]);
    }
    std::sort(d.right_.begin(), d.right_.end());

    d.adj_.resize(d.left_.size());
    for (std::size_t i = 0; i < d.left_.size(); ++i) {
        const OrbitPartition stab = a.pointwise_stabilizer({d.left_[i]}).orbits();
        for (std::size_t j = 0; j < d.right_.size(); ++j) {
            const auto [u, v] = d.right_[j];
            if (stab.block_of[u] != stab.block_of[v]) d.adj_[i].push_back(static_cast<int>(j));
        }
    }
    return d;
}

std::uint64_t FixingGraph::edge_count() const {
    std::uint64_t total = 0;
    for (const std::vector<int>& row : adj_) total += row.size();
    return total;
}

int FixingGraph::left_degree(int left_index) const {
    return static_cast<int>(adj_.at(left_index).size());
}

int FixingGraph::right_degree(int right_index) const {
    if (right_index < 0 || right_index >= s()) throw DomainError("right index out of range");
    int deg = 0;
    for (const std::vector<int>& row : adj_)
        deg += std::binary_search(row.begin(), row.end(), right_index) ? 1 : 0;
    return deg;
}

bool FixingGraph::adjacent(int left_index, int right_index) const {
    if (right_index < 0 || right_index >= s()) throw DomainError("right index out of range");
    const std::vector<int>& row = adj_.at(left_index);
    return std::binary_search(row.begin(), row.end(), right_index);
}

std::vector<int> FixingGraph::neighborhood(const std::vector<int>& f) const {
    for (int v : f) {
        if (!std::binary_search(left_.begin(), left_.end(), v))
            throw DomainError("neighborhood argument is not a subset of S(G)");
    }
    const OrbitPartition stab = aut_.pointwise_stabilizer(f).orbits();
    std::vector<int> out;
    for (std::size_t j = 0; j < right_.size(); ++j) {
        const auto [u, v] = right_[j];
        if (stab.block_of[u] != stab.block_of[v]) out.push_back(static_cast<int>(j));
    }
    return out;
}

bool FixingGraph::neighborhood_full(const std::vector<int>& f) const {
    return static_cast<int>(neighborhood(f).size()) == s();
}

std::string FixingGraph::to_dot() const {
    std::ostringstream out;
    out << "graph fixing_graph {\n  rankdir=LR;\n";
    out << "  { rank=same;";
    for (std::size_t i = 0; i < left_.size(); ++i)
        out << " L" << i << " [shape=box,label=\"v" << left_[i] << "\"];";
    out << " }\n";
    out << "  { rank=same;";
    for (std::size_t j = 0; j < right_.size(); ++j)
        out << " R" << j << " [shape=ellipse,label=\"{" << right_[j].first << ","
            << right_[j].second << "}\"];";
    out << " }\n";
    for (std::size_t i = 0; i < adj_.size(); ++i)
        for (int j : adj_[i]) out << "  L" << i << " -- R" << j << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json FixingGraph::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = graph().order();
    j["r"] = r();
    j["s"] = s();
    j["left"] = left_;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& [u, v] : right_) pairs.push_back({u, v});
    j["right"] = pairs;
    j["adjacency"] = adj_;
    j["edge_count"] = edge_count();
    return j;
}

int fix_via_fixing_graph(const FixingGraph& d) {
    if (d.s() == 0) return 0;
    for (int k = 1; k <= d.r(); ++k) {
        bool found = false;
        for_each_combination(d.r(), k, [&](const std::vector<int>& idx) {
            std::vector<int> f;
            f.reserve(idx.size());
            for (int i : idx) f.push_back(d.left()[i]);
            if (d.neighborhood_full(f)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return k;
    }
    throw DomainError("no fixing subset of S(G) found");
}

std::pair<int, int> t_parameter_and_fxd(const FixingGraph& d) {
    const int outside = d.graph().order() - d.r();
    if (d.s() == 0) return {0, 0};
    for (int m = d.r() - 1; m >= 0; --m) {
        bool all_full = for_each_combination(d.r(), m, [&](const std::vector<int>& idx) {
            std::vector<int> f;
            f.reserve(idx.size());
            for (int i : idx) f.push_back(d.left()[i]);
            return d.neighborhood_full(f);
        });
        if (!all_full) return {m + 1, m + 1 + outside};
    }
    return {1, 1 + outside};
}

EdgeBoundsReport edge_bounds_check(const FixingGraph& d, const FixingReport& rep) {
    EdgeBoundsReport out;
    out.r = d.r();
    out.s = d.s();
    out.n = d.graph().order();
    out.edge_count = d.edge_count();
    if (!rep.k_fixed) return out;
    out.applicable = true;
    out.k = *rep.k_fixed;
    const std::uint64_t span = static_cast<std::uint64_t>(out.r - out.k + 1);
    out.lower = static_cast<double>(out.r) * static_cast<double>(span) / 2.0;
    out.middle = static_cast<std::uint64_t>(out.s) * span;
    out.upper = static_cast<std::uint64_t>(out.n) *
                (binomial(out.n, 2) - static_cast<std::uint64_t>(out.k) + 1);
    out.lower_ok = static_cast<std::uint64_t>(out.r) * span <= 2 * out.middle &&
                   static_cast<std::uint64_t>(out.r) * span <= 2 * out.edge_count;
    out.middle_ok = out.middle <= out.edge_count;
    out.upper_ok = out.edge_count <= out.upper;
    out.pass = out.lower_ok && out.middle_ok && out.upper_ok;
    return out;
}

std::optional<bool> dichotomy_check(const FixingGraph& d, const FixingReport& rep) {
    if (!rep.k_fixed) return std::nullopt;
    const int k = *rep.k_fixed;
    return k <= 3 || k >= d.r() - 1;
}

}  // namespace symfix
