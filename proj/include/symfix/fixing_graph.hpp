#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "symfix/aut_group.hpp"
#include "symfix/fixing.hpp"
#include "symfix/graph.hpp"

namespace symfix {

// Bipartite graph on (S(G), V_s(G)) where S(G) holds the vertices lying in
// orbits of size at least two and V_s(G) holds the unordered similar pairs.
// A left vertex x is adjacent to a pair {u,v} exactly when no automorphism
// fixing x maps u to v.
class FixingGraph {
public:
    static FixingGraph build(const Graph& g);
    static FixingGraph build(const Graph& g, const AutGroup& a);

    const Graph& graph() const { return aut_.graph(); }
    const AutGroup& aut() const { return aut_; }

    const std::vector<int>& left() const { return left_; }
    const std::vector<std::pair<int, int>>& right() const { return right_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    int r() const { return static_cast<int>(left_.size()); }
    int s() const { return static_cast<int>(right_.size()); }
    std::uint64_t edge_count() const;
    int left_degree(int left_index) const;
    int right_degree(int right_index) const;
    bool adjacent(int left_index, int right_index) const;

    // Pairs split by the pointwise stabilizer of f, as ascending right
    // indices. Requires f to consist of left vertices.
    std::vector<int> neighborhood(const std::vector<int>& f) const;
    bool neighborhood_full(const std::vector<int>& f) const;

    std::string to_dot() const;
    nlohmann::ordered_json to_json() const;

private:
    explicit FixingGraph(AutGroup a) : aut_(std::move(a)) {}

    AutGroup aut_;
    std::vector<int> left_;
    std::vector<std::pair<int, int>> right_;
    std::vector<std::vector<int>> adj_;
};

// Minimum size of a left subset whose neighborhood is all of V_s(G), found
// by increasing-size subset search over stabilizer queries. Agrees with
// fixing_number but shares none of its machinery.
int fix_via_fixing_graph(const FixingGraph& d);

// t is the least size such that every t-subset of S(G) has full
// neighborhood; the fixed number is then t + |V(G) minus S(G)|. Returns
// {0, 0} when the group is trivial.
std::pair<int, int> t_parameter_and_fxd(const FixingGraph& d);

struct EdgeBoundsReport {
    bool applicable = false;
    int k = 0;
    int r = 0;
    int s = 0;
    int n = 0;
    std::uint64_t edge_count = 0;
    double lower = 0.0;        // (r/2)(r-k+1)
    std::uint64_t middle = 0;  // s(r-k+1)
    std::uint64_t upper = 0;   // n(C(n,2)-k+1)
    bool lower_ok = false;
    bool middle_ok = false;
    bool upper_ok = false;
    bool pass = false;
};

// Both edge-count bounds apply only when fix(G) = fxd(G) = k; the report is
// marked not applicable otherwise. Comparisons are exact: the halved lower
// bound is checked as r(r-k+1) <= 2|E|.
EdgeBoundsReport edge_bounds_check(const FixingGraph& d, const FixingReport& rep);

// k <= 3 or k >= r-1 for every k-fixed graph; empty when not k-fixed.
std::optional<bool> dichotomy_check(const FixingGraph& d, const FixingReport& rep);

}  // namespace symfix
