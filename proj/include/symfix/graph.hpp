#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symfix/errors.hpp"

namespace symfix {

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is one
/// 64-bit mask per vertex, which caps the order at 62 (the single-byte
/// graph6 size range) and makes neighborhood operations single instructions.
class Graph {
public:
    static constexpr int max_vertices = 62;

    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    int max_degree() const;
    int min_degree() const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
    bool connected() const;
    bool is_complete() const;

    /// Graph with vertex v renamed to img[v]; img must be a bijection.
    Graph relabeled(const std::vector<int>& img) const;

    /// Throws DomainError unless 0 <= v < order().
    void check_vertex(int v) const;

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

/// All-pairs distances via BFS from every vertex. Unreachable pairs hold
/// `unreachable`; eccentricities and the diameter degrade to `unreachable`
/// as soon as any pair is unreachable.
struct DistanceTable {
    static constexpr int unreachable = -1;

    int n = 0;
    std::vector<int> dist;  // row-major n*n
    std::vector<int> ecc;
    int diameter = unreachable;

    int at(int u, int v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

DistanceTable distances(const Graph& g);

/// Vertices grouped by distance from a base vertex: classes[i-1] holds the
/// vertices at distance exactly i, for i = 1..ecc(base).
struct DistanceClasses {
    int base = 0;
    std::vector<std::vector<int>> classes;
};

/// Requires a connected graph (DomainError otherwise).
DistanceClasses distance_classes(const Graph& g, int v);

/// Unordered pairs {u,v} with N(u)\{v} == N(v)\{u}, sorted lexicographically.
/// Covers both adjacent and non-adjacent twins.
std::vector<std::pair<int, int>> twin_pairs(const Graph& g);

// Named families. Vertex numbering, fixed per family:
//   path:    0-1-...-(n-1)
//   cycle:   0-1-...-(n-1)-0            (n >= 3)
//   complete: all pairs
//   star:    0 is the center, 1..leaves are the leaves
//   complete_bipartite: parts {0..a-1} and {a..a+b-1}
//   petersen: outer cycle 0..4, inner vertices 5..9 with 5+i ~ 5+((i+2) mod 5),
//             spokes i ~ 5+i
//   johnson: the k-subsets of {0..m-1} in lexicographic order, adjacent when
//            the subsets share k-1 elements
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);
Graph make_complete_bipartite(int a, int b);
Graph make_petersen();
Graph make_johnson(int m, int k);

/// CLI-facing family dispatch. Unknown family names, unknown or missing
/// parameters raise DomainError; orders above the vertex cap raise CapError.
Graph generate_family(const std::string& family, const std::map<std::string, int>& params);

}  // namespace symfix
