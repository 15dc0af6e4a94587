#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symfix/graph.hpp"
#include "symfix/permutation.hpp"

namespace symfix {

/// Vertex orbits of a permutation group: blocks sorted internally and
/// ordered by least element.
struct OrbitPartition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;

    std::vector<int> singletons() const;
};

struct AutOptions {
    int search_cap = Graph::max_vertices;
};

/// Automorphism group of a graph (or a pointwise stabilizer subgroup),
/// held as a transversal chain over the base 0,1,2,...: level l stores the
/// orbit of its base point under the subgroup fixing all earlier base
/// points, one coset representative per image. Representatives are found by
/// a backtracking search over the equitable-partition refinement tree
/// (colors start uniform, split by neighbor color multisets, branch on
/// target cells, smallest vertex first), so the whole structure is
/// deterministic for a given graph.
class AutGroup {
public:
    static AutGroup of_graph(const Graph& g, const AutOptions& opt = {});

    int degree() const { return n_; }
    const Graph& graph() const { return graph_; }

    /// Exact order; the build throws CapError if it exceeds 64 bits.
    std::uint64_t order() const { return order_; }
    bool trivial() const { return order_ == 1; }

    /// Strong generating set: the non-identity transversal representatives,
    /// level by level. Empty exactly for the trivial group.
    const std::vector<Permutation>& generators() const { return strong_gens_; }

    /// Vertices this subgroup was constrained to fix pointwise (empty for a
    /// full automorphism group).
    const std::vector<int>& fixed_prefix() const { return prefix_; }

    OrbitPartition orbits() const;
    std::vector<int> orbit_of(int v) const;

    /// Subgroup fixing every vertex of s pointwise, built as a fresh chain
    /// whose base starts with s.
    AutGroup pointwise_stabilizer(const std::vector<int>& s) const;

    /// All elements, identity included; throws CapError when order() > cap.
    std::vector<Permutation> elements(std::uint64_t cap) const;

    /// Streams every element (identity included) in a fixed deterministic
    /// order without materializing them; throws CapError when order() > cap.
    void for_each_element(const std::function<void(const Permutation&)>& fn, std::uint64_t cap) const;

    /// Membership test by sifting through the chain.
    bool contains(const Permutation& p) const;

private:
    struct Level {
        int point = 0;
        std::vector<int> orbit;          // sorted images of point
        std::vector<Permutation> reps;   // reps[i](point) == orbit[i]
    };

    AutGroup() = default;
    static AutGroup build(const Graph& g, std::vector<int> prefix, int search_cap);
    void walk(std::size_t level, const Permutation& acc,
              const std::function<void(const Permutation&)>& fn) const;

    Graph graph_{1, {}};
    std::vector<int> prefix_;
    std::vector<Level> levels_;
    std::vector<Permutation> strong_gens_;
    std::uint64_t order_ = 1;
    int n_ = 1;
    int search_cap_ = Graph::max_vertices;
};

}  // namespace symfix
