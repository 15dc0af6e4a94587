#pragma once

// Brute-force reference implementations used only by tests. Each one
// recomputes from first principles a value the library derives with cleverer
// machinery, so agreement is meaningful.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "symfix/graph.hpp"
#include "symfix/permutation.hpp"

namespace oracle {

inline bool preserves_adjacency(const symfix::Graph& g, const std::vector<int>& img) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) !=
                g.adjacent(img[static_cast<std::size_t>(u)], img[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

// Every automorphism, by filtering all n! permutations.
inline std::vector<symfix::Permutation> all_automorphisms(const symfix::Graph& g) {
    std::vector<int> img(static_cast<std::size_t>(g.order()));
    std::iota(img.begin(), img.end(), 0);
    std::vector<symfix::Permutation> out;
    do {
        if (preserves_adjacency(g, img)) out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// A vertex set (bitmask) is fixing iff no non-identity automorphism fixes
// all of it pointwise.
inline bool is_fixing(const std::vector<symfix::Permutation>& auts, std::uint64_t f) {
    for (const auto& a : auts) {
        if (a.is_identity()) continue;
        if ((a.fixed_points_mask() & f) == f) return false;
    }
    return true;
}

inline int fixing_number(const symfix::Graph& g, const std::vector<symfix::Permutation>& auts) {
    const int n = g.order();
    for (int k = 0; k <= n; ++k)
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
            if (std::popcount(f) == k && is_fixing(auts, f)) return k;
    return n;
}

// Literal definition: the least k such that every k-subset is fixing.
inline int fixed_number(const symfix::Graph& g, const std::vector<symfix::Permutation>& auts) {
    const int n = g.order();
    for (int k = 0; k <= n; ++k) {
        bool all_fixing = true;
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << n) && all_fixing; ++f)
            if (std::popcount(f) == k && !is_fixing(auts, f)) all_fixing = false;
        if (all_fixing) return k;
    }
    return n;
}

// Coefficient alpha_i = number of fixing i-subsets, i = 0..n.
inline std::vector<std::uint64_t> fixing_polynomial(const symfix::Graph& g,
                                                    const std::vector<symfix::Permutation>& auts) {
    const int n = g.order();
    std::vector<std::uint64_t> alpha(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
        if (is_fixing(auts, f)) ++alpha[static_cast<std::size_t>(std::popcount(f))];
    return alpha;
}

}  // namespace oracle
