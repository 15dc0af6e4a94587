#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "symfix/caps.hpp"
#include "symfix/graph.hpp"

namespace symfix {

// Graph with fixing number p and fixed number q: K_{p+1} when p = q, a
// clique K_{p+2} with a pendant on vertex 0 when q = p + 2, otherwise a
// path w_1..w_{q-p} with p+1 pendant vertices on w_1. The path occupies
// vertices 0..q-p-1 and the pendants follow.
Graph construct_fix_fxd(int p, int q);

struct ExtendAttempt {
    std::vector<int> fixed_set;  // largest non-fixing set A
    std::string h_cycles;        // the chosen h in cycle notation
    std::vector<int> cycle;      // cycle B of h receiving the new vertex
    Graph extended;
    int achieved = 0;  // computed fxd of the extended graph
    bool verified = false;
};

struct ExtendResult {
    int expected = 0;  // fxd(G) + 1
    bool verified = false;
    std::size_t chosen = 0;  // index of the first verified attempt, else 0
    std::vector<ExtendAttempt> attempts;

    const Graph& graph() const { return attempts.at(chosen).extended; }
};

// Adds one vertex adjacent to a cycle B of an automorphism h that fixes a
// largest non-fixing set A, aiming for fxd(G') = fxd(G) + 1. Every (A, h, B)
// triple is tried in deterministic order until one verifies; all outcomes
// are recorded and none is assumed.
ExtendResult extend_fxd(const Graph& g, const Caps& caps = {});

nlohmann::ordered_json to_json(const ExtendResult& result);

}  // namespace symfix
