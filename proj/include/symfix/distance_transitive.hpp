#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "symfix/aut_group.hpp"
#include "symfix/caps.hpp"
#include "symfix/fixing.hpp"
#include "symfix/fixing_graph.hpp"
#include "symfix/graph.hpp"

namespace symfix {

bool is_vertex_transitive(const Graph& g);
bool is_vertex_transitive(const AutGroup& a);

// Whether every ordered vertex pair can be mapped to every other pair at the
// same distance. Computed as orbit closure of the generators on ordered
// pairs. Requires a connected graph.
bool is_distance_transitive(const Graph& g);
bool is_distance_transitive(const Graph& g, const AutGroup& a);

struct DtDegreeReport {
    bool degrees_ok = false;  // left degrees match C(n,2) - sum_i C(|class_i|,2)
    bool split_ok = false;    // x adjacent to {u,v} iff d(x,u) != d(x,v)
    bool pass = false;
    std::vector<int> degree;
    std::vector<std::uint64_t> formula;
};

// Requires a distance-transitive graph (DomainError otherwise).
DtDegreeReport dt_degree_formula_check(const Graph& g, const FixingGraph& d);

struct DtBoundReport {
    std::uint64_t edge_count = 0;
    std::uint64_t identity_rhs = 0;  // n*C(n,2) - sum_v sum_i C(|class_i(v)|,2)
    bool eq_identity_ok = false;
    std::optional<int> k;  // present when fix = fxd = k
    int diameter = 0;
    double thm48_bound = 0.0;  // (n-1)/diameter
    bool thm48_ok = false;     // k*diameter >= n-1
    bool cor42_ok = false;     // k <= 3 or k >= n-1
    std::uint64_t eq4_lower = 0;  // C(n,2)(n-k+1)
    std::uint64_t eq4_upper = 0;  // n(C(n,2)-k+1)
    bool eq4_ok = false;
    bool pass = false;
};

// The edge-count identity is checked for every distance-transitive graph;
// the three k-bounds only when the graph is k-fixed. Requires a
// distance-transitive graph.
DtBoundReport dt_bound_check(const Graph& g, const FixingGraph& d, const FixingReport& rep);

struct DtReport {
    bool dt = false;
    bool vt = false;
    std::optional<bool> deg_formula;
    std::optional<bool> eq_identity;
    std::optional<int> k;
    double thm48_bound = 0.0;
    bool thm48_ok = false;
};

// Aggregate report for one graph; requires a connected graph.
DtReport compute_dt_report(const Graph& g, const Caps& caps = {});

nlohmann::ordered_json to_json(const DtReport& report);

}  // namespace symfix
