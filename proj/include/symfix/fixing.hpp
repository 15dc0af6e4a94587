#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "symfix/aut_group.hpp"
#include "symfix/caps.hpp"
#include "symfix/graph.hpp"

namespace symfix {

struct WitnessedValue {
    int value = 0;
    std::vector<int> witness;  // sorted vertex list
};

/// True iff only the identity fixes every vertex of f pointwise.
bool is_fixing_set(const AutGroup& a, const std::vector<int>& f);

/// The inclusion-maximal fixed-point sets of non-identity elements, as
/// bitmasks in ascending numeric order. Empty for the trivial group.
/// Their complements are the minimal supports, so a vertex set is fixing
/// exactly when it meets the complement of each returned mask.
std::vector<std::uint64_t> maximal_fixed_point_sets(const AutGroup& a, std::uint64_t cap);

/// Least size of a fixing set, with the lexicographically smallest minimum
/// witness. Solved as a minimum hitting set over the supports of the
/// non-identity elements (first branch restricted to orbit minima); when the
/// group is too large to stream, falls back to an increasing-size subset
/// search answered by chain stabilizer queries.
WitnessedValue fixing_number(const Graph& g, const AutGroup& a, const Caps& caps = {});
WitnessedValue fixing_number(const Graph& g, const Caps& caps = {});

/// Least k such that every k-subset is fixing: one more than the largest
/// fixed-point set of a non-identity element. The witness is that largest
/// non-fixing set (lexicographically smallest among the maximizers); 0 with
/// an empty witness for the trivial group.
WitnessedValue fixed_number(const Graph& g, const AutGroup& a, const Caps& caps = {});
WitnessedValue fixed_number(const Graph& g, const Caps& caps = {});

/// Vertices fixed by every automorphism (the singleton orbits).
std::vector<int> fixed_vertices(const AutGroup& a);

/// Coefficients alpha_0..alpha_n, alpha_i = number of fixing i-subsets.
std::vector<std::uint64_t> fixing_polynomial(const Graph& g, const AutGroup& a, const Caps& caps = {});

/// k when fixing and fixed number coincide at k, absent otherwise.
std::optional<int> is_k_fixed(const Graph& g, const AutGroup& a, const Caps& caps = {});

/// Metric dimension with the lexicographically smallest minimum resolving
/// set; requires a connected graph within the subset cap.
WitnessedValue metric_dimension(const Graph& g, const Caps& caps = {});

/// Lexicographically smallest minimum hitting set for a family of non-empty
/// vertex masks; root_candidates restricts the first chosen vertex (pass the
/// full mask for no restriction). Shared by the fixing-number and
/// metric-dimension searches.
std::vector<int> min_hitting_set_lex(int n, std::vector<std::uint64_t> masks,
                                     std::uint64_t root_candidates);

struct ReportOptions {
    bool with_polynomial = false;
    bool with_beta = false;
};

/// Everything the analyze command reports for one graph.
struct FixingReport {
    int n = 0;
    std::uint64_t aut_order = 1;
    int fix = 0;
    std::vector<int> fix_witness;
    int fxd = 0;
    std::vector<int> nonfixing_witness;
    std::vector<int> fixed_verts;
    std::optional<int> k_fixed;
    std::optional<std::vector<std::uint64_t>> polynomial;
    std::optional<int> beta;
    std::vector<int> beta_witness;
};

FixingReport compute_fixing_report(const Graph& g, const ReportOptions& opt = {}, const Caps& caps = {});

nlohmann::ordered_json to_json(const FixingReport& r);

}  // namespace symfix
