#include "symfix/survey.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symfix/aut_group.hpp"
#include "symfix/distance_transitive.hpp"
#include "symfix/errors.hpp"
#include "symfix/fixing.hpp"
#include "symfix/fixing_graph.hpp"
#include "symfix/graph6.hpp"
#include "symfix/util.hpp"

namespace symfix {

namespace {

constexpr int enumeration_ceiling = 7;

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
    return pairs;
}

bool edge_mask_connected(int n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
    std::array<std::uint32_t, 8> rows{};
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (!((mask >> t) & 1u)) continue;
        rows[static_cast<std::size_t>(pairs[t].first)] |= 1u << pairs[t].second;
        rows[static_cast<std::size_t>(pairs[t].second)] |= 1u << pairs[t].first;
    }
    const std::uint32_t all = (1u << n) - 1;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1)
            next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == all;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only, int enumeration_cap) {
    if (n < 1) throw DomainError("enumeration needs n >= 1");
    const int cap = std::min(enumeration_cap, enumeration_ceiling);
    if (n > cap)
        throw CapError("graph enumeration capped at n = " + std::to_string(cap) +
                       " (asked for n = " + std::to_string(n) + ")");

    const auto pairs = vertex_pairs(n);
    const int e = static_cast<int>(pairs.size());
    std::array<std::array<int, 8>, 8> pidx{};
    for (int t = 0; t < e; ++t) {
        pidx[static_cast<std::size_t>(pairs[t].first)][static_cast<std::size_t>(pairs[t].second)] = t;
        pidx[static_cast<std::size_t>(pairs[t].second)][static_cast<std::size_t>(pairs[t].first)] = t;
    }

    // Bit t of every relabeled mask comes from bit permuted[p][t] of the
    // original, one flat row per non-identity permutation.
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<std::uint8_t> permuted;
    while (std::next_permutation(img.begin(), img.end())) {
        for (int t = 0; t < e; ++t) {
            const int u = img[static_cast<std::size_t>(pairs[t].first)];
            const int v = img[static_cast<std::size_t>(pairs[t].second)];
            permuted.push_back(static_cast<std::uint8_t>(pidx[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]));
        }
    }
    const std::size_t perm_count = e ? permuted.size() / static_cast<std::size_t>(e) : 0;

    std::vector<Graph> out;
    const std::uint32_t limit = 1u << e;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (connected_only && !edge_mask_connected(n, mask, pairs)) continue;
        bool canonical = true;
        const std::uint8_t* row = permuted.data();
        for (std::size_t p = 0; p < perm_count && canonical; ++p, row += e) {
            for (int t = 0; t < e; ++t) {
                const std::uint32_t relabeled = (mask >> row[t]) & 1u;
                const std::uint32_t original = (mask >> t) & 1u;
                if (relabeled == original) continue;
                if (relabeled < original) canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<std::pair<int, int>> edges;
        for (int t = 0; t < e; ++t)
            if ((mask >> t) & 1u) edges.push_back(pairs[static_cast<std::size_t>(t)]);
        out.emplace_back(n, edges);
    }
    return out;
}

std::vector<Graph> enumerate_connected_graphs(int n, int enumeration_cap) {
    return enumerate_graphs(n, true, enumeration_cap);
}

IngestResult ingest_graph6_lines(std::istream& in) {
    IngestResult out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        if (sv.empty()) continue;
        try {
            out.graphs.push_back(parse_graph6(sv));
        } catch (const std::exception& ex) {
            out.diagnostics.push_back("line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return out;
}

namespace {

struct Outcome {
    char kind;  // 'p' | 'f' | 's'
    std::string details;
};

Outcome check_pass() { return {'p', ""}; }
Outcome check_fail(std::string details) { return {'f', std::move(details)}; }
Outcome check_skip(std::string reason) { return {'s', std::move(reason)}; }

std::string join_bits(std::uint64_t mask) {
    std::string out;
    for (std::uint64_t m = mask; m; m &= m - 1) {
        if (!out.empty()) out += '.';
        out += std::to_string(std::countr_zero(m));
    }
    return out.empty() ? std::string("-") : out;
}

/// Everything the checks share for one graph; built once per catalog entry.
struct GraphContext {
    Graph g;
    std::string g6;
    Caps caps;
    AutGroup a;
    OrbitPartition orbits;
    int n;
    bool connected;
    std::uint64_t aut_order;
    int fix;
    int fxd;
    std::optional<int> k;  // present when fix == fxd
    std::vector<std::uint64_t> maxmasks;
    std::vector<int> fixed_verts;
    std::uint64_t support_mask;
    FixingGraph d;
    bool dt;
    DtBoundReport dt_bounds;

    bool fixing_mask(std::uint64_t mask) const {
        for (const std::uint64_t m : maxmasks)
            if ((mask & ~m) == 0) return false;
        return true;
    }
};

GraphContext build_context(const Graph& g, const Caps& caps) {
    AutGroup a = AutGroup::of_graph(g, {.search_cap = caps.search_cap});
    OrbitPartition orbits = a.orbits();
    const bool connected = g.connected();
    const int fix = fixing_number(g, a, caps).value;
    const int fxd = fixed_number(g, a, caps).value;
    std::optional<int> k;
    if (fix == fxd) k = fix;
    std::uint64_t support = 0;
    for (const auto& block : orbits.blocks)
        if (block.size() > 1)
            for (const int v : block) support |= 1ull << v;
    FixingGraph d = FixingGraph::build(g, a);
    const bool dt = connected && is_distance_transitive(g, a);
    DtBoundReport bounds;
    if (dt) {
        FixingReport rep;
        rep.k_fixed = k;
        bounds = dt_bound_check(g, d, rep);
    }
    return GraphContext{g,
                        encode_graph6(g),
                        caps,
                        a,
                        std::move(orbits),
                        g.order(),
                        connected,
                        a.order(),
                        fix,
                        fxd,
                        k,
                        maximal_fixed_point_sets(a, caps.aut_enum_cap),
                        fixed_vertices(a),
                        support,
                        std::move(d),
                        dt,
                        bounds};
}

using CheckFn = std::function<Outcome(const GraphContext&)>;

Outcome require_subset_room(const GraphContext& ctx, int width) {
    if (width > ctx.caps.subset_cap) return check_skip("cap");
    return check_pass();
}

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"fix_fxd_bounds",
         [](const GraphContext& c) {
             if (0 <= c.fix && c.fix <= c.fxd && c.fxd <= c.n - 1) return check_pass();
             return check_fail("fix=" + std::to_string(c.fix) + ";fxd=" + std::to_string(c.fxd) +
                               ";n=" + std::to_string(c.n));
         }},
        {"orbit_stabilizer",
         [](const GraphContext& c) {
             for (int v = 0; v < c.n; ++v) {
                 const auto& block = c.orbits.blocks[static_cast<std::size_t>(c.orbits.block_of[static_cast<std::size_t>(v)])];
                 const std::uint64_t stab = c.a.pointwise_stabilizer({v}).order();
                 if (block.size() * stab != c.aut_order)
                     return check_fail("v=" + std::to_string(v) + ";orbit=" + std::to_string(block.size()) +
                                       ";stab=" + std::to_string(stab) + ";aut=" + std::to_string(c.aut_order));
             }
             return check_pass();
         }},
        {"pair_count_bounds",
         [](const GraphContext& c) {
             const int r = c.d.r();
             const std::uint64_t s = static_cast<std::uint64_t>(c.d.s());
             if (2 * s >= static_cast<std::uint64_t>(r) && s <= binomial(r, 2)) return check_pass();
             return check_fail("r=" + std::to_string(r) + ";s=" + std::to_string(s));
         }},
        {"twin_in_every_fixing_set",
         [](const GraphContext& c) {
             if (auto gate = require_subset_room(c, c.n); gate.kind == 's') return gate;
             const auto twins = twin_pairs(c.g);
             if (twins.empty()) return check_pass();
             const std::uint64_t limit = 1ull << c.n;
             for (std::uint64_t f = 0; f < limit; ++f) {
                 if (!c.fixing_mask(f)) continue;
                 for (const auto& [u, v] : twins)
                     if (!(f & ((1ull << u) | (1ull << v))))
                         return check_fail("u=" + std::to_string(u) + ";v=" + std::to_string(v) +
                                           ";set=" + join_bits(f));
             }
             return check_pass();
         }},
        {"fxd_twin_characterization",
         [](const GraphContext& c) {
             if (c.a.trivial()) return check_skip("rigid");
             if (!c.connected) return check_skip("disconnected");
             const bool extremal = c.fxd == c.n - 1;
             const bool twins = !twin_pairs(c.g).empty();
             if (extremal == twins) return check_pass();
             return check_fail("fxd=" + std::to_string(c.fxd) + ";n=" + std::to_string(c.n) +
                               ";twins=" + (twins ? std::string("yes") : std::string("no")));
         }},
        {"fxd_from_largest_nonfixing",
         [](const GraphContext& c) {
             if (c.a.trivial()) return check_skip("rigid");
             if (auto gate = require_subset_room(c, c.n); gate.kind == 's') return gate;
             int largest = -1;
             const std::uint64_t limit = 1ull << c.n;
             for (std::uint64_t f = 0; f < limit; ++f)
                 if (!c.fixing_mask(f)) largest = std::max(largest, std::popcount(f));
             if (c.fxd == largest + 1) return check_pass();
             return check_fail("fxd=" + std::to_string(c.fxd) + ";largest_nonfixing=" + std::to_string(largest));
         }},
        {"largest_nonfixing_cover_fixed",
         [](const GraphContext& c) {
             if (c.a.trivial()) return check_skip("rigid");
             if (auto gate = require_subset_room(c, c.n); gate.kind == 's') return gate;
             std::uint64_t fixed_mask = 0;
             for (const int v : c.fixed_verts) fixed_mask |= 1ull << v;
             const std::uint64_t limit = 1ull << c.n;
             for (std::uint64_t f = 0; f < limit; ++f) {
                 if (std::popcount(f) != c.fxd - 1 || c.fixing_mask(f)) continue;
                 if ((fixed_mask & ~f) != 0)
                     return check_fail("set=" + join_bits(f) + ";fixed=" + join_bits(fixed_mask));
             }
             return check_pass();
         }},
        {"full_orbits_when_fxd1",
         [](const GraphContext& c) {
             if (c.fxd != 1) return check_skip("fxd_not_1");
             for (const auto& block : c.orbits.blocks)
                 if (block.size() != c.aut_order)
                     return check_fail("orbit=" + std::to_string(block.size()) +
                                       ";aut=" + std::to_string(c.aut_order));
             return check_pass();
         }},
        {"no_fixed_vertex_when_fxd1",
         [](const GraphContext& c) {
             if (c.fxd != 1) return check_skip("fxd_not_1");
             if (c.fixed_verts.empty()) return check_pass();
             return check_fail("fixed=" + std::to_string(c.fixed_verts.size()));
         }},
        {"min_fixing_sets_within_support",
         [](const GraphContext& c) {
             if (c.a.trivial()) return check_skip("rigid");
             if (auto gate = require_subset_room(c, c.n); gate.kind == 's') return gate;
             const std::uint64_t limit = 1ull << c.n;
             for (std::uint64_t f = 0; f < limit; ++f) {
                 if (std::popcount(f) != c.fix || !c.fixing_mask(f)) continue;
                 if (f & ~c.support_mask)
                     return check_fail("set=" + join_bits(f) + ";outside=" + join_bits(f & ~c.support_mask));
             }
             return check_pass();
         }},
        {"neighborhood_biconditional",
         [](const GraphContext& c) {
             if (c.a.trivial()) return check_skip("rigid");
             if (auto gate = require_subset_room(c, c.d.r()); gate.kind == 's') return gate;
             const auto& left = c.d.left();
             const std::uint64_t limit = 1ull << left.size();
             for (std::uint64_t sub = 0; sub < limit; ++sub) {
                 std::vector<int> f;
                 std::uint64_t fmask = 0;
                 for (std::uint64_t m = sub; m; m &= m - 1) {
                     const int v = left[static_cast<std::size_t>(std::countr_zero(m))];
                     f.push_back(v);
                     fmask |= 1ull << v;
                 }
                 if (c.d.neighborhood_full(f) != c.fixing_mask(fmask))
                     return check_fail("set=" + join_bits(fmask));
             }
             return check_pass();
         }},
        {"fix_dual_path",
         [](const GraphContext& c) {
             if (c.a.trivial()) return check_skip("rigid");
             if (auto gate = require_subset_room(c, c.d.r()); gate.kind == 's') return gate;
             const int via = fix_via_fixing_graph(c.d);
             if (via == c.fix) return check_pass();
             return check_fail("subset_scan=" + std::to_string(via) + ";hitting_set=" + std::to_string(c.fix));
         }},
        {"fxd_dual_path",
         [](const GraphContext& c) {
             if (c.a.trivial()) return check_skip("rigid");
             if (auto gate = require_subset_room(c, c.d.r()); gate.kind == 's') return gate;
             const int via = t_parameter_and_fxd(c.d).second;
             if (via == c.fxd) return check_pass();
             return check_fail("subset_scan=" + std::to_string(via) + ";max_fixed_points=" + std::to_string(c.fxd));
         }},
        {"kfixed_dichotomy",
         [](const GraphContext& c) {
             if (!c.k) return check_skip("not_k_fixed");
             if (*c.k <= 3 || *c.k >= c.d.r() - 1) return check_pass();
             return check_fail("k=" + std::to_string(*c.k) + ";r=" + std::to_string(c.d.r()));
         }},
        {"kfixed_edge_bounds",
         [](const GraphContext& c) {
             if (!c.k) return check_skip("not_k_fixed");
             FixingReport rep;
             rep.k_fixed = c.k;
             const auto b = edge_bounds_check(c.d, rep);
             if (b.pass) return check_pass();
             return check_fail("lower=" + std::to_string(b.lower) + ";middle=" + std::to_string(b.middle) +
                               ";edges=" + std::to_string(b.edge_count) + ";upper=" + std::to_string(b.upper));
         }},
        {"kfixed_right_degree",
         [](const GraphContext& c) {
             if (!c.k) return check_skip("not_k_fixed");
             const int need = c.d.r() - *c.k + 1;
             for (int j = 0; j < c.d.s(); ++j)
                 if (c.d.right_degree(j) < need)
                     return check_fail("pair=" + std::to_string(j) + ";deg=" + std::to_string(c.d.right_degree(j)) +
                                       ";need=" + std::to_string(need));
             return check_pass();
         }},
        {"kfixed_polynomial",
         [](const GraphContext& c) {
             if (!c.k) return check_skip("not_k_fixed");
             std::vector<std::uint64_t> poly;
             try {
                 poly = fixing_polynomial(c.g, c.a, c.caps);
             } catch (const CapError&) {
                 return check_skip("cap");
             }
             for (int i = 0; i <= c.n; ++i) {
                 const std::uint64_t want = i >= *c.k ? binomial(c.n, i) : 0;
                 if (poly[static_cast<std::size_t>(i)] != want)
                     return check_fail("i=" + std::to_string(i) + ";alpha=" + std::to_string(poly[static_cast<std::size_t>(i)]) +
                                       ";want=" + std::to_string(want));
             }
             return check_pass();
         }},
        {"fix_le_beta",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             int beta = 0;
             try {
                 beta = metric_dimension(c.g, c.caps).value;
             } catch (const CapError&) {
                 return check_skip("cap");
             }
             if (c.fix <= beta) return check_pass();
             return check_fail("fix=" + std::to_string(c.fix) + ";beta=" + std::to_string(beta));
         }},
        {"dt_implies_vt",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             if (!c.dt) return check_skip("not_dt");
             if (is_vertex_transitive(c.a)) return check_pass();
             return check_fail("vt=no");
         }},
        {"dt_full_similarity",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             if (!c.dt) return check_skip("not_dt");
             if (c.a.trivial()) return check_skip("rigid");
             if (c.d.r() == c.n && static_cast<std::uint64_t>(c.d.s()) == binomial(c.n, 2)) return check_pass();
             return check_fail("r=" + std::to_string(c.d.r()) + ";s=" + std::to_string(c.d.s()) +
                               ";n=" + std::to_string(c.n));
         }},
        {"dt_degree_formula",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             if (!c.dt) return check_skip("not_dt");
             const auto rep = dt_degree_formula_check(c.g, c.d);
             if (rep.pass) return check_pass();
             return check_fail("degrees_ok=" + std::string(rep.degrees_ok ? "yes" : "no") +
                               ";split_ok=" + std::string(rep.split_ok ? "yes" : "no"));
         }},
        {"dt_edge_identity",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             if (!c.dt) return check_skip("not_dt");
             if (c.dt_bounds.eq_identity_ok) return check_pass();
             return check_fail("edges=" + std::to_string(c.dt_bounds.edge_count) +
                               ";identity=" + std::to_string(c.dt_bounds.identity_rhs));
         }},
        {"dt_fxd_lower_bound",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             if (!c.dt) return check_skip("not_dt");
             if (!c.k) return check_skip("not_k_fixed");
             if (c.dt_bounds.thm48_ok) return check_pass();
             return check_fail("k=" + std::to_string(*c.k) + ";diam=" + std::to_string(c.dt_bounds.diameter) +
                               ";n=" + std::to_string(c.n));
         }},
        {"dt_dichotomy_order",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             if (!c.dt) return check_skip("not_dt");
             if (!c.k) return check_skip("not_k_fixed");
             if (c.dt_bounds.cor42_ok) return check_pass();
             return check_fail("k=" + std::to_string(*c.k) + ";n=" + std::to_string(c.n));
         }},
        {"dt_edge_sandwich",
         [](const GraphContext& c) {
             if (!c.connected) return check_skip("disconnected");
             if (!c.dt) return check_skip("not_dt");
             if (!c.k) return check_skip("not_k_fixed");
             if (c.dt_bounds.eq4_ok) return check_pass();
             return check_fail("lower=" + std::to_string(c.dt_bounds.eq4_lower) +
                               ";edges=" + std::to_string(c.dt_bounds.edge_count) +
                               ";upper=" + std::to_string(c.dt_bounds.eq4_upper));
         }},
    };
    return table;
}

std::string sanitize_csv(std::string s) {
    for (char& ch : s) {
        if (ch == ',') ch = ';';
        if (ch == '\n' || ch == '\r') ch = ' ';
    }
    return s;
}

}  // namespace

SurveyReport verify_all(const std::vector<Graph>& catalog, const std::string& provenance,
                        const Caps& caps) {
    SurveyReport report;
    report.catalog = provenance;
    report.graphs = catalog.size();
    const auto& table = check_table();
    for (const auto& [name, fn] : table) report.checks[name];
    for (const Graph& g : catalog) {
        std::optional<GraphContext> ctx;
        std::string g6 = encode_graph6(g);
        try {
            ctx = build_context(g, caps);
        } catch (const CapError&) {
            ctx.reset();
        }
        for (const auto& [name, fn] : table) {
            Outcome out = ctx ? fn(*ctx) : check_skip("cap");
            auto& st = report.checks[name];
            SurveyRow row{g6, name, "", out.details};
            switch (out.kind) {
                case 'p':
                    row.verdict = "pass";
                    ++st.checked;
                    ++st.passed;
                    break;
                case 'f':
                    row.verdict = "fail";
                    ++st.checked;
                    ++st.failed;
                    break;
                default:
                    row.verdict = "skip";
                    ++st.skipped;
                    ++st.skip_reasons[out.details];
                    break;
            }
            report.rows.push_back(std::move(row));
        }
    }
    std::sort(report.rows.begin(), report.rows.end(), [](const SurveyRow& a, const SurveyRow& b) {
        return std::tie(a.graph6, a.check) < std::tie(b.graph6, b.check);
    });
    for (const SurveyRow& row : report.rows)
        if (row.verdict == "fail") report.counterexamples.push_back(row);
    return report;
}

std::string to_csv(const SurveyReport& r) {
    std::string out = "graph6,theorem,verdict,details\n";
    for (const SurveyRow& row : r.rows) {
        out += sanitize_csv(row.graph6);
        out += ',';
        out += row.check;
        out += ',';
        out += row.verdict;
        out += ',';
        out += sanitize_csv(row.details);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json to_json(const SurveyReport& r) {
    nlohmann::ordered_json j;
    j["catalog"] = r.catalog;
    j["graphs"] = r.graphs;
    j["pass"] = r.pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    for (const auto& [name, st] : r.checks) {
        nlohmann::ordered_json c;
        c["checked"] = st.checked;
        c["passed"] = st.passed;
        c["failed"] = st.failed;
        c["skipped"] = st.skipped;
        nlohmann::ordered_json reasons = nlohmann::ordered_json::object();
        for (const auto& [reason, count] : st.skip_reasons) reasons[reason] = count;
        c["skip_reasons"] = reasons;
        checks[name] = c;
    }
    j["checks"] = checks;
    nlohmann::ordered_json ce = nlohmann::ordered_json::array();
    for (const SurveyRow& row : r.counterexamples)
        ce.push_back({{"graph6", row.graph6}, {"theorem", row.check}, {"details", row.details}});
    j["counterexamples"] = ce;
    return j;
}

}  // namespace symfix
