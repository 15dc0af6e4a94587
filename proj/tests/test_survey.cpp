#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "symfix/errors.hpp"
#include "symfix/graph6.hpp"
#include "symfix/survey.hpp"
#include "symfix/util.hpp"

#include "oracles.hpp"

using namespace symfix;

namespace {

Graph rigid6() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {1, 4}});
}

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("catalog sizes per order") {
    const int expected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        const auto cat = enumerate_connected_graphs(n);
        CHECK(cat.size() == static_cast<std::size_t>(expected[n - 1]));
        std::set<std::string> names;
        for (const Graph& g : cat) {
            CHECK(g.order() == n);
            CHECK(g.connected());
            names.insert(encode_graph6(g));
        }
        CHECK(names.size() == cat.size());
    }
}

TEST_CASE("catalog covers every labeled connected graph once") {
    // Summing the orbit sizes n!/|Aut(G)| over the catalog must reproduce
    // the number of connected labeled graphs, so no class is missing or
    // duplicated.
    const std::uint64_t labeled[] = {1, 1, 4, 38, 728, 26704};
    std::uint64_t factorial = 1;
    for (int n = 1; n <= 6; ++n) {
        factorial *= static_cast<std::uint64_t>(n);
        std::uint64_t total = 0;
        for (const Graph& g : enumerate_connected_graphs(n))
            total += factorial / oracle::all_automorphisms(g).size();
        CHECK(total == labeled[n - 1]);
    }
}

TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(enumerate_connected_graphs(7), CapError);
    CHECK_THROWS_AS(enumerate_connected_graphs(8, 7), CapError);
    CHECK_THROWS_AS(enumerate_connected_graphs(0), DomainError);
}

TEST_CASE("graph6 ingestion with diagnostics") {
    std::istringstream in("Bw\n\nCh\r\nB\n~zz\nDhc  \n");
    const IngestResult got = ingest_graph6_lines(in);
    REQUIRE(got.graphs.size() == 3);
    CHECK(got.graphs[0] == make_complete(3));
    CHECK(got.graphs[1] == make_path(4));
    CHECK(got.graphs[2] == make_cycle(5));
    REQUIRE(got.diagnostics.size() == 2);
    CHECK(got.diagnostics[0].starts_with("line 4:"));
    CHECK(got.diagnostics[1].starts_with("line 5:"));
}

TEST_CASE("ingesting nothing") {
    std::istringstream in("\n\n");
    const IngestResult got = ingest_graph6_lines(in);
    CHECK(got.graphs.empty());
    CHECK(got.diagnostics.empty());
}

TEST_CASE("full battery is clean up to order five") {
    std::vector<Graph> catalog;
    for (int n = 1; n <= 5; ++n)
        for (Graph& g : enumerate_connected_graphs(n)) catalog.push_back(std::move(g));
    REQUIRE(catalog.size() == 31);

    const SurveyReport rep = verify_all(catalog, "connected catalog n <= 5");
    CHECK(rep.pass());
    CHECK(rep.counterexamples.empty());
    CHECK(rep.graphs == 31);
    CHECK(rep.checks.size() == 25);
    CHECK(rep.rows.size() == 31 * rep.checks.size());
    for (const auto& [name, st] : rep.checks) {
        INFO(name);
        CHECK(st.failed == 0);
        CHECK(st.checked == st.passed + st.failed);
        std::uint64_t reasons = 0;
        for (const auto& [reason, count] : st.skip_reasons) reasons += count;
        CHECK(st.skipped == reasons);
        CHECK(st.checked + st.skipped == rep.graphs);
    }
    CHECK(rep.checks.at("fix_fxd_bounds").checked == 31);
    CHECK(rep.checks.at("orbit_stabilizer").checked == 31);
}

TEST_CASE("skip bookkeeping") {
    const std::vector<Graph> catalog = {make_path(4), make_cycle(4), make_complete(4), rigid6()};
    const SurveyReport rep = verify_all(catalog, "sample");
    CHECK(rep.pass());

    const CheckStats& dich = rep.checks.at("kfixed_dichotomy");
    CHECK(dich.checked == 3);
    CHECK(dich.skipped == 1);
    CHECK(dich.skip_reasons.at("not_k_fixed") == 1);

    const CheckStats& vt = rep.checks.at("dt_implies_vt");
    CHECK(vt.checked == 2);
    CHECK(vt.skip_reasons.at("not_dt") == 2);

    const CheckStats& twin = rep.checks.at("fxd_twin_characterization");
    CHECK(twin.checked == 3);
    CHECK(twin.skip_reasons.at("rigid") == 1);

    const CheckStats& orbit1 = rep.checks.at("full_orbits_when_fxd1");
    CHECK(orbit1.checked == 1);
    CHECK(orbit1.skip_reasons.at("fxd_not_1") == 3);
}

TEST_CASE("disconnected input is handled per check") {
    const SurveyReport rep = verify_all({two_k2()}, "sample");
    CHECK(rep.pass());
    CHECK(rep.checks.at("fix_fxd_bounds").checked == 1);
    CHECK(rep.checks.at("twin_in_every_fixing_set").checked == 1);
    CHECK(rep.checks.at("fix_le_beta").skip_reasons.at("disconnected") == 1);
    CHECK(rep.checks.at("fxd_twin_characterization").skip_reasons.at("disconnected") == 1);
    CHECK(rep.checks.at("dt_implies_vt").skip_reasons.at("disconnected") == 1);
}

TEST_CASE("report does not depend on catalog order") {
    std::vector<Graph> forward;
    for (int n = 1; n <= 4; ++n)
        for (Graph& g : enumerate_connected_graphs(n)) forward.push_back(std::move(g));
    std::vector<Graph> backward(forward.rbegin(), forward.rend());

    const SurveyReport a = verify_all(forward, "catalog");
    const SurveyReport b = verify_all(backward, "catalog");
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(to_csv(a) == to_csv(verify_all(forward, "catalog")));
}

TEST_CASE("csv shape") {
    const SurveyReport rep = verify_all({make_cycle(5)}, "sample");
    const std::string csv = to_csv(rep);
    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "graph6,theorem,verdict,details");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
        CHECK(line.starts_with(encode_graph6(make_cycle(5)) + ","));
    }
    CHECK(rows == rep.checks.size());
}

TEST_CASE("json summary shape") {
    const SurveyReport rep = verify_all({make_cycle(5)}, "one cycle");
    const auto j = to_json(rep);
    CHECK(j["catalog"] == "one cycle");
    CHECK(j["graphs"] == 1);
    CHECK(j["pass"] == true);
    CHECK(j["counterexamples"].empty());
    CHECK(j["checks"]["fix_le_beta"]["checked"] == 1);
    CHECK(j["checks"]["dt_edge_identity"]["passed"] == 1);
    CHECK(j["checks"]["kfixed_polynomial"]["skip_reasons"].empty());
}

TEST_CASE("empty catalog") {
    const SurveyReport rep = verify_all({}, "nothing");
    CHECK(rep.pass());
    CHECK(rep.graphs == 0);
    CHECK(rep.rows.empty());
    CHECK(rep.checks.size() == 25);
    CHECK(to_csv(rep) == "graph6,theorem,verdict,details\n");
}
