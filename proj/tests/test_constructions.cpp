#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "symfix/constructions.hpp"
#include "symfix/fixing.hpp"

using namespace symfix;

namespace {

Graph rigid6() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}, {1, 4}});
}

}  // namespace

TEST_CASE("prescribed fixing and fixed numbers") {
    CHECK(construct_fix_fxd(3, 3) == make_complete(4));
    CHECK(construct_fix_fxd(2, 2) == make_complete(3));

    Graph g23 = construct_fix_fxd(2, 3);
    CHECK(g23.order() == 4);
    CHECK(g23.degree(0) == 3);
    CHECK(g23.edge_count() == 3);

    Graph g25 = construct_fix_fxd(2, 5);
    CHECK(g25.order() == 6);
    CHECK(fixing_number(g25).value == 2);
    CHECK(fixed_number(g25).value == 5);

    Graph g24 = construct_fix_fxd(2, 4);
    CHECK(g24.order() == 5);
    CHECK(g24.edge_count() == 7);
    CHECK(g24.degree(0) == 4);
    CHECK(g24.degree(4) == 1);

    for (int p = 2; p <= 7; ++p) {
        for (int q = p; q <= 7; ++q) {
            CAPTURE(p);
            CAPTURE(q);
            Graph g = construct_fix_fxd(p, q);
            CHECK(g.order() == q + 1);
            CHECK(g.connected());
            CHECK(fixing_number(g).value == p);
            CHECK(fixed_number(g).value == q);
        }
    }

    CHECK_THROWS_AS(construct_fix_fxd(1, 5), DomainError);
    CHECK_THROWS_AS(construct_fix_fxd(0, 2), DomainError);
    CHECK_THROWS_AS(construct_fix_fxd(3, 2), DomainError);
}

TEST_CASE("single-vertex extension raising the fixed number") {
    ExtendResult p4 = extend_fxd(make_path(4));
    CHECK(p4.expected == 2);
    CHECK(p4.verified);
    CHECK(p4.attempts.size() == 1);
    CHECK(p4.attempts[0].fixed_set.empty());
    CHECK(p4.attempts[0].h_cycles == "(0 3)(1 2)");
    CHECK(p4.attempts[0].cycle == std::vector<int>{0, 3});
    CHECK(p4.graph().order() == 5);
    CHECK(fixed_number(p4.graph()).value == 2);

    ExtendResult c4 = extend_fxd(make_cycle(4));
    CHECK(c4.expected == 4);
    CHECK(c4.verified);
    CHECK(c4.attempts.size() == 1);
    CHECK(c4.attempts[0].fixed_set == std::vector<int>{0, 2});
    CHECK(c4.attempts[0].cycle == std::vector<int>{1, 3});
    CHECK(fixed_number(c4.graph()).value == 4);

    ExtendResult star = extend_fxd(make_star(3));
    CHECK(star.expected == 4);
    CHECK(star.verified);
    CHECK(fixed_number(star.graph()).value == 4);
}

TEST_CASE("extension outcomes are recorded, not assumed") {
    ExtendResult c6 = extend_fxd(make_cycle(6));
    CHECK(c6.expected == 4);
    CHECK_FALSE(c6.verified);
    CHECK(c6.chosen == 0);
    CHECK(c6.attempts.size() == 6);
    for (const ExtendAttempt& attempt : c6.attempts) {
        CHECK(attempt.achieved == 6);
        CHECK_FALSE(attempt.verified);
        CHECK(attempt.fixed_set.size() == 2);
        CHECK(attempt.cycle.size() == 2);
    }
    CHECK(c6.attempts[0].fixed_set == std::vector<int>{0, 3});
    CHECK(c6.attempts[0].cycle == std::vector<int>{1, 5});
}

TEST_CASE("extension preserves the input as an induced subgraph") {
    for (const Graph& g : {make_path(4), make_cycle(4), make_cycle(6), make_star(3),
                           make_complete(4), make_complete_bipartite(2, 3)}) {
        ExtendResult r = extend_fxd(g);
        for (const ExtendAttempt& attempt : r.attempts) {
            CHECK(attempt.extended.order() == g.order() + 1);
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v)
                    CHECK(attempt.extended.adjacent(u, v) == g.adjacent(u, v));
            // the new vertex is adjacent exactly to the recorded cycle
            std::uint64_t want = 0;
            for (int b : attempt.cycle) want |= std::uint64_t{1} << b;
            CHECK(attempt.extended.neighbors(g.order()) == want);
        }
    }
}

TEST_CASE("extension rejects rigid graphs") {
    CHECK_THROWS_AS(extend_fxd(rigid6()), DomainError);
    CHECK_THROWS_AS(extend_fxd(Graph(1, {})), DomainError);
}

TEST_CASE("extension result serialization") {
    nlohmann::ordered_json j = to_json(extend_fxd(make_cycle(6)));
    CHECK(j["expected"] == 4);
    CHECK(j["verified"] == false);
    CHECK(j["attempts"].size() == 6);
    CHECK(j["attempts"][0]["achieved"] == 6);
    CHECK(j["attempts"][0]["fixed_set"] == nlohmann::ordered_json::array({0, 3}));
    CHECK(j["graph6"].is_string());

    nlohmann::ordered_json ok = to_json(extend_fxd(make_path(4)));
    CHECK(ok["verified"] == true);
    CHECK(ok["attempts"].size() == 1);
}
