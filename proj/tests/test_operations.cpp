#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quartic/families.hpp"
#include "quartic/operations.hpp"
#include "quartic/recognize.hpp"
#include "test_helpers.hpp"

using namespace quartic;
using namespace quartic_test;

TEST_CASE("triangle listing") {
    auto t3 = triangles(squared_cycle(3));
    REQUIRE(t3.size() == 1);
    CHECK(t3[0].verts == std::array<int, 3>{0, 1, 2});
    CHECK(t3[0].mult == std::array<int, 3>{2, 2, 2});

    Multigraph k4 = Multigraph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1},
                                               {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    CHECK(triangles(k4).size() == 4);

    Multigraph lk4 = line_multigraph(k4);
    CHECK(triangles(lk4).size() >= 6);
}

TEST_CASE("eligible triangles") {
    CHECK(is_eligible_triangle(squared_cycle(3), {0, 1, 2}));
    for (int n : {4, 7, 8, 9, 10, 11, 12})
        for (const auto& t : triangles(squared_cycle(n))) {
            CAPTURE(n);
            CHECK_FALSE(is_eligible_triangle(squared_cycle(n), t.verts));
        }
    // a triple edge makes its triangles eligible regardless of removal
    Multigraph b = named_block("op5-right");
    CHECK(is_eligible_triangle(b, {0, 1, 2}));
    CHECK_THROWS_AS(is_eligible_triangle(squared_cycle(7), {0, 1, 4}),
                    std::invalid_argument);
}

TEST_CASE("remark identities") {
    Multigraph c3 = squared_cycle(3);
    auto op2_sites = find_sites(c3, 2, OpDir::forward);
    REQUIRE(op2_sites.size() == 1);
    CHECK(is_isomorphic(apply(c3, op2_sites[0]).graph, squared_cycle(5)));

    auto op1_sites = find_sites(c3, 1, OpDir::forward);
    REQUIRE(op1_sites.size() == 1);
    CHECK(is_isomorphic(apply(c3, op1_sites[0]).graph, squared_cycle(6)));

    auto op4_sites = find_sites(squared_cycle(4), 4, OpDir::forward);
    REQUIRE(!op4_sites.empty());
    CHECK(is_isomorphic(apply(squared_cycle(4), op4_sites[0]).graph,
                        five_vertex_exception()));
}

TEST_CASE("reverse Op4 is the only operation applicable to the five-vertex "
          "exception") {
    Multigraph g = five_vertex_exception();
    for (int kind = 1; kind <= 5; ++kind)
        for (OpDir dir : {OpDir::forward, OpDir::reverse}) {
            CAPTURE(kind);
            auto sites = find_sites(g, kind, dir);
            if (kind == 4 && dir == OpDir::reverse) {
                REQUIRE(!sites.empty());
                for (const auto& s : sites)
                    CHECK(is_isomorphic(apply(g, s).graph, squared_cycle(4)));
            } else {
                CHECK(sites.empty());
            }
        }
}

TEST_CASE("forward Op5 contracts the five-vertex block to a triple edge") {
    // host: op5-left glued to a triple block at the shared attachment
    Multigraph host = Multigraph::from_edges(
        7, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}, {1, 4, 1},
            {2, 4, 1}, {3, 4, 2}, {0, 5, 1}, {0, 6, 1}, {5, 6, 3}});
    CHECK(host.is_k_regular(4));
    CHECK(has_triangle_property(host));
    auto sites = find_sites(host, 5, OpDir::forward);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].site == std::vector<int>{0, 1, 2, 3, 4});
    Multigraph after = apply(host, sites[0]).graph;
    CHECK(after.vertex_count() == 5);
    // two triple blocks sharing the attachment
    auto rev = find_sites(after, 5, OpDir::reverse);
    CHECK(rev.size() == 2);
}

TEST_CASE("vertex-count deltas and closure on corpus-like graphs") {
    const int delta[6] = {0, 3, 2, 1, 1, -2};
    std::vector<Multigraph> hosts = {
        squared_cycle(3), squared_cycle(4), squared_cycle(6),
        line_multigraph(Multigraph::from_edges(
            4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {0, 3, 1}})),
        five_vertex_exception()};
    for (const auto& g : hosts)
        for (int kind = 1; kind <= 5; ++kind)
            for (OpDir dir : {OpDir::forward, OpDir::reverse})
                for (const auto& step : find_sites(g, kind, dir)) {
                    Multigraph h = apply(g, step).graph;
                    int expect = dir == OpDir::forward ? delta[kind] : -delta[kind];
                    CHECK(h.vertex_count() - g.vertex_count() == expect);
                    CHECK(h.is_connected());
                    CHECK(h.is_k_regular(4));
                    CHECK(has_triangle_property(h));
                }
}

TEST_CASE("forward then reverse at the image site is an involution") {
    std::vector<Multigraph> hosts = {squared_cycle(3), squared_cycle(4),
                                     squared_cycle(5), squared_cycle(6)};
    for (const auto& g : hosts)
        for (int kind = 1; kind <= 5; ++kind)
            for (const auto& step : find_sites(g, kind, OpDir::forward)) {
                Multigraph h = apply(g, step).graph;
                auto back = find_sites(h, kind, OpDir::reverse);
                bool recovered = false;
                for (const auto& r : back)
                    if (is_isomorphic(apply(h, r).graph, g)) recovered = true;
                CAPTURE(kind);
                CHECK(recovered);
            }
}

TEST_CASE("every catalog pattern edge lies in a triangle inside the pattern") {
    for (const auto& name : named_block_names())
        if (name != "k113")  // the Op2 gadget relies on host edges
            CHECK(has_triangle_property(named_block(name)));
}

TEST_CASE("apply rejects inapplicable sites") {
    Multigraph c7 = squared_cycle(7);
    CHECK_THROWS_AS(apply(c7, {1, OpDir::forward, {0, 1, 2}}),
                    std::invalid_argument);  // triangle not eligible
    CHECK_THROWS_AS(apply(c7, {3, OpDir::forward, {0, 1, 2}}),
                    std::invalid_argument);  // no tripled pair
    CHECK_THROWS_AS(apply(c7, {2, OpDir::forward, {0, 1, 9}}),
                    std::invalid_argument);  // out of range
}

TEST_CASE("replay reports the first failing step") {
    Multigraph c3 = squared_cycle(3);
    CHECK(replay(c3, {}) == c3);
    auto site = find_sites(c3, 2, OpDir::forward);
    REQUIRE(site.size() == 1);
    CHECK(is_isomorphic(replay(c3, {site[0]}), squared_cycle(5)));
    try {
        replay(c3, {site[0], {4, OpDir::forward, {0, 0, 0, 0}}});
        FAIL("expected ReplayError");
    } catch (const ReplayError& e) {
        CHECK(e.step_index == 1);
    }
}

TEST_CASE("pattern detectors") {
    CHECK(contains_k113(named_block("k113")));
    CHECK(contains_k113(named_block("op5-left")));  // apexes 1,2; leaves 0,3,4
    CHECK_FALSE(contains_k113(squared_cycle(7)));
    CHECK(contains_induced_simple_k4_minus(squared_cycle(7)));
    CHECK_FALSE(contains_induced_simple_k4_minus(squared_cycle(3)));
    CHECK_FALSE(contains_induced_simple_k4_minus(five_vertex_exception()));
}

TEST_CASE("reverse sites demand interior degree exactness") {
    // op5-left inside a quartic host matches; the same pattern with an extra
    // edge hanging off an interior vertex must not
    Multigraph host = Multigraph::from_edges(
        7, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}, {1, 4, 1},
            {2, 4, 1}, {3, 4, 2}, {0, 5, 1}, {0, 6, 1}, {5, 6, 3}});
    auto rev5 = find_sites(host, 5, OpDir::reverse);
    REQUIRE(rev5.size() == 1);
    CHECK(rev5[0].site[0] == 0);  // attachment is the shared cut vertex
}

TEST_CASE("op step text form") {
    CHECK(to_string({2, OpDir::forward, {0, 1, 2}}) == "op 2 fwd 0 1 2");
    CHECK(to_string({5, OpDir::reverse, {3, 1, 7}}) == "op 5 rev 3 1 7");
}
