#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cfc/interval.hpp"
#include "cfc/tor_color.hpp"
#include "cfc/tree_color.hpp"
#include "cfc/verify.hpp"
#include "instances.hpp"

using namespace cfc;

TEST_CASE("tree representation shapes") {
    // one attachment, no edges
    TreeOfRings two = TreeOfRings::build({{0, 1, 2, 3}, {0, 4, 5, 6}});
    TreeRepresentation rep = build_tree_representation(two);
    CHECK(rep.rep_to_g == std::vector<VertexId>{0});
    CHECK(rep.edges.empty());

    // R1-R2 share a, R2-R3 share b: T(G) is the edge a-b
    TreeOfRings three = TreeOfRings::build({{0, 1, 2, 3}, {0, 4, 5, 6}, {5, 7, 8, 9}});
    rep = build_tree_representation(three);
    CHECK(rep.rep_to_g == std::vector<VertexId>{0, 5});
    CHECK(rep.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 5}});
    CHECK(rep.per_ring_paths[1] == std::vector<VertexId>{0, 5});

    // three rings at one vertex
    TreeOfRings star = TreeOfRings::build({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    rep = build_tree_representation(star);
    CHECK(rep.rep_to_g == std::vector<VertexId>{0});
    CHECK(rep.edges.empty());

    // single ring: empty representation
    CHECK(build_tree_representation(TreeOfRings::build({{0, 1, 2, 3}})).empty());
}

TEST_CASE("tree representation with three attachments on one ring") {
    TreeOfRings tor = TreeOfRings::build(
        {{0, 1, 2, 3, 4, 5}, {0, 6, 7}, {2, 8, 9}, {4, 10, 11}});
    TreeRepresentation rep = build_tree_representation(tor);
    CHECK(rep.rep_to_g == std::vector<VertexId>{0, 2, 4});
    // root ring's path starts at its smallest attachment and follows cyclic order
    CHECK(rep.per_ring_paths[0] == std::vector<VertexId>{0, 2, 4});
    CHECK(rep.edges == std::vector<std::pair<VertexId, VertexId>>{{0, 2}, {2, 4}});
}

TEST_CASE("residual cycle") {
    CHECK(residual_cycle({0, 1, 2, 3}, {0}) == std::vector<VertexId>{1, 2, 3});
    CHECK(residual_cycle({0, 1, 2, 3, 4, 5}, {0, 3}) == std::vector<VertexId>{1, 2, 4, 5});
    CHECK(residual_cycle({0, 1, 2}, {0, 1}) == std::vector<VertexId>{2});
    try {
        residual_cycle({0, 1, 2}, {0, 1, 2});
        FAIL("expected AllRemoved");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AllRemoved);
    }
}

TEST_CASE("two rings of length 4 sharing vertex 0") {
    TreeOfRings tor = TreeOfRings::build({{0, 1, 2, 3}, {0, 4, 5, 6}});
    TorColoring result = color_tree_of_rings(tor);
    CHECK(result.colors == Coloring{1, 2, 3, 4, 2, 3, 4});
    std::set<Color> distinct(result.colors.begin(), result.colors.end());
    CHECK(distinct.size() == 4);
    CHECK(result.plans.size() == 2);
    CHECK(result.plans[0].cm == 1);
    CHECK(result.plans[0].residual_cycle == std::vector<VertexId>{1, 2, 3});
    CHECK(result.plans[1].cm == 1);

    CHECK(color_bound_tor(tor) == 4);

    VerifyOptions paths;
    CHECK(check_property(tor.graph(), result.colors, paths).ok);
}

TEST_CASE("single ring degenerates to the plain ring coloring") {
    TreeOfRings tor = TreeOfRings::build({{0, 1, 2, 3, 4, 5, 6, 7}});
    TorColoring result = color_tree_of_rings(tor);
    CHECK(result.colors == color_ring(8, 1, 0));
    CHECK(result.colors == Coloring{1, 4, 3, 4, 2, 4, 3, 4});
    CHECK(result.plans.size() == 1);
    CHECK(result.plans[0].cm == 0);
    CHECK(color_bound_tor(tor) == 5);
}

TEST_CASE("chain of three 4-rings") {
    TreeOfRings tor = TreeOfRings::build({{0, 1, 2, 3}, {0, 4, 5, 6}, {5, 7, 8, 9}});
    TorColoring result = color_tree_of_rings(tor);
    // T(G) = path 0-5 colored [1,2]
    CHECK(result.colors[0] == 1);
    CHECK(result.colors[5] == 2);
    // middle ring: cm=2, residual {4,6} -> {3,4}
    CHECK(result.colors[4] == 3);
    CHECK(result.colors[6] == 4);
    // first ring: cm=1, residual {1,2,3} -> {2,3,4}
    CHECK(result.colors[1] == 2);
    CHECK(result.colors[2] == 3);
    CHECK(result.colors[3] == 4);
    // last ring: cm=2, residual {7,8,9} -> {3,4,5}
    CHECK(result.colors[7] == 3);
    CHECK(result.colors[8] == 4);
    CHECK(result.colors[9] == 5);
    CHECK(*std::max_element(result.colors.begin(), result.colors.end()) == 5);
    CHECK(color_bound_tor(tor) == 5);

    VerifyOptions paths;
    CHECK(check_property(tor.graph(), result.colors, paths).ok);
}

TEST_CASE("ring whose vertices are all attachments") {
    TreeOfRings tor = TreeOfRings::build({{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}});
    TorColoring result = color_tree_of_rings(tor);
    for (Color c : result.colors)
        CHECK(c >= 1); // total
    // ring 0 had nothing left to color
    CHECK(result.plans[0].ring_index == 0);
    CHECK(result.plans[0].residual_cycle.empty());
    // every full ring still holds its minimum exactly once
    for (const auto& ring : tor.rings()) {
        Color min = result.colors[ring[0]];
        for (VertexId v : ring)
            min = std::min(min, result.colors[v]);
        int count = 0;
        for (VertexId v : ring)
            if (result.colors[v] == min)
                ++count;
        CHECK(count == 1);
    }
}

TEST_CASE("attachment colors are preserved and interiors sit above cm") {
    Prng prng(707);
    for (int t = 0; t < 30; ++t) {
        TreeOfRings tor = gen_random_tor(1 + prng.next_below(6), 3, 8, prng.next());
        TorColoring result = color_tree_of_rings(tor);
        TreeRepresentation rep = build_tree_representation(tor);
        if (!rep.empty()) {
            Coloring rep_colors = color_tree(rep.as_tree(), 1);
            for (std::uint32_t k = 0; k < rep.vertex_count(); ++k)
                CHECK(result.colors[rep.rep_to_g[k]] == rep_colors[k]);
        }
        for (const auto& plan : result.plans) {
            for (std::size_t k = 0; k < plan.residual_cycle.size(); ++k) {
                CHECK(plan.assigned_colors[k] == result.colors[plan.residual_cycle[k]]);
                CHECK(plan.assigned_colors[k] >= plan.cm + 1);
            }
            if (plan.residual_cycle.size() >= 3) {
                std::uint32_t log = 0;
                while ((std::size_t{2} << log) <= plan.residual_cycle.size())
                    ++log;
                Color cap = plan.cm + static_cast<Color>(log) + 2;
                for (Color c : plan.assigned_colors)
                    CHECK(c <= cap);
            }
        }
        // totality and bound
        for (Color c : result.colors)
            CHECK(c >= 1);
        CHECK(*std::max_element(result.colors.begin(), result.colors.end()) <=
              color_bound_tor(tor));
    }
}

TEST_CASE("path-mode unique-min on chains and caterpillars of rings") {
    VerifyOptions paths;
    for (auto lengths : std::vector<std::vector<std::uint32_t>>{
             {3, 3}, {4, 5}, {8, 3}, {3, 4, 5}, {5, 5, 5}, {3, 3, 3, 3}}) {
        TreeOfRings tor = testgen::canonical_chain_of_rings(lengths);
        TorColoring result = color_tree_of_rings(tor);
        auto report = check_property(tor.graph(), result.colors, paths);
        CHECK(report.ok);
    }
    Prng prng(808);
    for (int t = 0; t < 15; ++t) {
        TreeOfRings tor = testgen::random_caterpillar(prng);
        TorColoring result = color_tree_of_rings(tor);
        CHECK(check_property(tor.graph(), result.colors, paths).ok);
        CHECK(*std::max_element(result.colors.begin(), result.colors.end()) <=
              color_bound_tor(tor));
    }
}

TEST_CASE("every ring hyperedge keeps a unique minimum on general instances") {
    Prng prng(909);
    for (int t = 0; t < 25; ++t) {
        TreeOfRings tor = gen_random_tor(2 + prng.next_below(5), 3, 6, prng.next());
        TorColoring result = color_tree_of_rings(tor);
        for (const auto& ring : tor.rings()) {
            Color min = result.colors[ring[0]];
            for (VertexId v : ring)
                min = std::min(min, result.colors[v]);
            int count = 0;
            for (VertexId v : ring)
                if (result.colors[v] == min)
                    ++count;
            CHECK(count == 1);
        }
    }
}
