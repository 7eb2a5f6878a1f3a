#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cfc/graph.hpp"
#include "cfc/instance.hpp"

using namespace cfc;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::ValidationError;
}

} // namespace

TEST_CASE("build_graph smallest cases") {
    Graph g = Graph::from_edges(2, {{0, 1}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));

    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.edge_count() == 3);
    CHECK(tri.degree(1) == 2);
}

TEST_CASE("build_graph rejections") {
    CHECK(code_of([] { Graph::from_edges(2, {{0, 0}}); }) == Errc::SelfLoop);
    CHECK(code_of([] { Graph::from_edges(2, {{0, 1}, {1, 0}}); }) == Errc::DuplicateEdge);
    CHECK(code_of([] { Graph::from_edges(2, {{0, 2}}); }) == Errc::VertexOutOfRange);
}

TEST_CASE("edge list round-trip is canonical") {
    // scrambled input, sorted canonical output
    Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {2, 0}});
    std::vector<std::pair<VertexId, VertexId>> expect{{0, 1}, {0, 2}, {2, 3}};
    CHECK(g.edges() == expect);
    Graph g2 = Graph::from_edges(4, g.edges());
    CHECK(g2.edges() == expect);
}

TEST_CASE("tree validation") {
    CHECK_NOTHROW(Tree::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(code_of([] { Tree::from_edges(4, {{0, 1}, {2, 3}}); }) == Errc::Disconnected);
    CHECK(code_of([] { Tree::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }) == Errc::NotATree);
    CHECK_NOTHROW(Tree::from_edges(1, {}));
}

TEST_CASE("tree of rings: base cases") {
    TreeOfRings single = TreeOfRings::build({{0, 1, 2, 3}});
    CHECK(single.num_rings() == 1);
    CHECK(single.vertex_count() == 4);
    CHECK(single.attachment_vertices().empty());
    CHECK(single.max_ring_len() == 4);

    TreeOfRings two = TreeOfRings::build({{0, 1, 2, 3}, {0, 4, 5, 6}});
    CHECK(two.vertex_count() == 7);
    CHECK(two.attachment_vertices() == std::vector<VertexId>{0});
    CHECK(two.parent_attachment(1) == 0);
}

TEST_CASE("tree of rings: greedy ordering") {
    // ring 1 only becomes placeable after ring 2
    TreeOfRings tor = TreeOfRings::build({{0, 1, 2}, {3, 4, 5}, {0, 3, 6}});
    CHECK(tor.greedy_order() == std::vector<std::size_t>{0, 2, 1});
    CHECK(tor.parent_attachment(2) == 0);
    CHECK(tor.parent_attachment(1) == 3);
    CHECK(tor.attachment_vertices() == std::vector<VertexId>{0, 3});
}

TEST_CASE("tree of rings: derived example with two attachments") {
    TreeOfRings tor = TreeOfRings::build({{0, 1, 2}, {0, 3, 4}, {1, 5, 6}});
    CHECK(tor.attachment_vertices() == std::vector<VertexId>{0, 1});
    CHECK(tor.greedy_order() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("three rings glued at one vertex") {
    TreeOfRings tor = TreeOfRings::build({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    CHECK(tor.attachment_vertices() == std::vector<VertexId>{0});
    CHECK(tor.ring_membership(0) == 3);
}

TEST_CASE("tree of rings rejections") {
    CHECK(code_of([] { TreeOfRings::build({{0, 1, 2, 3}, {0, 1, 4, 5}}); }) ==
          Errc::MultiVertexIntersection);
    CHECK(code_of([] { TreeOfRings::build({{0, 1}}); }) == Errc::RingTooShort);
    CHECK(code_of([] { TreeOfRings::build({{0, 1, 2}, {3, 4, 5}}); }) == Errc::Disconnected);
    CHECK(code_of([] { TreeOfRings::build({{0, 1, 3}}); }) == Errc::VertexOutOfRange);
    CHECK(code_of([] { TreeOfRings::build({{0, 1, 1}}); }) == Errc::ValidationError);
    // a ring meeting the union at two vertices via two different rings
    CHECK(code_of([] {
              TreeOfRings::build({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}});
          }) == Errc::NotATreeOfRings);
}

TEST_CASE("vertex accounting: sum of ring lengths minus identifications") {
    auto check_tor = [](const TreeOfRings& tor) {
        std::size_t total = 0;
        for (const auto& ring : tor.rings())
            total += ring.size();
        CHECK(total - (tor.num_rings() - 1) == tor.vertex_count());
        CHECK(tor.attachment_vertices().empty() == (tor.num_rings() == 1));
    };
    check_tor(TreeOfRings::build({{0, 1, 2, 3}}));
    check_tor(TreeOfRings::build({{0, 1, 2, 3}, {0, 4, 5, 6}}));
    check_tor(TreeOfRings::build({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}));
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        check_tor(gen_random_tor(1 + seed % 7, 3, 8, seed));
}
