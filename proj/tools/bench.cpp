// Times the serial reference against the OpenMP kernel on a few exhaustive
// verification workloads and checks that both produce the same report.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cfc/instance.hpp"
#include "cfc/tor_color.hpp"
#include "cfc/tree_color.hpp"
#include "cfc/verify.hpp"

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

// Proper chain of rings, consecutive rings glued diametrically.
cfc::TreeOfRings chain_of_rings(int count, int len) {
    std::vector<std::vector<cfc::VertexId>> rings;
    cfc::VertexId next = 0, attach = 0;
    for (int i = 0; i < count; ++i) {
        std::vector<cfc::VertexId> ring;
        if (i == 0) {
            for (int k = 0; k < len; ++k)
                ring.push_back(next++);
        } else {
            ring.push_back(attach);
            for (int k = 1; k < len; ++k)
                ring.push_back(next++);
        }
        attach = ring[len / 2];
        rings.push_back(std::move(ring));
    }
    return cfc::TreeOfRings::build(std::move(rings));
}

// Spine with leaf tufts; connected-subgraph counts grow as 2^(leaves).
cfc::Tree caterpillar_tree(int spine, int leaves_per_spine) {
    std::vector<std::pair<cfc::VertexId, cfc::VertexId>> edges;
    cfc::VertexId id = static_cast<cfc::VertexId>(spine);
    for (cfc::VertexId s = 0; s + 1 < static_cast<cfc::VertexId>(spine); ++s)
        edges.emplace_back(s, s + 1);
    for (cfc::VertexId s = 0; s < static_cast<cfc::VertexId>(spine); ++s)
        for (int l = 0; l < leaves_per_spine; ++l)
            edges.emplace_back(s, id++);
    return cfc::Tree::from_edges(id, edges);
}

struct Case {
    std::string name;
    cfc::Graph graph;
    cfc::Coloring coloring;
    cfc::VerifyOptions options;
};

int run_case(const Case& c) {
    cfc::VerifyOptions serial = c.options;
    serial.execution = cfc::Execution::Serial;
    cfc::VerifyOptions parallel = c.options;
    parallel.execution = cfc::Execution::Parallel;

    double t0 = now_seconds();
    cfc::VerificationReport rs = cfc::check_property(c.graph, c.coloring, serial);
    double t1 = now_seconds();
    cfc::VerificationReport rp = cfc::check_property(c.graph, c.coloring, parallel);
    double t2 = now_seconds();

    bool same = rs == rp;
    std::printf("%-30s %12llu hyperedges  serial %7.3f s  parallel %7.3f s  speedup %5.2fx  %s\n",
                c.name.c_str(), static_cast<unsigned long long>(rs.hyperedges_checked), t1 - t0,
                t2 - t1, (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0,
                same ? "reports match" : "REPORT MISMATCH");
    return same ? 0 : 1;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    std::vector<Case> cases;

    {
        cfc::TreeOfRings tor = chain_of_rings(15, 4);
        Case c;
        c.name = "ring-chain-15x4 paths";
        c.graph = tor.graph();
        c.coloring = cfc::color_tree_of_rings(tor).colors;
        c.options.max_paths = 500'000'000;
        cases.push_back(std::move(c));
    }
    {
        cfc::TreeOfRings tor = cfc::gen_random_tor(14, 3, 4, 7);
        Case c;
        c.name = "random-tor-14 paths";
        c.graph = tor.graph();
        c.coloring = cfc::color_tree_of_rings(tor).colors;
        c.options.max_paths = 500'000'000;
        cases.push_back(std::move(c));
    }
    {
        cfc::Tree cat = caterpillar_tree(6, 4);
        Case c;
        c.name = "caterpillar-30 connected";
        c.graph = cat.graph();
        c.coloring = cfc::color_tree(cat, 1);
        c.options.mode = cfc::HyperedgeKind::ConnectedSubgraphs;
        c.options.max_subgraph_vertices = 32;
        cases.push_back(std::move(c));
    }
    {
        cfc::Tree tree = cfc::gen_random_tree(26, 2024);
        Case c;
        c.name = "random-tree-26 connected";
        c.graph = tree.graph();
        c.coloring = cfc::color_tree(tree, 1);
        c.options.mode = cfc::HyperedgeKind::ConnectedSubgraphs;
        c.options.max_subgraph_vertices = 32;
        cases.push_back(std::move(c));
    }

    int failures = 0;
    for (const auto& c : cases)
        failures += run_case(c);
    return failures == 0 ? 0 : 1;
}
