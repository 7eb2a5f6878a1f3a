#include "cfc/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace cfc {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::RingTooShort: return "RingTooShort";
    case Errc::MultiVertexIntersection: return "MultiVertexIntersection";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotATreeOfRings: return "NotATreeOfRings";
    case Errc::ZeroLength: return "ZeroLength";
    case Errc::EmptyComponent: return "EmptyComponent";
    case Errc::DisconnectedComponent: return "DisconnectedComponent";
    case Errc::NotATree: return "NotATree";
    case Errc::AllRemoved: return "AllRemoved";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::ValidationError: return "ValidationError";
    }
    return "UnknownError";
}

Graph Graph::from_edges(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g;
    g.n_ = n;
    g.adjacency_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            fail(Errc::VertexOutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            fail(Errc::SelfLoop, "vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& nbrs = g.adjacency_[v];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            fail(Errc::DuplicateEdge, "at vertex " + std::to_string(v));
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool Graph::connected() const {
    if (n_ == 0)
        return true;
    std::vector<bool> seen(n_, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

Tree Tree::from_graph(Graph graph) {
    std::uint32_t n = graph.vertex_count();
    if (n == 0)
        fail(Errc::ValidationError, "tree must have at least one vertex");
    if (!graph.connected())
        fail(Errc::Disconnected, "tree graph is not connected");
    if (graph.edge_count() != n - 1)
        fail(Errc::NotATree, "edge count " + std::to_string(graph.edge_count()) + " != n-1");
    return Tree(std::move(graph));
}

Tree Tree::from_edges(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    return from_graph(Graph::from_edges(n, edges));
}

std::uint32_t TreeOfRings::max_ring_len() const {
    std::size_t best = 0;
    for (const auto& r : rings_)
        best = std::max(best, r.size());
    return static_cast<std::uint32_t>(best);
}

TreeOfRings TreeOfRings::build(std::vector<std::vector<VertexId>> rings) {
    if (rings.empty())
        fail(Errc::ValidationError, "tree of rings needs at least one ring");

    VertexId max_id = 0;
    for (std::size_t i = 0; i < rings.size(); ++i) {
        const auto& ring = rings[i];
        if (ring.size() < 3)
            fail(Errc::RingTooShort, "ring " + std::to_string(i) + " has length " + std::to_string(ring.size()));
        auto sorted = ring;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(Errc::ValidationError, "ring " + std::to_string(i) + " repeats a vertex");
        max_id = std::max(max_id, sorted.back());
    }

    std::uint32_t n = max_id + 1;
    std::vector<std::uint32_t> membership(n, 0);
    for (const auto& ring : rings)
        for (VertexId v : ring)
            ++membership[v];
    for (VertexId v = 0; v < n; ++v)
        if (membership[v] == 0)
            fail(Errc::VertexOutOfRange, "vertex ids not contiguous: " + std::to_string(v) + " unused");

    // Pairwise intersections must be single vertices.
    std::map<std::pair<std::size_t, std::size_t>, int> shared;
    {
        std::vector<std::vector<std::size_t>> rings_of(n);
        for (std::size_t i = 0; i < rings.size(); ++i)
            for (VertexId v : rings[i])
                rings_of[v].push_back(i);
        for (VertexId v = 0; v < n; ++v) {
            const auto& owners = rings_of[v];
            for (std::size_t a = 0; a < owners.size(); ++a)
                for (std::size_t b = a + 1; b < owners.size(); ++b)
                    if (++shared[{owners[a], owners[b]}] > 1)
                        fail(Errc::MultiVertexIntersection,
                             "rings " + std::to_string(owners[a]) + " and " + std::to_string(owners[b]) +
                                 " share more than one vertex");
        }
    }

    // Greedy attachment ordering, rooted at input ring 0. A ring is placeable
    // when it meets the union of placed rings in exactly one vertex.
    std::vector<bool> in_union(n, false), placed(rings.size(), false);
    std::vector<std::size_t> order;
    std::vector<VertexId> parent(rings.size(), 0);
    order.reserve(rings.size());
    for (VertexId v : rings[0])
        in_union[v] = true;
    placed[0] = true;
    order.push_back(0);
    while (order.size() < rings.size()) {
        bool progressed = false;
        bool saw_overlap = false;
        for (std::size_t i = 0; i < rings.size() && !progressed; ++i) {
            if (placed[i])
                continue;
            int hits = 0;
            VertexId hit = 0;
            for (VertexId v : rings[i]) {
                if (in_union[v]) {
                    ++hits;
                    hit = v;
                }
            }
            if (hits == 1) {
                placed[i] = true;
                parent[i] = hit;
                order.push_back(i);
                for (VertexId v : rings[i])
                    in_union[v] = true;
                progressed = true;
            } else if (hits > 1) {
                saw_overlap = true;
            }
        }
        if (!progressed) {
            if (saw_overlap)
                fail(Errc::NotATreeOfRings, "no greedy ordering: a ring meets the placed union in >1 vertex");
            fail(Errc::Disconnected, "rings do not form a connected union");
        }
    }

    TreeOfRings tor;
    tor.n_ = n;
    tor.membership_ = std::move(membership);
    for (VertexId v = 0; v < n; ++v)
        if (tor.membership_[v] >= 2)
            tor.attachments_.push_back(v);
    tor.greedy_order_ = std::move(order);
    tor.parent_attachment_ = std::move(parent);

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& ring : rings)
        for (std::size_t k = 0; k < ring.size(); ++k)
            edges.emplace_back(ring[k], ring[(k + 1) % ring.size()]);
    tor.graph_ = Graph::from_edges(n, edges);
    tor.rings_ = std::move(rings);
    return tor;
}

} // namespace cfc
