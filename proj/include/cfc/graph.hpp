#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cfc/error.hpp"

namespace cfc {

using VertexId = std::uint32_t;
using Color = int;

// Total vertex coloring, indexed by vertex id. Colors are positive and 1-based.
using Coloring = std::vector<Color>;

// Undirected simple graph over dense vertex ids 0..n-1.
// Canonical form: per-vertex neighbor lists sorted ascending, no self-loops,
// no parallel edges.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes the edge list.
    static Graph from_edges(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::uint32_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    bool has_edge(VertexId u, VertexId v) const;

    // Sorted canonical edge list, each edge once with u < v.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    bool connected() const;

private:
    std::uint32_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<VertexId>> adjacency_;
};

// A connected graph with exactly n-1 edges.
class Tree {
public:
    static Tree from_graph(Graph graph);
    static Tree from_edges(std::uint32_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    const Graph& graph() const { return graph_; }
    std::uint32_t vertex_count() const { return graph_.vertex_count(); }

private:
    explicit Tree(Graph graph) : graph_(std::move(graph)) {}
    Graph graph_;
};

// Rings glued together by single-vertex identifications. Validation finds a
// greedy ordering in which ring 0 stands alone and every later ring shares
// exactly one vertex with the union of its predecessors; inputs admitting no
// such ordering are rejected. A vertex may belong to more than two rings.
class TreeOfRings {
public:
    static TreeOfRings build(std::vector<std::vector<VertexId>> rings);

    std::size_t num_rings() const { return rings_.size(); }
    std::uint32_t vertex_count() const { return n_; }
    std::uint32_t max_ring_len() const;

    const std::vector<std::vector<VertexId>>& rings() const { return rings_; }
    const std::vector<VertexId>& ring(std::size_t i) const { return rings_[i]; }

    // Ring indices in greedy attachment order; greedy_order()[0] stands alone.
    const std::vector<std::size_t>& greedy_order() const { return greedy_order_; }

    // For each ring (by original index), the vertex it shares with the union
    // of its greedy-order predecessors. Unset for the root ring.
    VertexId parent_attachment(std::size_t ring_index) const { return parent_attachment_[ring_index]; }
    bool is_greedy_root(std::size_t ring_index) const { return ring_index == greedy_order_[0]; }

    // Vertices belonging to >= 2 rings, sorted ascending.
    const std::vector<VertexId>& attachment_vertices() const { return attachments_; }

    // Number of rings each vertex belongs to.
    std::size_t ring_membership(VertexId v) const { return membership_[v]; }

    // Union graph of all rings.
    const Graph& graph() const { return graph_; }

private:
    TreeOfRings() = default;

    std::vector<std::vector<VertexId>> rings_;
    std::vector<std::size_t> greedy_order_;
    std::vector<VertexId> parent_attachment_;
    std::vector<VertexId> attachments_;
    std::vector<std::uint32_t> membership_;
    std::uint32_t n_ = 0;
    Graph graph_;
};

} // namespace cfc
