#pragma once

#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

// Tree over the attachment vertices of a tree of rings: each ring contributes
// a path visiting its attachments in cyclic order, and paths are glued at
// shared vertices. Empty when the instance is a single ring.
struct TreeRepresentation {
    std::vector<VertexId> rep_to_g;          // rep vertex -> attachment id in G, sorted
    std::vector<std::pair<VertexId, VertexId>> edges; // as G vertex ids, canonical order
    std::vector<std::vector<VertexId>> per_ring_paths; // per ring, attachment ids in path order

    bool empty() const { return rep_to_g.empty(); }
    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(rep_to_g.size()); }
    Tree as_tree() const; // re-indexed over rep ids
    std::uint32_t rep_index(VertexId g_vertex) const;
};

// What the per-ring pass did: the offset cm (max color among the ring's
// already-colored vertices), the residual cycle, and the colors it received.
struct RingPlan {
    std::size_t ring_index = 0;
    Color cm = 0;
    std::vector<VertexId> residual_cycle;
    std::vector<Color> assigned_colors; // parallel to residual_cycle
};

struct TorColoring {
    Coloring colors;
    std::vector<RingPlan> plans; // in greedy processing order
};

TreeRepresentation build_tree_representation(const TreeOfRings& tor);

// Remaining vertices of a ring after deleting `removed`, in original cyclic
// order. Throws AllRemoved when nothing survives.
std::vector<VertexId> residual_cycle(const std::vector<VertexId>& ring,
                                     const std::vector<VertexId>& removed);

// Colors T(G) first, copies those colors onto the attachment vertices, then
// colors every ring's residual cycle starting above the ring's cm. A single
// ring degenerates to the plain ring coloring anchored at its smallest id.
TorColoring color_tree_of_rings(const TreeOfRings& tor);

// Color budget (floor(log2 max(1,|A|)) + 1) + floor(log2 max(2,|R|-1)) + 2;
// the coloring's max color never exceeds it.
Color color_bound_tor(const TreeOfRings& tor);

} // namespace cfc
