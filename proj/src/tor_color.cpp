#include "cfc/tor_color.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cfc/interval.hpp"
#include "cfc/tree_color.hpp"

namespace cfc {

namespace {

Color floor_log2(std::uint64_t x) {
    return static_cast<Color>(std::bit_width(x) - 1);
}

} // namespace

Tree TreeRepresentation::as_tree() const {
    std::vector<std::pair<VertexId, VertexId>> re;
    re.reserve(edges.size());
    for (auto [u, v] : edges)
        re.emplace_back(rep_index(u), rep_index(v));
    return Tree::from_edges(vertex_count(), re);
}

std::uint32_t TreeRepresentation::rep_index(VertexId g_vertex) const {
    auto it = std::lower_bound(rep_to_g.begin(), rep_to_g.end(), g_vertex);
    if (it == rep_to_g.end() || *it != g_vertex)
        fail(Errc::VertexOutOfRange, "vertex " + std::to_string(g_vertex) + " is not an attachment");
    return static_cast<std::uint32_t>(it - rep_to_g.begin());
}

TreeRepresentation build_tree_representation(const TreeOfRings& tor) {
    TreeRepresentation rep;
    rep.rep_to_g = tor.attachment_vertices();
    rep.per_ring_paths.resize(tor.num_rings());
    if (rep.rep_to_g.empty())
        return rep; // single ring

    for (std::size_t i = 0; i < tor.num_rings(); ++i) {
        const auto& ring = tor.ring(i);
        std::vector<VertexId> atts;
        for (VertexId v : ring)
            if (tor.ring_membership(v) >= 2)
                atts.push_back(v);
        if (atts.empty())
            continue;

        // Path order: cyclic order around the ring, starting at the vertex
        // shared with the greedy-order parent (smallest attachment for the
        // root ring).
        VertexId start = tor.is_greedy_root(i) ? *std::min_element(atts.begin(), atts.end())
                                               : tor.parent_attachment(i);
        std::size_t pos = std::find(ring.begin(), ring.end(), start) - ring.begin();
        std::vector<VertexId>& path = rep.per_ring_paths[i];
        for (std::size_t k = 0; k < ring.size(); ++k) {
            VertexId v = ring[(pos + k) % ring.size()];
            if (tor.ring_membership(v) >= 2)
                path.push_back(v);
        }
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            VertexId u = path[k], v = path[k + 1];
            rep.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(rep.edges.begin(), rep.edges.end());

    // Must come out a tree; anything else means the instance was invalid.
    if (rep.edges.size() + 1 != rep.rep_to_g.size())
        fail(Errc::NotATree, "attachment paths do not form a tree");
    rep.as_tree(); // connectivity check
    return rep;
}

std::vector<VertexId> residual_cycle(const std::vector<VertexId>& ring,
                                     const std::vector<VertexId>& removed) {
    std::vector<VertexId> out;
    for (VertexId v : ring)
        if (std::find(removed.begin(), removed.end(), v) == removed.end())
            out.push_back(v);
    if (out.empty())
        fail(Errc::AllRemoved, "residual cycle is empty");
    return out;
}

TorColoring color_tree_of_rings(const TreeOfRings& tor) {
    TorColoring result;
    result.colors.assign(tor.vertex_count(), 0);

    if (tor.num_rings() == 1) {
        const auto& ring = tor.ring(0);
        color_cycle_sequence(ring, 1, result.colors);
        RingPlan plan;
        plan.ring_index = 0;
        plan.cm = 0;
        plan.residual_cycle = ring;
        for (VertexId v : ring)
            plan.assigned_colors.push_back(result.colors[v]);
        result.plans.push_back(std::move(plan));
        return result;
    }

    TreeRepresentation rep = build_tree_representation(tor);
    Tree rep_tree = rep.as_tree();
    Coloring rep_colors = color_tree(rep_tree, 1);
    for (std::uint32_t k = 0; k < rep.vertex_count(); ++k)
        result.colors[rep.rep_to_g[k]] = rep_colors[k];

    // Ring passes in greedy order. Attachments stay as colored above; only
    // interior vertices receive colors here, all above the ring's cm.
    for (std::size_t i : tor.greedy_order()) {
        const auto& ring = tor.ring(i);
        RingPlan plan;
        plan.ring_index = i;
        for (VertexId v : ring) {
            if (tor.ring_membership(v) >= 2) {
                plan.cm = std::max(plan.cm, result.colors[v]);
            } else {
                plan.residual_cycle.push_back(v);
            }
        }
        if (!plan.residual_cycle.empty())
            color_cycle_sequence(plan.residual_cycle, plan.cm + 1, result.colors);
        for (VertexId v : plan.residual_cycle)
            plan.assigned_colors.push_back(result.colors[v]);
        result.plans.push_back(std::move(plan));
    }
    return result;
}

Color color_bound_tor(const TreeOfRings& tor) {
    std::uint64_t a = tor.attachment_vertices().size();
    std::uint64_t r = tor.max_ring_len();
    return (floor_log2(std::max<std::uint64_t>(1, a)) + 1) +
           floor_log2(std::max<std::uint64_t>(2, r - 1)) + 2;
}

} // namespace cfc
