#include "cfc/tree_color.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace cfc {

namespace {

// Centroid of one known-connected component of the alive vertices.
// Component sizes after removal are written to `sizes_out` (sorted).
VertexId centroid_of_component(const Graph& g, const std::vector<VertexId>& component,
                               std::vector<std::uint32_t>& sizes_out) {
    const std::uint32_t total = static_cast<std::uint32_t>(component.size());
    if (total == 1) {
        sizes_out.clear();
        return component[0];
    }

    std::vector<std::uint32_t> local(g.vertex_count(), UINT32_MAX);
    for (std::uint32_t k = 0; k < total; ++k)
        local[component[k]] = k;

    // Iterative post-order over the component from its smallest vertex.
    std::vector<VertexId> order;
    std::vector<VertexId> parent(total, UINT32_MAX);
    order.reserve(total);
    std::vector<VertexId> stack{component[0]};
    std::vector<bool> seen(total, false);
    seen[0] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (VertexId w : g.neighbors(v)) {
            std::uint32_t lw = local[w];
            if (lw == UINT32_MAX || seen[lw])
                continue;
            seen[lw] = true;
            parent[lw] = v;
            stack.push_back(w);
        }
    }
    assert(order.size() == total);

    std::vector<std::uint32_t> subtree(total, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId p = parent[local[*it]];
        if (p != UINT32_MAX)
            subtree[local[p]] += subtree[local[*it]];
    }

    // The centroid minimizes the largest remaining piece; among vertices
    // meeting the floor(total/2) bound the smallest id wins.
    VertexId best = UINT32_MAX;
    for (VertexId v : component) {
        std::uint32_t worst = total - subtree[local[v]]; // piece through the parent
        for (VertexId w : g.neighbors(v)) {
            std::uint32_t lw = local[w];
            if (lw != UINT32_MAX && parent[lw] == v)
                worst = std::max(worst, subtree[lw]);
        }
        if (worst <= total / 2 && v < best)
            best = v;
    }
    if (best == UINT32_MAX)
        fail(Errc::ValidationError, "no 1/2-separator found"); // unreachable on trees

    sizes_out.clear();
    VertexId v = best;
    if (parent[local[v]] != UINT32_MAX)
        sizes_out.push_back(total - subtree[local[v]]);
    for (VertexId w : g.neighbors(v)) {
        std::uint32_t lw = local[w];
        if (lw != UINT32_MAX && parent[lw] == v)
            sizes_out.push_back(subtree[lw]);
    }
    std::sort(sizes_out.begin(), sizes_out.end());
    for (std::uint32_t s : sizes_out)
        if (s > total / 2)
            fail(Errc::ValidationError, "separator postcondition violated");
    return v;
}

} // namespace

SeparatorChoice find_half_separator(const Tree& tree, std::span<const VertexId> component) {
    if (component.empty())
        fail(Errc::EmptyComponent, "separator of an empty component");
    const Graph& g = tree.graph();
    std::vector<VertexId> verts(component.begin(), component.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (VertexId v : verts)
        if (v >= g.vertex_count())
            fail(Errc::VertexOutOfRange, "component vertex " + std::to_string(v));

    // Connectivity within the induced subgraph.
    {
        std::vector<bool> in_comp(g.vertex_count(), false);
        for (VertexId v : verts)
            in_comp[v] = true;
        std::vector<VertexId> stack{verts[0]};
        std::vector<bool> seen(g.vertex_count(), false);
        seen[verts[0]] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(v)) {
                if (in_comp[w] && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != verts.size())
            fail(Errc::DisconnectedComponent, "component is not connected in the tree");
    }

    SeparatorChoice choice;
    choice.vertex = centroid_of_component(g, verts, choice.component_sizes);
    return choice;
}

Coloring color_tree(const Tree& tree, Color base) {
    const Graph& g = tree.graph();
    const std::uint32_t n = g.vertex_count();
    Coloring colors(n, 0);

    std::vector<bool> alive(n, true);
    std::uint32_t remaining = n;
    Color round_color = base;
    std::vector<std::uint32_t> sizes;

    while (remaining > 0) {
        // Components of the current forest.
        std::vector<std::vector<VertexId>> components;
        std::vector<bool> seen(n, false);
        for (VertexId s = 0; s < n; ++s) {
            if (!alive[s] || seen[s])
                continue;
            std::vector<VertexId> comp;
            std::vector<VertexId> stack{s};
            seen[s] = true;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (VertexId w : g.neighbors(v))
                    if (alive[w] && !seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
            }
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }

        for (const auto& comp : components) {
            VertexId sep = centroid_of_component(g, comp, sizes);
            colors[sep] = round_color;
            alive[sep] = false;
            --remaining;
        }
        ++round_color;
    }
    return colors;
}

} // namespace cfc
