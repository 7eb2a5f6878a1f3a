#pragma once

#include <span>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

// A 1/2-separator pick: removing `vertex` from its component leaves pieces of
// size at most floor(|component|/2) each.
struct SeparatorChoice {
    VertexId vertex = 0;
    std::vector<std::uint32_t> component_sizes; // sorted ascending
};

// Centroid of the induced subtree on `component`; ties broken by smallest id.
// Throws EmptyComponent / DisconnectedComponent on bad input.
SeparatorChoice find_half_separator(const Tree& tree, std::span<const VertexId> component);

// Round-based unique-min coloring: round i removes the centroid of every
// remaining component and colors it base+i-1. Uses at most
// floor(log2 n) + 1 distinct colors.
Coloring color_tree(const Tree& tree, Color base);

} // namespace cfc
