#pragma once

#include <cstdint>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

// Unique-min coloring of a chain of n positions (stored 0-based).
// Uses exactly floor(log2 n) + 1 distinct colors from {base, base+1, ...}.
struct ChainColoring {
    Coloring colors;
    Color base_color = 1;
};

// Ruler coloring by midpoint recursion: the pivot of [l,r] is
// l + ceil(len/2) - 1, gets the current color, and both halves recurse with
// the next color. For n=8 this yields 3 2 3 1 3 2 3 4.
ChainColoring color_chain(std::uint32_t n, Color base);

// Positions (1-based) assigned color i by the literal step-i schedule:
// { floor(sum_{j in S} n/2^j) : S subset of {1..i}, i in S }, evaluated in
// exact integer arithmetic as floor(n*m / 2^i) over odd m < 2^i, with
// positions outside [1, n] discarded. Cross-check only; the midpoint
// recursion is the adopted algorithm.
std::vector<std::uint64_t> step_formula_positions(std::uint64_t n, std::uint32_t i);

// Ring coloring: the anchor keeps color `base` for itself; the remaining
// n-1 vertices, in cyclic order starting after the anchor, get the chain
// coloring with base+1. At most floor(log2(n-1)) + 2 distinct colors.
Coloring color_ring(std::uint32_t n, Color base, VertexId anchor);

// Same construction along an explicit cyclic vertex sequence. The anchor is
// the sequence element with the smallest id.
void color_cycle_sequence(const std::vector<VertexId>& cycle, Color base, Coloring& out);

// Replace every color i by c_max - i + 1; unique-min becomes unique-max.
Coloring to_unique_max(const Coloring& coloring);

} // namespace cfc
