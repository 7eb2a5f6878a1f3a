#include "cfc/interval.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cfc {

namespace {

// Color positions [l, r] (0-based, inclusive) starting at color c.
void color_span(Coloring& colors, std::uint32_t l, std::uint32_t r, Color c) {
    while (l <= r) {
        std::uint32_t len = r - l + 1;
        std::uint32_t mid = l + (len + 1) / 2 - 1;
        colors[mid] = c;
        // Tail-recurse on the larger right half.
        if (mid > l)
            color_span(colors, l, mid - 1, c + 1);
        if (mid == r)
            return;
        l = mid + 1;
        ++c;
    }
}

} // namespace

ChainColoring color_chain(std::uint32_t n, Color base) {
    if (n == 0)
        fail(Errc::ZeroLength, "chain of length 0");
    ChainColoring out;
    out.base_color = base;
    out.colors.assign(n, 0);
    color_span(out.colors, 0, n - 1, base);
    return out;
}

std::vector<std::uint64_t> step_formula_positions(std::uint64_t n, std::uint32_t i) {
    // Once 2^i >= 2n, consecutive odd numerators land at most 1 apart, so the
    // floor values cover exactly 1..n-1; no need to enumerate 2^(i-1) terms.
    if (i >= 63 || (std::uint64_t{1} << i) >= 2 * n) {
        std::vector<std::uint64_t> all;
        for (std::uint64_t p = 1; p + 1 <= n; ++p)
            all.push_back(p);
        return all;
    }
    std::set<std::uint64_t> positions;
    const std::uint64_t pow = std::uint64_t{1} << i;
    for (std::uint64_t m = 1; m < pow; m += 2) {
        std::uint64_t p = n * m / pow;
        if (p >= 1 && p <= n)
            positions.insert(p);
    }
    return {positions.begin(), positions.end()};
}

Coloring color_ring(std::uint32_t n, Color base, VertexId anchor) {
    if (n < 3)
        fail(Errc::RingTooShort, "ring of length " + std::to_string(n));
    if (anchor >= n)
        fail(Errc::VertexOutOfRange, "anchor " + std::to_string(anchor));
    Coloring colors(n, 0);
    colors[anchor] = base;
    ChainColoring chain = color_chain(n - 1, base + 1);
    for (std::uint32_t k = 0; k < n - 1; ++k)
        colors[(anchor + 1 + k) % n] = chain.colors[k];
    return colors;
}

void color_cycle_sequence(const std::vector<VertexId>& cycle, Color base, Coloring& out) {
    std::size_t n = cycle.size();
    if (n == 1) {
        out[cycle[0]] = base;
        return;
    }
    if (n == 2) {
        // Degenerate two-vertex "cycle": smaller id first.
        VertexId a = std::min(cycle[0], cycle[1]);
        VertexId b = std::max(cycle[0], cycle[1]);
        out[a] = base;
        out[b] = base + 1;
        return;
    }
    std::size_t anchor = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    out[cycle[anchor]] = base;
    ChainColoring chain = color_chain(static_cast<std::uint32_t>(n - 1), base + 1);
    for (std::size_t k = 0; k < n - 1; ++k)
        out[cycle[(anchor + 1 + k) % n]] = chain.colors[k];
}

Coloring to_unique_max(const Coloring& coloring) {
    if (coloring.empty())
        return {};
    Color c_max = *std::max_element(coloring.begin(), coloring.end());
    Coloring out(coloring.size());
    for (std::size_t v = 0; v < coloring.size(); ++v)
        out[v] = c_max - coloring[v] + 1;
    return out;
}

} // namespace cfc
