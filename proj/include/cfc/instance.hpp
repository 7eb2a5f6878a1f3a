#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cfc/graph.hpp"
#include "cfc/verify.hpp"

namespace cfc {

// splitmix64. Fixed here so instances reproduce bit-for-bit across languages
// and platforms; draws use plain modulo.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Uniform labeled tree from a random Pruefer sequence (n-2 draws, each the
// next output mod n).
Tree gen_random_tree(std::uint32_t n, std::uint64_t seed);

// Ring 0 gets min_len + (draw mod span) vertices 0..len-1; every later ring
// draws its length the same way, then its attachment vertex (draw mod current
// vertex count), and extends with fresh ids in creation order.
TreeOfRings gen_random_tor(std::size_t num_rings, std::uint32_t min_len, std::uint32_t max_len,
                           std::uint64_t seed);

struct ChainInstance {
    std::uint32_t n = 0;
};
struct RingInstance {
    std::uint32_t n = 0;
};
struct TreeInstance {
    Tree tree;
};
struct TorInstance {
    TreeOfRings tor;
};

using Instance = std::variant<ChainInstance, RingInstance, TreeInstance, TorInstance>;

const char* instance_type_name(const Instance& instance);
std::uint32_t instance_vertex_count(const Instance& instance);
Graph instance_graph(const Instance& instance);

// Coloring dispatch by instance type, base color 1 throughout.
Coloring color_instance(const Instance& instance);

// The color budget the coloring of this instance type is held to.
Color instance_bound(const Instance& instance);

// JSON instance documents:
//   {"type":"chain","n":8} | {"type":"ring","n":8}
//   {"type":"tree","n":4,"edges":[[0,1],[1,2],[1,3]]}
//   {"type":"tree_of_rings","rings":[[0,1,2,3],[0,4,5,6]]}
// Writing is canonical (sorted keys, compact, trailing newline), so
// write(read(doc)) == doc for canonical documents.
Instance read_instance(const std::string& text);
std::string write_instance(const Instance& instance);

// Coloring file: {"colors":[c0,c1,...]}.
Coloring read_coloring(const std::string& text);
std::string write_coloring(const Coloring& coloring);

// Verification report with lower_snake_case keys; witness fields appear only
// on violation.
std::string report_to_json(const VerificationReport& report);

// DOT text; vertices labeled "id:color" when a coloring is given.
std::string export_dot(const Graph& graph, const Coloring* coloring = nullptr);

} // namespace cfc
