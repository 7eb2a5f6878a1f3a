#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

// Hyperedge family to enumerate: vertex sets of simple paths, or all vertex
// subsets inducing connected subgraphs.
enum class HyperedgeKind { Paths, ConnectedSubgraphs };

enum class PropertyKind { UniqueMin, ConflictFree };

// check_property ships two implementations of the same contract: a serial
// reference and an OpenMP-parallel kernel. Reports are identical; the serial
// path exists for testing and as the baseline in the benchmark tool.
enum class Execution { Serial, Parallel };

struct VerifyOptions {
    HyperedgeKind mode = HyperedgeKind::Paths;
    PropertyKind property = PropertyKind::UniqueMin;
    std::uint32_t max_subgraph_vertices = 20; // connected-subgraphs vertex cap
    std::uint64_t max_paths = 10'000'000;     // enumerated-path budget (pre-dedup)
    Execution execution = Execution::Parallel;
};

// On violation: the hyperedge's minimum color and how often it occurs there.
struct WitnessDetail {
    Color color = 0;
    std::uint32_t multiplicity = 0;
};

struct VerificationReport {
    HyperedgeKind mode = HyperedgeKind::Paths;
    PropertyKind property = PropertyKind::UniqueMin;
    bool ok = true;
    std::uint64_t hyperedges_checked = 0; // distinct hyperedge sets examined
    std::optional<std::vector<VertexId>> witness; // lexicographically smallest violating set
    std::optional<WitnessDetail> witness_detail;
};

bool operator==(const WitnessDetail& a, const WitnessDetail& b);
bool operator==(const VerificationReport& a, const VerificationReport& b);

// Enumerates the chosen hyperedge family and checks the property on every
// hyperedge. Deterministic: repeated runs (serial or parallel) yield identical
// reports, including the canonical witness.
VerificationReport check_property(const Graph& graph, const Coloring& coloring,
                                  const VerifyOptions& options = {});

// Vertex sets of all simple paths (singletons included), deduplicated,
// sorted, in lexicographic order. Throws BudgetExceeded when more than
// max_paths path traversals would be enumerated.
std::vector<std::vector<VertexId>> enumerate_paths(const Graph& graph,
                                                   std::uint64_t max_paths = 10'000'000);

// Every nonempty vertex subset inducing a connected subgraph, each exactly
// once, in lexicographic order. Throws TooLarge when n exceeds max_vertices.
std::vector<std::vector<VertexId>> enumerate_connected_subgraphs(const Graph& graph,
                                                                 std::uint32_t max_vertices = 20);

} // namespace cfc
