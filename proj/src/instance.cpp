#include "cfc/instance.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "cfc/interval.hpp"
#include "cfc/tor_color.hpp"
#include "cfc/tree_color.hpp"

namespace cfc {

using nlohmann::json;

Tree gen_random_tree(std::uint32_t n, std::uint64_t seed) {
    if (n == 0)
        fail(Errc::ValidationError, "tree must have at least one vertex");
    if (n == 1)
        return Tree::from_edges(1, {});

    Prng prng(seed);
    std::vector<VertexId> pruefer(n - 2);
    for (auto& x : pruefer)
        x = static_cast<VertexId>(prng.next_below(n));

    // Smallest-leaf-first decode.
    std::vector<std::uint32_t> degree(n, 1);
    for (VertexId x : pruefer)
        ++degree[x];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n - 1);
    for (VertexId x : pruefer) {
        VertexId leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1)
            leaves.push(x);
    }
    VertexId u = leaves.top();
    leaves.pop();
    edges.emplace_back(u, leaves.top());
    return Tree::from_edges(n, edges);
}

TreeOfRings gen_random_tor(std::size_t num_rings, std::uint32_t min_len, std::uint32_t max_len,
                           std::uint64_t seed) {
    if (num_rings < 1)
        fail(Errc::ValidationError, "need at least one ring");
    if (min_len < 3 || min_len > max_len)
        fail(Errc::ValidationError, "ring length range must satisfy 3 <= min <= max");

    Prng prng(seed);
    const std::uint64_t span = max_len - min_len + 1;
    std::vector<std::vector<VertexId>> rings;
    std::uint32_t len = min_len + static_cast<std::uint32_t>(prng.next_below(span));
    std::vector<VertexId> ring(len);
    for (VertexId v = 0; v < len; ++v)
        ring[v] = v;
    rings.push_back(std::move(ring));
    std::uint32_t n = len;

    for (std::size_t i = 1; i < num_rings; ++i) {
        len = min_len + static_cast<std::uint32_t>(prng.next_below(span));
        VertexId attach = static_cast<VertexId>(prng.next_below(n));
        std::vector<VertexId> r{attach};
        for (std::uint32_t k = 0; k + 1 < len; ++k)
            r.push_back(n + k);
        n += len - 1;
        rings.push_back(std::move(r));
    }
    return TreeOfRings::build(std::move(rings));
}

const char* instance_type_name(const Instance& instance) {
    switch (instance.index()) {
    case 0: return "chain";
    case 1: return "ring";
    case 2: return "tree";
    default: return "tree_of_rings";
    }
}

std::uint32_t instance_vertex_count(const Instance& instance) {
    return std::visit(
        [](const auto& inst) -> std::uint32_t {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, ChainInstance> || std::is_same_v<T, RingInstance>)
                return inst.n;
            else if constexpr (std::is_same_v<T, TreeInstance>)
                return inst.tree.vertex_count();
            else
                return inst.tor.vertex_count();
        },
        instance);
}

Graph instance_graph(const Instance& instance) {
    if (const auto* chain = std::get_if<ChainInstance>(&instance)) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId v = 0; v + 1 < chain->n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edges(chain->n, edges);
    }
    if (const auto* ring = std::get_if<RingInstance>(&instance)) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (VertexId v = 0; v < ring->n; ++v)
            edges.emplace_back(v, (v + 1) % ring->n);
        return Graph::from_edges(ring->n, edges);
    }
    if (const auto* tree = std::get_if<TreeInstance>(&instance))
        return tree->tree.graph();
    return std::get<TorInstance>(instance).tor.graph();
}

Coloring color_instance(const Instance& instance) {
    if (const auto* chain = std::get_if<ChainInstance>(&instance))
        return color_chain(chain->n, 1).colors;
    if (const auto* ring = std::get_if<RingInstance>(&instance))
        return color_ring(ring->n, 1, 0);
    if (const auto* tree = std::get_if<TreeInstance>(&instance))
        return color_tree(tree->tree, 1);
    return color_tree_of_rings(std::get<TorInstance>(instance).tor).colors;
}

namespace {

Color floor_log2(std::uint64_t x) {
    Color r = -1;
    while (x) {
        x >>= 1;
        ++r;
    }
    return r;
}

} // namespace

Color instance_bound(const Instance& instance) {
    if (const auto* chain = std::get_if<ChainInstance>(&instance))
        return floor_log2(chain->n) + 1;
    if (const auto* ring = std::get_if<RingInstance>(&instance))
        return floor_log2(ring->n - 1) + 2;
    if (const auto* tree = std::get_if<TreeInstance>(&instance))
        return floor_log2(tree->tree.vertex_count()) + 1;
    return color_bound_tor(std::get<TorInstance>(instance).tor);
}

namespace {

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        fail(Errc::ParseError, "invalid JSON");
    return doc;
}

std::uint32_t require_count(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        fail(Errc::SchemaError, std::string("missing integer field \"") + key + "\"");
    std::int64_t v = doc[key].get<std::int64_t>();
    if (v < 0 || v > std::numeric_limits<std::uint32_t>::max())
        fail(Errc::SchemaError, std::string("field \"") + key + "\" out of range");
    return static_cast<std::uint32_t>(v);
}

std::vector<VertexId> vertex_list(const json& arr, const char* what) {
    if (!arr.is_array())
        fail(Errc::SchemaError, std::string(what) + " must be an array");
    std::vector<VertexId> out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
            fail(Errc::SchemaError, std::string(what) + " entries must be nonnegative integers");
        out.push_back(static_cast<VertexId>(x.get<std::int64_t>()));
    }
    return out;
}

} // namespace

Instance read_instance(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
        fail(Errc::SchemaError, "instance needs a \"type\" string");
    const std::string type = doc["type"].get<std::string>();

    if (type == "chain") {
        std::uint32_t n = require_count(doc, "n");
        if (n < 1)
            fail(Errc::ValidationError, "chain needs n >= 1");
        return ChainInstance{n};
    }
    if (type == "ring") {
        std::uint32_t n = require_count(doc, "n");
        if (n < 3)
            fail(Errc::RingTooShort, "ring needs n >= 3");
        return RingInstance{n};
    }
    if (type == "tree") {
        std::uint32_t n = require_count(doc, "n");
        if (!doc.contains("edges"))
            fail(Errc::SchemaError, "tree needs an \"edges\" array");
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& e : doc["edges"]) {
            auto pair = vertex_list(e, "edge");
            if (pair.size() != 2)
                fail(Errc::SchemaError, "edges must be [u,v] pairs");
            edges.emplace_back(pair[0], pair[1]);
        }
        return TreeInstance{Tree::from_edges(n, edges)};
    }
    if (type == "tree_of_rings") {
        if (!doc.contains("rings") || !doc["rings"].is_array())
            fail(Errc::SchemaError, "tree_of_rings needs a \"rings\" array");
        std::vector<std::vector<VertexId>> rings;
        for (const auto& r : doc["rings"])
            rings.push_back(vertex_list(r, "ring"));
        return TorInstance{TreeOfRings::build(std::move(rings))};
    }
    fail(Errc::SchemaError, "unknown instance type \"" + type + "\"");
}

std::string write_instance(const Instance& instance) {
    json doc;
    doc["type"] = instance_type_name(instance);
    if (const auto* chain = std::get_if<ChainInstance>(&instance)) {
        doc["n"] = chain->n;
    } else if (const auto* ring = std::get_if<RingInstance>(&instance)) {
        doc["n"] = ring->n;
    } else if (const auto* tree = std::get_if<TreeInstance>(&instance)) {
        doc["n"] = tree->tree.vertex_count();
        json edges = json::array();
        for (auto [u, v] : tree->tree.graph().edges())
            edges.push_back(json::array({u, v}));
        doc["edges"] = edges;
    } else {
        const auto& tor = std::get<TorInstance>(instance).tor;
        json rings = json::array();
        for (const auto& r : tor.rings())
            rings.push_back(r);
        doc["rings"] = rings;
    }
    return doc.dump() + "\n";
}

Coloring read_coloring(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_array())
        fail(Errc::SchemaError, "coloring needs a \"colors\" array");
    Coloring colors;
    for (const auto& c : doc["colors"]) {
        if (!c.is_number_integer())
            fail(Errc::SchemaError, "colors must be integers");
        std::int64_t v = c.get<std::int64_t>();
        if (v < 1)
            fail(Errc::ValidationError, "colors must be >= 1");
        colors.push_back(static_cast<Color>(v));
    }
    return colors;
}

std::string write_coloring(const Coloring& coloring) {
    json doc;
    doc["colors"] = coloring;
    return doc.dump() + "\n";
}

std::string report_to_json(const VerificationReport& report) {
    json doc;
    doc["mode"] = report.mode == HyperedgeKind::Paths ? "paths" : "connected-subgraphs";
    doc["property"] = report.property == PropertyKind::UniqueMin ? "unique-min" : "conflict-free";
    doc["ok"] = report.ok;
    doc["hyperedges_checked"] = report.hyperedges_checked;
    if (report.witness)
        doc["witness"] = *report.witness;
    if (report.witness_detail) {
        doc["witness_detail"] = {{"color", report.witness_detail->color},
                                 {"multiplicity", report.witness_detail->multiplicity}};
    }
    return doc.dump() + "\n";
}

std::string export_dot(const Graph& graph, const Coloring* coloring) {
    if (coloring && coloring->size() != graph.vertex_count())
        fail(Errc::ValidationError, "coloring length does not match vertex count");
    std::ostringstream os;
    os << "graph G {\n";
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        os << "  " << v << " [label=\"" << v;
        if (coloring)
            os << ":" << (*coloring)[v];
        os << "\"];\n";
    }
    for (auto [u, v] : graph.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace cfc
