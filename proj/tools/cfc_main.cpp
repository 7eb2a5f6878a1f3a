#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfc/instance.hpp"
#include "cfc/tor_color.hpp"
#include "cfc/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        cfc::fail(cfc::Errc::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        cfc::fail(cfc::Errc::ParseError, "cannot write " + out_path);
    out << content;
}

struct GenerateArgs {
    std::string kind;
    std::uint32_t n = 0;
    std::size_t rings = 1;
    std::uint32_t min_len = 3;
    std::uint32_t max_len = 3;
    std::uint64_t seed = 0;
    std::string out;
};

int run_generate(const GenerateArgs& a) {
    cfc::Instance instance;
    if (a.kind == "chain") {
        if (a.n < 1)
            cfc::fail(cfc::Errc::ValidationError, "chain needs --n >= 1");
        instance = cfc::ChainInstance{a.n};
    } else if (a.kind == "ring") {
        if (a.n < 3)
            cfc::fail(cfc::Errc::RingTooShort, "ring needs --n >= 3");
        instance = cfc::RingInstance{a.n};
    } else if (a.kind == "tree") {
        instance = cfc::TreeInstance{cfc::gen_random_tree(a.n, a.seed)};
    } else {
        instance = cfc::TorInstance{cfc::gen_random_tor(a.rings, a.min_len, a.max_len, a.seed)};
    }
    emit(a.out, cfc::write_instance(instance));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unique-min conflict-free coloring of chains, rings, trees, and trees of rings"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Write a canonical instance file");
    generate->add_option("--kind", gen.kind, "chain|ring|tree|tree-of-rings")
        ->required()
        ->check(CLI::IsMember({"chain", "ring", "tree", "tree-of-rings"}));
    generate->add_option("--n", gen.n, "vertex count (chain, ring, tree)");
    generate->add_option("--rings", gen.rings, "ring count (tree-of-rings)");
    generate->add_option("--min-len", gen.min_len, "minimum ring length");
    generate->add_option("--max-len", gen.max_len, "maximum ring length");
    generate->add_option("--seed", gen.seed, "PRNG seed");
    generate->add_option("-o,--out", gen.out, "output path (default stdout)");

    std::string color_instance_path, color_out;
    auto* color = app.add_subcommand("color", "Color an instance (base color 1)");
    color->add_option("instance", color_instance_path)->required();
    color->add_option("-o,--out", color_out, "output path (default stdout)");

    std::string verify_instance_path, verify_coloring_path, verify_out;
    std::string verify_mode = "paths", verify_property = "unique-min";
    std::uint32_t max_subgraph_vertices = 20;
    std::uint64_t max_paths = 10'000'000;
    bool verify_serial = false;
    auto* verify = app.add_subcommand("verify", "Check a coloring by exhaustive enumeration");
    verify->add_option("instance", verify_instance_path)->required();
    verify->add_option("coloring", verify_coloring_path)->required();
    verify->add_option("--mode", verify_mode, "paths|connected")
        ->check(CLI::IsMember({"paths", "connected"}));
    verify->add_option("--property", verify_property, "unique-min|cf")
        ->check(CLI::IsMember({"unique-min", "cf"}));
    verify->add_option("--max-subgraph-vertices", max_subgraph_vertices,
                       "vertex cap for connected mode");
    verify->add_option("--max-paths", max_paths, "path enumeration budget");
    verify->add_flag("--serial", verify_serial, "use the serial reference implementation");
    verify->add_option("-o,--out", verify_out, "report path (default stdout)");

    std::string stats_instance_path, stats_coloring_path, stats_out;
    auto* stats = app.add_subcommand("stats", "Color-count summary against the bound");
    stats->add_option("instance", stats_instance_path)->required();
    stats->add_option("coloring", stats_coloring_path)->required();
    stats->add_option("-o,--out", stats_out, "output path (default stdout)");

    std::string dot_instance_path, dot_coloring_path, dot_out;
    auto* export_dot_cmd = app.add_subcommand("export-dot", "Render an instance as DOT");
    export_dot_cmd->add_option("instance", dot_instance_path)->required();
    export_dot_cmd->add_option("--coloring", dot_coloring_path);
    export_dot_cmd->add_option("-o,--out", dot_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*generate)
            return run_generate(gen);

        if (*color) {
            cfc::Instance instance = cfc::read_instance(slurp(color_instance_path));
            emit(color_out, cfc::write_coloring(cfc::color_instance(instance)));
            return 0;
        }

        if (*verify) {
            cfc::Instance instance = cfc::read_instance(slurp(verify_instance_path));
            cfc::Coloring coloring = cfc::read_coloring(slurp(verify_coloring_path));
            cfc::VerifyOptions options;
            options.mode = verify_mode == "connected" ? cfc::HyperedgeKind::ConnectedSubgraphs
                                                      : cfc::HyperedgeKind::Paths;
            options.property = verify_property == "cf" ? cfc::PropertyKind::ConflictFree
                                                       : cfc::PropertyKind::UniqueMin;
            options.max_subgraph_vertices = max_subgraph_vertices;
            options.max_paths = max_paths;
            options.execution = verify_serial ? cfc::Execution::Serial : cfc::Execution::Parallel;
            cfc::VerificationReport report =
                cfc::check_property(cfc::instance_graph(instance), coloring, options);
            emit(verify_out, cfc::report_to_json(report));
            return report.ok ? 0 : 1;
        }

        if (*stats) {
            cfc::Instance instance = cfc::read_instance(slurp(stats_instance_path));
            cfc::Coloring coloring = cfc::read_coloring(slurp(stats_coloring_path));
            std::uint32_t n = cfc::instance_vertex_count(instance);
            if (coloring.size() != n)
                cfc::fail(cfc::Errc::ValidationError, "coloring length does not match instance");
            nlohmann::json doc;
            doc["type"] = cfc::instance_type_name(instance);
            doc["n"] = n;
            std::vector<cfc::Color> sorted = coloring;
            std::sort(sorted.begin(), sorted.end());
            doc["distinct_colors"] =
                std::unique(sorted.begin(), sorted.end()) - sorted.begin();
            doc["max_color"] = sorted.empty() ? 0 : sorted.back();
            cfc::Color bound = cfc::instance_bound(instance);
            doc["bound"] = bound;
            doc["margin"] = bound - (sorted.empty() ? 0 : sorted.back());
            if (const auto* ring = std::get_if<cfc::RingInstance>(&instance)) {
                doc["num_rings"] = 1;
                doc["max_ring_len"] = ring->n;
            } else if (const auto* tor = std::get_if<cfc::TorInstance>(&instance)) {
                doc["num_rings"] = tor->tor.num_rings();
                doc["max_ring_len"] = tor->tor.max_ring_len();
            }
            emit(stats_out, doc.dump() + "\n");
            return 0;
        }

        if (*export_dot_cmd) {
            cfc::Instance instance = cfc::read_instance(slurp(dot_instance_path));
            cfc::Graph graph = cfc::instance_graph(instance);
            std::optional<cfc::Coloring> coloring;
            if (!dot_coloring_path.empty())
                coloring = cfc::read_coloring(slurp(dot_coloring_path));
            emit(dot_out, cfc::export_dot(graph, coloring ? &*coloring : nullptr));
            return 0;
        }
    } catch (const cfc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
