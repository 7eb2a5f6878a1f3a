#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cfc/instance.hpp"

namespace fs = std::filesystem;

static std::string g_cli;
static fs::path g_dir;

namespace {

int run(const std::string& args) {
    std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string p(const char* name) { return (g_dir / name).string(); }

} // namespace

TEST_CASE("generate writes canonical instances and rejects bad params") {
    CHECK(run("generate --kind ring --n 8 -o " + p("ring8.json")) == 0);
    CHECK(slurp(p("ring8.json")) == "{\"n\":8,\"type\":\"ring\"}\n");

    CHECK(run("generate --kind ring --n 2 -o " + p("bad.json")) == 2);
    CHECK(run("generate --kind bogus --n 2") == 2);
    CHECK(run("generate") == 2);

    CHECK(run("generate --kind tree-of-rings --rings 3 --min-len 3 --max-len 3 --seed 7 -o " +
              p("tor.json")) == 0);
    cfc::Instance tor = cfc::read_instance(slurp(p("tor.json")));
    CHECK(cfc::instance_vertex_count(tor) == 7);
}

TEST_CASE("color reproduces the reference chain and ring colorings") {
    CHECK(run("generate --kind chain --n 8 -o " + p("chain8.json")) == 0);
    CHECK(run("color " + p("chain8.json") + " -o " + p("chain8.colors.json")) == 0);
    CHECK(slurp(p("chain8.colors.json")) == "{\"colors\":[3,2,3,1,3,2,3,4]}\n");

    CHECK(run("color " + p("ring8.json") + " -o " + p("ring8.colors.json")) == 0);
    CHECK(slurp(p("ring8.colors.json")) == "{\"colors\":[1,4,3,4,2,4,3,4]}\n");
}

TEST_CASE("verify exit codes: 0 holds, 1 violated, 2 bad input") {
    CHECK(run("verify " + p("ring8.json") + " " + p("ring8.colors.json") + " -o " +
              p("report.json")) == 0);
    CHECK(slurp(p("report.json")).find("\"ok\":true") != std::string::npos);

    spit(p("chain2.json"), "{\"n\":2,\"type\":\"chain\"}\n");
    spit(p("bad.colors.json"), "{\"colors\":[1,1]}\n");
    CHECK(run("verify " + p("chain2.json") + " " + p("bad.colors.json") + " -o " +
              p("violation.json")) == 1);
    std::string report = slurp(p("violation.json"));
    CHECK(report.find("\"ok\":false") != std::string::npos);
    CHECK(report.find("\"witness\":[0,1]") != std::string::npos);

    spit(p("short.colors.json"), "{\"colors\":[1]}\n");
    CHECK(run("verify " + p("chain2.json") + " " + p("short.colors.json")) == 2);
    CHECK(run("verify " + p("chain2.json") + " " + p("nonexistent.json")) == 2);
}

TEST_CASE("verify modes and flags") {
    CHECK(run("verify " + p("chain8.json") + " " + p("chain8.colors.json") +
              " --mode connected --property cf") == 0);
    CHECK(run("verify " + p("chain8.json") + " " + p("chain8.colors.json") + " --serial") == 0);
    CHECK(run("verify " + p("chain8.json") + " " + p("chain8.colors.json") + " --mode sideways") ==
          2);
    // tiny budget trips BudgetExceeded -> usage error
    CHECK(run("verify " + p("chain8.json") + " " + p("chain8.colors.json") + " --max-paths 3") ==
          2);
}

TEST_CASE("stats reports bound and margin") {
    CHECK(run("stats " + p("chain8.json") + " " + p("chain8.colors.json") + " -o " +
              p("stats.json")) == 0);
    std::string stats = slurp(p("stats.json"));
    CHECK(stats.find("\"bound\":4") != std::string::npos);
    CHECK(stats.find("\"distinct_colors\":4") != std::string::npos);
    CHECK(stats.find("\"margin\":0") != std::string::npos);
}

TEST_CASE("tree instances color through the CLI") {
    spit(p("path4.json"), "{\"edges\":[[0,1],[1,2],[2,3]],\"n\":4,\"type\":\"tree\"}\n");
    CHECK(run("color " + p("path4.json") + " -o " + p("path4.colors.json")) == 0);
    CHECK(slurp(p("path4.colors.json")) == "{\"colors\":[2,1,2,3]}\n");

    spit(p("one.json"), "{\"edges\":[],\"n\":1,\"type\":\"tree\"}\n");
    spit(p("one.colors.json"), "{\"colors\":[1]}\n");
    CHECK(run("stats " + p("one.json") + " " + p("one.colors.json") + " -o " + p("one.stats.json")) ==
          0);
    std::string stats = slurp(p("one.stats.json"));
    CHECK(stats.find("\"distinct_colors\":1") != std::string::npos);
    CHECK(stats.find("\"bound\":1") != std::string::npos);
}

TEST_CASE("export-dot renders labels") {
    CHECK(run("export-dot " + p("ring8.json") + " --coloring " + p("ring8.colors.json") + " -o " +
              p("ring8.dot")) == 0);
    std::string dot = slurp(p("ring8.dot"));
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("0 [label=\"0:1\"]") != std::string::npos);
    CHECK(dot.find("0 -- 7;") != std::string::npos);
}

TEST_CASE("generate-color-verify pipeline is byte-deterministic") {
    for (const char* sub : {"a", "b"}) {
        fs::path dir = g_dir / sub;
        fs::create_directories(dir);
        std::string inst = (dir / "inst.json").string();
        std::string colors = (dir / "colors.json").string();
        std::string report = (dir / "report.json").string();
        CHECK(run("generate --kind tree-of-rings --rings 4 --min-len 3 --max-len 6 --seed 99 -o " +
                  inst) == 0);
        CHECK(run("color " + inst + " -o " + colors) == 0);
        CHECK(run("verify " + inst + " " + colors + " -o " + report) == 0);
    }
    for (const char* f : {"inst.json", "colors.json", "report.json"})
        CHECK(slurp(g_dir / "a" / f) == slurp(g_dir / "b" / f));
}

int main(int argc, char** argv) {
    doctest::Context context;
    if (argc > 1 && argv[argc - 1][0] != '-') {
        g_cli = argv[argc - 1];
        --argc;
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli [doctest options] <path-to-cfc-binary>\n");
        return 1;
    }
    g_dir = fs::temp_directory_path() / ("cfc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(g_dir);
    context.applyCommandLine(argc, argv);
    int rc = context.run();
    fs::remove_all(g_dir);
    return rc;
}
