#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cellmap/formats.hpp"
#include "cli.hpp"
#include "test_util.hpp"

using cellmap::test::contains;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv;
    argv.push_back("cellmap");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cellmap::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

// files live in a per-run scratch directory
struct Scratch {
    fs::path dir;
    Scratch() {
        static int counter = 0;
        dir = fs::temp_directory_path() / ("cellmap_cli_test_" + std::to_string(++counter));
        fs::create_directories(dir);
    }
    ~Scratch() { std::error_code ec; fs::remove_all(dir, ec); }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = dir / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
};

// valid input form with the rainbow cycle left implied
const char* kTorus = "type unicellular\nedges 2\nalpha (1,3)(2,4)\nsigma (L,3,2,1,4)(R)\n";
// what the emitter prints for the same map
const char* kTorusCanonical =
    "type unicellular\nedges 2\nalpha (L,R)(1,3)(2,4)\nsigma (L,3,2,1,4)(R)\n";

}  // namespace

TEST_CASE("classify prints class and genus") {
    Scratch s;
    auto r = run_cli({"classify", s.file("torus.map", kTorus)});
    CHECK(r.code == 0);
    CHECK(r.out == "class II genus 1\n");
}

TEST_CASE("validate handles maps and diagrams") {
    Scratch s;
    auto r = run_cli({"validate", s.file("torus.map", kTorus)});
    CHECK(r.code == 0);
    CHECK(r.out == "valid unicellular map with 2 edges\n");

    auto d = run_cli({"validate", s.file("ix.dia", "N 4\nbackbones 1..2 3..4\narcs (1,3) (2,4)\n")});
    CHECK(d.code == 0);
    CHECK(d.out == "valid diagram with 4 positions, 2 backbones, 2 arcs\n");

    auto bad = run_cli({"validate", s.file("bad.map", "type unicellular\nedges 2\nalpha (1,2)\n")});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "line 3"));
}

TEST_CASE("validate and classify handle bicellular and plant-only records") {
    Scratch s;
    std::string bi = s.file("b.map", "type bicellular\nedges 2\nm 2\nalpha (1,3)(2,4)\n");
    auto r = run_cli({"validate", bi});
    CHECK(r.code == 0);
    CHECK(r.out == "valid bicellular map with 2 edges (m=2)\n");
    CHECK(run_cli({"classify", bi}).out == "class BI genus 0\n");
    CHECK(run_cli({"genus", bi}).out == "genus 0\n");

    auto plant = run_cli({"validate", s.file("p.map", "type unicellular\nedges 0\nalpha (L,R)\n")});
    CHECK(plant.code == 0);
    CHECK(plant.out == "valid unicellular map with 0 edges\n");
}

TEST_CASE("genus works on both record kinds") {
    Scratch s;
    CHECK(run_cli({"genus", s.file("torus.map", kTorus)}).out == "genus 1\n");
    CHECK(run_cli({"genus", s.file("d.dia", "N 4\nbackbones 1..4\narcs (1,3) (2,4)\n")}).out ==
          "genus 1\n");
}

TEST_CASE("decompose emits one bicellular record or a pair") {
    Scratch s;
    auto r = run_cli({"decompose", s.file("torus.map", kTorus)});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "type bicellular\nedges 1\nm 1\nalpha (L1,R1)(1,2)(L2,R2)\n"
          "sigma (L1,2,L2,1)(R1)(R2)\n");

    auto pair = run_cli({"decompose", s.file("c3.map",
        "type unicellular\nedges 3\nalpha (1,6)(2,4)(3,5)\n")});
    CHECK(pair.code == 0);
    auto records = cellmap::parse_map_records(pair.out);
    CHECK(records.size() == 2);

    auto flat = run_cli({"decompose", s.file("flat.map",
        "type unicellular\nedges 2\nalpha (1,2)(3,4)\n")});
    CHECK(flat.code == 2);
    CHECK(contains(flat.err, "genus 0"));
}

TEST_CASE("compose inverts decompose") {
    Scratch s;
    std::string bi = s.file("b.map",
        "type bicellular\nedges 1\nm 1\nalpha (1,2)\n");
    auto r = run_cli({"compose", bi});
    CHECK(r.code == 0);
    CHECK(r.out == kTorusCanonical);

    std::string arc = s.file("arc.map", "type unicellular\nedges 1\nalpha (1,2)\n");
    auto two = run_cli({"compose", arc, arc});
    CHECK(two.code == 0);
    CHECK(contains(two.out, "alpha (L,R)(1,4)(2,3)(5,6)"));
}

TEST_CASE("enumerate streams blank-line separated records deterministically") {
    auto r = run_cli({"enumerate", "--edges", "2"});
    CHECK(r.code == 0);
    auto records = cellmap::parse_map_records(r.out);
    CHECK(records.size() == 3);
    CHECK(r.out == run_cli({"enumerate", "--edges", "2"}).out);

    auto filtered = run_cli({"enumerate", "--edges", "2", "--genus", "1"});
    CHECK(cellmap::parse_map_records(filtered.out).size() == 1);

    auto bi = run_cli({"enumerate", "--edges", "2", "--bicellular", "--genus", "0"});
    CHECK(cellmap::parse_map_records(bi.out).size() == 8);
}

TEST_CASE("counts prints the delimited table") {
    auto r = run_cli({"counts", "--max-edges", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "0 0 1 uni\n0 1 1 uni\n0 2 2 uni\n1 2 1 uni\n0 1 1 bi\n0 2 8 bi\n");
    CHECK(run_cli({"counts", "--max-edges", "2", "--workers", "2"}).out == r.out);
}

TEST_CASE("verify-recursion passes and reports cells") {
    auto r = run_cli({"verify-recursion", "--max-edges", "5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "RECURSION PASS cells=6"));
    CHECK(contains(r.out, "g=0 n=2 pairs=2 bicellular=8 total=10 expected=10 ok"));
}

TEST_CASE("verify-bijection passes") {
    auto r = run_cli({"verify-bijection", "--edges", "3", "--genus", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "BIJECTION PASS cells=1"));
    CHECK(contains(r.out, "total=10"));
}

TEST_CASE("dual converts in both directions") {
    Scratch s;
    auto to_diagram = run_cli({"dual", s.file("torus.map", kTorus)});
    CHECK(to_diagram.out == "N 4\nbackbones 1..4\narcs (1,3) (2,4)\n");
    auto back = run_cli({"dual", s.file("torus.dia", to_diagram.out)});
    CHECK(back.out == kTorusCanonical);
}

TEST_CASE("rewire emits the new diagram and optional trace") {
    Scratch s;
    std::string trace_path = (s.dir / "trace.txt").string();
    auto r = run_cli({"rewire", s.file("ix.dia", "N 4\nbackbones 1..2 3..4\narcs (1,3) (2,4)\n"),
                      "--trace", trace_path});
    CHECK(r.code == 0);
    CHECK(r.out == "N 6\nbackbones 1..6\narcs (1,4) (2,5) (3,6)\n");
    std::ifstream trace(trace_path);
    std::stringstream buf;
    buf << trace.rdbuf();
    CHECK(buf.str() ==
          "orig_pos half_edge new_pos\n1 1 2\n2 2 3\n3 3 5\n4 4 6\n");

    auto interior = run_cli({"rewire", s.file("bad.dia",
        "N 4\nbackbones 1..2 3..4\narcs (1,2) (3,4)\n")});
    CHECK(interior.code == 2);
    CHECK(contains(interior.err, "interaction structure"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli({"classify"}).code == 2);
    CHECK(run_cli({"enumerate", "--edges", "2", "--bogus"}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({"classify", "/no/such/file.map"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}
