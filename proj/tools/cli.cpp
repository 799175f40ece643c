#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cellmap/bijections.hpp"
#include "cellmap/enumerate.hpp"
#include "cellmap/formats.hpp"
#include "cellmap/rna.hpp"

namespace cellmap::cli {

namespace {

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

AnyMap load_map(const std::string& path) {
    std::string text = load_file(path);
    if (looks_like_diagram(text))
        throw Error(path + ": expected a map record, found a diagram");
    return parse_map_record(text);
}

int map_genus(const AnyMap& m) {
    if (std::holds_alternative<UnicellularMap>(m))
        return genus_unicellular(std::get<UnicellularMap>(m));
    return genus_bicellular(std::get<BicellularMap>(m));
}

MapClass map_class(const AnyMap& m) {
    if (std::holds_alternative<UnicellularMap>(m))
        return classify_unicellular(std::get<UnicellularMap>(m));
    return classify_bicellular(std::get<BicellularMap>(m));
}

int cmd_validate(const std::string& path, std::ostream& out) {
    std::string text = load_file(path);
    if (looks_like_diagram(text)) {
        Diagram d = parse_diagram(text);
        out << "valid diagram with " << d.positions << " positions, " << d.backbones
            << (d.backbones == 1 ? " backbone, " : " backbones, ") << d.arcs.size()
            << (d.arcs.size() == 1 ? " arc\n" : " arcs\n");
        return 0;
    }
    AnyMap m = parse_map_record(text);
    if (std::holds_alternative<UnicellularMap>(m)) {
        const auto& u = std::get<UnicellularMap>(m);
        out << "valid unicellular map with " << u.edges()
            << (u.edges() == 1 ? " edge\n" : " edges\n");
    } else {
        const auto& b = std::get<BicellularMap>(m);
        out << "valid bicellular map with " << b.edges()
            << (b.edges() == 1 ? " edge" : " edges") << " (m=" << b.split() << ")\n";
    }
    return 0;
}

int cmd_genus(const std::string& path, std::ostream& out) {
    std::string text = load_file(path);
    if (looks_like_diagram(text))
        out << "genus " << genus_of_diagram(parse_diagram(text)) << '\n';
    else
        out << "genus " << map_genus(parse_map_record(text)) << '\n';
    return 0;
}

int cmd_classify(const std::string& path, std::ostream& out) {
    AnyMap m = load_map(path);
    out << "class " << to_string(map_class(m)) << " genus " << map_genus(m) << '\n';
    return 0;
}

int cmd_decompose(const std::string& path, std::ostream& out) {
    AnyMap m = load_map(path);
    if (!std::holds_alternative<UnicellularMap>(m))
        throw Error("decompose expects a unicellular map record");
    DecompositionResult x = beta_inverse(std::get<UnicellularMap>(m));
    if (x.is_pair())
        out << write_map_record(x.pair().first) << '\n' << write_map_record(x.pair().second);
    else
        out << write_map_record(x.bicellular());
    return 0;
}

int cmd_compose(const std::vector<std::string>& paths, std::ostream& out) {
    if (paths.size() == 2) {
        AnyMap a = load_map(paths[0]);
        AnyMap b = load_map(paths[1]);
        if (!std::holds_alternative<UnicellularMap>(a) ||
            !std::holds_alternative<UnicellularMap>(b))
            throw Error("composing two records requires two unicellular maps");
        out << write_map_record(
            theta(std::get<UnicellularMap>(a), std::get<UnicellularMap>(b)));
        return 0;
    }
    AnyMap m = load_map(paths[0]);
    if (!std::holds_alternative<BicellularMap>(m))
        throw Error("composing one record requires a bicellular map");
    out << write_map_record(eta(std::get<BicellularMap>(m)));
    return 0;
}

int cmd_enumerate(int edges, std::optional<int> genus, bool bicellular, std::ostream& out) {
    bool first = true;
    auto emit = [&](const std::string& record) {
        if (!first) out << '\n';
        first = false;
        out << record;
    };
    if (bicellular)
        enumerate_bicellular(edges, genus,
                             [&](const BicellularMap& b) { emit(write_map_record(b)); });
    else
        enumerate_unicellular(edges, genus,
                              [&](const UnicellularMap& u) { emit(write_map_record(u)); });
    return 0;
}

int cmd_dual(const std::string& path, std::ostream& out) {
    std::string text = load_file(path);
    if (looks_like_diagram(text)) {
        Diagram d = parse_diagram(text);
        if (d.backbones == 1)
            out << write_map_record(diagram_to_unicellular(d));
        else
            out << write_map_record(diagram_to_bicellular(d));
    } else {
        AnyMap m = parse_map_record(text);
        if (std::holds_alternative<UnicellularMap>(m))
            out << write_diagram(map_to_diagram(std::get<UnicellularMap>(m)));
        else
            out << write_diagram(map_to_diagram(std::get<BicellularMap>(m)));
    }
    return 0;
}

int cmd_rewire(const std::string& path, const std::string& trace_path, std::ostream& out) {
    Diagram d = parse_diagram(load_file(path));
    auto [result, trace] = rewire(d);
    out << write_diagram(result);
    if (!trace_path.empty()) {
        std::ofstream trace_out(trace_path, std::ios::binary);
        if (!trace_out) throw Error("cannot open trace file for writing: " + trace_path);
        trace_out << write_trace(trace);
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"planted unicellular/bicellular maps: validation, genus, the "
                 "decomposition bijection, exhaustive counting, and RNA diagram rewiring"};
    app.require_subcommand(1);

    std::string file, file2, trace_path;
    std::vector<std::string> files;
    int edges = 0, max_edges = 0, genus_arg = 0, workers = 1;

    auto* validate = app.add_subcommand("validate", "check a map or diagram file");
    validate->add_option("file", file, "map or diagram file")->required();

    auto* genus = app.add_subcommand("genus", "genus of a map or diagram");
    genus->add_option("file", file, "map or diagram file")->required();

    auto* classify = app.add_subcommand("classify", "class and genus of a map");
    classify->add_option("file", file, "map file")->required();

    auto* decompose =
        app.add_subcommand("decompose", "split a unicellular map into a pair of maps "
                                        "or one bicellular map");
    decompose->add_option("file", file, "unicellular map file")->required();

    auto* compose = app.add_subcommand(
        "compose", "glue two unicellular maps, or one bicellular map, into a "
                   "unicellular map");
    compose->add_option("files", files, "one or two map files")->expected(1, 2)->required();

    auto* enumerate = app.add_subcommand("enumerate", "stream all maps with a given size");
    enumerate->add_option("--edges", edges, "edge count")->required();
    auto* genus_opt = enumerate->add_option("--genus", genus_arg, "only this genus");
    bool bicellular = false;
    enumerate->add_flag("--bicellular", bicellular, "enumerate bicellular maps");

    auto* counts = app.add_subcommand("counts", "exact count table up to a size");
    counts->add_option("--max-edges", max_edges, "largest edge count")->required();
    counts->add_option("--workers", workers, "parallel workers");

    auto* vrec = app.add_subcommand("verify-recursion",
                                    "check the counting recursion from brute force");
    vrec->add_option("--max-edges", max_edges, "largest edge count")->required();
    vrec->add_option("--workers", workers, "parallel workers");

    auto* vbij = app.add_subcommand("verify-bijection",
                                    "element-wise check of the decomposition on one cell");
    vbij->add_option("--edges", edges, "edge count")->required();
    vbij->add_option("--genus", genus_arg, "genus")->required();
    vbij->add_option("--workers", workers, "parallel workers");

    auto* dual = app.add_subcommand("dual", "diagram of a map, or map of a diagram");
    dual->add_option("file", file, "map or diagram file")->required();

    auto* rewire_cmd =
        app.add_subcommand("rewire", "turn a two-backbone diagram into a one-backbone one");
    rewire_cmd->add_option("file", file, "diagram file")->required();
    rewire_cmd->add_option("--trace", trace_path, "write the position trace here");

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(validate)) return cmd_validate(file, out);
        if (app.got_subcommand(genus)) return cmd_genus(file, out);
        if (app.got_subcommand(classify)) return cmd_classify(file, out);
        if (app.got_subcommand(decompose)) return cmd_decompose(file, out);
        if (app.got_subcommand(compose)) return cmd_compose(files, out);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(edges,
                                 genus_opt->count() ? std::optional<int>(genus_arg)
                                                    : std::nullopt,
                                 bicellular, out);
        if (app.got_subcommand(counts)) {
            out << format_count_table(count_table(max_edges, workers));
            return 0;
        }
        if (app.got_subcommand(vrec)) {
            VerificationReport report = verify_recursion(max_edges, workers);
            out << format_report(report);
            return report.pass ? 0 : 1;
        }
        if (app.got_subcommand(vbij)) {
            VerificationReport report = verify_bijection(edges, genus_arg, workers);
            out << format_report(report);
            return report.pass ? 0 : 1;
        }
        if (app.got_subcommand(dual)) return cmd_dual(file, out);
        if (app.got_subcommand(rewire_cmd)) return cmd_rewire(file, trace_path, out);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace cellmap::cli
