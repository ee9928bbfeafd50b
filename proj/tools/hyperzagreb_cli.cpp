#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "hyperzagreb/canonical.hpp"
#include "hyperzagreb/construct.hpp"
#include "hyperzagreb/enumerate.hpp"
#include "hyperzagreb/errors.hpp"
#include "hyperzagreb/formulas.hpp"
#include "hyperzagreb/hypergraph.hpp"
#include "hyperzagreb/io.hpp"
#include "hyperzagreb/transform.hpp"
#include "hyperzagreb/verify.hpp"

namespace hz = hyperzagreb;

namespace {

hz::Hypergraph parse_json_graph(std::istream& in, const std::string& what) {
    try {
        nlohmann::json j;
        in >> j;
        return hz::from_json(j);
    } catch (const nlohmann::json::exception& e) {
        hz::fail(hz::errc::invalid_format, what + ": " + e.what());
    }
}

/// "-" reads stdin (sniffing JSON by a leading brace); a ".json" suffix
/// selects the structured format, anything else the plain text format.
hz::Hypergraph load_graph(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>{});
        std::istringstream in(text);
        size_t at = text.find_first_not_of(" \t\r\n");
        if (at != std::string::npos && text[at] == '{') return parse_json_graph(in, "stdin");
        return hz::read_hg(in);
    }
    if (path.ends_with(".json")) {
        std::ifstream in(path);
        if (!in) hz::fail(hz::errc::invalid_format, "cannot open " + path);
        return parse_json_graph(in, path);
    }
    return hz::read_hg_file(path);
}

using Annotations = std::vector<std::pair<std::string, long long>>;

void write_graph(std::ostream& out, const hz::Hypergraph& h, bool as_json,
                 const Annotations& annotations) {
    if (as_json) {
        nlohmann::json j = hz::to_json(h);
        for (const auto& [key, value] : annotations) j[key] = value;
        out << j.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : annotations) out << "# " << key << ' ' << value << '\n';
        hz::write_hg(out, h);
    }
}

void save_graph(const std::string& path, const hz::Hypergraph& h, bool json_format,
                const Annotations& annotations = {}) {
    const bool as_json = json_format || (path != "-" && path.ends_with(".json"));
    if (path == "-") {
        write_graph(std::cout, h, as_json, annotations);
        return;
    }
    std::ofstream out(path);
    if (!out) hz::fail(hz::errc::invalid_format, "cannot open " + path + " for writing");
    write_graph(out, h, as_json, annotations);
}

std::optional<int> effective_max_m(const std::optional<int>& from_cli) {
    if (from_cli) return from_cli;
    if (const char* env = std::getenv("HYPERZAGREB_MAX_M")) {
        int value = 0;
        const char* end = env + std::string_view(env).size();
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc() || ptr != end)
            hz::fail(hz::errc::illegal_parameters,
                     "HYPERZAGREB_MAX_M must be an integer, got '" + std::string(env) + "'");
        return value;
    }
    return std::nullopt;
}

hz::StructureClass parse_structure(const std::string& name, const std::optional<int>& deficit) {
    if (deficit) return hz::StructureClass::from_deficit(*deficit);
    if (name == "hypertree") return hz::StructureClass::hypertree();
    if (name == "unicyclic") return hz::StructureClass::unicyclic();
    return hz::StructureClass::bicyclic();
}

hz::FamilySpec parse_family(const std::string& name, int p, int q, int l, int pendants) {
    if (name.size() != 2 || (name[0] != 'B' && name[0] != 'C') || name[1] < '1' || name[1] > '3')
        hz::fail(hz::errc::illegal_parameters, "family must be one of B1 B2 B3 C1 C2 C3");
    hz::FamilySpec spec;
    spec.family = name[0] == 'B' ? hz::Family::B : hz::Family::C;
    spec.variant = name[1] - '0';
    spec.p = p;
    spec.q = q;
    spec.l = l;
    spec.pendants = pendants;
    return spec;
}

int do_stats(const std::string& input, bool as_json) {
    hz::Hypergraph h = load_graph(input);
    hz::DegreeStats stats = h.degree_stats();
    std::optional<int> k = h.uniformity();
    const bool linear = h.is_linear();
    const bool connected = h.is_connected();
    std::optional<int> girth;
    if (linear) girth = h.girth();
    std::optional<hz::StructureClass> structure;
    if (k && linear && connected) structure = h.structure_class();

    if (as_json) {
        nlohmann::json j{{"n", h.vertex_count()},
                         {"m", h.edge_count()},
                         {"k", k ? nlohmann::json(*k) : nlohmann::json()},
                         {"linear", linear},
                         {"connected", connected},
                         {"zagreb", h.zagreb_index()},
                         {"max_degree", stats.max_degree},
                         {"cored", static_cast<int>(h.cored_vertices().size())},
                         {"pendant_edges", static_cast<int>(h.pendant_edge_indices().size())}};
        j["girth"] = girth ? nlohmann::json(*girth) : nlohmann::json();
        j["deficit"] = structure ? nlohmann::json(structure->deficit()) : nlohmann::json();
        j["structure"] = structure ? nlohmann::json(structure->name()) : nlohmann::json();
        nlohmann::json degrees = nlohmann::json::object();
        for (const auto& [degree, count] : stats.histogram) degrees[std::to_string(degree)] = count;
        j["degrees"] = degrees;
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "vertices " << h.vertex_count() << '\n';
    std::cout << "edges " << h.edge_count() << '\n';
    std::cout << "uniform " << (k ? std::to_string(*k) : "mixed") << '\n';
    std::cout << "linear " << (linear ? "yes" : "no") << '\n';
    std::cout << "connected " << (connected ? "yes" : "no") << '\n';
    if (structure) std::cout << "structure " << structure->name() << " (deficit " << structure->deficit() << ")\n";
    if (linear) std::cout << "girth " << (girth ? std::to_string(*girth) : "acyclic") << '\n';
    std::cout << "zagreb " << h.zagreb_index() << '\n';
    std::cout << "max-degree " << stats.max_degree << '\n';
    std::cout << "degrees";
    for (const auto& [degree, count] : stats.histogram) std::cout << ' ' << degree << ':' << count;
    std::cout << '\n';
    std::cout << "cored " << h.cored_vertices().size() << '\n';
    std::cout << "pendant-edges " << h.pendant_edge_indices().size() << '\n';
    return 0;
}

int do_verify(const std::string& which, int k, int m, std::optional<int> girth,
              const hz::EnumerationOptions& options, const std::string& format, bool header) {
    hz::VerifyReport report;
    if (which == "min") {
        report = hz::verify_min(k, m, options);
    } else if (which == "two-cycle") {
        if (!girth) hz::fail(hz::errc::illegal_parameters, "two-cycle verification needs --girth");
        report = hz::verify_b_family(k, m, *girth, options);
    } else if (which == "theta") {
        if (!girth) hz::fail(hz::errc::illegal_parameters, "theta verification needs --girth");
        report = hz::verify_c_family(k, m, *girth, options);
    } else if (which == "global") {
        report = hz::verify_global(k, m, options);
    } else {
        report = hz::verify_taxonomy(k, m, options);
    }

    if (format == "json") {
        std::cout << report.to_json().dump(2) << '\n';
    } else if (format == "csv") {
        if (header) std::cout << hz::VerifyReport::csv_header() << '\n';
        std::cout << report.csv_row() << '\n';
    } else {
        const char* tag = report.verdict == hz::Verdict::pass         ? "[PASS]"
                          : report.verdict == hz::Verdict::exploratory ? "[EXPL]"
                                                                       : "[FAIL]";
        std::cout << tag << ' ' << report.check << " k=" << report.k << " m=" << report.m;
        if (report.girth) std::cout << " g=" << *report.girth;
        std::cout << ": expected " << report.expected << ", observed " << report.observed;
        if (report.witness_matches)
            std::cout << ", witness " << (*report.witness_matches ? "matched" : "missed");
        std::cout << ", " << report.extremal_class_count << " extremal class"
                  << (report.extremal_class_count == 1 ? "" : "es") << ", " << report.millis
                  << " ms\n";
        if (!report.detail.empty()) std::cout << "  " << report.detail << '\n';
    }
    return report.passed() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"linear uniform hypergraph toolkit: constructions, invariants, exhaustive checks"};
    app.require_subcommand(1);
    int status = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "build a named hypergraph and write it out");
    struct {
        int k = 3;
        std::string family;
        int p = 0, q = 0, l = 0, pendants = 0;
        std::optional<int> path, cycle, extremal_b_girth, extremal_c_girth;
        bool want_global = false, want_min = false;
        int m = 0;
        std::string output = "-";
        bool as_json = false;
    } con;
    construct->add_option("-k,--edge-size", con.k, "uniform edge size")->capture_default_str();
    construct->add_option("--family", con.family, "family member: B1 B2 B3 C1 C2 C3");
    construct->add_option("-p", con.p, "first cycle or path length");
    construct->add_option("-q", con.q, "second cycle or path length");
    construct->add_option("-l", con.l, "connecting or third path length");
    construct->add_option("--pendants", con.pendants, "pendant edges at the canonical vertex");
    construct->add_option("--path", con.path, "hyperpath with this many edges");
    construct->add_option("--cycle", con.cycle, "hypercycle with this many edges");
    construct->add_option("--extremal-b", con.extremal_b_girth, "two-cycle maximizer of this girth");
    construct->add_option("--extremal-c", con.extremal_c_girth, "theta maximizer of this girth");
    construct->add_flag("--global-max", con.want_global, "overall maximizer candidate");
    construct->add_flag("--min-bicyclic", con.want_min, "minimizer witness");
    construct->add_option("-m,--edges", con.m, "total edge count for extremal shapes");
    construct->add_option("-o,--output", con.output, "output path, - for stdout")->capture_default_str();
    construct->add_flag("--json", con.as_json, "write the structured format");
    construct->callback([&] {
        int selectors = (!con.family.empty()) + con.path.has_value() + con.cycle.has_value() +
                        con.extremal_b_girth.has_value() + con.extremal_c_girth.has_value() +
                        con.want_global + con.want_min;
        if (selectors != 1)
            hz::fail(hz::errc::illegal_parameters,
                     "choose exactly one of --family, --path, --cycle, --extremal-b, --extremal-c, "
                     "--global-max, --min-bicyclic");
        hz::Hypergraph h;
        if (!con.family.empty())
            h = hz::build_family(parse_family(con.family, con.p, con.q, con.l, con.pendants), con.k);
        else if (con.path)
            h = hz::hyperpath(con.k, *con.path);
        else if (con.cycle)
            h = hz::hypercycle(con.k, *con.cycle);
        else if (con.extremal_b_girth)
            h = hz::extremal_b(con.k, con.m, *con.extremal_b_girth);
        else if (con.extremal_c_girth)
            h = hz::extremal_c(con.k, con.m, *con.extremal_c_girth);
        else if (con.want_global)
            h = hz::global_max(con.k, con.m).graph;
        else
            h = hz::min_bicyclic(con.k, con.m);
        save_graph(con.output, h, con.as_json);
        status = 0;
    });

    // stats
    auto* stats = app.add_subcommand("stats", "summarize invariants of a hypergraph");
    struct {
        std::string input;
        bool as_json = false;
    } st;
    stats->add_option("file", st.input, "input path, - for stdin")->required();
    stats->add_flag("--json", st.as_json, "structured output");
    stats->callback([&] { status = do_stats(st.input, st.as_json); });

    // zagreb
    auto* zagreb = app.add_subcommand("zagreb", "print the sum of squared degrees");
    std::string zagreb_input;
    zagreb->add_option("file", zagreb_input, "input path, - for stdin")->required();
    zagreb->callback([&] {
        std::cout << load_graph(zagreb_input).zagreb_index() << '\n';
        status = 0;
    });

    // girth
    auto* girth_cmd = app.add_subcommand("girth", "print the shortest hypercycle length");
    std::string girth_input;
    girth_cmd->add_option("file", girth_input, "input path, - for stdin")->required();
    girth_cmd->callback([&] {
        std::optional<int> g = load_graph(girth_input).girth();
        if (g) std::cout << *g << '\n';
        else std::cout << "acyclic\n";
        status = 0;
    });

    // classify
    auto* classify = app.add_subcommand("classify", "name the bicyclic family of a hypergraph");
    struct {
        std::string input;
        bool as_json = false;
    } cl;
    classify->add_option("file", cl.input, "input path, - for stdin")->required();
    classify->add_flag("--json", cl.as_json, "structured output");
    classify->callback([&] {
        hz::ClassifyResult result = hz::classify_bicyclic(load_graph(cl.input));
        if (cl.as_json) {
            nlohmann::json j{{"family", result.spec.family == hz::Family::B ? "B" : "C"},
                             {"variant", result.spec.variant},
                             {"p", result.spec.p},
                             {"q", result.spec.q},
                             {"l", result.spec.l},
                             {"pendants", result.spec.pendants},
                             {"core_edges", result.core_edge_count},
                             {"notes", result.notes}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << result.spec.to_string() << '\n';
            if (!result.notes.empty()) std::cout << "note: " << result.notes << '\n';
        }
        status = 0;
    });

    // move
    auto* move = app.add_subcommand("move", "re-route edges from one vertex to another");
    struct {
        std::string input;
        int from = 0, to = 0;
        std::vector<int> edges;
        std::string output = "-";
        bool as_json = false;
    } mv;
    move->add_option("file", mv.input, "input path, - for stdin")->required();
    move->add_option("--from", mv.from, "vertex the edges leave")->required();
    move->add_option("--to", mv.to, "vertex the edges join")->required();
    move->add_option("--edges", mv.edges, "edge indices to re-route")->required()->delimiter(',');
    move->add_option("-o,--output", mv.output, "output path, - for stdout")->capture_default_str();
    move->add_flag("--json", mv.as_json, "write the structured format");
    move->callback([&] {
        hz::MoveResult result = hz::move_edges(load_graph(mv.input), {mv.from, mv.to, mv.edges});
        save_graph(mv.output, result.graph, mv.as_json, {{"delta", result.delta}});
        status = 0;
    });

    // strip
    auto* strip = app.add_subcommand("strip", "delete pendant and isolated edges repeatedly");
    struct {
        std::string input;
        std::string output = "-";
        bool as_json = false;
    } sp;
    strip->add_option("file", sp.input, "input path, - for stdin")->required();
    strip->add_option("-o,--output", sp.output, "output path, - for stdout")->capture_default_str();
    strip->add_flag("--json", sp.as_json, "write the structured format");
    strip->callback([&] {
        hz::StripResult result = hz::strip_pendant_edges(load_graph(sp.input));
        save_graph(sp.output, result.core, sp.as_json, {{"removed", result.removed}});
        status = 0;
    });

    // canonical
    auto* canon = app.add_subcommand("canonical", "print the canonical form or code");
    struct {
        std::string input;
        std::string output = "-";
        bool as_json = false;
        bool code_only = false;
    } ca;
    canon->add_option("file", ca.input, "input path, - for stdin")->required();
    canon->add_option("-o,--output", ca.output, "output path, - for stdout")->capture_default_str();
    canon->add_flag("--json", ca.as_json, "write the structured format");
    canon->add_flag("--code", ca.code_only, "print only the canonical code");
    canon->callback([&] {
        hz::CanonicalResult result = hz::canonicalize(load_graph(ca.input));
        if (ca.code_only) std::cout << result.code << '\n';
        else save_graph(ca.output, result.form, ca.as_json);
        status = 0;
    });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list all isomorphism classes");
    struct {
        int k = 3, m = 4;
        std::string structure = "bicyclic";
        std::optional<int> deficit, girth, max_m;
        int workers = 1;
        std::string output = "-";
        bool as_json = false;
    } en;
    enumerate->add_option("-k,--edge-size", en.k, "uniform edge size")->capture_default_str();
    enumerate->add_option("-m,--edges", en.m, "edge count")->capture_default_str();
    enumerate->add_option("--structure", en.structure, "hypertree, unicyclic or bicyclic")
        ->check(CLI::IsMember({"hypertree", "unicyclic", "bicyclic"}))
        ->capture_default_str();
    enumerate->add_option("--deficit", en.deficit, "explicit cycle-space deficit");
    enumerate->add_option("-g,--girth", en.girth, "keep only this girth");
    enumerate->add_option("--max-m", en.max_m, "raise the enumeration guard");
    enumerate->add_option("-w,--workers", en.workers, "worker threads")->capture_default_str();
    enumerate->add_option("-o,--output", en.output, "output path, - for stdout")->capture_default_str();
    enumerate->add_flag("--json", en.as_json, "write one structured array");
    enumerate->callback([&] {
        hz::EnumerationOptions options;
        options.max_m_override = effective_max_m(en.max_m);
        options.workers = en.workers;
        std::vector<hz::Hypergraph> classes = hz::enumerate_linear(
            en.k, en.m, parse_structure(en.structure, en.deficit), en.girth, options);
        const bool as_json = en.as_json || (en.output != "-" && en.output.ends_with(".json"));
        std::ostringstream buffer;
        if (as_json) {
            nlohmann::json j = nlohmann::json::array();
            for (const hz::Hypergraph& g : classes) j.push_back(hz::to_json(g));
            buffer << j.dump(2) << '\n';
        } else {
            hz::write_hg_stream(buffer, classes);
        }
        if (en.output == "-") {
            std::cout << buffer.str();
        } else {
            std::ofstream out(en.output);
            if (!out) hz::fail(hz::errc::invalid_format, "cannot open " + en.output + " for writing");
            out << buffer.str();
        }
        std::cerr << "classes " << classes.size() << '\n';
        status = 0;
    });

    // scan
    auto* scan = app.add_subcommand("scan", "extremes of the squared-degree sum over one family");
    struct {
        int k = 3, m = 4;
        std::string structure = "bicyclic";
        std::optional<int> deficit, girth, max_m;
        int workers = 1;
        bool as_json = false;
    } sc;
    scan->add_option("-k,--edge-size", sc.k, "uniform edge size")->capture_default_str();
    scan->add_option("-m,--edges", sc.m, "edge count")->capture_default_str();
    scan->add_option("--structure", sc.structure, "hypertree, unicyclic or bicyclic")
        ->check(CLI::IsMember({"hypertree", "unicyclic", "bicyclic"}))
        ->capture_default_str();
    scan->add_option("--deficit", sc.deficit, "explicit cycle-space deficit");
    scan->add_option("-g,--girth", sc.girth, "keep only this girth");
    scan->add_option("--max-m", sc.max_m, "raise the enumeration guard");
    scan->add_option("-w,--workers", sc.workers, "worker threads")->capture_default_str();
    scan->add_flag("--json", sc.as_json, "structured output with extremal graphs");
    scan->callback([&] {
        hz::EnumerationOptions options;
        options.max_m_override = effective_max_m(sc.max_m);
        options.workers = sc.workers;
        hz::EnumerationReport report = hz::extremal_scan(
            sc.k, sc.m, parse_structure(sc.structure, sc.deficit), sc.girth, options);
        if (sc.as_json) {
            nlohmann::json j{{"k", report.k},
                             {"m", report.m},
                             {"structure", report.structure.name()},
                             {"classes", report.class_count}};
            j["girth"] = report.girth ? nlohmann::json(*report.girth) : nlohmann::json();
            j["min"] = report.min_zagreb ? nlohmann::json(*report.min_zagreb) : nlohmann::json();
            j["max"] = report.max_zagreb ? nlohmann::json(*report.max_zagreb) : nlohmann::json();
            nlohmann::json mins = nlohmann::json::array();
            for (const hz::Hypergraph& g : report.minimizers) mins.push_back(hz::to_json(g));
            nlohmann::json maxs = nlohmann::json::array();
            for (const hz::Hypergraph& g : report.maximizers) maxs.push_back(hz::to_json(g));
            j["minimizers"] = mins;
            j["maximizers"] = maxs;
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "classes " << report.class_count << '\n';
            if (report.min_zagreb)
                std::cout << "min " << *report.min_zagreb << " (" << report.minimizers.size()
                          << " classes)\n";
            if (report.max_zagreb)
                std::cout << "max " << *report.max_zagreb << " (" << report.maximizers.size()
                          << " classes)\n";
        }
        status = 0;
    });

    // formula
    auto* formula = app.add_subcommand("formula", "evaluate a closed form exactly");
    struct {
        std::string name;
        int k = 3, m = 0, g = 3;
        std::optional<long long> n;
        int p = 0, q = 0, l = 0;
        long long t = 1, du = 1, dv = 0;
        bool unchecked = false;
    } fo;
    formula->add_option("name", fo.name, "min, two-cycle-max, theta-even, theta-odd, "
                                         "theta-odd-alt, theta-pendant, move-delta, margins")
        ->required()
        ->check(CLI::IsMember({"min", "two-cycle-max", "theta-even", "theta-odd", "theta-odd-alt",
                               "theta-pendant", "move-delta", "margins"}));
    formula->add_option("-k,--edge-size", fo.k, "uniform edge size")->capture_default_str();
    formula->add_option("-m,--edges", fo.m, "edge count");
    formula->add_option("-g,--girth", fo.g, "girth")->capture_default_str();
    formula->add_option("-n,--vertices", fo.n, "vertex count (defaults to m(k-1) - 1)");
    formula->add_option("-p", fo.p, "first parameter");
    formula->add_option("-q", fo.q, "second parameter");
    formula->add_option("-l", fo.l, "third parameter");
    formula->add_option("-t", fo.t, "edges re-routed");
    formula->add_option("--du", fo.du, "degree losing edges");
    formula->add_option("--dv", fo.dv, "degree gaining edges");
    formula->add_flag("--unchecked", fo.unchecked, "evaluate outside the meaningful domain");
    formula->callback([&] {
        hz::Exact value;
        if (fo.name == "min") {
            long long n = fo.n.value_or(static_cast<long long>(fo.m) * (fo.k - 1) - 1);
            value = hz::min_zagreb_formula(n, fo.m, fo.k);
        } else if (fo.name == "two-cycle-max") {
            value = hz::b_max_formula(fo.k, fo.m, fo.g, fo.unchecked);
        } else if (fo.name == "theta-even") {
            value = hz::c1_even_formula(fo.k, fo.m, fo.g, fo.unchecked);
        } else if (fo.name == "theta-odd") {
            value = hz::c2_odd_formula(fo.k, fo.m, fo.g, fo.unchecked);
        } else if (fo.name == "theta-odd-alt") {
            value = hz::c1_odd_formula(fo.k, fo.m, fo.g, fo.unchecked);
        } else if (fo.name == "theta-pendant") {
            value = hz::c3_pendant_formula(fo.k, fo.m, fo.p, fo.q, fo.l, fo.unchecked);
        } else if (fo.name == "move-delta") {
            value = hz::move_delta_formula(fo.t, fo.du, fo.dv);
        } else {
            hz::GirthMargins margins = hz::theorem_margins(fo.k, fo.m, fo.g, fo.unchecked);
            if (margins.even_margin) std::cout << "even " << margins.even_margin->str() << '\n';
            if (margins.odd_margin) std::cout << "odd " << margins.odd_margin->str() << '\n';
            status = 0;
            return;
        }
        std::cout << value.str() << '\n';
        status = 0;
    });

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check one extremal claim exhaustively");
    struct {
        std::string which;
        int k = 3, m = 4;
        std::optional<int> girth, max_m;
        int workers = 1;
        std::string format = "text";
        bool no_header = false;
    } ve;
    verify->add_option("check", ve.which, "min, two-cycle, theta, global or taxonomy")
        ->required()
        ->check(CLI::IsMember({"min", "two-cycle", "theta", "global", "taxonomy"}));
    verify->add_option("-k,--edge-size", ve.k, "uniform edge size")->capture_default_str();
    verify->add_option("-m,--edges", ve.m, "edge count")->capture_default_str();
    verify->add_option("-g,--girth", ve.girth, "family girth");
    verify->add_option("--max-m", ve.max_m, "raise the enumeration guard");
    verify->add_option("-w,--workers", ve.workers, "worker threads")->capture_default_str();
    verify->add_option("--format", ve.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    verify->add_flag("--no-header", ve.no_header, "omit the csv header line");
    verify->callback([&] {
        hz::EnumerationOptions options;
        options.max_m_override = effective_max_m(ve.max_m);
        options.workers = ve.workers;
        status = do_verify(ve.which, ve.k, ve.m, ve.girth, options, ve.format, !ve.no_header);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hz::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == hz::errc::invalid_format ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
