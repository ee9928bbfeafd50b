#include "hyperzagreb/io.hpp"

#include <fstream>
#include <sstream>

namespace hyperzagreb {

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool is_comment(const std::string& line) {
    size_t at = line.find_first_not_of(" \t\r");
    return at != std::string::npos && line[at] == '#';
}

std::vector<long long> parse_ints(const std::string& line) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long value = 0;
    while (in >> value) out.push_back(value);
    if (!in.eof()) fail(errc::invalid_format, "non-numeric token in line: " + line);
    return out;
}

}  // namespace

std::vector<Hypergraph> read_hg_stream(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    if (!text.empty() && text.back() != '\n')
        fail(errc::invalid_format, "missing trailing newline");

    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }

    std::vector<Hypergraph> records;
    size_t at = 0;
    while (true) {
        while (at < lines.size() && (is_blank(lines[at]) || is_comment(lines[at]))) ++at;
        if (at >= lines.size()) break;

        std::vector<long long> header = parse_ints(lines[at++]);
        if (header.size() != 3)
            fail(errc::invalid_format, "header must be three integers: k n m");
        long long k = header[0], n = header[1], m = header[2];
        if (k < 0 || n < 0 || m < 0) fail(errc::invalid_format, "negative header field");

        std::vector<Edge> edges;
        edges.reserve(static_cast<size_t>(m));
        while (static_cast<long long>(edges.size()) < m) {
            if (at >= lines.size()) fail(errc::invalid_format, "truncated record");
            const std::string& line = lines[at++];
            if (is_comment(line)) continue;
            if (is_blank(line)) fail(errc::invalid_format, "blank line inside record");
            std::vector<long long> ids = parse_ints(line);
            if (k > 0 && static_cast<long long>(ids.size()) != k)
                fail(errc::invalid_format, "edge line does not have k vertices");
            Edge e;
            e.reserve(ids.size());
            for (long long id : ids) e.push_back(static_cast<int>(id));
            edges.push_back(std::move(e));
        }
        records.push_back(Hypergraph::from_edges(static_cast<int>(n), std::move(edges)));
    }
    return records;
}

Hypergraph read_hg(std::istream& in) {
    std::vector<Hypergraph> records = read_hg_stream(in);
    if (records.size() != 1)
        fail(errc::invalid_format,
             "expected one record, found " + std::to_string(records.size()));
    return records.front();
}

void write_hg(std::ostream& out, const Hypergraph& h) {
    std::optional<int> k = h.uniformity();
    out << (k ? *k : 0) << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
    for (const Edge& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

void write_hg_stream(std::ostream& out, const std::vector<Hypergraph>& hs) {
    for (size_t i = 0; i < hs.size(); ++i) {
        if (i) out << '\n';
        write_hg(out, hs[i]);
    }
}

std::string to_hg_string(const Hypergraph& h) {
    std::ostringstream out;
    write_hg(out, h);
    return out.str();
}

Hypergraph read_hg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::invalid_format, "cannot open " + path);
    return read_hg(in);
}

void write_hg_file(const std::string& path, const Hypergraph& h) {
    std::ofstream out(path);
    if (!out) fail(errc::invalid_format, "cannot open " + path + " for writing");
    write_hg(out, h);
}

nlohmann::json to_json(const Hypergraph& h) {
    std::optional<int> k = h.uniformity();
    return nlohmann::json{
        {"k", k ? *k : 0}, {"n", h.vertex_count()}, {"edges", h.edges()}};
}

Hypergraph from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(errc::invalid_format, "expected an object with n and edges");
    try {
        int n = j.at("n").get<int>();
        auto edges = j.at("edges").get<std::vector<Edge>>();
        Hypergraph h = Hypergraph::from_edges(n, std::move(edges));
        if (j.contains("k")) {
            int k = j.at("k").get<int>();
            std::optional<int> actual = h.uniformity();
            if (k != 0 && (!actual || *actual != k))
                fail(errc::invalid_format, "declared k does not match the edges");
        }
        return h;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::invalid_format, std::string("malformed structured input: ") + e.what());
    }
}

}  // namespace hyperzagreb
