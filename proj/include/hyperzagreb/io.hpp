#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperzagreb/hypergraph.hpp"

namespace hyperzagreb {

/// Plain text exchange format (conventionally ".hg"):
///   - header line "k n m" where k is the uniform edge size or 0 when the
///     edge sizes are mixed,
///   - m lines with the ascending vertex ids of one edge each,
///   - '#' begins a comment line, a trailing newline is mandatory,
///   - consecutive records in one stream are separated by a blank line.
Hypergraph read_hg(std::istream& in);
std::vector<Hypergraph> read_hg_stream(std::istream& in);
void write_hg(std::ostream& out, const Hypergraph& h);
void write_hg_stream(std::ostream& out, const std::vector<Hypergraph>& hs);

std::string to_hg_string(const Hypergraph& h);
Hypergraph read_hg_file(const std::string& path);
void write_hg_file(const std::string& path, const Hypergraph& h);

/// Structured form: {"k": int, "n": int, "edges": [[int...], ...]}.
nlohmann::json to_json(const Hypergraph& h);
Hypergraph from_json(const nlohmann::json& j);

}  // namespace hyperzagreb
