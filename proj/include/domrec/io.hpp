#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "domrec/domination.hpp"
#include "domrec/families.hpp"
#include "domrec/graph.hpp"
#include "domrec/reconfig.hpp"
#include "domrec/separation.hpp"

namespace domrec::io {

using Json = nlohmann::ordered_json;

/// Decodes one graph6 line (an optional ">>graph6<<" prefix and trailing
/// whitespace are accepted). Throws ParseError on a malformed header, wrong
/// length, characters outside 63..126, nonzero padding bits, n = 0 or n
/// above kMaxVertices.
Graph parse_graph6(std::string_view line);
std::string export_graph6(const Graph& g);

/// One "u v" pair per line, 0-based ids, '#' starts a comment. A line with
/// a single integer declares the order; otherwise the order is max id + 1.
Graph parse_edge_list(std::string_view text);
std::string export_edge_list(const Graph& g);

enum class Format { Graph6, EdgeList };

struct GraphInput {
  std::string source;  // file path or "-"
  Format format = Format::Graph6;
  std::size_t index = 0;  // position within a multi-graph stream
  std::string text;       // the graph6 line, or the whole edge list
  Graph graph;
};

/// Edge lists are recognised by a first meaningful line made of digits and
/// blanks; anything else is read as a graph6 stream, one graph per line.
std::vector<GraphInput> read_graphs(std::string_view text, const std::string& source);
std::vector<GraphInput> read_graphs_from(const std::string& path);

/// Parses "0,3,5", "{0,3,5}" or "{}".
std::vector<int> parse_id_list(std::string_view text);

Json ids_json(VertexSet s);
Json to_json(const InvariantReport& r);
Json to_json(const ConnectivityProfile& p);
Json to_json(const SepReport& r, const DomFamily& fam);
Json to_json(const Theorem3Evidence& ev, const DomFamily& fam);
Json to_json(const LemmaCheck& c);
Json summary_json(const ReconfigGraph& rg);
/// Vertices (as id lists) and edges (as index pairs).
Json to_json(const ReconfigGraph& rg);

/// Undirected DOT; node i is labelled with the sorted id list of verts[i].
std::string export_dot(const ReconfigGraph& rg);

}  // namespace domrec::io
