#include "domrec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "domrec/errors.hpp"

namespace domrec::io {

namespace {

constexpr int kGraph6Offset = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int graph6_value(char c) {
  const int v = static_cast<unsigned char>(c) - kGraph6Offset;
  if (v < 0 || v > 63)
    throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                     " outside the printable range 63..126");
  return v;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ParseError(std::string(what) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return trim(hash == std::string_view::npos ? line : line.substr(0, hash));
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

Graph build_parsed(int n, const std::vector<Edge>& edges, std::string_view format) {
  try {
    return Graph(n, edges);
  } catch (const DomainError& e) {
    throw ParseError(std::string(format) + ": " + e.what());
  }
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError("graph6: empty line");
  if (line.front() == ':' || line.front() == ';' || line.front() == '&')
    throw ParseError("graph6: sparse6/digraph6 input is not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::uint64_t>(graph6_value(line[0]));
    pos = 1;
  } else {
    const std::size_t width = (line.size() > 1 && line[1] == '~') ? 6 : 3;
    pos = width == 6 ? 2 : 1;
    if (line.size() < pos + width) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | graph6_value(line[pos + i]);
    pos += width;
  }
  if (n == 0) throw ParseError("graph6: graph has no vertices");
  if (n > static_cast<std::uint64_t>(kMaxVertices))
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds supported maximum " +
                     std::to_string(kMaxVertices));

  const int order = static_cast<int>(n);
  const std::size_t bit_count = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t expected = (bit_count + 5) / 6;
  if (line.size() - pos != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) +
                     " adjacency bytes for order " + std::to_string(order) + ", got " +
                     std::to_string(line.size() - pos));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = graph6_value(line[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (; bit < expected * 6; ++bit)
    if ((graph6_value(line[pos + bit / 6]) >> (5 - bit % 6)) & 1)
      throw ParseError("graph6: nonzero padding bits");
  return build_parsed(order, edges, "graph6");
}

std::string export_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
  }
  int value = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + kGraph6Offset));
        value = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + kGraph6Offset));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  int declared = -1;
  int max_id = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const auto toks = tokens(strip_comment(raw));
    const std::string where = "edge list line " + std::to_string(line_no);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      if (declared >= 0) throw ParseError(where + ": order declared twice");
      declared = parse_int(toks[0], where);
    } else if (toks.size() == 2) {
      const int u = parse_int(toks[0], where), v = parse_int(toks[1], where);
      edges.emplace_back(u, v);
      max_id = std::max({max_id, u, v});
    } else {
      throw ParseError(where + ": expected 'u v' or a single order");
    }
  }
  const int n = declared >= 0 ? declared : max_id + 1;
  if (n <= 0) throw ParseError("edge list: graph has no vertices");
  if (max_id >= n)
    throw ParseError("edge list: vertex " + std::to_string(max_id) + " exceeds declared order " +
                     std::to_string(n));
  return build_parsed(n, edges, "edge list");
}

std::string export_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<GraphInput> read_graphs(std::string_view text, const std::string& source) {
  std::vector<GraphInput> out;
  const auto lines = split_lines(text);
  const auto first = std::find_if(lines.begin(), lines.end(), [](std::string_view l) {
    l = trim(l);
    return !l.empty() && l.front() != '#';
  });
  if (first == lines.end()) throw ParseError(source + ": no graph in input");

  const std::string_view head = trim(*first);
  const bool edge_list = std::all_of(head.begin(), head.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c));
  });
  if (edge_list) {
    out.push_back({source, Format::EdgeList, 0, std::string(text), parse_edge_list(text)});
    return out;
  }
  for (std::string_view raw : lines) {
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    try {
      out.push_back({source, Format::Graph6, out.size(), std::string(line), parse_graph6(line)});
    } catch (const ParseError& e) {
      throw ParseError(source + " graph #" + std::to_string(out.size()) + ": " + e.what());
    }
  }
  return out;
}

std::vector<GraphInput> read_graphs_from(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    buffer << in.rdbuf();
  }
  return read_graphs(buffer.str(), path);
}

std::vector<int> parse_id_list(std::string_view text) {
  text = trim(text);
  if (text.starts_with('{') && text.ends_with('}')) text = trim(text.substr(1, text.size() - 2));
  std::vector<int> ids;
  if (text.empty()) return ids;
  while (true) {
    const auto comma = text.find(',');
    ids.push_back(parse_int(trim(text.substr(0, comma)), "vertex id list"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw ParseError("vertex id list: repeated id");
  return ids;
}

Json ids_json(VertexSet s) { return Json(s.ids()); }

Json to_json(const InvariantReport& r) {
  Json j;
  j["gamma"] = r.gamma;
  j["Gamma"] = r.Gamma;
  j["alpha"] = r.alpha;
  j["ir"] = r.ir ? Json(*r.ir) : Json(nullptr);
  j["num_minimal_dom_sets"] = r.num_minimal_dom_sets;
  j["num_maximal_independent_sets"] = r.num_maximal_independent_sets;
  j["well_covered"] = r.well_covered;
  j["well_dominated"] = r.well_dominated;
  return j;
}

Json to_json(const ConnectivityProfile& p) {
  Json j;
  j["gamma"] = p.gamma;
  j["Gamma"] = p.Gamma;
  Json records = Json::array();
  for (const auto& rec : p.records) {
    Json row;
    row["k"] = rec.k;
    row["order"] = rec.order;
    row["size"] = rec.size;
    row["components"] = rec.component_count;
    row["connected"] = rec.connected;
    records.push_back(std::move(row));
  }
  j["records"] = std::move(records);
  return j;
}

Json to_json(const SepReport& r, const DomFamily& fam) {
  Json j;
  j["sep"] = r.sep;
  j["method"] = std::string(to_string(r.method));
  j["family_size"] = fam.size();
  j["witness_pair"] = Json::array({ids_json(fam.sets[r.witness_pair.first]),
                                   ids_json(fam.sets[r.witness_pair.second])});
  j["witness_pair_index"] = Json::array({r.witness_pair.first, r.witness_pair.second});
  j["witness_partition"] = {{"side_a", r.side_a}, {"side_b", r.side_b}};
  Json family = Json::array();
  for (VertexSet s : fam.sets) family.push_back(ids_json(s));
  j["family"] = std::move(family);
  return j;
}

Json to_json(const Theorem3Evidence& ev, const DomFamily& fam) {
  Json j;
  j["d0"] = ev.d0;
  j["sep"] = ev.sep.sep;
  j["agree"] = ev.agree;
  j["gamma"] = ev.gamma;
  j["Gamma"] = ev.Gamma;
  j["family_size"] = ev.family_size;
  j["witness_pair"] = Json::array({ids_json(fam.sets[ev.sep.witness_pair.first]),
                                   ids_json(fam.sets[ev.sep.witness_pair.second])});
  return j;
}

Json to_json(const LemmaCheck& c) {
  Json j;
  j["k"] = c.k;
  j["r"] = c.r;
  j["passed"] = c.passed();
  j["gamma"] = c.gamma;
  j["Gamma"] = c.Gamma;
  j["family_size"] = c.family_size;
  j["expected_family_size"] = c.expected_family_size;
  j["checked"] = c.checked;
  Json violations = Json::array();
  for (const auto& v : c.violations)
    violations.push_back({{"part", v.part}, {"detail", v.detail},
                          {"counterexample", ids_json(v.counterexample)}});
  j["violations"] = std::move(violations);
  return j;
}

Json summary_json(const ReconfigGraph& rg) {
  Json j;
  j["k"] = rg.k;
  j["order"] = rg.order();
  j["size"] = rg.size();
  j["components"] = rg.component_count;
  j["connected"] = rg.connected();
  return j;
}

Json to_json(const ReconfigGraph& rg) {
  Json j = summary_json(rg);
  Json verts = Json::array();
  for (VertexSet s : rg.verts) verts.push_back(ids_json(s));
  Json edges = Json::array();
  for (auto [a, b] : rg.edges) edges.push_back(Json::array({a, b}));
  j["vertices"] = std::move(verts);
  j["edges"] = std::move(edges);
  return j;
}

std::string export_dot(const ReconfigGraph& rg) {
  std::ostringstream out;
  out << "graph \"D_" << rg.k << "\" {\n";
  for (std::size_t i = 0; i < rg.verts.size(); ++i)
    out << "  n" << i << " [label=\"" << rg.verts[i].to_string() << "\"];\n";
  for (auto [a, b] : rg.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace domrec::io
