#include "wtd/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>

#include "wtd/errors.hpp"

namespace wtd {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view s, int& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list") return GraphFormat::edge_list;
  if (name == "graph6") return GraphFormat::graph6;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  bool saw_edge = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;

    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (!body.starts_with("labels:")) continue;
      if (!g) throw ParseError("labels before header", line_no);
      if (saw_edge) throw ParseError("labels must precede the first edge", line_no);
      std::vector<std::string> labels;
      for (auto tok : split_ws(body.substr(7))) labels.emplace_back(tok);
      try {
        g->set_labels(std::move(labels));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }

    const auto tokens = split_ws(line);
    if (!g) {
      int n = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !to_int(tokens[1], n) || n < 0)
        throw ParseError("malformed header, expected 'n <count>'", line_no);
      if (n > kMaxVertices) throw ParseError("vertex count exceeds " + std::to_string(kMaxVertices), line_no);
      g.emplace(n);
      continue;
    }
    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !to_int(tokens[0], u) || !to_int(tokens[1], v))
      throw ParseError("malformed edge line, expected '<u> <v>'", line_no);
    if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
      throw ParseError("vertex out of range in edge " + std::string(line), line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (g->adjacent(u, v)) throw ParseError("duplicate edge " + std::string(line), line_no);
    g->add_edge(u, v);
    saw_edge = true;
  }
  if (!g) throw ParseError("missing header 'n <count>'", line_no);
  return *std::move(g);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  if (g.has_labels()) {
    out << "# labels:";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 record", 0);
  for (std::size_t i = 0; i < line.size(); ++i)
    if (line[i] < 63 || line[i] > 126) throw ParseError("invalid graph6 byte", i);

  std::size_t at = 0;
  int n = 0;
  if (line[0] != 126) {
    n = line[0] - 63;
    at = 1;
  } else {
    if (line.size() < 4 || line[1] == 126) throw ParseError("graph6 order too large or truncated", 1);
    n = ((line[1] - 63) << 12) | ((line[2] - 63) << 6) | (line[3] - 63);
    at = 4;
  }
  if (n > kMaxVertices) throw ParseError("vertex count exceeds " + std::to_string(kMaxVertices), 0);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - at != bytes) throw ParseError("graph6 record has wrong length", line.size());

  Graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = line[at + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = line[at + bytes - 1] - 63;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("nonzero graph6 padding", at + bytes - 1);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = trim(text.substr(pos, nl - pos));
    if (!line.empty()) out.push_back(parse_graph6(line));
    pos = nl + 1;
  }
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edge_list) return parse_edge_list(text);
  auto graphs = parse_graph6_lines(text);
  if (graphs.size() != 1) throw ParseError("expected exactly one graph6 record", 0);
  return std::move(graphs.front());
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::edge_list ? write_edge_list(g) : write_graph6(g) + '\n';
}

}  // namespace wtd
