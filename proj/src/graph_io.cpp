#include "mpc/graph_io.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace mpc {

namespace {

[[noreturn]] void fail_at(const std::string& what, size_t offset) {
  throw ParseError("graph6: " + what + " at byte " + std::to_string(offset));
}

int data_value(std::string_view s, size_t offset) {
  if (offset >= s.size()) fail_at("truncated bit field", s.size());
  unsigned char c = static_cast<unsigned char>(s[offset]);
  if (c < 63 || c > 126) fail_at("byte outside graph6 range", offset);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= line.size()) fail_at("missing header", pos);

  std::uint64_t n = 0;
  if (data_value(line, pos) < 63) {
    n = data_value(line, pos);
    pos += 1;
  } else if (pos + 1 < line.size() && data_value(line, pos + 1) < 63) {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = n << 6 | data_value(line, pos + i);
    pos += 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = n << 6 | data_value(line, pos + i);
    pos += 8;
  }
  if (n > 1u << 20) fail_at("vertex count out of range", pos > 0 ? pos - 1 : 0);

  std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  size_t need = static_cast<size_t>((bits + 5) / 6);
  if (line.size() - pos > need) fail_at("unexpected trailing byte", pos + need);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int word = data_value(line, pos + k / 6);
      if (word >> (5 - k % 6) & 1) edges.emplace_back(i, j);
    }
  // padding must be zero
  for (; k < 6 * need; ++k)
    if (data_value(line, pos + k / 6) >> (5 - k % 6) & 1) fail_at("nonzero padding bit", pos + k / 6);
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  std::uint64_t n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(63 + (n >> 6 * i & 63)));
  } else {
    throw std::invalid_argument("graph too large for graph6 writer");
  }
  std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<int> words((bits + 5) / 6, 0);
  std::uint64_t k = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.has_edge(i, j)) words[k / 6] |= 1 << (5 - k % 6);
  for (int w : words) out.push_back(static_cast<char>(63 + w));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (n < 0) {
      long long nn;
      std::string extra;
      if (tok != "n" || !(ls >> nn) || (ls >> extra) || nn < 0)
        throw ParseError("edge list: malformed header at line " + std::to_string(lineno));
      n = static_cast<int>(nn);
      continue;
    }
    long long u, v;
    std::string extra;
    std::istringstream es(line);
    if (!(es >> u >> v) || (es >> extra))
      throw ParseError("edge list: malformed edge at line " + std::to_string(lineno));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge list: vertex out of range at line " + std::to_string(lineno));
    if (u == v) throw ParseError("edge list: self-loop at line " + std::to_string(lineno));
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    for (const Edge& prev : edges)
      if (prev == e) throw ParseError("edge list: duplicate edge at line " + std::to_string(lineno));
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("edge list: missing header at line " + std::to_string(lineno + 1));
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace mpc
