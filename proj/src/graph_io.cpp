#include "zf/graph_io.hpp"

#include <sstream>

namespace zf {

namespace {

constexpr int g6_offset = 63;

int triangle_bit_count(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty())
    throw Error(ErrorCode::ParseError, "empty graph6 string");
  for (std::size_t k = 0; k < text.size(); ++k) {
    const unsigned char c = static_cast<unsigned char>(text[k]);
    if (c < 63 || c > 126)
      throw Error(ErrorCode::ParseError,
                  "graph6 byte out of range at position " + std::to_string(k));
  }
  if (text[0] == '~')
    throw Error(ErrorCode::Unsupported, "graph6 long form not supported");
  const int n = text[0] - g6_offset;
  const int bits = triangle_bit_count(n);
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != 1 + body)
    throw Error(ErrorCode::ParseError,
                "graph6 string has wrong length for n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      const int b = text[1 + static_cast<std::size_t>(t / 6)] - g6_offset;
      if ((b >> (5 - t % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // padding bits must be zero
  for (; t < static_cast<int>(body) * 6; ++t) {
    const int b = text[1 + static_cast<std::size_t>(t / 6)] - g6_offset;
    if ((b >> (5 - t % 6)) & 1)
      throw Error(ErrorCode::ParseError, "graph6 trailing bits nonzero");
  }
  return from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + g6_offset));
  const int bits = triangle_bit_count(n);
  out.resize(1 + static_cast<std::size_t>((bits + 5) / 6),
             static_cast<char>(g6_offset));
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.has_edge(i, j))
        out[1 + static_cast<std::size_t>(t / 6)] += static_cast<char>(1 << (5 - t % 6));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::ParseError,
                 "edge list line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank
    if (first[0] == '#') continue;
    if (n < 0) {
      std::string second, extra;
      if (!(ls >> second) || (ls >> extra))
        throw fail("expected header \"n m\"");
      try {
        n = std::stoi(first);
        m = std::stoi(second);
      } catch (const std::exception&) {
        throw fail("expected header \"n m\"");
      }
      if (n < 0 || m < 0) throw fail("negative header value");
      continue;
    }
    std::string second, extra;
    if (!(ls >> second) || (ls >> extra)) throw fail("expected \"u v\"");
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
      v = std::stoi(second);
    } catch (const std::exception&) {
      throw fail("expected \"u v\"");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "edge list missing header");
  if (static_cast<int>(edges.size()) != m)
    throw Error(ErrorCode::ParseError,
                "edge list declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
  return from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edge_list();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace zf
