#include "zf/graph.hpp"

#include <algorithm>
#include <cassert>

namespace zf {

std::vector<int> to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

Mask to_mask(const std::vector<int>& vs, int n) {
  Mask m = 0;
  for (int v : vs) {
    if (v < 0 || v >= n)
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(v) + " out of range for n=" +
                      std::to_string(n));
    m |= vbit(v);
  }
  return m;
}

namespace {

void check_order(int n) {
  if (n < 0)
    throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  if (n > max_order)
    throw Error(ErrorCode::TooLarge,
                "graphs with more than " + std::to_string(max_order) +
                    " vertices are not supported");
}

}  // namespace

Graph::Graph(int n, std::vector<Mask> adj) : n_(n), adj_(std::move(adj)) {
  assert(static_cast<int>(adj_.size()) == n_);
#ifndef NDEBUG
  const Mask full = vertex_mask();
  for (int v = 0; v < n_; ++v) {
    assert((adj_[static_cast<std::size_t>(v)] & ~full) == 0);
    assert(!contains(adj_[static_cast<std::size_t>(v)], v));
    for (int u : to_vertices(adj_[static_cast<std::size_t>(v)]))
      assert(has_edge(u, v));
  }
#endif
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  check_order(n);
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::InvalidEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw Error(ErrorCode::InvalidEdge,
                  "self-loop at vertex " + std::to_string(u));
    adj[static_cast<std::size_t>(u)] |= vbit(v);
    adj[static_cast<std::size_t>(v)] |= vbit(u);
  }
  return Graph(n, std::move(adj));
}

Graph family(Family kind, int n) {
  switch (kind) {
    case Family::Path:
      return path_graph(n);
    case Family::Cycle:
      return cycle_graph(n);
    case Family::Complete:
      return complete_graph(n);
    case Family::Star:
      return star_graph(n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

Graph path_graph(int n) {
  check_order(n);
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
  return from_edges(n, edges);
}

Graph cycle_graph(int n) {
  check_order(n);
  if (n < 3) throw Error(ErrorCode::InvalidOrder, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
  edges.emplace_back(0, n - 1);
  return from_edges(n, edges);
}

Graph complete_graph(int n) {
  check_order(n);
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return from_edges(n, edges);
}

Graph star_graph(int n) {
  check_order(n);
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "star needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return from_edges(n, edges);
}

Graph threshold_from_sequence(const ThresholdSequence& seq) {
  const int n = 1 + static_cast<int>(seq.size());
  check_order(n);
  std::vector<Mask> adj(1, 0);
  for (ThresholdStep step : seq) {
    const int v = static_cast<int>(adj.size());
    Mask nb = 0;
    if (step == ThresholdStep::Cone) {
      nb = (Mask{1} << v) - 1;
      for (int u = 0; u < v; ++u) adj[static_cast<std::size_t>(u)] |= vbit(v);
    }
    adj.push_back(nb);
  }
  return Graph(n, std::move(adj));
}

Mask VertexMapping::map_forward(Mask old_set) const {
  Mask out = 0;
  while (old_set) {
    const int v = lowest(old_set);
    old_set &= old_set - 1;
    const int nv = old_to_new[static_cast<std::size_t>(v)];
    if (nv >= 0) out |= vbit(nv);
  }
  return out;
}

Mask VertexMapping::map_back(Mask new_set) const {
  Mask out = 0;
  while (new_set) {
    const int v = lowest(new_set);
    new_set &= new_set - 1;
    out |= vbit(new_to_old[static_cast<std::size_t>(v)]);
  }
  return out;
}

std::pair<Graph, VertexMapping> delete_vertices(const Graph& g, Mask w) {
  if ((w & ~g.vertex_mask()) != 0)
    throw Error(ErrorCode::InvalidArgument, "deletion set out of range");
  VertexMapping map;
  map.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (contains(w, v)) continue;
    map.old_to_new[static_cast<std::size_t>(v)] =
        static_cast<int>(map.new_to_old.size());
    map.new_to_old.push_back(v);
  }
  const int m = static_cast<int>(map.new_to_old.size());
  std::vector<Mask> adj(static_cast<std::size_t>(m), 0);
  for (int nv = 0; nv < m; ++nv)
    adj[static_cast<std::size_t>(nv)] =
        map.map_forward(g.neighbors(map.new_to_old[static_cast<std::size_t>(nv)]));
  return {Graph(m, std::move(adj)), std::move(map)};
}

namespace {

void check_pair(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
    throw Error(ErrorCode::InvalidArgument,
                "invalid vertex pair (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
}

}  // namespace

Graph delete_edge(const Graph& g, int u, int v) {
  check_pair(g, u, v);
  if (!g.has_edge(u, v))
    throw Error(ErrorCode::MissingEdge,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") not present");
  std::vector<Mask> adj(g.adjacency().begin(), g.adjacency().end());
  adj[static_cast<std::size_t>(u)] &= ~vbit(v);
  adj[static_cast<std::size_t>(v)] &= ~vbit(u);
  return Graph(g.order(), std::move(adj));
}

Graph add_edge(const Graph& g, int u, int v) {
  check_pair(g, u, v);
  if (g.has_edge(u, v))
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") already present");
  std::vector<Mask> adj(g.adjacency().begin(), g.adjacency().end());
  adj[static_cast<std::size_t>(u)] |= vbit(v);
  adj[static_cast<std::size_t>(v)] |= vbit(u);
  return Graph(g.order(), std::move(adj));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  check_order(n);
  std::vector<Mask> adj(g.adjacency().begin(), g.adjacency().end());
  adj.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < h.order(); ++v)
    adj.push_back(h.neighbors(v) << g.order());
  return Graph(n, std::move(adj));
}

Graph wedge(const Graph& g, int v, const Graph& h, int w) {
  if (v < 0 || v >= g.order() || w < 0 || w >= h.order())
    throw Error(ErrorCode::InvalidArgument, "wedge vertex out of range");
  const int n = g.order() + h.order() - 1;
  check_order(n);
  auto map_h = [&](int u) {
    if (u == w) return v;
    return g.order() + (u < w ? u : u - 1);
  };
  std::vector<std::pair<int, int>> edges = g.edge_list();
  for (auto [a, b] : h.edge_list()) edges.emplace_back(map_h(a), map_h(b));
  return from_edges(n, edges);
}

std::pair<Graph, int> cone(const Graph& g) {
  const int n = g.order() + 1;
  check_order(n);
  const int apex = g.order();
  std::vector<Mask> adj(g.adjacency().begin(), g.adjacency().end());
  for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] |= vbit(apex);
  adj.push_back(g.vertex_mask());
  return {Graph(n, std::move(adj)), apex};
}

}  // namespace zf
