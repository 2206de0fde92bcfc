#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zf {

/// Vertex subsets are single-word bit masks; vertex v is bit (1 << v).
using Mask = std::uint64_t;

/// Largest supported graph order (graph6 short form, one mask word).
inline constexpr int max_order = 62;

enum class ErrorCode {
  InvalidEdge,
  InvalidOrder,
  InvalidArgument,
  MissingEdge,
  DuplicateEdge,
  ParseError,
  Unsupported,
  TooLarge,
  EmptyFort,
  NotALeaf,
  NotHanging,
  NotSimplicial,
  InvalidRemoval,
  Overlap,
  AnchorMismatch,
  NotATree,
  IsAPath,
  Disconnected,
  MixedOrders,
  UseIngestion,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

constexpr Mask vbit(int v) { return Mask{1} << v; }
constexpr bool contains(Mask m, int v) { return (m >> v) & 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }
/// Lowest set bit index; m must be nonzero.
constexpr int lowest(Mask m) { return std::countr_zero(m); }

std::vector<int> to_vertices(Mask m);
/// Builds a mask from a vertex list, validating 0 <= v < n.
Mask to_mask(const std::vector<int>& vs, int n);

/// Immutable simple graph on labels 0..n-1, adjacency stored as one
/// neighborhood mask per vertex.  Symmetry and irreflexivity are checked
/// on construction in debug builds.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Mask> adj);

  int order() const { return n_; }
  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool has_edge(int u, int v) const { return contains(neighbors(u), v); }
  /// Mask with all n vertex bits set.
  Mask vertex_mask() const { return n_ == 0 ? 0 : (Mask{1} << n_) - 1; }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edge_list() const;
  std::span<const Mask> adjacency() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

enum class Family { Path, Cycle, Complete, Star };

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
Graph family(Family kind, int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);

enum class ThresholdStep : std::uint8_t { Isolated, Cone };
/// Creation steps applied left to right starting from a one-vertex graph.
using ThresholdSequence = std::vector<ThresholdStep>;

Graph threshold_from_sequence(const ThresholdSequence& seq);

/// Relabeling produced by vertex deletion: surviving labels are compacted
/// order-preservingly onto 0..n'-1.
struct VertexMapping {
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;

  /// Maps a set of old labels forward; deleted vertices are dropped.
  Mask map_forward(Mask old_set) const;
  Mask map_back(Mask new_set) const;
};

std::pair<Graph, VertexMapping> delete_vertices(const Graph& g, Mask w);
Graph delete_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, int u, int v);
/// Disjoint union; the second operand's labels are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Identifies vertex v of g with vertex w of h.  g keeps its labels; the
/// remaining vertices of h follow in order.  Parallel edges collapse.
Graph wedge(const Graph& g, int v, const Graph& h, int w);
/// Adds a vertex adjacent to everything; returns the graph and the apex label.
std::pair<Graph, int> cone(const Graph& g);

}  // namespace zf
