#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clumpdiam {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by operations that need a connected graph.
class NotConnectedError : public GraphError {
 public:
  NotConnectedError() : GraphError("not connected") {}
};

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_; }

  /// Adds {u, v}; returns false when the edge is already present.
  /// Self-loops and out-of-range ids throw std::invalid_argument.
  bool add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  int min_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edges_ = 0;
};

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const SimpleGraph& g, int source);
bool is_connected(const SimpleGraph& g);

/// Exact diameter by all-pairs BFS. Throws NotConnectedError.
int diameter(const SimpleGraph& g);

struct LayerSkeleton {
  int root = 0;
  std::vector<int> layer;
  int depth = 0;  // D, the root's eccentricity
};

/// Root of maximum eccentricity (smallest id on ties) and its BFS layering.
LayerSkeleton layer_and_root(const SimpleGraph& g);

/// Backtracking colorer: vertices in id order, colors ascending.
std::optional<std::vector<int>> proper_coloring(const SimpleGraph& g, int k);

/// Least k <= kmax admitting a proper coloring, or nullopt if none does.
std::optional<int> chromatic_number(const SimpleGraph& g, int kmax);

/// Connected graph with a root, its BFS layers, and a proper k-coloring.
///
/// Instances are only produced by make(), which recomputes the layer map from
/// the root, so `layer` always equals the BFS distance.
struct ColoredLayeredGraph {
  SimpleGraph graph;
  int root = 0;
  std::vector<int> layer;
  std::vector<int> color;
  int k = 0;
  int depth = 0;

  static ColoredLayeredGraph make(SimpleGraph graph, int root, std::vector<int> color, int k);

  int order() const { return graph.order(); }
  /// Vertices of layer i in id order.
  std::vector<int> layer_vertices(int i) const;

  friend bool operator==(const ColoredLayeredGraph&, const ColoredLayeredGraph&) = default;
};

/// Layers from layer_and_root plus the lowest-k coloring up to kmax.
ColoredLayeredGraph layer_and_color(const SimpleGraph& g, int kmax);

/// True when every differently colored pair in the same or adjacent layers is joined.
bool is_saturated(const ColoredLayeredGraph& g);

/// Adds every missing edge between differently colored vertices in the same
/// or consecutive layers. Layering, coloring, root, and depth are unchanged.
ColoredLayeredGraph saturate(const ColoredLayeredGraph& g);

/// Makes the last layer monochromatic by moving all but one color class of
/// L_D into L_{D-1} and joining the moved vertices to every differently
/// colored vertex of L_{D-2}. Requires D >= 2.
ColoredLayeredGraph normalize_end_layer(const ColoredLayeredGraph& g);

// Text format: "n m", m lines "u v", then optional "color v c" and "root r".
struct GraphFile {
  SimpleGraph graph;
  std::optional<int> root;
  std::vector<std::optional<int>> color;  // empty when no color lines
};

GraphFile parse_graph_text(const std::string& text);
std::string format_graph_text(const SimpleGraph& g);
std::string format_colored_text(const ColoredLayeredGraph& g);

/// Colored layered graph from a parsed file; missing pieces are computed
/// (root by layer_and_root, coloring by chromatic_number up to kmax).
ColoredLayeredGraph to_colored_layered(const GraphFile& file, int kmax);

std::string to_dot(const ColoredLayeredGraph& g);

}  // namespace clumpdiam
