#include "clumpdiam/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace clumpdiam {

SimpleGraph::SimpleGraph(int n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.resize(n);
}

bool SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::invalid_argument("vertex id out of range");
  if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edges_;
  return true;
}

bool SimpleGraph::has_edge(int u, int v) const {
  const auto& au = adj_.at(u);
  return std::binary_search(au.begin(), au.end(), v);
}

int SimpleGraph::min_degree() const {
  int best = order();
  for (const auto& a : adj_) best = std::min(best, static_cast<int>(a.size()));
  return best;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const SimpleGraph& g) {
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

namespace {

int eccentricity(const SimpleGraph& g, int v) {
  auto d = bfs_distances(g, v);
  int ecc = 0;
  for (int x : d) {
    if (x < 0) throw NotConnectedError();
    ecc = std::max(ecc, x);
  }
  return ecc;
}

}  // namespace

int diameter(const SimpleGraph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

LayerSkeleton layer_and_root(const SimpleGraph& g) {
  LayerSkeleton out;
  int best = -1;
  for (int v = 0; v < g.order(); ++v) {
    int e = eccentricity(g, v);
    if (e > best) {
      best = e;
      out.root = v;
    }
  }
  out.layer = bfs_distances(g, out.root);
  out.depth = best;
  return out;
}

namespace {

bool color_from(const SimpleGraph& g, int k, int v, std::vector<int>& color) {
  if (v == g.order()) return true;
  for (int c = 0; c < k; ++c) {
    bool clash = false;
    for (int w : g.neighbors(v)) {
      if (w < v && color[w] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (color_from(g, k, v + 1, color)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<int>> proper_coloring(const SimpleGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::vector<int> color(g.order(), -1);
  if (!color_from(g, k, 0, color)) return std::nullopt;
  return color;
}

std::optional<int> chromatic_number(const SimpleGraph& g, int kmax) {
  for (int k = 1; k <= kmax; ++k)
    if (proper_coloring(g, k)) return k;
  return std::nullopt;
}

ColoredLayeredGraph ColoredLayeredGraph::make(SimpleGraph graph, int root, std::vector<int> color,
                                              int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (root < 0 || root >= graph.order()) throw std::invalid_argument("root out of range");
  if (static_cast<int>(color.size()) != graph.order())
    throw std::invalid_argument("coloring size does not match vertex count");
  for (int c : color)
    if (c < 0 || c >= k) throw std::invalid_argument("color out of range 0..k-1");
  for (auto [u, v] : graph.edges())
    if (color[u] == color[v])
      throw GraphError("improper coloring at edge " + std::to_string(u) + "-" + std::to_string(v));

  ColoredLayeredGraph out;
  out.layer = bfs_distances(graph, root);
  for (int d : out.layer)
    if (d < 0) throw NotConnectedError();
  out.depth = *std::max_element(out.layer.begin(), out.layer.end());
  out.graph = std::move(graph);
  out.root = root;
  out.color = std::move(color);
  out.k = k;
  return out;
}

std::vector<int> ColoredLayeredGraph::layer_vertices(int i) const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (layer[v] == i) out.push_back(v);
  return out;
}

ColoredLayeredGraph layer_and_color(const SimpleGraph& g, int kmax) {
  auto skel = layer_and_root(g);
  auto k = chromatic_number(g, kmax);
  if (!k) throw GraphError("graph is not " + std::to_string(kmax) + "-colorable");
  return ColoredLayeredGraph::make(g, skel.root, *proper_coloring(g, *k), kmax);
}

bool is_saturated(const ColoredLayeredGraph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (std::abs(g.layer[u] - g.layer[v]) <= 1 && g.color[u] != g.color[v] &&
          !g.graph.has_edge(u, v))
        return false;
  return true;
}

ColoredLayeredGraph saturate(const ColoredLayeredGraph& g) {
  SimpleGraph h = g.graph;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (std::abs(g.layer[u] - g.layer[v]) <= 1 && g.color[u] != g.color[v]) h.add_edge(u, v);
  auto out = ColoredLayeredGraph::make(std::move(h), g.root, g.color, g.k);
  if (out.layer != g.layer || out.depth != g.depth)
    throw GraphError("saturation changed BFS distances from the root");
  return out;
}

ColoredLayeredGraph normalize_end_layer(const ColoredLayeredGraph& g) {
  const int D = g.depth;
  if (D < 2) throw GraphError("underspecified case: end-layer normalization needs D >= 2");

  std::set<int> last_colors, back_colors;
  for (int v = 0; v < g.order(); ++v) {
    if (g.layer[v] == D) last_colors.insert(g.color[v]);
    if (g.layer[v] == D - 2) back_colors.insert(g.color[v]);
  }
  if (last_colors.size() == 1) return g;

  int keep = *last_colors.begin();
  for (int c : last_colors) {
    if (back_colors.count(c)) {
      keep = c;
      break;
    }
  }

  SimpleGraph h = g.graph;
  for (int v = 0; v < g.order(); ++v) {
    if (g.layer[v] != D || g.color[v] == keep) continue;
    for (int w = 0; w < g.order(); ++w)
      if (g.layer[w] == D - 2 && g.color[w] != g.color[v]) h.add_edge(v, w);
  }
  auto out = ColoredLayeredGraph::make(std::move(h), g.root, g.color, g.k);

  // Postconditions of the construction.
  if (out.depth != D) throw GraphError("normalization changed the depth");
  for (int v = 0; v < g.order(); ++v) {
    int expected = g.layer[v] == D && g.color[v] != keep ? D - 1 : g.layer[v];
    if (out.layer[v] != expected) throw GraphError("normalization broke the BFS layering");
    if (out.graph.degree(v) < g.graph.degree(v)) throw GraphError("normalization lowered a degree");
  }
  return out;
}

std::string to_dot(const ColoredLayeredGraph& g) {
  std::string s = "graph G {\n";
  for (int i = 0; i <= g.depth; ++i) {
    s += "  { rank=same;";
    for (int v : g.layer_vertices(i)) s += " " + std::to_string(v) + ";";
    s += " }\n";
  }
  for (int v = 0; v < g.order(); ++v)
    s += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + " c" +
         std::to_string(g.color[v]) + "\"];\n";
  for (auto [u, v] : g.graph.edges())
    s += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace clumpdiam
