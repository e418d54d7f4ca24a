#include <sstream>

#include "clumpdiam/graph.hpp"

namespace clumpdiam {

namespace {

int check_vertex(long long v, int n, int line) {
  if (v < 0 || v >= n)
    throw std::invalid_argument("line " + std::to_string(line) + ": vertex id " +
                                std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

GraphFile parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream hdr(line);
    if (!(hdr >> n >> m) || n < 1 || m < 0)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'n m' header");
    break;
  }
  if (n < 1) throw std::invalid_argument("missing 'n m' header");

  GraphFile file;
  file.graph = SimpleGraph(static_cast<int>(n));
  long long edges_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "color") {
      long long v, c;
      if (!(ls >> v >> c) || c < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'color v c'");
      if (file.color.empty()) file.color.resize(n);
      file.color[check_vertex(v, static_cast<int>(n), line_no)] = static_cast<int>(c);
    } else if (head == "root") {
      long long r;
      if (!(ls >> r))
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'root r'");
      file.root = check_vertex(r, static_cast<int>(n), line_no);
    } else {
      std::istringstream es(line);
      long long u, v;
      if (!(es >> u >> v))
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'u v'");
      if (edges_read == m)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": more than m edges");
      int a = check_vertex(u, static_cast<int>(n), line_no);
      int b = check_vertex(v, static_cast<int>(n), line_no);
      if (a == b) throw std::invalid_argument("line " + std::to_string(line_no) + ": self-loop");
      if (!file.graph.add_edge(a, b))
        throw std::invalid_argument("line " + std::to_string(line_no) + ": parallel edge");
      ++edges_read;
    }
  }
  if (edges_read != m)
    throw std::invalid_argument("expected " + std::to_string(m) + " edges, read " +
                                std::to_string(edges_read));
  return file;
}

std::string format_graph_text(const SimpleGraph& g) {
  std::string s = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

std::string format_colored_text(const ColoredLayeredGraph& g) {
  std::string s = format_graph_text(g.graph);
  for (int v = 0; v < g.order(); ++v)
    s += "color " + std::to_string(v) + " " + std::to_string(g.color[v]) + "\n";
  s += "root " + std::to_string(g.root) + "\n";
  return s;
}

ColoredLayeredGraph to_colored_layered(const GraphFile& file, int kmax) {
  int root = file.root ? *file.root : layer_and_root(file.graph).root;
  if (file.color.empty()) {
    auto k = chromatic_number(file.graph, kmax);
    if (!k) throw GraphError("graph is not " + std::to_string(kmax) + "-colorable");
    return ColoredLayeredGraph::make(file.graph, root, *proper_coloring(file.graph, *k), kmax);
  }
  std::vector<int> color;
  for (std::size_t v = 0; v < file.color.size(); ++v) {
    if (!file.color[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " has no color");
    color.push_back(*file.color[v]);
  }
  return ColoredLayeredGraph::make(file.graph, root, std::move(color), kmax);
}

}  // namespace clumpdiam
