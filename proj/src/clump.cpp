#include "clumpdiam/clump.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace clumpdiam {

std::string format_color_set(ColorSet s) {
  std::string out;
  for (int c = 0; c < kMaxColors; ++c) {
    if (!has_color(s, c)) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(c);
  }
  return out;
}

namespace {

std::string show(ColorSet s) { return "{" + format_color_set(s) + "}"; }

ColorSet full_set(int k) { return k >= 32 ? ~0u : (1u << k) - 1u; }

void check_layers(int k, const std::vector<ColorSet>& layers) {
  if (k < 1 || k > kMaxColors) throw std::invalid_argument("k out of range");
  if (layers.empty()) throw std::invalid_argument("clump graph needs at least one layer");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (layers[i] == 0) throw std::invalid_argument("layer " + std::to_string(i) + " is empty");
    if (layers[i] & ~full_set(k))
      throw std::invalid_argument("layer " + std::to_string(i) + " uses a color >= k");
  }
}

}  // namespace

ClumpGraph::ClumpGraph(int k, std::vector<ColorSet> layers) : k_(k), layers_(std::move(layers)) {
  check_layers(k_, layers_);
}

ClumpGraph::ClumpGraph(int k, std::vector<ColorSet> layers, std::vector<std::vector<long>> weights)
    : ClumpGraph(k, std::move(layers)) {
  *this = with_weights(std::move(weights));
}

long ClumpGraph::weight(int i, int c) const {
  if (!has_color(layer(i), c)) throw std::out_of_range("no such clump");
  return weights_ ? (*weights_)[i][c] : 1;
}

const std::vector<std::vector<long>>& ClumpGraph::weights() const {
  if (!weights_) throw std::logic_error("clump graph has no weights");
  return *weights_;
}

ClumpGraph ClumpGraph::with_weights(std::vector<std::vector<long>> weights) const {
  if (static_cast<int>(weights.size()) != depth() + 1)
    throw std::invalid_argument("weights do not match the layer count");
  for (int i = 0; i <= depth(); ++i) {
    weights[i].resize(k_, 0);
    for (int c = 0; c < k_; ++c) {
      if (has_color(layers_[i], c) && weights[i][c] < 1)
        throw std::invalid_argument("clump weight must be a positive integer");
      if (!has_color(layers_[i], c) && weights[i][c] != 0)
        throw std::invalid_argument("weight given for a missing clump");
    }
  }
  ClumpGraph out(k_, layers_);
  out.weights_ = std::move(weights);
  return out;
}

std::vector<Clump> ClumpGraph::clumps() const {
  std::vector<Clump> out;
  for (int i = 0; i <= depth(); ++i)
    for (int c = 0; c < k_; ++c)
      if (has_color(layers_[i], c)) out.push_back({i, c});
  return out;
}

int ClumpGraph::clump_count() const {
  int n = 0;
  for (ColorSet s : layers_) n += set_size(s);
  return n;
}

int ClumpGraph::clump_index(int i, int c) const {
  if (!has_color(layer(i), c)) return -1;
  int idx = 0;
  for (int j = 0; j < i; ++j) idx += set_size(layers_[j]);
  return idx + set_size(layers_[i] & ((1u << c) - 1u));
}

bool ClumpGraph::adjacent(const Clump& a, const Clump& b) const {
  return std::abs(a.layer - b.layer) <= 1 && a.color != b.color;
}

std::vector<Clump> ClumpGraph::neighbors(const Clump& x) const {
  std::vector<Clump> out;
  for (int j = x.layer - 1; j <= x.layer + 1; ++j)
    for (int c = 0; c < k_; ++c)
      if (c != x.color && has_color(layer(j), c)) out.push_back({j, c});
  return out;
}

ClumpGraph build_clump_graph(const ColoredLayeredGraph& g) {
  if (!is_saturated(g)) throw GraphError("unsaturated input");
  if (g.k > kMaxColors) throw std::invalid_argument("too many colors");
  std::vector<ColorSet> layers(g.depth + 1, 0);
  std::vector<std::vector<long>> weights(g.depth + 1, std::vector<long>(g.k, 0));
  for (int v = 0; v < g.order(); ++v) {
    layers[g.layer[v]] |= 1u << g.color[v];
    ++weights[g.layer[v]][g.color[v]];
  }
  // Edges of a saturated, properly colored BFS layering are exactly the
  // derived clump adjacency.
  for (auto [u, v] : g.graph.edges())
    if (std::abs(g.layer[u] - g.layer[v]) > 1 || g.color[u] == g.color[v])
      throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " is not between adjacent clumps");
  return ClumpGraph(g.k, std::move(layers), std::move(weights));
}

ColoredLayeredGraph blow_up(const ClumpGraph& h) {
  if (!h.weighted()) throw std::invalid_argument("blow-up needs weights");
  if (h.layer_size(0) != 1 || h.weight(0, std::countr_zero(h.layer(0))) != 1)
    throw std::invalid_argument("blow-up needs a single clump of weight 1 at layer 0");

  std::vector<Clump> owner;
  std::vector<int> color;
  for (const Clump& c : h.clumps()) {
    for (long copy = 0; copy < h.weight(c.layer, c.color); ++copy) {
      owner.push_back(c);
      color.push_back(c.color);
    }
  }
  SimpleGraph g(static_cast<int>(owner.size()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (h.adjacent(owner[u], owner[v])) g.add_edge(u, v);

  auto out = ColoredLayeredGraph::make(std::move(g), 0, std::move(color), h.k());
  for (int v = 0; v < out.order(); ++v)
    if (out.layer[v] != owner[v].layer)
      throw GraphError("blow-up layering differs from clump layers at vertex " + std::to_string(v));
  if (h.depth() >= 2 && diameter(out.graph) != h.depth())
    throw GraphError("blow-up diameter differs from D");
  return out;
}

bool consecutive_compatible(ColorSet a, ColorSet b, int k) {
  int ca = set_size(a), cb = set_size(b);
  if (ca == 1 && cb > k - 1) return false;
  if (set_size(a | b) != std::min(k, ca + cb)) return false;
  if (ca == k && cb < 2) return false;
  return true;
}

ValidationReport validate_canonical(const ClumpGraph& h) {
  ValidationReport rep;
  const int k = h.k();
  const int D = h.depth();
  for (int i = 0; i < D; ++i) {
    ColorSet a = h.layer(i), b = h.layer(i + 1);
    int ca = set_size(a), cb = set_size(b);
    if (ca == 1 && cb > k - 1)
      rep.add("one-color-successor", i,
              "|C_" + std::to_string(i) + "| = 1 but |C_" + std::to_string(i + 1) + "| = " +
                  std::to_string(cb) + " > k-1");
    if (set_size(a | b) != std::min(k, ca + cb))
      rep.add("color-count", i,
              show(a) + " and " + show(b) + " use " + std::to_string(set_size(a | b)) +
                  " colors, expected " + std::to_string(std::min(k, ca + cb)));
    if (ca == k && (i < 2 || cb < 2))
      rep.add("full-layer", i,
              "|C_" + std::to_string(i) + "| = k requires i >= 2 and |C_" + std::to_string(i + 1) +
                  "| >= 2");
  }
  if (h.weighted()) {
    for (int i = 0; i < D; ++i) {
      bool repeated = false;
      for (int c = 0; c < k; ++c)
        if (has_color(h.layer(i), c) && h.weight(i, c) > 1) repeated = true;
      if (!repeated) continue;
      int nb = std::max(h.layer_size(i - 1), h.layer_size(i + 1));
      if (i == 0 || h.layer_size(i) + nb < k)
        rep.add("repeated-color", i,
                "layer " + std::to_string(i) + " repeats a color but i = 0 or |C_i| + " +
                    "max(|C_i-1|, |C_i+1|) < k");
    }
  }
  return rep;
}

ValidationReport validate_strongly_canonical(const ClumpGraph& h) {
  ValidationReport rep = validate_canonical(h);
  const int D = h.depth();
  if (D < 2) rep.add("min-depth", D, "D = " + std::to_string(D) + " < 2");
  if (h.layer_size(0) != 1) rep.add("end-layer", 0, "|C_0| != 1");
  if (D > 0 && h.layer_size(D) != 1) rep.add("end-layer", D, "|C_D| != 1");
  for (int i = 1; i <= D; ++i) {
    const int k = h.k();
    ColorSet a = h.layer(i - 1), b = h.layer(i);
    int missing = 0;
    for (int c = 0; c < k; ++c)
      if (has_color(a, c) && has_color(b, c)) ++missing;
    int expected = std::max(k, set_size(a) + set_size(b)) - k;
    if (missing != expected)
      rep.add("cross-matching", i,
              "layers " + std::to_string(i - 1) + "," + std::to_string(i) + " miss " +
                  std::to_string(missing) + " cross edges, expected " + std::to_string(expected));
  }
  return rep;
}

std::vector<ColorSet> canonical_form(const ClumpGraph& h) {
  const int k = h.k();
  if (k > 8) throw std::invalid_argument("canonical_form supports k <= 8");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ColorSet> best = h.layers();
  std::vector<ColorSet> cur(best.size());
  do {
    for (std::size_t i = 0; i < cur.size(); ++i) {
      ColorSet m = 0;
      for (int c = 0; c < k; ++c)
        if (has_color(h.layers()[i], c)) m |= 1u << perm[c];
      cur[i] = m;
    }
    if (cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::uint64_t orbit_size(const ClumpGraph& h) {
  std::map<std::vector<bool>, int> classes;
  for (int c = 0; c < h.k(); ++c) {
    std::vector<bool> pattern;
    for (ColorSet s : h.layers()) pattern.push_back(has_color(s, c));
    ++classes[pattern];
  }
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  std::uint64_t stab = 1;
  for (const auto& [pattern, count] : classes) stab *= fact(count);
  return fact(h.k()) / stab;
}

namespace {

// Colors that share their membership history so far form contiguous blocks;
// `starts` marks the first color of each block. A layer is canonical iff it
// meets every block in an initial segment.
struct CanonicalWalk {
  int k;
  int D;
  ColorSet full;
  std::vector<ColorSet> layers;
  const std::function<void(const ClumpGraph&)>& visit;

  void extend(int i, ColorSet starts) {
    for (ColorSet b = 1; b <= full; ++b) {
      if (i == 0 || i == D) {
        if (set_size(b) != 1) continue;
      }
      if ((b & ~starts & ~(b << 1)) != 0) continue;
      if (i > 0) {
        if (!consecutive_compatible(layers[i - 1], b, k)) continue;
      }
      if (set_size(b) == k && i < 2) continue;
      layers[i] = b;
      if (i == D) {
        visit(ClumpGraph(k, layers));
      } else {
        extend(i + 1, starts | ((b << 1) & ~b & full));
      }
    }
  }
};

}  // namespace

void for_each_strongly_canonical(int k, int D, const std::function<void(const ClumpGraph&)>& visit) {
  if (k < 3 || k > kMaxColors - 1) throw std::invalid_argument("k must be >= 3");
  if (D < 2) throw std::invalid_argument("D must be >= 2");
  CanonicalWalk walk{k, D, full_set(k), std::vector<ColorSet>(D + 1, 0), visit};
  walk.extend(0, 1u);
}

std::vector<ClumpGraph> enumerate_strongly_canonical(int k, int D) {
  std::vector<ClumpGraph> out;
  for_each_strongly_canonical(k, D, [&](const ClumpGraph& h) { out.push_back(h); });
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t' && ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty())
    throw std::invalid_argument(std::string("malformed ") + what + " '" + s + "'");
  return v;
}

std::vector<std::vector<int>> parse_color_lists(const std::string& line) {
  std::vector<std::vector<int>> out;
  for (const auto& part : split(line, '|')) {
    std::vector<int> colors;
    for (const auto& tok : split(part, ',')) {
      long c = parse_long(tok, "color");
      if (c < 0 || c >= kMaxColors) throw std::invalid_argument("color out of range");
      if (std::find(colors.begin(), colors.end(), c) != colors.end())
        throw std::invalid_argument("repeated color in a layer");
      colors.push_back(static_cast<int>(c));
    }
    out.push_back(std::move(colors));
  }
  return out;
}

std::vector<std::vector<long>> parse_aligned_weights(const std::vector<std::vector<int>>& colors,
                                                     const std::string& line, int k) {
  auto parts = split(line, '|');
  if (parts.size() != colors.size())
    throw std::invalid_argument("weight line does not align with the layer line");
  std::vector<std::vector<long>> w(colors.size(), std::vector<long>(k, 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto toks = split(parts[i], ',');
    if (toks.size() != colors[i].size())
      throw std::invalid_argument("weight line does not align with layer " + std::to_string(i));
    for (std::size_t j = 0; j < toks.size(); ++j) {
      if (colors[i][j] >= k) throw std::invalid_argument("color >= k");
      w[i][colors[i][j]] = parse_long(toks[j], "weight");
    }
  }
  return w;
}

std::vector<ColorSet> to_masks(const std::vector<std::vector<int>>& colors) {
  std::vector<ColorSet> out;
  for (const auto& l : colors) {
    ColorSet m = 0;
    for (int c : l) m |= 1u << c;
    out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<ColorSet> parse_layers(const std::string& line) { return to_masks(parse_color_lists(line)); }

ClumpGraph parse_clump_inline(const std::string& layers, int k, const std::string& weights) {
  auto colors = parse_color_lists(layers);
  if (weights.empty()) return ClumpGraph(k, to_masks(colors));
  return ClumpGraph(k, to_masks(colors), parse_aligned_weights(colors, weights, k));
}

ClumpGraph parse_clump_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.size() < 2) throw std::invalid_argument("clump text needs a header and a layer line");
  int k = -1, D = -1;
  std::istringstream hdr(lines[0]);
  std::string tok;
  while (hdr >> tok) {
    if (tok.rfind("k=", 0) == 0) k = static_cast<int>(parse_long(tok.substr(2), "k"));
    else if (tok.rfind("D=", 0) == 0) D = static_cast<int>(parse_long(tok.substr(2), "D"));
    else throw std::invalid_argument("unexpected header token '" + tok + "'");
  }
  if (k < 1 || D < 0) throw std::invalid_argument("header must be 'k=<k> D=<D>'");
  std::string weights;
  if (lines.size() >= 3) {
    if (lines[2].rfind("w=", 0) != 0) throw std::invalid_argument("expected weight line 'w=...'");
    weights = lines[2].substr(2);
  }
  ClumpGraph h = parse_clump_inline(lines[1], k, weights);
  if (h.depth() != D)
    throw std::invalid_argument("header D=" + std::to_string(D) + " but " +
                                std::to_string(h.depth() + 1) + " layers given");
  return h;
}

std::string format_layers(const ClumpGraph& h) {
  std::string s;
  for (int i = 0; i <= h.depth(); ++i) {
    if (i) s += "|";
    s += format_color_set(h.layer(i));
  }
  return s;
}

std::string format_clump_text(const ClumpGraph& h) {
  std::string s = "k=" + std::to_string(h.k()) + " D=" + std::to_string(h.depth()) + "\n";
  s += format_layers(h) + "\n";
  if (h.weighted()) {
    s += "w=";
    for (int i = 0; i <= h.depth(); ++i) {
      if (i) s += "|";
      bool first = true;
      for (int c = 0; c < h.k(); ++c) {
        if (!has_color(h.layer(i), c)) continue;
        if (!first) s += ",";
        first = false;
        s += std::to_string(h.weight(i, c));
      }
    }
    s += "\n";
  }
  return s;
}

std::string to_dot(const ClumpGraph& h) {
  auto name = [](const Clump& c) {
    return "L" + std::to_string(c.layer) + "c" + std::to_string(c.color);
  };
  std::string s = "graph H {\n  rankdir=LR;\n";
  for (int i = 0; i <= h.depth(); ++i) {
    s += "  { rank=same;";
    for (int c = 0; c < h.k(); ++c)
      if (has_color(h.layer(i), c)) s += " " + name({i, c}) + ";";
    s += " }\n";
  }
  auto all = h.clumps();
  for (const auto& c : all) {
    s += "  " + name(c) + " [label=\"" + std::to_string(c.layer) + ":" + std::to_string(c.color);
    if (h.weighted()) s += " w" + std::to_string(h.weight(c.layer, c.color));
    s += "\"];\n";
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (h.adjacent(all[a], all[b])) s += "  " + name(all[a]) + " -- " + name(all[b]) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace clumpdiam
