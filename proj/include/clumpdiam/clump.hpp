#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clumpdiam/graph.hpp"

namespace clumpdiam {

/// Set of colors as a bitmask; bit c set means color c is present.
using ColorSet = std::uint32_t;

inline int set_size(ColorSet s) { return std::popcount(s); }
inline bool has_color(ColorSet s, int c) { return (s >> c) & 1u; }
std::string format_color_set(ColorSet s);  // "0,2"

/// Max color count supported by the bitmask representation.
inline constexpr int kMaxColors = 32;

struct Clump {
  int layer = 0;
  int color = 0;
  friend bool operator==(const Clump&, const Clump&) = default;
};

/// Layered sequence of color sets C_0..C_D. Clump (i, a) exists iff a is in
/// C_i; two clumps are adjacent iff their layers differ by at most one and
/// their colors differ. Optional positive integer weights per clump.
class ClumpGraph {
 public:
  ClumpGraph() = default;
  ClumpGraph(int k, std::vector<ColorSet> layers);
  ClumpGraph(int k, std::vector<ColorSet> layers, std::vector<std::vector<long>> weights);

  int k() const { return k_; }
  int depth() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<ColorSet>& layers() const { return layers_; }
  ColorSet layer(int i) const {
    return i < 0 || i > depth() ? 0u : layers_[static_cast<std::size_t>(i)];
  }
  int layer_size(int i) const { return set_size(layer(i)); }

  bool weighted() const { return weights_.has_value(); }
  /// Weight of clump (i, c); 1 when the graph is unweighted.
  long weight(int i, int c) const;
  /// weights[i][c] for c in 0..k-1 (0 where the clump is absent).
  const std::vector<std::vector<long>>& weights() const;
  ClumpGraph with_weights(std::vector<std::vector<long>> weights) const;
  ClumpGraph unweighted() const { return ClumpGraph(k_, layers_); }

  /// Clumps ordered by layer then color.
  std::vector<Clump> clumps() const;
  int clump_count() const;
  /// Position of (i, c) in clumps(); -1 when absent.
  int clump_index(int i, int c) const;
  bool adjacent(const Clump& a, const Clump& b) const;
  std::vector<Clump> neighbors(const Clump& x) const;

  friend bool operator==(const ClumpGraph&, const ClumpGraph&) = default;

 private:
  int k_ = 0;
  std::vector<ColorSet> layers_;
  std::optional<std::vector<std::vector<long>>> weights_;
};

struct Violation {
  std::string condition;
  int layer = -1;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool verdict() const { return violations.empty(); }
  void add(std::string condition, int layer, std::string detail) {
    violations.push_back({std::move(condition), layer, std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

/// Clump graph of a saturated colored layered graph; weights count vertices.
ClumpGraph build_clump_graph(const ColoredLayeredGraph& g);

/// Vertex-level blow-up of a weighted clump graph. Vertices are numbered
/// layer by layer, color ascending, copies consecutive. Requires weight 1 at
/// layer 0 so the result is rooted there.
ColoredLayeredGraph blow_up(const ClumpGraph& h);

/// Local conditions between consecutive layers (a at index i, b at i + 1)
/// that a canonical clump graph satisfies; position-independent part.
bool consecutive_compatible(ColorSet a, ColorSet b, int k);

ValidationReport validate_canonical(const ClumpGraph& h);
ValidationReport validate_strongly_canonical(const ClumpGraph& h);

/// Lexicographically minimal layer-mask sequence over all k! color
/// permutations (brute force).
std::vector<ColorSet> canonical_form(const ClumpGraph& h);

/// Number of labeled color sequences in the permutation class of h.
std::uint64_t orbit_size(const ClumpGraph& h);

/// Calls visit once per color-permutation class of unweighted strongly
/// canonical clump graphs with k colors and depth D, each in its
/// canonical form, in increasing lexicographic order.
void for_each_strongly_canonical(int k, int D, const std::function<void(const ClumpGraph&)>& visit);
std::vector<ClumpGraph> enumerate_strongly_canonical(int k, int D);

// Text format:
//   k=<k> D=<D>
//   0|1,2|0
//   w=1|2,1|1        (optional, aligned with the layer line)
std::vector<ColorSet> parse_layers(const std::string& line);
ClumpGraph parse_clump_text(const std::string& text);
/// Inline form used on the command line: a layer line plus an optional
/// weight line aligned with it (e.g. "0|1,2|0" and "1|2,1|1").
ClumpGraph parse_clump_inline(const std::string& layers, int k, const std::string& weights = "");
std::string format_layers(const ClumpGraph& h);
std::string format_clump_text(const ClumpGraph& h);
std::string to_dot(const ClumpGraph& h);

}  // namespace clumpdiam
