#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "clumpdiam/clump.hpp"
#include "clumpdiam/rational.hpp"
#include "clumpdiam/structure.hpp"

namespace clumpdiam {

class UnsupportedK : public std::invalid_argument {
 public:
  explicit UnsupportedK(int k)
      : std::invalid_argument("unsupported k = " + std::to_string(k) + " (expected 3 or 4)") {}
};

/// Nonnegative exact weight per clump of one clump graph.
class DualWeighting {
 public:
  DualWeighting() = default;
  /// All-zero weighting on the clumps of h.
  explicit DualWeighting(const ClumpGraph& h);

  const Rational& at(int layer, int color) const;
  void set(int layer, int color, Rational value);

  /// u(L_i), the weight of layer i.
  Rational layer_total(int layer) const;
  Rational total() const;
  /// Sum of u over the clumps adjacent to x.
  Rational neighbor_sum(const Clump& x) const;

  int depth() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<ColorSet>& layers() const { return layers_; }
  int k() const { return k_; }

 private:
  int k_ = 0;
  std::vector<ColorSet> layers_;
  std::vector<std::vector<Rational>> u_;
};

/// The segment-based weight table applied verbatim for any k >= 3.
/// Used directly when probing k >= 5, where it may fail.
DualWeighting scheme_weights(const ClumpGraph& h, const SegmentPartition& p);

/// The weighting for k in {3, 4}; p must equal partition_segments(h).
DualWeighting assign_weights(const ClumpGraph& h, const SegmentPartition& p);

struct WeightingCheck {
  Rational total;
  bool feasible = true;
  Clump worst;
  Rational worst_sum;
};

/// Total weight and the neighbor-sum condition (every sum <= 1), exactly.
WeightingCheck verify_weighting(const ClumpGraph& h, const DualWeighting& u);

/// k / (3k - 2), the per-layer average the scheme achieves.
Rational scheme_layer_average(int k);

/// Per-layer average weight and additive constant of a dual bound.
struct BoundCertificate {
  Rational average;
  Rational constant;
  int k = 0;
};

BoundCertificate scheme_certificate(int k);
/// D <= n / (delta * average) - 1, from n >= delta * (D + 1) * average.
Rational weak_duality_bound(const BoundCertificate& cert, std::int64_t n, std::int64_t delta);

/// (3 - 2/k) n / delta - 1 for k in {3, 4}.
Rational diameter_bound(std::int64_t n, std::int64_t delta, int k);
/// (3 - 1/(k-1)) n / delta - 1, the earlier bound for every k >= 3.
Rational previous_diameter_bound(std::int64_t n, std::int64_t delta, int k);
/// 3n / (delta + 1), the bound without a clique restriction (up to O(1)).
Rational unrestricted_diameter_bound(std::int64_t n, std::int64_t delta);
/// (6r - 5)(n - 2) / ((2r - 1) delta + 2r - 3) - 1, diameter of the
/// (2r-1)-colorable family refuting the even-clique conjecture.
Rational counterexample_family_diameter(std::int64_t r, std::int64_t n, std::int64_t delta);

struct BoundDerivation {
  std::int64_t order = 0;       // n = sum of clump weights
  std::int64_t min_degree = 0;  // min over clumps of neighboring weight sums
  Rational dual_total;
  Rational bound;
  bool holds = false;  // D <= diameter_bound(n, min_degree, k)
};

/// Weak duality on a weighted clump graph: asserts n >= delta * sum(u) and
/// checks the resulting diameter bound. Throws if u is infeasible.
BoundDerivation derive_bound_from_weighting(const ClumpGraph& weighted, const DualWeighting& u);

/// "p/q" per clump, layers separated by '|', aligned with format_layers.
std::string format_weighting(const DualWeighting& u);

}  // namespace clumpdiam
