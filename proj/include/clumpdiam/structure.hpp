#pragma once

#include <stdexcept>
#include <vector>

#include "clumpdiam/clump.hpp"

namespace clumpdiam {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Core set S_i per layer: the colors of C_i absent from both neighboring
/// layers, i.e. the clumps adjacent to everything in L_{i-1} and L_{i+1}.
/// A layer is big when 2|S_i| > k.
struct CoreProfile {
  int k = 0;
  std::vector<ColorSet> core;
  std::vector<bool> big;

  int core_size(int i) const {
    return i < 0 || i >= static_cast<int>(core.size()) ? 0 : set_size(core[i]);
  }
  bool is_big(int i) const { return i >= 0 && i < static_cast<int>(big.size()) && big[i]; }
};

/// Core sets from the layer color sets alone (no validity check).
CoreProfile compute_core_profile(const ClumpGraph& h);

/// Core sets of a strongly canonical clump graph; throws std::invalid_argument otherwise.
CoreProfile core_sets(const ClumpGraph& h);

/// Evaluates the seven per-layer structural facts of strongly canonical
/// graphs (the last one only for k in {3, 4}). Any violation is a bug or an
/// invalid input.
ValidationReport check_basic_lemma(const ClumpGraph& h);

enum class SegmentType { One = 1, Two = 2, Three = 3 };

struct Segment {
  SegmentType type = SegmentType::Three;
  int start = 0;
  int end = 0;        // inclusive
  int big_count = 0;  // s for Type 1/2, 0 for Type 3

  int length() const { return end - start + 1; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentPartition {
  std::vector<Segment> segments;

  /// Segment containing layer i.
  const Segment& segment_of(int i) const;
  friend bool operator==(const SegmentPartition&, const SegmentPartition&) = default;
};

/// Chains of big layers spaced exactly two apart become Type 1 (one big
/// layer) or Type 2 (several) segments spanning one layer past each end of
/// the chain; the remaining maximal runs are Type 3. Throws StructureError if
/// the result breaks a segment definition.
SegmentPartition partition_segments(const ClumpGraph& h);

/// Layers inside Type 1/2 segments must satisfy C_j = S_j and |C_j| in {1, k-1}.
/// Holds for k in {3, 4}; for larger k the report carries the witnesses.
ValidationReport check_main_structure(const ClumpGraph& h, const SegmentPartition& p);

}  // namespace clumpdiam
