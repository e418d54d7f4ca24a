#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "clumpdiam/clump.hpp"
#include "clumpdiam/rational.hpp"

namespace clumpdiam {

/// Ways the segment weighting can fail on a strongly canonical clump graph.
enum class FailureKind { StructureViolation, TotalMismatch, InfeasibleVertex };
std::string to_string(FailureKind kind);

struct SchemeFailure {
  FailureKind kind = FailureKind::StructureViolation;
  /// First offending layer: the structural layer, the start of the first
  /// segment whose weight is off (D when only the grand total is), or the
  /// layer of the first overloaded clump.
  int layer = -1;
  friend bool operator==(const SchemeFailure&, const SchemeFailure&) = default;
};

/// Everything the exhaustive sweep checks on one clump graph.
struct GraphAudit {
  bool lemma_violation = false;     // one of the six per-layer facts valid for every k
  bool big_core_violation = false;  // big layers with |S| != k-1 (k in {3, 4} only)
  bool weighted = false;            // segments were formed and weights evaluated
  bool segment_total_mismatch = false;
  bool total_mismatch = false;
  bool infeasible = false;
  bool tight_violation = false;  // a neighbor sum != 1 where equality is expected
  int tight_checks = 0;          // layers where equality is expected
  Rational max_neighbor_sum;
  std::vector<SchemeFailure> failures;  // ordered by FailureKind

  bool defective() const {
    return lemma_violation || big_core_violation || tight_violation || !failures.empty();
  }
  friend bool operator==(const GraphAudit&, const GraphAudit&) = default;
};

/// Library-path audit of one strongly canonical clump graph. With
/// weights == false only the structural checks run.
GraphAudit audit_graph(const ClumpGraph& h, bool weights = true);

struct DepthStats {
  std::uint64_t graphs = 0;
  std::uint64_t labeled = 0;  // sum of orbit sizes: labeled graphs covered
  std::uint64_t lemma_violations = 0;
  std::uint64_t big_core_violations = 0;
  std::uint64_t structure_violations = 0;
  std::uint64_t weighted_graphs = 0;
  std::uint64_t segment_total_mismatches = 0;
  std::uint64_t total_mismatches = 0;
  std::uint64_t infeasible = 0;
  std::uint64_t tight_violations = 0;
  std::uint64_t tight_checks = 0;
  std::uint64_t scheme_failures = 0;  // graphs with at least one SchemeFailure
  Rational max_neighbor_sum;

  void add(const GraphAudit& a, std::uint64_t orbit);
  void merge(const DepthStats& o);
  friend bool operator==(const DepthStats&, const DepthStats&) = default;
};

struct SweepWitness {
  std::vector<ColorSet> layers;
  GraphAudit audit;
  friend bool operator==(const SweepWitness&, const SweepWitness&) = default;
};

enum class WitnessFilter { AnyDefect, SchemeFailure };

struct SweepOptions {
  int k = 4;
  int d_min = 2;
  int d_max = 2;
  bool weights = true;
  std::size_t max_witnesses = 16;
  WitnessFilter filter = WitnessFilter::AnyDefect;
  /// Stop once max_witnesses are found; requires d_min == d_max so the
  /// witnesses are the lexicographically first ones.
  bool stop_at_limit = false;
  int workers = 0;  // 0: OpenMP default
};

struct SweepResult {
  int k = 0;
  int d_min = 0;
  std::vector<DepthStats> by_depth;  // index D - d_min
  /// First witnesses ordered by depth, then lexicographically.
  std::vector<SweepWitness> witnesses;
  bool complete = true;

  const DepthStats& at(int D) const { return by_depth.at(static_cast<std::size_t>(D - d_min)); }
  DepthStats totals() const;
};

/// Denominator of the kernel's fixed-point weights: every weight of the
/// scheme for this k is an integer multiple of 1/N.
std::int64_t sweep_denominator(int k);

/// Exhaustive audit of every strongly canonical clump graph (one per color
/// permutation class) with k colors and d_min <= D <= d_max. Incremental
/// depth-first walk in fixed-point integers, split across OpenMP threads at
/// a shallow prefix depth.
SweepResult sweep_kernel(const SweepOptions& opt);

/// Same result from for_each_strongly_canonical and audit_graph, serially.
SweepResult sweep_reference(const SweepOptions& opt);

struct LayerFacts {
  bool lemma_violation = false;     // any of the six facts valid for every k
  bool big_core_violation = false;  // big layer with |S| != k-1, k in {3, 4}
};

/// The per-layer facts of the middle layer of C_{i-2}..C_{i+2} (zero masks
/// outside the graph); first and last mark i = 0 and i = D.
LayerFacts layer_facts(const std::array<ColorSet, 5>& window, int k, bool first, bool last);

/// Per-depth counts of graphs, labeled graphs and per-layer fact violations
/// (lemma_violations, big_core_violations) over the same family as the
/// kernel. Each fact only reads five consecutive layers, so walks sharing
/// their last four layers and block-start mask are advanced together; every
/// graph is still counted individually. Other DepthStats fields stay zero.
SweepResult lemma_census(int k, int d_min, int d_max);

}  // namespace clumpdiam
