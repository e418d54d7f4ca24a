#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clumpdiam/clump.hpp"
#include "clumpdiam/graph.hpp"
#include "clumpdiam/rational.hpp"
#include "clumpdiam/sweep.hpp"

namespace clumpdiam {

/// Largest order for which connected graphs are enumerated.
inline constexpr int kMaxEnumerationOrder = 9;

/// Largest column-order adjacency bitstring (pairs (0,1), (0,2), (1,2),
/// (0,3), ... read as one binary number) over vertex orders that list the
/// cells of the refined degree partition in a fixed order.
std::uint64_t canonical_code(const SimpleGraph& g);

/// Independent invariant for cross-checks: smallest row-order bitstring over
/// all n! vertex orders. Requires n <= 8.
std::uint64_t brute_canonical_code(const SimpleGraph& g);

/// Graph on n vertices whose column-order bitstring is code.
SimpleGraph graph_from_code(int n, std::uint64_t code);

/// One graph per isomorphism class of connected graphs on n vertices
/// (1 <= n <= 9), relabeled to its canonical order and sorted by canonical
/// code. Built by adding a vertex to every class on n - 1 vertices.
std::vector<SimpleGraph> enumerate_connected_graphs(int n, int workers = 0);

struct ExtremalRow {
  int k = 0;
  int n = 0;
  int delta = 0;
  std::size_t pool = 0;  // connected graphs with chi <= k and min degree >= delta
  int max_diameter = 0;
  SimpleGraph witness;  // first graph in enumeration order reaching max_diameter
  std::optional<Rational> bound;           // diameter_bound(n, delta, k), k in {3, 4}
  std::optional<std::int64_t> bound_floor;

  bool within_bound() const { return !bound_floor || max_diameter <= *bound_floor; }
};

/// Largest diameter among connected k-colorable graphs of order n with
/// minimum degree at least delta, for 2 <= n <= n_max and each delta.
/// (n, delta) pairs without any such graph produce no row.
std::vector<ExtremalRow> extremal_table(int k, int n_max, const std::vector<int>& deltas, int workers = 0);

struct FailureRecord {
  ClumpGraph graph;
  std::vector<SchemeFailure> failures;
};

struct FailureSearchResult {
  int k = 0;
  int d_max = 0;
  std::vector<FailureRecord> records;  // by depth, then lexicographically
  /// Per scanned depth (from 2); counts are partial for the depth where the
  /// witness limit was reached.
  std::vector<DepthStats> by_depth;
  bool complete = true;  // every depth up to d_max was fully scanned
};

/// Applies the segment weighting verbatim to every strongly canonical clump
/// graph with 2 <= D <= d_max, depth by depth, and returns the graphs where a
/// structural clause, a segment total, or a neighbor sum fails. Stops after
/// max_witnesses records (0: no limit).
FailureSearchResult scheme_failure_search(int k, int d_max, std::size_t max_witnesses = 16, int workers = 0);

}  // namespace clumpdiam
