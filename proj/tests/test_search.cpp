#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "clumpdiam/search.hpp"
#include "clumpdiam/weighting.hpp"

using namespace clumpdiam;

namespace {

std::vector<int> degree_sequence(const SimpleGraph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

// Classes of all labeled connected graphs on n vertices, told apart by the
// brute-force code.
std::size_t brute_class_count(int n) {
  std::set<std::uint64_t> codes;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    SimpleGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1) g.add_edge(u, v);
    if (is_connected(g)) codes.insert(brute_canonical_code(g));
  }
  return codes.size();
}

}  // namespace

TEST_CASE("enumerate_connected_graphs: small orders by hand") {
  CHECK(enumerate_connected_graphs(1).size() == 1);
  const auto three = enumerate_connected_graphs(3);
  REQUIRE(three.size() == 2);
  std::multiset<std::size_t> edges;
  for (const auto& g : three) edges.insert(g.edge_count());
  CHECK(edges == std::multiset<std::size_t>{2, 3});

  // P4, K1,3, C4, paw, diamond, K4
  std::multiset<std::vector<int>> seen;
  for (const auto& g : enumerate_connected_graphs(4)) seen.insert(degree_sequence(g));
  CHECK(seen == std::multiset<std::vector<int>>{
                    {1, 1, 2, 2}, {1, 1, 1, 3}, {2, 2, 2, 2}, {1, 2, 2, 3}, {2, 2, 3, 3}, {3, 3, 3, 3}});
}

TEST_CASE("enumerate_connected_graphs: class counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) CHECK(enumerate_connected_graphs(n).size() == expected[n - 1]);
  CHECK(enumerate_connected_graphs(7, 1).size() == enumerate_connected_graphs(7, 4).size());
  CHECK_THROWS(enumerate_connected_graphs(10));
}

TEST_CASE("two independent canonical forms agree") {
  for (int n = 2; n <= 6; ++n) CHECK(brute_class_count(n) == enumerate_connected_graphs(n).size());
  for (int n : {7}) {
    std::set<std::uint64_t> brute;
    for (const auto& g : enumerate_connected_graphs(n)) brute.insert(brute_canonical_code(g));
    CHECK(brute.size() == 853);
  }
}

TEST_CASE("canonical_code is a relabeling invariant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const SimpleGraph g = oracle::random_connected(rng, n, 0.3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SimpleGraph h = oracle::relabel(g, perm);
    CHECK(canonical_code(g) == canonical_code(h));
    if (n <= 7) CHECK(brute_canonical_code(g) == brute_canonical_code(h));
    // the code decodes to an isomorphic graph
    CHECK(canonical_code(graph_from_code(n, canonical_code(g))) == canonical_code(g));
  }
  // non-isomorphic graphs with equal degree sequences: C6 and two triangles joined by an edge
  CHECK(canonical_code(oracle::cycle(6)) !=
        canonical_code(oracle::make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}})));
}

TEST_CASE("extremal_table") {
  const auto rows = extremal_table(3, 7, {1, 2, 3});
  const ExtremalRow* r72 = nullptr;
  const ExtremalRow* r52 = nullptr;
  for (const auto& r : rows) {
    CHECK(r.within_bound());
    CHECK(diameter(r.witness) == r.max_diameter);
    CHECK(r.witness.min_degree() >= r.delta);
    CHECK(chromatic_number(r.witness, 3).has_value());
    if (r.n == 7 && r.delta == 2) r72 = &r;
    if (r.n == 5 && r.delta == 2) r52 = &r;
  }
  REQUIRE(r72);
  CHECK(r72->max_diameter >= 4);
  CHECK(*r72->bound_floor == 7);
  REQUIRE(r52);
  CHECK(*r52->bound_floor == 4);
  CHECK(r52->max_diameter <= 4);

  // the layered construction x - {a, b} - c - {d, e} - f has diameter 4
  const SimpleGraph layered = oracle::make_graph(
      7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(diameter(layered) == 4);
  CHECK(layered.min_degree() == 2);
  CHECK(chromatic_number(layered, 3) == 3);

  for (const auto& r : extremal_table(5, 6, {1, 2})) CHECK_FALSE(r.bound.has_value());
  CHECK_THROWS(extremal_table(6, 5, {1}));
}

TEST_CASE("scheme_failure_search") {
  const auto k3 = scheme_failure_search(3, 8);
  CHECK(k3.records.empty());
  CHECK(k3.complete);
  const auto k4 = scheme_failure_search(4, 6);
  CHECK(k4.records.empty());
  CHECK(k4.complete);

  const auto k5 = scheme_failure_search(5, 4, 5);
  REQUIRE_FALSE(k5.records.empty());
  CHECK(k5.records.size() <= 5);
  for (const auto& r : k5.records) {
    CHECK_FALSE(r.failures.empty());
    CHECK(validate_strongly_canonical(r.graph).verdict());
  }

  // depth 2 at k = 5: small, fully scanned, and order-stable
  const auto a = scheme_failure_search(5, 2, 0, 1);
  const auto b = scheme_failure_search(5, 2, 0, 3);
  CHECK(a.complete);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].graph == b.records[i].graph);
    CHECK(a.records[i].failures == b.records[i].failures);
  }
}
