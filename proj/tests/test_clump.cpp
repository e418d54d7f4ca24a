#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "clumpdiam/clump.hpp"

using namespace clumpdiam;

namespace {

bool has_condition(const ValidationReport& r, const std::string& cond, int layer) {
  for (const auto& v : r.violations)
    if (v.condition == cond && v.layer == layer) return true;
  return false;
}

std::vector<ColorSet> permuted(const std::vector<ColorSet>& layers, const std::vector<int>& perm) {
  std::vector<ColorSet> out;
  for (ColorSet s : layers) {
    ColorSet t = 0;
    for (int c = 0; c < 32; ++c)
      if (has_color(s, c)) t |= 1u << perm[c];
    out.push_back(t);
  }
  return out;
}

// Every labeled sequence passing the oracle conditions, grouped by the
// lexicographically least relabeling.
std::map<std::vector<ColorSet>, std::uint64_t> brute_classes(int k, int D) {
  std::map<std::vector<ColorSet>, std::uint64_t> classes;
  const ColorSet full = (1u << k) - 1u;
  std::vector<ColorSet> seq(D + 1, 1);
  std::vector<int> perm(k);
  for (;;) {
    if (oracle::strongly_canonical(k, seq)) {
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<ColorSet> best = seq;
      do best = std::min(best, permuted(seq, perm));
      while (std::next_permutation(perm.begin(), perm.end()));
      ++classes[best];
    }
    int i = 0;
    while (i <= D && seq[i] == full) seq[i++] = 1;
    if (i > D) break;
    ++seq[i];
  }
  return classes;
}

}  // namespace

TEST_CASE("build_clump_graph") {
  const auto p = ColoredLayeredGraph::make(oracle::path(3), 0, {0, 1, 0}, 2);
  const ClumpGraph h = build_clump_graph(p);
  CHECK(h.layers() == std::vector<ColorSet>{1, 2, 1});
  for (const Clump& x : h.clumps()) CHECK(h.weight(x.layer, x.color) == 1);

  const auto c5 = saturate(ColoredLayeredGraph::make(oracle::cycle(5), 0, {0, 1, 0, 2, 1}, 3));
  const ClumpGraph g = build_clump_graph(c5);
  CHECK(g.layers() == std::vector<ColorSet>{0b001, 0b010, 0b101});
  CHECK(g.weight(0, 0) == 1);
  CHECK(g.weight(1, 1) == 2);
  CHECK(g.weight(2, 0) == 1);
  CHECK(g.weight(2, 2) == 1);

  // unsaturated input is rejected
  CHECK_THROWS(build_clump_graph(ColoredLayeredGraph::make(oracle::cycle(5), 0, {0, 1, 0, 2, 1}, 3)));
}

TEST_CASE("blow_up") {
  const ClumpGraph h = parse_clump_inline("0|1|0", 2, "1|2|2");
  const auto g = blow_up(h);
  CHECK(g.order() == 5);
  CHECK(g.graph.degree(0) == 2);
  for (int v : g.layer_vertices(1)) CHECK(g.graph.degree(v) == 3);
  for (int v : g.layer_vertices(2)) CHECK(g.graph.degree(v) == 2);
  CHECK(diameter(g.graph) == 2);
  CHECK(build_clump_graph(g) == h);

  const auto t = blow_up(parse_clump_inline("0|1,2|0", 3, "1|1,1|1"));
  CHECK(t.order() == 4);
  CHECK(t.graph.min_degree() == 2);
  CHECK(diameter(t.graph) == 2);

  // unit weights reproduce the clump adjacency itself
  const ClumpGraph u = parse_clump_inline("0|1,2|0,3|1", 4, "1|1,1|1,1|1");
  const auto b = blow_up(u);
  const auto cl = u.clumps();
  REQUIRE(b.order() == static_cast<int>(cl.size()));
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = 0; j < cl.size(); ++j)
      if (i != j) CHECK(b.graph.has_edge(int(i), int(j)) == u.adjacent(cl[i], cl[j]));

  CHECK_THROWS(blow_up(parse_clump_inline("0|1|0", 2, "2|1|1")));
}

TEST_CASE("validate_canonical") {
  CHECK(validate_canonical(parse_clump_inline("0|1,2|0", 3)).verdict());
  CHECK(has_condition(validate_canonical(parse_clump_inline("0|0,1|2", 3)), "color-count", 0));
  CHECK(has_condition(validate_canonical(parse_clump_inline("0,1,2|0,1|2", 3)), "full-layer", 0));
  CHECK(has_condition(validate_canonical(parse_clump_inline("0|0,1,2,3|1,2", 4)), "one-color-successor", 0));
  CHECK_FALSE(has_condition(validate_canonical(parse_clump_inline("0|1,2,3|0", 4)), "one-color-successor", 0));
  // a repeated color needs |C_i| + max(|C_i-1|, |C_i+1|) >= k
  CHECK(has_condition(validate_canonical(parse_clump_inline("0|1|0|1", 3, "1|2|1|1")), "repeated-color", 1));
  CHECK(validate_canonical(parse_clump_inline("0|1,2|0", 3, "1|2,1|1")).verdict());
}

TEST_CASE("validate_strongly_canonical") {
  CHECK(validate_strongly_canonical(parse_clump_inline("0|1,2|0", 3)).verdict());
  const auto k4 = parse_clump_inline("0|1,2,3|0,1|2|3", 4);
  CHECK_FALSE(has_condition(validate_strongly_canonical(k4), "cross-matching", 2));
  const auto bad = validate_strongly_canonical(parse_clump_inline("0|1|0,2", 3));
  REQUIRE_FALSE(bad.verdict());
  CHECK(has_condition(bad, "end-layer", 2));
  CHECK(bad.violations.back().detail == "|C_D| != 1");
  CHECK(has_condition(validate_strongly_canonical(parse_clump_inline("0|1", 3)), "min-depth", 1));
}

TEST_CASE("enumerate_strongly_canonical: k = 3, D = 2 by hand") {
  const auto all = enumerate_strongly_canonical(3, 2);
  REQUIRE(all.size() == 3);
  CHECK(format_layers(all[0]) == "0|1|0");
  CHECK(format_layers(all[1]) == "0|1|2");
  CHECK(format_layers(all[2]) == "0|1,2|0");
}

TEST_CASE("enumerate_strongly_canonical matches brute force over labeled sequences") {
  for (auto [k, dmax] : {std::pair{3, 6}, std::pair{4, 5}, std::pair{5, 3}}) {
    for (int D = 2; D <= dmax; ++D) {
      CAPTURE(k);
      CAPTURE(D);
      const auto classes = brute_classes(k, D);
      const auto got = enumerate_strongly_canonical(k, D);
      REQUIRE(got.size() == classes.size());
      auto it = classes.begin();
      for (const auto& h : got) {
        CHECK(h.layers() == it->first);
        CHECK(orbit_size(h) == it->second);
        CHECK(validate_strongly_canonical(h).verdict());
        CHECK(canonical_form(h) == h.layers());
        ++it;
      }
    }
  }
}

TEST_CASE("orbit sizes add up to the labeled counts") {
  // k = 3: 15, 42, 132, ...; k = 4 and 5 from the transfer-matrix oracle
  const std::vector<std::uint64_t> k3{15, 42, 132, 447, 1581, 5721, 20940, 77073};
  for (int D = 2; D <= 9; ++D) CHECK(oracle::labeled_count(3, D) == k3[D - 2]);
  CHECK(oracle::labeled_count(5, 2) == 215);
  CHECK(oracle::labeled_count(6, 10) == 27770192888892ull);
  for (auto [k, dmax] : {std::pair{3, 9}, std::pair{4, 7}, std::pair{5, 5}}) {
    for (int D = 2; D <= dmax; ++D) {
      std::uint64_t total = 0;
      for_each_strongly_canonical(k, D, [&](const ClumpGraph& h) { total += orbit_size(h); });
      CHECK(total == oracle::labeled_count(k, D));
    }
  }
}

TEST_CASE("clump text format") {
  const ClumpGraph h = parse_clump_inline("0|1,2|0", 3, "1|2,1|1");
  CHECK(format_layers(h) == "0|1,2|0");
  CHECK(parse_clump_text(format_clump_text(h)) == h);
  CHECK(parse_clump_text("k=3 D=2\n0|1,2|0\n") == h.unweighted());
  CHECK(to_dot(h).find("graph") != std::string::npos);
  CHECK_THROWS(parse_clump_inline("0||0", 3));
  CHECK_THROWS(parse_clump_inline("0|3|0", 3));
  CHECK_THROWS(parse_clump_inline("0|1|0", 3, "1|1"));
  CHECK_THROWS(parse_clump_inline("0|1|0", 3, "1|0|1"));
  CHECK_THROWS(parse_clump_text("k=3 D=3\n0|1|0\n"));
}
