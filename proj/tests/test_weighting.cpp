#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "clumpdiam/weighting.hpp"

using namespace clumpdiam;

namespace {

DualWeighting weights_of(const ClumpGraph& h) { return assign_weights(h, partition_segments(h)); }

}  // namespace

TEST_CASE("assign_weights: Type 1, k = 3") {
  const auto h = parse_clump_inline("0|1,2|0", 3);
  const auto u = weights_of(h);
  CHECK(u.at(0, 0) == Rational(5, 14));
  CHECK(u.at(1, 1) == Rational(2, 7));
  CHECK(u.at(1, 2) == Rational(2, 7));
  CHECK(u.at(2, 0) == Rational(5, 14));
  CHECK(u.total() == Rational(9, 7));
  CHECK(u.neighbor_sum({1, 1}) == Rational(1));
  const auto check = verify_weighting(h, u);
  CHECK(check.feasible);
  CHECK(check.worst_sum == Rational(1));
  CHECK(format_weighting(u) == "5/14|2/7,2/7|5/14");
}

TEST_CASE("assign_weights: singleton chain") {
  const auto h = parse_clump_inline("0|1|0", 3);
  const auto u = weights_of(h);
  for (int i = 0; i < 3; ++i) CHECK(u.layer_total(i) == Rational(3, 7));
  CHECK(u.total() == Rational(9, 7));
  CHECK(u.neighbor_sum({1, 1}) == Rational(6, 7));
  CHECK(verify_weighting(h, u).feasible);
}

TEST_CASE("assign_weights: Type 2, k = 4, s = 2") {
  const auto h = parse_clump_inline("0|1,2,3|0|1,2,3|0", 4);
  const auto u = weights_of(h);
  CHECK(u.at(0, 0) == Rational(7, 20));
  CHECK(u.at(4, 0) == Rational(7, 20));
  for (int c = 1; c <= 3; ++c) {
    CHECK(u.at(1, c) == Rational(1, 6));
    CHECK(u.at(3, c) == Rational(1, 6));
  }
  CHECK(u.at(2, 0) == Rational(3, 10));
  CHECK(u.total() == Rational(2));
  CHECK(u.neighbor_sum({1, 1}) == Rational(59, 60));
  // the closed form ((11k - 4)(k - 1) - 2) / (4 (3k - 2)(k - 1)) at k = 4
  CHECK(Rational((11 * 4 - 4) * 3 - 2, 4 * 10 * 3) == Rational(59, 60));
  CHECK(verify_weighting(h, u).feasible);
}

TEST_CASE("assign_weights only covers k = 3, 4") {
  const auto h = parse_clump_inline("0|1,2|0", 5);
  CHECK_THROWS_AS(assign_weights(h, partition_segments(h)), UnsupportedK);
  CHECK_NOTHROW(scheme_weights(h, partition_segments(h)));
}

TEST_CASE("weighting totals and feasibility over all k = 3, 4 graphs up to D = 7") {
  for (int k : {3, 4})
    for (int D = 2; D <= 7; ++D)
      for_each_strongly_canonical(k, D, [&](const ClumpGraph& h) {
        const auto u = weights_of(h);
        const auto c = verify_weighting(h, u);
        if (c.total != Rational((D + 1) * k, 3 * k - 2) || !c.feasible) FAIL_CHECK(format_layers(h));
      });
}

TEST_CASE("diameter bounds") {
  CHECK(diameter_bound(20, 4, 4) == Rational(23, 2));
  CHECK(diameter_bound(21, 3, 3) == Rational(46, 3));
  for (int d = 1; d <= 9; ++d) CHECK(diameter_bound(3 * d, d, 3) == Rational(6));
  CHECK_THROWS_AS(diameter_bound(10, 2, 5), UnsupportedK);
  CHECK_THROWS(diameter_bound(10, 0, 3));
  CHECK(previous_diameter_bound(20, 4, 4) == Rational(37, 3));
  CHECK(unrestricted_diameter_bound(20, 4) == Rational(12));
  CHECK(counterexample_family_diameter(2, 10, 3) == Rational(23, 5));
  CHECK(weak_duality_bound(scheme_certificate(4), 20, 4) == Rational(23, 2));
  CHECK(weak_duality_bound(scheme_certificate(3), 21, 3) == Rational(46, 3));
}

TEST_CASE("derive_bound_from_weighting") {
  const auto t1 = parse_clump_inline("0|1,2|0", 3, "1|1,1|1");
  auto d = derive_bound_from_weighting(t1, weights_of(t1.unweighted()));
  CHECK(d.order == 4);
  CHECK(d.min_degree == 2);
  CHECK(d.dual_total == Rational(9, 7));
  CHECK(d.bound == Rational(11, 3));
  CHECK(d.holds);

  const auto chain = parse_clump_inline("0|1|0", 3, "1|2|2");
  d = derive_bound_from_weighting(chain, weights_of(chain.unweighted()));
  CHECK(d.order == 5);
  CHECK(d.min_degree == 2);
  CHECK(d.bound == Rational(29, 6));
  CHECK(d.holds);

  const auto thin = parse_clump_inline("0|1|0", 3, "1|1|1");
  d = derive_bound_from_weighting(thin, weights_of(thin.unweighted()));
  CHECK(d.min_degree == 1);
  CHECK(Rational(thin.clump_count()) >= d.dual_total);

  DualWeighting heavy(thin.unweighted());
  heavy.set(1, 1, Rational(2));
  CHECK_THROWS(derive_bound_from_weighting(thin, heavy));
}

TEST_CASE("weak duality on random weighted clump graphs") {
  std::mt19937_64 rng(5);
  std::vector<ClumpGraph> pool;
  for (int k : {3, 4})
    for (int D = 2; D <= 6; ++D)
      for (auto& h : enumerate_strongly_canonical(k, D)) pool.push_back(h);
  for (int t = 0; t < 500; ++t) {
    const ClumpGraph h = pool[rng() % pool.size()];
    std::vector<std::vector<long>> w(h.depth() + 1, std::vector<long>(h.k(), 0));
    for (const Clump& x : h.clumps()) w[x.layer][x.color] = x.layer == 0 ? 1 : 1 + static_cast<long>(rng() % 4);
    const ClumpGraph g = h.with_weights(w);
    const auto d = derive_bound_from_weighting(g, weights_of(h));
    CHECK(Rational(d.order) >= Rational(d.min_degree) * d.dual_total);
    CHECK(d.holds);
    CHECK(diameter(blow_up(g).graph) == h.depth());
  }
}
