#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "clumpdiam/lp.hpp"
#include "clumpdiam/weighting.hpp"

using namespace clumpdiam;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LPInstance random_lp(std::mt19937_64& rng, int n, int m) {
  std::uniform_int_distribution<int> coef(-4, 6), rhs(-3, 9);
  LPInstance lp;
  lp.sense = rng() % 2 ? Objective::Maximize : Objective::Minimize;
  for (int j = 0; j < n; ++j) lp.objective.push_back(coef(rng));
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < n; ++j) row.push_back(coef(rng));
    lp.rows.push_back(row);
    lp.row_sense.push_back(rng() % 3 ? RowSense::LessEqual : RowSense::GreaterEqual);
    lp.rhs.push_back(rhs(rng));
  }
  return lp;
}

}  // namespace

TEST_CASE("build_dual_lp on the singleton chain") {
  const auto h = parse_clump_inline("0|1|0", 3);
  const LPInstance lp = build_dual_lp(h, 1);
  CHECK(lp.sense == Objective::Maximize);
  CHECK(lp.variables() == 3);
  REQUIRE(lp.constraints() == 3);
  CHECK(lp.rows[0] == std::vector<Rational>{0, 1, 0});
  CHECK(lp.rows[1] == std::vector<Rational>{1, 0, 1});
  CHECK(lp.rows[2] == std::vector<Rational>{0, 1, 0});
  const auto sol = simplex_solve(lp);
  CHECK(sol.status == LPStatus::Optimal);
  CHECK(sol.value == Rational(2));
  CHECK(check_certificate(lp, sol).ok);
}

TEST_CASE("small clump LPs solved by hand") {
  const ClumpGraph two(3, {1u, 2u});
  auto d = simplex_solve(build_dual_lp(two, 1));
  CHECK(d.status == LPStatus::Optimal);
  CHECK(d.value == Rational(2));
  CHECK(d.x == std::vector<Rational>{1, 1});

  const auto p3 = simplex_solve(build_primal_lp(two, 3));
  CHECK(p3.value == Rational(6));
  CHECK(p3.x == std::vector<Rational>{3, 3});

  const ClumpGraph one(3, {1u});
  const LPInstance lone = build_dual_lp(one, 1);
  const auto u = simplex_solve(lone);
  CHECK(u.status == LPStatus::Unbounded);
  CHECK(check_certificate(lone, u).ok);

  const auto chain = parse_clump_inline("0|1|0", 3);
  const LPInstance primal = build_primal_lp(chain, 2);
  const auto p = simplex_solve(primal);
  CHECK(p.status == LPStatus::Optimal);
  CHECK(p.value == Rational(4));
  // (1, 2, 1) is another optimum
  const std::vector<Rational> w{1, 2, 1};
  for (int i = 0; i < primal.constraints(); ++i) CHECK(dot(primal.rows[i], w) >= primal.rhs[i]);
  CHECK(dot(primal.objective, w) == Rational(4));
  // weak duality against the segment weighting
  CHECK(p.value >= Rational(2) * Rational(9, 7));
}

TEST_CASE("duality_report") {
  const auto t1 = parse_clump_inline("0|1,2|0", 3);
  const auto r = duality_report(t1, 1);
  CHECK(r.ok());
  REQUIRE(r.scheme_value.has_value());
  CHECK(*r.scheme_value == Rational(9, 7));
  CHECK(r.dual.value >= Rational(9, 7));
  CHECK(r.primal.value == r.dual.value);

  const auto chain = duality_report(parse_clump_inline("0|1|0", 3), 1);
  CHECK(chain.dual.value == Rational(2));
  CHECK(chain.ok());

  CHECK_FALSE(duality_report(parse_clump_inline("0|1,2|0", 5), 1).scheme_value.has_value());

  for (int D = 2; D <= 5; ++D)
    for_each_strongly_canonical(4, D, [&](const ClumpGraph& h) {
      const auto one = duality_report(h, 1);
      const auto three = duality_report(h, 3);
      CHECK(one.ok());
      CHECK(three.ok());
      CHECK(three.dual.value == Rational(3) * one.dual.value);
    });
}

TEST_CASE("simplex agrees with vertex enumeration on random small LPs") {
  std::mt19937_64 rng(2024);
  int optimal = 0, unbounded = 0, infeasible = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 4);
    const LPInstance lp = random_lp(rng, n, m);
    const auto sol = simplex_solve(lp);
    const auto cert = check_certificate(lp, sol);
    CHECK_MESSAGE(cert.ok, cert.detail);
    const auto best = oracle::vertex_optimum(lp);
    switch (sol.status) {
      case LPStatus::Optimal:
        ++optimal;
        REQUIRE(best.has_value());
        CHECK(sol.value == *best);
        break;
      case LPStatus::Unbounded:
        ++unbounded;
        CHECK(best.has_value());
        break;
      case LPStatus::Infeasible:
        ++infeasible;
        CHECK_FALSE(best.has_value());
        break;
    }
  }
  // the generator exercises every outcome
  CHECK(optimal > 50);
  CHECK(unbounded > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("large coefficients fall back to arbitrary precision") {
  // x1 <= 1 and x2 <= 1 written with coefficients near sqrt(2^63), so the
  // fraction-free tableau products leave 64 bits; the optimum is still 2.
  const std::int64_t a = 3037000493, b = 3037000453;
  LPInstance lp;
  lp.sense = Objective::Maximize;
  lp.objective = {1, 1};
  lp.rows = {{Rational(a), 0}, {0, Rational(b)}, {Rational(a), Rational(b)}};
  lp.row_sense = {RowSense::LessEqual, RowSense::LessEqual, RowSense::LessEqual};
  lp.rhs = {Rational(a), Rational(b), Rational(a + b)};
  const auto sol = simplex_solve(lp);
  CHECK(sol.status == LPStatus::Optimal);
  CHECK(sol.value == Rational(2));
  CHECK(sol.x == std::vector<Rational>{1, 1});
  CHECK(check_certificate(lp, sol).ok);
}

TEST_CASE("check_certificate rejects tampered solutions") {
  const auto chain = parse_clump_inline("0|1|0", 3);
  const LPInstance lp = build_dual_lp(chain, 1);
  auto sol = simplex_solve(lp);
  REQUIRE(check_certificate(lp, sol).ok);
  auto worse = sol;
  worse.value = Rational(3);
  CHECK_FALSE(check_certificate(lp, worse).ok);
  auto infeasible_x = sol;
  infeasible_x.x[1] = Rational(2);
  CHECK_FALSE(check_certificate(lp, infeasible_x).ok);
  auto bad_dual = sol;
  bad_dual.dual.assign(bad_dual.dual.size(), Rational(0));
  CHECK_FALSE(check_certificate(lp, bad_dual).ok);
}

TEST_CASE("LP text format") {
  const LPInstance lp = build_primal_lp(parse_clump_inline("0|1,2|0", 3), 2);
  const std::string text = format_lp(lp);
  const LPInstance back = parse_lp(text);
  CHECK(format_lp(back) == text);
  CHECK(simplex_solve(back).value == simplex_solve(lp).value);
  CHECK_THROWS(parse_lp("lp max 2 1\nobj 1\nrow <= 1 1 1\n"));
  CHECK_THROWS(parse_lp("lp max 1 1\nobj 1\nrow == 1 1\n"));
  LPInstance broken = lp;
  broken.rhs.pop_back();
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
}
