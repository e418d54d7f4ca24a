#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clumpdiam/clump.hpp"
#include "clumpdiam/rational.hpp"

namespace clumpdiam {

enum class Objective { Maximize, Minimize };
enum class RowSense { LessEqual, GreaterEqual };

/// Linear program over nonnegative variables with exact coefficients.
struct LPInstance {
  Objective sense = Objective::Maximize;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<RowSense> row_sense;
  std::vector<Rational> rhs;

  int variables() const { return static_cast<int>(objective.size()); }
  int constraints() const { return static_cast<int>(rows.size()); }
  /// Throws std::invalid_argument on inconsistent dimensions.
  void validate() const;
};

enum class LPStatus { Optimal, Unbounded, Infeasible };
std::string to_string(LPStatus s);

/// Solver output with the data needed to certify it.
///
/// Optimal: `x` attains `value`; `dual` holds one multiplier per row. For a
/// maximization y >= 0 on <= rows, y <= 0 on >= rows, A^T y >= c, b.y = value;
/// for a minimization the signs flip and A^T y <= c.
/// Unbounded: `x` is feasible and `ray` >= 0 keeps every row satisfied while
/// improving the objective.
/// Infeasible: `dual` holds z >= 0 over the rows written as <= (>= rows
/// negated) with z^T A >= 0 and z.b < 0.
struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  std::vector<Rational> dual;
  std::vector<Rational> ray;
  /// Basic variables at termination: j < n structural, n + i the slack of row i.
  std::vector<int> basis;
  int pivots = 0;
};

/// Two-phase tableau simplex with Bland's rule in exact integer
/// (fraction-free) arithmetic.
LPSolution simplex_solve(const LPInstance& lp);

struct CertificateCheck {
  bool ok = true;
  std::string detail;
};

/// Re-verifies a solution from the instance alone: feasibility of x, and the
/// dual, ray, or Farkas certificate for the reported status.
CertificateCheck check_certificate(const LPInstance& lp, const LPSolution& sol);

/// max delta * sum u(y) s.t. sum_{y ~ x} u(y) <= 1 for every clump x, u >= 0.
/// Variables follow h.clumps() order.
LPInstance build_dual_lp(const ClumpGraph& h, std::int64_t delta);

/// min sum w(x) s.t. sum_{y ~ x} w(y) >= delta for every clump x, w >= 0.
LPInstance build_primal_lp(const ClumpGraph& h, std::int64_t delta);

struct DualityReport {
  LPSolution primal;
  LPSolution dual;
  /// delta * (D + 1) * k / (3k - 2) when k is 3 or 4.
  std::optional<Rational> scheme_value;
  bool certified = false;         // both certificates re-verified
  bool strong_duality = false;    // both optimal with equal values
  bool scheme_below_dual = true;  // dual optimum >= scheme value
  bool ok() const { return certified && strong_duality && scheme_below_dual; }
};

DualityReport duality_report(const ClumpGraph& h, std::int64_t delta);

/// Text form:
///   lp max|min <n> <m>
///   obj c_1 .. c_n
///   row <=|>= b a_1 .. a_n      (m lines)
std::string format_lp(const LPInstance& lp);
LPInstance parse_lp(const std::string& text);

}  // namespace clumpdiam
