#include "clumpdiam/lp.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <sstream>

#include "clumpdiam/weighting.hpp"

namespace clumpdiam {

void LPInstance::validate() const {
  const std::size_t n = objective.size();
  if (rows.size() != row_sense.size() || rows.size() != rhs.size())
    throw std::invalid_argument("LP dimension mismatch: rows, senses and rhs differ in length");
  for (const auto& r : rows)
    if (r.size() != n) throw std::invalid_argument("LP dimension mismatch: row length != variable count");
}

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct TableauOverflow {};

// Checked int64 kernels; a TableauOverflow restarts the solve with BigInt.
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw TableauOverflow{};
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw TableauOverflow{};
  return r;
}
/// (a*b - c*d) / det, exact by construction of the fraction-free pivot.
inline std::int64_t cross_div(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                              std::int64_t det) {
  std::int64_t ab, cd, diff;
  if (!__builtin_mul_overflow(a, b, &ab) && !__builtin_mul_overflow(c, d, &cd) &&
      !__builtin_sub_overflow(ab, cd, &diff))
    return det == 1 ? diff : diff / det;
  __int128 w = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
  w /= det;
  if (w > std::numeric_limits<std::int64_t>::max() || w < std::numeric_limits<std::int64_t>::min())
    throw TableauOverflow{};
  return static_cast<std::int64_t>(w);
}
/// a/b < c/d for b, d > 0.
inline bool ratio_less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}
inline bool ratio_equal(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return static_cast<__int128>(a) * d == static_cast<__int128>(c) * b;
}

inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt cross_div(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                        const BigInt& det) {
  BigInt w = a * b - c * d;
  return det == 1 ? w : BigInt(w / det);
}
inline bool ratio_less(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return a * d < c * b;
}
inline bool ratio_equal(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return a * d == c * b;
}

Rational to_rational(std::int64_t num, std::int64_t den) { return Rational(num, den); }
Rational to_rational(const BigInt& num, const BigInt& den) {
  BigInt g = boost::multiprecision::gcd(num, den);
  BigInt p = num / g, q = den / g;
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (p < lo || p > hi || q < lo || q > hi) throw RationalOverflow("LP value exceeds 64 bits");
  return Rational(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
}

// Fraction-free tableau: the true entry is at(r, c) / det. Row 0 holds the
// objective as z - c.x = 0; rows 1..m hold the constraints with the basic
// column of row r equal to det at basis[r].
template <class Int>
struct Tableau {
  int m = 0;
  int cols = 0;
  std::vector<Int> t;
  Int det = 1;
  std::vector<int> basis;
  std::vector<char> blocked;
  int pivots = 0;

  Tableau(int m_, int cols_) : m(m_), cols(cols_), t(static_cast<std::size_t>(m_ + 1) * (cols_ + 1)),
                               basis(m_ + 1, -1), blocked(cols_, 0) {}

  Int& at(int r, int c) { return t[static_cast<std::size_t>(r) * (cols + 1) + c]; }
  int rhs() const { return cols; }

  void pivot(int r, int s) {
    const Int p = at(r, s);
    for (int i = 0; i <= m; ++i) {
      if (i == r) continue;
      const Int f = at(i, s);
      if (f == 0) {
        if (p == det) continue;
        for (int j = 0; j <= cols; ++j) at(i, j) = cross_div(at(i, j), p, Int(0), Int(0), det);
      } else {
        for (int j = 0; j <= cols; ++j) at(i, j) = cross_div(at(i, j), p, f, at(r, j), det);
      }
    }
    det = p;
    if (det < 0) {
      for (auto& v : t) v = -v;
      det = -det;
    }
    basis[r] = s;
    ++pivots;
  }

  // Bland's rule. Returns -1 at optimality, else the entering column of an
  // unbounded direction.
  int run() {
    for (;;) {
      int s = -1;
      for (int j = 0; j < cols; ++j) {
        if (!blocked[j] && at(0, j) < 0) {
          s = j;
          break;
        }
      }
      if (s < 0) return -1;
      int r = -1;
      for (int i = 1; i <= m; ++i) {
        if (!(at(i, s) > 0)) continue;
        if (r < 0 || ratio_less(at(i, rhs()), at(i, s), at(r, rhs()), at(r, s)) ||
            (ratio_equal(at(i, rhs()), at(i, s), at(r, rhs()), at(r, s)) && basis[i] < basis[r]))
          r = i;
      }
      if (r < 0) return s;
      pivot(r, s);
    }
  }
};

// Instance rewritten as max c.x s.t. A x <= b, x >= 0, every row and the
// objective scaled to integers.
struct IntegerForm {
  int n = 0, m = 0;
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;
  std::vector<std::int64_t> row_scale;  // positive factor applied to row i
  std::int64_t obj_scale = 1;
  std::vector<int> row_sign;  // +1 for <=, -1 for >=
  int obj_sign = 1;           // +1 max, -1 min
};

std::int64_t lcm_den(const std::vector<Rational>& v) {
  std::int64_t l = 1;
  for (const auto& r : v) {
    std::int64_t g = std::gcd(l, r.den());
    l = checked_mul(l / g, r.den());
  }
  return l;
}

std::int64_t to_int(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("expected an integer after scaling");
  return r.num();
}

IntegerForm integer_form(const LPInstance& lp) {
  IntegerForm f;
  f.n = lp.variables();
  f.m = lp.constraints();
  f.obj_sign = lp.sense == Objective::Maximize ? 1 : -1;
  f.obj_scale = lcm_den(lp.objective);
  for (const auto& c : lp.objective) f.c.push_back(to_int(c * Rational(f.obj_scale * f.obj_sign)));
  for (int i = 0; i < f.m; ++i) {
    int sg = lp.row_sense[i] == RowSense::LessEqual ? 1 : -1;
    std::vector<Rational> all = lp.rows[i];
    all.push_back(lp.rhs[i]);
    std::int64_t L = lcm_den(all);
    std::vector<std::int64_t> row;
    for (const auto& v : lp.rows[i]) row.push_back(to_int(v * Rational(L * sg)));
    f.a.push_back(std::move(row));
    f.b.push_back(to_int(lp.rhs[i] * Rational(L * sg)));
    f.row_scale.push_back(L);
    f.row_sign.push_back(sg);
  }
  return f;
}

template <class Int>
LPSolution solve_with(const IntegerForm& f) {
  const int n = f.n, m = f.m;
  bool need_phase1 = false;
  for (auto v : f.b)
    if (v < 0) need_phase1 = true;
  const int art = n + m;
  Tableau<Int> T(m, n + m + (need_phase1 ? 1 : 0));
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j < n; ++j) T.at(i, j) = Int(f.a[i - 1][j]);
    T.at(i, n + i - 1) = Int(1);
    T.at(i, T.rhs()) = Int(f.b[i - 1]);
    T.basis[i] = n + i - 1;
  }

  LPSolution sol;
  auto value_of = [&](const Int& num) { return to_rational(num, T.det); };

  if (need_phase1) {
    for (int i = 1; i <= m; ++i) T.at(i, art) = Int(-1);
    T.at(0, art) = Int(1);
    int r = 1;
    for (int i = 2; i <= m; ++i)
      if (f.b[i - 1] < f.b[r - 1]) r = i;
    T.pivot(r, art);
    T.run();
    if (T.at(0, T.rhs()) < 0) {
      sol.status = LPStatus::Infeasible;
      for (int i = 0; i < m; ++i)
        sol.dual.push_back(value_of(T.at(0, n + i)) * Rational(f.row_scale[i]));
      sol.basis.assign(T.basis.begin() + 1, T.basis.end());
      sol.pivots = T.pivots;
      return sol;
    }
    for (int i = 1; i <= m; ++i) {
      if (T.basis[i] != art) continue;
      for (int j = 0; j < n + m; ++j) {
        if (T.at(i, j) != 0) {
          T.pivot(i, j);
          break;
        }
      }
    }
    T.blocked[art] = 1;
  }

  // Phase 2 objective in terms of the current basis.
  for (int j = 0; j <= T.cols; ++j) T.at(0, j) = Int(0);
  for (int j = 0; j < n; ++j) T.at(0, j) = checked_mul(Int(-f.c[j]), T.det);
  for (int i = 1; i <= m; ++i) {
    int bv = T.basis[i];
    if (bv >= n || f.c[bv] == 0) continue;
    for (int j = 0; j <= T.cols; ++j)
      T.at(0, j) = checked_add(T.at(0, j), checked_mul(Int(f.c[bv]), T.at(i, j)));
  }

  const int entering = T.run();
  sol.x.assign(n, Rational(0));
  for (int i = 1; i <= m; ++i)
    if (T.basis[i] < n) sol.x[T.basis[i]] = value_of(T.at(i, T.rhs()));
  sol.basis.assign(T.basis.begin() + 1, T.basis.end());
  sol.pivots = T.pivots;

  if (entering >= 0) {
    sol.status = LPStatus::Unbounded;
    sol.ray.assign(n, Rational(0));
    if (entering < n) sol.ray[entering] = Rational(1);
    for (int i = 1; i <= m; ++i)
      if (T.basis[i] < n) sol.ray[T.basis[i]] = -value_of(T.at(i, entering));
    return sol;
  }

  sol.status = LPStatus::Optimal;
  const Rational scaled_value = value_of(T.at(0, T.rhs()));
  sol.value = scaled_value / Rational(f.obj_scale) * Rational(f.obj_sign);
  for (int i = 0; i < m; ++i) {
    // Multiplier of the original row in the max-form convention, then the
    // sign flip for minimization.
    Rational y = value_of(T.at(0, n + i)) * Rational(f.row_scale[i]) / Rational(f.obj_scale);
    y = y * Rational(f.row_sign[i]) * Rational(f.obj_sign);
    sol.dual.push_back(y);
  }
  return sol;
}

}  // namespace

LPSolution simplex_solve(const LPInstance& lp) {
  lp.validate();
  IntegerForm f;
  try {
    f = integer_form(lp);
  } catch (const TableauOverflow&) {
    throw RationalOverflow("LP coefficients too large to scale to 64-bit integers");
  }
  try {
    return solve_with<std::int64_t>(f);
  } catch (const TableauOverflow&) {
    return solve_with<BigInt>(f);
  }
}

CertificateCheck check_certificate(const LPInstance& lp, const LPSolution& sol) {
  lp.validate();
  const int n = lp.variables(), m = lp.constraints();
  const bool maximize = lp.sense == Objective::Maximize;
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  auto row_dot = [&](int i, const std::vector<Rational>& v) {
    Rational s;
    for (int j = 0; j < n; ++j) s += lp.rows[i][j] * v[j];
    return s;
  };
  auto norm_sign = [&](int i) { return lp.row_sense[i] == RowSense::LessEqual ? 1 : -1; };
  auto check_primal = [&](const std::vector<Rational>& x) -> std::optional<std::string> {
    if (static_cast<int>(x.size()) != n) return "point has the wrong dimension";
    for (int j = 0; j < n; ++j)
      if (x[j].sign() < 0) return "x_" + std::to_string(j) + " < 0";
    for (int i = 0; i < m; ++i) {
      Rational lhs = row_dot(i, x);
      bool ok = lp.row_sense[i] == RowSense::LessEqual ? lhs <= lp.rhs[i] : lhs >= lp.rhs[i];
      if (!ok) return "row " + std::to_string(i) + " violated";
    }
    return std::nullopt;
  };

  switch (sol.status) {
    case LPStatus::Optimal: {
      if (auto e = check_primal(sol.x)) return fail(*e);
      Rational obj;
      for (int j = 0; j < n; ++j) obj += lp.objective[j] * sol.x[j];
      if (obj != sol.value) return fail("objective at x differs from the reported value");
      if (static_cast<int>(sol.dual.size()) != m) return fail("dual has the wrong dimension");
      // Move to max-form with <= rows: multipliers must be nonnegative.
      Rational dual_obj;
      std::vector<Rational> reduced(n);
      for (int i = 0; i < m; ++i) {
        Rational y = maximize ? sol.dual[i] : -sol.dual[i];
        Rational yn = y * Rational(norm_sign(i));
        if (yn.sign() < 0) return fail("dual multiplier of row " + std::to_string(i) + " has the wrong sign");
        for (int j = 0; j < n; ++j) reduced[j] += y * lp.rows[i][j];
        dual_obj += y * lp.rhs[i];
      }
      for (int j = 0; j < n; ++j) {
        Rational c = maximize ? lp.objective[j] : -lp.objective[j];
        if (reduced[j] < c) return fail("dual constraint for x_" + std::to_string(j) + " violated");
      }
      Rational primal_obj = maximize ? sol.value : -sol.value;
      if (dual_obj != primal_obj) return fail("dual objective differs from the primal value");
      return {};
    }
    case LPStatus::Unbounded: {
      if (auto e = check_primal(sol.x)) return fail(*e);
      if (static_cast<int>(sol.ray.size()) != n) return fail("ray has the wrong dimension");
      Rational gain;
      for (int j = 0; j < n; ++j) {
        if (sol.ray[j].sign() < 0) return fail("ray component negative");
        gain += lp.objective[j] * sol.ray[j];
      }
      for (int i = 0; i < m; ++i)
        if ((row_dot(i, sol.ray) * Rational(norm_sign(i))).sign() > 0)
          return fail("ray leaves row " + std::to_string(i));
      if ((maximize ? gain.sign() : -gain.sign()) <= 0) return fail("ray does not improve the objective");
      return {};
    }
    case LPStatus::Infeasible: {
      if (static_cast<int>(sol.dual.size()) != m) return fail("Farkas vector has the wrong dimension");
      std::vector<Rational> comb(n);
      Rational rhs;
      for (int i = 0; i < m; ++i) {
        if (sol.dual[i].sign() < 0) return fail("Farkas multiplier negative");
        Rational z = sol.dual[i] * Rational(norm_sign(i));
        for (int j = 0; j < n; ++j) comb[j] += z * lp.rows[i][j];
        rhs += z * lp.rhs[i];
      }
      for (int j = 0; j < n; ++j)
        if (comb[j].sign() < 0) return fail("Farkas combination negative at x_" + std::to_string(j));
      if (rhs.sign() >= 0) return fail("Farkas combination has nonnegative right-hand side");
      return {};
    }
  }
  return fail("unknown status");
}

namespace {

LPInstance neighborhood_lp(const ClumpGraph& h, std::int64_t delta, bool dual) {
  if (delta < 1) throw std::invalid_argument("delta must be at least 1");
  const auto clumps = h.clumps();
  const int n = static_cast<int>(clumps.size());
  LPInstance lp;
  lp.sense = dual ? Objective::Maximize : Objective::Minimize;
  lp.objective.assign(n, Rational(dual ? delta : 1));
  for (int x = 0; x < n; ++x) {
    std::vector<Rational> row(n);
    for (int y = 0; y < n; ++y)
      if (h.adjacent(clumps[x], clumps[y])) row[y] = Rational(1);
    lp.rows.push_back(std::move(row));
    lp.row_sense.push_back(dual ? RowSense::LessEqual : RowSense::GreaterEqual);
    lp.rhs.push_back(Rational(dual ? 1 : delta));
  }
  return lp;
}

}  // namespace

LPInstance build_dual_lp(const ClumpGraph& h, std::int64_t delta) { return neighborhood_lp(h, delta, true); }
LPInstance build_primal_lp(const ClumpGraph& h, std::int64_t delta) { return neighborhood_lp(h, delta, false); }

DualityReport duality_report(const ClumpGraph& h, std::int64_t delta) {
  DualityReport rep;
  const auto primal_lp = build_primal_lp(h, delta);
  const auto dual_lp = build_dual_lp(h, delta);
  rep.primal = simplex_solve(primal_lp);
  rep.dual = simplex_solve(dual_lp);
  rep.certified = check_certificate(primal_lp, rep.primal).ok && check_certificate(dual_lp, rep.dual).ok;
  rep.strong_duality = rep.primal.status == LPStatus::Optimal && rep.dual.status == LPStatus::Optimal &&
                       rep.primal.value == rep.dual.value;
  if ((h.k() == 3 || h.k() == 4) && validate_strongly_canonical(h.unweighted()).verdict()) {
    rep.scheme_value = Rational(delta) * Rational(h.depth() + 1) * scheme_layer_average(h.k());
    rep.scheme_below_dual = rep.dual.status == LPStatus::Optimal && rep.dual.value >= *rep.scheme_value;
  }
  return rep;
}

std::string format_lp(const LPInstance& lp) {
  lp.validate();
  std::ostringstream os;
  os << "lp " << (lp.sense == Objective::Maximize ? "max" : "min") << " " << lp.variables() << " "
     << lp.constraints() << "\nobj";
  for (const auto& c : lp.objective) os << " " << c;
  os << "\n";
  for (int i = 0; i < lp.constraints(); ++i) {
    os << "row " << (lp.row_sense[i] == RowSense::LessEqual ? "<=" : ">=") << " " << lp.rhs[i];
    for (const auto& a : lp.rows[i]) os << " " << a;
    os << "\n";
  }
  return os.str();
}

LPInstance parse_lp(const std::string& text) {
  std::istringstream in(text);
  std::string tok, sense;
  int n = -1, m = -1;
  if (!(in >> tok >> sense >> n >> m) || tok != "lp" || (sense != "max" && sense != "min") || n < 0 || m < 0)
    throw std::invalid_argument("expected header 'lp max|min <n> <m>'");
  LPInstance lp;
  lp.sense = sense == "max" ? Objective::Maximize : Objective::Minimize;
  if (!(in >> tok) || tok != "obj") throw std::invalid_argument("expected 'obj' line");
  for (int j = 0; j < n; ++j) {
    if (!(in >> tok)) throw std::invalid_argument("objective too short");
    lp.objective.push_back(Rational::parse(tok));
  }
  for (int i = 0; i < m; ++i) {
    std::string row, rs, b;
    if (!(in >> row >> rs >> b) || row != "row" || (rs != "<=" && rs != ">="))
      throw std::invalid_argument("expected 'row <=|>= b ...' line");
    lp.row_sense.push_back(rs == "<=" ? RowSense::LessEqual : RowSense::GreaterEqual);
    lp.rhs.push_back(Rational::parse(b));
    std::vector<Rational> r;
    for (int j = 0; j < n; ++j) {
      if (!(in >> tok)) throw std::invalid_argument("row too short");
      r.push_back(Rational::parse(tok));
    }
    lp.rows.push_back(std::move(r));
  }
  if (in >> tok) throw std::invalid_argument("trailing data after the last row");
  return lp;
}

}  // namespace clumpdiam
