#include "clumpdiam/weighting.hpp"

namespace clumpdiam {

DualWeighting::DualWeighting(const ClumpGraph& h)
    : k_(h.k()), layers_(h.layers()), u_(h.layers().size(), std::vector<Rational>(h.k())) {}

const Rational& DualWeighting::at(int layer, int color) const {
  if (layer < 0 || layer > depth() || !has_color(layers_[layer], color))
    throw std::out_of_range("weighting has no such clump");
  return u_[layer][color];
}

void DualWeighting::set(int layer, int color, Rational value) {
  if (layer < 0 || layer > depth() || !has_color(layers_[layer], color))
    throw std::out_of_range("weighting has no such clump");
  if (value.sign() < 0) throw std::invalid_argument("dual weights must be nonnegative");
  u_[layer][color] = value;
}

Rational DualWeighting::layer_total(int layer) const {
  Rational t;
  if (layer < 0 || layer > depth()) return t;
  for (int c = 0; c < k_; ++c)
    if (has_color(layers_[layer], c)) t += u_[layer][c];
  return t;
}

Rational DualWeighting::total() const {
  Rational t;
  for (int i = 0; i <= depth(); ++i) t += layer_total(i);
  return t;
}

Rational DualWeighting::neighbor_sum(const Clump& x) const {
  Rational t;
  for (int j = x.layer - 1; j <= x.layer + 1; ++j) {
    if (j < 0 || j > depth()) continue;
    for (int c = 0; c < k_; ++c)
      if (c != x.color && has_color(layers_[j], c)) t += u_[j][c];
  }
  return t;
}

Rational scheme_layer_average(int k) { return Rational(k, 3 * k - 2); }

DualWeighting scheme_weights(const ClumpGraph& h, const SegmentPartition& p) {
  const int k = h.k();
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  const auto core = compute_core_profile(h);
  const Rational q(3 * k - 2);
  // Type 1/2 small layers strictly inside the segment are "interior".
  const Rational type1_big = Rational(2) / q;
  const Rational small_inner = Rational(k + 2) / (Rational(2) * q);
  const Rational type2_big = Rational(1, 2 * (k - 1));
  const Rational type2_end = Rational(3 * k + 2) / (Rational(4) * q);

  DualWeighting u(h.unweighted());
  for (int i = 0; i <= h.depth(); ++i) {
    const Segment& seg = p.segment_of(i);
    const int size = h.layer_size(i);
    const int core_size = set_size(core.core[i]);
    for (int c = 0; c < k; ++c) {
      if (!has_color(h.layer(i), c)) continue;
      Rational w;
      switch (seg.type) {
        case SegmentType::One:
          w = size == k - 1 ? type1_big : small_inner;
          break;
        case SegmentType::Two: {
          bool interior = i != seg.start && i != seg.end;
          if (size == k - 1) w = type2_big;
          else if (size == 1 && interior) w = small_inner;
          else w = type2_end;
          break;
        }
        case SegmentType::Three:
          if (2 * size <= k) w = Rational(k) / (q * Rational(size));
          else if (has_color(core.core[i], c)) w = Rational(2) / q;
          else w = Rational(k - 2 * core_size) / (q * Rational(size - core_size));
          break;
      }
      u.set(i, c, w);
    }
  }
  return u;
}

DualWeighting assign_weights(const ClumpGraph& h, const SegmentPartition& p) {
  if (h.k() != 3 && h.k() != 4) throw UnsupportedK(h.k());
  if (!(p == partition_segments(h)))
    throw std::invalid_argument("segment partition does not belong to this clump graph");
  return scheme_weights(h, p);
}

WeightingCheck verify_weighting(const ClumpGraph& h, const DualWeighting& u) {
  if (u.layers() != h.layers() || u.k() != h.k())
    throw std::invalid_argument("weighting is defined on a different clump graph");
  WeightingCheck out;
  out.total = u.total();
  bool first = true;
  for (const Clump& x : h.clumps()) {
    Rational s = u.neighbor_sum(x);
    if (first || s > out.worst_sum) {
      out.worst_sum = s;
      out.worst = x;
      first = false;
    }
    if (s > Rational(1)) out.feasible = false;
  }
  return out;
}

BoundCertificate scheme_certificate(int k) { return {scheme_layer_average(k), Rational(0), k}; }

Rational weak_duality_bound(const BoundCertificate& cert, std::int64_t n, std::int64_t delta) {
  if (n < 1 || delta < 1) throw std::invalid_argument("n and delta must be positive");
  return Rational(n) / (Rational(delta) * cert.average) - Rational(1);
}

namespace {

void check_params(std::int64_t n, std::int64_t delta) {
  if (n < 1 || delta < 1) throw std::invalid_argument("n and delta must be positive");
}

}  // namespace

Rational diameter_bound(std::int64_t n, std::int64_t delta, int k) {
  check_params(n, delta);
  if (k != 3 && k != 4) throw UnsupportedK(k);
  return (Rational(3) - Rational(2, k)) * Rational(n, delta) - Rational(1);
}

Rational previous_diameter_bound(std::int64_t n, std::int64_t delta, int k) {
  check_params(n, delta);
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  return (Rational(3) - Rational(1, k - 1)) * Rational(n, delta) - Rational(1);
}

Rational unrestricted_diameter_bound(std::int64_t n, std::int64_t delta) {
  check_params(n, delta);
  return Rational(3 * n, delta + 1);
}

Rational counterexample_family_diameter(std::int64_t r, std::int64_t n, std::int64_t delta) {
  check_params(n, delta);
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  return Rational((6 * r - 5) * (n - 2), (2 * r - 1) * delta + 2 * r - 3) - Rational(1);
}

BoundDerivation derive_bound_from_weighting(const ClumpGraph& weighted, const DualWeighting& u) {
  if (!weighted.weighted()) throw std::invalid_argument("clump graph needs integer weights");
  auto check = verify_weighting(weighted, u);
  if (!check.feasible) throw std::invalid_argument("dual weighting is infeasible");

  BoundDerivation out;
  bool first = true;
  for (const Clump& x : weighted.clumps()) {
    out.order += weighted.weight(x.layer, x.color);
    std::int64_t deg = 0;
    for (const Clump& y : weighted.neighbors(x)) deg += weighted.weight(y.layer, y.color);
    if (first || deg < out.min_degree) out.min_degree = deg;
    first = false;
  }
  out.dual_total = check.total;
  if (out.min_degree < 1) throw std::invalid_argument("blow-up has an isolated vertex");
  if (Rational(out.order) < Rational(out.min_degree) * out.dual_total)
    throw std::logic_error("weak duality violated: n < delta * sum(u)");
  out.bound = diameter_bound(out.order, out.min_degree, weighted.k());
  out.holds = Rational(weighted.depth()) <= out.bound;
  return out;
}

std::string format_weighting(const DualWeighting& u) {
  std::string s;
  for (int i = 0; i <= u.depth(); ++i) {
    if (i) s += "|";
    bool first = true;
    for (int c = 0; c < u.k(); ++c) {
      if (!has_color(u.layers()[i], c)) continue;
      if (!first) s += ",";
      first = false;
      s += u.at(i, c).str();
    }
  }
  return s;
}

}  // namespace clumpdiam
