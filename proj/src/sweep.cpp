#include <omp.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "clumpdiam/sweep.hpp"

namespace clumpdiam {

namespace {

constexpr int kMaxSweepK = 10;
constexpr int kMaxSweepDepth = 24;
constexpr int kPad = 4;
constexpr int kSlots = kMaxSweepDepth + 2 * kPad + 2;
constexpr std::size_t kPrefixTarget = 512;
constexpr std::size_t kChunk = 256;

ColorSet full_mask(int k) { return (1u << k) - 1u; }

// Weights of the scheme scaled by N; indices follow |C_j| and |S_j|.
struct Tables {
  int k = 0;
  ColorSet full = 0;
  std::int64_t N = 0;
  std::int64_t unit = 0;  // k / (3k - 2)
  std::int64_t type1_big = 0, small_inner = 0, type2_big = 0, type2_end = 0, type3_core = 0;
  std::int64_t type3_even[kMaxSweepK + 1] = {};
  std::int64_t type3_rest[kMaxSweepK + 1][kMaxSweepK + 1] = {};
  std::vector<std::vector<ColorSet>> next;
  std::vector<std::uint64_t> orbit;  // indexed by the block-start mask
  std::vector<std::uint8_t> popcount;  // avoids a library call without hardware popcnt

  // Canonical one-color layers that may follow a layer; indexed by the
  // block-start mask and the layer.
  struct Singles {
    int count = 0;
    ColorSet first = 0;
    std::uint64_t orbit_sum = 0;
  };
  std::vector<Singles> singles;

  const Singles& singles_after(ColorSet starts, ColorSet last) const {
    return singles[static_cast<std::size_t>(starts) * (full + 1) + last];
  }

  explicit Tables(int k_) : k(k_), full(full_mask(k_)), N(sweep_denominator(k_)) {
    const std::int64_t q = 3 * k - 2;
    unit = k * N / q;
    type1_big = 2 * N / q;
    small_inner = (k + 2) * N / (2 * q);
    type2_big = N / (2 * (k - 1));
    type2_end = (3 * k + 2) * N / (4 * q);
    type3_core = 2 * N / q;
    for (int c = 1; 2 * c <= k; ++c) type3_even[c] = k * N / (q * c);
    for (int c = 1; c <= k; ++c)
      for (int s = 0; s < c; ++s) type3_rest[c][s] = (k - 2 * s) * N / (q * (c - s));

    popcount.resize(full + 1);
    for (ColorSet m = 0; m <= full; ++m) popcount[m] = static_cast<std::uint8_t>(set_size(m));

    next.resize(full + 1);
    for (ColorSet a = 1; a <= full; ++a)
      for (ColorSet b = 1; b <= full; ++b)
        if (consecutive_compatible(a, b, k)) next[a].push_back(b);

    std::uint64_t fact[kMaxSweepK + 1];
    fact[0] = 1;
    for (int i = 1; i <= kMaxSweepK; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
    orbit.resize(full + 1);
    for (ColorSet starts = 0; starts <= full; ++starts) {
      std::uint64_t stab = 1;
      int run = 0;
      for (int c = 0; c < k; ++c) {
        if (has_color(starts, c) && run > 0) {
          stab *= fact[run];
          run = 0;
        }
        ++run;
      }
      stab *= fact[run];
      orbit[starts] = fact[k] / stab;
    }

    singles.resize(static_cast<std::size_t>(full + 1) * (full + 1));
    for (ColorSet starts = 0; starts <= full; ++starts) {
      for (ColorSet last = 1; last <= full; ++last) {
        Singles& e = singles[static_cast<std::size_t>(starts) * (full + 1) + last];
        for (int c = 0; c < k; ++c) {
          const ColorSet b = 1u << c;
          if ((b & ~starts & ~(b << 1)) || !consecutive_compatible(last, b, k)) continue;
          if (e.count++ == 0) e.first = b;
          e.orbit_sum += orbit[starts | ((b << 1) & ~b & full)];
        }
      }
    }
  }
};

struct FastStats {
  std::uint64_t graphs = 0, labeled = 0, lemma = 0, big_core = 0, structure = 0, weighted = 0,
                segment = 0, total = 0, infeasible = 0, tight = 0, tight_checks = 0, failures = 0;
  std::int64_t max_sum = -1;

  void merge(const FastStats& o) {
    graphs += o.graphs;
    labeled += o.labeled;
    lemma += o.lemma;
    big_core += o.big_core;
    structure += o.structure;
    weighted += o.weighted;
    segment += o.segment;
    total += o.total;
    infeasible += o.infeasible;
    tight += o.tight;
    tight_checks += o.tight_checks;
    failures += o.failures;
    max_sum = std::max(max_sum, o.max_sum);
  }
};

struct Partial {
  std::vector<FastStats> stats;                   // by depth
  std::vector<std::vector<SweepWitness>> found;  // by depth
  std::size_t witness_count = 0;

  explicit Partial(int d_max) : stats(d_max + 1), found(d_max + 1) {}

  void merge(const Partial& o, std::size_t limit) {
    for (std::size_t d = 0; d < stats.size(); ++d) {
      stats[d].merge(o.stats[d]);
      for (const auto& w : o.found[d]) {
        if (found[d].size() >= limit) break;
        found[d].push_back(w);
        ++witness_count;
      }
    }
  }
};

// Per-path tallies; the first offending layer is kept since layers are
// finished in increasing order.
struct Acc {
  bool lemma = false, big_core = false, tight_bad = false;
  std::int8_t big_neighbors = -1, structure = -1, segment = -1, overload = -1;
  std::uint16_t tight_checks = 0;
  std::int64_t max_sum = -1;
};

// Depth-first walk over canonical prefixes. At depth d (C_d just placed) the
// core set of layer d-1 is final, the per-layer facts of layer d-2 can be
// checked, layer d-4 knows its segment (big flags up to three layers away)
// and so its weights, and layer d-5 knows every neighbor sum. A leaf closes
// the remaining layers against an empty C_{D+1}.
class Walker {
 public:
  Walker(const Tables& t, const SweepOptions& opt, Partial& out) : t_(t), opt_(opt), out_(out) {}

  std::vector<ColorSet> forced;
  int cutoff = -1;
  int leaf_from = 0;
  int leaf_to = kMaxSweepDepth;
  std::vector<std::vector<ColorSet>>* prefixes = nullptr;
  bool stopped = false;

  void run() {
    set_layer(0, 1u);
    dfs(0, (1u | 2u) & t_.full);
  }

 private:
  const Tables& t_;
  const SweepOptions& opt_;
  Partial& out_;

  ColorSet C_[kSlots] = {}, S_[kSlots] = {};
  int cnt_[kSlots] = {}, scnt_[kSlots] = {}, seg_start_[kSlots] = {};
  bool big_[kSlots] = {};
  std::int64_t w_core_[kSlots] = {}, w_rest_[kSlots] = {}, W_[kSlots] = {}, P_[kSlots] = {};
  Acc acc_[kSlots];

  static constexpr int kOpenEnd = std::numeric_limits<int>::max() / 2;

  ColorSet& C(int j) { return C_[j + kPad]; }
  ColorSet& S(int j) { return S_[j + kPad]; }
  int& cnt(int j) { return cnt_[j + kPad]; }
  int& scnt(int j) { return scnt_[j + kPad]; }
  bool& big(int j) { return big_[j + kPad]; }
  std::int64_t& wc(int j) { return w_core_[j + kPad]; }
  std::int64_t& wr(int j) { return w_rest_[j + kPad]; }
  std::int64_t& W(int j) { return W_[j + kPad]; }
  std::int64_t& P(int j) { return P_[j + kPad]; }
  int& seg_start(int j) { return seg_start_[j + kPad]; }

  int pop(ColorSet m) const { return t_.popcount[m]; }

  void set_layer(int j, ColorSet b) {
    C(j) = b;
    cnt(j) = pop(b);
  }

  void core(int j) {
    S(j) = C(j) & ~(C(j - 1) | C(j + 1));
    scnt(j) = pop(S(j));
    big(j) = 2 * scnt(j) > t_.k;
  }

  void lemma(int i, int last, Acc& a) {
    const int k = t_.k;
    const int c = cnt(i), s = scnt(i), sn = scnt(i + 1);
    bool bad = c > k - std::max(scnt(i - 1), sn);
    bad |= s > k - 1;
    if (big(i) && (i < 1 || i > last - 1 || big(i - 1) || big(i + 1))) {
      bad = true;
      if (a.big_neighbors < 0) a.big_neighbors = static_cast<std::int8_t>(i);
    }
    bad |= c == 1 && C(i) != S(i);
    bad |= std::max(pop(C(i) & ~S(i)), pop(C(i + 1) & ~S(i + 1))) > k - s - sn;
    if (s == k - 1)
      bad |= !(C(i) == S(i) && cnt(i - 1) == 1 && scnt(i - 1) == 1 && cnt(i + 1) == 1 && sn == 1);
    a.lemma |= bad;
    if ((k == 3 || k == 4) && big(i) && s != k - 1) a.big_core = true;
  }

  void weight(int j, Acc& a) {
    const int k = t_.k;
    const int c = cnt(j), s = scnt(j);
    int type = 3;
    bool interior = true, starts_segment = false, ends_segment = false;
    if (big(j)) {
      type = !big(j - 2) && !big(j + 2) ? 1 : 2;
    } else if (big(j - 1) && big(j + 1)) {
      type = 2;
    } else if (big(j - 1)) {
      type = big(j - 3) ? 2 : 1;
      interior = false;
      ends_segment = true;
    } else if (big(j + 1)) {
      type = big(j + 3) ? 2 : 1;
      interior = false;
      starts_segment = true;
    }
    if (type != 3) {
      seg_start(j) = starts_segment ? j : seg_start(j - 1);
      if ((C(j) != S(j) || (c != 1 && c != k - 1)) && a.structure < 0) a.structure = static_cast<std::int8_t>(j);
    }
    if (!opt_.weights) return;

    if (type == 1) {
      wc(j) = wr(j) = c == k - 1 ? t_.type1_big : t_.small_inner;
    } else if (type == 2) {
      wc(j) = wr(j) = c == k - 1 ? t_.type2_big : (c == 1 && interior ? t_.small_inner : t_.type2_end);
    } else if (2 * c <= k) {
      wc(j) = wr(j) = t_.type3_even[c];
    } else {
      wc(j) = t_.type3_core;
      wr(j) = t_.type3_rest[c][s];
    }
    W(j) = s * wc(j) + (c - s) * wr(j);
    P(j) = P(j - 1) + W(j);

    if (type == 3) {
      if (W(j) != t_.unit && a.segment < 0) a.segment = static_cast<std::int8_t>(j);
    } else if (ends_segment) {
      const int start = seg_start(j);
      const std::int64_t bigs = (j - start) / 2;
      if (P(j) - P(start - 1) != (2 * bigs + 1) * t_.unit && a.segment < 0)
        a.segment = static_cast<std::int8_t>(start);
    }
  }

  void neighbor_sums(int j, Acc& a) {
    const std::int64_t around = W(j - 1) + W(j) + W(j + 1);
    std::int64_t hi = -1, lo = std::numeric_limits<std::int64_t>::max();
    auto take = [&](std::int64_t v) {
      hi = std::max(hi, v);
      lo = std::min(lo, v);
    };
    if (S(j)) take(around - wc(j));
    const ColorSet rest = C(j) & ~S(j), prev = C(j - 1), next = C(j + 1);
    if (rest & prev & next) take(around - wr(j) - wr(j - 1) - wr(j + 1));
    if (rest & prev & ~next) take(around - wr(j) - wr(j - 1));
    if (rest & ~prev & next) take(around - wr(j) - wr(j + 1));
    a.max_sum = std::max(a.max_sum, hi);
    if (hi > t_.N && a.overload < 0) a.overload = static_cast<std::int8_t>(j);
    const bool tight =
        big(j) ? !big(j - 2) && !big(j + 2) : big(j - 1) && big(j + 1) && cnt(j) == 1;
    if (tight) {
      ++a.tight_checks;
      if (lo != t_.N || hi != t_.N) a.tight_bad = true;
    }
  }

  void node(int d) {
    Acc a = d > 0 ? acc_[d - 1 + kPad] : Acc{};
    if (d >= 1) core(d - 1);
    if (d >= 2) lemma(d - 2, kOpenEnd, a);
    if (d >= 4) weight(d - 4, a);
    if (d >= 5 && opt_.weights) neighbor_sums(d - 5, a);
    acc_[d + kPad] = a;
  }

  // Every canonical one-color layer after C_{D-1} leads to the same audit:
  // the new color is absent from C_{D-1}, so no core set or neighbor sum
  // depends on which one it is. One evaluation covers all of them.
  void leaf(int D, ColorSet parent_starts, const Tables::Singles& kids) {
    set_layer(D, kids.first);
    node(D);
    Acc a = acc_[D + kPad];
    for (int j = D + 1; j <= D + 3; ++j) {
      C(j) = S(j) = 0;
      cnt(j) = scnt(j) = 0;
      big(j) = false;
      W(j) = wc(j) = wr(j) = 0;
    }
    core(D);
    lemma(D - 1, D, a);
    lemma(D, D, a);
    for (int j = std::max(0, D - 3); j <= D; ++j) weight(j, a);
    if (opt_.weights)
      for (int j = std::max(0, D - 4); j <= D; ++j) neighbor_sums(j, a);
    record(D, parent_starts, kids, a);
  }

  void record(int D, ColorSet parent_starts, const Tables::Singles& kids, const Acc& a) {
    const bool broken = a.big_neighbors >= 0;
    const bool weighted = opt_.weights && !broken;
    const bool segment_bad = weighted && a.segment >= 0;
    const bool total_bad = weighted && (segment_bad || P(D) != (D + 1) * t_.unit);
    const bool overloaded = weighted && a.overload >= 0;
    const bool tight_bad = weighted && a.tight_bad;
    const int structure = broken ? a.big_neighbors : a.structure;
    const bool failed = structure >= 0 || total_bad || overloaded;

    const std::uint64_t n = static_cast<std::uint64_t>(kids.count);
    FastStats& st = out_.stats[D];
    st.graphs += n;
    st.labeled += kids.orbit_sum;
    st.lemma += n * a.lemma;
    st.big_core += n * a.big_core;
    st.structure += n * (structure >= 0);
    st.failures += n * failed;
    if (weighted) {
      st.weighted += n;
      st.segment += n * segment_bad;
      st.total += n * total_bad;
      st.infeasible += n * overloaded;
      st.tight += n * tight_bad;
      st.tight_checks += n * a.tight_checks;
      st.max_sum = std::max(st.max_sum, a.max_sum);
    }

    const bool defective = a.lemma || a.big_core || tight_bad || failed;
    const bool wanted = opt_.filter == WitnessFilter::AnyDefect ? defective : failed;
    if (!wanted) return;

    GraphAudit g;
    g.lemma_violation = a.lemma;
    g.big_core_violation = a.big_core;
    g.weighted = weighted;
    g.segment_total_mismatch = segment_bad;
    g.total_mismatch = total_bad;
    g.infeasible = overloaded;
    g.tight_violation = tight_bad;
    if (weighted) {
      g.tight_checks = a.tight_checks;
      g.max_neighbor_sum = Rational(a.max_sum, t_.N);
    }
    if (structure >= 0) g.failures.push_back({FailureKind::StructureViolation, structure});
    if (total_bad) g.failures.push_back({FailureKind::TotalMismatch, a.segment >= 0 ? a.segment : D});
    if (overloaded) g.failures.push_back({FailureKind::InfeasibleVertex, a.overload});
    for (int c = 0; c < t_.k; ++c) {
      const ColorSet b = 1u << c;
      if ((b & ~parent_starts & ~(b << 1)) || !consecutive_compatible(C(D - 1), b, t_.k)) continue;
      if (out_.found[D].size() >= opt_.max_witnesses) return;
      SweepWitness w;
      for (int j = 0; j < D; ++j) w.layers.push_back(C(j));
      w.layers.push_back(b);
      w.audit = g;
      out_.found[D].push_back(std::move(w));
      ++out_.witness_count;
      if (opt_.stop_at_limit && out_.witness_count >= opt_.max_witnesses) {
        stopped = true;
        return;
      }
    }
  }

  void dfs(int d, ColorSet starts) {
    node(d);
    const int D = d + 1;
    if (D >= 2 && D >= leaf_from && D <= leaf_to && D >= opt_.d_min && D <= opt_.d_max) {
      const auto& kids = t_.singles_after(starts, C(d));
      if (kids.count > 0) {
        leaf(D, starts, kids);
        if (stopped) return;
      }
    }
    if (d == cutoff) {
      prefixes->emplace_back(C_ + kPad, C_ + kPad + d + 1);
      return;
    }
    if (D >= opt_.d_max) return;
    const bool is_forced = d + 1 < static_cast<int>(forced.size());
    for (ColorSet b : t_.next[C(d)]) {
      if (is_forced && b != forced[d + 1]) continue;
      if (d + 1 == 1 && b == t_.full) continue;
      if (b & ~starts & ~(b << 1)) continue;
      set_layer(d + 1, b);
      dfs(d + 1, starts | ((b << 1) & ~b & t_.full));
      if (stopped) return;
    }
  }
};

std::size_t count_prefixes(const Tables& t, int depth, int target, ColorSet last, ColorSet starts) {
  if (depth == target) return 1;
  std::size_t n = 0;
  for (ColorSet b : t.next[last]) {
    if (depth + 1 == 1 && b == t.full) continue;
    if (b & ~starts & ~(b << 1)) continue;
    n += count_prefixes(t, depth + 1, target, b, starts | ((b << 1) & ~b & t.full));
  }
  return n;
}

void check_options(const SweepOptions& opt) {
  if (opt.k < 3 || opt.k > kMaxSweepK) throw std::invalid_argument("sweep supports 3 <= k <= 10");
  if (opt.d_min < 2 || opt.d_max < opt.d_min || opt.d_max > kMaxSweepDepth)
    throw std::invalid_argument("sweep needs 2 <= d_min <= d_max <= 24");
  if (opt.stop_at_limit && opt.d_min != opt.d_max)
    throw std::invalid_argument("stop_at_limit needs a single depth");
}

}  // namespace

std::int64_t sweep_denominator(int k) {
  if (k < 3 || k > kMaxSweepK) throw std::invalid_argument("sweep supports 3 <= k <= 10");
  const std::int64_t q = 3 * k - 2;
  std::int64_t l = 1;
  for (int i = 2; i <= k; ++i) l = std::lcm(l, static_cast<std::int64_t>(i));
  return std::lcm(std::lcm(4 * q, static_cast<std::int64_t>(2 * (k - 1))), q * l);
}

SweepResult sweep_kernel(const SweepOptions& opt) {
  check_options(opt);
  const Tables t(opt.k);
  const int workers = opt.workers > 0 ? opt.workers : omp_get_max_threads();

  int cutoff = -1;
  for (int s = 1; s < opt.d_max; ++s) {
    if (count_prefixes(t, 0, s, 1u, (1u | 2u) & t.full) >= kPrefixTarget) {
      cutoff = s;
      break;
    }
  }

  Partial total(opt.d_max);
  std::vector<std::vector<ColorSet>> prefixes;
  bool stopped = false;
  {
    Walker top(t, opt, total);
    top.cutoff = cutoff;
    if (cutoff >= 0) top.leaf_to = cutoff;
    top.prefixes = &prefixes;
    top.run();
    stopped = top.stopped;
  }

  for (std::size_t begin = 0; begin < prefixes.size() && !stopped; begin += kChunk) {
    const std::size_t end = std::min(prefixes.size(), begin + kChunk);
    std::vector<Partial> parts(end - begin, Partial(opt.d_max));
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = begin; i < end; ++i) {
      Walker w(t, opt, parts[i - begin]);
      w.forced = prefixes[i];
      w.leaf_from = cutoff + 1;
      w.run();
    }
    for (const auto& p : parts) {
      total.merge(p, opt.max_witnesses);
      if (opt.stop_at_limit && total.witness_count >= opt.max_witnesses) {
        stopped = true;
        break;
      }
    }
  }

  SweepResult r;
  r.k = opt.k;
  r.d_min = opt.d_min;
  r.complete = !stopped;
  for (int D = opt.d_min; D <= opt.d_max; ++D) {
    const FastStats& f = total.stats[D];
    DepthStats s;
    s.graphs = f.graphs;
    s.labeled = f.labeled;
    s.lemma_violations = f.lemma;
    s.big_core_violations = f.big_core;
    s.structure_violations = f.structure;
    s.weighted_graphs = f.weighted;
    s.segment_total_mismatches = f.segment;
    s.total_mismatches = f.total;
    s.infeasible = f.infeasible;
    s.tight_violations = f.tight;
    s.tight_checks = f.tight_checks;
    s.scheme_failures = f.failures;
    if (f.max_sum >= 0) s.max_neighbor_sum = Rational(f.max_sum, t.N);
    r.by_depth.push_back(s);
    for (const auto& w : total.found[D]) {
      if (r.witnesses.size() >= opt.max_witnesses) break;
      r.witnesses.push_back(w);
    }
  }
  return r;
}

}  // namespace clumpdiam

namespace clumpdiam {

namespace {

// Packed state: four layers, block starts, and the two violation flags.
struct CensusKey {
  ColorSet l[4];
  ColorSet starts;
  bool lemma, big_core;
};

std::uint64_t pack(const CensusKey& s, int bits) {
  std::uint64_t v = 0;
  for (ColorSet m : s.l) v = (v << bits) | m;
  v = (v << bits) | s.starts;
  return (v << 2) | (static_cast<std::uint64_t>(s.lemma) << 1) | static_cast<std::uint64_t>(s.big_core);
}

CensusKey unpack(std::uint64_t v, int bits) {
  CensusKey s;
  const std::uint64_t mask = (1ull << bits) - 1;
  s.big_core = v & 1;
  s.lemma = (v >> 1) & 1;
  v >>= 2;
  s.starts = static_cast<ColorSet>(v & mask);
  v >>= bits;
  for (int i = 3; i >= 0; --i) {
    s.l[i] = static_cast<ColorSet>(v & mask);
    v >>= bits;
  }
  return s;
}

}  // namespace

LayerFacts layer_facts(const std::array<ColorSet, 5>& w, int k, bool first, bool last) {
  auto core = [&](int j) { return w[j] & ~(w[j - 1] | w[j + 1]); };
  const ColorSet Sp = core(1), S = core(2), Sn = core(3);
  const int c = set_size(w[2]), s = set_size(S), sp = set_size(Sp), sn = set_size(Sn);
  const bool big = 2 * s > k, bigp = 2 * sp > k, bign = 2 * sn > k;
  LayerFacts v;
  bool bad = c > k - std::max(sp, sn);
  bad |= s > k - 1;
  bad |= big && (first || last || bigp || bign);
  bad |= c == 1 && w[2] != S;
  bad |= std::max(set_size(w[2] & ~S), set_size(w[3] & ~Sn)) > k - s - sn;
  if (s == k - 1) bad |= !(w[2] == S && set_size(w[1]) == 1 && sp == 1 && set_size(w[3]) == 1 && sn == 1);
  v.lemma_violation = bad;
  v.big_core_violation = (k == 3 || k == 4) && big && s != k - 1;
  return v;
}

SweepResult lemma_census(int k, int d_min, int d_max) {
  SweepOptions opt;
  opt.k = k;
  opt.d_min = d_min;
  opt.d_max = d_max;
  check_options(opt);
  const Tables t(k);
  const int bits = k;

  SweepResult r;
  r.k = k;
  r.d_min = d_min;
  r.by_depth.resize(static_cast<std::size_t>(d_max - d_min + 1));

  // Depth 0: the single layer {0}.
  std::unordered_map<std::uint64_t, std::uint64_t> layer;
  layer[pack({{0, 0, 0, 1u}, (1u | 2u) & t.full, false, false}, bits)] = 1;

  for (int d = 0; d < d_max; ++d) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    next.reserve(layer.size() * 4);
    for (const auto& [key, count] : layer) {
      const CensusKey s = unpack(key, bits);
      const ColorSet last = s.l[3];
      for (ColorSet b : t.next[last]) {
        if (d + 1 == 1 && b == t.full) continue;
        if (b & ~s.starts & ~(b << 1)) continue;
        const ColorSet starts = s.starts | ((b << 1) & ~b & t.full);
        // Layer d-1 now sees two layers on each side.
        bool lemma = s.lemma, big_core = s.big_core;
        if (d >= 1) {
          auto v = layer_facts({s.l[0], s.l[1], s.l[2], s.l[3], b}, k, d - 1 < 1, false);
          lemma |= v.lemma_violation;
          big_core |= v.big_core_violation;
        }
        const int D = d + 1;
        if (set_size(b) == 1 && D >= 2 && D >= d_min) {
          auto v1 = layer_facts({s.l[1], s.l[2], s.l[3], b, 0}, k, D - 1 < 1, false);
          auto v2 = layer_facts({s.l[2], s.l[3], b, 0, 0}, k, false, true);
          const bool lem = lemma || v1.lemma_violation || v2.lemma_violation;
          const bool bc = big_core || v1.big_core_violation || v2.big_core_violation;
          DepthStats& st = r.by_depth[static_cast<std::size_t>(D - d_min)];
          st.graphs += count;
          st.labeled += count * t.orbit[starts];
          st.lemma_violations += lem ? count : 0;
          st.big_core_violations += bc ? count : 0;
        }
        if (D < d_max) next[pack({{s.l[1], s.l[2], s.l[3], b}, starts, lemma, big_core}, bits)] += count;
      }
    }
    layer = std::move(next);
  }
  return r;
}

}  // namespace clumpdiam
