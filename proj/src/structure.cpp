#include "clumpdiam/structure.hpp"

#include <algorithm>
#include <string>

namespace clumpdiam {

CoreProfile compute_core_profile(const ClumpGraph& h) {
  CoreProfile p;
  p.k = h.k();
  for (int i = 0; i <= h.depth(); ++i) {
    ColorSet s = h.layer(i) & ~(h.layer(i - 1) | h.layer(i + 1));
    p.core.push_back(s);
    p.big.push_back(2 * set_size(s) > h.k());
  }
  return p;
}

CoreProfile core_sets(const ClumpGraph& h) {
  auto rep = validate_strongly_canonical(h.unweighted());
  if (!rep.verdict())
    throw std::invalid_argument("not strongly canonical: " + rep.violations.front().detail);
  return compute_core_profile(h);
}

ValidationReport check_basic_lemma(const ClumpGraph& h) {
  ValidationReport rep;
  const auto p = compute_core_profile(h);
  const int k = h.k();
  const int D = h.depth();
  auto idx = [](int i) { return std::to_string(i); };
  for (int i = 0; i <= D; ++i) {
    const ColorSet C = h.layer(i);
    const ColorSet S = p.core[i];
    const int c = set_size(C), s = set_size(S);

    if (c > k - std::max(p.core_size(i - 1), p.core_size(i + 1)))
      rep.add("layer-size", i, "|C_" + idx(i) + "| exceeds k - max(|S_i-1|, |S_i+1|)");
    if (s > k - 1) rep.add("core-size", i, "|S_" + idx(i) + "| > k-1");
    if (p.is_big(i) && (i < 1 || i > D - 1 || p.is_big(i - 1) || p.is_big(i + 1)))
      rep.add("big-neighbors", i, "big layer " + idx(i) + " at an end or next to a big layer");
    if (c == 1 && C != S) rep.add("singleton-core", i, "singleton layer " + idx(i) + " has C != S");

    const ColorSet next_core = i + 1 <= D ? p.core[i + 1] : 0u;
    const int bound = k - s - set_size(next_core);
    if (std::max(set_size(C & ~S), set_size(h.layer(i + 1) & ~next_core)) > bound)
      rep.add("non-core-size", i,
              "non-core part of layer " + idx(i) + " or " + idx(i + 1) + " exceeds k - |S_i| - |S_i+1|");

    if (s == k - 1) {
      bool ok = C == S;
      for (int j : {i - 1, i + 1})
        ok = ok && h.layer_size(j) == 1 && p.core_size(j) == 1;
      if (!ok) rep.add("near-full-core", i, "|S_" + idx(i) + "| = k-1 without singleton neighbors");
    }
    if ((k == 3 || k == 4) && p.is_big(i) && s != k - 1)
      rep.add("big-core-size", i, "big layer " + idx(i) + " has |S| != k-1");
  }
  return rep;
}

const Segment& SegmentPartition::segment_of(int i) const {
  for (const auto& s : segments)
    if (s.start <= i && i <= s.end) return s;
  throw std::out_of_range("layer not covered by the partition");
}

SegmentPartition partition_segments(const ClumpGraph& h) {
  const auto p = compute_core_profile(h);
  const int D = h.depth();
  std::vector<int> bigs;
  for (int i = 0; i <= D; ++i)
    if (p.big[i]) bigs.push_back(i);
  for (std::size_t a = 0; a < bigs.size(); ++a) {
    if (bigs[a] == 0 || bigs[a] == D) throw StructureError("big layer at an end");
    if (a > 0 && bigs[a] == bigs[a - 1] + 1) throw StructureError("adjacent big layers");
  }

  SegmentPartition out;
  int next = 0;  // first layer not yet covered
  auto add_small_run = [&](int start, int end) {
    if (start > end) return;
    for (int j = start; j <= end; ++j)
      if (p.big[j]) throw StructureError("big layer inside a small run");
    if (start != 0 && !(start > 2 && p.is_big(start - 2)))
      throw StructureError("small run starting at " + std::to_string(start) + " breaks its left boundary");
    if (end != D && !(end < D - 2 && p.is_big(end + 2)))
      throw StructureError("small run ending at " + std::to_string(end) + " breaks its right boundary");
    out.segments.push_back({SegmentType::Three, start, end, 0});
  };

  for (std::size_t a = 0; a < bigs.size();) {
    std::size_t b = a;
    while (b + 1 < bigs.size() && bigs[b + 1] == bigs[b] + 2) ++b;
    const int start = bigs[a] - 1;
    const int end = bigs[b] + 1;
    const int s = static_cast<int>(b - a + 1);
    if (start < next) throw StructureError("overlapping segments");
    if (start > 0 && p.big[start - 1]) throw StructureError("segment preceded by a big layer");
    if (end < D && p.big[end + 1]) throw StructureError("segment followed by a big layer");
    add_small_run(next, start - 1);
    out.segments.push_back({s == 1 ? SegmentType::One : SegmentType::Two, start, end, s});
    next = end + 1;
    a = b + 1;
  }
  add_small_run(next, D);

  int covered = 0;
  for (const auto& s : out.segments) {
    if (s.start != covered) throw StructureError("partition does not cover the layers");
    covered = s.end + 1;
  }
  if (covered != D + 1) throw StructureError("partition does not cover the layers");
  return out;
}

ValidationReport check_main_structure(const ClumpGraph& h, const SegmentPartition& part) {
  ValidationReport rep;
  const auto p = compute_core_profile(h);
  const int k = h.k();
  for (const auto& seg : part.segments) {
    if (seg.type == SegmentType::Three) continue;
    for (int j = seg.start; j <= seg.end; ++j) {
      int c = h.layer_size(j);
      if (h.layer(j) != p.core[j] || (c != 1 && c != k - 1))
        rep.add("segment-structure", j,
                "layer " + std::to_string(j) + " in a Type " +
                    std::to_string(static_cast<int>(seg.type)) + " segment has |C| = " +
                    std::to_string(c) + ", |S| = " + std::to_string(set_size(p.core[j])));
    }
  }
  return rep;
}

}  // namespace clumpdiam
