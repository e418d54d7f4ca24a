#include "doctest.h"
#include "oracles.hpp"

#include "clumpdiam/structure.hpp"

using namespace clumpdiam;

namespace {

ClumpGraph clumps(const char* layers, int k) { return parse_clump_inline(layers, k); }

// Big flags straight from the definition: S_i = C_i minus both neighbors,
// big when |S_i| > k/2.
std::vector<bool> big_layers(const ClumpGraph& h) {
  std::vector<bool> big;
  for (int i = 0; i <= h.depth(); ++i) {
    const ColorSet s = h.layer(i) & ~h.layer(i - 1) & ~h.layer(i + 1);
    big.push_back(2 * set_size(s) > h.k());
  }
  return big;
}

// Chains of big layers two apart, widened by one layer each side; the gaps
// become maximal Type 3 runs.
std::vector<Segment> oracle_segments(const ClumpGraph& h) {
  const auto big = big_layers(h);
  const int D = h.depth();
  std::vector<Segment> out;
  int i = 0;
  while (i <= D) {
    int first = -1;
    for (int j = i; j <= D; ++j)
      if (big[j]) {
        first = j;
        break;
      }
    if (first < 0) {
      out.push_back({SegmentType::Three, i, D, 0});
      break;
    }
    int last = first;
    while (last + 2 <= D && big[last + 2]) last += 2;
    const int start = first - 1;
    if (start > i) out.push_back({SegmentType::Three, i, start - 1, 0});
    const int count = (last - first) / 2 + 1;
    out.push_back({count == 1 ? SegmentType::One : SegmentType::Two, start, last + 1, count});
    i = last + 2;
  }
  return out;
}

}  // namespace

TEST_CASE("core_sets") {
  auto a = core_sets(clumps("0|1|0", 3));
  CHECK(a.core == std::vector<ColorSet>{1, 2, 1});
  CHECK_FALSE(a.is_big(0));
  CHECK_FALSE(a.is_big(1));

  auto b = core_sets(clumps("0|1,2|0", 3));
  CHECK(b.core[1] == 0b110);
  CHECK(b.is_big(1));

  auto c = core_sets(clumps("0|1,2|0,3|1", 4));
  CHECK(c.core[1] == 0b0110);
  CHECK(c.core[2] == 0b1001);
  CHECK_FALSE(c.is_big(1));
  CHECK_FALSE(c.is_big(2));

  CHECK_THROWS_AS(core_sets(clumps("0|1|0,2", 3)), std::invalid_argument);
}

TEST_CASE("check_basic_lemma") {
  CHECK(check_basic_lemma(clumps("0|1,2|0", 3)).verdict());
  CHECK(check_basic_lemma(clumps("0|1,2,3|0", 4)).verdict());
  for (int D = 2; D <= 10; ++D)
    for_each_strongly_canonical(3, D, [&](const ClumpGraph& h) {
      if (!check_basic_lemma(h).verdict()) FAIL_CHECK(format_layers(h));
    });
  for (int D = 2; D <= 7; ++D)
    for_each_strongly_canonical(4, D, [&](const ClumpGraph& h) {
      if (!check_basic_lemma(h).verdict()) FAIL_CHECK(format_layers(h));
    });
}

TEST_CASE("partition_segments") {
  using S = Segment;
  CHECK(partition_segments(clumps("0|1|0", 3)).segments == std::vector<S>{{SegmentType::Three, 0, 2, 0}});
  CHECK(partition_segments(clumps("0|1,2|0", 3)).segments == std::vector<S>{{SegmentType::One, 0, 2, 1}});
  CHECK(partition_segments(clumps("0|1,2,3|0|1,2,3|0", 4)).segments == std::vector<S>{{SegmentType::Two, 0, 4, 2}});
  CHECK(partition_segments(clumps("0|1,2|0|1|0", 3)).segments ==
        std::vector<S>{{SegmentType::One, 0, 2, 1}, {SegmentType::Three, 3, 4, 0}});

  const auto p = partition_segments(clumps("0|1,2|0|1|0", 3));
  CHECK(p.segment_of(1).type == SegmentType::One);
  CHECK(p.segment_of(4).type == SegmentType::Three);
}

TEST_CASE("partition_segments agrees with the chain definition on every k = 3, 4 graph") {
  for (auto [k, dmax] : {std::pair{3, 9}, std::pair{4, 7}})
    for (int D = 2; D <= dmax; ++D)
      for_each_strongly_canonical(k, D, [&](const ClumpGraph& h) {
        const auto p = partition_segments(h);
        if (p.segments != oracle_segments(h)) FAIL_CHECK(format_layers(h));
        // segments tile 0..D
        int next = 0;
        for (const auto& s : p.segments) {
          CHECK(s.start == next);
          next = s.end + 1;
        }
        CHECK(next == D + 1);
      });
}

TEST_CASE("check_main_structure") {
  const auto chain = clumps("0|1|0|1|0", 3);
  CHECK(check_main_structure(chain, partition_segments(chain)).verdict());
  for (auto [k, dmax] : {std::pair{3, 9}, std::pair{4, 7}})
    for (int D = 2; D <= dmax; ++D)
      for_each_strongly_canonical(k, D, [&](const ClumpGraph& h) {
        if (!check_main_structure(h, partition_segments(h)).verdict()) FAIL_CHECK(format_layers(h));
      });

  // k = 5 admits big layers of three colors inside a Type 1/2 segment
  bool found = false;
  for (int D = 2; D <= 4 && !found; ++D)
    for_each_strongly_canonical(5, D, [&](const ClumpGraph& h) {
      if (found) return;
      try {
        const auto p = partition_segments(h);
        for (const auto& v : check_main_structure(h, p).violations)
          if (h.layer_size(v.layer) == 3) found = true;
      } catch (const StructureError&) {
      }
    });
  CHECK(found);
}
