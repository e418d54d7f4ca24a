#include <algorithm>

#include "clumpdiam/structure.hpp"
#include "clumpdiam/sweep.hpp"
#include "clumpdiam/weighting.hpp"

namespace clumpdiam {

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::StructureViolation: return "structure-violation";
    case FailureKind::TotalMismatch: return "total-mismatch";
    case FailureKind::InfeasibleVertex: return "infeasible-vertex";
  }
  return "?";
}

GraphAudit audit_graph(const ClumpGraph& h, bool weights) {
  GraphAudit a;
  const int k = h.k();
  const int D = h.depth();
  int big_neighbors_layer = -1;
  for (const auto& v : check_basic_lemma(h).violations) {
    if (v.condition == "big-core-size") {
      a.big_core_violation = true;
      continue;
    }
    a.lemma_violation = true;
    if (v.condition == "big-neighbors" && big_neighbors_layer < 0) big_neighbors_layer = v.layer;
  }

  SegmentPartition part;
  try {
    part = partition_segments(h);
  } catch (const StructureError&) {
    if (big_neighbors_layer < 0) throw;
    a.failures.push_back({FailureKind::StructureViolation, big_neighbors_layer});
    return a;
  }
  auto ms = check_main_structure(h, part);
  if (!ms.verdict()) a.failures.push_back({FailureKind::StructureViolation, ms.violations.front().layer});
  if (!weights) return a;

  a.weighted = true;
  const DualWeighting u = scheme_weights(h, part);
  const Rational unit = scheme_layer_average(k);
  int bad_segment = -1;
  for (const auto& seg : part.segments) {
    if (seg.type == SegmentType::Three) {
      for (int j = seg.start; j <= seg.end; ++j)
        if (u.layer_total(j) != unit && bad_segment < 0) bad_segment = j;
      continue;
    }
    Rational sum;
    for (int j = seg.start; j <= seg.end; ++j) sum += u.layer_total(j);
    if (sum != Rational(2 * seg.big_count + 1) * unit && bad_segment < 0) bad_segment = seg.start;
  }
  a.segment_total_mismatch = bad_segment >= 0;
  const Rational total = u.total();
  a.total_mismatch = a.segment_total_mismatch || total != Rational(D + 1) * unit;
  if (a.total_mismatch) a.failures.push_back({FailureKind::TotalMismatch, bad_segment >= 0 ? bad_segment : D});

  const auto check = verify_weighting(h, u);
  a.max_neighbor_sum = check.worst_sum;
  int overloaded = -1;
  for (const Clump& x : h.clumps()) {
    if (u.neighbor_sum(x) > Rational(1)) {
      overloaded = x.layer;
      break;
    }
  }
  a.infeasible = overloaded >= 0;
  if (a.infeasible) a.failures.push_back({FailureKind::InfeasibleVertex, overloaded});

  const auto core = compute_core_profile(h);
  for (const auto& seg : part.segments) {
    for (int j = seg.start; j <= seg.end; ++j) {
      bool tight = false;
      if (seg.type == SegmentType::One) tight = core.is_big(j);
      if (seg.type == SegmentType::Two)
        tight = j != seg.start && j != seg.end && !core.is_big(j) && h.layer_size(j) == 1;
      if (!tight) continue;
      ++a.tight_checks;
      for (int c = 0; c < k; ++c)
        if (has_color(h.layer(j), c) && u.neighbor_sum({j, c}) != Rational(1)) a.tight_violation = true;
    }
  }
  return a;
}

void DepthStats::add(const GraphAudit& a, std::uint64_t orbit) {
  ++graphs;
  labeled += orbit;
  lemma_violations += a.lemma_violation;
  big_core_violations += a.big_core_violation;
  bool structure = std::any_of(a.failures.begin(), a.failures.end(),
                               [](const SchemeFailure& f) { return f.kind == FailureKind::StructureViolation; });
  structure_violations += structure;
  scheme_failures += !a.failures.empty();
  if (!a.weighted) return;
  ++weighted_graphs;
  segment_total_mismatches += a.segment_total_mismatch;
  total_mismatches += a.total_mismatch;
  infeasible += a.infeasible;
  tight_violations += a.tight_violation;
  tight_checks += static_cast<std::uint64_t>(a.tight_checks);
  if (a.max_neighbor_sum > max_neighbor_sum) max_neighbor_sum = a.max_neighbor_sum;
}

void DepthStats::merge(const DepthStats& o) {
  graphs += o.graphs;
  labeled += o.labeled;
  lemma_violations += o.lemma_violations;
  big_core_violations += o.big_core_violations;
  structure_violations += o.structure_violations;
  weighted_graphs += o.weighted_graphs;
  segment_total_mismatches += o.segment_total_mismatches;
  total_mismatches += o.total_mismatches;
  infeasible += o.infeasible;
  tight_violations += o.tight_violations;
  tight_checks += o.tight_checks;
  scheme_failures += o.scheme_failures;
  if (o.max_neighbor_sum > max_neighbor_sum) max_neighbor_sum = o.max_neighbor_sum;
}

DepthStats SweepResult::totals() const {
  DepthStats t;
  for (const auto& s : by_depth) t.merge(s);
  return t;
}

namespace {

struct StopWalk {};

bool wanted(const GraphAudit& a, WitnessFilter f) {
  return f == WitnessFilter::AnyDefect ? a.defective() : !a.failures.empty();
}

}  // namespace

SweepResult sweep_reference(const SweepOptions& opt) {
  if (opt.d_min < 2 || opt.d_max < opt.d_min) throw std::invalid_argument("need 2 <= d_min <= d_max");
  if (opt.stop_at_limit && opt.d_min != opt.d_max)
    throw std::invalid_argument("stop_at_limit needs a single depth");
  SweepResult r;
  r.k = opt.k;
  r.d_min = opt.d_min;
  r.by_depth.resize(static_cast<std::size_t>(opt.d_max - opt.d_min + 1));
  try {
    for (int D = opt.d_min; D <= opt.d_max; ++D) {
      std::size_t found_here = 0;
      for_each_strongly_canonical(opt.k, D, [&](const ClumpGraph& h) {
        GraphAudit a = audit_graph(h, opt.weights);
        r.by_depth[static_cast<std::size_t>(D - opt.d_min)].add(a, orbit_size(h));
        if (wanted(a, opt.filter) && found_here < opt.max_witnesses) {
          ++found_here;
          if (r.witnesses.size() < opt.max_witnesses) r.witnesses.push_back({h.layers(), std::move(a)});
          if (opt.stop_at_limit && r.witnesses.size() >= opt.max_witnesses) throw StopWalk{};
        }
      });
    }
  } catch (const StopWalk&) {
    r.complete = false;
  }
  return r;
}

}  // namespace clumpdiam
