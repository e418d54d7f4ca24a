#include "clumpdiam/reports.hpp"

#include <sstream>

namespace clumpdiam {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

Json to_json(const ValidationReport& rep) {
  Json a = Json::array();
  for (const auto& v : rep.violations) a.push_back({{"condition", v.condition}, {"layer", v.layer}, {"detail", v.detail}});
  return a;
}

Json colors_json(ColorSet s) {
  Json a = Json::array();
  for (int c = 0; c < kMaxColors; ++c)
    if (has_color(s, c)) a.push_back(c);
  return a;
}

Json clump_json(const ClumpGraph& h) {
  Json j{{"k", h.k()}, {"D", h.depth()}};
  Json layers = Json::array();
  for (ColorSet s : h.layers()) layers.push_back(format_color_set(s));
  j["layers"] = std::move(layers);
  if (h.weighted()) {
    Json w = Json::array();
    for (int i = 0; i <= h.depth(); ++i) {
      Json row = Json::array();
      for (int c = 0; c < h.k(); ++c)
        if (has_color(h.layer(i), c)) row.push_back(h.weight(i, c));
      w.push_back(std::move(row));
    }
    j["weights"] = std::move(w);
  }
  return j;
}

Json structure_report(const ClumpGraph& h) {
  const CoreProfile core = compute_core_profile(h);
  Json layers = Json::array();
  for (int i = 0; i <= h.depth(); ++i) layers.push_back({{"S", colors_json(core.core[i])}, {"big", core.is_big(i)}});

  ValidationReport violations = check_basic_lemma(h);
  Json segments = Json::array();
  try {
    const SegmentPartition p = partition_segments(h);
    for (const auto& s : p.segments)
      segments.push_back({{"type", static_cast<int>(s.type)}, {"start", s.start}, {"end", s.end}});
    violations.merge(check_main_structure(h, p));
  } catch (const StructureError& e) {
    violations.add("segment-partition", -1, e.what());
  }
  return {{"layers", std::move(layers)}, {"segments", std::move(segments)}, {"violations", to_json(violations)}};
}

Json weighting_report(const ClumpGraph& h, const DualWeighting& u, const WeightingCheck& check) {
  Json layers = Json::array();
  for (int i = 0; i <= h.depth(); ++i) {
    Json row = Json::object();
    for (int c = 0; c < h.k(); ++c)
      if (has_color(h.layer(i), c)) row[std::to_string(c)] = u.at(i, c).str();
    layers.push_back(std::move(row));
  }
  return {{"clumps", clump_json(h)},
          {"weights", std::move(layers)},
          {"total", to_json(check.total)},
          {"feasible", check.feasible},
          {"max_neighbor_sum", to_json(check.worst_sum)},
          {"max_at", {{"layer", check.worst.layer}, {"color", check.worst.color}}}};
}

Json to_json(const LPSolution& sol) {
  Json j{{"status", to_string(sol.status)}};
  if (sol.status != LPStatus::Infeasible) {
    j["value"] = to_json(sol.value);
    j["x"] = to_json(sol.x);
  }
  if (!sol.dual.empty()) j["dual"] = to_json(sol.dual);
  if (!sol.ray.empty()) j["ray"] = to_json(sol.ray);
  j["pivots"] = sol.pivots;
  return j;
}

Json to_json(const DualityReport& rep) {
  Json j{{"primal", to_json(rep.primal)}, {"dual", to_json(rep.dual)}};
  j["scheme_value"] = rep.scheme_value ? to_json(*rep.scheme_value) : Json(nullptr);
  j["certified"] = rep.certified;
  j["strong_duality"] = rep.strong_duality;
  j["scheme_below_dual"] = rep.scheme_below_dual;
  j["ok"] = rep.ok();
  return j;
}

namespace {

Json failures_json(const std::vector<SchemeFailure>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back({{"kind", to_string(f.kind)}, {"layer", f.layer}});
  return a;
}

}  // namespace

Json to_json(const GraphAudit& a) {
  return {{"lemma_violation", a.lemma_violation},
          {"big_core_violation", a.big_core_violation},
          {"weighted", a.weighted},
          {"segment_total_mismatch", a.segment_total_mismatch},
          {"total_mismatch", a.total_mismatch},
          {"infeasible", a.infeasible},
          {"tight_violation", a.tight_violation},
          {"tight_checks", a.tight_checks},
          {"max_neighbor_sum", to_json(a.max_neighbor_sum)},
          {"failures", failures_json(a.failures)}};
}

Json to_json(const DepthStats& s) {
  return {{"graphs", s.graphs},
          {"labeled", s.labeled},
          {"lemma_violations", s.lemma_violations},
          {"big_core_violations", s.big_core_violations},
          {"structure_violations", s.structure_violations},
          {"weighted_graphs", s.weighted_graphs},
          {"segment_total_mismatches", s.segment_total_mismatches},
          {"total_mismatches", s.total_mismatches},
          {"infeasible", s.infeasible},
          {"tight_violations", s.tight_violations},
          {"tight_checks", s.tight_checks},
          {"scheme_failures", s.scheme_failures},
          {"max_neighbor_sum", to_json(s.max_neighbor_sum)}};
}

Json sweep_report(const SweepResult& r) {
  Json depths = Json::array();
  for (std::size_t i = 0; i < r.by_depth.size(); ++i) {
    Json d = to_json(r.by_depth[i]);
    d["D"] = r.d_min + static_cast<int>(i);
    depths.push_back(std::move(d));
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json c = clump_json(ClumpGraph(r.k, w.layers));
    c["audit"] = to_json(w.audit);
    witnesses.push_back(std::move(c));
  }
  return {{"k", r.k}, {"complete", r.complete}, {"depths", std::move(depths)}, {"witnesses", std::move(witnesses)}};
}

Json failure_report(const FailureSearchResult& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json c = clump_json(rec.graph);
    c["failures"] = failures_json(rec.failures);
    records.push_back(std::move(c));
  }
  Json depths = Json::array();
  for (std::size_t i = 0; i < r.by_depth.size(); ++i) {
    Json d = to_json(r.by_depth[i]);
    d["D"] = 2 + static_cast<int>(i);
    depths.push_back(std::move(d));
  }
  return {{"k", r.k},
          {"d_max", r.d_max},
          {"complete", r.complete},
          {"records", std::move(records)},
          {"depths", std::move(depths)}};
}

std::string edge_list(const SimpleGraph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) {
    if (!s.empty()) s += ';';
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s;
}

std::string extremal_csv(const std::vector<ExtremalRow>& rows) {
  std::ostringstream os;
  os << "k,n,delta,max_diam,bound,witness-edge-list\n";
  for (const auto& r : rows) {
    os << r.k << ',' << r.n << ',' << r.delta << ',' << r.max_diameter << ',';
    if (r.bound_floor) os << *r.bound_floor;
    os << ',' << edge_list(r.witness) << '\n';
  }
  return os.str();
}

Json extremal_json(const std::vector<ExtremalRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json j{{"k", r.k}, {"n", r.n}, {"delta", r.delta}, {"pool", r.pool}, {"max_diam", r.max_diameter}};
    j["bound"] = r.bound ? to_json(*r.bound) : Json(nullptr);
    j["bound_floor"] = r.bound_floor ? Json(*r.bound_floor) : Json(nullptr);
    j["within_bound"] = r.within_bound();
    j["witness"] = edge_list(r.witness);
    a.push_back(std::move(j));
  }
  return a;
}

}  // namespace clumpdiam
