#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "clumpdiam/clump.hpp"
#include "clumpdiam/lp.hpp"
#include "clumpdiam/search.hpp"
#include "clumpdiam/structure.hpp"
#include "clumpdiam/sweep.hpp"
#include "clumpdiam/weighting.hpp"

// JSON and CSV emitters. Rationals are always "p/q" strings (integers
// without the slash), never floats.

namespace clumpdiam {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const std::vector<Rational>& v);
Json to_json(const ValidationReport& rep);
Json colors_json(ColorSet s);

/// {k, D, layers: ["0", "1,2", ...], weights?: [[...], ...]}
Json clump_json(const ClumpGraph& h);

/// {layers: [{S, big}], segments: [{type, start, end}], violations: [...]}.
/// Segments are empty when the layers admit no valid partition; the reason
/// then shows up among the violations.
Json structure_report(const ClumpGraph& h);

/// Per-layer weights aligned with the layers, total, and the neighbor-sum check.
Json weighting_report(const ClumpGraph& h, const DualWeighting& u, const WeightingCheck& check);

Json to_json(const LPSolution& sol);
Json to_json(const DualityReport& rep);

Json to_json(const GraphAudit& a);
Json to_json(const DepthStats& s);
Json sweep_report(const SweepResult& r);

Json failure_report(const FailureSearchResult& r);

/// "u-v;u-v;..." for CSV cells and text tables.
std::string edge_list(const SimpleGraph& g);

/// Header k,n,delta,max_diam,bound,witness-edge-list; bound holds the floor
/// of the diameter bound, or is empty when no bound applies.
std::string extremal_csv(const std::vector<ExtremalRow>& rows);
Json extremal_json(const std::vector<ExtremalRow>& rows);

}  // namespace clumpdiam
