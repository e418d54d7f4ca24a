#include "clumpdiam/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "clumpdiam/clump.hpp"
#include "clumpdiam/graph.hpp"
#include "clumpdiam/lp.hpp"
#include "clumpdiam/reports.hpp"
#include "clumpdiam/search.hpp"
#include "clumpdiam/structure.hpp"
#include "clumpdiam/sweep.hpp"
#include "clumpdiam/weighting.hpp"

namespace clumpdiam {

namespace {

// Malformed input or out-of-range parameters discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  std::string output;
  std::string input;
  std::string clumps;
  std::string weights;
  int k = 0;
  int kmax = 4;
  int depth = 0;
  int d_min = 0;
  int d_max = 0;
  std::int64_t n = 0;
  std::int64_t delta = 1;
  std::vector<int> deltas{1, 2, 3};
  int n_max = 8;
  int workers = 0;
  std::size_t limit = 16;
  std::string mode = "report";
  std::string lp_file;
  bool emit_lp = false;
  bool audit = false;
  bool canonical_only = false;
};

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Outcome ok(std::string text) { return {std::move(text), kExitOk}; }
Outcome verification_failure(const Json& witness) { return {witness.dump(2) + "\n", kExitVerification}; }
Outcome emit_json(const Json& j) { return ok(j.dump(2) + "\n"); }

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw UsageError("format '" + c.format + "' not supported by this subcommand");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ColoredLayeredGraph load_graph(const Config& c) {
  if (c.input.empty()) throw UsageError("--input is required");
  return to_colored_layered(parse_graph_text(read_file(c.input)), c.kmax);
}

ClumpGraph load_clumps(const Config& c) {
  if (!c.clumps.empty()) {
    if (c.k < 1) throw UsageError("--k is required with --clumps");
    return parse_clump_inline(c.clumps, c.k, c.weights);
  }
  if (!c.input.empty()) return parse_clump_text(read_file(c.input));
  throw UsageError("one of --clumps or --input is required");
}

Json graph_json(const ColoredLayeredGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.graph.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"k", g.k},          {"root", g.root},   {"D", g.depth},
          {"edges", edges}, {"layer", g.layer}, {"color", g.color}};
}

Outcome emit_graph(const Config& c, const ColoredLayeredGraph& g) {
  require_format(c, {"text", "json", "dot"});
  if (c.format == "json") return emit_json(graph_json(g));
  if (c.format == "dot") return ok(to_dot(g));
  return ok(format_colored_text(g));
}

Outcome emit_clumps(const Config& c, const ClumpGraph& h) {
  require_format(c, {"text", "json", "dot"});
  if (c.format == "json") return emit_json(clump_json(h));
  if (c.format == "dot") return ok(to_dot(h));
  return ok(format_clump_text(h));
}

// The scheme only applies to strongly canonical input.
void require_strongly_canonical(const ClumpGraph& h) {
  const auto rep = validate_strongly_canonical(h);
  if (!rep.verdict()) {
    const auto& v = rep.violations.front();
    throw UsageError("not strongly canonical: " + v.condition + " at layer " + std::to_string(v.layer) + ": " +
                     v.detail);
  }
}

Outcome cmd_validate(const Config& c) {
  require_format(c, {"text", "json"});
  const ClumpGraph h = load_clumps(c);
  const auto rep = c.canonical_only ? validate_canonical(h) : validate_strongly_canonical(h);
  const char* what = c.canonical_only ? "canonical" : "strongly canonical";
  if (!rep.verdict()) return verification_failure({{"clumps", clump_json(h)}, {"violations", to_json(rep)}});
  if (c.format == "json") return emit_json({{"clumps", clump_json(h)}, {"verdict", what}, {"violations", Json::array()}});
  return ok(std::string("verified: ") + what + "\n");
}

Outcome cmd_segments(const Config& c) {
  require_format(c, {"text", "json"});
  const ClumpGraph h = load_clumps(c);
  const Json rep = structure_report(h);
  if (!rep["violations"].empty()) return verification_failure(rep);
  if (c.format == "json") return emit_json(rep);
  const CoreProfile core = compute_core_profile(h);
  std::ostringstream os;
  for (int i = 0; i <= h.depth(); ++i)
    os << i << ": C={" << format_color_set(h.layer(i)) << "} S={" << format_color_set(core.core[i]) << "}"
       << (core.is_big(i) ? " big" : "") << "\n";
  for (const auto& s : rep["segments"])
    os << "type " << s["type"].get<int>() << " [" << s["start"].get<int>() << ", " << s["end"].get<int>() << "]\n";
  return ok(os.str());
}

Outcome cmd_weights(const Config& c) {
  require_format(c, {"text", "json"});
  const ClumpGraph h = load_clumps(c).unweighted();
  require_strongly_canonical(h);
  const SegmentPartition p = partition_segments(h);
  // k >= 5 gets the same table verbatim, which may fail.
  const DualWeighting u = h.k() == 3 || h.k() == 4 ? assign_weights(h, p) : scheme_weights(h, p);
  const WeightingCheck check = verify_weighting(h, u);
  const Json rep = weighting_report(h, u, check);
  if (!check.feasible) return verification_failure(rep);
  if (c.format == "json") return emit_json(rep);
  std::ostringstream os;
  for (int i = 0; i <= h.depth(); ++i) {
    os << i << ":";
    for (int col = 0; col < h.k(); ++col)
      if (has_color(h.layer(i), col)) os << " " << col << "=" << u.at(i, col);
    os << "\n";
  }
  os << "total " << check.total << "\n";
  os << "max neighbor sum " << check.worst_sum << "\n";
  os << "feasible: true\n";
  return ok(os.str());
}

std::string solution_text(const LPSolution& sol) {
  std::ostringstream os;
  os << "status " << to_string(sol.status) << "\n";
  if (sol.status == LPStatus::Infeasible) return os.str();
  os << "value " << sol.value << "\nx";
  for (const auto& v : sol.x) os << " " << v;
  os << "\n";
  return os.str();
}

Outcome solve_and_check(const Config& c, const LPInstance& lp) {
  const LPSolution sol = simplex_solve(lp);
  const CertificateCheck cert = check_certificate(lp, sol);
  Json j = to_json(sol);
  j["certified"] = cert.ok;
  if (!cert.ok) {
    j["detail"] = cert.detail;
    return verification_failure(j);
  }
  if (c.format == "json") return emit_json(j);
  return ok(solution_text(sol) + "certified: true\n");
}

Outcome cmd_lp(const Config& c) {
  require_format(c, {"text", "json"});
  if (!c.lp_file.empty()) return solve_and_check(c, parse_lp(read_file(c.lp_file)));

  const ClumpGraph h = load_clumps(c).unweighted();
  if (c.mode == "primal" || c.mode == "dual") {
    const LPInstance lp = c.mode == "primal" ? build_primal_lp(h, c.delta) : build_dual_lp(h, c.delta);
    if (c.emit_lp) return ok(format_lp(lp));
    return solve_and_check(c, lp);
  }
  if (c.emit_lp) throw UsageError("--emit needs --mode primal or dual");
  const DualityReport rep = duality_report(h, c.delta);
  Json j = to_json(rep);
  if (!rep.ok()) return verification_failure(j);
  if (c.format == "json") return emit_json(j);
  std::ostringstream os;
  os << "primal " << rep.primal.value << "\n";
  os << "dual " << rep.dual.value << "\n";
  if (rep.scheme_value) os << "scheme " << *rep.scheme_value << "\n";
  os << "certified: true\nstrong duality: true\n";
  return ok(os.str());
}

std::pair<int, int> depth_range(const Config& c) {
  int lo = c.depth > 0 ? c.depth : c.d_min;
  int hi = c.depth > 0 ? c.depth : c.d_max;
  if (lo == 0 && hi == 0) throw UsageError("--D or --d-min/--d-max is required");
  if (lo == 0) lo = 2;
  if (hi == 0) hi = lo;
  if (lo < 2 || hi < lo) throw UsageError("need 2 <= d-min <= d-max");
  return {lo, hi};
}

Outcome cmd_enum_clumps(const Config& c) {
  const auto [lo, hi] = depth_range(c);
  if (c.k < 3) throw UsageError("--k must be at least 3");
  if (!c.audit) {
    require_format(c, {"text", "json"});
    Json list = Json::array();
    std::ostringstream os;
    for (int D = lo; D <= hi; ++D)
      for_each_strongly_canonical(c.k, D, [&](const ClumpGraph& h) {
        if (c.format == "json")
          list.push_back(format_layers(h));
        else
          os << format_layers(h) << "\n";
      });
    return c.format == "json" ? emit_json(list) : ok(os.str());
  }

  require_format(c, {"text", "json"});
  SweepOptions opt;
  opt.k = c.k;
  opt.d_min = lo;
  opt.d_max = hi;
  opt.workers = c.workers;
  opt.max_witnesses = c.limit;
  const SweepResult r = sweep_kernel(opt);
  const DepthStats t = r.totals();
  // Scheme failures are expected beyond k = 4; the per-layer facts are not.
  const bool bad = t.lemma_violations > 0 || (c.k <= 4 && (t.big_core_violations > 0 || t.tight_violations > 0 ||
                                                            t.scheme_failures > 0));
  const Json rep = sweep_report(r);
  if (bad) return verification_failure(rep);
  if (c.format == "json") return emit_json(rep);
  std::ostringstream os;
  for (int D = lo; D <= hi; ++D) {
    const DepthStats& s = r.at(D);
    os << "D=" << D << " graphs " << s.graphs << " labeled " << s.labeled << " scheme-failures "
       << s.scheme_failures << " max-neighbor-sum " << s.max_neighbor_sum << "\n";
  }
  return ok(os.str());
}

Outcome cmd_extremal(const Config& c) {
  require_format(c, {"text", "json", "csv"});
  const auto rows = extremal_table(c.k, c.n_max, c.deltas, c.workers);
  bool bad = false;
  for (const auto& r : rows) bad = bad || !r.within_bound();
  if (bad) return verification_failure(extremal_json(rows));
  if (c.format == "json") return emit_json(extremal_json(rows));
  if (c.format == "csv") return ok(extremal_csv(rows));
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "k=" << r.k << " n=" << r.n << " delta=" << r.delta << " graphs " << r.pool << " max-diam "
       << r.max_diameter;
    if (r.bound) os << " bound " << *r.bound << " (floor " << *r.bound_floor << ")";
    os << "\n";
  }
  return ok(os.str());
}

Outcome cmd_k5_search(const Config& c) {
  require_format(c, {"text", "json"});
  const int k = c.k == 0 ? 5 : c.k;
  const int d_max = c.d_max == 0 ? 12 : c.d_max;
  const FailureSearchResult r = scheme_failure_search(k, d_max, c.limit, c.workers);
  if (c.format == "json") return emit_json(failure_report(r));
  std::ostringstream os;
  os << r.records.size() << " failing graphs" << (r.complete ? "" : " (witness limit reached)") << "\n";
  for (const auto& rec : r.records) {
    os << format_layers(rec.graph);
    for (const auto& f : rec.failures) os << " " << to_string(f.kind) << "@" << f.layer;
    os << "\n";
  }
  return ok(os.str());
}

Outcome cmd_bound(const Config& c) {
  require_format(c, {"text", "json"});
  const Rational b = diameter_bound(c.n, c.delta, c.k);
  if (c.format == "json")
    return emit_json({{"k", c.k},
                      {"n", c.n},
                      {"delta", c.delta},
                      {"bound", to_json(b)},
                      {"floor", b.floor()},
                      {"previous_bound", to_json(previous_diameter_bound(c.n, c.delta, c.k))}});
  return ok(b.str() + " (floor " + std::to_string(b.floor()) + ")\n");
}

Outcome dispatch(const std::string& name, const Config& c) {
  if (name == "layer") return emit_graph(c, load_graph(c));
  if (name == "saturate") return emit_graph(c, saturate(load_graph(c)));
  if (name == "normalize") return emit_graph(c, normalize_end_layer(load_graph(c)));
  if (name == "clump") return emit_clumps(c, build_clump_graph(saturate(load_graph(c))));
  if (name == "blowup") return emit_graph(c, blow_up(load_clumps(c)));
  if (name == "validate") return cmd_validate(c);
  if (name == "segments") return cmd_segments(c);
  if (name == "weights") return cmd_weights(c);
  if (name == "lp") return cmd_lp(c);
  if (name == "enum-clumps") return cmd_enum_clumps(c);
  if (name == "extremal") return cmd_extremal(c);
  if (name == "k5-search") return cmd_k5_search(c);
  return cmd_bound(c);
}

int default_workers() {
  const char* env = std::getenv(kWorkersEnv);
  if (!env || !*env) return 0;
  try {
    return std::max(0, std::stoi(env));
  } catch (const std::exception&) {
    return 0;
  }
}

void add_format(CLI::App* s, Config& c) {
  s->add_option("--format", c.format, "text | json | csv | dot")
      ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
  s->add_option("-o,--output", c.output, "write the artifact to this file");
}

void add_graph_input(CLI::App* s, Config& c) {
  s->add_option("-i,--input", c.input, "graph text file")->required();
  s->add_option("--kmax", c.kmax, "palette size k; also the limit when coloring an uncolored input")->check(CLI::Range(1, 32));
}

void add_clump_input(CLI::App* s, Config& c) {
  s->add_option("--clumps", c.clumps, "inline layers, e.g. 0|1,2|0");
  s->add_option("--weights", c.weights, "inline weights aligned with --clumps, e.g. 1|2,1|1");
  s->add_option("--k", c.k, "number of colors")->check(CLI::Range(1, kMaxColors));
  s->add_option("-i,--input", c.input, "clump text file");
}

void add_workers(CLI::App* s, Config& c) {
  s->add_option("--workers", c.workers, std::string("worker threads (default: $") + kWorkersEnv + " or all)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  c.workers = default_workers();
  CLI::App app{"Clump graph and diameter bound toolkit"};
  app.require_subcommand(1);

  auto* s = app.add_subcommand("layer", "BFS layering from a root of maximum eccentricity plus a coloring");
  add_graph_input(s, c);
  s = app.add_subcommand("saturate", "add every edge allowed by the layering and coloring");
  add_graph_input(s, c);
  s = app.add_subcommand("normalize", "make the last layer monochromatic");
  add_graph_input(s, c);
  s = app.add_subcommand("clump", "clump graph of the saturated layered graph");
  add_graph_input(s, c);
  s = app.add_subcommand("blowup", "vertex graph of a weighted clump graph");
  add_clump_input(s, c);
  s = app.add_subcommand("validate", "check the (strongly) canonical conditions");
  add_clump_input(s, c);
  s->add_flag("--canonical-only", c.canonical_only, "skip the strong conditions");
  s = app.add_subcommand("segments", "core sets, big layers and segment partition");
  add_clump_input(s, c);
  s = app.add_subcommand("weights", "assign the segment weighting and check neighbor sums");
  add_clump_input(s, c);
  s = app.add_subcommand("lp", "solve the primal or dual LP, or compare both");
  add_clump_input(s, c);
  s->add_option("--delta", c.delta, "minimum degree")->check(CLI::PositiveNumber);
  s->add_option("--mode", c.mode, "primal | dual | report")->check(CLI::IsMember({"primal", "dual", "report"}));
  s->add_flag("--emit", c.emit_lp, "print the LP instead of solving it");
  s->add_option("--lp-file", c.lp_file, "solve an LP in text form");
  s = app.add_subcommand("enum-clumps", "list or audit all strongly canonical clump graphs");
  s->add_option("--k", c.k, "number of colors")->required()->check(CLI::Range(3, 10));
  s->add_option("--D", c.depth, "single depth")->check(CLI::Range(2, 24));
  s->add_option("--d-min", c.d_min, "smallest depth")->check(CLI::Range(2, 24));
  s->add_option("--d-max", c.d_max, "largest depth")->check(CLI::Range(2, 24));
  s->add_flag("--audit", c.audit, "run the weighting audit instead of listing");
  s->add_option("--limit", c.limit, "witnesses to keep");
  add_workers(s, c);
  s = app.add_subcommand("extremal", "largest diameter over small connected graphs");
  s->add_option("--k", c.k, "number of colors")->required()->check(CLI::Range(3, 5));
  s->add_option("--n-max", c.n_max, "largest order")->check(CLI::Range(2, kMaxEnumerationOrder));
  s->add_option("--delta", c.deltas, "minimum degrees")->check(CLI::PositiveNumber);
  add_workers(s, c);
  s = app.add_subcommand("k5-search", "graphs on which the segment weighting fails");
  s->add_option("--k", c.k, "number of colors")->check(CLI::Range(3, 10));
  s->add_option("--d-max", c.d_max, "largest depth")->check(CLI::Range(2, 12));
  s->add_option("--limit", c.limit, "stop after this many records (0: none)");
  add_workers(s, c);
  s = app.add_subcommand("bound", "evaluate the diameter bound");
  s->add_option("--k", c.k, "number of colors")->required()->check(CLI::Range(3, 4));
  s->add_option("--n", c.n, "order")->required()->check(CLI::PositiveNumber);
  s->add_option("--delta", c.delta, "minimum degree")->required()->check(CLI::PositiveNumber);
  for (auto* sub : app.get_subcommands({})) add_format(sub, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Outcome result;
  try {
    result = dispatch(name, c);
  } catch (const std::exception& e) {
    // Malformed files, invalid parameters, or preconditions of a stage.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (c.output.empty()) {
    out << result.text;
  } else {
    std::ofstream f(c.output);
    if (!f) {
      err << "error: cannot write " << c.output << "\n";
      return kExitUsage;
    }
    f << result.text;
  }
  return result.code;
}

}  // namespace clumpdiam
