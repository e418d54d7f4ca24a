#include "clumpdiam/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "clumpdiam/weighting.hpp"

namespace clumpdiam {

namespace {

using Adj = std::array<std::uint16_t, kMaxEnumerationOrder>;

int pair_bits(int n) { return n * (n - 1) / 2; }

Adj to_adj(const SimpleGraph& g) {
  if (g.order() > kMaxEnumerationOrder) throw std::invalid_argument("canonical codes need n <= 9");
  Adj a{};
  for (auto [u, v] : g.edges()) {
    a[u] |= static_cast<std::uint16_t>(1u << v);
    a[v] |= static_cast<std::uint16_t>(1u << u);
  }
  return a;
}

// Cells of the coarsest equitable refinement of the degree partition, as
// an isomorphism-invariant rank per vertex.
std::array<int, kMaxEnumerationOrder> refined_cells(const Adj& adj, int n) {
  std::array<int, kMaxEnumerationOrder> cell{};
  for (int v = 0; v < n; ++v) cell[v] = std::popcount(static_cast<unsigned>(adj[v]));
  int classes = -1;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{cell[v]};
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if (adj[v] >> u & 1) nb.push_back(cell[u]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (const auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& [s, v] : sig)
      cell[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
    const int now = static_cast<int>(keys.size());
    if (now == classes) break;
    classes = now;
  }
  return cell;
}

struct CodeSearch {
  const Adj& adj;
  int n;
  int total;
  std::array<int, kMaxEnumerationOrder> cell{};
  std::array<int, kMaxEnumerationOrder> slot_cell{};  // cell required at each position
  std::array<int, kMaxEnumerationOrder> order{};
  std::uint64_t best = 0;
  bool have_best = false;

  void run(int p, std::uint16_t used, std::uint64_t code, bool ahead) {
    if (p == n) {
      if (!have_best || code > best) {
        best = code;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v & 1) || cell[v] != slot_cell[p]) continue;
      std::uint64_t column = 0;
      for (int i = 0; i < p; ++i) column = (column << 1) | (adj[order[i]] >> v & 1);
      const std::uint64_t next = (code << p) | column;
      bool next_ahead = ahead || !have_best;
      if (!next_ahead) {
        const int len = pair_bits(p + 1);
        const std::uint64_t prefix = best >> (total - len);
        if (next < prefix) continue;
        next_ahead = next > prefix;
      }
      order[p] = v;
      run(p + 1, static_cast<std::uint16_t>(used | (1u << v)), next, next_ahead);
    }
  }
};

std::uint64_t canonicalize(const Adj& adj, int n) {
  CodeSearch s{adj, n, pair_bits(n)};
  s.cell = refined_cells(adj, n);
  std::array<int, kMaxEnumerationOrder> sorted{};
  std::copy(s.cell.begin(), s.cell.begin() + n, sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + n);
  s.slot_cell = sorted;
  s.run(0, 0, 0, false);
  return s.best;
}

Adj adj_from_code(int n, std::uint64_t code) {
  Adj a{};
  int bit = pair_bits(n) - 1;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, --bit) {
      if (code >> bit & 1) {
        a[u] |= static_cast<std::uint16_t>(1u << v);
        a[v] |= static_cast<std::uint16_t>(1u << u);
      }
    }
  }
  return a;
}

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

}  // namespace

std::uint64_t canonical_code(const SimpleGraph& g) { return canonicalize(to_adj(g), g.order()); }

std::uint64_t brute_canonical_code(const SimpleGraph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("brute_canonical_code needs n <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SimpleGraph graph_from_code(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxEnumerationOrder) throw std::invalid_argument("n must be in 1..9");
  const Adj a = adj_from_code(n, code);
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a[u] >> v & 1) g.add_edge(u, v);
  return g;
}

namespace {

// Canonical codes of connected graphs on m vertices from those on m - 1.
std::vector<std::uint64_t> extend_level(const std::vector<std::uint64_t>& level, int m, int workers) {
  std::vector<std::vector<std::uint64_t>> found(level.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(resolve_workers(workers))
  for (std::size_t i = 0; i < level.size(); ++i) {
    const Adj parent = adj_from_code(m - 1, level[i]);
    std::unordered_set<std::uint64_t> local;
    for (unsigned nb = 1; nb < (1u << (m - 1)); ++nb) {
      Adj a = parent;
      a[m - 1] = static_cast<std::uint16_t>(nb);
      for (int u = 0; u < m - 1; ++u)
        if (nb >> u & 1) a[u] |= static_cast<std::uint16_t>(1u << (m - 1));
      local.insert(canonicalize(a, m));
    }
    found[i].assign(local.begin(), local.end());
  }
  std::vector<std::uint64_t> next;
  for (const auto& f : found) next.insert(next.end(), f.begin(), f.end());
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

std::vector<SimpleGraph> decode_level(const std::vector<std::uint64_t>& level, int n) {
  std::vector<SimpleGraph> out;
  out.reserve(level.size());
  for (std::uint64_t c : level) out.push_back(graph_from_code(n, c));
  return out;
}

}  // namespace

std::vector<SimpleGraph> enumerate_connected_graphs(int n, int workers) {
  if (n < 1 || n > kMaxEnumerationOrder) throw std::invalid_argument("n must be in 1..9");
  std::vector<std::uint64_t> level{0};  // the single vertex
  for (int m = 2; m <= n; ++m) level = extend_level(level, m, workers);
  return decode_level(level, n);
}

std::vector<ExtremalRow> extremal_table(int k, int n_max, const std::vector<int>& deltas, int workers) {
  if (k < 3 || k > 5) throw std::invalid_argument("extremal_table supports k in {3, 4, 5}");
  if (n_max < 2 || n_max > kMaxEnumerationOrder) throw std::invalid_argument("n_max must be in 2..9");
  for (int d : deltas)
    if (d < 1) throw std::invalid_argument("delta must be at least 1");
  const int threads = resolve_workers(workers);

  std::vector<ExtremalRow> rows;
  std::vector<std::uint64_t> level{0};
  for (int n = 2; n <= n_max; ++n) {
    level = extend_level(level, n, workers);
    const auto graphs = decode_level(level, n);
    struct Props {
      bool colorable;
      int min_degree;
      int diameter;
    };
    std::vector<Props> props(graphs.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (std::size_t i = 0; i < graphs.size(); ++i)
      props[i] = {proper_coloring(graphs[i], k).has_value(), graphs[i].min_degree(), diameter(graphs[i])};

    for (int delta : deltas) {
      ExtremalRow row;
      row.k = k;
      row.n = n;
      row.delta = delta;
      int best = -1;
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!props[i].colorable || props[i].min_degree < delta) continue;
        ++row.pool;
        if (props[i].diameter > best) {
          best = props[i].diameter;
          row.witness = graphs[i];
        }
      }
      if (row.pool == 0) continue;
      row.max_diameter = best;
      if (k == 3 || k == 4) {
        row.bound = diameter_bound(n, delta, k);
        row.bound_floor = row.bound->floor();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

FailureSearchResult scheme_failure_search(int k, int d_max, std::size_t max_witnesses, int workers) {
  if (d_max < 2 || d_max > 12) throw std::invalid_argument("d_max must be in 2..12");
  FailureSearchResult out;
  out.k = k;
  out.d_max = d_max;
  for (int D = 2; D <= d_max; ++D) {
    SweepOptions opt;
    opt.k = k;
    opt.d_min = opt.d_max = D;
    opt.workers = workers;
    opt.filter = WitnessFilter::SchemeFailure;
    if (max_witnesses > 0) {
      opt.max_witnesses = max_witnesses - out.records.size();
      opt.stop_at_limit = true;
    } else {
      opt.max_witnesses = std::numeric_limits<std::size_t>::max();
    }
    const SweepResult r = sweep_kernel(opt);
    out.by_depth.push_back(r.at(D));
    for (const auto& w : r.witnesses) out.records.push_back({ClumpGraph(k, w.layers), w.audit.failures});
    if (!r.complete) {
      out.complete = false;
      break;
    }
  }
  return out;
}

}  // namespace clumpdiam
