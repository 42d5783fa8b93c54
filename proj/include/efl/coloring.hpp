#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "efl/classify.hpp"
#include "efl/hypergraph.hpp"

namespace efl {

using Rational = boost::rational<std::int64_t>;

/// Smallest integer >= r.
inline std::int64_t ceil(const Rational& r) {
  const auto q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() > 0) ? q + 1 : q;
}

class NotWeaklyDenseError : public Error {
 public:
  NotWeaklyDenseError(std::vector<DensityViolation> violations, const std::string& detail)
      : Error(ErrorCode::NotWeaklyDense, detail), violations_(std::move(violations)) {}

  const std::vector<DensityViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<DensityViolation> violations_;
};

namespace detail {

inline std::vector<std::size_t> adjacency_sizes(const Hypergraph& h) {
  std::vector<std::size_t> sizes(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) sizes[v] = h.adjacency(v).size();
  return sizes;
}

/// Smallest color in [0, palette) not carried by a colored neighbor of v.
/// Also reports how many neighbors were already colored.
inline std::optional<Color> first_fit(const Hypergraph& h, const Coloring& coloring, VertexId v,
                                      std::size_t& colored_neighbors) {
  std::vector<bool> taken(coloring.palette_size(), false);
  colored_neighbors = 0;
  for (VertexId u : h.adjacency(v))
    if (auto c = coloring.color(u)) {
      ++colored_neighbors;
      taken[*c] = true;
    }
  for (Color c = 0; c < taken.size(); ++c)
    if (!taken[c]) return c;
  return std::nullopt;
}

inline void require_high_degree_hypotheses(const Hypergraph& h, std::size_t n) {
  if (auto failure = high_degree_hypotheses_failure(h, n)) throw Error(ErrorCode::PreconditionViolated, *failure);
}

}  // namespace detail

/// Smallest vertex v with d(v)^2 = n and |adj(u)| = n for every u in
/// adj(v) + {v}. Always empty when n is not a perfect square.
inline std::optional<VertexId> detect_special_vertex(const Hypergraph& h, std::size_t n) {
  const SqrtGate gate(n);
  if (!gate.perfect_square()) return std::nullopt;
  const auto adj_size = detail::adjacency_sizes(h);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (!gate.eq(h.degree(v)) || adj_size[v] != n) continue;
    const auto adj = h.adjacency(v);
    if (std::all_of(adj.begin(), adj.end(), [&](VertexId u) { return adj_size[u] == n; })) return v;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Partition coloring of the extremal structure

struct PartitionClasses {
  EdgeId base_edge = 0;
  /// classes[i] holds the i-th vertex of the base edge together with every
  /// vertex not adjacent to it, ascending.
  std::vector<std::vector<VertexId>> classes;
};

struct PartitionResult {
  Coloring coloring;
  PartitionClasses partition;
};

/// Colors u with the index of the unique base-edge vertex it is not adjacent
/// to (or equal to). Uses exactly isqrt(n)+1 colors.
inline PartitionResult partition_coloring(const Hypergraph& h, std::size_t n, EdgeId base_edge) {
  detail::require_high_degree_hypotheses(h, n);
  if (!detect_special_vertex(h, n))
    throw Error(ErrorCode::PreconditionViolated,
                "no vertex v with d(v)^2 = n whose closed neighborhood has adjacency size n");
  if (base_edge >= h.edge_count())
    throw Error(ErrorCode::PreconditionViolated, "base edge " + std::to_string(base_edge) + " out of range");

  const auto base = h.edge(base_edge);
  const std::size_t palette = isqrt(n) + 1;
  PartitionResult result{Coloring(h.vertex_count(), palette), {base_edge, {}}};
  std::vector<std::size_t> memberships(h.vertex_count(), 0);
  std::vector<Color> owner(h.vertex_count(), 0);

  for (std::size_t i = 0; i < base.size(); ++i) {
    const VertexId anchor = base[i];
    const auto adj = h.adjacency(anchor);
    std::vector<VertexId> cls;
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
      if (u != anchor && std::binary_search(adj.begin(), adj.end(), u)) continue;
      cls.push_back(u);
      ++memberships[u];
      owner[u] = static_cast<Color>(i);
    }
    result.partition.classes.push_back(std::move(cls));
  }

  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    if (memberships[u] != 1)
      throw Error(ErrorCode::PartitionFailure,
                  "vertex " + std::to_string(u) + " lies in " + std::to_string(memberships[u]) + " classes");
    if (owner[u] >= palette)
      throw Error(ErrorCode::PartitionFailure, "base edge " + std::to_string(base_edge) + " has more than " +
                                                   std::to_string(palette) + " vertices");
    result.coloring.assign(u, owner[u]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Degree-ordered greedy for high minimum degree

struct GreedyResult {
  Coloring coloring;
  /// Set when the special-vertex route through partition_coloring was taken.
  std::optional<VertexId> special_vertex;
  std::vector<VertexId> order;
};

/// Vertex order for the greedy: degree descending, then adjacency size
/// descending, then id ascending.
inline std::vector<VertexId> greedy_order(const Hypergraph& h) {
  const auto adj_size = detail::adjacency_sizes(h);
  std::vector<VertexId> order(h.vertex_count());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
    if (adj_size[a] != adj_size[b]) return adj_size[a] > adj_size[b];
    return a < b;
  });
  return order;
}

inline GreedyResult greedy_high_degree_detailed(const Hypergraph& h, std::size_t n) {
  detail::require_high_degree_hypotheses(h, n);
  if (auto special = detect_special_vertex(h, n)) {
    const EdgeId base = h.incident_edges(*special).front();
    auto partition = partition_coloring(h, n, base);
    return {partition.coloring.with_palette(n), special, {}};
  }

  GreedyResult result{Coloring(h.vertex_count(), n), std::nullopt, greedy_order(h)};
  for (VertexId v : result.order) {
    std::size_t colored = 0;
    auto c = detail::first_fit(h, result.coloring, v, colored);
    if (!c)
      throw GreedyStallError(v, "no free color among " + std::to_string(n) + " for vertex " + std::to_string(v) +
                                    " (" + std::to_string(colored) + " colored neighbors)");
    result.coloring.assign(v, *c);
  }
  return result;
}

/// n-coloring of a linear hypergraph with at most n edges of size at most n
/// and minimum degree >= sqrt(n).
inline Coloring greedy_high_degree(const Hypergraph& h, std::size_t n) {
  return greedy_high_degree_detailed(h, n).coloring;
}

// ---------------------------------------------------------------------------
// Counting bounds

/// d(n-d)/(d-1): upper bound on colored neighbors of a vertex of degree
/// d > sqrt(n) during the greedy.
inline Rational case_a_bound(std::int64_t n, std::int64_t d) {
  if (d < 2 || n < 1 || !SqrtGate(static_cast<std::uint64_t>(n)).gt(static_cast<std::uint64_t>(d)))
    throw Error(ErrorCode::PreconditionViolated, "case_a_bound needs d >= 2 and d^2 > n");
  return Rational(d * (n - d), d - 1);
}

/// Number of vertices other than v of degree d(v) in the edges through v.
inline std::size_t same_degree_incidences(const Hypergraph& h, VertexId v) {
  const auto d = h.degree(v);
  std::size_t i = 0;
  for (EdgeId e : h.incident_edges(v))
    for (VertexId u : h.edges()[e])
      if (u != v && h.degree(u) == d) ++i;
  return i;
}

/// n - d + i/d for a vertex of degree d in [2, sqrt(n)), where i counts the
/// other degree-d vertices on its edges.
inline Rational phase2_bound(const Hypergraph& h, std::size_t n, VertexId v) {
  const auto d = h.degree(v);
  if (!SqrtGate(n).in_weak_interval(d))
    throw Error(ErrorCode::PreconditionViolated,
                "vertex " + std::to_string(v) + " has degree " + std::to_string(d) + " outside [2, sqrt(n))");
  const auto dd = static_cast<std::int64_t>(d);
  return Rational(static_cast<std::int64_t>(n) - dd) +
         Rational(static_cast<std::int64_t>(same_degree_incidences(h, v)), dd);
}

// ---------------------------------------------------------------------------
// Three-phase coloring for weakly dense linear n-uniform hypergraphs

/// Restriction to the vertices of degree >= sqrt(n). Edges are E meet V1 for
/// every E with a nonempty meet, in the parent's edge order; equal sets stay
/// separate entries, so degrees match the parent's.
struct SubHypergraph {
  Hypergraph graph;
  std::vector<VertexId> to_parent;
  std::vector<EdgeId> edge_to_parent;
};

inline SubHypergraph high_degree_subhypergraph(const Hypergraph& h, std::size_t n) {
  const SqrtGate gate(n);
  SubHypergraph sub;
  std::vector<std::optional<VertexId>> local(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    if (gate.ge(h.degree(v))) {
      local[v] = sub.to_parent.size();
      sub.to_parent.push_back(v);
    }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge meet;
    for (VertexId v : h.edges()[e])
      if (local[v]) meet.push_back(*local[v]);
    if (!meet.empty()) {
      edges.push_back(std::move(meet));
      sub.edge_to_parent.push_back(e);
    }
  }
  sub.graph = Hypergraph::build(sub.to_parent.size(), std::move(edges));
  return sub;
}

struct PhaseTrace {
  std::size_t n = 0;
  std::vector<VertexId> v1;  // d(v)^2 >= n
  std::vector<VertexId> v2;  // 2 <= d(v), d(v)^2 < n
  std::vector<VertexId> v3;  // d(v) = 1, not in v1
  std::size_t phase1_palette_used = 0;
  std::optional<VertexId> phase1_special_vertex;
  std::vector<VertexId> phase2_order;
  std::vector<Rational> phase2_slack;
  std::vector<std::size_t> phase2_colored_neighbors;
  /// Colored vertices per edge when phase 3 reaches it.
  std::vector<std::size_t> phase3_kE;
  std::vector<std::size_t> phase3_uncolored;
};

struct EflResult {
  Coloring coloring;
  PhaseTrace trace;
};

/// n-coloring of a linear n-uniform hypergraph with n edges that is weakly
/// dense. Every edge comes out rainbow.
inline EflResult efl_coloring(const Hypergraph& h) {
  const std::size_t n = h.edge_count();
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "hypergraph has no edges");
  if (!is_uniform(h, n)) throw Error(ErrorCode::NotUniform, "edges are not all of size " + std::to_string(n));
  if (auto lin = is_linear(h); !lin)
    throw Error(ErrorCode::NotLinear, "edges " + std::to_string(lin.witness->first) + " and " +
                                          std::to_string(lin.witness->second) + " share two or more vertices");
  auto density = density_report(h, n);
  if (!density.weakly_dense) {
    const auto& first = density.violations.front();
    throw NotWeaklyDenseError(std::move(density.violations),
                              std::to_string(first.witnesses.size()) + " vertices of degree " +
                                  std::to_string(first.degree));
  }

  const SqrtGate gate(n);
  EflResult result{Coloring(h.vertex_count(), n), {}};
  auto& trace = result.trace;
  trace.n = n;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto d = h.degree(v);
    if (gate.ge(d))
      trace.v1.push_back(v);
    else if (d >= 2)
      trace.v2.push_back(v);
    else
      trace.v3.push_back(v);
  }

  // Phase 1: the high-degree part.
  if (!trace.v1.empty()) {
    const auto sub = high_degree_subhypergraph(h, n);
    const auto greedy = greedy_high_degree_detailed(sub.graph, n);
    trace.phase1_special_vertex =
        greedy.special_vertex ? std::optional<VertexId>(sub.to_parent[*greedy.special_vertex]) : std::nullopt;
    for (VertexId local = 0; local < sub.to_parent.size(); ++local)
      result.coloring.assign(sub.to_parent[local], *greedy.coloring.color(local));
    trace.phase1_palette_used = greedy.coloring.colors_used();
  }

  // Phase 2: degrees in [2, sqrt(n)), decreasing degree.
  trace.phase2_order = trace.v2;
  std::stable_sort(trace.phase2_order.begin(), trace.phase2_order.end(),
                   [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
  for (VertexId v : trace.phase2_order) {
    trace.phase2_slack.push_back(phase2_bound(h, n, v));
    std::size_t colored = 0;
    auto c = detail::first_fit(h, result.coloring, v, colored);
    trace.phase2_colored_neighbors.push_back(colored);
    if (!c)
      throw GreedyStallError(v, "phase 2: no free color for vertex " + std::to_string(v) + " (" +
                                    std::to_string(colored) + " colored neighbors)");
    result.coloring.assign(v, *c);
  }

  // Phase 3: degree-1 vertices take the colors missing from their edge.
  for (EdgeId e = 0; e < n; ++e) {
    std::vector<bool> used(n, false);
    std::vector<VertexId> pending;
    for (VertexId v : h.edges()[e]) {
      if (auto c = result.coloring.color(v))
        used[*c] = true;
      else
        pending.push_back(v);
    }
    trace.phase3_kE.push_back(h.edges()[e].size() - pending.size());
    trace.phase3_uncolored.push_back(pending.size());
    Color next = 0;
    for (VertexId v : pending) {
      while (next < n && used[next]) ++next;
      if (next == n)
        throw GreedyStallError(v, "phase 3: edge " + std::to_string(e) + " has no color left for vertex " +
                                      std::to_string(v));
      result.coloring.assign(v, next++);
    }
  }
  return result;
}

}  // namespace efl
