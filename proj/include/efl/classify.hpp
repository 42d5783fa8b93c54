#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "efl/hypergraph.hpp"

namespace efl {

// ---------------------------------------------------------------------------
// Structural predicates

struct LinearityResult {
  bool linear = true;
  /// Lexicographically first pair of edge indexes sharing two or more vertices.
  std::optional<std::pair<EdgeId, EdgeId>> witness;

  explicit operator bool() const noexcept { return linear; }
};

namespace detail {

inline std::size_t intersection_size(const Edge& a, const Edge& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace detail

inline LinearityResult is_linear(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (EdgeId a = 0; a < edges.size(); ++a)
    for (EdgeId b = a + 1; b < edges.size(); ++b)
      if (detail::intersection_size(edges[a], edges[b]) >= 2) return {false, std::pair{a, b}};
  return {};
}

inline bool is_uniform(const Hypergraph& h, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionViolated, "uniformity parameter must be >= 1");
  for (const auto& e : h.edges())
    if (e.size() != n) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Density classes

enum class DensityClass { Dense, SlightlyWeaklyDense, WeaklyDense, NotWeaklyDense };

constexpr std::string_view to_string(DensityClass c) noexcept {
  switch (c) {
    case DensityClass::Dense: return "Dense";
    case DensityClass::SlightlyWeaklyDense: return "SlightlyWeaklyDense";
    case DensityClass::WeaklyDense: return "WeaklyDense";
    case DensityClass::NotWeaklyDense: return "NotWeaklyDense";
  }
  return "Unknown";
}

inline std::optional<DensityClass> density_class_from_string(std::string_view s) {
  for (auto c : {DensityClass::Dense, DensityClass::SlightlyWeaklyDense, DensityClass::WeaklyDense,
                 DensityClass::NotWeaklyDense})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

/// Degree k in [2, sqrt(n)) held by more than k^2 vertices.
struct DensityViolation {
  std::size_t degree = 0;
  std::vector<VertexId> witnesses;

  friend bool operator==(const DensityViolation&, const DensityViolation&) = default;
};

struct DensityReport {
  /// Strongest class the hypergraph belongs to.
  DensityClass density_class = DensityClass::Dense;
  // Each predicate evaluated on its own, so the inclusion chain is checkable.
  bool dense = true;
  bool slightly_weakly_dense = true;
  bool weakly_dense = true;
  std::vector<DensityViolation> violations;
  std::map<std::size_t, std::size_t> degree_histogram;
};

/// Classifies h against the three density definitions with threshold n.
/// n is explicit so that sub-hypergraphs can inherit the parent's edge count.
inline DensityReport density_report(const Hypergraph& h, std::size_t n) {
  const SqrtGate gate(n);
  DensityReport report;
  std::map<std::size_t, std::vector<VertexId>> by_degree;
  for (VertexId v = 0; v < h.vertex_count(); ++v) by_degree[h.degree(v)].push_back(v);

  for (const auto& [k, vertices] : by_degree) {
    report.degree_histogram[k] = vertices.size();
    if (gate.in_closed_interval(k)) report.dense = false;
    if (gate.in_weak_interval(k)) {
      report.slightly_weakly_dense = false;
      if (vertices.size() > k * k) {
        report.weakly_dense = false;
        report.violations.push_back({k, vertices});
      }
    }
  }

  if (report.dense)
    report.density_class = DensityClass::Dense;
  else if (report.slightly_weakly_dense)
    report.density_class = DensityClass::SlightlyWeaklyDense;
  else if (report.weakly_dense)
    report.density_class = DensityClass::WeaklyDense;
  else
    report.density_class = DensityClass::NotWeaklyDense;
  return report;
}

// ---------------------------------------------------------------------------
// Structural validators

/// Common hypotheses of the high-minimum-degree lemmas: linear, at most n
/// edges, every edge of size at most n, and min degree >= sqrt(n).
/// Returns a description of the first failed hypothesis.
inline std::optional<std::string> high_degree_hypotheses_failure(const Hypergraph& h, std::size_t n) {
  const SqrtGate gate(n);
  if (auto lin = is_linear(h); !lin)
    return "not linear: edges " + std::to_string(lin.witness->first) + " and " +
           std::to_string(lin.witness->second) + " share two or more vertices";
  if (h.edge_count() > n)
    return "edge count " + std::to_string(h.edge_count()) + " exceeds n=" + std::to_string(n);
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (h.edges()[e].size() > n)
      return "edge " + std::to_string(e) + " has " + std::to_string(h.edges()[e].size()) + " > n vertices";
  if (!h.empty() && !gate.ge(h.min_degree()))
    return "min degree " + std::to_string(h.min_degree()) + " is below sqrt(" + std::to_string(n) + ")";
  return std::nullopt;
}

struct Lemma1Result {
  bool holds = true;
  std::optional<EdgeId> witness_edge;

  explicit operator bool() const noexcept { return holds; }
};

/// Edge-size bound for linear hypergraphs of high minimum degree:
///   every edge has (s-1)^2 <= n, and
///   an edge through a vertex of degree >= sqrt(n)+1 has (s-1)^2 < n.
/// Throws PreconditionViolated when the hypotheses fail.
inline Lemma1Result lemma1_bound_holds(const Hypergraph& h, std::size_t n) {
  if (auto failure = high_degree_hypotheses_failure(h, n))
    throw Error(ErrorCode::PreconditionViolated, *failure);
  const SqrtGate gate(n);
  // "degree >= sqrt(n) + 1": integer form when n is a square, d^2 > n otherwise.
  const auto heavy = [&](std::size_t d) {
    return gate.perfect_square() ? d >= gate.floor_sqrt() + 1 : gate.gt(d);
  };
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edges()[e];
    const std::uint64_t rest = edge.size() - 1;
    if (rest * rest > n) return {false, e};
    const bool strict = std::any_of(edge.begin(), edge.end(), [&](VertexId v) { return heavy(h.degree(v)); });
    if (strict && rest * rest >= n) return {false, e};
  }
  return {};
}

struct Lemma2Report {
  bool edge_count_is_n = false;
  bool all_edges_size_sqrtn_plus_1 = false;
  bool all_degrees_sqrtn = false;
  bool pairwise_intersections_exactly_one = false;
  bool unique_nonneighbor_per_outside_vertex = false;
  std::optional<std::string> first_failure;

  bool all() const noexcept {
    return edge_count_is_n && all_edges_size_sqrtn_plus_1 && all_degrees_sqrtn &&
           pairwise_intersections_exactly_one && unique_nonneighbor_per_outside_vertex;
  }
};

/// Hypotheses of the extremal-structure lemma at vertex v, or a description
/// of the first one that fails.
inline std::optional<std::string> lemma2_hypotheses_failure(const Hypergraph& h, std::size_t n, VertexId v) {
  if (auto failure = high_degree_hypotheses_failure(h, n)) return failure;
  const SqrtGate gate(n);
  if (v >= h.vertex_count()) return "vertex " + std::to_string(v) + " out of range";
  if (!gate.eq(h.degree(v)))
    return "degree of vertex " + std::to_string(v) + " is " + std::to_string(h.degree(v)) +
           ", not sqrt(" + std::to_string(n) + ")";
  auto closed = h.adjacency(v);
  closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
  for (VertexId u : closed) {
    const auto size = h.adjacency(u).size();
    if (size != n)
      return "vertex " + std::to_string(u) + " has " + std::to_string(size) + " neighbors, expected " +
             std::to_string(n);
  }
  return std::nullopt;
}

/// Evaluates the five structural conclusions exhaustively. Throws
/// PreconditionViolated when the hypotheses at v do not hold.
inline Lemma2Report lemma2_report(const Hypergraph& h, std::size_t n, VertexId v) {
  if (auto failure = lemma2_hypotheses_failure(h, n, v)) throw Error(ErrorCode::PreconditionViolated, *failure);
  const SqrtGate gate(n);
  const std::size_t root = gate.floor_sqrt();
  Lemma2Report r;
  const auto fail = [&](std::string msg) {
    if (!r.first_failure) r.first_failure = std::move(msg);
  };

  r.edge_count_is_n = h.edge_count() == n;
  if (!r.edge_count_is_n) fail("edge count " + std::to_string(h.edge_count()) + " != " + std::to_string(n));

  r.all_edges_size_sqrtn_plus_1 = true;
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (h.edges()[e].size() != root + 1) {
      r.all_edges_size_sqrtn_plus_1 = false;
      fail("edge " + std::to_string(e) + " has size " + std::to_string(h.edges()[e].size()));
      break;
    }

  r.all_degrees_sqrtn = true;
  for (VertexId u = 0; u < h.vertex_count(); ++u)
    if (h.degree(u) != root) {
      r.all_degrees_sqrtn = false;
      fail("vertex " + std::to_string(u) + " has degree " + std::to_string(h.degree(u)));
      break;
    }

  r.pairwise_intersections_exactly_one = true;
  for (EdgeId a = 0; a < h.edge_count() && r.pairwise_intersections_exactly_one; ++a)
    for (EdgeId b = a + 1; b < h.edge_count(); ++b)
      if (detail::intersection_size(h.edges()[a], h.edges()[b]) != 1) {
        r.pairwise_intersections_exactly_one = false;
        fail("edges " + std::to_string(a) + " and " + std::to_string(b) + " do not meet in exactly one vertex");
        break;
      }

  std::vector<std::vector<VertexId>> adj(h.vertex_count());
  for (VertexId u = 0; u < h.vertex_count(); ++u) adj[u] = h.adjacency(u);
  r.unique_nonneighbor_per_outside_vertex = true;
  for (EdgeId e = 0; e < h.edge_count() && r.unique_nonneighbor_per_outside_vertex; ++e) {
    const auto& edge = h.edges()[e];
    for (VertexId u = 0; u < h.vertex_count(); ++u) {
      if (std::binary_search(edge.begin(), edge.end(), u)) continue;
      const auto non_adjacent = std::count_if(edge.begin(), edge.end(), [&](VertexId w) {
        return !std::binary_search(adj[u].begin(), adj[u].end(), w);
      });
      if (non_adjacent != 1) {
        r.unique_nonneighbor_per_outside_vertex = false;
        fail("vertex " + std::to_string(u) + " has " + std::to_string(non_adjacent) +
             " non-neighbors in edge " + std::to_string(e));
        break;
      }
    }
  }
  return r;
}

}  // namespace efl
