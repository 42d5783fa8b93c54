#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "efl/error.hpp"

namespace efl {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using Color = std::uint32_t;
using Edge = std::vector<VertexId>;

/// Floor of the square root, exact for every 64-bit input.
constexpr std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::min<std::uint64_t>(n, 4294967295ULL);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

constexpr bool is_perfect_square(std::uint64_t n) noexcept {
  const auto r = isqrt(n);
  return r * r == n;
}

/// Comparisons of integers against sqrt(n), done by squaring.
class SqrtGate {
 public:
  constexpr explicit SqrtGate(std::uint64_t n) : n_(n) {
    if (n == 0) throw Error(ErrorCode::PreconditionViolated, "SqrtGate requires n >= 1");
  }

  constexpr std::uint64_t n() const noexcept { return n_; }
  constexpr std::uint64_t floor_sqrt() const noexcept { return isqrt(n_); }
  constexpr bool perfect_square() const noexcept { return is_perfect_square(n_); }

  // d >= sqrt(n)
  constexpr bool ge(std::uint64_t d) const noexcept { return sq(d) >= n_; }
  // d > sqrt(n)
  constexpr bool gt(std::uint64_t d) const noexcept { return sq(d) > n_; }
  // d == sqrt(n)
  constexpr bool eq(std::uint64_t d) const noexcept { return sq(d) == n_; }
  // k in [2, sqrt(n))
  constexpr bool in_weak_interval(std::uint64_t k) const noexcept { return k >= 2 && sq(k) < n_; }
  // k in [2, sqrt(n)]
  constexpr bool in_closed_interval(std::uint64_t k) const noexcept { return k >= 2 && sq(k) <= n_; }

 private:
  // Widened so d*d cannot overflow.
  static constexpr unsigned __int128 sq(std::uint64_t d) noexcept {
    return static_cast<unsigned __int128>(d) * d;
  }

  std::uint64_t n_;
};

/// A finite family of nonempty vertex sets over the ids 0..vertex_count-1.
///
/// Edges are kept as an indexed family: two edges with the same vertex set
/// are distinct entries and both count toward degrees. Every vertex lies in
/// at least one edge. Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates and normalizes the edge lists (each edge is sorted).
  static Hypergraph build(std::size_t vertex_count, std::vector<Edge> edges) {
    Hypergraph h;
    h.vertex_count_ = vertex_count;
    h.incidence_.assign(vertex_count, {});
    for (EdgeId e = 0; e < edges.size(); ++e) {
      auto& edge = edges[e];
      if (edge.empty()) throw Error(ErrorCode::EmptyEdge, "edge " + std::to_string(e) + " is empty");
      std::sort(edge.begin(), edge.end());
      for (std::size_t i = 0; i < edge.size(); ++i) {
        if (edge[i] >= vertex_count)
          throw Error(ErrorCode::VertexOutOfRange, "edge " + std::to_string(e) + " references vertex " +
                                                       std::to_string(edge[i]) + " but vertex_count is " +
                                                       std::to_string(vertex_count));
        if (i > 0 && edge[i] == edge[i - 1])
          throw Error(ErrorCode::DuplicateVertexInEdge,
                      "edge " + std::to_string(e) + " lists vertex " + std::to_string(edge[i]) + " twice");
        h.incidence_[edge[i]].push_back(e);
      }
    }
    for (VertexId v = 0; v < vertex_count; ++v)
      if (h.incidence_[v].empty())
        throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " belongs to no edge");
    h.edges_ = std::move(edges);
    return h;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertex_count_ == 0; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const VertexId> edge(EdgeId e) const {
    check_edge(e);
    return edges_[e];
  }

  /// Incident edge indexes of v, ascending.
  std::span<const EdgeId> incident_edges(VertexId v) const {
    check_vertex(v);
    return incidence_[v];
  }

  std::size_t degree(VertexId v) const {
    check_vertex(v);
    return incidence_[v].size();
  }

  /// Vertices sharing an edge with v, ascending; v itself is excluded.
  std::vector<VertexId> adjacency(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> out;
    for (EdgeId e : incidence_[v])
      for (VertexId u : edges_[e])
        if (u != v) out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t min_degree() const {
    if (empty()) throw Error(ErrorCode::PreconditionViolated, "min_degree of an empty hypergraph");
    std::size_t best = incidence_[0].size();
    for (const auto& inc : incidence_) best = std::min(best, inc.size());
    return best;
  }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& inc : incidence_) best = std::max(best, inc.size());
    return best;
  }

  std::size_t max_edge_size() const noexcept {
    std::size_t best = 0;
    for (const auto& e : edges_) best = std::max(best, e.size());
    return best;
  }

  bool contains(EdgeId e, VertexId v) const {
    const auto& edge = edges_.at(e);
    return std::binary_search(edge.begin(), edge.end(), v);
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void check_vertex(VertexId v) const {
    if (v >= vertex_count_)
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " >= vertex_count " + std::to_string(vertex_count_));
  }
  void check_edge(EdgeId e) const {
    if (e >= edges_.size())
      throw Error(ErrorCode::PreconditionViolated,
                  "edge index " + std::to_string(e) + " >= edge_count " + std::to_string(edges_.size()));
  }

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Partial or total assignment of colors from {0..palette_size-1}.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::size_t vertex_count, std::size_t palette_size)
      : assignment_(vertex_count), palette_size_(palette_size) {}

  std::size_t vertex_count() const noexcept { return assignment_.size(); }
  std::size_t palette_size() const noexcept { return palette_size_; }

  void assign(VertexId v, Color c) {
    if (v >= assignment_.size())
      throw Error(ErrorCode::VertexOutOfRange, "coloring has no vertex " + std::to_string(v));
    if (c >= palette_size_)
      throw Error(ErrorCode::PreconditionViolated,
                  "color " + std::to_string(c) + " outside palette of size " + std::to_string(palette_size_));
    assignment_[v] = c;
  }

  std::optional<Color> color(VertexId v) const { return assignment_.at(v); }
  bool is_colored(VertexId v) const { return assignment_.at(v).has_value(); }

  bool is_total() const noexcept {
    return std::all_of(assignment_.begin(), assignment_.end(), [](const auto& c) { return c.has_value(); });
  }

  std::optional<VertexId> first_uncolored() const noexcept {
    for (VertexId v = 0; v < assignment_.size(); ++v)
      if (!assignment_[v]) return v;
    return std::nullopt;
  }

  /// Number of distinct colors actually assigned.
  std::size_t colors_used() const {
    std::vector<bool> seen(palette_size_, false);
    std::size_t count = 0;
    for (const auto& c : assignment_)
      if (c && !seen[*c]) {
        seen[*c] = true;
        ++count;
      }
    return count;
  }

  /// Same assignment read against a different palette.
  Coloring with_palette(std::size_t palette_size) const {
    Coloring out(assignment_.size(), palette_size);
    for (VertexId v = 0; v < assignment_.size(); ++v)
      if (assignment_[v]) out.assign(v, *assignment_[v]);
    return out;
  }

  const std::vector<std::optional<Color>>& assignment() const noexcept { return assignment_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::optional<Color>> assignment_;
  std::size_t palette_size_ = 0;
};

}  // namespace efl
