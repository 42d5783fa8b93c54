#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "efl/hypergraph.hpp"

namespace efl {

struct Conflict {
  EdgeId edge = 0;
  VertexId first = 0;
  VertexId second = 0;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct ValidationResult {
  bool valid = true;
  std::optional<Conflict> conflict;

  explicit operator bool() const noexcept { return valid; }
};

/// Checks that no edge holds two vertices of the same color. The first
/// conflict is reported in edge order, then by the later vertex's position,
/// paired with the earliest vertex of that color in the edge.
inline ValidationResult validate_coloring(const Hypergraph& h, const Coloring& coloring) {
  if (coloring.vertex_count() != h.vertex_count())
    throw Error(ErrorCode::PartialColoring, "coloring covers " + std::to_string(coloring.vertex_count()) +
                                                " vertices, hypergraph has " + std::to_string(h.vertex_count()));
  if (auto v = coloring.first_uncolored())
    throw Error(ErrorCode::PartialColoring, "vertex " + std::to_string(*v) + " has no color");

  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto& edge = h.edges()[e];
    for (std::size_t j = 1; j < edge.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (coloring.color(edge[i]) == coloring.color(edge[j])) return {false, Conflict{e, edge[i], edge[j]}};
  }
  return {};
}

struct ChiResult {
  std::size_t chi = 0;
  Coloring witness;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::size_t kDefaultDeskCap = 24;

namespace detail {

class ChiSearch {
 public:
  explicit ChiSearch(const Hypergraph& h) : h_(h), adj_(h.vertex_count(), 0), order_(h.vertex_count()) {
    for (const auto& edge : h.edges())
      for (VertexId a : edge)
        for (VertexId b : edge)
          if (a != b) adj_[a] |= std::uint64_t{1} << b;
    std::iota(order_.begin(), order_.end(), VertexId{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
  }

  /// Tries to color with k colors; fills `colors` on success.
  bool run(std::size_t k) {
    k_ = k;
    colors_.assign(h_.vertex_count(), 0);
    class_mask_.assign(k, 0);
    return extend(0, 0);
  }

  const std::vector<Color>& colors() const noexcept { return colors_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  // `open` is one past the largest color index used so far; a vertex may
  // take any used color or the next fresh one.
  bool extend(std::size_t pos, std::size_t open) {
    ++nodes_;
    if (pos == order_.size()) return true;
    const VertexId v = order_[pos];
    const std::size_t limit = std::min(k_, open + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (class_mask_[c] & adj_[v]) continue;
      class_mask_[c] |= std::uint64_t{1} << v;
      colors_[v] = static_cast<Color>(c);
      if (extend(pos + 1, std::max(open, c + 1))) return true;
      class_mask_[c] &= ~(std::uint64_t{1} << v);
    }
    return false;
  }

  const Hypergraph& h_;
  std::vector<std::uint64_t> adj_;
  std::vector<VertexId> order_;
  std::vector<std::uint64_t> class_mask_;
  std::vector<Color> colors_;
  std::size_t k_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact chromatic number by backtracking over a static descending-degree
/// order, with colors canonicalized (a vertex may open at most one new color).
/// Tries k = max edge size, max edge size + 1, ... up to max_colors.
inline ChiResult chromatic_number(const Hypergraph& h, std::size_t max_colors,
                                  std::size_t cap = kDefaultDeskCap) {
  if (h.vertex_count() > cap || h.vertex_count() > 64)
    throw Error(ErrorCode::TooLarge, std::to_string(h.vertex_count()) + " vertices exceeds the cap of " +
                                         std::to_string(std::min<std::size_t>(cap, 64)));
  const std::size_t lower = h.max_edge_size();
  if (max_colors < lower)
    throw Error(ErrorCode::NoColoringWithinLimit, "an edge of size " + std::to_string(lower) +
                                                      " needs more than " + std::to_string(max_colors) + " colors");
  if (h.empty()) return {0, Coloring(0, 0), 0};

  detail::ChiSearch search(h);
  for (std::size_t k = lower; k <= max_colors; ++k) {
    if (search.run(k)) {
      ChiResult result{k, Coloring(h.vertex_count(), k), search.nodes()};
      for (VertexId v = 0; v < h.vertex_count(); ++v) result.witness.assign(v, search.colors()[v]);
      return result;
    }
  }
  throw Error(ErrorCode::NoColoringWithinLimit, "no proper coloring with " + std::to_string(max_colors) + " colors");
}

}  // namespace efl
