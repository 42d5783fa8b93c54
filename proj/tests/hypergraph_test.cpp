#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <set>

#include "efl/generators.hpp"
#include "efl/hypergraph.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace efl {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an efl::Error";
  return ErrorCode::SyntaxError;
}

TEST(Build, SingleEdge) {
  const auto h = Hypergraph::build(3, {{0, 1, 2}});
  EXPECT_EQ(h.edge_count(), 1u);
  for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(h.degree(v), 1u);
}

TEST(Build, TriangleIsLinearByPairwiseIntersection) {
  const auto h = testing::triangle();
  EXPECT_EQ(h.edge_count(), 3u);
  for (EdgeId a = 0; a < 3; ++a)
    for (EdgeId b = a + 1; b < 3; ++b) {
      std::size_t shared = 0;
      for (VertexId v : h.edge(a)) shared += h.contains(b, v);
      EXPECT_EQ(shared, 1u);
    }
}

TEST(Build, SortsEdges) {
  const auto h = Hypergraph::build(3, {{2, 0, 1}});
  EXPECT_EQ(h.edges()[0], (Edge{0, 1, 2}));
}

TEST(Build, Errors) {
  EXPECT_NO_THROW(Hypergraph::build(3, {{0, 1}, {2}}));
  EXPECT_EQ(code_of([] { Hypergraph::build(3, {{0, 1}}); }), ErrorCode::IsolatedVertex);
  EXPECT_EQ(code_of([] { Hypergraph::build(3, {{0, 1, 2}, {}}); }), ErrorCode::EmptyEdge);
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{0, 2}}); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { Hypergraph::build(2, {{0, 1, 1}}); }), ErrorCode::DuplicateVertexInEdge);
}

TEST(Build, DuplicateEdgesAreSeparateEntries) {
  const auto h = Hypergraph::build(1, {{0}, {0}});
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.degree(0), 2u);
}

TEST(Degree, Examples) {
  EXPECT_EQ(Hypergraph::build(3, {{0, 1, 2}}).degree(0), 1u);
  EXPECT_EQ(pencil(3).degree(0), 3u);
  const auto plane = dual_affine_plane(3);
  for (VertexId v = 0; v < plane.vertex_count(); ++v) EXPECT_EQ(plane.degree(v), 3u);
  EXPECT_EQ(code_of([&] { (void)plane.degree(plane.vertex_count()); }), ErrorCode::VertexOutOfRange);
}

TEST(Adjacency, Examples) {
  EXPECT_EQ(Hypergraph::build(3, {{0, 1, 2}}).adjacency(0), (std::vector<VertexId>{1, 2}));
  const auto plane = dual_affine_plane(2);
  for (VertexId v = 0; v < plane.vertex_count(); ++v) EXPECT_EQ(plane.adjacency(v).size(), 4u);
  EXPECT_EQ(testing::triangle().adjacency(0), (std::vector<VertexId>{1, 2, 3, 4}));
  EXPECT_EQ(code_of([&] { (void)plane.adjacency(99); }), ErrorCode::VertexOutOfRange);
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(Hypergraph::build(3, {{0, 1, 2}}).min_degree(), 1u);
  EXPECT_EQ(dual_affine_plane(3).min_degree(), 3u);
  EXPECT_EQ(pencil(4).min_degree(), 1u);
  EXPECT_EQ(code_of([] { (void)Hypergraph().min_degree(); }), ErrorCode::PreconditionViolated);
}

TEST(SqrtGate, PerfectSquareBoundary) {
  const SqrtGate g9(9);
  EXPECT_TRUE(g9.eq(3));
  EXPECT_TRUE(g9.ge(3));
  EXPECT_FALSE(g9.gt(3));
  EXPECT_TRUE(g9.gt(4));
  EXPECT_TRUE(g9.in_closed_interval(3));
  EXPECT_FALSE(g9.in_weak_interval(3));
  EXPECT_TRUE(g9.in_weak_interval(2));
  EXPECT_FALSE(g9.in_weak_interval(1));

  const SqrtGate g3(3);
  EXPECT_FALSE(g3.in_closed_interval(2));
  EXPECT_FALSE(g3.in_weak_interval(2));
  EXPECT_TRUE(g3.ge(2));
  EXPECT_FALSE(g3.ge(1));
  EXPECT_THROW(SqrtGate(0), Error);
}

TEST(SqrtGate, PredicatesAreConsistent) {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    const SqrtGate g(n);
    EXPECT_EQ(g.floor_sqrt() * g.floor_sqrt() <= n, true);
    EXPECT_GT((g.floor_sqrt() + 1) * (g.floor_sqrt() + 1), n);
    for (std::uint64_t d = 0; d <= 25; ++d) {
      if (g.eq(d)) {
        EXPECT_TRUE(g.ge(d));
        EXPECT_FALSE(g.gt(d));
      }
      EXPECT_EQ(g.ge(d), g.gt(d) || g.eq(d));
      if (g.in_weak_interval(d)) { EXPECT_TRUE(g.in_closed_interval(d)); }
    }
  }
  EXPECT_EQ(isqrt(std::numeric_limits<std::uint64_t>::max()), 4294967295ULL);
}

// Handshake identity and agreement with a naive rescan of the raw lists.
TEST(HypergraphProperty, AgreesWithNaiveRescan) {
  std::vector<Hypergraph> instances{testing::triangle(), testing::five_degree_two(), pencil(4), dual_affine_plane(3)};
  for (std::uint64_t s = 0; s < 40; ++s) instances.push_back(random_linear_uniform(2 + s % 7, s));
  for (const auto& h : instances) {
    const auto& raw = h.edges();
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
      degree_sum += h.degree(v);
      EXPECT_EQ(h.degree(v), testing::naive_degree(raw, v));
      const auto adj = h.adjacency(v);
      const auto expected = testing::naive_adjacency(raw, v);
      EXPECT_EQ(std::set<VertexId>(adj.begin(), adj.end()), expected);
      std::size_t bound = 0;
      for (EdgeId e : h.incident_edges(v)) bound += h.edges()[e].size() - 1;
      EXPECT_LE(adj.size(), bound);
    }
    const auto size_sum = std::accumulate(raw.begin(), raw.end(), std::size_t{0},
                                          [](std::size_t acc, const Edge& e) { return acc + e.size(); });
    EXPECT_EQ(degree_sum, size_sum);
  }
}

TEST(Coloring, PaletteAndTotality) {
  Coloring c(3, 2);
  EXPECT_FALSE(c.is_total());
  c.assign(0, 1);
  EXPECT_THROW(c.assign(1, 2), Error);
  EXPECT_THROW(c.assign(3, 0), Error);
  c.assign(1, 0);
  c.assign(2, 1);
  EXPECT_TRUE(c.is_total());
  EXPECT_EQ(c.colors_used(), 2u);
  EXPECT_EQ(c.with_palette(5).palette_size(), 5u);
}

}  // namespace
}  // namespace efl
