#include <gtest/gtest.h>

#include "efl/coloring.hpp"
#include "efl/generators.hpp"
#include "efl/oracle.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace efl {
namespace {

Coloring make(std::size_t palette, std::vector<Color> colors) {
  Coloring c(colors.size(), palette);
  for (VertexId v = 0; v < colors.size(); ++v) c.assign(v, colors[v]);
  return c;
}

/// Small random hypergraph, not necessarily linear or uniform.
Hypergraph random_small(std::size_t vertices, std::size_t edges, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> out;
  std::vector<bool> covered(vertices, false);
  for (std::size_t e = 0; e < edges; ++e) {
    Edge edge;
    const auto size = 1 + rng.below(std::min<std::size_t>(4, vertices));
    while (edge.size() < size) {
      const VertexId v = rng.below(vertices);
      if (std::find(edge.begin(), edge.end(), v) == edge.end()) edge.push_back(v);
    }
    for (VertexId v : edge) covered[v] = true;
    out.push_back(std::move(edge));
  }
  for (VertexId v = 0; v < vertices; ++v)
    if (!covered[v]) out.push_back({v});
  return Hypergraph::build(vertices, std::move(out));
}

TEST(ValidateColoring, Examples) {
  const auto h = Hypergraph::build(3, {{0, 1, 2}});
  EXPECT_TRUE(validate_coloring(h, make(3, {0, 1, 2})));
  const auto bad = validate_coloring(h, make(3, {0, 0, 1}));
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.conflict, (Conflict{0, 0, 1}));

  const auto tri = testing::triangle();
  EXPECT_TRUE(validate_coloring(tri, efl_coloring(tri).coloring));
}

TEST(ValidateColoring, PartialColoring) {
  const auto h = Hypergraph::build(3, {{0, 1, 2}});
  Coloring partial(3, 3);
  partial.assign(0, 0);
  try {
    validate_coloring(h, partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PartialColoring);
  }
  EXPECT_THROW(validate_coloring(h, make(3, {0, 1})), Error);
}

TEST(ValidateColoring, AgreesWithPairwiseCheck) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto h = random_small(6, 4, s);
    Rng rng(s + 1000);
    Coloring c(6, 3);
    for (VertexId v = 0; v < 6; ++v) c.assign(v, static_cast<Color>(rng.below(3)));
    EXPECT_EQ(validate_coloring(h, c).valid, testing::naive_proper(h.edges(), c.assignment()));
  }
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chromatic_number(Hypergraph::build(4, {{0, 1, 2, 3}}), 4).chi, 4u);
  const auto q2 = chromatic_number(dual_affine_plane(2), 6);
  EXPECT_EQ(q2.chi, 3u);
  EXPECT_TRUE(validate_coloring(dual_affine_plane(2), q2.witness));
  const auto q3 = chromatic_number(dual_affine_plane(3), 12);
  EXPECT_EQ(q3.chi, 4u);
  EXPECT_GT(q3.nodes_explored, 0u);
}

TEST(ChromaticNumber, Errors) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SyntaxError;
  };
  EXPECT_EQ(code([] { chromatic_number(pencil(6), 36); }), ErrorCode::TooLarge);
  EXPECT_EQ(code([] { chromatic_number(pencil(5), 25, 20); }), ErrorCode::TooLarge);
  EXPECT_NO_THROW(chromatic_number(pencil(5), 25, 21));
  EXPECT_EQ(code([] { chromatic_number(dual_affine_plane(2), 2); }), ErrorCode::NoColoringWithinLimit);
  // Odd cycle of 2-edges needs 3 colors.
  const auto c5 = Hypergraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_EQ(code([&] { chromatic_number(c5, 2); }), ErrorCode::NoColoringWithinLimit);
  EXPECT_EQ(chromatic_number(c5, 3).chi, 3u);
}

TEST(ChromaticNumber, MatchesBruteForceAndLowerBound) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto h = random_small(3 + s % 6, 2 + s % 5, s);
    const auto r = chromatic_number(h, h.vertex_count());
    EXPECT_TRUE(validate_coloring(h, r.witness));
    EXPECT_GE(r.chi, h.max_edge_size());
    EXPECT_EQ(r.chi, testing::brute_force_chi(h.edges(), h.vertex_count())) << "seed " << s;
  }
}

TEST(ChromaticNumber, AddingAnEdgeNeverLowersChi) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const auto h = random_small(7, 4, s);
    const auto before = chromatic_number(h, 7).chi;
    auto edges = h.edges();
    Rng rng(s);
    const VertexId a = rng.below(7);
    edges.push_back({a, (a + 1 + rng.below(6)) % 7});
    const auto after = chromatic_number(Hypergraph::build(7, edges), 7).chi;
    EXPECT_GE(after, before);
  }
}

}  // namespace
}  // namespace efl
