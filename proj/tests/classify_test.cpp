#include <gtest/gtest.h>

#include "efl/classify.hpp"
#include "efl/coloring.hpp"
#include "efl/generators.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace efl {
namespace {

TEST(IsLinear, Examples) {
  EXPECT_TRUE(is_linear(Hypergraph::build(3, {{0, 1, 2}})));
  const auto bad = is_linear(Hypergraph::build(4, {{0, 1, 2}, {0, 1, 3}}));
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.witness);
  EXPECT_EQ(*bad.witness, (std::pair<EdgeId, EdgeId>{0, 1}));
  EXPECT_TRUE(is_linear(dual_affine_plane(3)));
}

TEST(IsLinear, RepeatedSingletonsStayLinear) {
  EXPECT_TRUE(is_linear(Hypergraph::build(1, {{0}, {0}})));
  EXPECT_FALSE(is_linear(Hypergraph::build(2, {{0, 1}, {0, 1}})));
}

TEST(IsUniform, Examples) {
  EXPECT_TRUE(is_uniform(Hypergraph::build(3, {{0, 1, 2}}), 3));
  EXPECT_FALSE(is_uniform(dual_affine_plane(3), 9));
  EXPECT_TRUE(is_uniform(pencil(4), 4));
  EXPECT_THROW(is_uniform(pencil(4), 0), Error);
}

TEST(DensityReport, PencilIsDense) {
  const auto r = density_report(pencil(4), 4);
  EXPECT_EQ(r.density_class, DensityClass::Dense);
  EXPECT_EQ(r.degree_histogram, (std::map<std::size_t, std::size_t>{{1, 12}, {4, 1}}));
  EXPECT_TRUE(r.violations.empty());
}

TEST(DensityReport, TriangleHasEmptyIntervals) {
  const auto r = density_report(testing::triangle(), 3);
  EXPECT_EQ(r.density_class, DensityClass::Dense);
  EXPECT_TRUE(r.weakly_dense);
}

TEST(DensityReport, FiveDegreeTwoVerticesViolate) {
  const auto h = testing::five_degree_two();
  const auto r = density_report(h, 9);
  EXPECT_EQ(r.density_class, DensityClass::NotWeaklyDense);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].degree, 2u);
  EXPECT_EQ(r.violations[0].witnesses, (std::vector<VertexId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(r.degree_histogram, testing::naive_histogram(h.edges(), h.vertex_count()));
}

TEST(DensityReport, ClassBoundaries) {
  // Degree 3 with n = 9 sits in [2, 3] but not [2, 3).
  const auto plane = dual_affine_plane(3);
  EXPECT_EQ(density_report(plane, 9).density_class, DensityClass::SlightlyWeaklyDense);
  // Four degree-2 vertices with n = 9: allowed (4 <= 2^2).
  const auto hub = testing::degree_two_hub();
  EXPECT_EQ(density_report(hub, 9).density_class, DensityClass::WeaklyDense);
  // Same instance with n = 4 has no k in [2, 2).
  EXPECT_EQ(density_report(hub, 4).density_class, DensityClass::SlightlyWeaklyDense);
}

// Inclusion chain and recount of violations by an independent histogram.
TEST(DensityReport, InclusionChainAndRecount) {
  for (std::size_t n = 2; n <= 16; ++n)
    for (std::uint64_t s = 0; s < 30; ++s) {
      const auto h = random_linear_uniform(n, s);
      const auto r = density_report(h, n);
      if (r.dense) { EXPECT_TRUE(r.slightly_weakly_dense); }
      if (r.slightly_weakly_dense) { EXPECT_TRUE(r.weakly_dense); }
      EXPECT_EQ(!r.violations.empty(), r.density_class == DensityClass::NotWeaklyDense);

      const auto hist = testing::naive_histogram(h.edges(), h.vertex_count());
      std::vector<std::pair<std::size_t, std::size_t>> expected;
      for (const auto& [k, count] : hist)
        if (k >= 2 && k * k < n && count > k * k) expected.emplace_back(k, count);
      ASSERT_EQ(r.violations.size(), expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(r.violations[i].degree, expected[i].first);
        EXPECT_EQ(r.violations[i].witnesses.size(), expected[i].second);
        for (VertexId v : r.violations[i].witnesses) EXPECT_EQ(h.degree(v), expected[i].first);
      }
    }
}

TEST(EdgeSizeBound, Examples) {
  EXPECT_TRUE(lemma1_bound_holds(dual_affine_plane(3), 9));
  EXPECT_TRUE(lemma1_bound_holds(dual_affine_plane(2), 4));
  EXPECT_TRUE(lemma1_bound_holds(testing::triangle_core(), 3));
}

TEST(EdgeSizeBound, PreconditionFailures) {
  // Not linear.
  EXPECT_THROW(lemma1_bound_holds(Hypergraph::build(3, {{0, 1, 2}, {0, 1}}), 4), Error);
  // Minimum degree too small.
  EXPECT_THROW(lemma1_bound_holds(pencil(4), 4), Error);
  // Too many edges.
  EXPECT_THROW(lemma1_bound_holds(dual_affine_plane(3), 8), Error);
}

TEST(EdgeSizeBound, HoldsOnHighDegreeRestrictions) {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 16; ++n) {
    const auto stream = weakly_dense_stream(n, 11, 20);
    for (const auto& h : stream.instances) {
      const auto sub = high_degree_subhypergraph(h, n).graph;
      if (sub.empty()) continue;
      EXPECT_TRUE(lemma1_bound_holds(sub, n));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(EdgeSizeBound, DualAffinePlanesUpToSeven) {
  for (std::size_t q : {2u, 3u, 5u, 7u}) EXPECT_TRUE(lemma1_bound_holds(dual_affine_plane(q), q * q));
}

TEST(ExtremalStructure, DualAffinePlanes) {
  for (std::size_t q : {2u, 3u, 5u}) {
    const auto plane = dual_affine_plane(q);
    for (VertexId v = 0; v < plane.vertex_count(); ++v) {
      const auto r = lemma2_report(plane, q * q, v);
      EXPECT_TRUE(r.all()) << "q=" << q << " v=" << v << " " << r.first_failure.value_or("");
      EXPECT_FALSE(r.first_failure);
    }
  }
}

TEST(ExtremalStructure, PreconditionViolated) {
  EXPECT_THROW(lemma2_report(dual_affine_plane(3), 16, 0), Error);
  EXPECT_THROW(lemma2_report(testing::triangle_core(), 4, 0), Error);
  try {
    lemma2_report(pencil(4), 4, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
}

}  // namespace
}  // namespace efl
