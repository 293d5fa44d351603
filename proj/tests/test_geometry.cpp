#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "veronese/error.hpp"
#include "veronese/geometry.hpp"

using namespace veronese;

namespace {

// Instance T = {-3,...,4}, xi = (0,-1,0,0,0); facets as 1-based t-indices.
const std::vector<std::vector<int>> kReferenceFacets = {
    {4, 5, 6, 7}, {3, 5, 6, 7}, {3, 4, 5, 7}, {2, 3, 4, 7}, {1, 4, 6, 7}, {1, 4, 5, 6},
    {1, 3, 6, 7}, {1, 3, 5, 6}, {1, 3, 4, 5}, {1, 2, 4, 7}, {1, 2, 3, 7}, {1, 2, 3, 4}};

FacetComplex reference_expected() {
  std::vector<Facet> f;
  for (auto s : kReferenceFacets) {
    for (int& v : s) --v;
    f.push_back(s);
  }
  return FacetComplex(7, 4, f);
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::parse;
}

}  // namespace

TEST(Geometry, CurvePointLiesOnChartHyperplane) {
  const Chart xi{1, -2, 3};
  for (int t = -3; t <= 3; ++t) {
    const auto p = curve_point(xi, t);
    Rational dot = 0;
    for (int i = 0; i <= 2; ++i) dot += xi[i] * p.coords(i);
    EXPECT_EQ(dot, Rational(1));
  }
}

TEST(Geometry, PointAtInfinity) {
  const Chart xi{-1, 1};
  EXPECT_EQ(code_of([&] { curve_point(xi, 1); }), ErrorCode::point_at_infinity);
}

TEST(Geometry, ReferenceInstanceBothTests) {
  const GroundSet t{-3, -2, -1, 1, 2, 3, 4};
  const Chart xi{0, -1, 0, 0, 0};
  EXPECT_EQ(enumerate_facets_geometric(xi, t), reference_expected());
  EXPECT_EQ(enumerate_facets_determinant(xi, t), reference_expected());
  const std::vector<int> s{0, 2, 4, 5};
  EXPECT_TRUE(facet_test_lambda(xi, t, s));
  EXPECT_TRUE(facet_test_determinant(xi, t, s));
  const std::vector<int> not_facet{0, 1, 2, 4};
  EXPECT_FALSE(facet_test_lambda(xi, t, not_facet));
  EXPECT_FALSE(facet_test_determinant(xi, t, not_facet));
}

TEST(Geometry, MomentCurveGivesCyclicPolytope) {
  // d = 4, n = 7: C(7-2,2) + C(7-3,1) = 14 facets.
  const auto t = GroundSet::consecutive(1, 7);
  const Chart xi{1, 0, 0, 0, 0};
  EXPECT_EQ(enumerate_facets_geometric(xi, t).size(), 14u);
}

TEST(Geometry, FacetTestErrors) {
  const GroundSet t{-3, -2, -1, 1, 2, 3, 4};
  const Chart xi{0, -1, 0, 0, 0};
  const std::vector<int> three{0, 1, 2};
  EXPECT_EQ(code_of([&] { facet_test_lambda(xi, t, three); }), ErrorCode::arity);
  const std::vector<int> out_of_range{0, 1, 2, 9};
  EXPECT_EQ(code_of([&] { facet_test_determinant(xi, t, out_of_range); }), ErrorCode::index);
  const GroundSet small{1, 2, 3, 4};
  const std::vector<int> s{0, 1, 2, 3};
  EXPECT_EQ(code_of([&] { facet_test_lambda(xi, small, s); }), ErrorCode::underdetermined);
  const GroundSet hits_zero{-3, -2, -1, 0, 2, 3, 4};
  EXPECT_EQ(code_of([&] { enumerate_facets_geometric(xi, hits_zero); }), ErrorCode::invalid_instance);
  EXPECT_EQ(code_of([&] { GroundSet({1, 1, 2}); }), ErrorCode::precondition);
}

TEST(Geometry, DecomposeReferenceInstance) {
  const GroundSet t{-3, -2, -1, 1, 2, 3, 4};
  const auto d = decompose_chart(Chart{0, -1, 0, 0, 0}, t);
  EXPECT_EQ(d.sizes, (std::vector<int>{3, 4}));
  EXPECT_EQ(d.first_sign, 1);
  EXPECT_EQ(d.d, 4);
}

TEST(Geometry, ChartFromDecompositionMidpoint) {
  // Sizes (3,4) over 1..7: q = +-(t - 7/2), sign + at t = 1.
  const auto xi = chart_from_decomposition(SignedDecomposition({3, 4}, 1, 4), GroundSet::consecutive(1, 7));
  EXPECT_EQ(xi, (Chart{Rational(7) / 2, -1, 0, 0, 0}));
  const auto flat = chart_from_decomposition(SignedDecomposition({5}, 1, 4), GroundSet::consecutive(1, 5));
  EXPECT_EQ(flat, (Chart{1, 0, 0, 0, 0}));
  EXPECT_EQ(code_of([] { chart_from_decomposition(SignedDecomposition({2, 2}, 1, 3), GroundSet::consecutive(1, 5)); }),
            ErrorCode::invalid_decomposition);
}

TEST(Geometry, DecompositionRoundTripRandom) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const int d = 1 + i % 6;
    const int n = d + 1 + static_cast<int>(rng() % 5);
    const auto t = testsupport::random_ground_set(rng, n);
    const auto dec = testsupport::random_decomposition(rng, d, n);
    EXPECT_EQ(decompose_chart(chart_from_decomposition(dec, t), t), dec);
  }
}

TEST(Geometry, ChamberInvariance) {
  // Two different charts with the same decomposition give the same facets.
  const GroundSet t{-3, -2, -1, 1, 2, 3, 4};
  const Chart a{0, -1, 0, 0, 0};
  const Chart b{Rational(1) / 5, -3, 0, -1, 0};
  ASSERT_EQ(decompose_chart(a, t), decompose_chart(b, t));
  EXPECT_EQ(enumerate_facets_geometric(a, t), enumerate_facets_geometric(b, t));
}

TEST(Geometry, InvalidDecomposition) {
  EXPECT_EQ(code_of([] { SignedDecomposition({1, 1, 1}, 1, 1); }), ErrorCode::invalid_decomposition);
  EXPECT_EQ(code_of([] { SignedDecomposition({0, 2}, 1, 3); }), ErrorCode::invalid_decomposition);
  EXPECT_EQ(code_of([] { SignedDecomposition({2}, 0, 3); }), ErrorCode::invalid_decomposition);
}

TEST(Geometry, VerticesGeometric) {
  const GroundSet t{-3, -2, -1, 1, 2, 3, 4};
  EXPECT_EQ(vertices_geometric(Chart{0, -1, 0, 0, 0}, t).size(), 7u);
}

TEST(Geometry, ForEachSubsetCount) {
  int count = 0;
  for_each_subset(7, 3, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 35);
}
