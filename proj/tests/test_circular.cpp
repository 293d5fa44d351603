#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "veronese/circular.hpp"
#include "veronese/error.hpp"
#include "veronese/line.hpp"

using namespace veronese;

TEST(Circular, ConstructorValidation) {
  EXPECT_THROW(CircularComposition(4, {}), Error);
  EXPECT_THROW(CircularComposition(4, {3, 4, 1}), Error);        // parity
  EXPECT_THROW(CircularComposition(3, {5}, 0), Error);           // no dividers with odd d
  EXPECT_THROW(CircularComposition(2, {1, 1, 1, 1}), Error);     // l > d
  EXPECT_THROW(CircularComposition(4, {3, 0}), Error);
  EXPECT_NO_THROW(CircularComposition(4, {7}, 0));
  EXPECT_EQ(CircularComposition::cyclic(5, 9), CircularComposition(5, {9}));
}

TEST(Circular, DividerEndpoints) {
  const CircularComposition c(4, {3, 4});
  EXPECT_EQ(c.divider(0), std::make_pair(2, 3));
  EXPECT_EQ(c.divider(1), std::make_pair(6, 0));
  EXPECT_EQ(CircularComposition(3, {6}).divider(0), std::make_pair(5, 0));
}

TEST(Circular, InducedExamples) {
  EXPECT_EQ(induce_composition(SignedDecomposition({2, 7}, 1, 4)).composition.arcs(), (std::vector<int>{2, 7}));
  const auto merged = induce_composition(SignedDecomposition({3, 2, 4}, 1, 4));
  EXPECT_EQ(merged.composition.arcs(), (std::vector<int>{2, 7}));
  // tau: I_2 first, then I_3 followed by I_1.
  EXPECT_EQ(merged.tau, (std::vector<int>{6, 7, 8, 0, 1, 2, 3, 4, 5}));
  const auto odd = induce_composition(SignedDecomposition({8}, 1, 5)).composition;
  EXPECT_EQ(odd.arcs(), std::vector<int>{8});
  EXPECT_EQ(odd.dividers(), 1);
  EXPECT_EQ(induce_composition(SignedDecomposition({8}, -1, 4)).composition.dividers(), 0);
}

TEST(Circular, CanonicalArcs) {
  EXPECT_EQ(canonical_arcs(CircularComposition(4, {7, 2})).arcs(), (std::vector<int>{2, 7}));
  EXPECT_EQ(canonical_arcs(CircularComposition(4, {1, 3, 1, 2})).arcs(), (std::vector<int>{1, 2, 1, 3}));
  EXPECT_EQ(canonical_arcs(CircularComposition(3, {5})).arcs(), std::vector<int>{5});
  EXPECT_EQ(canonical_arcs(CircularComposition(4, {5}, 0)), CircularComposition(4, {5}, 0));
}

TEST(Circular, FacetExamples) {
  EXPECT_EQ(enumerate_facets_circular(CircularComposition(4, {3, 4})).size(), 12u);
  EXPECT_EQ(enumerate_facets_circular(CircularComposition(4, {3, 4})),
            enumerate_facets_line(SignedDecomposition({3, 4}, 1, 4)));
  const auto tetra = enumerate_facets_circular(CircularComposition(3, {1, 1, 3}));
  EXPECT_EQ(tetra.size(), 4u);
  EXPECT_EQ(tetra.vertices().size(), 4u);
  EXPECT_EQ(enumerate_facets_circular(CircularComposition(4, {7}, 0)).size(), 14u);
  try {
    enumerate_facets_circular(CircularComposition(4, {1, 1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::underdetermined);
  }
}

TEST(Circular, NoDuplicateChoices) {
  for (int d = 1; d <= 6; ++d)
    for (int n = d + 1; n <= 10; ++n)
      for (const auto& c : testsupport::all_circular(d, n))
        EXPECT_EQ(count_circular_choices(c), enumerate_facets_circular(c).size());
}

TEST(Circular, VertexSetExamples) {
  EXPECT_EQ(vertex_set(CircularComposition(4, {3, 3, 2, 2})).size(), 8u);
  EXPECT_EQ(vertex_set(CircularComposition(4, {1, 1, 1, 7})).size(), 5u);
  EXPECT_EQ(vertex_set(CircularComposition(4, {1, 9})).size(), 10u);
}

TEST(Circular, VertexConsistency) {
  for (int d = 2; d <= 6; ++d)
    for (int n = d + 1; n <= 10; ++n)
      for (const auto& c : testsupport::all_circular(d, n))
        EXPECT_EQ(vertex_set(c), enumerate_facets_circular(c).vertices());
}

TEST(Circular, FacetCountExamples) {
  EXPECT_EQ(facet_count(CircularComposition(4, {3, 4})), 12u);
  EXPECT_EQ(facet_count(CircularComposition(4, {1, 9})), 20u);
  EXPECT_EQ(facet_count(CircularComposition(3, {6})), 8u);
  EXPECT_EQ(facet_count(CircularComposition(4, {7}, 0)), 14u);
  EXPECT_EQ(facet_count(CircularComposition(4, {2, 3, 2, 3})), 16u);
}

TEST(Circular, OneDividerCountIndependentOfBase) {
  for (int d = 1; d <= 7; d += 2)
    for (int n = d + 1; n <= 14; ++n)
      EXPECT_EQ(static_cast<std::int64_t>(facet_count(CircularComposition(d, {n}))),
                2 * binomial(n - 1 - (d - 1) / 2, (d - 1) / 2));
}

TEST(Circular, TransferFromLine) {
  std::mt19937_64 rng(31);
  for (int d = 1; d <= 6; ++d) {
    for (int n = d + 1; n <= 10; ++n) {
      for (int k = 0; k <= std::min(d, n - 1); ++k) {
        for (const auto& sizes : testsupport::all_compositions(n, k + 1)) {
          const SignedDecomposition dec(sizes, rng() % 2 ? 1 : -1, d);
          const auto induced = induce_composition(dec);
          EXPECT_EQ(enumerate_facets_line(dec).relabeled(induced.tau),
                    enumerate_facets_circular(induced.composition));
        }
      }
    }
  }
}

TEST(Circular, DihedralInvariance) {
  for (int d = 2; d <= 6; ++d) {
    for (int n = d + 1; n <= 9; ++n) {
      for (const auto& c : testsupport::all_circular(d, n)) {
        if (c.dividers() < 2) continue;
        // Rotation by one arc maps label p to p - m_1 (mod n).
        std::vector<int> arcs(c.arcs().begin() + 1, c.arcs().end());
        arcs.push_back(c.arcs().front());
        const CircularComposition rotated(d, arcs, c.dividers());
        std::vector<int> rot(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) rot[static_cast<std::size_t>(p)] = (p - c.arcs().front() + n) % n;
        EXPECT_EQ(enumerate_facets_circular(c).relabeled(rot), enumerate_facets_circular(rotated));
        // Reflection p -> n - 1 - p reverses the arc order.
        const CircularComposition reflected(d, std::vector<int>(c.arcs().rbegin(), c.arcs().rend()), c.dividers());
        std::vector<int> ref(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) ref[static_cast<std::size_t>(p)] = n - 1 - p;
        EXPECT_EQ(enumerate_facets_circular(c).relabeled(ref), enumerate_facets_circular(reflected));
        EXPECT_EQ(facet_count(c), facet_count(rotated));
        EXPECT_EQ(facet_count(c), facet_count(reflected));
      }
    }
  }
}

TEST(Circular, RealizeExamples) {
  const auto r = realize(CircularComposition(4, {3, 4}));
  EXPECT_EQ(r.t.size(), 7);
  EXPECT_EQ(r.xi, (Chart{Rational(7) / 2, -1, 0, 0, 0}));
  const auto flat = realize(CircularComposition(4, {5}, 0));
  EXPECT_EQ(flat.xi, (Chart{1, 0, 0, 0, 0}));
}

TEST(Circular, RealizeRoundTrip) {
  for (int d = 1; d <= 7; ++d) {
    for (int n = d + 1; n <= 10; ++n) {
      for (const auto& c : testsupport::all_circular(d, n)) {
        const auto r = realize(c);
        EXPECT_EQ(canonical_arcs(induce_composition(decompose_chart(r.xi, r.t)).composition), canonical_arcs(c));
      }
    }
  }
}
