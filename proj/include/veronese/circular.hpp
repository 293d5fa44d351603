#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "veronese/facet_complex.hpp"
#include "veronese/geometry.hpp"

namespace veronese {

/// n points on a circle cut into l arcs by l dividers, l = d (mod 2), l <= d.
///
/// Points are labeled 0..n-1 cyclically starting with the first point of arc 1.
/// Divider j (0-based) joins the last point of arc j with the first point of
/// arc j+1, the last divider wrapping around to label 0. With no dividers
/// (even d only) the composition is a bare cycle stored as a single arc.
class CircularComposition {
 public:
  CircularComposition() = default;
  /// `dividers` defaults to arcs.size(); pass 0 together with a single arc for
  /// the dividerless cycle.
  CircularComposition(int d, std::vector<int> arcs, std::optional<int> dividers = std::nullopt);

  /// Composition of the cyclic polytope on n points: no divider for even d, one for odd d.
  static CircularComposition cyclic(int d, int n);

  int d() const { return d_; }
  const std::vector<int>& arcs() const { return arcs_; }
  int dividers() const { return dividers_; }
  int n() const { return n_; }

  /// Label of the first point of arc j (0-based).
  int arc_start(int j) const;
  /// Endpoint labels of divider j (0-based).
  std::pair<int, int> divider(int j) const;

  friend bool operator==(const CircularComposition&, const CircularComposition&) = default;

 private:
  int d_ = 0;
  std::vector<int> arcs_;
  int dividers_ = 0;
  int n_ = 0;
};

/// Induced composition plus the structure map tau: line position -> circle label.
struct InducedComposition {
  CircularComposition composition;
  std::vector<int> tau;
};

InducedComposition induce_composition(const SignedDecomposition& decomposition);

/// Lexicographically smallest arc sequence over all rotations and reflections.
CircularComposition canonical_arcs(const CircularComposition& c);

/// All d-sets with one point per divider (pairwise distinct) plus (d-l)/2
/// disjoint consecutive pairs, deduplicated.
FacetComplex enumerate_facets_circular(const CircularComposition& c);

/// Number of (S1, S2) choices before deduplication; equals the facet count
/// exactly when every facet has a unique circular decomposition.
std::size_t count_circular_choices(const CircularComposition& c);

/// All labels when l < d, the union of divider endpoints when l = d.
std::vector<int> vertex_set(const CircularComposition& c);

/// Closed-form facet count.
std::uint64_t facet_count(const CircularComposition& c);

struct Realization {
  GroundSet t;
  Chart xi;
};

/// T = {1..n} cut into the arcs as line intervals, chart from gap midpoints.
Realization realize(const CircularComposition& c);

/// Signed decomposition (first sign +) that realize() uses.
SignedDecomposition line_decomposition(const CircularComposition& c);

}  // namespace veronese
