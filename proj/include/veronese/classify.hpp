#pragma once

#include <cstdint>

#include "veronese/circular.hpp"
#include "veronese/facet_complex.hpp"

namespace veronese {

bool is_simplex(const CircularComposition& c);

/// Structural test on any complex: 2d vertices in d antipodal pairs, every facet
/// picks one vertex from each pair.
bool is_cross_polytope(const FacetComplex& f);
bool is_cross_polytope(const CircularComposition& c);

/// Matches the stacked family (line sizes 1,...,1,n-d+3) up to dihedral symmetry
/// and checks the stacked facet count (d-1)n - (d+1)(d-2). Requires d >= 3.
bool is_stacked_family(const CircularComposition& c);

/// Every k-subset of the vertices lies in some facet. Requires 1 <= k <= d/2.
bool is_k_neighbourly(const FacetComplex& f, int k);
bool is_k_neighbourly(const CircularComposition& c, int k);

/// Same combinatorial type as the cyclic polytope on the same number of vertices.
bool is_cyclic_type(const CircularComposition& c);

struct Classification {
  int vertices = 0;
  std::uint64_t facets = 0;
  bool simplex = false;
  bool cross = false;
  bool stacked_family = false;
  bool cyclic = false;
  bool neighbourly = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// stacked_family is false for d < 3 and neighbourly uses k = d/2 (vacuously true for d = 1).
Classification classify(const CircularComposition& c);

}  // namespace veronese
