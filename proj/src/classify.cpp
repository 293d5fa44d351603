#include "veronese/classify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "veronese/certificate.hpp"
#include "veronese/error.hpp"
#include "veronese/exact.hpp"

namespace veronese {

bool is_simplex(const CircularComposition& c) {
  return static_cast<int>(vertex_set(c).size()) == c.d() + 1;
}

bool is_cross_polytope(const FacetComplex& f) {
  if (f.empty()) return false;
  const FacetComplex r = f.restricted_to_vertices();
  const int d = r.d();
  const int nv = r.n_labels();
  if (nv != 2 * d || d >= 63 || r.size() != (std::size_t{1} << d)) return false;
  std::vector<std::vector<char>> adjacent(static_cast<std::size_t>(nv), std::vector<char>(static_cast<std::size_t>(nv), 0));
  for (const auto& facet : r.facets())
    for (int a : facet)
      for (int b : facet) adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
  std::vector<int> partner(static_cast<std::size_t>(nv), -1);
  for (int v = 0; v < nv; ++v) {
    for (int w = 0; w < nv; ++w) {
      if (adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
      if (partner[static_cast<std::size_t>(v)] != -1) return false;
      partner[static_cast<std::size_t>(v)] = w;
    }
    if (partner[static_cast<std::size_t>(v)] == -1) return false;
  }
  for (int v = 0; v < nv; ++v)
    if (partner[static_cast<std::size_t>(partner[static_cast<std::size_t>(v)])] != v) return false;
  // 2^d distinct facets avoiding every antipodal pair are exactly the transversals.
  return true;
}

bool is_cross_polytope(const CircularComposition& c) {
  return is_cross_polytope(enumerate_facets_circular(c));
}

bool is_stacked_family(const CircularComposition& c) {
  const int d = c.d();
  if (d < 3) throw Error(ErrorCode::domain, "stacked family needs d >= 3, got d = " + std::to_string(d));
  const int n = c.n();
  if (n < d + 1) return false;
  std::vector<int> sizes(static_cast<std::size_t>(d - 3), 1);
  sizes.push_back(n - d + 3);
  const auto pattern = induce_composition(SignedDecomposition(sizes, 1, d)).composition;
  if (canonical_arcs(pattern) != canonical_arcs(c)) return false;
  const auto expected = static_cast<std::uint64_t>((d - 1) * n - (d + 1) * (d - 2));
  return facet_count(c) == expected;
}

bool is_k_neighbourly(const FacetComplex& f, int k) {
  if (k < 1 || k > f.d() / 2)
    throw Error(ErrorCode::domain, "neighbourliness order " + std::to_string(k) + " outside [1, " +
                                       std::to_string(f.d() / 2) + "]");
  const FacetComplex r = f.restricted_to_vertices();
  std::set<std::vector<int>> faces;
  for (const auto& facet : r.facets()) {
    for_each_subset(r.d(), k, [&](const std::vector<int>& idx) {
      std::vector<int> face;
      for (int i : idx) face.push_back(facet[static_cast<std::size_t>(i)]);
      faces.insert(std::move(face));
    });
  }
  return static_cast<std::int64_t>(faces.size()) == binomial(r.n_labels(), k);
}

bool is_k_neighbourly(const CircularComposition& c, int k) {
  if (k < 1 || k > c.d() / 2)
    throw Error(ErrorCode::domain, "neighbourliness order " + std::to_string(k) + " outside [1, " +
                                       std::to_string(c.d() / 2) + "]");
  return is_k_neighbourly(enumerate_facets_circular(c), k);
}

bool is_cyclic_type(const CircularComposition& c) {
  const FacetComplex f = enumerate_facets_circular(c);
  const int nv = static_cast<int>(f.vertices().size());
  return certificate(f) == certificate(enumerate_facets_circular(CircularComposition::cyclic(c.d(), nv)));
}

Classification classify(const CircularComposition& c) {
  const FacetComplex f = enumerate_facets_circular(c);
  Classification out;
  out.vertices = static_cast<int>(f.vertices().size());
  out.facets = f.size();
  out.simplex = out.vertices == c.d() + 1;
  out.cross = is_cross_polytope(f);
  out.stacked_family = c.d() >= 3 && is_stacked_family(c);
  out.cyclic = certificate(f) == certificate(enumerate_facets_circular(CircularComposition::cyclic(c.d(), out.vertices)));
  out.neighbourly = c.d() < 2 || is_k_neighbourly(f, c.d() / 2);
  return out;
}

}  // namespace veronese
