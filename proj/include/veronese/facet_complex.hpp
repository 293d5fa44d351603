#pragma once

#include <vector>

namespace veronese {

/// Sorted list of labels spanning a facet.
using Facet = std::vector<int>;

/// A pure simplicial complex given by its facets: d-subsets of {0, ..., n_labels - 1}.
/// Facets are kept sorted and the list is kept in lexicographic order.
class FacetComplex {
 public:
  FacetComplex() = default;
  FacetComplex(int n_labels, int d, std::vector<Facet> facets);

  int n_labels() const { return n_labels_; }
  int d() const { return d_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t size() const { return facets_.size(); }
  bool empty() const { return facets_.empty(); }
  bool contains(const Facet& facet) const;

  /// Labels occurring in at least one facet, ascending.
  std::vector<int> vertices() const;

  /// Same complex with vertices renumbered 0..v-1 in increasing order.
  FacetComplex restricted_to_vertices() const;

  /// Applies label -> perm[label]; perm must be a bijection onto [0, n_labels).
  FacetComplex relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const FacetComplex&, const FacetComplex&) = default;

 private:
  int n_labels_ = 0;
  int d_ = 0;
  std::vector<Facet> facets_;
};

}  // namespace veronese
