#include "veronese/facet_complex.hpp"

#include <algorithm>
#include <string>

#include "veronese/error.hpp"

namespace veronese {

FacetComplex::FacetComplex(int n_labels, int d, std::vector<Facet> facets)
    : n_labels_(n_labels), d_(d), facets_(std::move(facets)) {
  for (auto& f : facets_) {
    if (static_cast<int>(f.size()) != d_)
      throw Error(ErrorCode::arity, "facet of size " + std::to_string(f.size()) + ", expected " +
                                        std::to_string(d_));
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(ErrorCode::precondition, "facet with a repeated label");
    if (!f.empty() && (f.front() < 0 || f.back() >= n_labels_))
      throw Error(ErrorCode::index, "facet label out of range");
  }
  std::sort(facets_.begin(), facets_.end());
  if (std::adjacent_find(facets_.begin(), facets_.end()) != facets_.end())
    throw Error(ErrorCode::precondition, "duplicate facet");
}

bool FacetComplex::contains(const Facet& facet) const {
  Facet f = facet;
  std::sort(f.begin(), f.end());
  return std::binary_search(facets_.begin(), facets_.end(), f);
}

std::vector<int> FacetComplex::vertices() const {
  std::vector<char> seen(static_cast<std::size_t>(n_labels_), 0);
  for (const auto& f : facets_)
    for (int v : f) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int v = 0; v < n_labels_; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

FacetComplex FacetComplex::restricted_to_vertices() const {
  const auto verts = vertices();
  std::vector<int> index(static_cast<std::size_t>(n_labels_), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<Facet> out = facets_;
  for (auto& f : out)
    for (int& v : f) v = index[static_cast<std::size_t>(v)];
  return FacetComplex(static_cast<int>(verts.size()), d_, std::move(out));
}

FacetComplex FacetComplex::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_labels_)
    throw Error(ErrorCode::dimension, "relabeling has wrong length");
  std::vector<Facet> out = facets_;
  for (auto& f : out)
    for (int& v : f) v = perm[static_cast<std::size_t>(v)];
  return FacetComplex(n_labels_, d_, std::move(out));
}

}  // namespace veronese
