#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "veronese/facet_complex.hpp"

namespace veronese {

/// Relabeling-invariant byte encoding of a vertex-reduced facet complex.
class Certificate {
 public:
  Certificate() = default;
  explicit Certificate(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate&, const Certificate&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Canonical form by partition refinement plus individualization. Labels not
/// used by any facet are dropped first.
Certificate certificate(const FacetComplex& f);

/// The relabeled complex whose encoding is the certificate.
FacetComplex canonical_form(const FacetComplex& f);

/// Cheap isomorphism invariant: f-vector head, degree multiset and the multiset
/// of pairwise facet intersection sizes. Equal certificates imply equal invariants.
struct ComplexInvariant {
  int d = 0;
  int vertices = 0;
  std::size_t facets = 0;
  std::vector<int> degrees;
  std::vector<std::uint64_t> intersections;

  friend bool operator==(const ComplexInvariant&, const ComplexInvariant&) = default;
  friend auto operator<=>(const ComplexInvariant&, const ComplexInvariant&) = default;
};

ComplexInvariant invariant(const FacetComplex& f);

}  // namespace veronese
