#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "veronese/facet_complex.hpp"
#include "veronese/geometry.hpp"

namespace veronese {

/// Positions 1..n of a signed decomposition addressed as t_{j,i}: interval j
/// (1-based, 1..k+1) and rank i inside it (1-based). Parity conditions are
/// stated for 1-based positions, so this class works 1-based throughout.
class IndexedDecomposition {
 public:
  explicit IndexedDecomposition(const SignedDecomposition& decomposition);

  int n() const { return n_; }
  int k() const { return static_cast<int>(starts_.size()) - 1; }
  int interval_size(int j) const { return sizes_[static_cast<std::size_t>(j - 1)]; }
  /// Flattened position of t_{j,i}.
  int position(int j, int i) const { return starts_[static_cast<std::size_t>(j - 1)] + i - 1; }
  int first(int j) const { return position(j, 1); }
  int last(int j) const { return position(j, interval_size(j)); }
  /// Interval containing the 1-based position p.
  int interval_of(int p) const { return interval_[static_cast<std::size_t>(p - 1)]; }
  int sign_at(int p) const { return signs_[static_cast<std::size_t>(p - 1)]; }

 private:
  int n_ = 0;
  std::vector<int> sizes_;
  std::vector<int> starts_;
  std::vector<int> interval_;
  std::vector<int> signs_;
};

/// L is a strictly increasing list of 1-based positions.
bool is_sigma_pa(const SignedDecomposition& decomposition, std::span<const int> l);

/// Facets as complements of sigma-parity-alternating sequences of length n - d.
FacetComplex enumerate_facets_line(const SignedDecomposition& decomposition);

/// The unique S = S1 + S2 + S3 witnessing that S is a facet. All positions 0-based.
struct S123Decomposition {
  std::vector<int> s1;  ///< s1[j] is the element chosen for sign change j (j = 0..k-1)
  std::vector<int> s2;  ///< subset of {first position, last position}
  std::vector<std::pair<int, int>> s3;  ///< consecutive pairs inside one interval

  friend bool operator==(const S123Decomposition&, const S123Decomposition&) = default;
};

/// Builds the decomposition interval by interval and validates it; nullopt iff
/// S (0-based, strictly increasing) does not span a facet.
std::optional<S123Decomposition> s123_decompose(const SignedDecomposition& decomposition,
                                                std::span<const int> s);

/// True iff (s1, s2, s3) satisfies the three conditions for S = their union.
bool satisfies_s123(const SignedDecomposition& decomposition, const S123Decomposition& candidate);

FacetComplex enumerate_facets_s123(const SignedDecomposition& decomposition);

}  // namespace veronese
