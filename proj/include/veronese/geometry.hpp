#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "veronese/exact.hpp"
#include "veronese/facet_complex.hpp"
#include "veronese/rational.hpp"

namespace veronese {

/// Strictly increasing parameters t_1 < ... < t_n on the affine line.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<Rational> params);
  GroundSet(std::initializer_list<Rational> params) : GroundSet(std::vector<Rational>(params)) {}

  /// {first, first + 1, ..., first + n - 1}.
  static GroundSet consecutive(int first, int n);

  int size() const { return static_cast<int>(params_.size()); }
  const Rational& operator[](int i) const { return params_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& params() const { return params_; }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

 private:
  std::vector<Rational> params_;
};

/// Affine chart xi in R^{d+1}: a nonzero coefficient vector of q_xi(t) = sum xi_i t^i.
class Chart {
 public:
  Chart() = default;
  explicit Chart(Vector coords);
  Chart(std::initializer_list<Rational> coords);

  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  const Vector& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_(i); }

  Chart operator-() const { return Chart(Vector(-coords_)); }
  friend bool operator==(const Chart& a, const Chart& b) { return a.coords_ == b.coords_; }

 private:
  Vector coords_;
};

/// Consecutive runs of constant sign over a ground set, signs alternating.
struct SignedDecomposition {
  std::vector<int> sizes;
  int first_sign = 1;
  int d = 0;

  SignedDecomposition() = default;
  SignedDecomposition(std::vector<int> sizes, int first_sign, int d);

  int sign_changes() const { return static_cast<int>(sizes.size()) - 1; }
  int total() const;
  /// Sign of interval j (0-based).
  int interval_sign(int j) const { return (j % 2 == 0) ? first_sign : -first_sign; }
  SignedDecomposition flipped() const { return {sizes, -first_sign, d}; }

  friend bool operator==(const SignedDecomposition&, const SignedDecomposition&) = default;
};

/// nu_d(t) / q_xi(t); satisfies <xi, point> = 1.
struct CurvePoint {
  Vector coords;
};

Rational q_eval(const Chart& xi, const Rational& t);
CurvePoint curve_point(const Chart& xi, const Rational& t);

/// p_S(t) / q_xi(t) with p_S(t) = prod_{s in S} (t - s).
Rational lambda_eval(const Chart& xi, std::span<const Rational> s, const Rational& t);

bool is_power_of_linear_form(const Chart& xi);

// The facet tests take S as strictly increasing 0-based indices into T.
bool facet_test_lambda(const Chart& xi, const GroundSet& t, std::span<const int> s);
bool facet_test_determinant(const Chart& xi, const GroundSet& t, std::span<const int> s);

FacetComplex enumerate_facets_geometric(const Chart& xi, const GroundSet& t);
FacetComplex enumerate_facets_determinant(const Chart& xi, const GroundSet& t);

SignedDecomposition decompose_chart(const Chart& xi, const GroundSet& t);

/// Chart whose denominator is c * prod (t - s_i) over the gap midpoints s_i,
/// with c = +-1 fixed so that decompose_chart reproduces the decomposition.
Chart chart_from_decomposition(const SignedDecomposition& decomposition, const GroundSet& t);

/// Indices of generating points lying on some facet.
std::vector<int> vertices_geometric(const Chart& xi, const GroundSet& t);

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(std::as_const(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace veronese
