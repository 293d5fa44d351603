#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "veronese/circular.hpp"
#include "veronese/facet_complex.hpp"
#include "veronese/geometry.hpp"
#include "veronese/rational.hpp"

namespace testsupport {

using veronese::Rational;

inline Rational random_rational(std::mt19937_64& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng)) / Rational(den(rng));
}

/// n distinct random rationals, sorted.
inline veronese::GroundSet random_ground_set(std::mt19937_64& rng, int n) {
  std::set<Rational> values;
  while (static_cast<int>(values.size()) < n) values.insert(random_rational(rng, 40, 7));
  return veronese::GroundSet(std::vector<Rational>(values.begin(), values.end()));
}

inline veronese::SignedDecomposition random_decomposition(std::mt19937_64& rng, int d, int n) {
  const int k = std::uniform_int_distribution<int>(0, std::min(d, n - 1))(rng);
  std::vector<int> gaps(static_cast<std::size_t>(n - 1));
  std::iota(gaps.begin(), gaps.end(), 1);
  std::shuffle(gaps.begin(), gaps.end(), rng);
  std::vector<int> cuts(gaps.begin(), gaps.begin() + k);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return {sizes, std::bernoulli_distribution(0.5)(rng) ? 1 : -1, d};
}

/// Every composition (not up to symmetry) of n into l positive parts.
inline std::vector<std::vector<int>> all_compositions(int n, int l) {
  std::vector<std::vector<int>> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left) -> void {
    if (static_cast<int>(parts.size()) == l) {
      if (left == 0) out.push_back(parts);
      return;
    }
    for (int v = 1; v <= left; ++v) {
      parts.push_back(v);
      self(self, left - v);
      parts.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

/// Every valid composition with the given d and n (all rotations and reflections kept).
inline std::vector<veronese::CircularComposition> all_circular(int d, int n) {
  std::vector<veronese::CircularComposition> out;
  for (int l = d % 2; l <= d; l += 2) {
    if (l == 0) {
      out.emplace_back(d, std::vector<int>{n}, 0);
      continue;
    }
    for (auto& arcs : all_compositions(n, l)) out.emplace_back(d, std::move(arcs), l);
  }
  return out;
}

inline veronese::CircularComposition random_composition(std::mt19937_64& rng, int d, int n) {
  const auto all = all_circular(d, n);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

/// Exhaustive search for a label bijection between the vertex-reduced complexes.
inline bool brute_force_isomorphic(const veronese::FacetComplex& a, const veronese::FacetComplex& b) {
  const auto ra = a.restricted_to_vertices();
  const auto rb = b.restricted_to_vertices();
  if (ra.n_labels() != rb.n_labels() || ra.d() != rb.d() || ra.size() != rb.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(ra.n_labels()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (ra.relabeled(perm) == rb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Dense polynomials over Q, coefficient i of t^i.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<std::int64_t>(i)));
  trim(out);
  return out;
}

inline Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Number of distinct roots on P^1 of the binary form sum xi_j x^{d-j} y^j,
/// via the squarefree part of the dehomogenized polynomial plus the root at
/// infinity when the degree drops.
inline int distinct_projective_roots(const Poly& xi) {
  const int d = static_cast<int>(xi.size()) - 1;
  Poly f = xi;
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  int finite = 0;
  if (deg > 0) {
    const Poly g = gcd(f, derivative(f));
    finite = deg - (static_cast<int>(g.size()) - 1);
  }
  return finite + (deg < d ? 1 : 0);
}

}  // namespace testsupport
