#include "veronese/circular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "veronese/error.hpp"
#include "veronese/exact.hpp"

namespace veronese {

CircularComposition::CircularComposition(int d, std::vector<int> arcs, std::optional<int> dividers)
    : d_(d), arcs_(std::move(arcs)) {
  if (d_ < 1) throw Error(ErrorCode::domain, "dimension must be positive");
  if (arcs_.empty()) throw Error(ErrorCode::invalid_decomposition, "composition needs at least one arc");
  for (int m : arcs_)
    if (m < 1) throw Error(ErrorCode::invalid_decomposition, "arc sizes must be positive");
  dividers_ = dividers.value_or(static_cast<int>(arcs_.size()));
  if (dividers_ == 0) {
    if (arcs_.size() != 1)
      throw Error(ErrorCode::invalid_decomposition, "a dividerless composition is given by a single arc [n]");
  } else if (dividers_ != static_cast<int>(arcs_.size())) {
    throw Error(ErrorCode::invalid_decomposition, "number of dividers must equal the number of arcs");
  }
  if (dividers_ > d_)
    throw Error(ErrorCode::invalid_decomposition,
                std::to_string(dividers_) + " dividers exceed d = " + std::to_string(d_));
  if ((dividers_ - d_) % 2 != 0)
    throw Error(ErrorCode::invalid_decomposition, "number of dividers must have the parity of d");
  for (int m : arcs_) n_ += m;
}

CircularComposition CircularComposition::cyclic(int d, int n) {
  return d % 2 == 0 ? CircularComposition(d, {n}, 0) : CircularComposition(d, {n}, 1);
}

int CircularComposition::arc_start(int j) const {
  int start = 0;
  for (int i = 0; i < j; ++i) start += arcs_[static_cast<std::size_t>(i)];
  return start;
}

std::pair<int, int> CircularComposition::divider(int j) const {
  if (j < 0 || j >= dividers_) throw Error(ErrorCode::index, "divider index out of range");
  const int last = arc_start(j) + arcs_[static_cast<std::size_t>(j)] - 1;
  const int next_first = (j + 1 == dividers_) ? 0 : arc_start(j + 1);
  return {last, next_first};
}

InducedComposition induce_composition(const SignedDecomposition& decomposition) {
  const int d = decomposition.d;
  const int k = decomposition.sign_changes();
  const int n = decomposition.total();
  const auto& sizes = decomposition.sizes;
  InducedComposition out;
  out.tau.resize(static_cast<std::size_t>(n));

  if ((d - k) % 2 != 0) {
    // l = k + 1: arcs are the intervals, tau is the identity.
    out.composition = CircularComposition(d, sizes, k + 1);
    for (int p = 0; p < n; ++p) out.tau[static_cast<std::size_t>(p)] = p;
  } else if (k == 0) {
    out.composition = CircularComposition(d, {n}, 0);
    for (int p = 0; p < n; ++p) out.tau[static_cast<std::size_t>(p)] = p;
  } else {
    // l = k: I_2, ..., I_k become arcs 1..k-1 and I_{k+1} followed by I_1 forms arc k.
    std::vector<int> arcs(sizes.begin() + 1, sizes.end());
    arcs.back() += sizes.front();
    out.composition = CircularComposition(d, std::move(arcs), k);
    const int first = sizes.front();
    for (int p = 0; p < n; ++p)
      out.tau[static_cast<std::size_t>(p)] = (p < first) ? n - first + p : p - first;
  }
  return out;
}

CircularComposition canonical_arcs(const CircularComposition& c) {
  if (c.dividers() <= 1) return c;
  const auto& arcs = c.arcs();
  const std::size_t l = arcs.size();
  std::vector<int> best = arcs;
  std::vector<int> reversed(arcs.rbegin(), arcs.rend());
  for (const std::vector<int>* base : {&arcs, static_cast<const std::vector<int>*>(&reversed)}) {
    for (std::size_t r = 0; r < l; ++r) {
      std::vector<int> candidate(l);
      for (std::size_t i = 0; i < l; ++i) candidate[i] = (*base)[(i + r) % l];
      best = std::min(best, candidate);
    }
  }
  return CircularComposition(c.d(), std::move(best), c.dividers());
}

namespace {

void require_enough_points(const CircularComposition& c) {
  if (c.n() <= c.d())
    throw Error(ErrorCode::underdetermined, "need n >= d + 1, got n = " + std::to_string(c.n()) +
                                                ", d = " + std::to_string(c.d()));
}

struct CircularSearch {
  const CircularComposition& c;
  std::vector<std::pair<int, int>> dividers;
  std::vector<char> used;
  std::vector<int> chosen;
  std::vector<Facet> facets;
  std::size_t raw = 0;

  explicit CircularSearch(const CircularComposition& comp)
      : c(comp), used(static_cast<std::size_t>(comp.n()), 0) {
    for (int j = 0; j < c.dividers(); ++j) dividers.push_back(c.divider(j));
  }

  void choose_divider_points(int j) {
    if (j == c.dividers()) {
      choose_pairs(0, (c.d() - c.dividers()) / 2);
      return;
    }
    for (int p : {dividers[static_cast<std::size_t>(j)].first, dividers[static_cast<std::size_t>(j)].second}) {
      if (used[static_cast<std::size_t>(p)]) continue;
      used[static_cast<std::size_t>(p)] = 1;
      chosen.push_back(p);
      choose_divider_points(j + 1);
      chosen.pop_back();
      used[static_cast<std::size_t>(p)] = 0;
    }
  }

  void choose_pairs(int from, int remaining) {
    if (remaining == 0) {
      Facet f = chosen;
      std::sort(f.begin(), f.end());
      facets.push_back(std::move(f));
      ++raw;
      return;
    }
    const int n = c.n();
    for (int x = from; x < n; ++x) {
      const int y = (x + 1) % n;
      if (used[static_cast<std::size_t>(x)] || used[static_cast<std::size_t>(y)]) continue;
      for (const auto& [a, b] : dividers)
        if ((a == x && b == y) || (a == y && b == x))
          throw std::logic_error("free consecutive pair coincides with a divider");
      used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = 1;
      chosen.push_back(x);
      chosen.push_back(y);
      choose_pairs(x + 1, remaining - 1);
      chosen.resize(chosen.size() - 2);
      used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = 0;
    }
  }
};

}  // namespace

FacetComplex enumerate_facets_circular(const CircularComposition& c) {
  require_enough_points(c);
  CircularSearch search(c);
  search.choose_divider_points(0);
  auto& facets = search.facets;
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return FacetComplex(c.n(), c.d(), std::move(facets));
}

std::size_t count_circular_choices(const CircularComposition& c) {
  require_enough_points(c);
  CircularSearch search(c);
  search.choose_divider_points(0);
  return search.raw;
}

std::vector<int> vertex_set(const CircularComposition& c) {
  require_enough_points(c);
  std::vector<int> out;
  if (c.dividers() < c.d()) {
    for (int p = 0; p < c.n(); ++p) out.push_back(p);
    return out;
  }
  for (int j = 0; j < c.dividers(); ++j) {
    const auto [a, b] = c.divider(j);
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Calls visit(r) for every r in Z_{>=0}^l with sum r = total.
template <typename Visit>
void for_each_weak_composition(int l, int total, Visit&& visit) {
  std::vector<int> r(static_cast<std::size_t>(l), 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == l - 1) {
      r[static_cast<std::size_t>(j)] = left;
      visit(std::as_const(r));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      r[static_cast<std::size_t>(j)] = v;
      self(self, j + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

// roles[j]: 0 = neither, 1 = in A, 2 = in B. Interlacing means the marked
// indices alternate between A and B in increasing order, with |A| = |B|.
bool interlacing(const std::vector<int>& roles) {
  int last = 0;
  int count_a = 0;
  int count_b = 0;
  for (int role : roles) {
    if (role == 0) continue;
    if (role == last) return false;
    last = role;
    (role == 1 ? count_a : count_b)++;
  }
  return count_a == count_b;
}

}  // namespace

std::uint64_t facet_count(const CircularComposition& c) {
  require_enough_points(c);
  const int d = c.d();
  const int l = c.dividers();
  if (l == 0) {
    const int n = c.n();
    return static_cast<std::uint64_t>(binomial(n - d / 2, d / 2) + binomial(n - 1 - d / 2, d / 2 - 1));
  }
  const auto& m = c.arcs();
  const int r_total = (d - l) / 2;

  // All role assignments with 1 <= |B| <= floor(l/2) and A, B interlacing.
  std::vector<std::vector<int>> role_sets;
  std::vector<int> roles(static_cast<std::size_t>(l), 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == l) {
      const auto b = std::count(roles.begin(), roles.end(), 2);
      if (b >= 1 && b <= l / 2 && interlacing(roles)) role_sets.push_back(roles);
      return;
    }
    for (int role = 0; role < 3; ++role) {
      roles[static_cast<std::size_t>(j)] = role;
      self(self, j + 1);
    }
  };
  rec(rec, 0);

  std::uint64_t total = 0;
  for_each_weak_composition(l, r_total, [&](const std::vector<int>& r) {
    std::vector<std::int64_t> w_none(static_cast<std::size_t>(l));
    std::vector<std::int64_t> w_a(static_cast<std::size_t>(l));
    std::vector<std::int64_t> w_b(static_cast<std::size_t>(l));
    std::int64_t all_none = 1;
    for (std::size_t j = 0; j < static_cast<std::size_t>(l); ++j) {
      w_a[j] = binomial(m[j] - r[j], r[j]);
      w_b[j] = binomial(m[j] - 2 - r[j], r[j]);
      w_none[j] = binomial(m[j] - 1 - r[j], r[j]);
      all_none *= w_none[j];
    }
    for (const auto& rs : role_sets) {
      std::int64_t prod = 1;
      for (std::size_t j = 0; j < rs.size(); ++j)
        prod *= rs[j] == 1 ? w_a[j] : (rs[j] == 2 ? w_b[j] : w_none[j]);
      total += static_cast<std::uint64_t>(prod);
    }
    total += 2 * static_cast<std::uint64_t>(all_none);
  });
  return total;
}

SignedDecomposition line_decomposition(const CircularComposition& c) {
  if (c.dividers() == 0) return SignedDecomposition({c.n()}, 1, c.d());
  return SignedDecomposition(c.arcs(), 1, c.d());
}

Realization realize(const CircularComposition& c) {
  auto t = GroundSet::consecutive(1, c.n());
  auto xi = chart_from_decomposition(line_decomposition(c), t);
  return {std::move(t), std::move(xi)};
}

}  // namespace veronese
