#include "veronese/line.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "veronese/error.hpp"

namespace veronese {

IndexedDecomposition::IndexedDecomposition(const SignedDecomposition& decomposition)
    : sizes_(decomposition.sizes) {
  int pos = 1;
  for (std::size_t j = 0; j < sizes_.size(); ++j) {
    starts_.push_back(pos);
    for (int i = 0; i < sizes_[j]; ++i) {
      interval_.push_back(static_cast<int>(j) + 1);
      signs_.push_back(decomposition.interval_sign(static_cast<int>(j)));
      ++pos;
    }
  }
  n_ = pos - 1;
}

bool is_sigma_pa(const SignedDecomposition& decomposition, std::span<const int> l) {
  const IndexedDecomposition idx(decomposition);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 1 || l[i] > idx.n())
      throw Error(ErrorCode::index, "position " + std::to_string(l[i]) + " outside 1.." + std::to_string(idx.n()));
    if (i > 0 && l[i] <= l[i - 1]) throw Error(ErrorCode::precondition, "sequence must be strictly increasing");
  }
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    const bool same_sign = idx.sign_at(l[i]) == idx.sign_at(l[i + 1]);
    const bool different_parity = ((l[i] + l[i + 1]) % 2) != 0;
    if (same_sign != different_parity) return false;
  }
  return true;
}

namespace {

void check_line_instance(const SignedDecomposition& decomposition) {
  if (decomposition.total() <= decomposition.d)
    throw Error(ErrorCode::underdetermined, "need n >= d + 1, got n = " + std::to_string(decomposition.total()) +
                                                ", d = " + std::to_string(decomposition.d));
}

struct PaSearch {
  const IndexedDecomposition& idx;
  int length;
  int d;
  std::vector<int> current;
  std::vector<Facet> facets;

  void extend(int from) {
    if (static_cast<int>(current.size()) == length) {
      Facet f;
      f.reserve(static_cast<std::size_t>(d));
      std::size_t c = 0;
      for (int p = 1; p <= idx.n(); ++p) {
        if (c < current.size() && current[c] == p) {
          ++c;
          continue;
        }
        f.push_back(p - 1);
      }
      facets.push_back(std::move(f));
      return;
    }
    const int remaining = length - static_cast<int>(current.size());
    for (int p = from; p <= idx.n() - remaining + 1; ++p) {
      if (!current.empty()) {
        const int q = current.back();
        const bool same_sign = idx.sign_at(q) == idx.sign_at(p);
        const bool different_parity = ((q + p) % 2) != 0;
        if (same_sign != different_parity) continue;
      }
      current.push_back(p);
      extend(p + 1);
      current.pop_back();
    }
  }
};

}  // namespace

FacetComplex enumerate_facets_line(const SignedDecomposition& decomposition) {
  check_line_instance(decomposition);
  const IndexedDecomposition idx(decomposition);
  PaSearch search{idx, idx.n() - decomposition.d, decomposition.d, {}, {}};
  search.extend(1);
  return FacetComplex(idx.n(), decomposition.d, std::move(search.facets));
}

bool satisfies_s123(const SignedDecomposition& decomposition, const S123Decomposition& c) {
  const IndexedDecomposition idx(decomposition);
  const int n = idx.n();
  const int k = idx.k();
  const int d = decomposition.d;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  const auto take = [&](int p0) {
    if (p0 < 0 || p0 >= n || used[static_cast<std::size_t>(p0)]) return false;
    used[static_cast<std::size_t>(p0)] = 1;
    return true;
  };

  if (static_cast<int>(c.s1.size()) != k) return false;
  for (int j = 1; j <= k; ++j) {
    const int p = c.s1[static_cast<std::size_t>(j - 1)] + 1;
    if (p != idx.last(j) && p != idx.first(j + 1)) return false;
    if (!take(p - 1)) return false;
  }
  if (c.s2.size() > 2) return false;
  for (int p0 : c.s2) {
    if (p0 != 0 && p0 != n - 1) return false;
    if (!take(p0)) return false;
  }
  const int rest = d - k - static_cast<int>(c.s2.size());
  if (rest < 0 || rest % 2 != 0) return false;
  if (static_cast<int>(c.s3.size()) * 2 != rest) return false;
  for (const auto& [a, b] : c.s3) {
    if (b != a + 1 || a < 0 || b >= n) return false;
    if (idx.interval_of(a + 1) != idx.interval_of(b + 1)) return false;
    if (!take(a) || !take(b)) return false;
  }
  return true;
}

std::optional<S123Decomposition> s123_decompose(const SignedDecomposition& decomposition,
                                                std::span<const int> s) {
  const int d = decomposition.d;
  if (static_cast<int>(s.size()) != d)
    throw Error(ErrorCode::arity, "S has " + std::to_string(s.size()) + " elements, expected " + std::to_string(d));
  const IndexedDecomposition idx(decomposition);
  const int n = idx.n();
  const int k = idx.k();
  std::vector<char> in_s(static_cast<std::size_t>(n + 2), 0);  // 1-based, padded
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw Error(ErrorCode::index, "position outside the ground set");
    if (i > 0 && s[i] <= s[i - 1]) throw Error(ErrorCode::precondition, "S must be strictly increasing");
    in_s[static_cast<std::size_t>(s[i] + 1)] = 1;
  }

  std::vector<int> s1(static_cast<std::size_t>(k), -1);
  std::vector<int> s2;
  std::vector<int> s3_points;

  for (int a = 1; a <= n; ++a) {
    if (!in_s[static_cast<std::size_t>(a)] || in_s[static_cast<std::size_t>(a - 1)]) continue;
    int b = a;
    while (b + 1 <= n && in_s[static_cast<std::size_t>(b + 1)]) ++b;
    // Maximal interval J = [a, b] of S.
    const auto in_j = [a, b](int p) { return p >= a && p <= b; };
    const auto count_in = [&](int interval, int excluded) {
      int cnt = 0;
      for (int p = idx.first(interval); p <= idx.last(interval); ++p)
        if (in_j(p) && p != excluded) ++cnt;
      return cnt;
    };
    std::vector<int> dividers;
    for (int j = 1; j <= k; ++j)
      if (in_j(idx.last(j)) || in_j(idx.first(j + 1))) dividers.push_back(j);

    std::map<int, int> j1;  // divider -> chosen position
    std::vector<int> j2;
    if (a == 1) {
      int next = 0;
      for (auto it = dividers.rbegin(); it != dividers.rend(); ++it) {
        const int j = *it;
        const int cnt = count_in(j + 1, next);
        j1[j] = (cnt % 2 == 1) ? idx.first(j + 1) : idx.last(j);
        next = j1[j];
      }
      int cnt = 0;
      for (int p = idx.first(1); p <= idx.last(1); ++p) {
        bool chosen = false;
        for (const auto& [j, q] : j1) chosen = chosen || q == p;
        if (in_j(p) && !chosen) ++cnt;
      }
      if (cnt % 2 == 1) j2.push_back(1);
    } else {
      int prev = 0;
      for (int j : dividers) {
        const int cnt = count_in(j, prev);
        j1[j] = (cnt % 2 == 1) ? idx.last(j) : idx.first(j + 1);
        prev = j1[j];
      }
      if (in_j(n)) {
        int cnt = 0;
        for (int p = idx.first(k + 1); p <= idx.last(k + 1); ++p) {
          bool chosen = false;
          for (const auto& [j, q] : j1) chosen = chosen || q == p;
          if (in_j(p) && !chosen) ++cnt;
        }
        if (cnt % 2 == 1) j2.push_back(n);
      }
    }

    for (const auto& [j, p] : j1) {
      if (!in_j(p)) return std::nullopt;
      s1[static_cast<std::size_t>(j - 1)] = p - 1;
    }
    for (int p : j2) s2.push_back(p - 1);
    for (int p = a; p <= b; ++p) {
      bool taken = std::find(j2.begin(), j2.end(), p) != j2.end();
      for (const auto& [j, q] : j1) taken = taken || q == p;
      if (!taken) s3_points.push_back(p - 1);
    }
  }

  if (std::find(s1.begin(), s1.end(), -1) != s1.end()) return std::nullopt;
  if (s3_points.size() % 2 != 0) return std::nullopt;
  S123Decomposition out;
  out.s1 = std::move(s1);
  std::sort(s2.begin(), s2.end());
  out.s2 = std::move(s2);
  // Smallest remaining point can only pair with its successor.
  std::sort(s3_points.begin(), s3_points.end());
  for (std::size_t i = 0; i < s3_points.size(); i += 2) out.s3.emplace_back(s3_points[i], s3_points[i + 1]);
  if (!satisfies_s123(decomposition, out)) return std::nullopt;
  return out;
}

FacetComplex enumerate_facets_s123(const SignedDecomposition& decomposition) {
  check_line_instance(decomposition);
  std::vector<Facet> facets;
  for_each_subset(decomposition.total(), decomposition.d, [&](const std::vector<int>& s) {
    if (s123_decompose(decomposition, s)) facets.push_back(s);
  });
  return FacetComplex(decomposition.total(), decomposition.d, std::move(facets));
}

}  // namespace veronese
