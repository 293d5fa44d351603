#include "veronese/exact.hpp"

#include <utility>

namespace veronese {

namespace detail {

int bareiss_sign(std::vector<mpz_class> a, Eigen::Index n) {
  if (n == 0) return 1;
  const auto at = [&a, n](Eigen::Index i, Eigen::Index j) -> mpz_class& {
    return a[static_cast<std::size_t>(i * n + j)];
  };
  int sign = 1;
  mpz_class prev_pivot = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (Eigen::Index j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // Exact division: Sylvester's identity guarantees divisibility.
        mpz_class v = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    prev_pivot = at(k, k);
  }
  return sign * sgn(at(n - 1, n - 1));
}

}  // namespace detail

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

bool is_power_of_linear_form(const Vector& xi) {
  if (xi.size() < 2) throw Error(ErrorCode::invalid_chart, "chart needs at least two coordinates");
  bool all_zero = true;
  for (Eigen::Index j = 0; j < xi.size(); ++j) all_zero = all_zero && xi(j).is_zero();
  if (all_zero) throw Error(ErrorCode::invalid_chart, "chart is identically zero");

  const auto d = xi.size() - 1;
  Vector c(xi.size());
  for (Eigen::Index j = 0; j <= d; ++j) c(j) = xi(j) / Rational(binomial(d, j));
  // Rows (c_0..c_{d-1}) and (c_1..c_d); every 2x2 minor must vanish.
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = i + 1; j < d; ++j)
      if (c(i) * c(j + 1) != c(j) * c(i + 1)) return false;
  return true;
}

}  // namespace veronese
