#pragma once

#include <Eigen/Core>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <ranges>
#include <vector>

#include "veronese/error.hpp"
#include "veronese/rational.hpp"

namespace veronese {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

namespace detail {

/// Sign of the determinant of a row-major n x n integer matrix (Bareiss).
int bareiss_sign(std::vector<mpz_class> entries, Eigen::Index n);

inline void append_integer_row(std::vector<mpz_class>& out, const std::vector<Rational>& row) {
  mpz_class scale = 1;
  for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.denominator().get_mpz_t());
  for (const auto& x : row) out.push_back(x.numerator() * (scale / x.denominator()));
}

template <std::integral I>
void append_integer_row(std::vector<mpz_class>& out, const std::vector<I>& row) {
  for (I x : row) out.emplace_back(static_cast<long>(x));
}

inline void append_integer_row(std::vector<mpz_class>& out, const std::vector<mpz_class>& row) {
  out.insert(out.end(), row.begin(), row.end());
}

}  // namespace detail

/// Exact sign of det(m) in {-1, 0, +1}. Rational rows are scaled by the
/// (positive) lcm of their denominators, then eliminated fraction-free.
template <typename Derived>
int sign_det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols())
    throw Error(ErrorCode::dimension, "sign_det expects a square matrix, got " +
                                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  std::vector<mpz_class> entries;
  entries.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  std::vector<Scalar> row(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
    detail::append_integer_row(entries, row);
  }
  return detail::bareiss_sign(std::move(entries), m.rows());
}

/// sigma_i of the values, with sigma_0 = 1.
template <std::ranges::forward_range R>
auto elementary_symmetric(const R& values, std::size_t i) {
  using Scalar = std::ranges::range_value_t<R>;
  const auto count = static_cast<std::size_t>(std::ranges::distance(values));
  if (i > count)
    throw Error(ErrorCode::index, "elementary_symmetric index " + std::to_string(i) +
                                      " exceeds " + std::to_string(count));
  // e[j] holds sigma_j of the prefix processed so far.
  std::vector<Scalar> e(i + 1, Scalar(0));
  e[0] = Scalar(1);
  for (const auto& v : values)
    for (std::size_t j = i; j >= 1; --j) e[j] += e[j - 1] * v;
  return e[i];
}

/// All of sigma_0 .. sigma_m for m = |values|.
template <std::ranges::forward_range R>
auto elementary_symmetric_all(const R& values) {
  using Scalar = std::ranges::range_value_t<R>;
  const auto count = static_cast<std::size_t>(std::ranges::distance(values));
  std::vector<Scalar> e(count + 1, Scalar(0));
  e[0] = Scalar(1);
  std::size_t seen = 0;
  for (const auto& v : values) {
    ++seen;
    for (std::size_t j = seen; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e;
}

/// Binomial coefficient with C(n,k) = 0 for n < 0 or k outside [0, n].
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// True iff sum_j xi_j x^(d-j) y^j is c * (a x + b y)^d, d = xi.size() - 1.
/// Tested as rank <= 1 of the Hankel pair built from c_j = xi_j / C(d, j).
bool is_power_of_linear_form(const Vector& xi);

}  // namespace veronese
