#include "veronese/geometry.hpp"

#include <algorithm>
#include <string>

#include "veronese/error.hpp"

namespace veronese {

GroundSet::GroundSet(std::vector<Rational> params) : params_(std::move(params)) {
  for (std::size_t i = 1; i < params_.size(); ++i)
    if (!(params_[i - 1] < params_[i]))
      throw Error(ErrorCode::precondition, "ground set must be strictly increasing");
}

GroundSet GroundSet::consecutive(int first, int n) {
  std::vector<Rational> p;
  p.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.emplace_back(first + i);
  return GroundSet(std::move(p));
}

Chart::Chart(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw Error(ErrorCode::invalid_chart, "chart needs d >= 1");
  bool all_zero = true;
  for (Eigen::Index i = 0; i < coords_.size(); ++i) all_zero = all_zero && coords_(i).is_zero();
  if (all_zero) throw Error(ErrorCode::invalid_chart, "chart is identically zero");
}

Chart::Chart(std::initializer_list<Rational> coords) : Chart([&] {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}()) {}

SignedDecomposition::SignedDecomposition(std::vector<int> sizes_in, int first_sign_in, int d_in)
    : sizes(std::move(sizes_in)), first_sign(first_sign_in), d(d_in) {
  if (d < 1) throw Error(ErrorCode::invalid_decomposition, "dimension must be positive");
  if (sizes.empty()) throw Error(ErrorCode::invalid_decomposition, "decomposition has no intervals");
  if (first_sign != 1 && first_sign != -1)
    throw Error(ErrorCode::invalid_decomposition, "first_sign must be +1 or -1");
  for (int s : sizes)
    if (s < 1) throw Error(ErrorCode::invalid_decomposition, "interval sizes must be positive");
  if (sign_changes() > d)
    throw Error(ErrorCode::invalid_decomposition,
                std::to_string(sign_changes()) + " sign changes exceed d = " + std::to_string(d));
}

int SignedDecomposition::total() const {
  int n = 0;
  for (int s : sizes) n += s;
  return n;
}

Rational q_eval(const Chart& xi, const Rational& t) {
  // Horner.
  Rational acc(0);
  for (int i = xi.dimension(); i >= 0; --i) acc = acc * t + xi[i];
  return acc;
}

CurvePoint curve_point(const Chart& xi, const Rational& t) {
  const Rational q = q_eval(xi, t);
  if (q.is_zero())
    throw Error(ErrorCode::point_at_infinity, "t = " + t.to_string() + " is at infinity for the chart");
  Vector p(xi.dimension() + 1);
  Rational power(1);
  for (int i = 0; i <= xi.dimension(); ++i) {
    p(i) = power / q;
    power *= t;
  }
  return {std::move(p)};
}

Rational lambda_eval(const Chart& xi, std::span<const Rational> s, const Rational& t) {
  const Rational q = q_eval(xi, t);
  if (q.is_zero())
    throw Error(ErrorCode::point_at_infinity, "t = " + t.to_string() + " is at infinity for the chart");
  Rational p(1);
  for (const auto& root : s) p *= t - root;
  return p / q;
}

bool is_power_of_linear_form(const Chart& xi) { return is_power_of_linear_form(xi.coords()); }

namespace {

void check_instance(const Chart& xi, const GroundSet& t) {
  const int d = xi.dimension();
  if (t.size() <= d)
    throw Error(ErrorCode::underdetermined, "need at least d + 1 = " + std::to_string(d + 1) +
                                                " parameters, got " + std::to_string(t.size()));
  for (const auto& v : t)
    if (q_eval(xi, v).is_zero())
      throw Error(ErrorCode::invalid_instance, "chart vanishes at t = " + v.to_string());
}

void check_subset(const Chart& xi, const GroundSet& t, std::span<const int> s) {
  if (static_cast<int>(s.size()) != xi.dimension())
    throw Error(ErrorCode::arity, "facet candidate has " + std::to_string(s.size()) +
                                      " elements, expected " + std::to_string(xi.dimension()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= t.size()) throw Error(ErrorCode::index, "subset index out of range");
    if (i > 0 && s[i] <= s[i - 1])
      throw Error(ErrorCode::precondition, "subset indices must be strictly increasing");
  }
}

// Marks membership of S in T.
std::vector<char> membership(int n, std::span<const int> s) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int i : s) in[static_cast<std::size_t>(i)] = 1;
  return in;
}

bool lambda_test_unchecked(const Chart& xi, const GroundSet& t, std::span<const int> s) {
  std::vector<Rational> roots;
  roots.reserve(s.size());
  for (int i : s) roots.push_back(t[i]);
  const auto in = membership(t.size(), s);
  int common = 0;
  for (int j = 0; j < t.size(); ++j) {
    if (in[static_cast<std::size_t>(j)]) continue;
    const int sg = lambda_eval(xi, roots, t[j]).sign();
    if (sg == 0) return false;
    if (common == 0) common = sg;
    if (sg != common) return false;
  }
  return true;
}

bool determinant_test_unchecked(const Chart& xi, const std::vector<CurvePoint>& points,
                                std::span<const int> s) {
  const int d = xi.dimension();
  const int n = static_cast<int>(points.size());
  Matrix m(d + 1, d + 1);
  for (int r = 0; r < d; ++r) m.row(r) = points[static_cast<std::size_t>(s[static_cast<std::size_t>(r)])].coords.transpose();
  const auto in = membership(n, s);
  int common = 0;
  for (int u = 0; u < n; ++u) {
    if (in[static_cast<std::size_t>(u)]) continue;
    m.row(d) = points[static_cast<std::size_t>(u)].coords.transpose();
    const int sg = sign_det(m);
    if (sg == 0) return false;
    if (common == 0) common = sg;
    if (sg != common) return false;
  }
  return true;
}

std::vector<CurvePoint> generating_points(const Chart& xi, const GroundSet& t) {
  std::vector<CurvePoint> pts;
  pts.reserve(static_cast<std::size_t>(t.size()));
  for (const auto& v : t) pts.push_back(curve_point(xi, v));
  return pts;
}

}  // namespace

bool facet_test_lambda(const Chart& xi, const GroundSet& t, std::span<const int> s) {
  check_instance(xi, t);
  check_subset(xi, t, s);
  return lambda_test_unchecked(xi, t, s);
}

bool facet_test_determinant(const Chart& xi, const GroundSet& t, std::span<const int> s) {
  check_instance(xi, t);
  check_subset(xi, t, s);
  return determinant_test_unchecked(xi, generating_points(xi, t), s);
}

FacetComplex enumerate_facets_geometric(const Chart& xi, const GroundSet& t) {
  check_instance(xi, t);
  std::vector<Facet> facets;
  for_each_subset(t.size(), xi.dimension(), [&](const std::vector<int>& s) {
    if (lambda_test_unchecked(xi, t, s)) facets.push_back(s);
  });
  return FacetComplex(t.size(), xi.dimension(), std::move(facets));
}

FacetComplex enumerate_facets_determinant(const Chart& xi, const GroundSet& t) {
  check_instance(xi, t);
  const auto points = generating_points(xi, t);
  std::vector<Facet> facets;
  for_each_subset(t.size(), xi.dimension(), [&](const std::vector<int>& s) {
    if (determinant_test_unchecked(xi, points, s)) facets.push_back(s);
  });
  return FacetComplex(t.size(), xi.dimension(), std::move(facets));
}

SignedDecomposition decompose_chart(const Chart& xi, const GroundSet& t) {
  if (t.size() == 0) throw Error(ErrorCode::invalid_instance, "empty ground set");
  std::vector<int> sizes;
  int first_sign = 0;
  int current = 0;
  for (const auto& v : t) {
    const int sg = q_eval(xi, v).sign();
    if (sg == 0) throw Error(ErrorCode::invalid_instance, "chart vanishes at t = " + v.to_string());
    if (first_sign == 0) first_sign = sg;
    if (sg == current) {
      ++sizes.back();
    } else {
      sizes.push_back(1);
      current = sg;
    }
  }
  // A nonzero polynomial of degree <= d changes sign at most d times.
  if (static_cast<int>(sizes.size()) - 1 > xi.dimension())
    throw Error(ErrorCode::invalid_instance, "more sign changes than the chart degree allows");
  return SignedDecomposition(std::move(sizes), first_sign, xi.dimension());
}

Chart chart_from_decomposition(const SignedDecomposition& decomposition, const GroundSet& t) {
  if (decomposition.total() != t.size())
    throw Error(ErrorCode::invalid_decomposition,
                "decomposition covers " + std::to_string(decomposition.total()) + " points, ground set has " +
                    std::to_string(t.size()));
  const int d = decomposition.d;
  const int k = decomposition.sign_changes();

  std::vector<Rational> midpoints;
  int end = 0;
  for (int j = 0; j < k; ++j) {
    end += decomposition.sizes[static_cast<std::size_t>(j)];
    midpoints.push_back((t[end - 1] + t[end]) / Rational(2));
  }
  // prod (t - s_i) = sum_j (-1)^(k-j) sigma_{k-j}(s) t^j
  const auto sigma = elementary_symmetric_all(midpoints);
  Vector coords = Vector::Constant(d + 1, Rational(0));
  for (int j = 0; j <= k; ++j) {
    const Rational& e = sigma[static_cast<std::size_t>(k - j)];
    coords(j) = ((k - j) % 2 == 0) ? e : -e;
  }
  Chart xi(std::move(coords));
  if (q_eval(xi, t[0]).sign() != decomposition.first_sign) xi = -xi;
  return xi;
}

std::vector<int> vertices_geometric(const Chart& xi, const GroundSet& t) {
  return enumerate_facets_geometric(xi, t).vertices();
}

}  // namespace veronese
