#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "support.hpp"
#include "veronese/error.hpp"
#include "veronese/exact.hpp"
#include "veronese/rational.hpp"

using namespace veronese;

TEST(Rational, AlwaysReduced) {
  const Rational r = Rational::parse("-6/4");
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("10/5").to_string(), "2");
  EXPECT_EQ(Rational::parse("+7").to_string(), "7");
  EXPECT_EQ(Rational::parse("-0/3").to_string(), "0");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "1/", "/2", "a", "1.5", "--1", "1/2/3"}) {
    try {
      Rational::parse(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::parse) << bad;
    }
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, FieldIdentitiesAndOrder) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = testsupport::random_rational(rng, 1000, 97);
    const Rational b = testsupport::random_rational(rng, 1000, 97);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    const int lt = a < b, eq = a == b, gt = a > b;
    EXPECT_EQ(lt + eq + gt, 1);
  }
}

TEST(SignDet, Examples) {
  EXPECT_EQ(sign_det(Matrix::Identity(3, 3)), 1);
  Matrix v(3, 3);
  v << 1, 0, 0, 1, 1, 1, 1, 2, 4;
  EXPECT_EQ(sign_det(v), 1);
  Matrix rep(3, 3);
  rep << Rational(1) / 2, 3, 5, 7, 11, 13, Rational(1) / 2, 3, 5;
  EXPECT_EQ(sign_det(rep), 0);
  Matrix swapped(2, 2);
  swapped << 0, 1, 1, 0;
  EXPECT_EQ(sign_det(swapped), -1);
}

TEST(SignDet, NonSquareThrows) {
  try {
    sign_det(Matrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dimension);
  }
}

TEST(SignDet, MatchesRationalGaussianElimination) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = testsupport::random_rational(rng, 3, 4);
    // Independent oracle: plain elimination over Q.
    Matrix a = m;
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (p < n && a(p, c).is_zero()) ++p;
      if (p == n) {
        det = 0;
        break;
      }
      if (p != c) {
        a.row(p).swap(a.row(c));
        det = -det;
      }
      det *= a(c, c);
      for (int r = c + 1; r < n; ++r) {
        const Rational f = a(r, c) / a(c, c);
        for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
      }
    }
    EXPECT_EQ(sign_det(m), det.sign());
  }
}

TEST(SignDet, CurveDirectionsIndependent) {
  // Any k <= d + 1 distinct points of the moment curve give full rank.
  std::mt19937_64 rng(3);
  for (int k = 1; k <= 7; ++k) {
    const auto t = testsupport::random_ground_set(rng, k);
    Matrix m(k, k);
    for (int i = 0; i < k; ++i) {
      Rational p = 1;
      for (int j = 0; j < k; ++j) {
        m(i, j) = p;
        p *= t[i];
      }
    }
    EXPECT_NE(sign_det(m), 0);
  }
}

TEST(ElementarySymmetric, Examples) {
  const std::vector<Rational> v{1, 2, 3};
  EXPECT_EQ(elementary_symmetric(v, 0), Rational(1));
  EXPECT_EQ(elementary_symmetric(v, 2), Rational(11));
  EXPECT_EQ(elementary_symmetric(v, 3), Rational(6));
  EXPECT_EQ(elementary_symmetric(std::vector<Rational>{}, 0), Rational(1));
  try {
    elementary_symmetric(v, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::index);
  }
}

TEST(Binomial, Conventions) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(PowerOfLinearForm, Examples) {
  Vector a(5);
  a << 1, 0, 0, 0, 0;
  EXPECT_TRUE(is_power_of_linear_form(a));
  Vector b(5);
  b << 1, -4, 6, -4, 1;
  EXPECT_TRUE(is_power_of_linear_form(b));
  Vector c(5);
  c << 0, -1, 0, 0, 0;
  EXPECT_FALSE(is_power_of_linear_form(c));
  Vector zero = Vector::Zero(3);
  try {
    is_power_of_linear_form(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_chart);
  }
}

TEST(PowerOfLinearForm, ScaleInvariant) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const int d = 2 + i % 4;
    Vector xi(d + 1);
    for (int j = 0; j <= d; ++j) xi(j) = testsupport::random_rational(rng, 2, 1);
    bool zero = true;
    for (int j = 0; j <= d; ++j) zero = zero && xi(j).is_zero();
    if (zero) continue;
    Rational s = testsupport::random_rational(rng, 9, 5);
    if (s.is_zero()) s = 3;
    const Vector scaled = xi * s;
    EXPECT_EQ(is_power_of_linear_form(xi), is_power_of_linear_form(scaled));
  }
}
