#include <gtest/gtest.h>

#include "gen.hpp"
#include "td/linalg.hpp"

using td::Matrix;
using td::Rational;

namespace {

Matrix fixture() { return td::parse_matrix({{"2", "3"}, {"4", "5"}}); }

TEST(Linalg, FixtureValues) {
  const Matrix a = fixture();
  EXPECT_EQ(td::det_oracle(a), Rational(-2));
  EXPECT_EQ(td::trace(a), Rational(7));
  EXPECT_EQ(td::matrix_str(td::adjugate_oracle(a)), "[[5,-3],[-4,2]]");
  EXPECT_EQ(td::charpoly_oracle(a).str(), "x^2 - 7x - 2");
  EXPECT_EQ(td::det_oracle(Matrix::Identity(4, 4)), Rational(1));
}

TEST(Linalg, ParseMatrix) {
  EXPECT_EQ(td::parse_matrix({{"1/2", "-3"}})(0, 0), Rational(1, 2));
  EXPECT_THROW(td::parse_matrix({{"1", "2"}, {"3"}}), std::invalid_argument);
  EXPECT_THROW(td::parse_matrix({{"x"}}), std::invalid_argument);
}

TEST(Linalg, Polynomial) {
  const td::Polynomial p = td::lagrange_interpolate({Rational(0), Rational(1), Rational(2)},
                                                    {Rational(1), Rational(2), Rational(5)});
  EXPECT_EQ(p.str(), "x^2 + 1");
  EXPECT_EQ(p(Rational(3)), Rational(10));
}

TEST(Linalg, ReplaceColumn) {
  td::Vector b(2);
  b << Rational(7), Rational(8);
  const Matrix m = td::replace_column(fixture(), 1, b);
  EXPECT_EQ(td::matrix_str(m), "[[2,7],[4,8]]");
}

TEST(LinalgProperty, AdjugateAndDeterminant) {
  gen::Gen g(31);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(g.integer(1, 4));
    const Matrix a = g.matrix(n, n), b = g.matrix(n, n);
    const Rational d = td::det_oracle(a);
    EXPECT_EQ(Matrix(td::adjugate_oracle(a) * a), Matrix(d * Matrix::Identity(n, n)));
    EXPECT_EQ(td::det_oracle(Matrix(a * b)), d * td::det_oracle(b));
    EXPECT_EQ(td::det_oracle(Matrix(a.transpose())), d);
    const td::Polynomial p = td::charpoly_oracle(a);
    EXPECT_EQ(p.coeff(0), d);
    EXPECT_EQ(p.coeff(n), Rational(n % 2 ? -1 : 1));
    Matrix sum = Matrix::Zero(n, n);
    for (int k = 0; k <= n; ++k) sum += p.coeff(k) * td::matrix_power(a, k);
    EXPECT_EQ(sum, Matrix(Matrix::Zero(n, n)));
  }
}

}  // namespace
