#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "td/permutation.hpp"
#include "td/rational.hpp"

namespace td {

using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Determinant by full permutation expansion.
template <typename Derived>
typename Derived::Scalar det_oracle(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("det_oracle: matrix is not square");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  Scalar total(0);
  do {
    Scalar term(levi_civita(p));
    for (Eigen::Index i = 0; i < n && term != Scalar(0); ++i) term *= m(i, p[i] - 1);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Delete row r and column c.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> minor_matrix(
    const Eigen::MatrixBase<Derived>& m, Eigen::Index r, Eigen::Index c) {
  const Eigen::Index n = m.rows();
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n - 1, m.cols() - 1);
  for (Eigen::Index i = 0, oi = 0; i < n; ++i) {
    if (i == r) continue;
    for (Eigen::Index j = 0, oj = 0; j < m.cols(); ++j) {
      if (j == c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Classical adjugate: adj(M)(j, i) = (-1)^(i+j) det(M without row i, column j).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> adjugate_oracle(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("adjugate_oracle: matrix is not square");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Scalar c = det_oracle(minor_matrix(m, i, j));
      adj(j, i) = (i + j) % 2 ? Scalar(-c) : c;
    }
  return adj;
}

// Dense polynomial, coeffs()[i] is the coefficient of x^i, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const;
  Rational operator()(const Rational& x) const;
  std::string str(const std::string& var = "x") const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// det(M - x I) recovered from its values at x = 0..n by exact interpolation.
Polynomial charpoly_oracle(const Matrix& m);

// Polynomial through (xs[i], ys[i]) of degree < xs.size().
Polynomial lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> matrix_strings(const Matrix& m);
std::string matrix_str(const Matrix& m);

Rational trace(const Matrix& m);
Matrix matrix_power(const Matrix& m, int k);

// Copy of m with column j (0-based) replaced by v.
Matrix replace_column(const Matrix& m, int j, const Vector& v);

}  // namespace td
