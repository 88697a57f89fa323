#include "td/linalg.hpp"

#include <sstream>

namespace td {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || !mag.is_one()) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Polynomial lagrange_interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t m = xs.size();
  std::vector<Rational> result(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * xs[k];
      }
      basis = std::move(next);
      denom *= xs[j] - xs[k];
    }
    Rational scale = ys[j] / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) result[t] += basis[t] * scale;
  }
  return Polynomial(std::move(result));
}

Polynomial charpoly_oracle(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<Rational> xs, ys;
  for (int x = 0; x <= n; ++x) {
    Matrix shifted = m;
    for (int i = 0; i < n; ++i) shifted(i, i) -= Rational(x);
    xs.emplace_back(x);
    ys.push_back(det_oracle(shifted));
  }
  return lagrange_interpolate(xs, ys);
}

Matrix parse_matrix(const std::vector<std::vector<std::string>>& rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c)
      throw std::invalid_argument("ragged matrix literal: row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(c));
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rational::parse(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).str());
  return out;
}

std::string matrix_str(const Matrix& m) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

Rational trace(const Matrix& m) {
  Rational t(0);
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

Matrix matrix_power(const Matrix& m, int k) {
  Matrix r = Matrix::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) r = (r * m).eval();
  return r;
}

Matrix replace_column(const Matrix& m, int j, const Vector& v) {
  Matrix r = m;
  r.col(j) = v;
  return r;
}

}  // namespace td
