#include "td/tensor.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace td {

namespace {

std::size_t ipow(int n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

std::string tuple_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (a.dim() != b.dim() || a.out_arity() != b.out_arity() || a.in_arity() != b.in_arity())
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + a.shape_str() + " vs " +
                                b.shape_str());
}

}  // namespace

Tensor::Tensor(int n, int out_arity, int in_arity) : n_(n), out_(out_arity), in_(in_arity) {
  if (n < 1 || out_arity < 0 || in_arity < 0) throw std::invalid_argument("bad tensor shape");
  data_.assign(ipow(n, out_arity + in_arity), Rational(0));
}

Tensor Tensor::scalar(int n, const Rational& value) {
  Tensor t(n, 0, 0);
  t.data_[0] = value;
  return t;
}

Tensor Tensor::from_matrix(const Matrix& m) {
  Tensor t(static_cast<int>(m.rows()), 1, 1);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) t.data_[i * m.rows() + j] = m(i, j);
  return t;
}

Tensor Tensor::from_vector(const Vector& v) {
  Tensor t(static_cast<int>(v.size()), 1, 0);
  for (Eigen::Index i = 0; i < v.size(); ++i) t.data_[i] = v(i);
  return t;
}

Tensor Tensor::identity(int n, int k) {
  Tensor t(n, k, k);
  const std::size_t block = ipow(n, k);
  for (std::size_t i = 0; i < block; ++i) t.data_[i * block + i] = Rational(1);
  return t;
}

std::size_t Tensor::flat_index(std::span<const int> out, std::span<const int> in) const {
  if (static_cast<int>(out.size()) != out_ || static_cast<int>(in.size()) != in_)
    throw std::invalid_argument("tensor index arity mismatch for shape " + shape_str());
  std::size_t f = 0;
  auto push = [&](int v) {
    if (v < 1 || v > n_) throw std::out_of_range("tensor index " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    f = f * n_ + static_cast<std::size_t>(v - 1);
  };
  for (int v : out) push(v);
  for (int v : in) push(v);
  return f;
}

std::pair<std::vector<int>, std::vector<int>> Tensor::multi_index(std::size_t flat) const {
  std::vector<int> digits(rank());
  for (int a = rank() - 1; a >= 0; --a) {
    digits[a] = static_cast<int>(flat % n_) + 1;
    flat /= n_;
  }
  return {std::vector<int>(digits.begin(), digits.begin() + out_),
          std::vector<int>(digits.begin() + out_, digits.end())};
}

bool Tensor::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Rational Tensor::as_scalar() const {
  if (rank() != 0) throw std::logic_error("tensor " + shape_str() + " is not a scalar");
  return data_[0];
}

Matrix Tensor::as_matrix() const {
  if (out_ != 1 || in_ != 1) throw std::logic_error("tensor " + shape_str() + " is not a matrix");
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = data_[i * n_ + j];
  return m;
}

Vector Tensor::as_vector() const {
  if (rank() != 1) throw std::logic_error("tensor " + shape_str() + " is not a vector");
  Vector v(n_);
  for (int i = 0; i < n_; ++i) v(i) = data_[i];
  return v;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same_shape(*this, o, "tensor +");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_same_shape(*this, o, "tensor -");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  if (s.is_one()) return *this;
  for (auto& v : data_)
    if (!v.is_zero()) v *= s;
  return *this;
}

void Tensor::add_scaled(const Tensor& o, const Rational& s) {
  require_same_shape(*this, o, "tensor add_scaled");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += s * o.data_[i];
}

std::string Tensor::shape_str() const {
  return "(n=" + std::to_string(n_) + ", out=" + std::to_string(out_) + ", in=" + std::to_string(in_) + ")";
}

std::string TensorDifference::str() const {
  return "entry out=" + tuple_str(out) + " in=" + tuple_str(in) + ": " + left.str() + " vs " + right.str();
}

std::optional<TensorDifference> first_difference(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "first_difference");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.at(i) != b.at(i)) {
      auto [o, in] = a.multi_index(i);
      return TensorDifference{std::move(o), std::move(in), a.at(i), b.at(i)};
    }
  }
  return std::nullopt;
}

namespace {

// Generic contraction over the concatenated axis list of a (and optionally b).
Tensor contract_impl(const Tensor& a, const Tensor* b, std::span<const std::pair<int, int>> pairing) {
  const int n = a.dim();
  if (b && b->dim() != n) throw std::invalid_argument("tensor_contract: dimension mismatch");
  const int ra = a.rank();
  const int rb = b ? b->rank() : 0;
  // Global axis ids: a's axes 0..ra-1, b's axes ra..ra+rb-1.
  std::vector<int> paired_with(ra + rb, -1);
  for (auto [x, y] : pairing) {
    int gx = x;
    int gy = b ? ra + y : y;
    if (x < 0 || x >= ra || (b ? (y < 0 || y >= rb) : (y < 0 || y >= ra)) || gx == gy)
      throw std::invalid_argument("tensor_contract: bad axis pair");
    if (paired_with[gx] >= 0 || paired_with[gy] >= 0)
      throw std::invalid_argument("tensor_contract: axis paired twice");
    paired_with[gx] = gy;
    paired_with[gy] = gx;
  }
  auto is_out = [&](int g) { return g < ra ? g < a.out_arity() : (g - ra) < b->out_arity(); };
  std::vector<int> res_out, res_in, pair_lead;
  for (int g = 0; g < ra + rb; ++g) {
    if (paired_with[g] < 0) {
      (is_out(g) ? res_out : res_in).push_back(g);
    } else if (paired_with[g] > g) {
      pair_lead.push_back(g);
    }
  }
  // Stable order: a's outputs then b's outputs; a's inputs then b's inputs.
  Tensor result(n, static_cast<int>(res_out.size()), static_cast<int>(res_in.size()));
  std::vector<int> res_axes = res_out;
  res_axes.insert(res_axes.end(), res_in.begin(), res_in.end());

  const int free_count = static_cast<int>(res_axes.size());
  const int pair_count = static_cast<int>(pair_lead.size());
  std::vector<int> idx(ra + rb, 0);
  std::vector<std::size_t> stride_a(ra), stride_b(rb);
  for (int i = ra - 1, s = 1; i >= 0; --i, s *= n) stride_a[i] = static_cast<std::size_t>(s);
  for (int i = rb - 1, s = 1; i >= 0; --i, s *= n) stride_b[i] = static_cast<std::size_t>(s);

  const std::size_t free_total = result.size();
  const std::size_t pair_total = ipow(n, pair_count);
  for (std::size_t f = 0; f < free_total; ++f) {
    std::size_t rem = f;
    for (int k = free_count - 1; k >= 0; --k) {
      idx[res_axes[k]] = static_cast<int>(rem % n);
      rem /= n;
    }
    Rational acc(0);
    for (std::size_t p = 0; p < pair_total; ++p) {
      std::size_t prem = p;
      for (int k = pair_count - 1; k >= 0; --k) {
        int v = static_cast<int>(prem % n);
        prem /= n;
        idx[pair_lead[k]] = v;
        idx[paired_with[pair_lead[k]]] = v;
      }
      std::size_t fa = 0;
      for (int i = 0; i < ra; ++i) fa += idx[i] * stride_a[i];
      const Rational& va = a.at(fa);
      if (va.is_zero()) continue;
      if (b) {
        std::size_t fb = 0;
        for (int i = 0; i < rb; ++i) fb += idx[ra + i] * stride_b[i];
        const Rational& vb = b->at(fb);
        if (vb.is_zero()) continue;
        acc += va * vb;
      } else {
        acc += va;
      }
    }
    result.at(f) = acc;
  }
  return result;
}

}  // namespace

Tensor tensor_contract(const Tensor& a, const Tensor& b, std::span<const std::pair<int, int>> pairing) {
  return contract_impl(a, &b, pairing);
}

Tensor tensor_contract(const Tensor& a, std::span<const std::pair<int, int>> pairing) {
  return contract_impl(a, nullptr, pairing);
}

Tensor tensor_product(const Tensor& a, const Tensor& b) { return contract_impl(a, &b, {}); }

Tensor apply_inputs(const Tensor& t, std::span<const Vector> inputs) {
  if (static_cast<int>(inputs.size()) != t.in_arity())
    throw std::invalid_argument("apply_inputs: expected " + std::to_string(t.in_arity()) + " vectors");
  Tensor cur = t;
  // Always feed the first remaining input axis.
  for (const Vector& v : inputs) {
    std::pair<int, int> p{cur.out_arity(), 0};
    cur = tensor_contract(cur, Tensor::from_vector(v), std::span(&p, 1));
  }
  return cur;
}

std::string Proportionality::str() const {
  switch (status) {
    case Status::Proportional: return "proportional with ratio " + ratio.str();
    case Status::BothZero: return "both zero";
    case Status::LeftZero: return "left zero";
    case Status::RightZero: return "right zero";
    case Status::NotProportional: return "not proportional";
  }
  return "";
}

Proportionality tensors_proportional(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "tensors_proportional");
  const bool az = a.is_zero();
  const bool bz = b.is_zero();
  Proportionality p;
  if (az && bz) {
    p.status = Proportionality::Status::BothZero;
    p.ratio = Rational(0);
    return p;
  }
  if (az) {
    p.status = Proportionality::Status::LeftZero;
    return p;
  }
  if (bz) {
    p.status = Proportionality::Status::RightZero;
    return p;
  }
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational& x = a.at(i);
    const Rational& y = b.at(i);
    if (y.is_zero()) {
      if (!x.is_zero()) return p;
      continue;
    }
    Rational r = x / y;
    if (!ratio) {
      ratio = r;
    } else if (*ratio != r) {
      return p;
    }
  }
  p.status = Proportionality::Status::Proportional;
  p.ratio = *ratio;
  return p;
}

std::ostream& operator<<(std::ostream& os, const Tensor& t) {
  if (t.rank() == 0) return os << t.as_scalar();
  if (t.out_arity() == 1 && t.in_arity() == 1) return os << matrix_str(t.as_matrix());
  if (t.rank() == 1) {
    os << "[";
    for (int i = 0; i < t.dim(); ++i) os << (i ? "," : "") << t.at(i);
    return os << "]";
  }
  bool any = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.at(i).is_zero()) continue;
    auto [o, in] = t.multi_index(i);
    os << (any ? "\n" : "") << "out=" << tuple_str(o) << " in=" << tuple_str(in) << ": " << t.at(i);
    any = true;
  }
  if (!any) os << "0";
  return os;
}

}  // namespace td
