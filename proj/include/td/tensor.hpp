#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "td/linalg.hpp"
#include "td/rational.hpp"

namespace td {

// Dense map V^{(x)in} -> V^{(x)out} over dim n. Axes are numbered outputs first
// (0..out-1) then inputs (out..out+in-1). Storage is row-major over that axis
// order; indices are 1-based.
class Tensor {
 public:
  Tensor() : Tensor(1, 0, 0) {}
  Tensor(int n, int out_arity, int in_arity);

  static Tensor scalar(int n, const Rational& value);
  static Tensor from_matrix(const Matrix& m);
  static Tensor from_vector(const Vector& v);
  static Tensor identity(int n, int k);

  int dim() const { return n_; }
  int out_arity() const { return out_; }
  int in_arity() const { return in_; }
  int rank() const { return out_ + in_; }
  std::size_t size() const { return data_.size(); }

  Rational& at(std::size_t flat) { return data_[flat]; }
  const Rational& at(std::size_t flat) const { return data_[flat]; }
  std::vector<Rational>& data() { return data_; }
  const std::vector<Rational>& data() const { return data_; }

  std::size_t flat_index(std::span<const int> out, std::span<const int> in) const;
  Rational& operator()(std::span<const int> out, std::span<const int> in) {
    return data_[flat_index(out, in)];
  }
  const Rational& operator()(std::span<const int> out, std::span<const int> in) const {
    return data_[flat_index(out, in)];
  }
  // 1-based (outputs, inputs) of a flat position.
  std::pair<std::vector<int>, std::vector<int>> multi_index(std::size_t flat) const;

  bool is_zero() const;
  Rational as_scalar() const;
  Matrix as_matrix() const;
  Vector as_vector() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  // this += s * o
  void add_scaled(const Tensor& o, const Rational& s);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
  friend bool operator==(const Tensor&, const Tensor&) = default;

  std::string shape_str() const;

 private:
  int n_ = 1;
  int out_ = 0;
  int in_ = 0;
  std::vector<Rational> data_;
};

struct TensorDifference {
  std::vector<int> out;
  std::vector<int> in;
  Rational left;
  Rational right;
  std::string str() const;
};

// First entry (in storage order) where a and b differ. Shapes must match.
std::optional<TensorDifference> first_difference(const Tensor& a, const Tensor& b);

// Contract axis pairs (axis of a, axis of b). Remaining outputs are a's then b's,
// remaining inputs likewise.
Tensor tensor_contract(const Tensor& a, const Tensor& b, std::span<const std::pair<int, int>> pairing);
// Contract pairs of axes of a single tensor.
Tensor tensor_contract(const Tensor& a, std::span<const std::pair<int, int>> pairing);
Tensor tensor_product(const Tensor& a, const Tensor& b);
// Feed vectors into every input axis.
Tensor apply_inputs(const Tensor& t, std::span<const Vector> inputs);

struct Proportionality {
  enum class Status { Proportional, BothZero, LeftZero, RightZero, NotProportional };
  Status status = Status::NotProportional;
  Rational ratio;  // a = ratio * b when status is Proportional or BothZero
  bool has_ratio() const { return status == Status::Proportional || status == Status::BothZero; }
  std::string str() const;
};

Proportionality tensors_proportional(const Tensor& a, const Tensor& b);

std::ostream& operator<<(std::ostream& os, const Tensor& t);

}  // namespace td
