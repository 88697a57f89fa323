#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace td {

namespace detail {
struct BigRational;
}

// Exact rational. Values that fit in int64 num/den stay on the fast path;
// anything larger is held as a GMP rational. The representation is canonical
// (reduced, positive denominator, small whenever it fits).
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int v) noexcept : num_(v) {}
  Rational(long v) { set_integer(static_cast<long long>(v)); }
  Rational(long long v) { set_integer(v); }
  Rational(long long num, long long den);

  // "p/q" or "p", optional sign, decimal digits only.
  static Rational parse(std::string_view text);

  std::string str() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  // Numerator and denominator as decimal strings.
  std::string numerator_str() const;
  std::string denominator_str() const;

  Rational operator-() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) [[likely]] {
      if (a.den_ == 1 && b.den_ == 1) {
        long long r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != kMin) return raw(r, 1);
      }
      return add_small(a, b, false);
    }
    return add_big(a, b, false);
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) [[likely]] {
      if (a.den_ == 1 && b.den_ == 1) {
        long long r;
        if (!__builtin_sub_overflow(a.num_, b.num_, &r) && r != kMin) return raw(r, 1);
      }
      return add_small(a, b, true);
    }
    return add_big(a, b, true);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) [[likely]] {
      if (a.den_ == 1 && b.den_ == 1) {
        long long r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != kMin) return raw(r, 1);
      }
      return mul_small(a, b);
    }
    return mul_big(a, b);
  }

  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;
    return big_equal(a, b);
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static constexpr long long kMin = std::numeric_limits<long long>::min();

  static Rational raw(long long num, long long den) noexcept {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }
  void set_integer(long long v);

  static Rational add_small(const Rational& a, const Rational& b, bool subtract);
  static Rational add_big(const Rational& a, const Rational& b, bool subtract);
  static Rational mul_small(const Rational& a, const Rational& b);
  static Rational mul_big(const Rational& a, const Rational& b);
  static bool big_equal(const Rational& a, const Rational& b);

  friend struct detail::BigRational;

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const detail::BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace td

namespace Eigen {

template <>
struct NumTraits<td::Rational> : GenericNumTraits<td::Rational> {
  using Real = td::Rational;
  using NonInteger = td::Rational;
  using Nested = td::Rational;
  using Literal = td::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
