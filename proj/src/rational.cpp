#include "td/rational.hpp"

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace td {

namespace detail {

struct BigRational {
  mpq_class value;

  static mpq_class of(const Rational& r) {
    if (r.big_) return r.big_->value;
    mpq_class q(mpz_class(static_cast<long>(r.num_)), mpz_class(static_cast<long>(r.den_)));
    return q;
  }

  // Canonical form: demote to int64 whenever both parts fit.
  static Rational make(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != mpz_class(static_cast<long>(Rational::kMin))) {
      return Rational::raw(n.get_si(), d.get_si());
    }
    Rational r;
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const BigRational>(BigRational{std::move(q)});
    return r;
  }
};

}  // namespace detail

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & ~static_cast<unsigned long>(0)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(i128 v) {
  return v > static_cast<i128>(std::numeric_limits<long long>::min()) &&
         v <= static_cast<i128>(std::numeric_limits<long long>::max());
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = detail::BigRational::make(mpq_class(mpz_class(static_cast<long>(num)),
                                               mpz_class(static_cast<long>(den))));
}

void Rational::set_integer(long long v) {
  if (v == kMin) {
    *this = detail::BigRational::make(mpq_class(mpz_class(static_cast<long>(v))));
  } else {
    num_ = v;
    den_ = 1;
  }
}

// Reduce an int128 fraction (den > 0) and choose a representation.
static Rational from128(i128 n, i128 d, Rational (*make_raw)(long long, long long)) {
  u128 un = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd128(un, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n == 0) return make_raw(0, 1);
  if (fits(n) && fits(d)) return make_raw(static_cast<long long>(n), static_cast<long long>(d));
  return detail::BigRational::make(mpq_class(to_mpz(n), to_mpz(d)));
}

Rational Rational::add_small(const Rational& a, const Rational& b, bool subtract) {
  i128 bn = subtract ? -static_cast<i128>(b.num_) : static_cast<i128>(b.num_);
  if (a.den_ == b.den_) {
    return from128(static_cast<i128>(a.num_) + bn, a.den_, &Rational::raw);
  }
  i128 n = static_cast<i128>(a.num_) * b.den_ + bn * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  return from128(n, d, &Rational::raw);
}

Rational Rational::add_big(const Rational& a, const Rational& b, bool subtract) {
  mpq_class x = detail::BigRational::of(a);
  mpq_class y = detail::BigRational::of(b);
  return detail::BigRational::make(subtract ? mpq_class(x - y) : mpq_class(x + y));
}

Rational Rational::mul_small(const Rational& a, const Rational& b) {
  i128 n = static_cast<i128>(a.num_) * b.num_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  return from128(n, d, &Rational::raw);
}

Rational Rational::mul_big(const Rational& a, const Rational& b) {
  return detail::BigRational::make(detail::BigRational::of(a) * detail::BigRational::of(b));
}

bool Rational::big_equal(const Rational& a, const Rational& b) {
  return a.big_->value == b.big_->value;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return a * b.reciprocal();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (!big_) return num_ < 0 ? raw(-den_, -num_) : raw(den_, num_);
  return detail::BigRational::make(1 / big_->value);
}

Rational Rational::operator-() const {
  if (!big_) return raw(-num_, den_);
  return detail::BigRational::make(-big_->value);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(detail::BigRational::of(a), detail::BigRational::of(b));
  return c <=> 0;
}

bool Rational::is_integer() const {
  return big_ ? big_->value.get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(big_->value);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::numerator_str() const {
  return big_ ? big_->value.get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_str() const {
  return big_ ? big_->value.get_den().get_str() : std::to_string(den_);
}

std::string Rational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&]() {
    return std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  };
  auto digits = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits(num, true) || !digits(den, false)) throw bad();
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class d{std::string(den)};
  if (d == 0) throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
  return detail::BigRational::make(mpq_class(mpz_class(n), d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace td
