#pragma once

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace twomode {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  static Rational from_strings(std::string_view num, std::string_view den);

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// "n/d", or just "n" when the denominator is one.
  std::string str() const;

  /// Fixed-point rendering with `places` fractional digits, rounded half
  /// away from zero.
  std::string to_decimal(int places) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) { a.q_ = -a.q_; return a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

/// 1/den as an exact rational; den must be nonzero.
Rational reciprocal(std::uint64_t den);

}  // namespace twomode
