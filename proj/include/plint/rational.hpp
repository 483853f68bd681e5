#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plint {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT: implicit by design of a number type
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : q_(integer) {}
  explicit Rational(mpq_class q);

  /// Accepts "n", "n/d" and finite decimals such as "-0.75" or "1e-3".
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  /// "num/den", always with an explicit denominator.
  std::string to_fraction_string() const;
  /// "num" for integers, "num/den" otherwise.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Rational pow(const Rational& base, int exponent);
/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
Rational binomial(int n, int k);
Rational factorial(int n);
/// Rising factorial t (t+1) ... (t+n-1); (t)_0 = 1.
Rational pochhammer(const Rational& t, int n);
/// (-1)^k as a Rational.
Rational sign_power(int k);

}  // namespace plint

namespace plint {

/// H_n^(m) = sum_{j=1}^n j^-m, exactly; H_0^(m) = 0.
Rational harmonic_number(int n, int m = 1);

}  // namespace plint
