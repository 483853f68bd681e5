#include "plint/rational.hpp"

#include <cctype>
#include <utility>
#include <vector>

#include "plint/errors.hpp"

namespace plint {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::UnsupportedAtom: return "UnsupportedAtom";
    case ErrorCode::DivergentAtOne: return "DivergentAtOne";
    case ErrorCode::DivergentValue: return "DivergentValue";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonIntegrable: return "NonIntegrable";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  require(den != 0, ErrorCode::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  require(q_.get_den() != 0, ErrorCode::DivisionByZero, "rational with zero denominator");
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string bad = "cannot parse rational '" + std::string(text) + "'";
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    require(all_digits(num) && all_digits(den), ErrorCode::ParseError, bad);
    mpz_class d(std::string(den), 10);
    require(d != 0, ErrorCode::DivisionByZero, bad);
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      require(all_digits(exp_part) && exp_part.size() < 6, ErrorCode::ParseError, bad);
      exponent = std::stol(std::string(exp_part));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    const auto dot = s.find('.');
    if (dot == std::string_view::npos) {
      require(all_digits(s), ErrorCode::ParseError, bad);
      digits = std::string(s);
    } else {
      const auto int_part = s.substr(0, dot);
      const auto frac_part = s.substr(dot + 1);
      require((int_part.empty() || all_digits(int_part)) &&
                  (frac_part.empty() || all_digits(frac_part)) &&
                  !(int_part.empty() && frac_part.empty()),
              ErrorCode::ParseError, bad);
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    }
    mpz_class num(digits, 10);
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    q = exponent < 0 ? mpq_class(num, ten_pow) : mpq_class(num * ten_pow);
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(q);
}

std::string Rational::to_fraction_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::to_string() const {
  return is_integer() ? q_.get_num().get_str() : to_fraction_string();
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), ErrorCode::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    require(!base.is_zero(), ErrorCode::DivisionByZero, "zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), base.value().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.value().get_den_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

Rational binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  // Pascal recurrence on a single row.
  std::vector<mpz_class> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return Rational(row[static_cast<std::size_t>(k)]);
}

Rational factorial(int n) {
  require(n >= 0, ErrorCode::ParameterError, "factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational pochhammer(const Rational& t, int n) {
  require(n >= 0, ErrorCode::ParameterError, "negative Pochhammer length");
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= t + Rational(i);
  return r;
}

Rational sign_power(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace plint

namespace plint {

Rational harmonic_number(int n, int m) {
  require(n >= 0 && m >= 1, ErrorCode::ParameterError, "harmonic number needs n >= 0, m >= 1");
  mpq_class s = 0;
  for (int j = 1; j <= n; ++j) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(m));
    s += mpq_class(1, d);
  }
  s.canonicalize();
  return Rational(s);
}

}  // namespace plint
