#pragma once

#include <string>

#include <boost/multiprecision/float128.hpp>

#include "plint/closed_form.hpp"
#include "plint/rational.hpp"

namespace plint {

/// Working real type: IEEE binary128, about 34 significant digits.
using Real = boost::multiprecision::float128;

/// Requested number of significant digits. Atom evaluations guarantee a
/// relative error of at most 10^(2 - digits).
class Precision {
 public:
  static constexpr int kMinDigits = 15;
  static constexpr int kMaxDigits = 32;
  static constexpr int kDefaultDigits = 30;

  Precision() = default;
  explicit Precision(int digits);

  int digits() const noexcept { return digits_; }
  /// 10^(2 - digits): the guaranteed relative error.
  Real tolerance() const;
  /// 10^(-digits): the internal stopping target, two digits tighter.
  Real target() const;

 private:
  int digits_ = kDefaultDigits;
};

/// An exact evaluation point x in [0, 1]. The exact value keeps 1 - x
/// free of cancellation near the right endpoint.
class EvalPoint {
 public:
  EvalPoint() : x_(1) {}
  explicit EvalPoint(const Rational& x);
  static EvalPoint one() { return EvalPoint(); }

  const Rational& x() const noexcept { return x_; }
  bool at_one() const noexcept { return x_.is_one(); }
  bool at_zero() const noexcept { return x_.is_zero(); }
  Real value() const;
  Real one_minus_value() const;

 private:
  Rational x_;
};

Real to_real(const Rational& r);
Real to_real(const mpz_class& z);
/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Real& v, int digits);

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);
/// zeta(-n) for n >= 0, exactly.
Rational zeta_nonpositive(int n);

Real zeta_value(int k, const Precision& prec = {});
/// Li_k(arg) for arg in [0, 1]. `one_minus_arg` must equal 1 - arg; passing
/// it separately keeps precision when arg is within rounding of 1.
Real polylog_value(int k, const Real& arg, const Real& one_minus_arg, const Precision& prec = {});
Real polylog_value(int k, const Real& arg, const Precision& prec = {});
Rational harmonic_value(int n, int m);
/// S_{p,q} = sum_n H_n^(p) / n^q by direct summation of 100 terms plus an
/// asymptotic tail: H_n^(p) and the Hurwitz tails sum_{n>N} n^-s (and their
/// log-weighted versions) are expanded by Euler-Maclaurin to 16 Bernoulli
/// terms. The neglected remainder is below 1e-40 for p, q <= 12.
Real euler_sum_value(int p, int q, const Precision& prec = {});

Real atom_value(const Atom& a, const EvalPoint& pt, const Precision& prec = {});
Real numeric_eval(const ClosedForm& f, const EvalPoint& pt, const Precision& prec = {});

namespace detail {
/// Li_k by the defining series; stops on the geometric tail bound.
Real polylog_series(int k, const Real& arg, const Real& target);
/// Li_k(e^mu) = sum_{j != k-1} zeta(k-j) mu^j / j! + mu^(k-1)/(k-1)! (H_{k-1} - log(-mu)),
/// used for arg > 1/2 where the series converges slowly.
Real polylog_log_expansion(int k, const Real& one_minus_arg, const Real& target);
/// Borwein's accelerated alternating eta series.
Real zeta_borwein(int k);
}  // namespace detail

}  // namespace plint
