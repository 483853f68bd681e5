#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "plint/numerics.hpp"
#include "plint/rational.hpp"

namespace plint {

enum class Family { A, B, C, J0, J1, J, K, L, M, HeadLog1m };

std::string_view family_name(Family f) noexcept;
Family family_from_name(std::string_view name);

/// One instance of an integral family.
///
///   A(m,n,x)  = int_0^x log^m(1-t) / t^n         params {m, n}
///   B(m,n,x)  = int_0^x log^m(1+t) / t^n         params {m, n}
///   C(m,n,x)  = int_0^x log^m(t) / (1-t)^n       params {m, n}
///   J0(m,p,x) = int_0^x t^m Li_p(t)              params {m, p}
///   J1(m,p,x) = int_0^x log^m(t) Li_p(t)         params {m, p}
///   J(m,p,q)  = int_0^1 t^m Li_p(t) Li_q(t)      params {m, p, q}
///   K(r,p,q)  = int_0^1 log^r(t) Li_p Li_q / t   params {r, p, q}
///   L(n,m,x)  = int_0^x t^n log^m(t)             params {n, m}
///   M(n,m,x)  = int_x^1 t^n log^m(1-t)           params {n, m}
///   HeadLog1m(n,m,x) = int_0^x t^n log^m(1-t)    params {n, m}
///
/// `x` is the upper limit, except for M where it is the lower one. J and K
/// always run over [0, 1].
struct IntegralSpec {
  Family family = Family::A;
  std::vector<int> params;
  Rational x{1};

  /// Throws NonIntegrable when the parameters leave the family's domain or
  /// make the integral diverge.
  void validate() const;
  /// Compact key such as "A(2,1;x=1/2)", used for sorting and messages.
  std::string key() const;
};

/// The integrand at t, given t and 1 - t separately so both stay accurate
/// near the endpoints.
Real integrand_value(const IntegralSpec& spec, const Real& t, const Real& one_minus_t,
                     const Precision& prec = {});
/// The integrand at an interior point t; DomainError outside the open interval.
Real integrand_value(const IntegralSpec& spec, const Real& t, const Precision& prec = {});

/// Integral of the spec's integrand over [a, b], 0 <= a <= b <= 1, by
/// tanh-sinh quadrature with level halving up to the level cap.
Real integrate_range(const IntegralSpec& spec, const Rational& a, const Rational& b,
                     const Precision& prec = {});
Real integrate(const IntegralSpec& spec, const Precision& prec = {});

struct QuadratureStats {
  int levels = 0;
  long evaluations = 0;
};
/// As integrate_range, also reporting the work done.
Real integrate_range(const IntegralSpec& spec, const Rational& a, const Rational& b,
                     const Precision& prec, QuadratureStats& stats);

constexpr int kQuadratureLevelCap = 12;

}  // namespace plint
