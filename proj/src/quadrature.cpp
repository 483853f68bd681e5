#include "plint/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "plint/errors.hpp"

namespace plint {

namespace {

struct Node {
  Real left;    // distance to the left endpoint, as a fraction of b - a
  Real right;   // distance to the right endpoint
  Real weight;  // dx/du divided by b - a
};

// Nodes closer than this to an endpoint contribute nothing measurable.
const Real kEndpointCutoff = Real("1e-60");

// Level 0 holds u = 0, +-1, +-2, ...; level k > 0 adds the odd multiples of 2^-k.
std::vector<Node> build_level(int level) {
  const Real half_pi = boost::math::constants::half_pi<Real>();
  const Real h = ldexp(Real(1), -level);
  std::vector<Node> nodes;
  const auto push = [&](const Real& u) {
    const Real s = half_pi * sinh(u);
    const Real e = exp(-2 * s);
    const Real left = 1 / (1 + e);        // 1 / (1 + e^{-2s})
    const Real right = e / (1 + e);       // 1 / (1 + e^{2s})
    const Real w = 2 * half_pi * cosh(u) * left * right;
    nodes.push_back({left, right, w});
    nodes.push_back({right, left, w});
  };
  if (level == 0) {
    nodes.push_back({Real(0.5), Real(0.5), half_pi / 2});
    for (int j = 1;; ++j) {
      const Real u = j;
      if (exp(-2 * half_pi * sinh(u)) < kEndpointCutoff) break;
      push(u);
    }
  } else {
    for (long j = 1;; j += 2) {
      const Real u = Real(j) * h;
      if (exp(-2 * half_pi * sinh(u)) < kEndpointCutoff) break;
      push(u);
    }
  }
  return nodes;
}

const std::vector<Node>& level_nodes(int level) {
  static std::array<std::once_flag, kQuadratureLevelCap + 1> flags;
  static std::array<std::vector<Node>, kQuadratureLevelCap + 1> tables;
  std::call_once(flags[static_cast<std::size_t>(level)],
                 [level] { tables[static_cast<std::size_t>(level)] = build_level(level); });
  return tables[static_cast<std::size_t>(level)];
}

Real log_of(const Real& t, const Real& c) {
  return t > Real(0.5) ? boost::math::log1p(-c) : log(t);
}
Real log_1m(const Real& t, const Real& c) {
  return t < Real(0.5) ? boost::math::log1p(-t) : log(c);
}
Real ipow(const Real& b, int k) {
  Real r = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= b;
  return k < 0 ? 1 / r : r;
}

[[noreturn]] void not_integrable(const IntegralSpec& s, const std::string& why) {
  fail(ErrorCode::NonIntegrable, s.key() + ": " + why);
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::J0: return "J0";
    case Family::J1: return "J1";
    case Family::J: return "J";
    case Family::K: return "K";
    case Family::L: return "L";
    case Family::M: return "M";
    case Family::HeadLog1m: return "HeadLog1m";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::A, Family::B, Family::C, Family::J0, Family::J1, Family::J, Family::K,
                   Family::L, Family::M, Family::HeadLog1m})
    if (family_name(f) == name) return f;
  fail(ErrorCode::ParameterError, "unknown integral family '" + std::string(name) + "'");
}

std::string IntegralSpec::key() const {
  std::string s(family_name(family));
  s += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(params[i]);
  }
  return s + ";x=" + x.to_string() + ")";
}

void IntegralSpec::validate() const {
  const std::size_t want = (family == Family::J || family == Family::K) ? 3 : 2;
  if (params.size() != want)
    not_integrable(*this, "expected " + std::to_string(want) + " parameters");
  if (x.sign() < 0 || x > Rational(1)) not_integrable(*this, "x must lie in [0, 1]");
  const int a = params[0], b = params[1];
  const bool at_one = x.is_one();
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
      if (b < 1 || a < b) not_integrable(*this, "needs m >= n >= 1");
      break;
    case Family::J0:
      if (a < 0 || b < 0) not_integrable(*this, "needs m, p >= 0");
      if (b == 0 && at_one) not_integrable(*this, "Li_0(t) has a pole at t = 1");
      break;
    case Family::J1:
      if (a < 0 || b < 0) not_integrable(*this, "needs m, p >= 0");
      if (a == 0 && b == 0 && at_one) not_integrable(*this, "Li_0(t) has a pole at t = 1");
      break;
    case Family::J: {
      const int p = params[1], q = params[2];
      if (p < 1 || q < 1) not_integrable(*this, "needs p, q >= 1");
      if (a < -2 || a == -1) not_integrable(*this, "needs m >= -2, m != -1");
      if (!at_one) not_integrable(*this, "J runs over [0, 1] only");
      break;
    }
    case Family::K: {
      const int p = params[1], q = params[2];
      if (a < 1) not_integrable(*this, "needs r >= 1");
      if (p < 0 || q < 0 || p + q < 1) not_integrable(*this, "needs p, q >= 0 and p + q >= 1");
      if (!at_one) not_integrable(*this, "K runs over [0, 1] only");
      break;
    }
    case Family::L:
    case Family::M:
    case Family::HeadLog1m:
      if (a < 0 || b < 0) not_integrable(*this, "needs n, m >= 0");
      break;
  }
}

Real integrand_value(const IntegralSpec& spec, const Real& t, const Real& c, const Precision& prec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::A: return ipow(log_1m(t, c), p[0]) / ipow(t, p[1]);
    case Family::B: return ipow(boost::math::log1p(t), p[0]) / ipow(t, p[1]);
    case Family::C: return ipow(log_of(t, c), p[0]) / ipow(c, p[1]);
    case Family::J0: return ipow(t, p[0]) * polylog_value(p[1], t, c, prec);
    case Family::J1: return ipow(log_of(t, c), p[0]) * polylog_value(p[1], t, c, prec);
    case Family::J:
      return ipow(t, p[0]) * polylog_value(p[1], t, c, prec) * polylog_value(p[2], t, c, prec);
    case Family::K:
      return ipow(log_of(t, c), p[0]) * polylog_value(p[1], t, c, prec) *
             polylog_value(p[2], t, c, prec) / t;
    case Family::L: return ipow(t, p[0]) * ipow(log_of(t, c), p[1]);
    case Family::M:
    case Family::HeadLog1m: return ipow(t, p[0]) * ipow(log_1m(t, c), p[1]);
  }
  return 0;
}

Real integrand_value(const IntegralSpec& spec, const Real& t, const Precision& prec) {
  spec.validate();
  const Real lo = spec.family == Family::M ? to_real(spec.x) : Real(0);
  const Real hi = (spec.family == Family::M) ? Real(1) : to_real(spec.x);
  require(t > lo && t < hi, ErrorCode::DomainError, "integrand point outside the open interval");
  return integrand_value(spec, t, 1 - t, prec);
}

Real integrate_range(const IntegralSpec& spec, const Rational& a, const Rational& b,
                     const Precision& prec, QuadratureStats& stats) {
  spec.validate();
  require(Rational(0) <= a && a <= b && b <= Rational(1), ErrorCode::DomainError,
          "integration range must satisfy 0 <= a <= b <= 1");
  stats = {};
  if (a == b) return 0;
  const Real ra = to_real(a);
  const Real len = to_real(b - a);
  const Real one_minus_b = to_real(Rational(1) - b);
  const Real tol = prec.tolerance();

  Real sum = 0;  // h-free sum over all nodes used so far
  Real previous = 0;
  for (int level = 0; level <= kQuadratureLevelCap; ++level) {
    for (const Node& nd : level_nodes(level)) {
      const Real t = ra + len * nd.left;
      const Real c = one_minus_b + len * nd.right;
      sum += nd.weight * integrand_value(spec, t, c, prec);
      ++stats.evaluations;
    }
    const Real estimate = len * sum * ldexp(Real(1), -level);
    stats.levels = level;
    const Real scale = std::max(Real(1), abs(estimate));
    if (level >= 3 && abs(estimate - previous) <= tol * scale) return estimate;
    previous = estimate;
  }
  fail(ErrorCode::NoConvergence, spec.key() + ": quadrature level cap reached");
}

Real integrate_range(const IntegralSpec& spec, const Rational& a, const Rational& b,
                     const Precision& prec) {
  QuadratureStats stats;
  return integrate_range(spec, a, b, prec, stats);
}

Real integrate(const IntegralSpec& spec, const Precision& prec) {
  spec.validate();
  if (spec.family == Family::M) return integrate_range(spec, spec.x, Rational(1), prec);
  return integrate_range(spec, Rational(0), spec.x, prec);
}

}  // namespace plint
