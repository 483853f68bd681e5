#include "plint/numerics.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/log1p.hpp>

#include "plint/errors.hpp"

namespace plint {

namespace {

constexpr int kMaxBernoulli = 200;
constexpr int kZetaCache = 160;
constexpr int kBorweinTerms = 64;
constexpr long kSeriesCap = 10'000'000;

Real ln(const Real& v) { return boost::multiprecision::log(v); }
Real ln1p(const Real& v) { return boost::math::log1p(v); }
Real power(const Real& base, int k) {
  Real r = 1;
  Real b = base;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return k < 0 ? Real(1) / r : r;
}
Real abs_r(const Real& v) { return v < 0 ? -v : v; }

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    std::vector<Rational> b(kMaxBernoulli + 1);
    b[0] = Rational(1);
    for (int n = 1; n <= kMaxBernoulli; ++n) {
      mpq_class s = 0;
      mpz_class c = 1;  // C(n+1, k)
      for (int k = 0; k < n; ++k) {
        s += c * b[k].value();
        c = c * (n + 1 - k) / (k + 1);
      }
      s /= n + 1;
      s.canonicalize();
      b[n] = Rational(mpq_class(-s));
    }
    return b;
  }();
  return table;
}

const std::vector<Real>& borwein_weights() {
  // w_k = (d_n - d_k) / d_n with d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!).
  static const std::vector<Real> weights = [] {
    const int n = kBorweinTerms;
    std::vector<mpq_class> d(n + 1);
    mpq_class acc = 0;
    for (int i = 0; i <= n; ++i) {
      mpz_class num, den1, den2, four;
      mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n + i - 1));
      mpz_fac_ui(den1.get_mpz_t(), static_cast<unsigned long>(n - i));
      mpz_fac_ui(den2.get_mpz_t(), static_cast<unsigned long>(2 * i));
      mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(i));
      acc += mpq_class(num * four, den1 * den2);
      acc.canonicalize();
      d[i] = acc * n;
    }
    std::vector<Real> w(n);
    for (int k = 0; k < n; ++k) {
      mpq_class r = (d[n] - d[k]) / d[n];
      r.canonicalize();
      w[k] = to_real(Rational(r));
    }
    return w;
  }();
  return weights;
}

const std::vector<Real>& zeta_table() {
  static const std::vector<Real> table = [] {
    std::vector<Real> z(kZetaCache + 1, Real(0));
    for (int k = 2; k <= kZetaCache; ++k) z[k] = detail::zeta_borwein(k);
    return z;
  }();
  return table;
}

Real euler_gamma() { return boost::math::constants::euler<Real>(); }

// sum_{n >= a} n^-s by Euler-Maclaurin.
constexpr int kEmTerms = 16;
constexpr int kDirectTerms = 100;

Real hurwitz_tail(int s, int a) {
  const Real ar = a;
  Real sum = power(ar, 1 - s) / Real(s - 1) + power(ar, -s) / 2;
  for (int k = 1; k <= kEmTerms; ++k) {
    const Rational c = bernoulli(2 * k) / factorial(2 * k) * pochhammer(Rational(s), 2 * k - 1);
    sum += to_real(c) * power(ar, -s - 2 * k + 1);
  }
  return sum;
}

// sum_{n >= a} log(n) n^-s, the negated s-derivative of hurwitz_tail.
Real hurwitz_log_tail(int s, int a) {
  const Real ar = a;
  const Real la = ln(ar);
  const Real sm1 = s - 1;
  Real sum = power(ar, 1 - s) * (la / sm1 + 1 / (sm1 * sm1)) + la * power(ar, -s) / 2;
  for (int k = 1; k <= kEmTerms; ++k) {
    const Rational c = bernoulli(2 * k) / factorial(2 * k);
    const Real poch = to_real(pochhammer(Rational(s), 2 * k - 1));
    Real dlog = 0;
    for (int i = 0; i <= 2 * k - 2; ++i) dlog += Real(1) / Real(s + i);
    sum += to_real(c) * power(ar, -s - 2 * k + 1) * poch * (la - dlog);
  }
  return sum;
}

}  // namespace

Precision::Precision(int digits) : digits_(digits) {
  require(digits >= kMinDigits && digits <= kMaxDigits, ErrorCode::ParameterError,
          "digits must be in [" + std::to_string(kMinDigits) + ", " +
              std::to_string(kMaxDigits) + "]");
}

Real Precision::tolerance() const { return power(Real(10), 2 - digits_); }
Real Precision::target() const { return power(Real(10), -digits_); }

EvalPoint::EvalPoint(const Rational& x) : x_(x) {
  require(x.sign() >= 0 && x <= Rational(1), ErrorCode::DomainError,
          "evaluation point must lie in [0, 1], got " + x.to_string());
}

Real EvalPoint::value() const { return to_real(x_); }
Real EvalPoint::one_minus_value() const { return to_real(Rational(1) - x_); }

Real to_real(const mpz_class& z) {
  // Horner over 32-bit chunks, most significant first.
  mpz_class a = abs(z);
  std::vector<unsigned long> chunks;
  while (a != 0) {
    chunks.push_back(mpz_get_ui(mpz_class(a & mpz_class(0xffffffffUL)).get_mpz_t()));
    a >>= 32;
  }
  Real r = 0;
  const Real base = 4294967296.0;
  for (auto it = chunks.rbegin(); it != chunks.rend(); ++it) r = r * base + Real(*it);
  return sgn(z) < 0 ? -r : r;
}

Real to_real(const Rational& r) { return to_real(r.numerator()) / to_real(r.denominator()); }

std::string to_decimal(const Real& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

Rational bernoulli(int n) {
  require(n >= 0 && n <= kMaxBernoulli, ErrorCode::ParameterError,
          "Bernoulli index out of range");
  return bernoulli_table()[static_cast<std::size_t>(n)];
}

Rational zeta_nonpositive(int n) {
  require(n >= 0, ErrorCode::ParameterError, "zeta_nonpositive needs n >= 0");
  if (n == 0) return Rational(-1, 2);
  return -bernoulli(n + 1) / Rational(n + 1);
}

namespace detail {

Real zeta_borwein(int k) {
  require(k >= 2, ErrorCode::InvalidOrder, "zeta(k) needs k >= 2");
  const auto& w = borwein_weights();
  Real eta = 0;
  for (int j = 0; j < kBorweinTerms; ++j) {
    const Real term = w[j] / power(Real(j + 1), k);
    eta += (j % 2 == 0) ? term : -term;
  }
  return eta / (1 - power(Real(2), 1 - k));
}

Real polylog_series(int k, const Real& arg, const Real& target) {
  require(arg >= 0 && arg < 1, ErrorCode::DomainError, "series needs 0 <= arg < 1");
  if (arg == 0) return 0;
  const Real ratio = arg / (1 - arg);
  Real sum = 0;
  Real xn = 1;
  for (long n = 1; n <= kSeriesCap; ++n) {
    xn *= arg;
    const Real term = xn / power(Real(n), k);
    sum += term;
    if (term * ratio <= target * sum) return sum;
  }
  fail(ErrorCode::NoConvergence, "polylog series exceeded the term cap");
}

Real polylog_log_expansion(int k, const Real& one_minus_arg, const Real& target) {
  require(k >= 2, ErrorCode::InvalidOrder, "log expansion needs k >= 2");
  require(one_minus_arg > 0 && one_minus_arg < 1, ErrorCode::DomainError,
          "log expansion needs 0 < 1 - arg < 1");
  const Real mu = ln1p(-one_minus_arg);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  const Real amu = abs_r(mu);
  Real sum = 0;
  Real mu_pow = 1;   // mu^j / j!
  for (int j = 0;; ++j) {
    if (j > 0) mu_pow *= mu / Real(j);
    if (j == k - 1) {
      const Real h = to_real(harmonic_number(k - 1, 1));
      sum += mu_pow * (h - ln(-mu));
      continue;
    }
    const int s = k - j;
    const Real z = s >= 2 ? zeta_table()[static_cast<std::size_t>(s)]
                          : to_real(zeta_nonpositive(-s));
    sum += z * mu_pow;
    // |zeta(-n)| / n! <= 2 (2 pi)^-(n+1), so the remaining terms are bounded
    // by a geometric series of ratio |mu| / (2 pi).
    if (j >= k) {
      const Real bound = 4 * power(two_pi, k - 1) * power(amu / two_pi, j + 1);
      if (bound <= target * abs_r(sum)) return sum;
    }
    require(j < 4 * kMaxBernoulli / 5, ErrorCode::NoConvergence, "polylog log expansion");
  }
}

}  // namespace detail

Real zeta_value(int k, const Precision&) {
  require(k >= 2, ErrorCode::InvalidOrder, "zeta(k) needs k >= 2, got " + std::to_string(k));
  if (k <= kZetaCache) return zeta_table()[static_cast<std::size_t>(k)];
  return detail::zeta_borwein(k);
}

Real polylog_value(int k, const Real& arg, const Real& one_minus_arg, const Precision& prec) {
  require(k >= 0, ErrorCode::InvalidOrder, "polylog order must be >= 0");
  require(arg >= 0 && one_minus_arg >= 0, ErrorCode::DomainError,
          "polylog argument must lie in [0, 1]");
  if (arg == 0) return 0;
  if (one_minus_arg == 0) {
    require(k >= 2, ErrorCode::DivergentValue,
            "Li_" + std::to_string(k) + "(1) diverges");
    return zeta_value(k, prec);
  }
  if (k == 0) return arg / one_minus_arg;
  if (k == 1) return -ln(one_minus_arg);
  if (arg <= Real(0.5)) return detail::polylog_series(k, arg, prec.target());
  return detail::polylog_log_expansion(k, one_minus_arg, prec.target());
}

Real polylog_value(int k, const Real& arg, const Precision& prec) {
  return polylog_value(k, arg, 1 - arg, prec);
}

Rational harmonic_value(int n, int m) { return harmonic_number(n, m); }

Real euler_sum_value(int p, int q, const Precision&) {
  require(p >= 1, ErrorCode::ParameterError, "Euler sum needs p >= 1");
  require(q >= 2, ErrorCode::NonConvergent, "Euler sum S_{p,q} diverges for q < 2");
  const int n_direct = kDirectTerms;
  Real direct = 0;
  Real h = 0;
  for (int n = 1; n <= n_direct; ++n) {
    h += Real(1) / power(Real(n), p);
    direct += h / power(Real(n), q);
  }
  const int a = n_direct + 1;
  Real tail = 0;
  if (p == 1) {
    tail = hurwitz_log_tail(q, a) + euler_gamma() * hurwitz_tail(q, a) + hurwitz_tail(q + 1, a) / 2;
    for (int k = 1; k <= kEmTerms; ++k)
      tail -= to_real(bernoulli(2 * k) / Rational(2 * k)) * hurwitz_tail(q + 2 * k, a);
  } else {
    tail = zeta_value(p) * hurwitz_tail(q, a) - hurwitz_tail(q + p - 1, a) / Real(p - 1) +
           hurwitz_tail(q + p, a) / 2;
    for (int k = 1; k <= kEmTerms; ++k) {
      const Rational c = bernoulli(2 * k) / factorial(2 * k) * pochhammer(Rational(p), 2 * k - 1);
      tail -= to_real(c) * hurwitz_tail(q + p + 2 * k - 1, a);
    }
  }
  return direct + tail;
}

Real atom_value(const Atom& a, const EvalPoint& pt, const Precision& prec) {
  const bool x_dependent = !a.is_constant();
  const Real x = x_dependent ? pt.value() : Real(0);
  const Real c = x_dependent ? pt.one_minus_value() : Real(0);
  const auto divergent = [&](const char* what) {
    fail(ErrorCode::DivergentValue,
         std::string(what) + " diverges at x = " + pt.x().to_string());
  };
  switch (a.kind()) {
    case AtomKind::Zeta: return zeta_value(a.arg0(), prec);
    case AtomKind::LogTwo: return ln(Real(2));
    case AtomKind::LiAtHalf: return polylog_value(a.arg0(), Real(0.5), Real(0.5), prec);
    case AtomKind::Harmonic: return to_real(harmonic_value(a.arg0(), a.arg1()));
    case AtomKind::EulerSum: return euler_sum_value(a.arg0(), a.arg1(), prec);
    case AtomKind::LogX:
      if (pt.at_zero()) divergent("log(x)");
      return x > Real(0.5) ? ln1p(-c) : ln(x);
    case AtomKind::Log1mX:
      if (pt.at_one()) divergent("log(1-x)");
      return x < Real(0.5) ? ln1p(-x) : ln(c);
    case AtomKind::Log1pX: return ln1p(x);
    case AtomKind::XPow:
      if (pt.at_zero() && a.arg0() < 0) divergent("negative power of x");
      return power(x, a.arg0());
    case AtomKind::OneMinusXPow:
      if (pt.at_one() && a.arg0() < 0) divergent("negative power of 1-x");
      return power(c, a.arg0());
    case AtomKind::OnePlusXPow: return power(1 + x, a.arg0());
    case AtomKind::LiX: return polylog_value(a.arg0(), x, c, prec);
    case AtomKind::Li1mX: return polylog_value(a.arg0(), c, x, prec);
    case AtomKind::LiInv1pX: return polylog_value(a.arg0(), 1 / (1 + x), x / (1 + x), prec);
  }
  return 0;
}

Real numeric_eval(const ClosedForm& f, const EvalPoint& pt, const Precision& prec) {
  const ClosedForm g = pt.at_one() ? eval_at_one(f) : f;
  std::map<Atom, Real> cache;
  Real sum = 0;
  for (const Term& t : g.terms()) {
    Real v = to_real(t.coeff);
    for (const Factor& fac : t.factors) {
      auto it = cache.find(fac.atom);
      if (it == cache.end()) it = cache.emplace(fac.atom, atom_value(fac.atom, pt, prec)).first;
      v *= power(it->second, fac.exp);
    }
    sum += v;
  }
  return sum;
}

}  // namespace plint
