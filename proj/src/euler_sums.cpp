#include "plint/euler_sums.hpp"

#include "plint/errors.hpp"

namespace plint {

namespace {

// sum_{j=0}^{n-1} C(n, j+1) (-1)^j / (j+1), which equals H_n.
Rational binomial_harmonic(int n) {
  Rational s(0);
  for (int j = 0; j < n; ++j) s += binomial(n, j + 1) * sign_power(j) / Rational(j + 1);
  return s;
}

}  // namespace

ClosedForm reduce_S1(int i) {
  require(i >= 2, ErrorCode::InvalidOrder, "S_{1,i} needs i >= 2");
  ClosedForm out = scale(zeta(i + 1), Rational(2 + i, 2));
  for (int k = 1; k <= i - 2; ++k) out -= scale(zeta(k + 1) * zeta(i - k), Rational(1, 2));
  return out;
}

bool is_reducible_S(int p, int q) noexcept { return p >= 1 && q >= 2 && (p == 1 || (p + q) % 2 == 1); }

ClosedForm reduce_S(int p, int q) {
  require(q >= 2, ErrorCode::NonConvergent, "S_{p,q} diverges for q < 2");
  require(p >= 1, ErrorCode::ParameterError, "S_{p,q} needs p >= 1");
  if (p == 1) return reduce_S1(q);
  if ((p + q) % 2 == 0) return ClosedForm::atom(Atom::euler_sum(p, q));

  const int w = p + q;
  const Rational sp = sign_power(p);
  const Rational half(1, 2);
  ClosedForm out = scale(zeta(w), half - sp * half * binomial(w - 1, p) - sp * half * binomial(w - 1, q));
  out += scale(zeta(p) * zeta(q), (Rational(1) - sp) * half);
  for (int k = 1; k <= p / 2; ++k)
    out += scale(zeta(2 * k) * zeta(w - 2 * k), sp * binomial(w - 2 * k - 1, q - 1));
  for (int k = 1; k <= q / 2; ++k)
    out += scale(zeta(2 * k) * zeta(w - 2 * k), sp * binomial(w - 2 * k - 1, p - 1));
  return out;
}

ClosedForm K_base(int m, int q) {
  require(m >= 1 && q >= 1, ErrorCode::ParameterError, "K(m,0,q) needs m, q >= 1");
  return scale(reduce_S(q, m + 1) - zeta(m + q + 1), factorial(m) * sign_power(m));
}

ClosedForm freitas_K0_recurrence(int r, int q) {
  require(r >= 1 && q >= 2, ErrorCode::ParameterError, "the K(r,0,q) relation needs r >= 1, q >= 2");
  const Rational rf = factorial(r);
  ClosedForm out = scale(K_base(q - 1, r + 1), sign_power(r + q) * rf / factorial(q - 1));
  out += scale(zeta(r + 1) * zeta(q) - zeta(r + q + 1), sign_power(r) * rf);
  return out;
}

std::pair<Rational, Rational> check_prop2(int m) {
  require(m >= 0, ErrorCode::ParameterError, "check_prop2 needs m >= 0");
  const Rational top = binomial_harmonic(m + 1);
  Rational rhs = top * top / Rational(2);
  for (int b = 0; b <= m; ++b)
    rhs += (top - binomial_harmonic(b)) / Rational(2 * (m + 1 - b));
  for (int k = 1; k <= m; ++k) rhs -= binomial_harmonic(k) / Rational(k + 1);
  return {harmonic_number(m + 1, 2), rhs};
}

std::pair<Rational, Rational> harmonic_binomial_identity(int m) {
  require(m >= 0, ErrorCode::ParameterError, "harmonic_binomial_identity needs m >= 0");
  Rational s(0);
  for (int j = 0; j <= m; ++j) s += binomial(m, j) * sign_power(j) / pow(Rational(j + 1), 2);
  return {harmonic_number(m + 1, 1), Rational(m + 1) * s};
}

}  // namespace plint
