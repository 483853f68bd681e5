#include "plint/evaluators.hpp"

#include "plint/errors.hpp"
#include "plint/euler_sums.hpp"
#include "plint/nested_sum.hpp"

namespace plint {

namespace {

using Chain = std::vector<int>;

Rational rpow(int base, int e) { return pow(Rational(base), e); }

int chain_sum(const Chain& c) {
  int s = 0;
  for (int i : c) s += i;
  return s;
}

void check(bool ok, const std::string& msg) { require(ok, ErrorCode::ParameterError, msg); }

// ---- elementary logarithmic integrals ------------------------------------

ClosedForm m_block(int n, int m) {
  ClosedForm out;
  for (int j = 0; j <= n; ++j) {
    const Rational outer = binomial(n, j) * sign_power(j) / Rational(j + 1);
    for (int i = 0; i <= m; ++i) {
      const Rational inner = pochhammer(Rational(m + 1 - i), i) / rpow(j + 1, i) * sign_power(i);
      out += scale(one_minus_x_pow(j + 1) * log_1mx(m - i), outer * inner);
    }
  }
  return out;
}

Rational m_at_zero(int n, int m) {
  Rational s(0);
  for (int j = 0; j <= n; ++j) s += binomial(n, j) * sign_power(j) / rpow(j + 1, m + 1);
  return sign_power(m) * factorial(m) * s;
}

// ---- base cases n = 1 ----------------------------------------------------

ClosedForm a_base_form(int m) {
  ClosedForm out = log_x() * log_1mx(m);
  for (int k = 0; k <= m - 2; ++k)
    out += scale(log_1mx(m - k - 1) * li_1mx(k + 2), sign_power(k) * pochhammer(Rational(m - k), k + 1));
  out += scale(li_1mx(m + 1), sign_power(m - 1) * factorial(m));
  out += scale(zeta(m + 1), sign_power(m) * factorial(m));
  return out;
}

ClosedForm b_base_form(int m) {
  ClosedForm out = log_x() * log_1px(m);
  out -= scale(log_1px(m + 1), Rational(m, m + 1));
  out += scale(zeta(m + 1), factorial(m));
  for (int i = 1; i <= m; ++i)
    out -= scale(log_1px(m - i) * li_inv_1px(i + 1), binomial(m, i) * factorial(i));
  return out;
}

ClosedForm b_base_at_one(int m) {
  ClosedForm out = scale(log_two(m + 1), -Rational(m, m + 1));
  out += scale(zeta(m + 1), factorial(m));
  for (int i = 1; i <= m; ++i)
    out -= scale(log_two(m - i) * li_at_half(i + 1), binomial(m, i) * factorial(i));
  return out;
}

ClosedForm c_base_form(int m) {
  ClosedForm out = -(log_1mx() * log_x(m));
  for (int i = 2; i <= m + 1; ++i)
    out += scale(log_x(m + 1 - i) * li_x(i),
                 Rational(m) * sign_power(i - 1) * binomial(m - 1, i - 2) * factorial(i - 2));
  return out;
}

Rational zeta_m1_factor(int m) { return sign_power(m) * factorial(m); }

// ---- chains i_0 = n > i_1 > ... > i_y >= 2 -------------------------------

NestedSumPlan descending_chains(int n, int y) {
  return NestedSumPlan(static_cast<std::size_t>(y), [n](std::size_t level, const Chain& outer) {
    const int above = level == 0 ? n : outer[level - 1];
    return std::pair<int, int>{2, above - 1};
  });
}

// prod_{l=0}^{y} 1 / (i_l - 1), with i_0 = n.
Rational chain_weight(int n, const Chain& c) {
  Rational w(1, n - 1);
  for (int i : c) w /= Rational(i - 1);
  return w;
}

int chain_last(int n, const Chain& c) { return c.empty() ? n : c.back(); }

// sum over chains of length y of prod_{l>=1} 1 / (i_l - 1).
Rational chain_total(int n, int y) {
  Rational total(0);
  descending_chains(n, y).for_each([&](const Chain& c) { total += chain_weight(n, c) * Rational(n - 1); });
  return total;
}

ClosedForm a_general_at_one(int m, int n) {
  ClosedForm out;
  for (int y = 0; y <= n - 2; ++y) out += scale(zeta(m - y), chain_total(n, y));
  return scale(out, zeta_m1_factor(m) / Rational(n - 1));
}

ClosedForm a_general_form(int m, int n) {
  ClosedForm out;
  for (int y = 0; y <= n - 2; ++y) {
    const Rational lead = binomial(m, y) * factorial(y);
    const Rational next = binomial(m, y + 1) * factorial(y + 1);
    const ClosedForm tail = a_base_form(m - y - 1);
    descending_chains(n, y).for_each([&](const Chain& c) {
      const Rational w = chain_weight(n, c);
      const int last = chain_last(n, c);
      out += scale(log_1mx(m - y) * x_pow(1 - last), lead * w * sign_power(y + 1));
      out += scale(log_1mx(m - y), lead * w * sign_power(y));
      out += scale(tail, next * w * sign_power(y + 1));
    });
  }
  return out;
}

ClosedForm b_general_form(int m, int n, bool at_one) {
  ClosedForm out;
  for (int y = 0; y <= n - 2; ++y) {
    const Rational lead = binomial(m, y) * factorial(y);
    const Rational next = binomial(m, y + 1) * factorial(y + 1);
    const ClosedForm tail = at_one ? b_base_at_one(m - y - 1) : b_base_form(m - y - 1);
    descending_chains(n, y).for_each([&](const Chain& c) {
      const Rational w = chain_weight(n, c);
      const int last = chain_last(n, c);
      if (at_one) {
        const Rational both = sign_power(last) + Rational(1);
        out += scale(log_two(m - y), lead * w * sign_power(n + y + 1) * both);
      } else {
        out += scale(log_1px(m - y) * x_pow(1 - last), lead * w * sign_power(n + last + y + 1));
        out += scale(log_1px(m - y), lead * w * sign_power(n + y + 1));
      }
      out += scale(tail, next * w * sign_power(n + y));
    });
  }
  return out;
}

// ---- polylog moments ------------------------------------------------------

ClosedForm j0_at_one(int m, int p) {
  ClosedForm out;
  for (int j = 2; j <= p; ++j) out += scale(zeta(j), sign_power(p - j) / rpow(m + 1, p + 1 - j));
  out += scale(harmonic(m + 1), sign_power(p - 1) / rpow(m + 1, p));
  return out;
}

ClosedForm j0_form(int m, int p) {
  ClosedForm out;
  for (int j = 2; j <= p; ++j)
    out += scale(x_pow(m + 1) * li_x(j), sign_power(p - j) / rpow(m + 1, p + 1 - j));
  Rational constant(0);
  for (int j = 0; j <= m; ++j) constant += binomial(m, j) * sign_power(j) / rpow(j + 1, 2);
  out += scale(ClosedForm(constant) + m_block(m, 1), sign_power(p - 1) / rpow(m + 1, p - 1));
  return out;
}

ClosedForm j1_zero_form(int m) {
  ClosedForm out;
  for (int j = 0; j <= m; ++j)
    out += scale(x_pow(1) * log_x(m - j), pochhammer(Rational(m + 1 - j), j) * sign_power(j + 1));
  out -= log_1mx() * log_x(m);
  for (int j = 2; j <= m + 1; ++j)
    out += scale(li_x(j) * log_x(m + 1 - j),
                 Rational(m) * sign_power(j - 1) * binomial(m - 1, j - 2) * factorial(j - 2));
  return out;
}

// Chains 0 <= i_l <= m - (i_1 + ... + i_{l-1}) - 1.
NestedSumPlan falling_chains(int m, int length) {
  return NestedSumPlan(static_cast<std::size_t>(length), [m](std::size_t, const Chain& outer) {
    return std::pair<int, int>{0, m - chain_sum(outer) - 1};
  });
}

// m (m-1) ... (m-s+1)
Rational falling(int m, int s) { return factorial(m) / factorial(m - s); }

// (H_{m+1})^2 + sum_{b=0}^{m} (H_{m+1} - H_b) / (m+1-b)
Rational j_one_one_block(int m) {
  const Rational h = harmonic_number(m + 1, 1);
  Rational s = h * h;
  for (int b = 0; b <= m; ++b) s += (h - harmonic_number(b, 1)) / Rational(m + 1 - b);
  return s;
}

// sum_{n=1}^{N} H_n / n^i
Rational harmonic_partial(int N, int i) {
  Rational s(0);
  Rational h(0);
  for (int n = 1; n <= N; ++n) {
    h += Rational(1, n);
    s += h / rpow(n, i);
  }
  return s;
}

ClosedForm zeta_if(int k) { return k >= 2 ? zeta(k) : ClosedForm(); }

}  // namespace

// ---------------------------------------------------------------------------

ClosedForm L_integral(int n, int m, const EvalPoint& x) {
  check(n >= 0 && m >= 0, "L(n,m,x) needs n, m >= 0");
  if (x.at_zero()) return {};
  if (x.at_one()) return ClosedForm(factorial(m) * sign_power(m) / rpow(n + 1, m + 1));
  ClosedForm out;
  for (int j = 0; j <= m; ++j)
    out += scale(x_pow(n + 1) * log_x(m - j),
                 pochhammer(Rational(m + 1 - j), j) * sign_power(j) / rpow(n + 1, j + 1));
  return out;
}

ClosedForm M_integral(int n, int m, const EvalPoint& from) {
  check(n >= 0 && m >= 0, "M(n,m,x) needs n, m >= 0");
  if (from.at_zero()) return ClosedForm(m_at_zero(n, m));
  if (from.at_one()) return {};
  return m_block(n, m);
}

ClosedForm head_log1m_integral(int n, int m, const EvalPoint& x) {
  check(n >= 0 && m >= 0, "the head integral needs n, m >= 0");
  if (x.at_zero()) return {};
  if (x.at_one()) return ClosedForm(m_at_zero(n, m));
  return ClosedForm(m_at_zero(n, m)) - m_block(n, m);
}

ClosedForm A_base(int m, const EvalPoint& x) {
  require(m >= 1, ErrorCode::InvalidOrder, "A(m,1,x) needs m >= 1");
  if (x.at_zero()) return {};
  if (x.at_one()) return scale(zeta(m + 1), zeta_m1_factor(m));
  return a_base_form(m);
}

ClosedForm B_base(int m, const EvalPoint& x) {
  require(m >= 1, ErrorCode::InvalidOrder, "B(m,1,x) needs m >= 1");
  if (x.at_zero()) return {};
  if (x.at_one()) return b_base_at_one(m);
  return b_base_form(m);
}

ClosedForm C_base(int m, const EvalPoint& x) {
  require(m >= 1, ErrorCode::InvalidOrder, "C(m,1,x) needs m >= 1");
  if (x.at_zero()) return {};
  if (x.at_one()) return scale(zeta(m + 1), zeta_m1_factor(m));
  return c_base_form(m);
}

ClosedForm A_general(int m, int n, const EvalPoint& x) {
  check(n >= 1 && m >= n, "A(m,n,x) needs m >= n >= 1");
  if (n == 1) return A_base(m, x);
  if (x.at_zero()) return {};
  if (x.at_one()) return a_general_at_one(m, n);
  return a_general_form(m, n);
}

ClosedForm C_general(int m, int n, const EvalPoint& x) {
  check(n >= 1 && m >= n, "C(m,n,x) needs m >= n >= 1");
  if (n == 1) return C_base(m, x);
  if (x.at_zero()) return {};
  if (x.at_one()) return a_general_at_one(m, n);
  const ClosedForm a = a_general_form(m, n);
  return eval_at_one(a) - subst_one_minus_x(a);
}

ClosedForm C_general_direct(int m, int n, const EvalPoint& x) {
  check(n >= 2 && m >= n, "the C(m,n,x) display needs m >= n >= 2");
  if (x.at_zero()) return {};
  if (x.at_one()) return a_general_at_one(m, n);
  ClosedForm out = a_general_at_one(m, n);
  for (int y = 0; y <= n - 2; ++y) {
    const Rational lead = binomial(m, y) * factorial(y);
    const Rational next = binomial(m, y + 1) * factorial(y + 1);
    const ClosedForm tail = subst_one_minus_x(a_base_form(m - y - 1));
    descending_chains(n, y).for_each([&](const Chain& c) {
      const Rational w = chain_weight(n, c);
      const int last = chain_last(n, c);
      out += scale(log_x(m - y) * one_minus_x_pow(1 - last) - log_x(m - y), lead * w * sign_power(y));
      out += scale(tail, next * w * sign_power(y));
    });
  }
  return out;
}

ClosedForm B_general(int m, int n, const EvalPoint& x) {
  check(n >= 1 && m >= n, "B(m,n,x) needs m >= n >= 1");
  if (n == 1) return B_base(m, x);
  if (x.at_zero()) return {};
  return b_general_form(m, n, x.at_one());
}

ClosedForm J0_eval(int m, int p, const EvalPoint& x) {
  check(m >= 0 && p >= 1, "J0(m,p,x) needs m >= 0, p >= 1");
  if (x.at_zero()) return {};
  if (x.at_one()) return j0_at_one(m, p);
  return j0_form(m, p);
}

ClosedForm J1_zero(int m, const EvalPoint& x) {
  check(m >= 0, "J1(m,0,x) needs m >= 0");
  if (x.at_zero()) return {};
  if (x.at_one()) return eval_at_one(j1_zero_form(m));
  return j1_zero_form(m);
}

ClosedForm J1_eval(int m, int p, const EvalPoint& x) {
  check(m >= 0 && p >= 0, "J1(m,p,x) needs m, p >= 0");
  if (p == 0) return J1_zero(m, x);
  if (m == 0) return J0_eval(0, p, x);
  if (x.at_zero()) return {};

  ClosedForm moments;
  for (int y = 1; y <= p; ++y) {
    falling_chains(m, y).for_each([&](const Chain& c) {
      const int s = chain_sum(c);
      moments += scale(x_pow(1) * li_x(p - y + 1) * log_x(m - s), falling(m, s) * sign_power(s + y - 1));
    });
  }
  ClosedForm out = x.at_one() ? eval_at_one(moments) : moments;
  for (int y = 1; y <= p; ++y) {
    const long chains = falling_chains(m, y - 1).count();
    out += scale(J0_eval(0, p - y + 1, x), factorial(m) * sign_power(m + y - 1) * Rational(chains));
  }
  falling_chains(m, p).for_each([&](const Chain& c) {
    const int s = chain_sum(c);
    out += scale(J1_zero(m - s, x), falling(m, s) * sign_power(s + p));
  });
  return out;
}

ClosedForm J_at_one_v1(int m, int p) {
  check(m >= 0 && p >= 1, "J(m,p,1) needs m >= 0, p >= 1");
  ClosedForm out;
  for (int j = 2; j <= p; ++j) {
    ClosedForm inner;
    for (int i = 2; i <= p + 1 - j; ++i) inner -= scale(zeta(i), Rational(1) / rpow(m + 1, p + 2 - j - i));
    for (int i = 1; i <= p + 1 - j; ++i)
      inner += scale(harmonic(m + 1, i), Rational(1) / rpow(m + 1, p + 2 - j - i));
    out += scale(zeta(j) * inner, sign_power(p - j));
  }
  ClosedForm tail;
  for (int i = 2; i <= p; ++i)
    tail -= scale(reduce_S1(i) - ClosedForm(harmonic_partial(m + 1, i)), Rational(1) / rpow(m + 1, p - i + 1));
  tail += ClosedForm(j_one_one_block(m) / rpow(m + 1, p));
  return out + scale(tail, sign_power(p - 1));
}

ClosedForm J_at_one_v2(int m, int p) {
  check(m >= 0 && p >= 1, "J(m,p,1) needs m >= 0, p >= 1");
  ClosedForm out;
  for (int i = 2; i <= p; ++i) {
    ClosedForm inner = reduce_S1(i);
    for (int k = 2; k <= i; ++k) inner += scale(zeta(k) * harmonic(m + 1, i - k + 1), sign_power(i - k));
    Rational partial(0);
    for (int j = 1; j <= m + 1; ++j) partial += sign_power(i - 1) / rpow(j, i) * harmonic_number(j, 1);
    inner += ClosedForm(partial);
    out += scale(inner, sign_power(p - i) / rpow(m + 1, p - i + 1));
  }
  out += ClosedForm(sign_power(p - 1) / rpow(m + 1, p) * j_one_one_block(m));
  return out;
}

Rational devoto_form(int m) {
  check(m >= 0, "the J(m,1,1) form needs m >= 0");
  Rational s = harmonic_number(m + 1, 2);
  for (int k = 1; k <= m; ++k) s += harmonic_number(k, 1) / Rational(k + 1);
  return Rational(2, m + 1) * s;
}

ClosedForm J_neg2_at_one(int p) {
  check(p >= 1, "J(-2,p,1) needs p >= 1");
  ClosedForm out = scale(zeta(2), Rational(2));
  for (int i = 2; i <= p; ++i) out -= scale(zeta(i + 1), Rational(i, 2));
  for (int i = 3; i <= p; ++i)
    for (int k = 1; k <= i - 2; ++k) out += scale(zeta(k + 1) * zeta(i - k), Rational(1, 2));
  return out;
}

ClosedForm J_neg2_at_one_expanded(int p) {
  check(p >= 1, "J(-2,p,1) needs p >= 1");
  ClosedForm out = zeta(p + 1) + zeta(2);
  for (int j = 2; j <= p; ++j) {
    ClosedForm inner(1);
    for (int i = 2; i <= p + 1 - j; ++i) inner += scale(zeta(i), sign_power(1 + i));
    out += zeta(j) * inner;
  }
  for (int i = 2; i <= p; ++i) out += scale(reduce_S1(i), sign_power(1 + i));
  return out;
}

ClosedForm J_eval(int m, int p, int q) {
  check(p >= 1 && q >= 1, "J(m,p,q) needs p, q >= 1");
  check(m >= -2 && m != -1, "J(m,p,q) needs m >= -2 and m != -1");
  if (p < q) std::swap(p, q);
  const auto base = [m](int k) { return m == -2 ? J_neg2_at_one(k) : J_at_one_v1(m, k); };
  const Rational r(m + 1);
  const auto plan = [p](int length) {
    return NestedSumPlan(static_cast<std::size_t>(length), [p](std::size_t, const Chain& outer) {
      return std::pair<int, int>{0, p - chain_sum(outer) - 2};
    });
  };
  // prod over the chain of (-1)^(i+1) / r^(i+1)
  const auto weight = [&r](const Chain& c, std::size_t upto) {
    Rational w(1);
    for (std::size_t l = 0; l < upto; ++l) w *= sign_power(c[l] + 1) / pow(r, c[l] + 1);
    return w;
  };

  ClosedForm out;
  for (int x = 1; x <= q - 1; ++x) {
    plan(x).for_each([&](const Chain& c) {
      const Rational w = weight(c, c.size() - 1) * sign_power(c.back()) / pow(r, c.back() + 1);
      out += scale(zeta_if(p - chain_sum(c)) * zeta_if(q - x + 1), w);
    });
    const long count = plan(x - 1).count();
    out += scale(base(q - x + 1), sign_power(p - 2 + x) / pow(r, p - 2 + x) * Rational(count));
  }
  plan(q - 1).for_each([&](const Chain& c) { out += scale(base(p - chain_sum(c)), weight(c, c.size())); });
  return out;
}

ClosedForm K_eval(int m, int p, int q) {
  check(m >= 1, "K(m,p,q) needs m >= 1");
  check(p >= 0 && q >= 0 && p + q >= 1, "K(m,p,q) needs p, q >= 0 and p + q >= 1");
  if (p < q) std::swap(p, q);
  if (q == 0) return K_base(m, p);
  const auto plan = [p](int length) {
    return NestedSumPlan(static_cast<std::size_t>(length), [p](std::size_t level, const Chain& outer) {
      return std::pair<int, int>{1, p - chain_sum(outer) + static_cast<int>(level)};
    });
  };
  ClosedForm out;
  for (int x = 1; x <= q; ++x) {
    const long count = plan(x - 1).count();
    const Rational c = sign_power(p + x - 1) / pochhammer(Rational(m + 1), p + x - 1) * Rational(count);
    out += scale(K_base(m + p + x - 1, q - x + 1), c);
  }
  plan(q).for_each([&](const Chain& c) {
    Rational w(1);
    int below = 0;
    for (int i : c) {
      w *= sign_power(i) / pochhammer(Rational(m + below + 1), i);
      below += i;
    }
    out += scale(K_base(m + below, p - below + q), w);
  });
  return out;
}

ClosedForm evaluate(const IntegralSpec& spec) {
  const auto& a = spec.params;
  const std::size_t want = (spec.family == Family::J || spec.family == Family::K) ? 3 : 2;
  check(a.size() == want, spec.key() + ": expected " + std::to_string(want) + " parameters");
  const EvalPoint pt(spec.x);
  const auto at_one_only = [&] {
    check(pt.at_one(), spec.key() + ": this family is only defined on [0, 1]");
  };
  switch (spec.family) {
    case Family::A: return A_general(a[0], a[1], pt);
    case Family::B: return B_general(a[0], a[1], pt);
    case Family::C: return C_general(a[0], a[1], pt);
    case Family::J0: return J0_eval(a[0], a[1], pt);
    case Family::J1: return J1_eval(a[0], a[1], pt);
    case Family::J: at_one_only(); return J_eval(a[0], a[1], a[2]);
    case Family::K: at_one_only(); return K_eval(a[0], a[1], a[2]);
    case Family::L: return L_integral(a[0], a[1], pt);
    case Family::M: return M_integral(a[0], a[1], pt);
    case Family::HeadLog1m: return head_log1m_integral(a[0], a[1], pt);
  }
  return {};
}

}  // namespace plint
