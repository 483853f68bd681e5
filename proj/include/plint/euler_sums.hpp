#pragma once

#include <utility>

#include "plint/closed_form.hpp"
#include "plint/rational.hpp"

namespace plint {

/// S_{1,i} in zeta values, i >= 2.
ClosedForm reduce_S1(int i);

/// S_{p,q} in zeta values when p = 1 or p + q is odd; otherwise the
/// unreduced EulerSum(p, q) atom.
ClosedForm reduce_S(int p, int q);

/// True when reduce_S(p, q) yields a pure zeta form.
bool is_reducible_S(int p, int q) noexcept;

/// K(m, 0, q) = m! (-1)^m (S_{q,m+1} - zeta(m+q+1)).
ClosedForm K_base(int m, int q);

/// Right-hand side of the reflection relation for K(r, 0, q), r >= 1, q >= 2:
/// (-1)^(r+q) r!/(q-1)! K(q-1, 0, r+1) + (-1)^r r! (zeta(r+1) zeta(q) - zeta(r+q+1)).
ClosedForm freitas_K0_recurrence(int r, int q);

/// (H_{m+1}^(2), the double-binomial expression for it).
std::pair<Rational, Rational> check_prop2(int m);

/// (H_{m+1}, (m+1) sum_j C(m,j) (-1)^j / (j+1)^2).
std::pair<Rational, Rational> harmonic_binomial_identity(int m);

}  // namespace plint
