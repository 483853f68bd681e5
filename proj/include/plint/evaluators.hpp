#pragma once

#include "plint/closed_form.hpp"
#include "plint/numerics.hpp"
#include "plint/quadrature.hpp"
#include "plint/rational.hpp"

namespace plint {

// Every evaluator returns its integral as a ClosedForm. For 0 < x < 1 the
// form is expressed in the symbolic x-atoms and is evaluated numerically at
// the point afterwards; at x = 1 it is a constant; at x = 0 it is 0, except
// for M whose point is the lower limit.

ClosedForm L_integral(int n, int m, const EvalPoint& x);
ClosedForm M_integral(int n, int m, const EvalPoint& from);
ClosedForm head_log1m_integral(int n, int m, const EvalPoint& x);

ClosedForm A_base(int m, const EvalPoint& x);
ClosedForm B_base(int m, const EvalPoint& x);
ClosedForm C_base(int m, const EvalPoint& x);

ClosedForm A_general(int m, int n, const EvalPoint& x);
/// A(m,n,1) - A(m,n,1-x), built by substitution from A_general.
ClosedForm C_general(int m, int n, const EvalPoint& x);
/// The C(m,n,x) display written out directly, for cross-checking C_general.
ClosedForm C_general_direct(int m, int n, const EvalPoint& x);
ClosedForm B_general(int m, int n, const EvalPoint& x);

ClosedForm J0_eval(int m, int p, const EvalPoint& x);
ClosedForm J1_zero(int m, const EvalPoint& x);
ClosedForm J1_eval(int m, int p, const EvalPoint& x);

ClosedForm J_at_one_v1(int m, int p);
ClosedForm J_at_one_v2(int m, int p);
/// (2/(m+1)) (H_{m+1}^(2) + sum_{k=1}^m H_k/(k+1)), the known value of J(m,1,1).
Rational devoto_form(int m);
ClosedForm J_neg2_at_one(int p);
/// The longer of the two J(-2,p,1) expressions.
ClosedForm J_neg2_at_one_expanded(int p);
ClosedForm J_eval(int m, int p, int q);
ClosedForm K_eval(int m, int p, int q);

/// Dispatches an IntegralSpec to its evaluator.
ClosedForm evaluate(const IntegralSpec& spec);

}  // namespace plint
