#pragma once

#include <vector>

#include "plint/closed_form.hpp"
#include "plint/quadrature.hpp"

namespace plint {

// A second symbolic route to J0(m,q,1), J(m,p,q) and K(r,p,q) by literal
// recursion on their integration-by-parts relations:
//
//   J0(m,q)  = zeta(q)/(m+1) - J0(m,q-1)/(m+1)
//   J(m,p,q) = zeta(p)zeta(q)/(m+1) - (J(m,p-1,q) + J(m,p,q-1))/(m+1)
//   K(r,p,q) = -(K(r+1,p-1,q) + K(r+1,p,q-1))/(r+1)
//
// bottoming out in J0(m,1,1), J(m,p,1) and K(r,0,q).

ClosedForm freitas_J0(int m, int q);
ClosedForm freitas_J(int m, int p, int q);
ClosedForm freitas_K(int r, int p, int q);

/// Dispatch on family J0 (params {m, q}), J ({m, p, q}) or K ({r, p, q}).
ClosedForm freitas_recurrence_eval(Family family, const std::vector<int>& params);

}  // namespace plint
