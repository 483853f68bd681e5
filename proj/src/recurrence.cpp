#include "plint/recurrence.hpp"

#include <map>
#include <tuple>

#include "plint/errors.hpp"
#include "plint/euler_sums.hpp"
#include "plint/evaluators.hpp"

namespace plint {

namespace {

using Key = std::tuple<int, int, int>;

ClosedForm j_rec(int m, int p, int q, std::map<Key, ClosedForm>& memo) {
  if (p < q) std::swap(p, q);
  if (q == 1) return m == -2 ? J_neg2_at_one(p) : J_at_one_v1(m, p);
  const Key key{m, p, q};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Rational inv = Rational(1) / Rational(m + 1);
  ClosedForm v = scale(zeta(p) * zeta(q) - j_rec(m, p - 1, q, memo) - j_rec(m, p, q - 1, memo), inv);
  memo.emplace(key, v);
  return v;
}

ClosedForm k_rec(int r, int p, int q, std::map<Key, ClosedForm>& memo) {
  if (p < q) std::swap(p, q);
  if (q == 0) return K_base(r, p);
  const Key key{r, p, q};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  ClosedForm v = scale(k_rec(r + 1, p - 1, q, memo) + k_rec(r + 1, p, q - 1, memo), Rational(-1, r + 1));
  memo.emplace(key, v);
  return v;
}

}  // namespace

ClosedForm freitas_J0(int m, int q) {
  require(m >= 0 && q >= 1, ErrorCode::ParameterError, "J0 recurrence needs m >= 0, q >= 1");
  ClosedForm v = J0_eval(m, 1, EvalPoint::one());
  for (int k = 2; k <= q; ++k) v = scale(zeta(k) - v, Rational(1, m + 1));
  return v;
}

ClosedForm freitas_J(int m, int p, int q) {
  require(p >= 1 && q >= 1, ErrorCode::ParameterError, "J recurrence needs p, q >= 1");
  require(m >= -2 && m != -1, ErrorCode::ParameterError, "J recurrence needs m >= 0 or m = -2");
  std::map<Key, ClosedForm> memo;
  return j_rec(m, p, q, memo);
}

ClosedForm freitas_K(int r, int p, int q) {
  require(r >= 1, ErrorCode::ParameterError, "K recurrence needs r >= 1");
  require(p >= 0 && q >= 0 && p + q >= 1, ErrorCode::ParameterError,
          "K recurrence needs p, q >= 0 and p + q >= 1");
  std::map<Key, ClosedForm> memo;
  return k_rec(r, p, q, memo);
}

ClosedForm freitas_recurrence_eval(Family family, const std::vector<int>& params) {
  const auto need = [&](std::size_t n) {
    require(params.size() == n, ErrorCode::ParameterError, "wrong number of recurrence parameters");
  };
  switch (family) {
    case Family::J0: need(2); return freitas_J0(params[0], params[1]);
    case Family::J: need(3); return freitas_J(params[0], params[1], params[2]);
    case Family::K: need(3); return freitas_K(params[0], params[1], params[2]);
    default: break;
  }
  fail(ErrorCode::ParameterError, "no recurrence for family " + std::string(family_name(family)));
}

}  // namespace plint
