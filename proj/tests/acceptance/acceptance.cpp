// Acceptance gate: each criterion prints one PASS/FAIL line; the process
// exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "plint/closed_form.hpp"
#include "plint/errors.hpp"
#include "plint/euler_sums.hpp"
#include "plint/evaluators.hpp"
#include "plint/numerics.hpp"
#include "plint/quadrature.hpp"
#include "plint/recurrence.hpp"
#include "plint/verify.hpp"

using namespace plint;
using boost::multiprecision::abs;

namespace {

// Collects failures for one criterion; the first few are echoed.
struct Outcome {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }

std::string fmt(const Real& e) { return format_error(e); }

Real value(const ClosedForm& f, const EvalPoint& pt = EvalPoint()) { return numeric_eval(f, pt); }

std::vector<IntegralSpec> full_j_and_k() {
  std::vector<IntegralSpec> out;
  for (const IntegralSpec& s : oracle_grid(Grid::Full))
    if (s.family == Family::J || s.family == Family::K) out.push_back(s);
  return out;
}

void particular_values(Outcome& o) {
  for (int m = 1; m <= 6; ++m) {
    const ClosedForm expected = scale(zeta(m + 1), sign_power(m) * factorial(m));
    for (Family f : {Family::A, Family::C}) {
      const IntegralSpec spec{f, {m, 1}, Rational(1)};
      const ClosedForm got = evaluate(spec);
      o.expect(got == expected && got.size() == 1, spec.key() + " = " + got.to_text());
      const Real r = rel(value(got), integrate(spec));
      o.expect(r <= Real("1e-9"), spec.key() + " oracle rel err " + fmt(r));
    }
  }
}

void oracle_agreement(Outcome& o) {
  for (const IntegralSpec& spec : oracle_grid(Grid::Full)) {
    try {
      const ClosedForm f = evaluate(spec);
      const Real r = rel(value(f, EvalPoint(spec.x)), integrate(spec));
      o.expect(r <= Real("1e-9"), spec.key() + " rel err " + fmt(r));
    } catch (const Error& e) {
      o.expect(false, spec.key() + ": " + e.what());
    }
  }
}

void dual_route(Outcome& o) {
  for (int m = 0; m <= 4; ++m)
    for (int q = 1; q <= 5; ++q)
      o.expect(freitas_J0(m, q) == J0_eval(m, q, EvalPoint()), "J0(" + std::to_string(m) + "," + std::to_string(q) + ")");
  for (const IntegralSpec& spec : full_j_and_k()) {
    const Real direct = value(evaluate(spec));
    const Real rec = value(freitas_recurrence_eval(spec.family, spec.params));
    const Real r = rel(rec, direct);
    o.expect(r <= Real("1e-10"), spec.key() + " recurrence rel err " + fmt(r));
  }
}

void two_formula(Outcome& o) {
  for (int m = 0; m <= 5; ++m) {
    for (int p = 1; p <= 6; ++p) {
      const Real r = rel(value(J_at_one_v2(m, p)), value(J_at_one_v1(m, p)));
      o.expect(r <= Real("1e-10"), "J(" + std::to_string(m) + "," + std::to_string(p) + ",1) v1/v2 " + fmt(r));
    }
    const Rational devoto = devoto_form(m);
    const auto v1 = expand_harmonics(J_at_one_v1(m, 1)).as_rational();
    const auto v2 = expand_harmonics(J_at_one_v2(m, 1)).as_rational();
    o.expect(v1 && *v1 == devoto, "v1 Devoto m=" + std::to_string(m));
    o.expect(v2 && *v2 == devoto, "v2 Devoto m=" + std::to_string(m));
  }
}

void reduction_purity(Outcome& o) {
  for (const IntegralSpec& spec : full_j_and_k()) {
    if (spec.family != Family::J) continue;
    const ClosedForm f = evaluate(spec);
    o.expect(f.only_kinds({AtomKind::Zeta, AtomKind::Harmonic}), spec.key() + " = " + f.to_text());
  }
  for (int r = 1; r <= 8; ++r) {
    for (int p = 0; r + p <= 8; ++p) {
      for (int q = 0; r + p + q <= 8; ++q) {
        if (p + q == 0 || (r + p + q) % 2 != 0) continue;
        const ClosedForm f = K_eval(r, p, q);
        o.expect(!f.contains(AtomKind::EulerSum) && f.is_constant(),
                 "K(" + std::to_string(r) + "," + std::to_string(p) + "," + std::to_string(q) + ") = " + f.to_text());
      }
    }
  }
}

void exact_identities(Outcome& o) {
  for (int m = 0; m <= 20; ++m) {
    const auto [l, r] = check_prop2(m);
    o.expect(l == r && l == harmonic_number(m + 1, 2), "H2 binomial m=" + std::to_string(m));
    const auto [hl, hr] = harmonic_binomial_identity(m);
    o.expect(hl == hr && hl == harmonic_number(m + 1), "binomial m=" + std::to_string(m));
  }
}

void euler_gate(Outcome& o) {
  for (int w = 3; w <= 9; w += 2) {
    for (int p = 1; p <= w - 2; ++p) {
      const int q = w - p;
      const ClosedForm f = reduce_S(p, q);
      o.expect(f.only_kinds({AtomKind::Zeta}), "S(" + std::to_string(p) + "," + std::to_string(q) + ") unreduced");
      const Real d = abs(value(f) - euler_sum_value(p, q));
      o.expect(d <= Real("1e-10"), "S(" + std::to_string(p) + "," + std::to_string(q) + ") diff " + fmt(d));
    }
  }
  o.expect(reduce_S(1, 2) == scale(zeta(3), 2), "S(1,2) = " + reduce_S(1, 2).to_text());
}

void spot_values(Outcome& o) {
  struct Spot {
    IntegralSpec spec;
    std::optional<ClosedForm> structural;
    ClosedForm numeric;
  };
  const std::vector<Spot> spots = {
      {{Family::J, {-2, 1, 1}, Rational(1)}, scale(zeta(2), 2), scale(zeta(2), 2)},
      {{Family::J, {0, 1, 1}, Rational(1)}, ClosedForm(2), ClosedForm(2)},
      {{Family::K, {1, 0, 1}, Rational(1)}, -zeta(3), -zeta(3)},
      {{Family::B, {1, 1}, Rational(1)}, std::nullopt, scale(zeta(2), Rational(1, 2))},
  };
  for (const Spot& s : spots) {
    const ClosedForm f = evaluate(s.spec);
    if (s.structural) o.expect(f == *s.structural, s.spec.key() + " = " + f.to_text());
    const Real q = integrate(s.spec);
    o.expect(abs(value(f) - q) <= Real("1e-10"), s.spec.key() + " vs oracle");
    o.expect(abs(value(s.numeric) - q) <= Real("1e-10"), s.spec.key() + " expected value vs oracle");
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact particular values A(m,1,1), C(m,1,1), m = 1..6", 10, particular_values},
      {2, "oracle agreement on the full grid at 1e-9", 300, oracle_agreement},
      {3, "dual-route consistency (J0 structural, J and K at 1e-10)", 0, dual_route},
      {4, "two-formula consistency and the Devoto value", 0, two_formula},
      {5, "reduction purity of J and even-weight K", 0, reduction_purity},
      {6, "exact harmonic identities, m = 0..20", 1, exact_identities},
      {7, "Euler-sum gate at 1e-10 and S(1,2) = 2 z3", 0, euler_gate},
      {8, "spot values J(-2,1,1), J(0,1,1), K(1,0,1), B(1,1,1)", 0, spot_values},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      std::ostringstream note;
      note << "runtime " << secs << " s over budget " << c.budget_seconds << " s";
      o.expect(false, note.str());
    }
    const bool pass = o.failures == 0 && o.checks > 0;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s [%ld checks, %.2f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.checks, secs);
    for (const std::string& n : o.notes) std::printf("    %s\n", n.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
