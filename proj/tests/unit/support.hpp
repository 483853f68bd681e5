#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "plint/closed_form.hpp"
#include "plint/numerics.hpp"

namespace plint::test {

inline Real rel_diff(const Real& a, const Real& b) {
  using boost::multiprecision::abs;
  const Real scale = std::max(Real(1), abs(b));
  return abs(a - b) / scale;
}

inline Real real(const char* decimal) { return Real(decimal); }

inline EvalPoint at(const char* x) { return EvalPoint(Rational::parse(x)); }

// Small random forms over the constant and A-family bases, for the algebraic
// property checks.
class FormGenerator {
 public:
  explicit FormGenerator(unsigned seed) : rng_(seed) {}

  Atom atom(bool with_x = true) {
    std::vector<Atom> pool = {Atom::zeta(2), Atom::zeta(3), Atom::log_two(), Atom::li_at_half(2),
                              Atom::harmonic(3, 1)};
    if (with_x) {
      pool.insert(pool.end(), {Atom::log_x(), Atom::log_1mx(), Atom::x_pow(1), Atom::x_pow(-1),
                               Atom::one_minus_x_pow(2), Atom::li_x(2), Atom::li_1mx(3)});
    }
    return pool[pick(pool.size())];
  }

  ClosedForm form(bool with_x = true, int max_terms = 4) {
    ClosedForm f;
    const int terms = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_terms)));
    for (int i = 0; i < terms; ++i) {
      const long num = static_cast<long>(pick(11)) - 5;
      const long den = 1 + static_cast<long>(pick(4));
      ClosedForm t = Rational(num, den);
      const int factors = static_cast<int>(pick(3));
      for (int k = 0; k < factors; ++k) t = t * ClosedForm::atom(atom(with_x));
      f += t;
    }
    return f;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::mt19937 rng_;
};

}  // namespace plint::test
