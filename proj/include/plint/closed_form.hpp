#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plint/atom.hpp"
#include "plint/rational.hpp"

namespace plint {

struct Factor {
  Atom atom;
  int exp = 1;

  friend auto operator<=>(const Factor&, const Factor&) = default;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Sorted list of factors with distinct atoms and positive exponents.
using Monomial = std::vector<Factor>;

/// Multiplies two canonical monomials. Power kinds merge by adding their
/// arguments (x^2 * x^-2 = 1), other atoms by adding exponents.
Monomial multiply(const Monomial& a, const Monomial& b);

struct Term {
  Rational coeff;
  Monomial factors;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A canonical finite sum of terms: like terms merged, zero terms dropped,
/// ordered lexicographically by factor list (the constant term first).
/// Values are immutable; every operation returns a new ClosedForm.
class ClosedForm {
 public:
  ClosedForm() = default;
  ClosedForm(const Rational& c);  // NOLINT: rationals embed as constants
  ClosedForm(int c) : ClosedForm(Rational(c)) {}  // NOLINT

  static ClosedForm atom(const Atom& a, int exp = 1);
  static ClosedForm term(const Rational& coeff, const Monomial& factors);
  static ClosedForm from_terms(const std::vector<Term>& terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// True when no x-dependent atom occurs.
  bool is_constant() const;
  /// Exact value if the form is a pure rational.
  std::optional<Rational> as_rational() const;
  bool contains(AtomKind kind) const;
  /// True when every atom satisfies the predicate on its kind.
  bool only_kinds(std::initializer_list<AtomKind> allowed) const;

  ClosedForm operator-() const;
  friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b);
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);
  ClosedForm& operator+=(const ClosedForm& o) { return *this = *this + o; }
  ClosedForm& operator-=(const ClosedForm& o) { return *this = *this - o; }

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  /// Compact rendering, e.g. "2*z3", "z2 - 1", "-3/7*z2 + 3/7".
  std::string to_text() const;

 private:
  explicit ClosedForm(std::map<Monomial, Rational> terms);
  std::vector<Term> terms_;
};

ClosedForm add(const ClosedForm& a, const ClosedForm& b);
ClosedForm mul(const ClosedForm& a, const ClosedForm& b);
ClosedForm scale(const ClosedForm& a, const Rational& c);
ClosedForm power(const ClosedForm& a, int exponent);

/// Convenience builders. zeta(1) yields 0, the convention of the Euler-sum
/// reduction formulas; li_x(0) and li_x(1) are rewritten to x (1-x)^-1 and
/// -log(1-x) so the canonical form never contains them.
ClosedForm zeta(int k);
ClosedForm harmonic(int n, int m = 1);
ClosedForm li_x(int k);
ClosedForm li_1mx(int k);
ClosedForm li_inv_1px(int k);
ClosedForm li_at_half(int k);
ClosedForm log_x(int exp = 1);
ClosedForm log_1mx(int exp = 1);
ClosedForm log_1px(int exp = 1);
ClosedForm log_two(int exp = 1);
ClosedForm x_pow(int j);
ClosedForm one_minus_x_pow(int j);
ClosedForm one_plus_x_pow(int j);

/// The x -> 1-x map on the A-family basis; an involution.
/// Throws UnsupportedAtom if a (1+x)-argument atom is present.
ClosedForm subst_one_minus_x(const ClosedForm& f);

/// Limit x -> 1- of f. Terms carrying a positive total order of vanishing
/// (powers of log x, (1-x)^j, Li_k(1-x)) drop out; log(1-x) and pole
/// divergences must cancel exactly between terms or DivergentAtOne is thrown.
ClosedForm eval_at_one(const ClosedForm& f);

/// Replaces every Harmonic atom by its exact rational value.
ClosedForm expand_harmonics(const ClosedForm& f);

}  // namespace plint
