#include "plint/closed_form.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "plint/errors.hpp"

namespace plint {

namespace {

int power_slot(AtomKind kind) {
  switch (kind) {
    case AtomKind::XPow: return 0;
    case AtomKind::OneMinusXPow: return 1;
    case AtomKind::OnePlusXPow: return 2;
    default: return -1;
  }
}

constexpr std::array<AtomKind, 3> kPowerKinds = {AtomKind::XPow, AtomKind::OneMinusXPow,
                                                 AtomKind::OnePlusXPow};

// Canonicalizes a factor list in place, pulling any sign produced by the
// Li_0 / Li_1 rewrites into `coeff`.
Monomial canonical(const Monomial& raw, Rational& coeff) {
  std::map<Atom, int> exps;
  std::array<int, 3> powers{0, 0, 0};
  for (const Factor& f : raw) {
    require(f.exp >= 1, ErrorCode::ParameterError, "factor exponents must be >= 1");
    const Atom& a = f.atom;
    if (const int slot = power_slot(a.kind()); slot >= 0) {
      powers[slot] += a.arg0() * f.exp;
    } else if (a.kind() == AtomKind::LiX && a.arg0() == 1) {
      if (f.exp % 2) coeff = -coeff;
      exps[Atom::log_1mx()] += f.exp;
    } else if (a.kind() == AtomKind::LiX && a.arg0() == 0) {
      powers[0] += f.exp;
      powers[1] -= f.exp;
    } else {
      exps[a] += f.exp;
    }
  }
  Monomial out;
  out.reserve(exps.size() + 3);
  for (const auto& [atom, e] : exps) out.push_back({atom, e});
  for (std::size_t i = 0; i < 3; ++i)
    if (powers[i] != 0) out.push_back({Atom::make(kPowerKinds[i], {powers[i]}), 1});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial all = a;
  all.insert(all.end(), b.begin(), b.end());
  Rational unused(1);
  return canonical(all, unused);
}

ClosedForm::ClosedForm(std::map<Monomial, Rational> terms) {
  terms_.reserve(terms.size());
  for (auto& [m, c] : terms)
    if (!c.is_zero()) terms_.push_back({std::move(c), m});
}

ClosedForm::ClosedForm(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({c, {}});
}

ClosedForm ClosedForm::atom(const Atom& a, int exp) { return term(Rational(1), {{a, exp}}); }

ClosedForm ClosedForm::term(const Rational& coeff, const Monomial& factors) {
  Rational c = coeff;
  Monomial m = canonical(factors, c);
  std::map<Monomial, Rational> t;
  t.emplace(std::move(m), c);
  return ClosedForm(std::move(t));
}

ClosedForm ClosedForm::from_terms(const std::vector<Term>& terms) {
  std::map<Monomial, Rational> acc;
  for (const Term& t : terms) {
    Rational c = t.coeff;
    Monomial m = canonical(t.factors, c);
    acc[m] += c;
  }
  return ClosedForm(std::move(acc));
}

bool ClosedForm::is_constant() const {
  for (const Term& t : terms_)
    for (const Factor& f : t.factors)
      if (!f.atom.is_constant()) return false;
  return true;
}

std::optional<Rational> ClosedForm::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].factors.empty()) return terms_[0].coeff;
  return std::nullopt;
}

bool ClosedForm::contains(AtomKind kind) const {
  for (const Term& t : terms_)
    for (const Factor& f : t.factors)
      if (f.atom.kind() == kind) return true;
  return false;
}

bool ClosedForm::only_kinds(std::initializer_list<AtomKind> allowed) const {
  for (const Term& t : terms_)
    for (const Factor& f : t.factors)
      if (std::find(allowed.begin(), allowed.end(), f.atom.kind()) == allowed.end()) return false;
  return true;
}

ClosedForm ClosedForm::operator-() const { return scale(*this, Rational(-1)); }

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
  std::map<Monomial, Rational> acc;
  for (const Term& t : a.terms_) acc[t.factors] += t.coeff;
  for (const Term& t : b.terms_) acc[t.factors] += t.coeff;
  return ClosedForm(std::move(acc));
}

ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) { return a + (-b); }

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
  std::map<Monomial, Rational> acc;
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) acc[multiply(s.factors, t.factors)] += s.coeff * t.coeff;
  return ClosedForm(std::move(acc));
}

std::string ClosedForm::to_text() const {
  if (terms_.empty()) return "0";
  // Constant term rendered last: "z2 - 1".
  std::vector<const Term*> order;
  for (const Term& t : terms_)
    if (!t.factors.empty()) order.push_back(&t);
  if (terms_.front().factors.empty()) order.push_back(&terms_.front());

  std::string out;
  bool first = true;
  for (const Term* t : order) {
    const bool negative = t->coeff.sign() < 0;
    const Rational mag = negative ? -t->coeff : t->coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (const Factor& f : t->factors) {
      if (!body.empty()) body += "*";
      body += f.atom.to_text();
      if (f.exp != 1) body += "^" + std::to_string(f.exp);
    }
    if (body.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += body;
    } else {
      out += mag.to_string() + "*" + body;
    }
  }
  return out;
}

ClosedForm add(const ClosedForm& a, const ClosedForm& b) { return a + b; }
ClosedForm mul(const ClosedForm& a, const ClosedForm& b) { return a * b; }

ClosedForm scale(const ClosedForm& a, const Rational& c) {
  if (c.is_zero()) return {};
  std::vector<Term> t = a.terms();
  for (Term& term : t) term.coeff *= c;
  return ClosedForm::from_terms(t);
}

ClosedForm power(const ClosedForm& a, int exponent) {
  require(exponent >= 0, ErrorCode::ParameterError, "negative power of a closed form");
  ClosedForm r(1);
  for (int i = 0; i < exponent; ++i) r = r * a;
  return r;
}

ClosedForm zeta(int k) {
  require(k >= 1, ErrorCode::InvalidOrder, "zeta(" + std::to_string(k) + ") is not in the basis");
  if (k == 1) return {};
  return ClosedForm::atom(Atom::zeta(k));
}

ClosedForm harmonic(int n, int m) {
  require(n >= 0 && m >= 1, ErrorCode::ParameterError, "harmonic number needs n >= 0, m >= 1");
  if (n == 0) return {};
  if (n == 1) return Rational(1);
  return ClosedForm::atom(Atom::harmonic(n, m));
}

ClosedForm li_x(int k) { return ClosedForm::atom(Atom::li_x(k)); }

ClosedForm li_1mx(int k) {
  if (k == 1) return -log_x();
  if (k == 0) return one_minus_x_pow(1) * x_pow(-1);
  return ClosedForm::atom(Atom::li_1mx(k));
}

ClosedForm li_inv_1px(int k) {
  if (k == 1) return log_1px() - log_x();
  if (k == 0) return x_pow(-1);
  return ClosedForm::atom(Atom::li_inv_1px(k));
}

ClosedForm li_at_half(int k) {
  if (k == 1) return log_two();
  if (k == 0) return ClosedForm(1);
  return ClosedForm::atom(Atom::li_at_half(k));
}

namespace {
ClosedForm atom_power(const Atom& a, int exp) {
  require(exp >= 0, ErrorCode::ParameterError, "negative exponent on a log atom");
  return exp == 0 ? ClosedForm(1) : ClosedForm::atom(a, exp);
}
}  // namespace

ClosedForm log_x(int exp) { return atom_power(Atom::log_x(), exp); }
ClosedForm log_1mx(int exp) { return atom_power(Atom::log_1mx(), exp); }
ClosedForm log_1px(int exp) { return atom_power(Atom::log_1px(), exp); }
ClosedForm log_two(int exp) { return atom_power(Atom::log_two(), exp); }
ClosedForm x_pow(int j) { return j == 0 ? ClosedForm(1) : ClosedForm::atom(Atom::x_pow(j)); }
ClosedForm one_minus_x_pow(int j) {
  return j == 0 ? ClosedForm(1) : ClosedForm::atom(Atom::one_minus_x_pow(j));
}
ClosedForm one_plus_x_pow(int j) {
  return j == 0 ? ClosedForm(1) : ClosedForm::atom(Atom::one_plus_x_pow(j));
}

ClosedForm subst_one_minus_x(const ClosedForm& f) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) {
    Term image{t.coeff, {}};
    for (const Factor& fac : t.factors) {
      const Atom& a = fac.atom;
      if (a.involves_one_plus_x())
        fail(ErrorCode::UnsupportedAtom,
             "x -> 1-x substitution does not apply to " + a.to_text());
      Atom mapped = a;
      switch (a.kind()) {
        case AtomKind::LogX: mapped = Atom::log_1mx(); break;
        case AtomKind::Log1mX: mapped = Atom::log_x(); break;
        case AtomKind::XPow: mapped = Atom::one_minus_x_pow(a.arg0()); break;
        case AtomKind::OneMinusXPow: mapped = Atom::x_pow(a.arg0()); break;
        case AtomKind::LiX: mapped = Atom::li_1mx(a.arg0()); break;
        case AtomKind::Li1mX: mapped = Atom::li_x(a.arg0()); break;
        default: break;
      }
      image.factors.push_back({mapped, fac.exp});
    }
    out.push_back(std::move(image));
  }
  return ClosedForm::from_terms(out);
}

ClosedForm eval_at_one(const ClosedForm& f) {
  std::map<Monomial, Rational> finite;
  // Divergent log(1-x) contributions, keyed by their exact singular shape.
  std::map<std::tuple<int, int, int, Monomial>, Rational> singular;
  for (const Term& t : f.terms()) {
    int log_x_exp = 0, pole = 0, log_1mx_exp = 0, li_1mx_exp = 0;
    Rational c = t.coeff;
    Monomial rest;
    for (const Factor& fac : t.factors) {
      const Atom& a = fac.atom;
      switch (a.kind()) {
        case AtomKind::LogX: log_x_exp = fac.exp; break;
        case AtomKind::Log1mX: log_1mx_exp = fac.exp; break;
        case AtomKind::OneMinusXPow: pole = a.arg0(); break;
        case AtomKind::Li1mX: li_1mx_exp += fac.exp; break;
        case AtomKind::XPow: break;
        case AtomKind::OnePlusXPow: c *= pow(Rational(2), a.arg0()); break;
        case AtomKind::Log1pX: rest.push_back({Atom::log_two(), fac.exp}); break;
        case AtomKind::LiInv1pX: rest.push_back({Atom::li_at_half(a.arg0()), fac.exp}); break;
        case AtomKind::LiX: rest.push_back({Atom::zeta(a.arg0()), fac.exp}); break;
        default: rest.push_back(fac); break;
      }
    }
    // log x ~ -(1-x) and Li_k(1-x) ~ (1-x) near x = 1.
    const int order = log_x_exp + pole + li_1mx_exp;
    if (order > 0) continue;
    if (order < 0)
      fail(ErrorCode::DivergentAtOne, "pole at x = 1 in term of " + f.to_text());
    if (log_x_exp % 2) c = -c;
    Rational unit(1);
    rest = canonical(rest, unit);
    c *= unit;
    if (log_1mx_exp == 0) {
      finite[rest] += c;
    } else {
      singular[{log_x_exp, li_1mx_exp, log_1mx_exp, rest}] += c;
    }
  }
  for (const auto& [key, c] : singular)
    if (!c.is_zero())
      fail(ErrorCode::DivergentAtOne, "uncancelled log(1-x) divergence at x = 1");
  std::vector<Term> out;
  for (auto& [m, c] : finite) out.push_back({c, m});
  return ClosedForm::from_terms(out);
}

ClosedForm expand_harmonics(const ClosedForm& f) {
  ClosedForm out;
  for (const Term& t : f.terms()) {
    ClosedForm term(t.coeff);
    Monomial rest;
    for (const Factor& fac : t.factors) {
      if (fac.atom.kind() == AtomKind::Harmonic) {
        term = scale(term, pow(harmonic_number(fac.atom.arg0(), fac.atom.arg1()), fac.exp));
      } else {
        rest.push_back(fac);
      }
    }
    out += term * ClosedForm::term(Rational(1), rest);
  }
  return out;
}

}  // namespace plint
