#include "plint/atom.hpp"

#include <array>
#include <string>

#include "plint/errors.hpp"

namespace plint {

namespace {

constexpr std::array<std::string_view, 14> kKindNames = {
    "Zeta",   "LogTwo", "LiAtHalf",     "Harmonic",    "EulerSum", "LogX",  "Log1mX",
    "Log1pX", "XPow",   "OneMinusXPow", "OnePlusXPow", "LiX",      "Li1mX", "LiInv1pX",
};

void check(bool ok, AtomKind kind, const std::vector<int>& args) {
  if (ok) return;
  std::string msg = "invalid atom " + std::string(kind_name(kind)) + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) msg += ",";
    msg += std::to_string(args[i]);
  }
  fail(ErrorCode::ParameterError, msg + ")");
}

}  // namespace

std::string_view kind_name(AtomKind kind) noexcept {
  return kKindNames[static_cast<std::size_t>(kind)];
}

AtomKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<AtomKind>(i);
  fail(ErrorCode::ParseError, "unknown atom kind '" + std::string(name) + "'");
}

int arity(AtomKind kind) noexcept {
  switch (kind) {
    case AtomKind::LogTwo:
    case AtomKind::LogX:
    case AtomKind::Log1mX:
    case AtomKind::Log1pX:
      return 0;
    case AtomKind::Harmonic:
    case AtomKind::EulerSum:
      return 2;
    default:
      return 1;
  }
}

Atom Atom::make(AtomKind kind, const std::vector<int>& args) {
  check(static_cast<int>(args.size()) == arity(kind), kind, args);
  const int a = args.size() > 0 ? args[0] : 0;
  const int b = args.size() > 1 ? args[1] : 0;
  switch (kind) {
    case AtomKind::Zeta:
    case AtomKind::LiAtHalf:
    case AtomKind::Li1mX:
    case AtomKind::LiInv1pX:
      check(a >= 2, kind, args);
      break;
    case AtomKind::Harmonic:
      check(a >= 1 && b >= 1, kind, args);
      break;
    case AtomKind::EulerSum:
      check(a >= 1 && b >= 2, kind, args);
      break;
    case AtomKind::XPow:
    case AtomKind::OneMinusXPow:
    case AtomKind::OnePlusXPow:
      check(a != 0, kind, args);
      break;
    case AtomKind::LiX:
      check(a >= 0, kind, args);
      break;
    default:
      break;
  }
  return Atom(kind, a, b);
}

Atom Atom::zeta(int k) { return make(AtomKind::Zeta, {k}); }
Atom Atom::log_two() { return make(AtomKind::LogTwo, {}); }
Atom Atom::li_at_half(int k) { return make(AtomKind::LiAtHalf, {k}); }
Atom Atom::harmonic(int n, int m) { return make(AtomKind::Harmonic, {n, m}); }
Atom Atom::euler_sum(int p, int q) { return make(AtomKind::EulerSum, {p, q}); }
Atom Atom::log_x() { return make(AtomKind::LogX, {}); }
Atom Atom::log_1mx() { return make(AtomKind::Log1mX, {}); }
Atom Atom::log_1px() { return make(AtomKind::Log1pX, {}); }
Atom Atom::x_pow(int j) { return make(AtomKind::XPow, {j}); }
Atom Atom::one_minus_x_pow(int j) { return make(AtomKind::OneMinusXPow, {j}); }
Atom Atom::one_plus_x_pow(int j) { return make(AtomKind::OnePlusXPow, {j}); }
Atom Atom::li_x(int k) { return make(AtomKind::LiX, {k}); }
Atom Atom::li_1mx(int k) { return make(AtomKind::Li1mX, {k}); }
Atom Atom::li_inv_1px(int k) { return make(AtomKind::LiInv1pX, {k}); }

std::vector<int> Atom::args() const {
  switch (arity(kind_)) {
    case 0: return {};
    case 1: return {a_};
    default: return {a_, b_};
  }
}

std::string Atom::to_text() const {
  const auto n = [](int v) { return std::to_string(v); };
  switch (kind_) {
    case AtomKind::Zeta: return "z" + n(a_);
    case AtomKind::LogTwo: return "l2";
    case AtomKind::LiAtHalf: return "Li" + n(a_) + "(h)";
    case AtomKind::Harmonic: return "H(" + n(a_) + "," + n(b_) + ")";
    case AtomKind::EulerSum: return "S(" + n(a_) + "," + n(b_) + ")";
    case AtomKind::LogX: return "log(x)";
    case AtomKind::Log1mX: return "log(1-x)";
    case AtomKind::Log1pX: return "log(1+x)";
    case AtomKind::XPow: return a_ == 1 ? "x" : "x^" + n(a_);
    case AtomKind::OneMinusXPow: return a_ == 1 ? "(1-x)" : "(1-x)^" + n(a_);
    case AtomKind::OnePlusXPow: return a_ == 1 ? "(1+x)" : "(1+x)^" + n(a_);
    case AtomKind::LiX: return "Li" + n(a_) + "(x)";
    case AtomKind::Li1mX: return "Li" + n(a_) + "(1-x)";
    case AtomKind::LiInv1pX: return "Li" + n(a_) + "(1/(1+x))";
  }
  return "?";
}

}  // namespace plint
