#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace plint {

/// The closed vocabulary of irreducible factors. Enumerator order is the
/// primary key of the canonical term ordering: constants sort before
/// x-dependent atoms.
enum class AtomKind : std::uint8_t {
  Zeta,          // zeta(k), k >= 2
  LogTwo,        // log 2
  LiAtHalf,      // Li_k(1/2), k >= 2
  Harmonic,      // H_n^(m), n >= 1, m >= 1
  EulerSum,      // S_{p,q} = sum H_n^(p) / n^q, p >= 1, q >= 2
  LogX,          // log x
  Log1mX,        // log(1 - x)
  Log1pX,        // log(1 + x)
  XPow,          // x^j, j != 0
  OneMinusXPow,  // (1 - x)^j, j != 0
  OnePlusXPow,   // (1 + x)^j, j != 0
  LiX,           // Li_k(x), k >= 0
  Li1mX,         // Li_k(1 - x), k >= 2
  LiInv1pX,      // Li_k(1 / (1 + x)), k >= 2
};

std::string_view kind_name(AtomKind kind) noexcept;
AtomKind kind_from_name(std::string_view name);
int arity(AtomKind kind) noexcept;

class Atom {
 public:
  static Atom zeta(int k);
  static Atom log_two();
  static Atom li_at_half(int k);
  static Atom harmonic(int n, int m);
  static Atom euler_sum(int p, int q);
  static Atom log_x();
  static Atom log_1mx();
  static Atom log_1px();
  static Atom x_pow(int j);
  static Atom one_minus_x_pow(int j);
  static Atom one_plus_x_pow(int j);
  static Atom li_x(int k);
  static Atom li_1mx(int k);
  static Atom li_inv_1px(int k);

  /// Validating constructor used by parsers; args.size() must match arity.
  static Atom make(AtomKind kind, const std::vector<int>& args);

  AtomKind kind() const noexcept { return kind_; }
  int arg0() const noexcept { return a_; }
  int arg1() const noexcept { return b_; }
  std::vector<int> args() const;

  bool is_constant() const noexcept { return kind_ <= AtomKind::EulerSum; }
  /// x^j, (1-x)^j and (1+x)^j carry their power in the argument, so such
  /// factors always have exponent 1 in canonical form.
  bool is_power_kind() const noexcept {
    return kind_ == AtomKind::XPow || kind_ == AtomKind::OneMinusXPow ||
           kind_ == AtomKind::OnePlusXPow;
  }
  bool involves_one_plus_x() const noexcept {
    return kind_ == AtomKind::Log1pX || kind_ == AtomKind::OnePlusXPow ||
           kind_ == AtomKind::LiInv1pX;
  }

  /// Compact rendering: z3, l2, Li2(h), H(3,1), S(2,2), log(x), x^-2, ...
  std::string to_text() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  Atom(AtomKind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

  AtomKind kind_ = AtomKind::LogTwo;
  int a_ = 0;
  int b_ = 0;
};

}  // namespace plint
