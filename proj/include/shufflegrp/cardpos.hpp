#pragma once

// Ternary card coordinates for three-pile decks of size 3n with n = 3^s * t,
// s >= 1, t >= 2 and 3 not dividing t.
//
// A position x in [3n] is written x = (3^s x_s + ... + 3 x_1 + x_0) * t + X
// with digits x_i in {0,1,2} and residue X = x mod t, and displayed as the
// tuple (x_s,...,x_1,x_0;X). Digits are stored most significant first, so
// digits()[0] is x_s; digit(i) uses the subscript i of x_i.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shufflegrp/perm.hpp"

namespace shufflegrp {

using Position = std::uint64_t;
using Digit = std::uint8_t;

class RadixParams {
 public:
  RadixParams(unsigned s, std::uint64_t t);
  /// Splits n into its maximal power of three and the cofactor. Rejects n
  /// with s = 0 (3 does not divide n) or t = 1 (n a power of 3).
  static RadixParams from_n(std::uint64_t n);

  unsigned s() const noexcept { return s_; }
  std::uint64_t t() const noexcept { return t_; }
  std::uint64_t n() const noexcept { return n_; }
  Position degree() const noexcept { return 3 * n_; }
  /// 3^i for 0 <= i <= s + 1.
  std::uint64_t pow3(unsigned i) const noexcept { return pow3_[i]; }

  friend bool operator==(const RadixParams& a, const RadixParams& b) noexcept {
    return a.s_ == b.s_ && a.t_ == b.t_;
  }

 private:
  unsigned s_;
  std::uint64_t t_;
  std::uint64_t n_;
  std::vector<std::uint64_t> pow3_;
};

class TernaryCoord {
 public:
  /// digits = (x_s, ..., x_0), most significant first.
  TernaryCoord(RadixParams params, std::vector<Digit> digits, std::uint64_t X);

  const RadixParams& params() const noexcept { return params_; }
  const std::vector<Digit>& digits() const noexcept { return digits_; }
  /// x_i
  Digit digit(unsigned i) const { return digits_.at(params_.s() - i); }
  std::uint64_t residue() const noexcept { return X_; }

  friend bool operator==(const TernaryCoord& a, const TernaryCoord& b) noexcept {
    return a.params_ == b.params_ && a.digits_ == b.digits_ && a.X_ == b.X_;
  }

 private:
  RadixParams params_;
  std::vector<Digit> digits_;
  std::uint64_t X_;
};

namespace cardpos {

struct RemQuot {
  std::uint64_t rem;
  std::uint64_t quot;
  friend bool operator==(const RemQuot&, const RemQuot&) = default;
};

/// m = l * quot + rem with 0 <= rem < l.
RemQuot rem_quot(std::uint64_t m, std::uint64_t l);

TernaryCoord encode(Position x, const RadixParams& params);
Position decode(const TernaryCoord& c) noexcept;

TernaryCoord sigma_digits(const TernaryCoord& c);
TernaryCoord sigma_inv_digits(const TernaryCoord& c);
/// Maps the leading digit x_s through tau (degree 3).
TernaryCoord rho_digits(const TernaryCoord& c, const Permutation& tau);
/// Image under sigma^i, 0 <= i <= s, from the closed form.
TernaryCoord sigma_power_digits(const TernaryCoord& c, unsigned i);
/// Image under sigma^i rho_tau sigma^-i: maps digit x_{s-i} through tau.
TernaryCoord conj_digit_flip(const TernaryCoord& c, unsigned i,
                             const Permutation& tau);

/// 0 <-> 1, 2 fixed.
Digit bar(Digit d);
/// Number of digits equal to 2.
unsigned t_count(const TernaryCoord& c) noexcept;

/// alpha_i = sigma^i rho_(01) sigma^-i applies bar to x_{s-i}.
TernaryCoord alpha_digits(const TernaryCoord& c, unsigned i);
/// beta = sigma^-1 rho_(01) sigma: +1, -1 or fixed according as
/// (x_0 t + X) mod 3 is 0, 1 or 2.
TernaryCoord beta_digits(const TernaryCoord& c);

/// "(x_s,...,x_0;X)"
std::string to_string(const TernaryCoord& c);

}  // namespace cardpos
}  // namespace shufflegrp
