#include "shufflegrp/cardpos.hpp"

#include <limits>
#include <stdexcept>

namespace shufflegrp {

RadixParams::RadixParams(unsigned s, std::uint64_t t) : s_(s), t_(t) {
  if (s < 1) throw std::invalid_argument("radix exponent s must be at least 1");
  if (t < 2) throw std::invalid_argument("cofactor t must be at least 2");
  if (t % 3 == 0) throw std::invalid_argument("cofactor t must not be divisible by 3");
  pow3_.push_back(1);
  for (unsigned i = 1; i <= s + 1; ++i) {
    if (pow3_.back() > std::numeric_limits<std::uint64_t>::max() / 3)
      throw std::overflow_error("3^s overflows");
    pow3_.push_back(pow3_.back() * 3);
  }
  if (pow3_[s + 1] > std::numeric_limits<std::uint64_t>::max() / t)
    throw std::overflow_error("deck size 3n overflows");
  n_ = pow3_[s] * t;
}

RadixParams RadixParams::from_n(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  unsigned s = 0;
  std::uint64_t t = n;
  while (t % 3 == 0) {
    t /= 3;
    ++s;
  }
  if (s == 0)
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " is not divisible by 3");
  if (t == 1)
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " is a power of 3");
  return RadixParams(s, t);
}

TernaryCoord::TernaryCoord(RadixParams params, std::vector<Digit> digits,
                           std::uint64_t X)
    : params_(std::move(params)), digits_(std::move(digits)), X_(X) {
  if (digits_.size() != params_.s() + 1)
    throw std::invalid_argument("coordinate needs s+1 = " +
                                std::to_string(params_.s() + 1) + " digits");
  for (Digit d : digits_)
    if (d > 2) throw std::invalid_argument("ternary digit out of range");
  if (X_ >= params_.t())
    throw std::invalid_argument("residue X out of range");
}

namespace cardpos {

namespace {

void check_index(const RadixParams& p, unsigned i) {
  if (i > p.s())
    throw std::out_of_range("digit shift " + std::to_string(i) +
                            " exceeds s = " + std::to_string(p.s()));
}

void check_digit_perm(const Permutation& tau) {
  if (tau.degree() != 3)
    throw std::invalid_argument("digit permutation must have degree 3");
}

}  // namespace

RemQuot rem_quot(std::uint64_t m, std::uint64_t l) {
  if (l == 0) throw std::invalid_argument("rem_quot: divisor must be positive");
  return {m % l, m / l};
}

TernaryCoord encode(Position x, const RadixParams& params) {
  if (x >= params.degree())
    throw std::out_of_range("position " + std::to_string(x) +
                            " out of range for deck of " +
                            std::to_string(params.degree()));
  auto [X, q] = rem_quot(x, params.t());
  std::vector<Digit> digits(params.s() + 1);
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = static_cast<Digit>(q % 3);
    q /= 3;
  }
  return TernaryCoord(params, std::move(digits), X);
}

Position decode(const TernaryCoord& c) noexcept {
  std::uint64_t q = 0;
  for (Digit d : c.digits()) q = 3 * q + d;
  return q * c.params().t() + c.residue();
}

TernaryCoord sigma_digits(const TernaryCoord& c) {
  // (x_{s-1},...,x_0,0;0) + 3X + x_s, added as integers
  const auto& p = c.params();
  const unsigned s = p.s();
  std::uint64_t q = 0;
  for (unsigned k = 1; k <= s; ++k) q = 3 * q + c.digits()[k];
  q *= 3;
  return encode(q * p.t() + 3 * c.residue() + c.digit(s), p);
}

TernaryCoord sigma_inv_digits(const TernaryCoord& c) {
  const auto& p = c.params();
  auto [lead, X] = rem_quot(c.digit(0) * p.t() + c.residue(), 3);
  std::vector<Digit> digits;
  digits.reserve(p.s() + 1);
  digits.push_back(static_cast<Digit>(lead));
  digits.insert(digits.end(), c.digits().begin(), c.digits().end() - 1);
  return TernaryCoord(p, std::move(digits), X);
}

TernaryCoord rho_digits(const TernaryCoord& c, const Permutation& tau) {
  return conj_digit_flip(c, 0, tau);
}

TernaryCoord sigma_power_digits(const TernaryCoord& c, unsigned i) {
  const auto& p = c.params();
  check_index(p, i);
  const unsigned s = p.s();
  // (x_{s-i},...,x_0,0,...,0;0)
  std::uint64_t q = 0;
  for (unsigned k = i; k <= s; ++k) q = 3 * q + c.digits()[k];
  q *= p.pow3(i);
  std::uint64_t carry = p.pow3(i) * c.residue();
  for (unsigned j = 0; j < i; ++j) carry += p.pow3(i - 1 - j) * c.digit(s - j);
  return encode(q * p.t() + carry, p);
}

TernaryCoord conj_digit_flip(const TernaryCoord& c, unsigned i,
                             const Permutation& tau) {
  check_index(c.params(), i);
  check_digit_perm(tau);
  auto digits = c.digits();
  digits[i] = static_cast<Digit>(tau[digits[i]]);  // digits[i] is x_{s-i}
  return TernaryCoord(c.params(), std::move(digits), c.residue());
}

Digit bar(Digit d) {
  switch (d) {
    case 0: return 1;
    case 1: return 0;
    case 2: return 2;
    default: throw std::invalid_argument("bar: digit out of range");
  }
}

unsigned t_count(const TernaryCoord& c) noexcept {
  unsigned count = 0;
  for (Digit d : c.digits()) count += d == 2;
  return count;
}

TernaryCoord alpha_digits(const TernaryCoord& c, unsigned i) {
  check_index(c.params(), i);
  auto digits = c.digits();
  digits[i] = bar(digits[i]);
  return TernaryCoord(c.params(), std::move(digits), c.residue());
}

TernaryCoord beta_digits(const TernaryCoord& c) {
  const Position v = decode(c);
  switch ((c.digit(0) * c.params().t() + c.residue()) % 3) {
    case 0: return encode(v + 1, c.params());
    case 1: return encode(v - 1, c.params());
    default: return c;
  }
}

std::string to_string(const TernaryCoord& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.digits().size(); ++k) {
    if (k) out += ',';
    out += static_cast<char>('0' + c.digits()[k]);
  }
  out += ';';
  out += std::to_string(c.residue());
  out += ')';
  return out;
}

}  // namespace cardpos
}  // namespace shufflegrp
