#include <random>

#include "digit_agreement.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "shufflegrp/cardpos.hpp"

using namespace shufflegrp;
using namespace shufflegrp::cardpos;

namespace {

TernaryCoord coord(const RadixParams& p, std::vector<Digit> digits, std::uint64_t X) {
  return TernaryCoord(p, std::move(digits), X);
}

}  // namespace

TEST_SUITE("cardpos") {

TEST_CASE("radix parameters") {
  const auto p = RadixParams::from_n(18);
  CHECK(p.s() == 2);
  CHECK(p.t() == 2);
  CHECK(p.degree() == 54);
  CHECK(RadixParams::from_n(15).t() == 5);
  CHECK_THROWS_WITH_AS(RadixParams::from_n(9), doctest::Contains("power of 3"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(RadixParams::from_n(8), doctest::Contains("not divisible by 3"),
                       std::invalid_argument);
  CHECK_THROWS(RadixParams(1, 3));
  CHECK_THROWS(RadixParams(0, 2));
  CHECK_THROWS(RadixParams(1, 1));
}

TEST_CASE("rem_quot") {
  CHECK(rem_quot(7, 3) == RemQuot{1, 2});
  CHECK(rem_quot(0, 5) == RemQuot{0, 0});
  CHECK(rem_quot(3 * 5 - 1, 5) == RemQuot{4, 2});
  CHECK_THROWS(rem_quot(4, 0));
}

TEST_CASE("encode and decode") {
  const RadixParams p(1, 2);
  CHECK(encode(5, p) == coord(p, {0, 2}, 1));
  CHECK(encode(0, p) == coord(p, {0, 0}, 0));
  CHECK(encode(3 * p.n() - 1, p) == coord(p, {2, 2}, 1));
  CHECK(to_string(encode(5, p)) == "(0,2;1)");
  CHECK_THROWS(encode(p.degree(), p));
  CHECK_THROWS(TernaryCoord(p, {0, 3}, 0));
  CHECK_THROWS(TernaryCoord(p, {0, 0}, 2));
  CHECK_THROWS(TernaryCoord(p, {0}, 0));

  for (auto [s, t] : {std::pair{1u, 2ull}, {2, 2}, {1, 4}, {2, 5}, {3, 2}, {2, 7}}) {
    const RadixParams q(s, t);
    for (Position x = 0; x < q.degree(); ++x) {
      const auto c = encode(x, q);
      // independent digit expansion: x = (sum 3^i x_i) t + X
      std::uint64_t high = x / t;
      for (unsigned i = 0; i <= s; ++i, high /= 3) REQUIRE(c.digit(i) == high % 3);
      REQUIRE(c.residue() == x % t);
      REQUIRE(decode(c) == x);
    }
  }
}

TEST_CASE("digit operations, worked cases") {
  const RadixParams p(1, 2);
  CHECK(sigma_digits(coord(p, {0, 2}, 1)) == coord(p, {2, 1}, 1));
  CHECK(decode(coord(p, {2, 1}, 1)) == 15);
  CHECK(sigma_digits(encode(0, p)) == encode(0, p));
  CHECK(sigma_digits(encode(17, p)) == encode(17, p));
  CHECK(sigma_inv_digits(coord(p, {0, 1}, 1)) == coord(p, {0, 0}, 1));
  CHECK(sigma_inv_digits(encode(0, p)) == encode(0, p));

  const auto r01 = shuffle::transposition(3, 0, 1);
  CHECK(rho_digits(coord(p, {0, 2}, 1), r01) == coord(p, {1, 2}, 1));
  CHECK(decode(coord(p, {1, 2}, 1)) == 11);
  CHECK(rho_digits(rho_digits(encode(7, p), r01), r01) == encode(7, p));
  CHECK(rho_digits(encode(7, p), Permutation::identity(3)) == encode(7, p));
  CHECK_THROWS(rho_digits(encode(7, p), Permutation::identity(2)));

  CHECK(sigma_power_digits(encode(7, p), 0) == encode(7, p));
  CHECK_THROWS(sigma_power_digits(encode(7, p), 2));

  const RadixParams q(2, 2);
  const auto c = coord(q, {0, 2, 1}, 0);
  CHECK(conj_digit_flip(c, 1, r01) == c);
  CHECK(conj_digit_flip(c, 0, Permutation::identity(3)) == c);
  CHECK(conj_digit_flip(c, 2, r01) == coord(q, {0, 2, 0}, 0));

  CHECK(bar(0) == 1);
  CHECK(bar(1) == 0);
  CHECK(bar(2) == 2);
  CHECK(t_count(encode(0, p)) == 0);
  CHECK(t_count(encode(17, p)) == 2);
  CHECK(t_count(encode(4, p)) == 1);
  CHECK(encode(4, p) == coord(p, {0, 2}, 0));

  CHECK(beta_digits(encode(3, p)) == encode(4, p));
  CHECK(beta_digits(encode(4, p)) == encode(3, p));
  CHECK(beta_digits(encode(5, p)) == encode(5, p));
}

TEST_CASE("sigma power is iterated sigma") {
  std::mt19937_64 rng(31);
  for (auto [s, t] : {std::pair{1u, 2ull}, {3, 2}, {2, 5}, {4, 7}}) {
    const RadixParams p(s, t);
    for (int trial = 0; trial < 300; ++trial) {
      const auto c = encode(rng() % p.degree(), p);
      auto iter = c;
      for (unsigned i = 0; i <= s; ++i) {
        REQUIRE(sigma_power_digits(c, i) == iter);
        iter = sigma_digits(iter);
      }
      REQUIRE(sigma_power_digits(c, 1) == sigma_digits(c));
      REQUIRE(sigma_inv_digits(sigma_digits(c)) == c);
    }
  }
}

TEST_CASE("alpha keeps the positions of the twos") {
  std::mt19937_64 rng(32);
  const RadixParams p(3, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = encode(rng() % p.degree(), p);
    for (unsigned i = 0; i <= p.s(); ++i) {
      const auto a = alpha_digits(c, i);
      for (unsigned j = 0; j <= p.s(); ++j) REQUIRE((a.digit(j) == 2) == (c.digit(j) == 2));
      REQUIRE(a.residue() == c.residue());
    }
  }
}

TEST_CASE("digit formulas agree with the shuffle permutations") {
  std::uint64_t seed = 300;
  for (auto [s, t] : {std::pair{1u, 2ull}, {2, 2}, {1, 4}, {2, 5}, {3, 2}}) {
    const auto tally = agreement::digit_ops(s, t, 200, seed++);
    CAPTURE(s);
    CAPTURE(t);
    for (const auto& m : tally.mismatches) FAIL_CHECK(m);
    CHECK(tally.checked > 0);
  }
}

TEST_CASE("beta moves by the residue of x mod 3") {
  for (auto [s, t] : {std::pair{1u, 2ull}, {2, 4}, {1, 5}, {3, 7}}) {
    const RadixParams p(s, t);
    for (Position x = 0; x < p.degree(); ++x) {
      const auto y = decode(beta_digits(encode(x, p)));
      const long long delta = static_cast<long long>(y) - static_cast<long long>(x);
      REQUIRE(delta == (x % 3 == 0 ? 1 : x % 3 == 1 ? -1 : 0));
    }
  }
}

}  // TEST_SUITE
