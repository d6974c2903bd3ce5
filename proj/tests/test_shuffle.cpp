#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shufflegrp/cardpos.hpp"
#include "shufflegrp/engine.hpp"
#include "shufflegrp/shuffle.hpp"

using namespace shufflegrp;

TEST_SUITE("shuffle") {

TEST_CASE("standard shuffle") {
  const ShuffleSystem sys(3, 2);
  const auto s = shuffle::standard_shuffle(sys);
  CHECK(oracle::to_images(s) == oracle::Images{0, 3, 1, 4, 2, 5});
  CHECK(s.apply(1) == 3);
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t n = 1; n <= 10; ++n) {
      const ShuffleSystem d(k, n);
      const auto p = shuffle::standard_shuffle(d);
      REQUIRE(p[0] == 0);
      REQUIRE(p[k * n - 1] == k * n - 1);
      for (Point x = 0; x < k * n; ++x) REQUIRE(p[x] == oracle::sigma(k, n, x));
    }
  CHECK_THROWS_AS(ShuffleSystem(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(ShuffleSystem(3, 0), std::invalid_argument);
}

TEST_CASE("pile permutations") {
  const ShuffleSystem sys(3, 2);
  CHECK(shuffle::pile_permutation(sys, Permutation::identity(3)).is_identity());
  CHECK(oracle::to_images(shuffle::pile_permutation(sys, shuffle::transposition(3, 0, 1))) ==
        oracle::Images{2, 3, 0, 1, 4, 5});
  CHECK_THROWS(shuffle::pile_permutation(sys, Permutation::identity(4)));
  CHECK_THROWS(shuffle::transposition(3, 0, 3));

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + rng() % 5, n = 1 + rng() % 6;
    const ShuffleSystem d(k, n);
    const auto tau = oracle::random_perm(rng, k), pi = oracle::random_perm(rng, k);
    const auto rt = shuffle::pile_permutation(d, tau);
    for (Point x = 0; x < k * n; ++x) REQUIRE(rt[x] % n == x % n);
    REQUIRE(compose(rt, shuffle::pile_permutation(d, pi)) ==
            shuffle::pile_permutation(d, compose(tau, pi)));
  }
}

TEST_CASE("perfect shuffles") {
  const auto two = shuffle::perfect_shuffles(ShuffleSystem(2, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[0].degree() == 2);
  CHECK(two[1].degree() == 2);
  for (std::size_t k = 2; k <= 5; ++k) {
    const ShuffleSystem d(k, 3);
    const auto all = shuffle::perfect_shuffles(d);
    REQUIRE(all.size() == oracle::factorial(k));
    CHECK(all.front() == shuffle::standard_shuffle(d));
  }
  CHECK_THROWS_AS(shuffle::perfect_shuffles(ShuffleSystem(9, 1)), std::length_error);
}

TEST_CASE("generators") {
  CHECK(shuffle::group_generators(ShuffleSystem(3, 2)).size() == 3);
  CHECK(shuffle::group_generators(ShuffleSystem(2, 2)).size() == 2);
  // adjacent transpositions generate the same group as all perfect shuffles
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::size_t n = 1; n <= 3; ++n) {
      const ShuffleSystem d(k, n);
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(oracle::closure_order(shuffle::group_generators(d)) ==
              oracle::closure_order(shuffle::perfect_shuffles(d)));
    }
}

TEST_CASE("parity criterion") {
  CHECK_FALSE(shuffle::parity_in_alternating(3, 6));
  CHECK(shuffle::parity_in_alternating(5, 2));
  CHECK(shuffle::parity_in_alternating(3, 4));
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t n = 1; n <= 12; ++n) {
      bool all_even = true;
      for (const auto& g : shuffle::group_generators(ShuffleSystem(k, n)))
        all_even &= !oracle::is_odd_by_inversions(oracle::to_images(g));
      CAPTURE(k);
      CAPTURE(n);
      REQUIRE(shuffle::parity_in_alternating(k, n) == all_even);
    }
}

TEST_CASE("shuffle groups are transitive") {
  for (std::size_t k = 2; k <= 6; ++k)
    for (std::size_t n = 1; n <= 10; ++n) {
      const ShuffleSystem d(k, n);
      REQUIRE(engine::orbit(shuffle::group_generators(d), 0).size() == k * n);
    }
}

}  // TEST_SUITE
