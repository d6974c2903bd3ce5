#include "doctest.h"
#include "oracles.hpp"
#include "shufflegrp/classify.hpp"
#include "shufflegrp/shuffle.hpp"

using namespace shufflegrp;
using namespace shufflegrp::classify;
using K = GroupClass::Kind;

namespace {

// |GL(d,2)| by the product formula.
BigInt gl2(unsigned d) {
  BigInt out = 1, two_d = BigInt(1) << d;
  for (unsigned i = 0; i < d; ++i) out *= two_d - (BigInt(1) << i);
  return out;
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("predictions") {
  CHECK(predict(3, 9).kind == K::wreath_sym_cyclic);
  CHECK(predict(3, 9).e == 2);
  CHECK(predict(4, 8).kind == K::affine_odd2);
  CHECK(predict(4, 8).e == 2);
  CHECK(predict(3, 6).kind == K::symmetric);
  CHECK(predict(5, 2).kind == K::alternating);
  CHECK(predict(7, 1).kind == K::wreath_sym_cyclic);
  CHECK(predict(7, 1).e == 0);
  // 4 = 4^1 takes the wreath branch before the affine test
  CHECK(predict(4, 4).kind == K::wreath_sym_cyclic);
  CHECK(describe(predict(3, 9)) == "WreathSymCyclic e=2");
  CHECK(describe(predict(3, 6)) == "Symmetric");
  CHECK_THROWS_WITH_AS(predict(2, 4), doctest::Contains("k=2 out of scope"),
                       std::invalid_argument);
  CHECK_THROWS(predict(3, 0));
}

TEST_CASE("predicted orders") {
  CHECK(predicted_order(predict(3, 3), 3, 3) == 72);
  CHECK(predicted_order(predict(3, 9), 3, 9) == 648);
  CHECK(predicted_order(predict(4, 2), 4, 2) == 1344);
  CHECK(predicted_order(predict(4, 8), 4, 8) == BigInt(32) * gl2(5));
  CHECK(predicted_order(predict(4, 8), 4, 8) == 319979520);
  CHECK(predicted_order(predict(3, 6), 3, 6) == BigInt(oracle::factorial(18)));
  CHECK(predicted_order(predict(5, 2), 5, 2) == oracle::factorial(10) / 2);
  CHECK(factorial(20) == BigInt(oracle::factorial(20)));
}

TEST_CASE("branches are exhaustive and parity-consistent") {
  for (std::size_t k = 3; k <= 12; ++k)
    for (std::size_t n = 1; n <= 40; ++n) {
      const auto c = predict(k, n);
      const bool alt = shuffle::parity_in_alternating(k, n);
      CAPTURE(k);
      CAPTURE(n);
      if (c.kind == K::alternating) REQUIRE(alt);
      if (c.kind == K::symmetric) REQUIRE_FALSE(alt);
    }
}

TEST_CASE("computed orders match up to degree 40") {
  const auto reports = sweep(40, Caps{40}, 2);
  std::size_t expected = 0;
  for (std::size_t k = 3; k <= 40; ++k) expected += 40 / k;
  CHECK(reports.size() == expected);
  for (const auto& r : reports) {
    CAPTURE(r.k);
    CAPTURE(r.n);
    CHECK(r.match);
  }
  CHECK(verify(3, 3).computed_order == 72);
  CHECK(verify(3, 2).computed_order == 720);
}

TEST_CASE("sweeps are ordered and independent of workers") {
  const auto a = sweep(20, {}, 1), b = sweep(20, {}, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].k == b[i].k);
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].computed_order == b[i].computed_order);
  }
  CHECK_THROWS(verify(5, 10, Caps{20}));
}

TEST_CASE("json report") {
  auto j = to_json(verify(4, 2));
  CHECK(j["predicted_order"] == "1344");
  CHECK(j["computed_order"] == "1344");
  CHECK(j["match"] == true);
  CHECK(j["predicted_class"] == "AffineOdd2 e=1");
  j.erase("ms");
  CHECK(j.dump() ==
        R"({"computed_order":"1344","k":4,"match":true,"n":2,"predicted_class":"AffineOdd2 e=1","predicted_order":"1344"})");
}

}  // TEST_SUITE
