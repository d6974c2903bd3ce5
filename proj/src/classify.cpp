#include "shufflegrp/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <utility>

#include "shufflegrp/shuffle.hpp"

namespace shufflegrp::classify {

namespace {

// Exponent e with n = base^e, found by exact division.
std::optional<unsigned> exact_log(std::size_t n, std::size_t base) {
  unsigned e = 0;
  while (n % base == 0) {
    n /= base;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

}  // namespace

std::string kind_name(GroupClass::Kind kind) {
  switch (kind) {
    case GroupClass::Kind::wreath_sym_cyclic: return "WreathSymCyclic";
    case GroupClass::Kind::affine_odd2: return "AffineOdd2";
    case GroupClass::Kind::alternating: return "Alternating";
    case GroupClass::Kind::symmetric: return "Symmetric";
  }
  return "?";
}

std::string describe(const GroupClass& c) {
  std::string out = kind_name(c.kind);
  if (c.kind == GroupClass::Kind::wreath_sym_cyclic ||
      c.kind == GroupClass::Kind::affine_odd2)
    out += " e=" + std::to_string(c.e);
  return out;
}

GroupClass predict(std::size_t k, std::size_t n) {
  if (k < 3)
    throw std::invalid_argument("k=" + std::to_string(k) +
                                " out of scope: classification covers k >= 3");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (auto e = exact_log(n, k)) return {GroupClass::Kind::wreath_sym_cyclic, *e};
  if (k == 4) {
    // n = 2^(2e-1): an odd power of two
    if (auto f = exact_log(n, 2); f && *f % 2 == 1)
      return {GroupClass::Kind::affine_odd2, (*f + 1) / 2};
  }
  if (shuffle::parity_in_alternating(k, n)) return {GroupClass::Kind::alternating, 0};
  return {GroupClass::Kind::symmetric, 0};
}

BigInt factorial(std::size_t m) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= m; ++i) r *= i;
  return r;
}

BigInt predicted_order(const GroupClass& c, std::size_t k, std::size_t n) {
  switch (c.kind) {
    case GroupClass::Kind::wreath_sym_cyclic: {
      BigInt r = 1;
      const BigInt kf = factorial(k);
      for (unsigned i = 0; i <= c.e; ++i) r *= kf;
      return r * (c.e + 1);
    }
    case GroupClass::Kind::affine_odd2: {
      const unsigned d = 2 * c.e + 1;
      const BigInt q = BigInt(1) << d;
      BigInt r = q;  // translations
      for (unsigned i = 0; i < d; ++i) r *= q - (BigInt(1) << i);
      return r;
    }
    case GroupClass::Kind::alternating: return factorial(k * n) / 2;
    case GroupClass::Kind::symmetric: return factorial(k * n);
  }
  return 0;
}

VerifyReport verify(std::size_t k, std::size_t n, const Caps& caps) {
  const GroupClass cls = predict(k, n);
  const auto start = std::chrono::steady_clock::now();
  const ShuffleSystem sys(k, n);
  const auto chain = engine::schreier_sims(shuffle::group_generators(sys), caps.degree);
  const BigInt computed = chain.order();
  const auto stop = std::chrono::steady_clock::now();
  const BigInt predicted = predicted_order(cls, k, n);
  return {k,
          n,
          cls,
          predicted,
          computed,
          predicted == computed,
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

std::vector<VerifyReport> sweep(std::size_t max_degree, const Caps& caps,
                                unsigned workers, std::size_t kmin,
                                std::size_t kmax) {
  std::vector<std::pair<std::size_t, std::size_t>> cases;
  for (std::size_t k = std::max<std::size_t>(kmin, 3); k <= std::min(kmax, max_degree); ++k)
    for (std::size_t n = 1; k * n <= max_degree; ++n) cases.emplace_back(k, n);

  std::vector<std::optional<VerifyReport>> slots(cases.size());
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      try {
        slots[i] = verify(cases[i].first, cases[i].second, caps);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  std::vector<VerifyReport> out;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

nlohmann::json to_json(const VerifyReport& r) {
  return {{"k", r.k},
          {"n", r.n},
          {"predicted_class", describe(r.predicted_class)},
          {"predicted_order", r.predicted_order.str()},
          {"computed_order", r.computed_order.str()},
          {"match", r.match},
          {"ms", r.ms}};
}

}  // namespace shufflegrp::classify
