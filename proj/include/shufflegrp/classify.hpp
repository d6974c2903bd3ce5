#pragma once

// Predicted isomorphism class and order of the shuffle group G_{k,kn} for
// k >= 3, checked against a Schreier-Sims order computation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "shufflegrp/engine.hpp"
#include "shufflegrp/perm.hpp"

namespace shufflegrp::classify {

struct GroupClass {
  enum class Kind { wreath_sym_cyclic, affine_odd2, alternating, symmetric };
  Kind kind;
  /// n = k^e for the wreath case, n = 2^(2e-1) for the affine case.
  unsigned e = 0;

  friend bool operator==(const GroupClass&, const GroupClass&) = default;
};

/// "WreathSymCyclic", "AffineOdd2", "Alternating" or "Symmetric".
std::string kind_name(GroupClass::Kind kind);
/// e.g. "WreathSymCyclic e=2" or "Symmetric".
std::string describe(const GroupClass& c);

/// Decision order: n a power of k; k = 4 with n = 2^(2e-1); every generator
/// even; otherwise symmetric. Rejects k < 3.
GroupClass predict(std::size_t k, std::size_t n);

/// Sym(k) wr C_(e+1): (k!)^(e+1) (e+1). AGL(2e+1, 2): 2^(2e+1) |GL(2e+1, 2)|.
/// Alt and Sym of degree kn: (kn)!/2 and (kn)!.
BigInt predicted_order(const GroupClass& c, std::size_t k, std::size_t n);

BigInt factorial(std::size_t m);

struct Caps {
  std::size_t degree = engine::default_degree_cap;
};

struct VerifyReport {
  std::size_t k;
  std::size_t n;
  GroupClass predicted_class;
  BigInt predicted_order;
  BigInt computed_order;
  bool match;
  double ms;
};

VerifyReport verify(std::size_t k, std::size_t n, const Caps& caps = {});

/// Every (k, n) with kmin <= k <= kmax, n >= 1 and kn <= max_degree, in
/// increasing k then n, computed across `workers` threads. kmin is raised to 3.
std::vector<VerifyReport> sweep(std::size_t max_degree, const Caps& caps = {},
                                unsigned workers = 1, std::size_t kmin = 3,
                                std::size_t kmax = SIZE_MAX);

/// {"k":..,"n":..,"predicted_class":..,"predicted_order":"..",
///  "computed_order":"..","match":..,"ms":..}
nlohmann::json to_json(const VerifyReport& r);

}  // namespace shufflegrp::classify
