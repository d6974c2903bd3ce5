#pragma once

// Perfect-shuffle generators on a deck of k piles of n cards.
//
// Position i + j*n is the i-th card (from the top) of pile j. The standard
// shuffle sends i + j*n to k*i + j; the pile permutation rho_tau sends it to
// i + tau(j)*n.

#include <cstddef>
#include <vector>

#include "shufflegrp/perm.hpp"

namespace shufflegrp {

class ShuffleSystem {
 public:
  ShuffleSystem(std::size_t k, std::size_t n);

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return k_ * n_; }

  friend bool operator==(const ShuffleSystem&, const ShuffleSystem&) = default;

 private:
  std::size_t k_;
  std::size_t n_;
};

namespace shuffle {

inline constexpr std::size_t default_enumeration_cap = 8;

Permutation standard_shuffle(const ShuffleSystem& sys);
Permutation pile_permutation(const ShuffleSystem& sys, const Permutation& tau);
/// The transposition (a b) on [k].
Permutation transposition(std::size_t k, Point a, Point b);

/// All k! products rho_tau * sigma, tau in lexicographic order of image lists.
std::vector<Permutation> perfect_shuffles(
    const ShuffleSystem& sys, std::size_t max_k = default_enumeration_cap);

/// sigma followed by rho_(j,j+1) for j = 0..k-2. Generates the same group as
/// the perfect shuffles since tau -> rho_tau is a homomorphism and adjacent
/// transpositions generate Sym([k]).
std::vector<Permutation> group_generators(const ShuffleSystem& sys);

/// True iff every shuffle generator is even.
bool parity_in_alternating(std::size_t k, std::size_t n);

}  // namespace shuffle
}  // namespace shufflegrp
