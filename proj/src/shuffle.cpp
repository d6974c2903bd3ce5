#include "shufflegrp/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace shufflegrp {

ShuffleSystem::ShuffleSystem(std::size_t k, std::size_t n) : k_(k), n_(n) {
  if (k < 2) throw std::invalid_argument("pile count k must be at least 2");
  if (n < 1) throw std::invalid_argument("pile size n must be at least 1");
}

namespace shuffle {

Permutation standard_shuffle(const ShuffleSystem& sys) {
  const std::size_t k = sys.k(), n = sys.n();
  std::vector<Point> images(sys.degree());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      images[i + j * n] = static_cast<Point>(k * i + j);
  return Permutation(std::move(images));
}

Permutation pile_permutation(const ShuffleSystem& sys, const Permutation& tau) {
  if (tau.degree() != sys.k())
    throw std::invalid_argument("pile permutation has degree " +
                                std::to_string(tau.degree()) + ", expected k = " +
                                std::to_string(sys.k()));
  const std::size_t k = sys.k(), n = sys.n();
  std::vector<Point> images(sys.degree());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i)
      images[i + j * n] = static_cast<Point>(i + tau[static_cast<Point>(j)] * n);
  return Permutation(std::move(images));
}

Permutation transposition(std::size_t k, Point a, Point b) {
  if (a >= k || b >= k || a == b)
    throw std::invalid_argument("invalid transposition (" + std::to_string(a) +
                                "," + std::to_string(b) + ") on " +
                                std::to_string(k) + " piles");
  std::vector<Point> images(k);
  std::iota(images.begin(), images.end(), Point{0});
  std::swap(images[a], images[b]);
  return Permutation(std::move(images));
}

std::vector<Permutation> perfect_shuffles(const ShuffleSystem& sys,
                                          std::size_t max_k) {
  if (sys.k() > max_k)
    throw std::length_error("perfect_shuffles: k = " + std::to_string(sys.k()) +
                            " exceeds enumeration cap " + std::to_string(max_k));
  const Permutation sigma = standard_shuffle(sys);
  std::vector<Point> tau(sys.k());
  std::iota(tau.begin(), tau.end(), Point{0});
  std::vector<Permutation> out;
  do {
    out.push_back(compose(pile_permutation(sys, Permutation(tau)), sigma));
  } while (std::next_permutation(tau.begin(), tau.end()));
  return out;
}

std::vector<Permutation> group_generators(const ShuffleSystem& sys) {
  std::vector<Permutation> gens{standard_shuffle(sys)};
  for (Point j = 0; j + 1 < sys.k(); ++j)
    gens.push_back(pile_permutation(sys, transposition(sys.k(), j, j + 1)));
  return gens;
}

bool parity_in_alternating(std::size_t k, std::size_t n) {
  return (n % 4 == 2 && (k % 4 == 0 || k % 4 == 1)) || n % 4 == 0;
}

}  // namespace shuffle
}  // namespace shufflegrp
