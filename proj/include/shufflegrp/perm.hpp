#pragma once

// Dense permutations on [m] = {0, ..., m-1}.
//
// Products are read left to right: compose(p, q) applies p first, then q.
// That matches the exponent notation x^{pq} = (x^p)^q used throughout the
// shuffle-group code.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shufflegrp {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

enum class Parity { even, odd };
enum class PermStyle { images, cycles };

class Permutation {
 public:
  /// Validates that `images` is a bijection of [images.size()].
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  /// Bounds-checked image of x.
  Point apply(Point x) const;
  /// Unchecked image of x.
  Point operator[](Point x) const noexcept { return images_[x]; }

  bool is_identity() const noexcept;
  /// Least point moved, or degree() for the identity.
  Point first_moved() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct trusted_t {};
  Permutation(std::vector<Point> images, trusted_t) noexcept
      : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

/// Left-to-right product: the result maps x to q[p[x]].
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// e-fold product; negative e uses the inverse, e = 0 gives the identity.
Permutation power(const Permutation& p, long long e);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Parity parity(const Permutation& p);
inline Parity operator^(Parity a, Parity b) noexcept {
  return a == b ? Parity::even : Parity::odd;
}

/// Disjoint cycles of length >= 2, each starting at its least point, ordered
/// by that point.
std::vector<std::vector<Point>> cycles(const Permutation& p);
/// lcm of the cycle lengths.
BigInt order(const Permutation& p);

/// Whitespace-separated image list, e.g. "0 3 1 4 2 5".
Permutation parse_images(std::string_view text);
/// Disjoint cycles, e.g. "(0,1)(2,4,3)"; "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Dispatches on the first non-blank character: '(' selects cycle notation,
/// which needs `degree`.
Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree = std::nullopt);

std::string format(const Permutation& p, PermStyle style = PermStyle::images);

}  // namespace shufflegrp
