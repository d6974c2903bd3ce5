#pragma once

// Generic permutation-group algorithms over explicit generator lists:
// breadth-first orbits with Schreier vectors, transitivity tests and a
// deterministic Schreier-Sims stabilizer chain.

#include <cstddef>
#include <optional>
#include <vector>

#include "shufflegrp/perm.hpp"

namespace shufflegrp::engine {

inline constexpr std::size_t default_degree_cap = 200;
inline constexpr std::size_t default_pair_cap = 2000;

/// Sequence of generator indices, read left to right.
using GeneratorWord = std::vector<std::size_t>;

/// Orbit of a base point with its Schreier vector. Points are discovered in
/// BFS order, generators tried in list order.
class OrbitTable {
 public:
  Point base() const noexcept { return base_; }
  std::size_t size() const noexcept { return points_.size(); }
  /// Orbit points in discovery order; points()[0] is the base.
  const std::vector<Point>& points() const noexcept { return points_; }
  bool contains(Point x) const { return x < label_.size() && label_[x] >= 0; }
  /// Generator index that first reached x, or -1 for the base and for points
  /// outside the orbit.
  long generator_of(Point x) const { return label_.at(x) >= 0 ? label_[x] - 1 : -1; }
  Point predecessor_of(Point x) const { return pred_.at(x); }

  /// Word over the generators carrying the base point to x.
  GeneratorWord word_to(Point x) const;

 private:
  friend OrbitTable orbit(const std::vector<Permutation>&, Point);
  Point base_ = 0;
  std::vector<Point> points_;
  std::vector<long> label_;  // -1 unreached, 0 base, g+1 reached by generator g
  std::vector<Point> pred_;
};

OrbitTable orbit(const std::vector<Permutation>& gens, Point x);

/// Image of x under the generator word.
Point apply_word(const std::vector<Permutation>& gens, const GeneratorWord& w,
                 Point x);

/// Word over `gens` sending x to y, read off the Schreier vector of x's orbit
/// and checked by application before it is returned. Throws if y is not in
/// the orbit of x.
GeneratorWord bfs_witness(const std::vector<Permutation>& gens, Point x, Point y);

bool is_transitive(const std::vector<Permutation>& gens, std::size_t degree);

/// Size of the orbit of the ordered pair (a, b) in the action on ordered
/// pairs of distinct points. Memory is O(degree^2), bounded by `pair_cap`.
std::size_t pair_orbit_size(const std::vector<Permutation>& gens,
                            std::size_t degree, Point a = 0, Point b = 1,
                            std::size_t pair_cap = default_pair_cap);

/// Transitive on ordered pairs of distinct points: the orbit of (0, 1) has
/// size m(m-1).
bool is_2_transitive(const std::vector<Permutation>& gens, std::size_t degree,
                     std::size_t pair_cap = default_pair_cap);

/// Base and strong generating set with explicit transversals.
class StabilizerChain {
 public:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;  // strong generators fixing earlier base points
    std::vector<Point> orbit;             // orbit of base_point, discovery order
    std::vector<long> slot;               // point -> index into orbit / transversal, -1 if absent
    std::vector<Permutation> transversal;  // transversal[i] maps base_point to orbit[i]
    std::vector<Permutation> transversal_inv;
  };

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  /// Product of the basic orbit lengths.
  BigInt order() const;
  /// All distinct strong generators.
  std::vector<Permutation> strong_generators() const;

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // levels().size() when every level was passed
  };
  SiftResult sift(const Permutation& g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

 private:
  friend StabilizerChain schreier_sims(const std::vector<Permutation>&,
                                       std::size_t);
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}
  void add_level(Point base_point);
  void extend_orbit(std::size_t level);

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// Deterministic Schreier-Sims. New base points are the least point moved by
/// the generator that needs them.
StabilizerChain schreier_sims(const std::vector<Permutation>& gens,
                              std::size_t degree_cap = default_degree_cap);

bool contains(const StabilizerChain& chain, const Permutation& p);

}  // namespace shufflegrp::engine
