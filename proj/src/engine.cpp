#include "shufflegrp/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "shufflegrp/errors.hpp"

namespace shufflegrp::engine {

namespace {

std::size_t common_degree(const std::vector<Permutation>& gens,
                          std::optional<std::size_t> expected = std::nullopt) {
  if (gens.empty()) {
    if (!expected) throw std::invalid_argument("empty generator list");
    return *expected;
  }
  const std::size_t m = expected.value_or(gens.front().degree());
  for (const auto& g : gens)
    if (g.degree() != m)
      throw std::invalid_argument("generator degree mismatch (" +
                                  std::to_string(g.degree()) + " vs " +
                                  std::to_string(m) + ")");
  return m;
}

void check_point(Point x, std::size_t m) {
  if (x >= m)
    throw std::out_of_range("point " + std::to_string(x) +
                            " out of range for degree " + std::to_string(m));
}

}  // namespace

GeneratorWord OrbitTable::word_to(Point x) const {
  if (!contains(x))
    throw std::invalid_argument("point " + std::to_string(x) +
                                " is not in the orbit of " + std::to_string(base_));
  GeneratorWord w;
  for (Point p = x; p != base_; p = pred_[p])
    w.push_back(static_cast<std::size_t>(label_[p] - 1));
  std::reverse(w.begin(), w.end());
  return w;
}

OrbitTable orbit(const std::vector<Permutation>& gens, Point x) {
  const std::size_t m = gens.empty() ? std::size_t{x} + 1 : common_degree(gens);
  check_point(x, m);
  OrbitTable t;
  t.base_ = x;
  t.label_.assign(m, -1);
  t.pred_.assign(m, 0);
  t.label_[x] = 0;
  t.pred_[x] = x;
  t.points_.push_back(x);
  for (std::size_t head = 0; head < t.points_.size(); ++head) {
    const Point p = t.points_[head];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Point q = gens[g][p];
      if (t.label_[q] >= 0) continue;
      t.label_[q] = static_cast<long>(g) + 1;
      t.pred_[q] = p;
      t.points_.push_back(q);
    }
  }
  return t;
}

Point apply_word(const std::vector<Permutation>& gens, const GeneratorWord& w,
                 Point x) {
  for (std::size_t g : w) x = gens.at(g).apply(x);
  return x;
}

GeneratorWord bfs_witness(const std::vector<Permutation>& gens, Point x, Point y) {
  const OrbitTable t = orbit(gens, x);
  if (!t.contains(y))
    throw std::invalid_argument("point " + std::to_string(y) +
                                " is unreachable from " + std::to_string(x));
  GeneratorWord w = t.word_to(y);
  if (apply_word(gens, w, x) != y)
    throw ShapeError("bfs_witness: Schreier vector word does not reach target");
  return w;
}

bool is_transitive(const std::vector<Permutation>& gens, std::size_t degree) {
  common_degree(gens, degree);
  if (degree <= 1) return true;
  return orbit(gens, 0).size() == degree;
}

std::size_t pair_orbit_size(const std::vector<Permutation>& gens,
                            std::size_t degree, Point a, Point b,
                            std::size_t pair_cap) {
  common_degree(gens, degree);
  if (degree < 2) throw std::invalid_argument("pair orbit needs degree >= 2");
  if (degree > pair_cap)
    throw CapExceeded("pair orbit: degree " + std::to_string(degree) +
                      " exceeds cap " + std::to_string(pair_cap));
  check_point(a, degree);
  check_point(b, degree);
  if (a == b) throw std::invalid_argument("pair orbit needs distinct points");

  const std::size_t m = degree;
  std::vector<bool> seen(m * m, false);
  std::vector<std::size_t> queue;
  queue.reserve(m);
  const std::size_t start = std::size_t{a} * m + b;
  seen[start] = true;
  queue.push_back(start);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t code = queue[head];
    const auto p = static_cast<Point>(code / m), q = static_cast<Point>(code % m);
    for (const auto& g : gens) {
      const std::size_t next = std::size_t{g[p]} * m + g[q];
      if (seen[next]) continue;
      seen[next] = true;
      queue.push_back(next);
    }
  }
  return queue.size();
}

bool is_2_transitive(const std::vector<Permutation>& gens, std::size_t degree,
                     std::size_t pair_cap) {
  if (degree < 2) return true;
  return pair_orbit_size(gens, degree, 0, 1, pair_cap) == degree * (degree - 1);
}

// ---------------------------------------------------------------------------
// Stabilizer chain

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto& lv : levels_) out.push_back(lv.base_point);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& lv : levels_) result *= lv.orbit.size();
  return result;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::set<Permutation> seen;
  std::vector<Permutation> out;
  for (const auto& lv : levels_)
    for (const auto& g : lv.generators)
      if (seen.insert(g).second) out.push_back(g);
  return out;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g,
                                                  std::size_t from_level) const {
  if (g.degree() != degree_)
    throw std::invalid_argument("sift: degree mismatch");
  Permutation h = g;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const long slot = lv.slot[h[lv.base_point]];
    if (slot < 0) return {std::move(h), l};
    h = compose(h, lv.transversal_inv[static_cast<std::size_t>(slot)]);
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

void StabilizerChain::add_level(Point base_point) {
  Level lv;
  lv.base_point = base_point;
  lv.orbit.push_back(base_point);
  lv.slot.assign(degree_, -1);
  lv.slot[base_point] = 0;
  lv.transversal.push_back(Permutation::identity(degree_));
  lv.transversal_inv.push_back(Permutation::identity(degree_));
  levels_.push_back(std::move(lv));
}

void StabilizerChain::extend_orbit(std::size_t level) {
  Level& lv = levels_[level];
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const Point beta = lv.orbit[head];
    for (const auto& g : lv.generators) {
      const Point gamma = g[beta];
      if (lv.slot[gamma] >= 0) continue;
      lv.slot[gamma] = static_cast<long>(lv.orbit.size());
      lv.orbit.push_back(gamma);
      Permutation u = compose(lv.transversal[head], g);
      lv.transversal_inv.push_back(inverse(u));
      lv.transversal.push_back(std::move(u));
    }
  }
}

StabilizerChain schreier_sims(const std::vector<Permutation>& gens,
                              std::size_t degree_cap) {
  const std::size_t m = common_degree(gens);
  if (m > degree_cap)
    throw CapExceeded("schreier_sims: degree " + std::to_string(m) +
                      " exceeds cap " + std::to_string(degree_cap));
  StabilizerChain chain(m);
  auto& levels = chain.levels_;

  // Initial base: every non-identity generator moves some base point.
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    bool fixes_base = true;
    for (const auto& lv : levels)
      if (g[lv.base_point] != lv.base_point) {
        fixes_base = false;
        break;
      }
    if (fixes_base) chain.add_level(g.first_moved());
  }
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    for (auto& lv : levels) {
      lv.generators.push_back(g);
      if (g[lv.base_point] != lv.base_point) break;
    }
  }
  for (std::size_t l = 0; l < levels.size(); ++l) chain.extend_orbit(l);

  // checked[l][orbit index][generator index]: that Schreier generator is
  // known to lie in the group generated by the deeper levels. Membership is
  // monotone, so the mark never has to be revoked.
  std::vector<std::vector<std::vector<char>>> checked(levels.size());
  auto ensure_shape = [&](std::size_t l) {
    if (checked.size() <= l) checked.resize(l + 1);
    auto& table = checked[l];
    table.resize(levels[l].orbit.size());
    for (auto& row : table) row.resize(levels[l].generators.size(), 0);
  };

  long i = static_cast<long>(levels.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    ensure_shape(li);
    bool descended = false;
    for (std::size_t oi = 0; oi < levels[li].orbit.size() && !descended; ++oi) {
      for (std::size_t gi = 0; gi < levels[li].generators.size(); ++gi) {
        if (checked[li][oi][gi]) continue;
        checked[li][oi][gi] = 1;
        const auto& lv = levels[li];
        const Permutation& g = lv.generators[gi];
        const Point gamma = g[lv.orbit[oi]];
        const Permutation& u_beta = lv.transversal[oi];
        const auto gslot = static_cast<std::size_t>(lv.slot[gamma]);
        const Permutation& u_gamma = lv.transversal[gslot];

        bool trivial = true;
        for (Point x = 0; x < m; ++x)
          if (g[u_beta[x]] != u_gamma[x]) {
            trivial = false;
            break;
          }
        if (trivial) continue;

        Permutation h = compose(compose(u_beta, g), lv.transversal_inv[gslot]);
        auto [residue, j] = chain.sift(h, li + 1);
        if (j == levels.size() && residue.is_identity()) continue;

        if (j == levels.size()) chain.add_level(residue.first_moved());
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels[l].generators.push_back(residue);
          chain.extend_orbit(l);
        }
        i = static_cast<long>(j);
        descended = true;
        break;
      }
    }
    if (!descended) --i;
  }
  return chain;
}

bool contains(const StabilizerChain& chain, const Permutation& p) {
  return chain.contains(p);
}

}  // namespace shufflegrp::engine
