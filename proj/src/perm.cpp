#include "shufflegrp/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace shufflegrp {

namespace {

void check_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size())
      throw std::invalid_argument("permutation image " + std::to_string(v) +
                                  " out of range for degree " +
                                  std::to_string(images.size()));
    if (seen[v])
      throw std::invalid_argument("permutation image " + std::to_string(v) +
                                  " repeated");
    seen[v] = true;
  }
}

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)); }

Point parse_point(std::string_view tok) {
  Point value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("malformed point '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be at least 1");
  check_bijection(images_);
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0)
    throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), trusted_t{});
}

Point Permutation::apply(Point x) const {
  if (x >= images_.size())
    throw std::out_of_range("point " + std::to_string(x) +
                            " out of range for degree " +
                            std::to_string(images_.size()));
  return images_[x];
}

bool Permutation::is_identity() const noexcept {
  return first_moved() == images_.size();
}

Point Permutation::first_moved() const noexcept {
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return i;
  return static_cast<Point>(images_.size());
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch (" +
                                std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  std::vector<Point> out(p.degree());
  const auto& a = p.images_;
  const auto& b = q.images_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b[a[i]];
  return Permutation(std::move(out), Permutation::trusted_t{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (Point i = 0; i < out.size(); ++i) out[p.images_[i]] = i;
  return Permutation(std::move(out), Permutation::trusted_t{});
}

Permutation power(const Permutation& p, long long e) {
  Permutation base = e < 0 ? inverse(p) : p;
  unsigned long long k = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                                : static_cast<unsigned long long>(e);
  Permutation result = Permutation::identity(p.degree());
  while (k) {
    if (k & 1ULL) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

Parity parity(const Permutation& p) {
  // sign = (-1)^(m - #cycles), fixed points counted as cycles
  std::vector<bool> seen(p.degree(), false);
  std::size_t ncycles = 0;
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    ++ncycles;
    for (Point j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return (p.degree() - ncycles) % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    std::vector<Point> cyc;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

BigInt order(const Permutation& p) {
  BigInt result = 1;
  for (const auto& c : cycles(p)) {
    BigInt len = c.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

Permutation parse_images(std::string_view text) {
  std::vector<Point> images;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_blank(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_blank(text[j])) ++j;
    if (j > i) images.push_back(parse_point(text.substr(i, j - i)));
    i = j;
  }
  if (images.empty()) throw std::invalid_argument("empty image list");
  return Permutation(std::move(images));
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0)
    throw std::invalid_argument("cycle notation needs a positive degree");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && is_blank(text[i])) ++i;
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("empty cycle text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle text");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')' && cyc.empty()) break;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      Point v = parse_point(text.substr(i, j - i));
      if (v >= degree)
        throw std::invalid_argument("point " + std::to_string(v) +
                                    " out of range for degree " +
                                    std::to_string(degree));
      if (used[v])
        throw std::invalid_argument("point " + std::to_string(v) +
                                    " repeated; cycles must be disjoint");
      used[v] = true;
      cyc.push_back(v);
      i = j;
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') break;
      throw std::invalid_argument("malformed cycle text");
    }
    ++i;  // ')'
    for (std::size_t c = 0; c < cyc.size(); ++c)
      images[cyc[c]] = cyc[(c + 1) % cyc.size()];
    skip();
  }
  return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text,
                              std::optional<std::size_t> degree) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '(') {
    if (!degree)
      throw std::invalid_argument("cycle notation needs an explicit degree");
    return parse_cycles(text, *degree);
  }
  return parse_images(text);
}

std::string format(const Permutation& p, PermStyle style) {
  std::string out;
  if (style == PermStyle::images) {
    for (Point i = 0; i < p.degree(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p[i]);
    }
    return out;
  }
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(c[j]);
    }
    out += ')';
  }
  return out;
}

}  // namespace shufflegrp
