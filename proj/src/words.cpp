#include "shufflegrp/words.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "shufflegrp/errors.hpp"

namespace shufflegrp {

namespace {

std::vector<Point> trimmed(std::span<const Point> images) {
  std::size_t len = images.size();
  while (len > 0 && images[len - 1] == len - 1) --len;
  return {images.begin(), images.begin() + static_cast<std::ptrdiff_t>(len)};
}

Position step_sigma(Position x, Position k, Position n) {
  return k * (x % n) + x / n;
}

Position step_sigma_inv(Position x, Position k, Position n) {
  return x / k + (x % k) * n;
}

Position step_rho(const Token& t, Position x, Position n) {
  return x % n + t.tau_image(static_cast<Point>(x / n)) * n;
}

void check_pile_count(const Token& t, const ShuffleSystem& sys) {
  if (t.kind() == Token::Kind::rho && t.tau().size() > sys.k())
    throw std::invalid_argument("rho token acts on " +
                                std::to_string(t.tau().size()) +
                                " piles but the deck has k = " +
                                std::to_string(sys.k()));
}

bool cancels(const Token& a, const Token& b) {
  using K = Token::Kind;
  switch (a.kind()) {
    case K::sigma: return b.kind() == K::sigma_inv;
    case K::sigma_inv: return b.kind() == K::sigma;
    default: return b == a.inverse();
  }
}

std::string base_text(const Token& t) {
  using K = Token::Kind;
  switch (t.kind()) {
    case K::sigma: return "s";
    case K::sigma_inv: return "s";
    case K::alpha: return "a" + std::to_string(t.index());
    case K::beta: return "b";
    case K::rho: break;
  }
  const auto& tau = t.tau();
  // transposition (a b) with single-digit points prints as r<a><b>
  std::vector<Point> moved;
  for (Point j = 0; j < tau.size(); ++j)
    if (tau[j] != j) moved.push_back(j);
  if (moved.size() == 2 && moved[1] < 10 && tau[moved[0]] == moved[1])
    return "r" + std::to_string(moved[0]) + std::to_string(moved[1]);
  std::string out = "r[";
  for (std::size_t j = 0; j < tau.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(tau[j]);
  }
  return out + "]";
}

long long parse_int(std::string_view s, std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad exponent in token '" + std::string(tok) + "'");
  return v;
}

Token parse_base(std::string_view base, std::string_view tok) {
  auto bad = [&] {
    return std::invalid_argument("malformed token '" + std::string(tok) + "'");
  };
  if (base == "s") return Token::sigma();
  if (base == "S") return Token::sigma_inv();
  if (base == "b") return Token::beta();
  if (base.size() >= 2 && base[0] == 'a') {
    auto digits = base.substr(1);
    unsigned i = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw bad();
    return Token::alpha(i);
  }
  if (base.size() == 3 && base[0] == 'r' && std::isdigit(static_cast<unsigned char>(base[1])) &&
      std::isdigit(static_cast<unsigned char>(base[2]))) {
    Point a = static_cast<Point>(base[1] - '0');
    Point b = static_cast<Point>(base[2] - '0');
    if (a == b) throw bad();
    return Token::rho(shuffle::transposition(std::max(a, b) + 1, a, b));
  }
  if (base.size() >= 3 && base.substr(0, 2) == "r[" && base.back() == ']') {
    std::string inner(base.substr(2, base.size() - 3));
    for (char& c : inner)
      if (c == ',') c = ' ';
    if (inner.find_first_not_of(' ') == std::string::npos)
      return Token::rho(Permutation::identity(1));
    return Token::rho(parse_images(inner));
  }
  throw bad();
}

}  // namespace

Token Token::rho(const Permutation& tau) {
  Token t(Kind::rho);
  t.tau_ = trimmed(tau.images());
  return t;
}

Token Token::rho01() {
  static const Token t = rho(shuffle::transposition(2, 0, 1));
  return t;
}

Token Token::alpha(unsigned i) {
  Token t(Kind::alpha);
  t.index_ = i;
  return t;
}

Token Token::inverse() const {
  switch (kind_) {
    case Kind::sigma: return sigma_inv();
    case Kind::sigma_inv: return sigma();
    case Kind::rho: {
      if (tau_.empty()) return *this;
      return rho(shufflegrp::inverse(Permutation(tau_)));
    }
    default: return *this;
  }
}

namespace words {

Word expand_macros(const Word& w) {
  Word out;
  for (const Token& t : w.tokens) {
    switch (t.kind()) {
      case Token::Kind::alpha:
        out.push(Token::sigma(), t.index());
        out.push(Token::rho01());
        out.push(Token::sigma_inv(), t.index());
        break;
      case Token::Kind::beta:
        out.push(Token::sigma_inv()).push(Token::rho01()).push(Token::sigma());
        break;
      default:
        out.push(t);
    }
  }
  return out;
}

Word expand_macros(const Word& w, const RadixParams& params) {
  for (const Token& t : w.tokens)
    if (t.kind() == Token::Kind::alpha && t.index() > params.s())
      throw std::out_of_range("alpha index " + std::to_string(t.index()) +
                              " exceeds s = " + std::to_string(params.s()));
  return expand_macros(w);
}

std::size_t expanded_length(const Word& w) {
  std::size_t len = 0;
  for (const Token& t : w.tokens) {
    switch (t.kind()) {
      case Token::Kind::alpha: len += 2 * std::size_t{t.index()} + 1; break;
      case Token::Kind::beta: len += 3; break;
      default: ++len;
    }
  }
  return len;
}

Position trace(const Token& t, const ShuffleSystem& sys, Position x) {
  const Position k = sys.k(), n = sys.n();
  switch (t.kind()) {
    case Token::Kind::sigma: return step_sigma(x, k, n);
    case Token::Kind::sigma_inv: return step_sigma_inv(x, k, n);
    case Token::Kind::rho: return step_rho(t, x, n);
    case Token::Kind::alpha: {
      for (unsigned i = 0; i < t.index(); ++i) x = step_sigma(x, k, n);
      x = step_rho(Token::rho01(), x, n);
      for (unsigned i = 0; i < t.index(); ++i) x = step_sigma_inv(x, k, n);
      return x;
    }
    case Token::Kind::beta:
      x = step_sigma_inv(x, k, n);
      x = step_rho(Token::rho01(), x, n);
      return step_sigma(x, k, n);
  }
  return x;
}

Position trace(const Word& w, const ShuffleSystem& sys, Position x) {
  if (x >= sys.degree())
    throw std::out_of_range("position " + std::to_string(x) +
                            " out of range for degree " +
                            std::to_string(sys.degree()));
  for (const Token& t : w.tokens) {
    check_pile_count(t, sys);
    x = trace(t, sys, x);
  }
  return x;
}

Permutation evaluate(const Word& w, const ShuffleSystem& sys,
                     std::size_t degree_cap) {
  if (sys.degree() > degree_cap)
    throw CapExceeded("evaluate: degree " + std::to_string(sys.degree()) +
                      " exceeds cap " + std::to_string(degree_cap) +
                      "; use trace for large decks");
  for (const Token& t : w.tokens) check_pile_count(t, sys);
  const Word flat = expand_macros(w);
  std::vector<Point> images(sys.degree());
  for (Point x = 0; x < images.size(); ++x) {
    Position y = x;
    for (const Token& t : flat.tokens) y = trace(t, sys, y);
    images[x] = static_cast<Point>(y);
  }
  return Permutation(std::move(images));
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Token& t : w.tokens) {
    if (t.kind() == Token::Kind::rho && t.tau().empty()) continue;
    if (!out.empty() && cancels(out.tokens.back(), t))
      out.tokens.pop_back();
    else
      out.tokens.push_back(t);
  }
  return out;
}

bool in_h_alphabet(const Word& w) {
  for (const Token& t : w.tokens)
    if (t.kind() == Token::Kind::rho && t != Token::rho01()) return false;
  return true;
}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) break;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    std::string_view base = tok;
    long long e = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      e = parse_int(tok.substr(caret + 1), tok);
    }
    Token t = parse_base(base, tok);
    if (e < 0) t = t.inverse();
    out.push(t, static_cast<std::size_t>(e < 0 ? -e : e));
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  const auto& ts = w.tokens;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    const std::size_t run = j - i;
    if (!out.empty()) out += ' ';
    out += base_text(ts[i]);
    if (ts[i].kind() == Token::Kind::sigma_inv)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

nlohmann::json to_json(const Word& w, std::size_t pile_count) {
  auto tokens = nlohmann::json::array();
  const auto& ts = w.tokens;
  for (std::size_t i = 0; i < ts.size();) {
    std::size_t j = i;
    while (j < ts.size() && ts[j] == ts[i]) ++j;
    const auto run = static_cast<long long>(j - i);
    const Token& t = ts[i];
    nlohmann::json entry;
    switch (t.kind()) {
      case Token::Kind::sigma: entry = {{"g", "s"}, {"e", run}}; break;
      case Token::Kind::sigma_inv: entry = {{"g", "s"}, {"e", -run}}; break;
      case Token::Kind::alpha: entry = {{"g", "a"}, {"i", t.index()}}; break;
      case Token::Kind::beta: entry = {{"g", "b"}}; break;
      case Token::Kind::rho: {
        std::vector<Point> tau = t.tau();
        for (auto p = static_cast<Point>(tau.size()); p < pile_count; ++p)
          tau.push_back(p);
        entry = {{"g", "r"}, {"tau", tau}};
        break;
      }
    }
    if (t.kind() != Token::Kind::sigma && t.kind() != Token::Kind::sigma_inv &&
        run > 1)
      entry["e"] = run;
    tokens.push_back(std::move(entry));
    i = j;
  }
  return {{"tokens", std::move(tokens)}};
}

Word from_json(const nlohmann::json& j) {
  Word out;
  if (!j.is_object() || !j.contains("tokens") || !j["tokens"].is_array())
    throw std::invalid_argument("word JSON needs a \"tokens\" array");
  for (const auto& entry : j["tokens"]) {
    const std::string g = entry.at("g").get<std::string>();
    const long long e = entry.value("e", 1LL);
    Token t = Token::sigma();
    if (g == "s")
      t = Token::sigma();
    else if (g == "b")
      t = Token::beta();
    else if (g == "a")
      t = Token::alpha(entry.at("i").get<unsigned>());
    else if (g == "r")
      t = Token::rho(Permutation(entry.at("tau").get<std::vector<Point>>()));
    else
      throw std::invalid_argument("unknown generator \"" + g + "\" in word JSON");
    if (e < 0) t = t.inverse();
    out.push(t, static_cast<std::size_t>(e < 0 ? -e : e));
  }
  return out;
}

}  // namespace words
}  // namespace shufflegrp
