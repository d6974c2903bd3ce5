#pragma once

// Words over the shuffle generators: sigma, sigma^-1, rho_tau, plus the
// macros alpha_i = sigma^i rho_(01) sigma^-i and beta = sigma^-1 rho_(01) sigma.
//
// Text grammar (whitespace separated, optional integer exponent "^e"):
//   s        sigma            S or s^-1   sigma^-1
//   r01      rho of the transposition (0 1); r[1,2,0] gives tau by images
//   a<i>     alpha_i          b           beta

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "shufflegrp/cardpos.hpp"
#include "shufflegrp/perm.hpp"
#include "shufflegrp/shuffle.hpp"

namespace shufflegrp {

class Token {
 public:
  enum class Kind { sigma, sigma_inv, rho, alpha, beta };

  static Token sigma() { return Token(Kind::sigma); }
  static Token sigma_inv() { return Token(Kind::sigma_inv); }
  /// tau acts on pile indices; trailing fixed points are dropped, so the same
  /// token serves every k >= the largest moved pile + 1.
  static Token rho(const Permutation& tau);
  static Token rho01();
  static Token alpha(unsigned i);
  static Token beta() { return Token(Kind::beta); }

  Kind kind() const noexcept { return kind_; }
  /// Image list of tau with trailing fixed points removed (rho only).
  const std::vector<Point>& tau() const noexcept { return tau_; }
  /// Pile image of j under tau, with implicit fixed points past tau().size().
  Point tau_image(Point j) const noexcept {
    return j < tau_.size() ? tau_[j] : j;
  }
  unsigned index() const noexcept { return index_; }
  bool is_macro() const noexcept {
    return kind_ == Kind::alpha || kind_ == Kind::beta;
  }
  Token inverse() const;

  friend bool operator==(const Token&, const Token&) = default;

 private:
  explicit Token(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Point> tau_;
  unsigned index_ = 0;
};

struct Word {
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  Word& operator+=(const Word& other) {
    tokens.insert(tokens.end(), other.tokens.begin(), other.tokens.end());
    return *this;
  }
  Word& push(Token t, std::size_t times = 1) {
    tokens.insert(tokens.end(), times, t);
    return *this;
  }
  friend bool operator==(const Word&, const Word&) = default;
};

inline Word operator+(Word a, const Word& b) { return a += b; }

namespace words {

inline constexpr std::size_t default_evaluate_cap = 1'000'000;

/// Rewrites alpha/beta into sigma, sigma^-1 and rho_(01) tokens.
Word expand_macros(const Word& w);
/// As above, rejecting alpha_i with i > s.
Word expand_macros(const Word& w, const RadixParams& params);

/// Number of tokens after macro expansion.
std::size_t expanded_length(const Word& w);

/// Materializes the left-to-right product as a permutation of [kn].
Permutation evaluate(const Word& w, const ShuffleSystem& sys,
                     std::size_t degree_cap = default_evaluate_cap);

/// Image of x under the word, streamed token by token through the generator
/// formulas. Constant extra memory, any deck size.
Position trace(const Word& w, const ShuffleSystem& sys, Position x);
/// Image of x under one (possibly macro) token.
Position trace(const Token& t, const ShuffleSystem& sys, Position x);

/// Cancels adjacent inverse pairs (sigma/sigma^-1, rho_tau/rho_tau^-1, and
/// repeated alpha_i or beta, both involutions) until none remain.
Word free_reduce(const Word& w);

/// True iff every token lies in the alphabet {sigma, sigma^-1, rho_(01),
/// alpha_i, beta}.
bool in_h_alphabet(const Word& w);

Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// {"tokens":[{"e":1,"g":"s"},{"g":"r","tau":[1,0,2]},...]}. Runs of equal
/// tokens share one entry with exponent "e". Rho images are padded to
/// `pile_count` when it is larger than the stored image list.
nlohmann::json to_json(const Word& w, std::size_t pile_count = 0);
Word from_json(const nlohmann::json& j);

}  // namespace words
}  // namespace shufflegrp
