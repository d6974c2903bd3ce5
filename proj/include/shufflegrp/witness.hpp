#pragma once

// Constructive transitivity of H = <sigma, rho_(01)> on [3n-1] for three-pile
// decks with n = 3^s * t (s >= 1, t >= 2, 3 not dividing t).
//
// For every position x < 3n-1, witness() builds a word over the H alphabet
// carrying x to 0. The reduction runs on the ternary digit count T(x) (the
// number of digits equal to 2): positions with all digits 2 are pushed down by
// blocks of s+1 shuffles, the rest are normalized to digits x_1 = 2, x_0 = 0
// and then lose one 2. Positions without a 2 are flipped into [t], and [t] is
// walked down to 0 a residue class at a time.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shufflegrp/cardpos.hpp"
#include "shufflegrp/words.hpp"

namespace shufflegrp::witness {

inline constexpr std::size_t default_token_budget = 10'000'000;

/// The three-pile deck of size 3n.
ShuffleSystem deck(const RadixParams& params);

struct Reduction {
  Word word;
  Position position;   // image of the input under word
  std::string stage;   // which branch produced it
};

struct Stage {
  std::string label;
  Position position;  // position after the stage
  friend bool operator==(const Stage&, const Stage&) = default;
};

struct WitnessResult {
  Position start;
  Word word;                 // free-reduced, H alphabet only
  std::vector<Stage> steps;  // raw stage trace
};

/// x in [1, t): one residue-class move to a smaller position in [t].
Reduction step1_reduce(Position x, const RadixParams& params);

/// Digits all in {0,1}, at least one 1: product of alpha_{s-i} over the
/// indices i with x_i = 1. The image is the residue X.
Word step2_word(const TernaryCoord& c);

/// 1 <= T(x) < s+1: reaches y with T(y) = 0, or with y_0 = 0, y_1 = 2 and
/// T(y) <= T(x).
Reduction lemma_reduce(Position x, const RadixParams& params);

/// T(x) = s+1, x < 3n-1: blocks of s+1 sigmas until some digit is not 2.
Reduction all_twos_reduce(Position x, const RadixParams& params);

/// x_0 = 0, x_1 = 2, 1 <= T(x) < s+1: reaches b with T(b) = T(x) - 1.
/// Every intermediate coordinate is checked against its expected value; a
/// mismatch throws ShapeError.
Reduction case_reduce(Position x, const RadixParams& params);

/// Word carrying x to 0. Rejects x = 3n-1, which H fixes.
WitnessResult witness(Position x, const RadixParams& params,
                      std::size_t token_budget = default_token_budget);

/// trace(word, x) = 0, trace(word, 3n-1) = 3n-1 and the H alphabet.
bool verify(const WitnessResult& r, const RadixParams& params);

struct Failure {
  Position x;
  std::string reason;
};

struct TransitivityReport {
  std::uint64_t n;
  std::size_t tested = 0;
  std::size_t succeeded = 0;
  std::vector<Failure> failures;
  std::size_t max_length = 0;           // tokens, macros unexpanded
  double mean_length = 0.0;
  std::size_t max_expanded_length = 0;  // sigma/sigma^-1/rho tokens
  std::map<std::string, std::size_t> stage_histogram;
  std::optional<std::uint64_t> seed;    // set for sampled runs
};

/// Runs witness() over every x in [3n-1] (sample = nullopt) or over `sample`
/// positions drawn with a seeded generator. Work is split across `workers`
/// threads; the result does not depend on the split.
TransitivityReport transitivity_report(const RadixParams& params,
                                       std::optional<std::size_t> sample,
                                       std::uint64_t seed = 0,
                                       unsigned workers = 1,
                                       std::size_t token_budget = default_token_budget);

/// Positions a sampled report would test.
std::vector<Position> sample_positions(const RadixParams& params,
                                       std::size_t count, std::uint64_t seed);

}  // namespace shufflegrp::witness
