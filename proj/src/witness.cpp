#include "shufflegrp/witness.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <thread>

#include "shufflegrp/errors.hpp"

namespace shufflegrp::witness {

namespace {

using cardpos::decode;
using cardpos::encode;
using cardpos::t_count;

// Accumulates a word while streaming the current position through it.
class Walk {
 public:
  Walk(const RadixParams& params, Position x)
      : params_(params), sys_(deck(params)), pos_(x) {}

  Walk& then(const Token& t, std::size_t times = 1) {
    for (std::size_t i = 0; i < times; ++i) {
      pos_ = words::trace(t, sys_, pos_);
      word_.tokens.push_back(t);
    }
    return *this;
  }
  Walk& then(const Word& w) {
    for (const Token& t : w.tokens) then(t);
    return *this;
  }

  Position position() const noexcept { return pos_; }
  TernaryCoord coord() const { return encode(pos_, params_); }
  Reduction finish(std::string stage) && {
    return {std::move(word_), pos_, std::move(stage)};
  }

 private:
  const RadixParams& params_;
  ShuffleSystem sys_;
  Position pos_;
  Word word_;
};

[[noreturn]] void shape_failure(const std::string& where, Position got,
                                Position expected, const RadixParams& p) {
  throw ShapeError(where + ": reached " + cardpos::to_string(encode(got, p)) +
                   ", expected " + cardpos::to_string(encode(expected, p)) +
                   " (n = " + std::to_string(p.n()) + ")");
}

void expect_at(const Walk& walk, Position expected, const std::string& where,
               const RadixParams& p) {
  if (walk.position() != expected) shape_failure(where, walk.position(), expected, p);
}

// Generator symbols of a stored recipe; 'a' stands for alpha_s.
Word recipe_word(std::string_view symbols, unsigned s) {
  Word w;
  for (char c : symbols) {
    switch (c) {
      case 'S': w.push(Token::sigma_inv()); break;
      case 's': w.push(Token::sigma()); break;
      case 'b': w.push(Token::beta()); break;
      case 'a': w.push(Token::alpha(s)); break;
      default: throw std::logic_error("bad recipe symbol");
    }
  }
  return w;
}

// A word carrying x = (x_s,...,x_2,2,0;X) to (0,x_s,...,x_2,2;V) with
// V = (t_coef * t + X + offset) / 3.
struct Recipe {
  std::string_view symbols;
  int t_coef;
  int offset;
};

struct ResidueRecipes {
  Recipe y;
  Recipe z;
};

// Indexed by [t mod 3 == 1][X mod 3]. Each word first adjusts the two low
// digits and the residue so that x_0 t + X is divisible by 3, then applies
// sigma^-1.
constexpr std::array<std::array<ResidueRecipes, 3>, 2> kResidueRecipes{{
    // t = 2 (mod 3)
    {{
        {{"S", 0, 0}, {"baS", 1, 1}},
        {{"bS", 0, -1}, {"aS", 1, 0}},
        {{"ababS", 0, -2}, {"abS", 1, -1}},
    }},
    // t = 1 (mod 3)
    {{
        {{"S", 0, 0}, {"abS", 1, -1}},
        {{"bS", 0, -1}, {"babS", 1, -2}},
        {{"abaS", 0, 1}, {"aS", 1, 0}},
    }},
}};

std::uint64_t residue_value(const Recipe& r, std::uint64_t t, std::uint64_t X) {
  const auto num = static_cast<long long>(r.t_coef * t + X) + r.offset;
  if (num < 0 || num % 3 != 0) throw std::logic_error("residue recipe not integral");
  return static_cast<std::uint64_t>(num / 3);
}

void check_h_range(Position x, const RadixParams& p) {
  if (x >= p.degree() - 1)
    throw std::out_of_range(x == p.degree() - 1
                                ? "position 3n-1 = " + std::to_string(x) +
                                      " is fixed by H"
                                : "position " + std::to_string(x) +
                                      " out of range for deck of " +
                                      std::to_string(p.degree()));
}

}  // namespace

ShuffleSystem deck(const RadixParams& params) { return {3, params.n()}; }

Reduction step1_reduce(Position x, const RadixParams& params) {
  const std::uint64_t t = params.t();
  if (x < 1 || x >= t)
    throw std::out_of_range("step1_reduce needs 1 <= x < t = " + std::to_string(t));
  const unsigned s = params.s();
  Walk walk(params, x);
  Position expected = 0;
  switch (x % 3) {
    case 0:
      walk.then(Token::sigma_inv());
      expected = x / 3;
      break;
    case 1:
      walk.then(Token::beta());
      expected = x - 1;
      break;
    default:
      // alpha_s lifts x to t + x, whose residue class lets beta step by one
      walk.then(Token::alpha(s)).then(Token::beta()).then(Token::alpha(s));
      if (t % 3 == 2) {
        expected = x - 1;
      } else {
        walk.then(Token::sigma_inv());
        expected = (x + 1) / 3;
      }
  }
  expect_at(walk, expected, "step1_reduce", params);
  return std::move(walk).finish("step1");
}

Word step2_word(const TernaryCoord& c) {
  const unsigned s = c.params().s();
  Word w;
  for (unsigned i = s + 1; i-- > 0;) {
    const Digit d = c.digit(i);
    if (d == 2)
      throw std::invalid_argument("step2_word: digit x_" + std::to_string(i) +
                                  " is 2");
    if (d == 1) w.push(Token::alpha(s - i));
  }
  if (w.empty())
    throw std::invalid_argument("step2_word: all digits are zero");
  return w;
}

Reduction lemma_reduce(Position x, const RadixParams& params) {
  check_h_range(x, params);
  const unsigned s = params.s();
  const TernaryCoord cx = encode(x, params);
  const unsigned tx = t_count(cx);
  if (tx < 1 || tx >= s + 1)
    throw std::invalid_argument("lemma_reduce needs 1 <= T(x) < s+1");

  unsigned ell = 0;
  while (cx.digit(ell) == 2) ++ell;
  Walk walk(params, x);
  walk.then(Token::sigma_inv(), ell);

  TernaryCoord z = walk.coord();
  if (t_count(z) > tx) throw ShapeError("lemma_reduce: T increased under sigma^-l");
  if (t_count(z) == 0) return std::move(walk).finish("lemma");

  unsigned j = 0;
  while (!(z.digit(j) != 2 && z.digit(j + 1) == 2)) ++j;
  if (z.digit(j) == 1) walk.then(Token::alpha(s - j));

  const std::uint64_t t = params.t();
  for (unsigned step = 0; step < j; ++step) {
    const TernaryCoord c = walk.coord();
    if (c.digit(0) == 2) throw ShapeError("lemma_reduce: shifted out a 2");
    if ((c.digit(0) * t + c.residue()) % 3 == 2) walk.then(Token::alpha(s));
    walk.then(Token::sigma_inv());
  }

  const TernaryCoord y = walk.coord();
  if (y.digit(0) != 0 || y.digit(1) != 2 || t_count(y) != t_count(z))
    throw ShapeError("lemma_reduce: result " + cardpos::to_string(y) +
                     " does not have y_0 = 0, y_1 = 2 and T(y) = T(z)");
  return std::move(walk).finish("lemma");
}

Reduction all_twos_reduce(Position x, const RadixParams& params) {
  check_h_range(x, params);
  const unsigned s = params.s();
  if (t_count(encode(x, params)) != s + 1)
    throw std::invalid_argument("all_twos_reduce needs every digit equal to 2");
  Walk walk(params, x);
  for (;;) {
    const Position before = walk.position();
    walk.then(Token::sigma(), s + 1);
    // x - x^{sigma^{s+1}} = (3^{s+1} - 1)(t - X - 1)
    const std::uint64_t X = before % params.t();
    if (walk.position() + (params.pow3(s + 1) - 1) * (params.t() - X - 1) != before)
      shape_failure("all_twos_reduce", walk.position(),
                    before - (params.pow3(s + 1) - 1) * (params.t() - X - 1), params);
    if (t_count(walk.coord()) < s + 1) break;
  }
  return std::move(walk).finish("all_twos");
}

Reduction case_reduce(Position x, const RadixParams& params) {
  check_h_range(x, params);
  const unsigned s = params.s();
  const std::uint64_t t = params.t();
  const TernaryCoord cx = encode(x, params);
  const unsigned tx = t_count(cx);
  if (cx.digit(0) != 0 || cx.digit(1) != 2 || tx < 1 || tx >= s + 1)
    throw std::invalid_argument("case_reduce needs x_0 = 0, x_1 = 2 and T(x) < s+1");

  const bool case2 = t % 3 == 1;
  const std::uint64_t X = cx.residue();
  // high = (x_s,...,x_2) read as a base-3 number
  const std::uint64_t high = (x / t) / 9;
  auto tail_two = [&](std::uint64_t V) { return (3 * high + 2) * t + V; };  // (0,x_s,...,x_2,2;V)

  const ResidueRecipes& rec = kResidueRecipes[case2][X % 3];
  const std::uint64_t Y = residue_value(rec.y, t, X);
  const std::uint64_t Z = residue_value(rec.z, t, X);

  Walk to_y(params, x);
  to_y.then(recipe_word(rec.y.symbols, s));
  expect_at(to_y, tail_two(Y), "case_reduce (y)", params);

  const std::string label = case2 ? "case2" : "case1";
  if ((2 * t + Y) % 3 != 2) {
    to_y.then(Token::sigma_inv());
    return std::move(to_y).finish(label);
  }

  Walk to_z(params, x);
  to_z.then(recipe_word(rec.z.symbols, s));
  expect_at(to_z, tail_two(Z), "case_reduce (z)", params);
  if ((2 * t + Z) % 3 != 2) {
    to_z.then(Token::sigma_inv());
    return std::move(to_z).finish(label);
  }

  // Both residues are stuck at 2. Bounce off (x_s,...,x_2,2,d;W) with the
  // low digit adjusted so that beta can step the residue down by one, then
  // come back with the leading digit forced to 1.
  //
  // In the t = 1 (mod 3) case the bounce needs V >= 1 (the tables give
  // V = 0 (mod 3)); when Y = 0 it starts from z instead, whose residue
  // Z = (t-1)/3 satisfies the same congruence.
  const bool use_z = case2 && Y == 0;
  Walk& v_walk = use_z ? to_z : to_y;
  const std::uint64_t V = use_z ? Z : Y;
  const std::uint64_t ninth = 9 * high + 6;  // (x_s,...,x_2,2,0) as a number
  if (!case2) {
    v_walk.then(Token::sigma()).then(Token::alpha(s));
    expect_at(v_walk, (ninth + 1) * t + 3 * V, "case_reduce (w)", params);
  } else {
    v_walk.then(Token::sigma())
        .then(Token::alpha(s))
        .then(Token::beta())
        .then(Token::alpha(s));
    expect_at(v_walk, ninth * t + 3 * V - 1, "case_reduce (w)", params);
  }
  v_walk.then(Token::sigma_inv())
      .then(Token::beta())
      .then(Token::sigma())
      .then(Token::alpha(s))
      .then(Token::sigma_inv(), 2);
  const std::uint64_t shifted = case2 ? (t - 1) / 3 + V : V;
  const std::uint64_t final_residue = (2 * t + shifted - 2) / 3;
  expect_at(v_walk, (params.pow3(s) + high) * t + final_residue,
            "case_reduce (b)", params);
  return std::move(v_walk).finish(label + "_stuck");
}

WitnessResult witness(Position x, const RadixParams& params,
                      std::size_t token_budget) {
  check_h_range(x, params);
  const unsigned s = params.s();
  const std::uint64_t t = params.t();
  WitnessResult result{x, {}, {}};
  Word raw;
  Position pos = x;

  auto absorb = [&](Reduction r) {
    raw += r.word;
    pos = r.position;
    result.steps.push_back({std::move(r.stage), pos});
    if (raw.size() > token_budget)
      throw CapExceeded("witness: token budget " + std::to_string(token_budget) +
                        " exhausted at x = " + std::to_string(x));
  };

  while (pos != 0) {
    const TernaryCoord c = encode(pos, params);
    const unsigned T = t_count(c);
    if (T == s + 1) {
      absorb(all_twos_reduce(pos, params));
      if (t_count(encode(pos, params)) >= s + 1)
        throw ShapeError("witness: all_twos block left T = s+1");
    } else if (T >= 1) {
      absorb(lemma_reduce(pos, params));
      const unsigned ty = t_count(encode(pos, params));
      if (ty > T) throw ShapeError("witness: T increased across lemma_reduce");
      if (ty > 0) {
        absorb(case_reduce(pos, params));
        if (t_count(encode(pos, params)) + 1 != ty)
          throw ShapeError("witness: case_reduce did not remove exactly one 2");
      }
    } else if (pos >= t) {
      Walk walk(params, pos);
      walk.then(step2_word(c));
      if (walk.position() != c.residue())
        shape_failure("step2", walk.position(), c.residue(), params);
      absorb(std::move(walk).finish("step2"));
    } else {
      const Position before = pos;
      absorb(step1_reduce(pos, params));
      if (pos >= before) throw ShapeError("witness: step1 did not decrease x");
    }
  }
  result.word = words::free_reduce(raw);
  return result;
}

bool verify(const WitnessResult& r, const RadixParams& params) {
  const ShuffleSystem sys = deck(params);
  const Position last = params.degree() - 1;
  return words::in_h_alphabet(r.word) && words::trace(r.word, sys, r.start) == 0 &&
         words::trace(r.word, sys, last) == last;
}

std::vector<Position> sample_positions(const RadixParams& params,
                                       std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Position> dist(0, params.degree() - 2);
  std::vector<Position> out(count);
  for (auto& x : out) x = dist(rng);
  return out;
}

TransitivityReport transitivity_report(const RadixParams& params,
                                       std::optional<std::size_t> sample,
                                       std::uint64_t seed, unsigned workers,
                                       std::size_t token_budget) {
  std::vector<Position> xs;
  if (sample) {
    xs = sample_positions(params, *sample, seed);
  } else {
    xs.resize(params.degree() - 1);
    for (Position x = 0; x < xs.size(); ++x) xs[x] = x;
  }

  struct Partial {
    std::size_t succeeded = 0;
    std::vector<std::pair<std::size_t, Failure>> failures;
    std::size_t max_length = 0, max_expanded = 0;
    std::uint64_t total_length = 0;
    std::map<std::string, std::size_t> stages;
  };

  workers = std::max(1u, workers);
  std::vector<Partial> parts(workers);
  auto run = [&](unsigned w) {
    Partial& part = parts[w];
    for (std::size_t i = w; i < xs.size(); i += workers) {
      try {
        const WitnessResult r = witness(xs[i], params, token_budget);
        for (const auto& st : r.steps) ++part.stages[st.label];
        if (!verify(r, params)) {
          part.failures.push_back({i, {xs[i], "word does not verify"}});
          continue;
        }
        ++part.succeeded;
        part.total_length += r.word.size();
        part.max_length = std::max(part.max_length, r.word.size());
        part.max_expanded = std::max(part.max_expanded, words::expanded_length(r.word));
      } catch (const std::exception& e) {
        part.failures.push_back({i, {xs[i], e.what()}});
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  TransitivityReport report;
  report.n = params.n();
  report.tested = xs.size();
  if (sample) report.seed = seed;
  std::vector<std::pair<std::size_t, Failure>> failures;
  std::uint64_t total = 0;
  for (auto& part : parts) {
    report.succeeded += part.succeeded;
    report.max_length = std::max(report.max_length, part.max_length);
    report.max_expanded_length = std::max(report.max_expanded_length, part.max_expanded);
    total += part.total_length;
    for (const auto& [label, count] : part.stages) report.stage_histogram[label] += count;
    for (auto& f : part.failures) failures.push_back(std::move(f));
  }
  std::sort(failures.begin(), failures.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& f : failures) report.failures.push_back(std::move(f.second));
  report.mean_length = report.succeeded
                           ? static_cast<double>(total) / static_cast<double>(report.succeeded)
                           : 0.0;
  return report;
}

}  // namespace shufflegrp::witness
