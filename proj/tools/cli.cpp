#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shufflegrp/cardpos.hpp"
#include "shufflegrp/classify.hpp"
#include "shufflegrp/engine.hpp"
#include "shufflegrp/errors.hpp"
#include "shufflegrp/perm.hpp"
#include "shufflegrp/shuffle.hpp"
#include "shufflegrp/witness.hpp"
#include "shufflegrp/words.hpp"

namespace shufflegrp::cli {

namespace {

using nlohmann::json;

// Usage errors detected after parsing (bad tau spec, out-of-scope k, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cycle notation on 1-based points, as computer-algebra systems expect.
std::string gap_cycles(const Permutation& p) {
  auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out;
}

std::string gap_list(const std::vector<Permutation>& ps) {
  std::string out = "[ ";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += gap_cycles(ps[i]);
  }
  return out + " ]";
}

Permutation parse_tau(const std::string& spec, std::size_t k) {
  try {
    if (spec.find(',') != std::string::npos) {
      std::string images = spec;
      for (char& c : images)
        if (c == ',') c = ' ';
      Permutation tau = parse_images(images);
      if (tau.degree() != k) throw std::invalid_argument("wrong degree");
      return tau;
    }
    if (spec.size() == 2 && std::isdigit(static_cast<unsigned char>(spec[0])) &&
        std::isdigit(static_cast<unsigned char>(spec[1])))
      return shuffle::transposition(k, static_cast<Point>(spec[0] - '0'),
                                    static_cast<Point>(spec[1] - '0'));
  } catch (const std::invalid_argument&) {
  }
  throw UsageError("invalid pile permutation '" + spec + "' for k = " +
                   std::to_string(k) +
                   " (use two pile digits like 01, or an image list like 1,0,2)");
}

std::string stages_text(const witness::WitnessResult& r) {
  std::string out;
  for (const auto& st : r.steps)
    out += "  " + st.label + " -> " + std::to_string(st.position) + "\n";
  return out;
}

json witness_json(const witness::WitnessResult& r, const RadixParams& p, bool ok) {
  json stages = json::array();
  for (const auto& st : r.steps)
    stages.push_back({{"stage", st.label}, {"position", st.position}});
  return {{"n", p.n()},
          {"x", r.start},
          {"word", words::format_word(r.word)},
          {"tokens", words::to_json(r.word, 3)["tokens"]},
          {"length", r.word.size()},
          {"expanded_length", words::expanded_length(r.word)},
          {"stages", std::move(stages)},
          {"ok", ok}};
}

json report_json(const witness::TransitivityReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"x", f.x}, {"reason", f.reason}});
  json out = {{"n", r.n},
              {"tested", r.tested},
              {"succeeded", r.succeeded},
              {"failures", std::move(failures)},
              {"max_length", r.max_length},
              {"mean_length", r.mean_length},
              {"max_expanded_length", r.max_expanded_length},
              {"stage_histogram", r.stage_histogram}};
  if (r.seed) out["seed"] = *r.seed;
  return out;
}

// ---------------------------------------------------------------------------

int cmd_shuffle(const RunConfig& cfg, const std::string& which,
                const std::string& style, bool gap, std::ostream& out) {
  const ShuffleSystem sys(cfg.k, cfg.n);
  std::vector<Permutation> perms;
  if (which == "sigma") {
    perms.push_back(shuffle::standard_shuffle(sys));
  } else if (which.rfind("rho:", 0) == 0) {
    perms.push_back(shuffle::pile_permutation(sys, parse_tau(which.substr(4), cfg.k)));
  } else if (which == "perfect") {
    perms = shuffle::perfect_shuffles(sys);
  } else {
    throw UsageError("unknown shuffle '" + which + "' (sigma, rho:<tau>, perfect)");
  }
  if (gap) {
    out << "gens := " << gap_list(perms) << ";\n";
    return ok;
  }
  const PermStyle ps = style == "cycles" ? PermStyle::cycles : PermStyle::images;
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& p : perms) arr.push_back(format(p, ps));
    out << json{{"k", cfg.k}, {"n", cfg.n}, {"permutations", arr}}.dump() << "\n";
  } else {
    for (const auto& p : perms) out << format(p, ps) << "\n";
  }
  return ok;
}

int cmd_witness(const RunConfig& cfg, std::optional<std::uint64_t> x, bool all,
                bool verbose, std::ostream& out, std::ostream& err) {
  const RadixParams params = RadixParams::from_n(cfg.n);
  const bool json_out = cfg.format == "json";
  if (x) {
    const auto r = witness::witness(*x, params, cfg.budget);
    const bool good = witness::verify(r, params);
    const Position end = words::trace(r.word, witness::deck(params), *x);
    if (json_out) {
      out << witness_json(r, params, good).dump() << "\n";
    } else {
      out << words::format_word(r.word) << "\n";
      out << *x << " -> " << end << (good ? " OK" : " FAILED") << "\n";
      if (verbose) out << stages_text(r);
    }
    return good ? ok : mismatch;
  }
  if (!all && cfg.sample == 0)
    throw UsageError("witness needs -x <position>, --all or --sample <count>");
  std::optional<std::size_t> sample;
  if (!all) sample = cfg.sample;
  const auto rep = witness::transitivity_report(params, sample, cfg.seed, cfg.workers,
                                                cfg.budget);
  for (const auto& f : rep.failures) err << "x = " << f.x << ": " << f.reason << "\n";
  const bool good = rep.failures.empty() && rep.succeeded == rep.tested;
  if (json_out) {
    out << report_json(rep).dump() << "\n";
  } else {
    out << rep.succeeded << "/" << rep.tested << (good ? " OK" : " FAILED") << "\n";
    if (verbose) {
      char mean[32];
      std::snprintf(mean, sizeof mean, "%.3f", rep.mean_length);
      out << "max length " << rep.max_length << ", mean length " << mean
          << ", max expanded length " << rep.max_expanded_length << "\n";
      for (const auto& [stage, count] : rep.stage_histogram)
        out << "  " << stage << ": " << count << "\n";
    }
  }
  return good ? ok : mismatch;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const auto cls = classify::predict(cfg.k, cfg.n);
  const BigInt order = classify::predicted_order(cls, cfg.k, cfg.n);
  if (cfg.format == "json")
    out << json{{"k", cfg.k},
                {"n", cfg.n},
                {"predicted_class", classify::describe(cls)},
                {"predicted_order", order.str()}}
               .dump()
        << "\n";
  else
    out << classify::describe(cls) << ", order " << order.str() << "\n";
  return ok;
}

void print_verify_line(const classify::VerifyReport& r, std::ostream& out) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", r.ms);
  out << "k=" << r.k << " n=" << r.n << " " << classify::describe(r.predicted_class)
      << " predicted " << r.predicted_order.str() << " computed "
      << r.computed_order.str() << (r.match ? " match" : " MISMATCH") << " (" << ms
      << " ms)\n";
}

int cmd_verify(const RunConfig& cfg, bool sweep, std::size_t kmin, std::size_t kmax,
               std::ostream& out) {
  classify::Caps caps{cfg.max_degree};
  std::vector<classify::VerifyReport> reports;
  if (sweep) {
    const std::size_t bound = cfg.max_degree_set ? cfg.max_degree : 36;
    caps.degree = std::max(caps.degree, bound);
    reports = classify::sweep(bound, caps, cfg.workers, kmin, kmax);
  } else {
    if (cfg.n == 0) throw UsageError("verify needs -n or --sweep");
    reports.push_back(classify::verify(cfg.k, cfg.n, caps));
  }
  std::size_t matched = 0;
  for (const auto& r : reports) matched += r.match;
  const bool good = matched == reports.size();
  if (cfg.format == "json") {
    if (sweep) {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(classify::to_json(r));
      out << json{{"cases", arr}, {"matched", matched}, {"total", reports.size()}}.dump()
          << "\n";
    } else {
      out << classify::to_json(reports.front()).dump() << "\n";
    }
  } else {
    for (const auto& r : reports) print_verify_line(r, out);
    if (sweep)
      out << matched << "/" << reports.size() << (good ? " match" : " MISMATCH") << "\n";
  }
  return good ? ok : mismatch;
}

std::vector<Permutation> h_generators(const ShuffleSystem& sys) {
  if (sys.k() != 3) throw UsageError("--stabilizer-H needs k = 3");
  return {shuffle::standard_shuffle(sys),
          shuffle::pile_permutation(sys, shuffle::transposition(3, 0, 1))};
}

int cmd_orbit(const RunConfig& cfg, bool use_h, Point point, std::ostream& out) {
  const ShuffleSystem sys(cfg.k, cfg.n);
  const auto gens = use_h ? h_generators(sys) : shuffle::group_generators(sys);
  if (point >= sys.degree())
    throw UsageError("point " + std::to_string(point) + " out of range");
  const auto orb = engine::orbit(gens, point);
  if (cfg.format == "json")
    out << json{{"k", cfg.k},
                {"n", cfg.n},
                {"point", point},
                {"generators", use_h ? "H" : "G"},
                {"orbit_size", orb.size()}}
               .dump()
        << "\n";
  else
    out << orb.size() << "\n";
  return ok;
}

int cmd_pairorbit(const RunConfig& cfg, std::ostream& out) {
  const ShuffleSystem sys(cfg.k, cfg.n);
  const std::size_t m = sys.degree();
  const std::size_t size =
      engine::pair_orbit_size(shuffle::group_generators(sys), m, 0, 1, cfg.pair_cap);
  const bool two = size == m * (m - 1);
  if (cfg.format == "json")
    out << json{{"k", cfg.k},
                {"n", cfg.n},
                {"pair_orbit_size", size},
                {"pairs", m * (m - 1)},
                {"two_transitive", two}}
               .dump()
        << "\n";
  else
    out << size << (two ? " = " : " < ") << m << "*" << m - 1 << ": "
        << (two ? "2-transitive" : "not 2-transitive") << "\n";
  return ok;
}

int cmd_order(const RunConfig& cfg, bool gap, std::ostream& out) {
  const ShuffleSystem sys(cfg.k, cfg.n);
  const auto gens = shuffle::group_generators(sys);
  if (gap) {
    out << "G := Group(" << gap_list(gens) << ");\n";
    return ok;
  }
  const BigInt order = engine::schreier_sims(gens, cfg.max_degree).order();
  if (cfg.format == "json")
    out << json{{"k", cfg.k}, {"n", cfg.n}, {"order", order.str()}}.dump() << "\n";
  else
    out << order.str() << "\n";
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect-shuffle group toolkit", "shufflegrp"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k", cfg.k, "Number of piles")->check(CLI::PositiveNumber);
  };
  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-n", cfg.n, "Cards per pile")->check(CLI::PositiveNumber);
    if (required) opt->required();
  };
  std::vector<CLI::Option*> max_degree_opts;
  auto add_max_degree = [&](CLI::App* sub) {
    max_degree_opts.push_back(
        sub->add_option("--max-degree", cfg.max_degree, "Schreier-Sims degree cap")
            ->envname("SHUFFLEGRP_MAX_DEGREE")
            ->check(CLI::PositiveNumber));
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };

  // shuffle
  auto* shuffle_cmd = app.add_subcommand("shuffle", "Print sigma, rho_tau or all perfect shuffles");
  std::string which, style = "images";
  bool shuffle_gap = false;
  add_k(shuffle_cmd);
  add_n(shuffle_cmd, true);
  add_format(shuffle_cmd);
  shuffle_cmd->add_option("which", which, "sigma | rho:<tau> | perfect")->required();
  shuffle_cmd->add_option("--style", style, "Permutation text style")
      ->check(CLI::IsMember({"images", "cycles"}));
  shuffle_cmd->add_flag("--gap", shuffle_gap, "Emit 1-based cycle notation for CAS import");

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "Constructive witness words for k = 3");
  std::optional<std::uint64_t> wx;
  bool wall = false, wverbose = false;
  add_n(witness_cmd, true);
  add_format(witness_cmd);
  add_workers(witness_cmd);
  auto* xopt = witness_cmd->add_option("-x", wx, "Start position");
  auto* allopt = witness_cmd->add_flag("--all", wall, "Every position in [3n-1]");
  auto* sampleopt = witness_cmd->add_option("--sample", cfg.sample, "Random positions to test");
  xopt->excludes(allopt)->excludes(sampleopt);
  allopt->excludes(sampleopt);
  witness_cmd->add_option("--seed", cfg.seed, "Sampling seed");
  witness_cmd->add_option("--budget", cfg.budget, "Token budget per witness")
      ->check(CLI::PositiveNumber);
  witness_cmd->add_flag("-v,--verbose", wverbose, "Print the stage trace");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Predicted class and order of G_{k,kn}");
  add_k(classify_cmd);
  add_n(classify_cmd, true);
  add_format(classify_cmd);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Compare predicted and computed orders");
  bool vsweep = false;
  std::size_t kmin = 3, kmax = SIZE_MAX;
  add_k(verify_cmd);
  add_n(verify_cmd, false);
  add_format(verify_cmd);
  add_max_degree(verify_cmd);
  add_workers(verify_cmd);
  verify_cmd->add_flag("--sweep", vsweep, "All k >= 3, n with kn <= max degree (default 36)");
  verify_cmd->add_option("--kmin", kmin, "Smallest k in a sweep");
  verify_cmd->add_option("--kmax", kmax, "Largest k in a sweep");

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit size of a point");
  bool use_h = false;
  Point point = 0;
  add_k(orbit_cmd);
  add_n(orbit_cmd, true);
  add_format(orbit_cmd);
  orbit_cmd->add_flag("--stabilizer-H", use_h, "Use H = <sigma, rho_(01)> (k = 3)");
  orbit_cmd->add_option("point", point, "Base point");

  // pairorbit
  auto* pair_cmd = app.add_subcommand("pairorbit", "Orbit of (0,1) on ordered pairs");
  add_k(pair_cmd);
  add_n(pair_cmd, true);
  add_format(pair_cmd);
  pair_cmd->add_option("--pair-cap", cfg.pair_cap, "Degree cap for the pair orbit")
      ->check(CLI::PositiveNumber);

  // order
  auto* order_cmd = app.add_subcommand("order", "Group order by Schreier-Sims");
  bool order_gap = false;
  add_k(order_cmd);
  add_n(order_cmd, true);
  add_format(order_cmd);
  add_max_degree(order_cmd);
  order_cmd->add_flag("--gap", order_gap, "Emit the generators as a CAS Group(...) block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage;
  }
  for (auto* opt : max_degree_opts) cfg.max_degree_set |= opt->count() > 0;

  try {
    if (*shuffle_cmd) return cmd_shuffle(cfg, which, style, shuffle_gap, out);
    if (*witness_cmd) return cmd_witness(cfg, wx, wall, wverbose, out, err);
    if (*classify_cmd) return cmd_classify(cfg, out);
    if (*verify_cmd) return cmd_verify(cfg, vsweep, kmin, kmax, out);
    if (*orbit_cmd) return cmd_orbit(cfg, use_h, point, out);
    if (*pair_cmd) return cmd_pairorbit(cfg, out);
    if (*order_cmd) return cmd_order(cfg, order_gap, out);
  } catch (const ShapeError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return mismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace shufflegrp::cli
