#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "shufflegrp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = shufflegrp::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("shuffle") {
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "sigma"}).out == "0 3 1 4 2 5\n");
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "rho:01"}).out == "2 3 0 1 4 5\n");
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "rho:1,0,2"}).out == "2 3 0 1 4 5\n");
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "sigma", "--style", "cycles"}).out ==
        "(1,3,4,2)\n");
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "rho:03"}).code == 2);
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "rho:0,0,1"}).code == 2);
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "nonsense"}).code == 2);
  const auto perfect = run({"shuffle", "-k", "3", "-n", "2", "perfect"});
  CHECK(perfect.code == 0);
  CHECK(std::count(perfect.out.begin(), perfect.out.end(), '\n') == 6);
  CHECK(run({"shuffle", "-k", "3", "-n", "2", "rho:01", "--gap"}).out ==
        "gens := [ (1,3)(2,4) ];\n");
}

TEST_CASE("witness") {
  const auto one = run({"witness", "-n", "6", "-x", "1"});
  CHECK(one.code == 0);
  CHECK(one.out == "b\n1 -> 0 OK\n");
  const auto all = run({"witness", "-n", "6", "--all"});
  CHECK(all.code == 0);
  CHECK(all.out.rfind("17/17 OK\n", 0) == 0);
  const auto pow3 = run({"witness", "-n", "9", "-x", "1"});
  CHECK(pow3.code == 2);
  CHECK(pow3.err.find("power of 3") != std::string::npos);
  CHECK(run({"witness", "-n", "6", "-x", "17"}).code == 2);
  CHECK(run({"witness", "-n", "6", "-x", "18"}).code == 2);
  CHECK(run({"witness", "-n", "6"}).code == 2);
  CHECK(run({"witness", "-n", "6", "-x", "1", "--all"}).code == 2);
  const auto sampled = run({"witness", "-n", "3072", "--sample", "20", "--seed", "5"});
  CHECK(sampled.code == 0);
  CHECK(sampled.out.rfind("20/20 OK", 0) == 0);
}

TEST_CASE("classify and verify") {
  CHECK(run({"classify", "-k", "3", "-n", "9"}).out == "WreathSymCyclic e=2, order 648\n");
  const auto k2 = run({"classify", "-k", "2", "-n", "4"});
  CHECK(k2.code == 2);
  CHECK(k2.err.find("k=2 out of scope") != std::string::npos);
  const auto sweep = run({"verify", "--sweep", "--max-degree", "36"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("86/86 match") != std::string::npos);
  CHECK(run({"verify", "-k", "4", "-n", "2"}).code == 0);
  CHECK(run({"verify", "-k", "5", "-n", "10", "--max-degree", "20"}).code == 2);
}

TEST_CASE("engine front-ends") {
  CHECK(run({"pairorbit", "-k", "3", "-n", "6"}).out == "306 = 18*17: 2-transitive\n");
  CHECK(run({"pairorbit", "-k", "3", "-n", "9"}).out.find("not 2-transitive") !=
        std::string::npos);
  CHECK(run({"order", "-k", "4", "-n", "2"}).out == "1344\n");
  CHECK(run({"order", "-k", "3", "-n", "6"}).out == "6402373705728000\n");
  CHECK(run({"orbit", "-k", "3", "-n", "6", "--stabilizer-H", "0"}).out == "17\n");
  CHECK(run({"orbit", "-k", "3", "-n", "6", "0"}).out == "18\n");
  CHECK(run({"order", "-k", "3", "-n", "2", "--gap"}).out.rfind("G := Group([ ", 0) == 0);
}

TEST_CASE("json output is canonical and repeatable") {
  const std::vector<std::string> args = {"witness", "-n", "12", "--sample", "10",
                                         "--seed", "3", "--format", "json"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["seed"] == 3);
  CHECK(j.dump() + "\n" == a.out);

  const auto c = run({"classify", "-k", "4", "-n", "8", "--format", "json"});
  CHECK(c.out ==
        R"({"k":4,"n":8,"predicted_class":"AffineOdd2 e=2","predicted_order":"319979520"})"
        "\n");
  CHECK(run({"order", "-k", "3", "-n", "6", "--format", "json"}).out ==
        R"({"k":3,"n":6,"order":"6402373705728000"})"
        "\n");
  CHECK(run({"order", "-k", "3", "-n", "6", "--format", "xml"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"order", "-k", "3"}).code == 2);
}

}  // TEST_SUITE
