#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "permdiag_cli/cli.hpp"
#include "permdiag_cli/io.hpp"

using namespace permdiag;
using namespace permdiag::testing;
using permdiag::io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.emplace_back("--format");
  args.emplace_back("json");
  const auto r = run_cli(std::move(args));
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("map prints image, partition and path") {
    const auto r = run_cli({"map", "--perm", "1 4 7 2 3 8 5 6 10 9"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "input: 1 4 7 2 3 8 5 6 10 9\n"
          "phi: 8 9 5 4 6 7 2 3 10 1\n"
          "partition: [7,7,4,3,3,3,1,1,1]\n"
          "path: UUUDDUUUDUDDDUUDDDUD\n");
  }

  TEST_CASE("map infers the inverse direction for 132-avoiders") {
    const auto r = run_cli({"map", "--perm", "8 9 5 4 6 7 2 3 10 1"});
    CHECK(r.out.find("phi_inverse: 1 4 7 2 3 8 5 6 10 9\n") != std::string::npos);
    CHECK(run_cli({"map", "--perm", "8 9 5 4 6 7 2 3 10 1", "--to", "psi-k"}).out == "UUUDDUUUDUDDDUUDDDUD\n");
    CHECK(run_cli({"map", "--path", "UUUDDUUUDUDDDUUDDDUD", "--to", "partition"}).out == "[7,7,4,3,3,3,1,1,1]\n");
    CHECK(run_cli({"map", "--partition", "[1]", "--n", "3", "--to", "mu"}).out == "[2,1]\n");
  }

  TEST_CASE("count") {
    const auto r = run_cli({"count", "--perm", "4 2 8 3 6 9 7 5 1 10", "--pattern", "1 3 2"});
    CHECK(r.code == 0);
    CHECK(r.out == "20\n");
  }

  TEST_CASE("check by diagram and by brute force agree") {
    const std::string p = "8 9 5 4 6 7 2 3 10 1";
    CHECK(run_cli({"check", "--perm", p, "--kind", "two-one-three", "--k", "5"}).out == "contains 2 1 3 4 5\n");
    CHECK(run_cli({"check", "--perm", p, "--kind", "two-one-three", "--k", "5", "--via", "bruteforce"}).out ==
          "contains 2 1 3 4 5\n");
    CHECK(run_cli({"check", "--perm", p, "--kind", "shifted", "--k", "6", "--s", "2"}).out == "avoids 2 3 4 5 6 1\n");
    CHECK(run_cli({"check", "--perm", p, "--pattern", "1 3 2"}).out == "avoids 1 3 2\n");
  }

  TEST_CASE("table and generate") {
    CHECK(run_cli({"table", "--n", "4", "--stat", "des"}).out == "0 1\n1 6\n2 6\n3 1\ntotal 14\n");
    CHECK(run_cli({"table", "--n", "10", "--closed-form", "rank_count", "--k", "3"}).out == "5625\n");
    CHECK(run_cli({"table", "--n", "10", "--closed-form", "catalan"}).out == "16796\n");
    const auto g = run_cli({"generate", "--n", "3"});
    CHECK(g.out == "1 2 3\n2 1 3\n2 3 1\n3 1 2\n3 2 1\n");
    CHECK(run_cli({"generate", "--n", "3", "--young"}).out == "[]\n[1]\n[1,1]\n[2]\n[2,1]\n");
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"map"}).code == cli::kExitUsage);
    CHECK(run_cli({"map", "--perm", "3 2 1 5 4 6 9 8 7"}).code == cli::kExitUsage);
    CHECK(run_cli({"count", "--perm", "1 1", "--pattern", "1"}).code == cli::kExitUsage);
    CHECK(run_cli({"diagram"}).code == cli::kExitUsage);
    CHECK(run_cli({"table", "--n", "4"}).code == cli::kExitUsage);
    const auto r = run_cli({"map", "--perm", "1 4 3 2"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("Not132Avoiding") != std::string::npos);
    CHECK(run_cli({"--help"}).code == 0);
  }

  TEST_CASE("verify reports and exits 0") {
    const auto r = run_cli({"verify", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("IDENT catalan-132-avoiders n=4 expected=14 got=14 PASS\n") != std::string::npos);
    const auto j = run_json({"verify", "--n-max", "3"});
    CHECK(j.at("failures") == 0);
    for (const auto& line : j.at("results")) CHECK(io::decode_identity(line).pass);
  }

  TEST_CASE("environment cap") {
    ::setenv("PERMDIAG_NMAX", "4", 1);
    CHECK(run_cli({"generate", "--n", "5"}).code == cli::kExitUsage);
    ::setenv("PERMDIAG_NMAX", "zero", 1);
    CHECK(run_cli({"generate", "--n", "3"}).code == cli::kExitUsage);
    ::unsetenv("PERMDIAG_NMAX");
    CHECK(run_cli({"generate", "--n", "5"}).code == 0);
  }

  TEST_CASE("json output round trips") {
    const auto m = run_json({"map", "--perm", "1 4 7 2 3 8 5 6 10 9"});
    CHECK(io::decode_permutation(m.at("phi")) == perm("8 9 5 4 6 7 2 3 10 1"));
    CHECK(io::decode_partition(m.at("partition")) == part({7, 7, 4, 3, 3, 3, 1, 1, 1}));
    CHECK(io::decode_path(m.at("path")).to_string() == "UUUDDUUUDUDDDUUDDDUD");
    CHECK(m.at("path").at("returns") == 2);

    const auto d = run_json({"diagram", "--perm", "4 2 8 3 6 9 7 5 1 10", "--ranks"});
    const auto ranked = io::decode_diagram(d.at("diagram"));
    const auto original = rank_diagram(perm("4 2 8 3 6 9 7 5 1 10"));
    CHECK(ranked.base() == original.base());
    CHECK(std::equal(ranked.ranks().begin(), ranked.ranks().end(), original.ranks().begin(), original.ranks().end()));
    CHECK(std::equal(ranked.essential().begin(), ranked.essential().end(), original.essential().begin(),
                     original.essential().end()));
    CHECK(d.at("rank_sum") == 20);
    CHECK(io::encode(ranked) == d.at("diagram"));

    const auto prof = run_json({"diagram", "--perm", "8 9 5 4 6 7 2 3 10 1", "--profile"});
    const auto abh = io::decode_abh(prof.at("abh"));
    CHECK(abh.h == std::vector<int>{3, 3, 1, 2, 2, 2, 1, 1, 1});
    CHECK(io::encode(abh) == prof.at("abh"));
    CHECK(io::encode(io::decode_shifted(prof.at("shifted"))) == prof.at("shifted"));

    const auto t = run_json({"table", "--n", "4", "--stat", "returns"});
    const auto table = io::decode_table(t.at("table"));
    CHECK(table.to_string() == "{1:5,2:5,3:3,4:1}");
    CHECK(io::encode(table) == t.at("table"));

    const auto c = run_json({"count", "--perm", "4 2 8 3 6 9 7 5 1 10", "--pattern", "1 3 2"});
    CHECK(c.at("occurrences") == 20);

    const auto g = run_json({"generate", "--n", "4"});
    CHECK(g.at("count") == 14);
    for (const auto& p : g.at("permutations")) CHECK(io::encode(io::decode_permutation(p)) == p);
  }
}
