#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "qcmut/cli.hpp"
#include "qcmut/io.hpp"
#include "support.hpp"

using namespace qcmut;
using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Temp file that removes itself.
class TempFile {
public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("qcmut_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string str() const { return path_.string(); }

private:
  std::filesystem::path path_;
};

const std::string kSkew3Text = "0 1 0\n-1 0 1\n0 -1 0\n";
const std::string kSym4Text = "2 1 0 1\n1 2 1 0\n0 1 2 -1\n1 0 -1 2\n";

}  // namespace

TEST_CASE("delta subcommand") {
  TempFile b(kSkew3Text);
  const RunResult res = run_cli({"delta", b.str()});
  CHECK(res.code == 0);
  CHECK(res.out.find("delta: 0") != std::string::npos);

  const RunResult jres = run_cli({"delta", b.str(), "--json"});
  CHECK(jres.code == 0);
  const json report = json::parse(jres.out);
  CHECK(report["command"] == "delta");
  CHECK(report["delta"] == 0);
}

TEST_CASE("normal-form subcommand") {
  TempFile a(kSym4Text);
  const RunResult res = run_cli({"normal-form", a.str()});
  CHECK(res.code == 0);
  CHECK(res.out.find("r=1 s=0 t=1 p=0 m=0") != std::string::npos);
  CHECK(res.out.find("verified: P^T A P = normal form (mod 4): yes") != std::string::npos);

  const RunResult jres = run_cli({"normal-form", a.str(), "--json"});
  const json report = json::parse(jres.out);
  CHECK(report["params"]["r"] == 1);
  CHECK(report["params"]["t"] == 1);
  CHECK(report["witness_verified"] == true);
  // the reported witness actually verifies against the input
  const IntMatrix p = matrix_from_json(report["witness"]);
  const IntMatrix input = matrix_from_json(report["input"]);
  const IntMatrix normal = matrix_from_json(report["normal_mod4"]);
  CHECK(equal_mod(p.transpose() * input * p, normal, 4));
}

TEST_CASE("invariants subcommand") {
  const RunResult res = run_cli({"invariants", "2 0; 0 2", "--json"});
  CHECK(res.code == 0);
  const json report = json::parse(res.out);
  CHECK(report["radical_dims"]["d0"] == 2);
  CHECK(report["radical_dims"]["d00"] == 1);
  CHECK(report["radical_dims"]["d000"] == 0);
  CHECK(report["form_class"]["label"] == "(iii)");
  CHECK(report["det_mod4"] == 0);
  CHECK(report["det_mod4_classified"] == 0);
  CHECK(report["params"]["p"] == 2);
}

TEST_CASE("congruent subcommand with witness and oracle") {
  const RunResult res = run_cli({"congruent", "[[2,1],[1,2]]", "[[2,-1],[-1,2]]", "--json"});
  CHECK(res.code == 0);
  const json report = json::parse(res.out);
  CHECK(report["congruent"] == true);
  CHECK(report["witness_verified"] == true);

  const RunResult ores =
      run_cli({"congruent", "[[2,1],[1,2]]", "[[0,1],[1,0]]", "--oracle", "--json"});
  CHECK(ores.code == 0);
  const json oreport = json::parse(ores.out);
  CHECK(oreport["method"] == "oracle");
  CHECK(oreport["congruent"] == false);

  // oracle is capped at n <= 3
  TempFile big(kSym4Text);
  const RunResult too_big = run_cli({"congruent", big.str(), big.str(), "--oracle"});
  CHECK(too_big.code == 1);
  CHECK(too_big.err.find("TooLarge") != std::string::npos);
}

TEST_CASE("congruent rejects unequal dimensions with exit 1") {
  TempFile a("2 1\n1 2\n");
  TempFile b("2\n");
  const RunResult res = run_cli({"congruent", a.str(), b.str()});
  CHECK(res.code == 1);
  CHECK(res.err.find("DimensionMismatch") != std::string::npos);
}

TEST_CASE("mutate subcommand") {
  TempFile b(kSkew3Text);
  const RunResult res = run_cli({"mutate", b.str(), "--seq", "2"});
  CHECK(res.code == 0);
  CHECK(res.out == "0 -1 1\n1 0 -1\n-1 1 0\n");

  const RunResult involution = run_cli({"mutate", b.str(), "--seq", "2,2"});
  CHECK(involution.out == kSkew3Text);

  const RunResult bad = run_cli({"mutate", b.str(), "--seq", "7"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("IndexOutOfRange") != std::string::npos);
}

TEST_CASE("companion subcommand") {
  TempFile b(kSkew3Text);
  const RunResult res = run_cli({"companion", b.str()});
  CHECK(res.code == 0);
  CHECK(res.out == "2 1 0\n1 2 1\n0 1 2\n");

  TempFile signs("1 -1 1\n-1 1 1\n1 1 1\n");
  const RunResult sres = run_cli({"companion", b.str(), "--signs", signs.str()});
  CHECK(sres.code == 0);
  CHECK(sres.out == "2 -1 0\n-1 2 1\n0 1 2\n");
}

TEST_CASE("scan subcommand") {
  TempFile b(kSkew3Text);
  const RunResult res =
      run_cli({"scan", b.str(), "--depth", "6", "--max-nodes", "500", "--json"});
  CHECK(res.code == 0);
  const json report = json::parse(res.out);
  CHECK(report["delta_values"] == json::array({0}));
  CHECK(report["form_classes"].size() == 1);
  CHECK(report["companion_det_mod4"] == json::array({0}));
  CHECK(report["involution_violations"] == 0);
}

TEST_CASE("selftest subcommand") {
  const RunResult res = run_cli({"selftest"});
  CHECK(res.code == 0);
  CHECK(res.out.find("selftest passed") != std::string::npos);
  CHECK(res.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"normal-form"}).code == 2);  // missing matrix
  CHECK(run_cli({"mutate", "0 1; -1 0"}).code == 2);  // missing --seq
}

TEST_CASE("validation errors exit with 1") {
  const RunResult odd = run_cli({"normal-form", "1 0; 0 2"});
  CHECK(odd.code == 1);
  CHECK(odd.err.find("OddDiagonal") != std::string::npos);

  const RunResult notskew = run_cli({"delta", "0 1; 1 0"});
  CHECK(notskew.code == 1);
  CHECK(notskew.err.find("NotSkew") != std::string::npos);

  const RunResult garbage = run_cli({"delta", "0 x; -1 0"});
  CHECK(garbage.code == 1);
  CHECK(garbage.err.find("BadInteger") != std::string::npos);
}

TEST_CASE("matrix text round-trips exactly") {
  test::Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = test::uniform(rng, 1, 6);
    const IntMatrix m = test::random_sym_even(n, 9, rng);
    CHECK(parse_matrix_text(m.to_text()) == m);
  }
  // comments and blank lines are ignored
  CHECK(parse_matrix_text("# header\n\n2 1 # inline\n1 2\n") == IntMatrix{{2, 1}, {1, 2}});
}

TEST_CASE("matrix json round-trips, including huge entries") {
  IntMatrix m(2);
  m.at(0, 0) = Int("123456789012345678901234567890");
  m.at(0, 1) = -7;
  m.at(1, 0) = -7;
  m.at(1, 1) = Int("-999999999999999999999999999999999");
  const json j = matrix_to_json(m);
  CHECK(j["entries"][0][0].is_string());
  CHECK(j["entries"][0][1].is_number_integer());
  CHECK(matrix_from_json(j) == m);

  // plain text also carries arbitrary precision
  CHECK(parse_matrix_text(m.to_text()) == m);
}

TEST_CASE("inline matrix arguments") {
  CHECK(load_matrix_arg("2 1; 1 2") == IntMatrix{{2, 1}, {1, 2}});
  CHECK(load_matrix_arg("[[2,1],[1,2]]") == IntMatrix{{2, 1}, {1, 2}});
  CHECK(load_matrix_arg("{\"n\":2,\"entries\":[[2,1],[1,2]]}") == IntMatrix{{2, 1}, {1, 2}});
  CHECK_THROWS_AS(load_matrix_arg("2 1; 1"), ValidationError);
  CHECK_THROWS_AS(load_matrix_arg(""), ValidationError);
  CHECK_THROWS_AS(load_matrix_arg("[[2,1],[1,2]"), ValidationError);
}
