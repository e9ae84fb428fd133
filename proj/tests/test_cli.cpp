#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hamlim/cli.hpp"
#include "hamlim/instances.hpp"
#include "hamlim/io.hpp"
#include "test_util.hpp"

using namespace hamlim;
using namespace hamlim::testutil;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("matrix json round trip is exact") {
  Rng rng(211);
  const HermitianMatrix h = random_hermitian(9, rng);
  const HermitianMatrix back = matrix_from_json(matrix_to_json(h));
  CHECK(max_entry_diff(h, back) == 0.0);

  const StateVector psi = random_unit_state(11, rng);
  const StateVector psi_back = statevec_from_json(statevec_to_json(psi));
  CHECK(max_abs_diff(psi, psi_back) == 0.0);
}

TEST_CASE("zero tolerance strips tiny loaded entries") {
  HermitianMatrix h(2);
  h.set(0, 1, cplx(1e-14, 0.0));
  h.set(0, 0, 1.0);
  const HermitianMatrix cleaned = matrix_from_json(matrix_to_json(h), 1e-12);
  CHECK(cleaned(0, 1) == cplx(0.0));
  CHECK(cleaned(0, 0) == cplx(1.0));
}

TEST_CASE("chain subcommand exercises generated instances") {
  const CliRun r = run({"chain", "--make", "hadamard", "--n", "4", "--no-timestamp"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_ok\":true") != std::string::npos);
  CHECK(r.out.find("\"abs_spectral\":4.0") != std::string::npos);
}

TEST_CASE("adversary subcommand reports the exact ratio") {
  const CliRun r = run({"adversary", "--M", "4", "--B", "2", "--no-timestamp"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ratio_num\":3") != std::string::npos);
  CHECK(r.out.find("\"ratio_den\":2") != std::string::npos);
}

TEST_CASE("missing input file exits with code 2") {
  const CliRun r = run({"norms", "--in", "does-not-exist.json"});
  CHECK(r.exit_code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("unknown flags are rejected") {
  const CliRun r = run({"norms", "--make", "identity", "--n", "3", "--bogus"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage without a subcommand exits with code 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"definitely-not-a-subcommand"}).exit_code == 2);
}

TEST_CASE("domain errors exit with code 2") {
  const CliRun r = run({"cost", "--make", "identity", "--n", "2", "--t", "1", "--delta", "2"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("experiments exit 0 on pass and emit reports") {
  const CliRun parity = run({"parity-demo", "--bits", "1011", "--no-timestamp"});
  CHECK(parity.exit_code == 0);
  CHECK(parity.out.find("\"pass\":true") != std::string::npos);

  const CliRun sign = run({"sign-demo", "--M", "20", "--seed", "9", "--no-timestamp"});
  CHECK(sign.exit_code == 0);

  const CliRun ff = run({"fastforward", "--n", "3", "--no-timestamp"});
  CHECK(ff.exit_code == 0);
}

TEST_CASE("identical argv and seed give byte-identical json") {
  const std::vector<std::string> argv = {"tail", "--M", "21",    "--d",           "1",
                                         "--trials", "50",  "--seed", "777", "--no-timestamp"};
  const CliRun a = run(argv);
  const CliRun b = run(argv);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const CliRun c = run({"sign-demo", "--M", "24", "--seed", "5", "--no-timestamp"});
  const CliRun d = run({"sign-demo", "--M", "24", "--seed", "5", "--no-timestamp"});
  CHECK(c.out == d.out);
}

TEST_CASE("--out writes the same report to a file") {
  const std::string path = "hamlim_test_out.json";
  const CliRun r = run({"norms", "--make", "identity", "--n", "3", "--no-timestamp", "--out", path});
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == r.out);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("make pipes into analyses through files") {
  const std::string path = "hamlim_test_line.json";
  const CliRun made = run({"make", "line", "--N", "8", "--out", path});
  CHECK(made.exit_code == 0);
  const CliRun chained = run({"chain", "--in", path, "--no-timestamp"});
  CHECK(chained.exit_code == 0);
  CHECK(chained.out.find("\"all_ok\":true") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("csv format emits fixed columns") {
  const CliRun r = run({"chain", "--make", "identity", "--n", "4", "--format", "csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("chain,name,lhs,rhs,slack,ok", 0) == 0);
}

TEST_CASE("HAMLIM_SEED env var supplies the default seed") {
  setenv("HAMLIM_SEED", "314", 1);
  const CliRun from_env = run({"make", "circulant", "--M", "9"});
  unsetenv("HAMLIM_SEED");
  const CliRun from_flag = run({"make", "circulant", "--M", "9", "--seed", "314"});
  const CliRun other = run({"make", "circulant", "--M", "9", "--seed", "315"});
  CHECK(from_env.exit_code == 0);
  CHECK(from_env.out == from_flag.out);
  CHECK(from_env.out != other.out);
}

TEST_CASE("decompose emits the star-forest schema") {
  const CliRun r = run({"decompose", "--make", "circulant", "--signs", "+-+", "--no-timestamp"});
  CHECK(r.exit_code == 0);
  const auto obj = nlohmann::json::parse(r.out);
  REQUIRE(obj.contains("decomposition"));
  const auto& d = obj["decomposition"];
  REQUIRE(d.contains("forests"));
  std::size_t edges = 0;
  for (const auto& forest : d["forests"]) {
    for (const auto& star : forest) {
      REQUIRE(star.contains("center"));
      REQUIRE(star.contains("leaves"));
      REQUIRE(star.contains("weights"));
      CHECK(star["leaves"].size() == star["weights"].size());
      edges += star["leaves"].size();
      for (const auto& w : star["weights"]) {
        REQUIRE(w.is_array());
        CHECK(w.size() == 2);
      }
    }
  }
  CHECK(edges == d["source_edge_count"].get<std::size_t>());
  CHECK(obj["report"]["all_ok"].get<bool>());
}

TEST_CASE("help text names the claims") {
  const CliRun r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("chain") != std::string::npos);
  const CliRun sub = run({"sign-demo", "--help"});
  CHECK(sub.exit_code == 0);
  CHECK(sub.out.find("lambda_0") != std::string::npos);
}

}  // TEST_SUITE
