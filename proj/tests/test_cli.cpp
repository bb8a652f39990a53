#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "wsync/cli.hpp"
#include "wsync/text_io.hpp"

#include "fixtures.hpp"

using namespace wsync;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / fs::path("wsync-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string slot(const std::string& name) const { return (path / name).string(); }
};

const char* kW2 =
    "alphabet: a b c\n"
    "states: s0 s1 s2\n"
    "s0 a s1\ns0 b s0\ns0 c s0\n"
    "s1 a s1\ns1 b s1\ns1 c s2\n"
    "s2 a s2\ns2 b s2\ns2 c s2\n";

const char* kTwoCycle =
    "alphabet: a\n"
    "states: p q\n"
    "p a q\nq a p\n";

}  // namespace

TEST_CASE("check-waa distinguishes yes and no with evidence") {
  TempDir dir;
  auto ok = cli({"check-waa", dir.file("w2.aut", kW2)});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("order: s0 s1 s2") != std::string::npos);

  auto bad = cli({"check-waa", dir.file("cycle.aut", kTwoCycle)});
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("cycle:") != std::string::npos);

  auto bad_json = cli({"check-waa", dir.file("cycle.aut", kTwoCycle), "--json"});
  CHECK(bad_json.out.find("\"cycle\":[") != std::string::npos);
}

TEST_CASE("constr-sync emits a stable result record") {
  TempDir dir;
  std::string w2 = dir.file("w2.aut", kW2);
  auto result = cli({"constr-sync", "--constraint", "(a+b)*c", w2, "--witness", "--json"});
  CHECK(result.exit_code == 0);
  CHECK(result.out ==
        "{\"schema\":1,\"decision\":\"yes\",\"witness\":\"abc\",\"witness_length\":3,"
        "\"method\":\"poly/suffix-c\",\"label\":{\"language\":\"(a+b)*c\","
        "\"general\":\"PSPACE-complete\",\"waa\":\"P\"}}\n");

  auto human = cli({"constr-sync", "--constraint", "(a+b)*c", w2, "--witness"});
  CHECK(human.out.find("yes\nwitness: abc\nmethod: poly/suffix-c\n") != std::string::npos);

  // Timings only appear when asked for, keeping default output deterministic.
  auto stats = cli({"constr-sync", "--constraint", "sigma-star", w2, "--json", "--stats"});
  CHECK(stats.out.find("\"stats\":{\"states_explored\":") != std::string::npos);
  CHECK(stats.out.find("\"elapsed_ms\":") != std::string::npos);
}

TEST_CASE("sync and subset commands answer with exit codes") {
  TempDir dir;
  std::string w2 = dir.file("w2.aut", kW2);
  CHECK(cli({"sync", w2, "--witness"}).exit_code == 0);
  CHECK(cli({"into-subset", w2, "--target", "s2"}).exit_code == 0);
  CHECK(cli({"into-subset", w2, "--target", "s0"}).exit_code == 1);
  CHECK(cli({"from-subset", w2, "--set", "s0,s1"}).exit_code == 0);
  CHECK(cli({"transport", w2, "--set", "s0", "--target", "s2"}).exit_code == 0);
  CHECK(cli({"transport", w2, "--set", "s2", "--target", "s0"}).exit_code == 1);

  auto cyc = cli({"sync", dir.file("cycle.aut", kTwoCycle)});
  CHECK(cyc.exit_code == 2);
  CHECK(cyc.err.find("WaaRequired") != std::string::npos);
}

TEST_CASE("reduce-sat round-trips through the solver") {
  TempDir dir;
  std::string cnf = dir.file("sat.cnf", "p cnf 1 1\n1 0\n");
  std::string out_aut = dir.slot("sat.aut");
  auto reduced = cli({"reduce-sat", cnf, "--case", "a(b+c)*", "-o", out_aut});
  CHECK(reduced.exit_code == 0);
  CHECK(cli({"constr-sync", "--constraint", "a(b+c)*", out_aut}).exit_code == 0);

  std::string unsat = dir.file("unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
  std::string unsat_aut = dir.slot("unsat.aut");
  CHECK(cli({"reduce-sat", unsat, "--case", "a(b+c)*", "-o", unsat_aut}).exit_code == 0);
  CHECK(cli({"constr-sync", "--constraint", "a(b+c)*", unsat_aut}).exit_code == 1);

  CHECK(cli({"reduce-sat", cnf, "--case", "(a+b)*c", "-o", out_aut}).exit_code == 2);
}

TEST_CASE("reduce-transport emits both files and the named constraint works") {
  TempDir dir;
  std::string w2 = dir.file("w2.aut", kW2);
  std::string out_aut = dir.slot("red.aut");
  std::string out_pdfa = dir.slot("red.pdfa");
  auto reduced = cli({"reduce-transport", w2, "--set", "s0", "--target", "s2", "-o", out_aut,
                      "--emit-constraint", out_pdfa});
  CHECK(reduced.exit_code == 0);
  CHECK(cli({"constr-sync", "--constraint", out_pdfa, out_aut, "--witness"}).exit_code == 0);
  CHECK(cli({"constr-sync", "--constraint", "a-sigma-star-b", out_aut}).exit_code == 0);
}

TEST_CASE("classify reports labels and unknown for oversized constraints") {
  auto labeled = cli({"classify", "--constraint", "a*b(b+c)*", "--json"});
  CHECK(labeled.out ==
        "{\"schema\":1,\"language\":\"a*b(b+c)*\",\"general\":\"PSPACE-complete\","
        "\"waa\":\"NP-complete\"}\n");

  TempDir dir;
  std::string big = dir.file("big.pdfa",
                             "alphabet: a\nstates: p0 p1 p2\ninitial: p0\naccepting: p2\n"
                             "p0 a p1\np1 a p2\n");
  auto unknown = cli({"classify", "--constraint", big});
  CHECK(unknown.exit_code == 0);
  CHECK(unknown.out.find("unknown") != std::string::npos);
}

TEST_CASE("input problems exit with code 2 and a diagnostic") {
  TempDir dir;
  auto missing = cli({"check-waa", dir.slot("nope.aut")});
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("error") != std::string::npos);

  std::string incomplete = dir.file("partial.aut", "alphabet: a b\nstates: s\ns a s\n");
  auto parse = cli({"check-waa", incomplete});
  CHECK(parse.exit_code == 2);
  CHECK(parse.err.find("missing transition") != std::string::npos);

  std::string big_states;
  big_states += "alphabet: a\nstates:";
  for (int i = 0; i < 25; ++i) big_states += " s" + std::to_string(i);
  big_states += "\n";
  for (int i = 0; i < 25; ++i)
    big_states += "s" + std::to_string(i) + " a s" + std::to_string(std::min(i + 1, 24)) + "\n";
  std::string chain = dir.file("chain.aut", big_states);
  auto guarded = cli({"from-subset", chain, "--set", "s0,s1"});
  CHECK(guarded.exit_code == 2);
  CHECK(guarded.err.find("--max-states") != std::string::npos);
  CHECK(cli({"from-subset", chain, "--set", "s0,s1", "--max-states", "30"}).exit_code == 0);
}

TEST_CASE("selftest battery passes") {
  auto result = cli({"selftest", "--seed", "7"});
  CHECK(result.exit_code == 0);
  CHECK(result.out.find("selftest passed") != std::string::npos);
}
