#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "itx/circuit.hpp"

#ifndef ITX_CLI_PATH
#error "ITX_CLI_PATH must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ITX_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Writes content to a fresh file inside a per-process scratch directory.
std::string write_temp(const std::string& name, const std::string& content) {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() /
             ("itx-cli-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  std::filesystem::path p = dir / name;
  std::ofstream out(p);
  out << content;
  REQUIRE(out.good());
  return p.string();
}

}  // namespace

TEST_CASE("usage errors exit with code two") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("count-paths --graph x.g --s 0 --t 1").exit_code == 2);  // --len missing
  CHECK(run_cli("itrans --sets only.txt").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("counting walks on a three-vertex chain") {
  std::string g = write_temp("chain3.g", "3 2\n0 1 0\n1 2 0\n");
  RunResult r = run_cli("count-paths --graph " + g + " --s 0 --t 2 --len 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0:1\n");

  RunResult with_oracle = run_cli("count-paths --graph " + g + " --s 0 --t 2 --len 2 --oracle");
  CHECK(with_oracle.exit_code == 0);
  CHECK(with_oracle.output == "0:1\nMATCH\n");

  RunResult none = run_cli("count-paths --graph " + g + " --s 2 --t 0 --len 2");
  CHECK(none.exit_code == 0);
  CHECK(none.output == "0\n");
}

TEST_CASE("intersection table as tab-separated rows") {
  std::string f = write_temp("fam.txt", "0\n0 1\n");
  std::string g = write_temp("tgt.txt", "0\n1\n");
  RunResult r = run_cli("itrans --sets " + f + " --targets " + g);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "0\t[0]\t0\n"
        "0\t[1]\t1\n"
        "1\t[0]\t2\n"
        "1\t[1]\t1\n"
        "2\t[0]\t0\n"
        "2\t[1]\t0\n");

  RunResult checked = run_cli("itrans --sets " + f + " --targets " + g + " --oracle");
  CHECK(checked.exit_code == 0);
  CHECK(checked.output.find("MATCH\n") != std::string::npos);
}

TEST_CASE("intersection table with explicit values and rings") {
  std::string f = write_temp("fam2.txt", "0\n0 1\n");
  std::string g = write_temp("tgt2.txt", "0\n");
  std::string vals = write_temp("vals2.txt", "# weights\n100\n-1\n");
  RunResult big = run_cli("itrans --sets " + f + " --targets " + g + " --values " + vals);
  CHECK(big.exit_code == 0);
  CHECK(big.output == "0\t[0]\t0\n1\t[0]\t99\n2\t[0]\t0\n");

  RunResult modp = run_cli("itrans --sets " + f + " --targets " + g + " --values " + vals +
                           " --ring modp --prime 97");
  CHECK(modp.exit_code == 0);
  CHECK(modp.output == "0\t[0]\t0\n1\t[0]\t2\n2\t[0]\t0\n");

  std::string pvals = write_temp("vals2p.txt", "0:1 2:1\n1:1\n");
  RunResult poly = run_cli("itrans --sets " + f + " --targets " + g + " --values " + pvals +
                           " --ring poly");
  CHECK(poly.exit_code == 0);
  CHECK(poly.output == "0\t[0]\t0\n1\t[0]\t0:1 1:1 2:1\n2\t[0]\t0\n");

  RunResult noprime = run_cli("itrans --sets " + f + " --targets " + g + " --ring modp");
  CHECK(noprime.exit_code == 1);
  CHECK(noprime.output.find("error:") != std::string::npos);
}

TEST_CASE("circuit statistics and dumps from the command line") {
  std::string f = write_temp("fam3.txt", "\n0\n0 1\n");
  std::string g = write_temp("tgt3.txt", "0 1\n");
  std::string dump = write_temp("dump3.txt", "");
  RunResult r = run_cli("itrans --sets " + f + " --targets " + g + " --stats --dump-circuit " +
                        dump + " --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("# gates=22 adds=7 muls=6 consts=6 inputs=3\n", 0) == 0);

  std::ifstream in(dump);
  REQUIRE(in.good());
  itx::Circuit c = itx::Circuit::parse(in);
  CHECK(c.stats().gates == 22);
  CHECK(c.outputs().size() == 3);
}

TEST_CASE("disjointness and containment counting commands") {
  std::string f = write_temp("singles.txt", "0\n1\n2\n");
  std::string g = write_temp("target0.txt", "0\n");
  RunResult dj = run_cli("disjoint --sets " + f + " --targets " + g + " --oracle");
  CHECK(dj.exit_code == 0);
  CHECK(dj.output == "[0]\t2\nMATCH\n");

  std::string f2 = write_temp("three.txt", "0\n1\n0 1\n");
  std::string gall = write_temp("gall.txt", "0 1\n");
  RunResult sub = run_cli("subsets --sets " + f2 + " --targets " + gall);
  CHECK(sub.exit_code == 0);
  CHECK(sub.output == "[0 1]\t3\n");

  RunResult sub1 = run_cli("subsets --sets " + f2 + " --targets " + g + " --n 2");
  CHECK(sub1.exit_code == 0);
  CHECK(sub1.output == "[0]\t1\n");
}

TEST_CASE("cycle counting command") {
  std::string tri = write_temp("tri.g", "3 3\n0 1 0\n1 2 0\n2 0 0\n");
  RunResult r = run_cli("count-cycles --graph " + tri + " --len 3 --oracle");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0:1\nMATCH\n");
  RunResult r2 = run_cli("count-cycles --graph " + tri + " --len 2");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output == "0\n");
}

TEST_CASE("path extraction command") {
  std::string g = write_temp("chainw.g", "3 2\n0 1 1\n1 2 2\n");
  RunResult hit = run_cli("find-path --graph " + g + " --s 0 --t 2 --len 2 --weight 3");
  CHECK(hit.exit_code == 0);
  CHECK(hit.output == "0 1 2\n");
  RunResult miss = run_cli("find-path --graph " + g + " --s 0 --t 2 --len 2 --weight 1");
  CHECK(miss.exit_code == 0);
  CHECK(miss.output == "none\n");
}

TEST_CASE("data errors exit with code one and a message") {
  RunResult missing = run_cli("count-paths --graph /nonexistent.g --s 0 --t 1 --len 1");
  CHECK(missing.exit_code == 1);
  CHECK(missing.output.find("error:") != std::string::npos);

  std::string bad = write_temp("bad.g", "2 1\n0 5 0\n");
  RunResult malformed = run_cli("count-paths --graph " + bad + " --s 0 --t 1 --len 1");
  CHECK(malformed.exit_code == 1);
  CHECK(malformed.output.find("line 2") != std::string::npos);

  std::string g = write_temp("ok.g", "2 1\n0 1 0\n");
  RunResult range = run_cli("count-paths --graph " + g + " --s 0 --t 1 --len 5");
  CHECK(range.exit_code == 1);

  std::string f = write_temp("fam4.txt", "0\n1\n");
  std::string tg = write_temp("tgt4.txt", "0\n");
  std::string vals = write_temp("vals4.txt", "7\n");
  RunResult mismatch =
      run_cli("itrans --sets " + f + " --targets " + tg + " --values " + vals);
  CHECK(mismatch.exit_code == 1);
  CHECK(mismatch.output.find("expected 2 values") != std::string::npos);

  RunResult toosmall = run_cli("disjoint --sets " + f + " --targets " + tg + " --n 1");
  CHECK(toosmall.exit_code == 1);
}

TEST_CASE("benchmark line reports sizes and timings") {
  RunResult r = run_cli("bench --n 10 --len 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("n=10 len=4 support_cap=3 measured_sets=176", 0) == 0);
  CHECK(r.output.find(" gates=") != std::string::npos);
  CHECK(r.output.find(" build_ms=") != std::string::npos);
}
