#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end runs of the installed command. The binary location comes from
// TTMEASURE_BIN and the shipped track files from TTMEASURE_TRACKS (both set
// by the test harness).

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string bin_path() {
  const char* p = std::getenv("TTMEASURE_BIN");
  REQUIRE_MESSAGE(p != nullptr, "TTMEASURE_BIN not set");
  return p;
}

std::string tracks_dir() {
  const char* p = std::getenv("TTMEASURE_TRACKS");
  REQUIRE_MESSAGE(p != nullptr, "TTMEASURE_TRACKS not set");
  return p;
}

RunResult run_with(const std::string& args, const std::string& redirect) {
  const std::string cmd = "'" + bin_path() + "' " + args + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// stdout only; stderr dropped.
RunResult run(const std::string& args) { return run_with(args, " 2>/dev/null"); }
// stdout and stderr interleaved.
RunResult run_all(const std::string& args) { return run_with(args, " 2>&1"); }

std::string temp_file(const std::string& name, const std::string& content) {
  const char* dir = std::getenv("TMPDIR");
  std::string path = std::string(dir ? dir : "/tmp") + "/ttmeasure-test-" + name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  REQUIRE(f.good());
  f << content;
  f.close();
  return path;
}

}  // namespace

TEST_CASE("ratio: built-in charts") {
  RunResult r = run("ratio --builtin tau05");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "source=tau05 g=0 n=5 dim=4 pf=4 ratio=4 expected=4 verdict=OK\n");

  RunResult r21 = run("ratio --builtin tau21");
  CHECK(r21.code == 0);
  CHECK(r21.out ==
        "source=tau21 g=2 n=1 dim=8 pf=-4 ratio=4 expected=4 verdict=OK\n");
}

TEST_CASE("ratio: track file from disk") {
  RunResult r = run("ratio '" + tracks_dir() + "/sigma04-tau.json'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "source=sigma04-tau g=0 n=4 dim=2 pf=-2 ratio=2 expected=2 verdict=OK\n");

  RunResult rp = run("ratio '" + tracks_dir() + "/sigma04-tauprime.json'");
  CHECK(rp.code == 0);
  CHECK(rp.out ==
        "source=sigma04-tauprime g=0 n=4 dim=2 pf=2 ratio=2 expected=2 "
        "verdict=OK\n");
}

TEST_CASE("ratio: input errors exit 2") {
  RunResult unknown = run_all("ratio --builtin nope");
  CHECK(unknown.code == 2);
  CHECK(unknown.out.find("unknown built-in") != std::string::npos);

  CHECK(run("ratio").code == 2);  // neither source
  CHECK(run("ratio somefile.json --builtin tau05").code == 2);  // both

  std::string bad = temp_file("bad.json", "{ bad");
  RunResult malformed = run_all("ratio '" + bad + "'");
  CHECK(malformed.code == 2);
  CHECK(malformed.out.find("malformed JSON at byte") != std::string::npos);
}

TEST_CASE("ratio: degenerate chart is a computation failure, exit 1") {
  std::string degenerate = temp_file("degenerate.json", R"({
    "name": "degenerate",
    "branches": ["u", "v", "w"],
    "switches": [{"pair": ["u", "v"], "single": "w"},
                 {"pair": ["v", "u"], "single": "w"}]
  })");
  RunResult r = run_all("ratio '" + degenerate + "'");
  CHECK(r.code == 1);
  CHECK(r.out.find("singular") != std::string::npos);
}

TEST_CASE("family: report and form dump") {
  RunResult r = run("family --g 2 --n 1");
  CHECK(r.code == 0);
  CHECK(r.out == "g=2 n=1 dim=8 pf=-4 ratio=4 expected=4 verdict=OK\n");

  RunResult dump = run("family --g 2 --n 1 --dump-form");
  CHECK(dump.code == 0);
  CHECK(dump.out ==
        "term 1/2 d(y1) ^ d(y2)\n"
        "term 1/2 d(y2) ^ d(y3 + y4)\n"
        "term 1/2 d(-y2 + y3 + y4) ^ d(y1)\n"
        "term 1 d(y3) ^ d(y4)\n"
        "term 1/2 d(y3 + y4) ^ d(y5)\n"
        "term 1/2 d(y5) ^ d(y1 + y2)\n"
        "term 1/2 d(y1 + y2 - y5) ^ d(y3 + y4 - y5)\n"
        "term 1 d(y1 + y2 + y3 + y4 - 2*y5) ^ d(y6)\n"
        "term 1 d(y7) ^ d(y8)\n"
        "g=2 n=1 dim=8 pf=-4 ratio=4 expected=4 verdict=OK\n");
}

TEST_CASE("family: unsupported type exits 3, missing option exits 2") {
  RunResult r = run_all("family --g 1 --n 1");
  CHECK(r.code == 3);
  CHECK(r.out.find("no model for (g=1, n=1)") != std::string::npos);

  CHECK(run("family --g 2").code == 2);
}

TEST_CASE("sweep: interleaved skips, summary, determinism") {
  RunResult r = run("sweep --max 2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "g=0 n=3 verdict=SKIP\n"
        "g=0 n=4 verdict=SKIP\n"
        "g=0 n=5 dim=4 pf=4 ratio=4 expected=4 verdict=OK\n"
        "g=1 n=1 verdict=SKIP\n"
        "g=1 n=2 dim=4 pf=2 ratio=2 expected=2 verdict=OK\n"
        "summary cases=2 ok=2 mismatch=0 skipped=3\n");

  RunResult a = run("sweep --max 4");
  RunResult b = run("sweep --max 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-for-byte reproducible
  CHECK(a.out.find("summary cases=8 ok=8 mismatch=0 skipped=3\n") !=
        std::string::npos);
}

TEST_CASE("euclid-demo: pinned transcript") {
  RunResult r = run("euclid-demo");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "tau: 12  tau': 75  distinct: true\n"
        "sqrt(tau) ~ 3.464101615137\n"
        "sqrt(tau') ~ 8.660254037844\n");
}

TEST_CASE("check: healthy track file") {
  RunResult r = run("check '" + tracks_dir() + "/sigma04-tau.json'");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "check=dimension dim=2 expected=2 verdict=OK\n"
        "check=saturation trivial-factors=true verdict=OK\n"
        "check=nondegenerate pf=-2 verdict=OK\n"
        "check=positivity positive-point=true verdict=OK\n");
}

TEST_CASE("check: odd-dimensional metadata-free track fails") {
  std::string odd = temp_file("odd.json", R"({
    "name": "odd",
    "branches": ["a", "b", "c"],
    "switches": [{"pair": ["a", "b"], "single": "c"},
                 {"pair": ["c", "a"], "single": "b"}]
  })");
  RunResult r = run("check '" + odd + "'");
  CHECK(r.code == 1);
  CHECK(r.out ==
        "check=dimension dim=1 expected=? verdict=N/A\n"
        "check=saturation trivial-factors=true verdict=OK\n"
        "check=nondegenerate verdict=FAIL reason=odd-dimension\n"
        "check=positivity positive-point=false verdict=FAIL\n");
}

TEST_CASE("identities: capped run passes everything") {
  RunResult r = run("identities --max 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("identity=box-cube chain=closed i=1 verdict=PASS\n") !=
        std::string::npos);
  CHECK(r.out.find("identity=box-cube chain=punctured i=3 verdict=PASS\n") !=
        std::string::npos);
  CHECK(r.out.find("identity=step kind=puncture g=0 n=5 verdict=PASS\n") !=
        std::string::npos);
  CHECK(r.out.find("identity=step kind=puncture g=2 n=1 verdict=PASS\n") !=
        std::string::npos);
  CHECK(r.out.find(" verdict=FAIL") == std::string::npos);
  // 6 box-cube identities + 7 reachable steps under the cap.
  CHECK(r.out.find("summary total=13 passed=13 failed=0\n") !=
        std::string::npos);
}

TEST_CASE("top-level usage errors") {
  CHECK(run("").code == 2);           // a subcommand is required
  CHECK(run("frobnicate").code == 2); // unknown subcommand
  CHECK(run("--help").code == 0);
}
