#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "coverbound/generators.hpp"
#include "coverbound/io.hpp"

using json = nlohmann::json;

namespace {

// Runs the installed binary with the given arguments, capturing stdout.
// stderr goes to the caller's stderr unless the arguments redirect it.
struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* p = std::getenv("COVERBOUND_BIN");
  REQUIRE_MESSAGE(p != nullptr, "COVERBOUND_BIN must point at the CLI binary");
  return p;
}

RunResult run(const std::string& args) {
  std::string cmd = binary_path() + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& leaf) {
  return "/tmp/coverbound_test_" + std::to_string(getpid()) + "_" + leaf;
}

std::string cycle5_csv() {
  std::string path = temp_path("cycle5.csv");
  coverbound::write_distance_csv_file(coverbound::cycle_metric(5), path);
  return path;
}

}  // namespace

TEST_CASE("bound emits the schema with the covering value") {
  RunResult r = run("bound --generate cycle:5 --problem cover --level 1 --format json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);

  CHECK(rep["schema_version"] == "1");
  CHECK(rep["instance"]["kind"] == "cycle");
  CHECK(rep["instance"]["n"] == 5);
  CHECK(rep["problem"] == "cover");
  CHECK(rep["level"] == 1);
  CHECK(rep["status"] == "optimal");
  CHECK(std::fabs(rep["bound"].get<double>() - 5.0 / 3.0) <= 1e-5);
  CHECK(rep["certified_lower_bound"].get<double>() <= rep["bound"].get<double>() + 1e-12);
  CHECK(std::fabs(rep["volume_bound"].get<double>() - 5.0 / 3.0) <= 1e-9);
  CHECK(rep["exact"] == 2);
  CHECK(rep["greedy"].is_number_integer());
  CHECK(rep["residuals"]["primal"].is_number());
  CHECK(rep["residuals"]["gap"].is_number());
  CHECK(rep["iterations"].is_number_integer());
  CHECK(rep["wall_time_ms"].is_number());

  // Fixed key order keeps downstream parsers simple.
  std::size_t a = r.out.find("\"schema_version\"");
  std::size_t b = r.out.find("\"instance\"");
  std::size_t c = r.out.find("\"bound\"");
  std::size_t d = r.out.find("\"wall_time_ms\"");
  CHECK(a < b);
  CHECK(b < c);
  CHECK(c < d);
}

TEST_CASE("bound on the complete graph collapses to one") {
  RunResult r = run("bound --generate complete:4 --problem cover --level 1 --format json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(std::fabs(rep["bound"].get<double>() - 1.0) <= 1e-5);
}

TEST_CASE("bound solves the packing relaxation at level 2") {
  RunResult r = run("bound --generate cycle:5 --problem pack --level 2 --format json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(std::fabs(rep["bound"].get<double>() - 2.0) <= 1e-4);
  CHECK(rep["certified_lower_bound"].is_null());
  CHECK(rep["volume_bound"].is_null());
  CHECK(rep["exact"] == 2);
}

TEST_CASE("bound reads metric instances for the separated relaxation") {
  std::string csv = cycle5_csv();
  RunResult r = run("bound --metric " + csv +
                    " --problem cover_separated --r 1 --eps 0.5 --format json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(std::fabs(rep["bound"].get<double>() - 5.0 / 3.0) <= 1e-5);
  CHECK(rep["problem"] == "cover_separated");
  std::remove(csv.c_str());
}

TEST_CASE("bound exit codes distinguish input errors from early stops") {
  CHECK(run("bound --generate nosuch:3 --problem cover 2>/dev/null").exit_code == 1);
  CHECK(run("bound --generate cycle:5 --problem cover --level 4 2>/dev/null").exit_code == 1);
  CHECK(run("bound --problem cover 2>/dev/null").exit_code == 1);
  CHECK(run("bound --generate cycle:5 --problem pack --r 1 2>/dev/null").exit_code == 1);
  CHECK(run("bound --metric /nonexistent.csv --problem cover_separated --r 1 --eps 0.5 2>/dev/null")
            .exit_code == 1);

  RunResult capped = run("bound --generate cycle:5 --problem cover --level 4 2>&1");
  CHECK(capped.out.find("--allow-high-level") != std::string::npos);
  CHECK(run("bound --generate complete:2 --problem cover --level 4 --allow-high-level "
            "--format json 2>/dev/null").exit_code == 0);

  // A starved iteration budget still reports, but exits 2.
  RunResult starved =
      run("bound --generate cycle:5 --problem cover --max-iter 10 --format json 2>/dev/null");
  CHECK(starved.exit_code == 2);
  json rep = json::parse(starved.out);
  CHECK(rep["status"] == "max_iter");
  CHECK(rep["certified_lower_bound"].is_number());
}

TEST_CASE("family cap environment override is honored and named") {
  RunResult r = run("bound --generate cycle:5 --problem cover 2>&1");
  CHECK(r.exit_code == 0);
  std::string cmd = "COVERBOUND_CAP_FAMILY=10 " + binary_path() +
                    " bound --generate cycle:5 --problem cover 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 1);
  CHECK(out.find("10") != std::string::npos);
}

TEST_CASE("bound writes sdpa dumps and report files on request") {
  std::string sdpa = temp_path("dump.dat-s");
  std::string outp = temp_path("report.json");
  RunResult r = run("bound --generate cycle:5 --problem cover --dump-sdpa " + sdpa +
                    " --out " + outp + " --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());

  std::ifstream sf(sdpa);
  REQUIRE(sf.good());
  std::stringstream ss;
  ss << sf.rdbuf();
  CHECK(ss.str().find("= mDIM") != std::string::npos);

  std::ifstream rf(outp);
  REQUIRE(rf.good());
  json rep = json::parse(rf);
  CHECK(std::fabs(rep["bound"].get<double>() - 5.0 / 3.0) <= 1e-5);
  std::remove(sdpa.c_str());
  std::remove(outp.c_str());
}

TEST_CASE("csv bound reports use the fixed column order") {
  RunResult r = run("bound --generate cycle:5 --problem cover --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("instance_kind,instance_params,n,problem,level,bound,status,"
                    "certified_lower_bound,volume_bound,exact,greedy,residual_primal,"
                    "residual_gap,iterations,wall_time_ms\n", 0) == 0);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  REQUIRE(std::getline(lines, row));
  CHECK(row.rfind("cycle,5,5,cover,1,1.66666", 0) == 0);
}

TEST_CASE("exact oracle command prints the brute-force value") {
  RunResult r = run("exact --generate petersen --problem cover");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("value: 3") != std::string::npos);

  RunResult rp = run("exact --generate petersen --problem pack --format json");
  REQUIRE(rp.exit_code == 0);
  json rep = json::parse(rp.out);
  CHECK(rep["value"] == 4);
  CHECK(rep["witness"].is_array());
  CHECK(rep["witness"].size() == 4);

  std::string csv = cycle5_csv();
  RunResult rm = run("exact --metric " + csv + " --problem cover --r 1 --format json");
  REQUIRE(rm.exit_code == 0);
  CHECK(json::parse(rm.out)["value"] == 2);
  std::remove(csv.c_str());
}

TEST_CASE("verify runs named suites and reports pass") {
  RunResult r = run("verify collapse --set vertex-transitive-small");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);

  RunResult bad = run("verify nonsense 2>/dev/null");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
  RunResult a = run("verify collapse --seed 7 --jobs 2");
  RunResult b = run("verify collapse --seed 7 --jobs 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("sweep-eps emits one report per grid point plus a trend") {
  std::string csv = cycle5_csv();
  RunResult r = run("sweep-eps --metric " + csv +
                    " --r 1 --eps-grid 0.1:1.9:10 --level 1 --format json");
  REQUIRE(r.exit_code == 0);
  json rep = json::parse(r.out);
  REQUIRE(rep["points"].size() == 10);
  for (const auto& p : rep["points"]) {
    CHECK(p["eps"].is_number());
    CHECK(p["report"]["bound"].is_number());
    CHECK(p["report"]["status"] == "optimal");
  }
  CHECK(rep["trend"].is_string());
  CHECK(rep["min_bound"].is_number());

  RunResult rc = run("sweep-eps --metric " + csv + " --r 1 --eps-grid 0.5:1.5:3 --format csv");
  REQUIRE(rc.exit_code == 0);
  int rows = 0;
  std::istringstream lines(rc.out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line.find("instance_kind") == std::string::npos) ++rows;
  CHECK(rows == 3);
  CHECK(rc.out.find("# trend=") != std::string::npos);

  CHECK(run("sweep-eps --metric " + csv + " --r 1 --eps-grid 0.5:2.5:3 2>/dev/null").exit_code == 1);
  std::remove(csv.c_str());
}

TEST_CASE("generate writes instances and respects the seed") {
  RunResult r = run("generate cycle:5 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("p edge 5 5") != std::string::npos);

  RunResult m = run("generate cycle-metric:5 2>/dev/null");
  REQUIRE(m.exit_code == 0);
  std::istringstream in(m.out);
  coverbound::FiniteMetricSpace sp = coverbound::read_distance_csv(in);
  CHECK(sp.point_count() == 5);

  RunResult a = run("generate random:8:0.5 --seed 3 2>/dev/null");
  RunResult b = run("generate random:8:0.5 --seed 3 2>/dev/null");
  RunResult c = run("generate random:8:0.5 --seed 4 2>/dev/null");
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);

  std::string outp = temp_path("gen.dimacs");
  RunResult tofile = run("generate petersen --out " + outp + " 2>/dev/null");
  REQUIRE(tofile.exit_code == 0);
  CHECK(coverbound::read_dimacs_file(outp).edge_count() == 15);
  std::remove(outp.c_str());

  CHECK(run("generate nosuch:1 2>/dev/null").exit_code == 1);
}

TEST_CASE("bound reports are reproducible apart from wall time") {
  RunResult a = run("bound --generate random:7:0.4 --seed 5 --problem cover --format json");
  RunResult b = run("bound --generate random:7:0.4 --seed 5 --problem cover --format json");
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  json ja = json::parse(a.out);
  json jb = json::parse(b.out);
  ja.erase("wall_time_ms");
  jb.erase("wall_time_ms");
  CHECK(ja == jb);
}
