#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

const char* kCli = CONTMEAS_CLI_PATH;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string tmp = "/tmp/contmeas_cli_out.txt";
  const std::string cmd =
      std::string(kCli) + " " + args + " > " + tmp + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream f(tmp, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  r.out = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kSegment = "v 0 0\nv 1 0\ne 0 1\n";
const char* kTripod = "v 0 0\nv 1 0\nv -1 0\nv 0 1\ne 0 1\ne 0 2\ne 0 3\n";

}  // namespace

TEST_CASE("h1 subcommand") {
  write_file("/tmp/cli_seg.graph", kSegment);
  auto r = run("h1 /tmp/cli_seg.graph");
  CHECK(r.code == 0);
  CHECK(r.out == "1.0\n");

  write_file("/tmp/cli_tri.graph", kTripod);
  r = run("h1 /tmp/cli_tri.graph");
  CHECK(r.code == 0);
  CHECK(r.out == "3.0\n");
}

TEST_CASE("hausdorff subcommand") {
  write_file("/tmp/cli_seg.graph", kSegment);
  write_file("/tmp/cli_seg2.graph", "v 0 1\nv 1 1\ne 0 1\n");
  auto r = run("hausdorff /tmp/cli_seg.graph /tmp/cli_seg2.graph --eps 0.01");
  CHECK(r.code == 0);
  CHECK(r.out == "1.0\n");
}

TEST_CASE("ldelta subcommand") {
  write_file("/tmp/cli_seg.graph", kSegment);
  auto r = run("ldelta /tmp/cli_seg.graph --delta 0.25");
  CHECK(r.code == 0);
  CHECK(std::stod(r.out) == doctest::Approx(1.0).epsilon(1e-9));
  // --delta is required
  r = run("ldelta /tmp/cli_seg.graph");
  CHECK(r.code == 2);
}

TEST_CASE("geodesic subcommand") {
  write_file("/tmp/cli_tri.graph", kTripod);
  auto r = run(
      "geodesic /tmp/cli_tri.graph --from-edge 0 --from-s 1 "
      "--to-edge 1 --to-s 1 --out /tmp/cli_geo.json");
  CHECK(r.code == 0);
  CHECK(r.out == "length=2.0\n");
  const std::string doc = read_file("/tmp/cli_geo.json");
  CHECK(doc.find("\"breakpoints\"") != std::string::npos);
}

TEST_CASE("parametrize subcommand") {
  write_file("/tmp/cli_seg.graph", kSegment);
  auto r = run("parametrize /tmp/cli_seg.graph --out /tmp/cli_par.json");
  CHECK(r.code == 0);
  CHECK(r.out == "length=2.0 h1=1.0 ratio=2.0\n");
  const std::string doc = read_file("/tmp/cli_par.json");
  CHECK(doc.find("\"ledger\"") != std::string::npos);
  CHECK(doc.find("\"fwd\"") != std::string::npos);
  CHECK(doc.find("\"bwd\"") != std::string::npos);
}

TEST_CASE("degzero subcommand") {
  write_file("/tmp/cli_tri.graph", kTripod);
  auto r = run("degzero /tmp/cli_tri.graph --seed 3 --tol 1e-9");
  CHECK(r.code == 0);
  CHECK(r.out.find("degree_zero=true") != std::string::npos);
  CHECK(r.out.find("seed=3") != std::string::npos);
}

TEST_CASE("golab subcommand") {
  auto r = run("golab --scenario staircase --n 2,4,8 --eps 0.02 --out /tmp/cli_golab.csv");
  CHECK(r.code == 0);
  const std::string doc = read_file("/tmp/cli_golab.csv");
  CHECK(doc.rfind("n,dH,h1\n", 0) == 0);
  CHECK(doc.find("\n2,") != std::string::npos);
  CHECK(doc.find("\"holds\": true") != std::string::npos);

  r = run("golab --scenario dust --n 10,100 --eps 0.02");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"holds\": false") != std::string::npos);

  r = run("golab --scenario spiral");
  CHECK(r.code == 1);
  CHECK(r.out.find("unknown scenario") != std::string::npos);
}

TEST_CASE("exit codes") {
  auto r = run("h1 /tmp/does_not_exist.graph");
  CHECK(r.code == 1);
  CHECK(r.out.rfind("error:", 0) == 0);

  // malformed graph text reports the offending line
  write_file("/tmp/cli_bad.graph", "e 0 5\n");
  r = run("h1 /tmp/cli_bad.graph");
  CHECK(r.code == 1);
  CHECK(r.out.find("at line 1") != std::string::npos);

  r = run("frobnicate");
  CHECK(r.code == 2);
  r = run("");
  CHECK(r.code == 2);
  r = run("--help");
  CHECK(r.code == 0);
}

TEST_CASE("selftest is reproducible byte for byte") {
  auto a = run("selftest --seed 0");
  auto b = run("selftest --seed 0");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("ALL PASS") != std::string::npos);
}
