#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "weylkit/io.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(WEYLKIT_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int rc = pclose(p);
  r.status = WEXITSTATUS(rc);
  return r;
}

}  // namespace

TEST_CASE("reduce") {
  auto r = run_cli("reduce --preset A2 -- 1 0 1 1 0");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("length") {
  CHECK(run_cli("length --preset A2 -- 0 1 0").out == "3\n");
  CHECK(run_cli("length --n 2 w:3,0").out == "2\n");
  CHECK(run_cli("length --n 3 \"s:0 1 0\"").out == "3\n");
}

TEST_CASE("bound") {
  auto r = run_cli("bound --n 2");
  CHECK(r.status == 0);
  CHECK(r.out == "f(z) = 2z - 4\n");
  CHECK(run_cli("bound --n 3").out == "f(z) = z - 9\n");
}

TEST_CASE("support rows") {
  auto r = run_cli("support --preset A2 -- x \"0 1\" y \"1 0\"");
  CHECK(r.status == 0);
  CHECK(r.out == "0\t\n1\t0\n3\t0 1 0\n");
}

TEST_CASE("hecke-mult tsv") {
  auto r = run_cli("hecke-mult --preset A2 -- x 0 y 0");
  CHECK(r.status == 0);
  CHECK(r.out == "0\t\t1\n1\t0\tv - v^-1\n");
}

TEST_CASE("twist and parse-print round trip") {
  auto r = run_cli("twist --n 3 --m 1 w:4,2,0");
  CHECK(r.status == 0);
  // row is length \t window \t word; reparse the window
  auto tab1 = r.out.find('\t');
  auto tab2 = r.out.find('\t', tab1 + 1);
  std::string window = r.out.substr(tab1 + 1, tab2 - tab1 - 1);
  auto v = weylkit::parse_affine(3, "w:" + window);
  CHECK(v == weylkit::beta_twist(weylkit::parse_affine(3, "w:4,2,0"),
                                 weylkit::SuperbasicDatum(3, 1)));
}

TEST_CASE("translate-length and sk") {
  CHECK(run_cli("translate-length --n 3 l:1,0,-1").out == "4\n");
  CHECK(run_cli("sk --n 3 --k 1 l:2,0,1").out == "4\n");
  CHECK(run_cli("sk --n 3 l:2,0,1").out == "1\t4\n2\t4\n");
}

TEST_CASE("enumerate") {
  auto r = run_cli("enumerate --n 2 --radius 3");
  CHECK(r.status == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 7);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("length --preset A2 --system nosuch.json -- 0").status == 1);
  CHECK(run_cli("length --n 2 w:2,4").status == 1);  // invalid window
  CHECK(run_cli("frobnicate").status == 2);          // unknown subcommand
  CHECK(run_cli("bound").status == 2);               // missing required --n
}

TEST_CASE("verify is deterministic and passes") {
  auto a = run_cli("verify --preset A2 --radius 3 --samples 20 --seed 7");
  CHECK(a.status == 0);
  CHECK(a.out.rfind("# seed\t7\n", 0) == 0);
  auto b = run_cli("verify --preset A2 --radius 3 --samples 20 --seed 7");
  // all columns except wall time must match
  auto strip_millis = [](const std::string& s) {
    std::string out;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t eol = s.find('\n', pos);
      if (eol == std::string::npos) eol = s.size();
      std::string line = s.substr(pos, eol - pos);
      if (!line.empty() && line[0] != '#') {
        size_t t = line.rfind('\t');
        line = line.substr(0, t);
      }
      out += line + "\n";
      pos = eol + 1;
    }
    return out;
  };
  CHECK(strip_millis(a.out) == strip_millis(b.out));
}
