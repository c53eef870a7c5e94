#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef _WIN32
#include <sys/wait.h>
#endif

#include "doctest.h"

#ifndef WALSHCLI_PATH
#define WALSHCLI_PATH "./walshcli"
#endif

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(WALSHCLI_PATH) + " " + args;
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
#ifdef _WIN32
  return rc;
#else
  return WEXITSTATUS(rc);
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("no arguments is a usage error") {
  CHECK(run("> cli_out.txt 2>&1") == 2);
  std::remove("cli_out.txt");
}

TEST_CASE("unknown suite is a usage error") {
  CHECK(run("verify nosuchsuite > cli_out.txt 2>&1") == 2);
  std::remove("cli_out.txt");
}

TEST_CASE("kernel dump writes a csv") {
  CHECK(run("kernel --kind dirichlet --n 3 --resolution 2 --out cli_d3.csv") == 0);
  std::string body = slurp("cli_d3.csv");
  CHECK(body == "x,value\n0,3\n1,1\n2,1\n3,-1\n");
  std::remove("cli_d3.csv");
}

TEST_CASE("fejer kernel dump in json") {
  CHECK(run("kernel --kind fejer --n 4 --method closed --resolution 3 "
            "--out cli_k4.json --format json") == 0);
  std::string body = slurp("cli_k4.json");
  CHECK(body.find("\"fejer_kernel\"") != std::string::npos);
  std::remove("cli_k4.json");
}

TEST_CASE("lebesgue single value") {
  CHECK(run("lebesgue --n 3 --out cli_leb.csv") == 0);
  std::string body = slurp("cli_leb.csv");
  CHECK(body.find("1.5") != std::string::npos);
  std::remove("cli_leb.csv");
  CHECK(run("lebesgue > cli_out.txt 2>&1") == 2);
  std::remove("cli_out.txt");
}

TEST_CASE("verify exits zero on a passing suite") {
  CHECK(run("verify lemma4 --resolution 8 > cli_out.txt 2>&1") == 0);
  std::string body = slurp("cli_out.txt");
  CHECK(body.find("suite lemma4: pass") != std::string::npos);
  std::remove("cli_out.txt");
}

TEST_CASE("experiment runs and writes a table") {
  CHECK(run("experiment divergence --p 0.5 --family pow2_plus1 --schedule thm411b "
            "--operator partial-sum --norm weak --resolution 9 --k-min 3 --k-max 6 "
            "--out cli_div.csv") == 0);
  std::string body = slurp("cli_div.csv");
  CHECK(body.rfind("k,m,statistic,rate", 0) == 0);
  std::remove("cli_div.csv");
}

TEST_CASE("bad exponent is a usage error") {
  CHECK(run("experiment divergence --p 0 --resolution 8 > cli_out.txt 2>&1") == 2);
  std::remove("cli_out.txt");
}

TEST_CASE("resolution over the cap is a resource error") {
  CHECK(run("kernel --n 1 --resolution 40 > cli_out.txt 2>&1") == 3);
  std::remove("cli_out.txt");
}

TEST_CASE("unwritable output path is an io error") {
  CHECK(run("kernel --n 1 --resolution 3 --out no_such_dir_xyz/k.csv "
            "> cli_out.txt 2>&1") == 4);
  std::remove("cli_out.txt");
}

TEST_CASE("report verb emits the kernel bound table") {
  CHECK(run("report --n-list 3,5,13 --resolution 8 --out cli_rep.csv") == 0);
  std::string body = slurp("cli_rep.csv");
  CHECK(body.rfind("n,l1_norm,variation,lower_ok,upper_ok,max_ratio", 0) == 0);
  CHECK(body.find("\n3,1.5,2,1,1,") != std::string::npos);
  std::remove("cli_rep.csv");
}
