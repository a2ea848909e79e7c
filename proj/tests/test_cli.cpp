#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "nestconf/io.h"

using namespace nestconf;

namespace {

const std::string cli = NESTCONF_CLI;
const std::string data_dir = NESTCONF_TEST_DATA;

struct Run {
  int code = -1;
  std::string out;
};

// stdout of the CLI; stderr is discarded
Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return "'" + data_dir + "/" + name + "'"; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("nestconf_cli_" + name)).string();
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("toric gb") {
  auto r = run("toric gb " + data("b3.cfg"));
  CHECK(r.code == 0);
  CHECK(r.out == "z1*z2*z3 - z4*z5*z6\nmax_deg=3 count=1\n");
  r = run("toric gb " + data("simplex.cfg"));
  CHECK(r.code == 0);
  CHECK(r.out == "max_deg=0 count=0\n");
  r = run("toric gb " + data("bad_header.cfg"));
  CHECK(r.code == 2);
  CHECK(run("toric gb " + data("b3.cfg") + " --order lex").out == "z1*z2*z3 - z4*z5*z6\nmax_deg=3 count=1\n");
  CHECK(run("toric gb " + data("b3.cfg") + " --order weight:0,0,0,1,1,1").out ==
        "z4*z5*z6 - z1*z2*z3\nmax_deg=3 count=1\n");
  CHECK(run("toric gb " + data("b3.cfg") + " --order revlex").code == 2);
  CHECK(run("toric gb /nonexistent.cfg").code == 2);
}

TEST_CASE("toric gb output parses back") {
  auto r = run("toric gb " + data("gap_w.cfg"));
  REQUIRE(r.code == 0);
  std::string body = r.out.substr(0, r.out.rfind("max_deg"));
  auto family = parse_binomials(body, plain_names(5));
  CHECK(format_binomials(family, plain_names(5)) == body);
}

TEST_CASE("nested build") {
  auto r = run("nested build " + data("pair_A.cfg") + " " + data("pair_B1.cfg") + " " + data("pair_B2.cfg"));
  CHECK(r.code == 0);
  Configuration got = parse_configuration(r.out);
  Configuration golden = read_configuration_file(data_dir + "/pair_golden.cfg");
  CHECK(got.size() == 11);
  CHECK(std::multiset<ExponentVector>(got.columns.begin(), got.columns.end()) ==
        std::multiset<ExponentVector>(golden.columns.begin(), golden.columns.end()));
  CHECK(got.names == golden.names);

  const std::string out = temp_path("build.cfg");
  r = run("nested build " + data("pair_A.cfg") + " " + data("pair_B1.cfg") + " " + data("pair_B2.cfg") + " --out '" +
          out + "'");
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_configuration_file(out).columns == got.columns);
  std::filesystem::remove(out);

  r = run("nested build " + data("pair_A.cfg") + " " + data("pair_B1.cfg") + " " + data("pair_B2.cfg") + " --variables");
  CHECK(contains(r.out, "x[1|(1,1)(1,1)] (4,0,0,0)"));
  // wrong number of inner configurations
  CHECK(run("nested build " + data("pair_A.cfg") + " " + data("pair_B1.cfg")).code == 2);
  CHECK(run("nested build " + data("pair_A.cfg")).code == 2);
}

TEST_CASE("nested gb") {
  const std::string pair = data("pair_A.cfg") + " " + data("pair_B1.cfg") + " " + data("pair_B2.cfg");
  auto r = run("nested gb --family maincase " + pair + " --verify");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\ncertified-GB\n"));
  r = run("nested gb --family generators " + pair + " --verify");
  CHECK(r.code == 0);
  CHECK(run("nested gb --family pcase " + pair).code == 2);
  CHECK(run("nested gb --family other " + pair).code == 2);
  r = run("nested gb --family pcase " + data("square.cfg") + " " + data("simplex.cfg") + " --verify");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "max_deg=2 "));
  CHECK(contains(r.out, "\ncertified-GB\n"));
}

TEST_CASE("normality") {
  auto r = run("normality check " + data("gap.cfg"));
  CHECK(r.code == 1);
  CHECK(r.out == "NotNormal witness=(2,1)\n");
  r = run("normality check " + data("square.cfg"));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("Normal", 0) == 0);
  r = run("normality check " + data("b3.cfg"));
  CHECK(r.code == 0);
  r = run("normality holes " + data("gap_w.cfg") + " --bound 10");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("holes=10 search_bound=10 certifying_bound=2 exhaustive=0 pattern=1\n1: (2,1,0)\n", 0) == 0);
  CHECK(run("normality check " + data("gap.cfg") + " --bound 0").code == 2);
  CHECK(run("normality check " + data("bad_header.cfg")).code == 2);
}

TEST_CASE("birkhoff") {
  auto r = run("birkhoff pipeline -n 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "certified-GB quadratic=true\n"));
  r = run("birkhoff pipeline -n 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "certified-GB quadratic=false\n"));
  r = run("birkhoff points -n 2");
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 21);
  CHECK(run("birkhoff pipeline -n 0").code == 2);
  CHECK(run("birkhoff pipeline").code == 2);
}

TEST_CASE("verify marked-gb") {
  const std::string family = temp_path("family.txt"), mutated = temp_path("mutated.txt");
  auto r = run("birkhoff family -n 2");
  REQUIRE(r.code == 0);
  {
    std::ofstream(family) << r.out;
    std::ofstream(mutated) << r.out.substr(r.out.find('\n') + 1);
  }
  r = run("verify marked-gb '" + family + "' " + data("b3_double.nest"));
  CHECK(r.code == 0);
  CHECK(r.out == "certified-GB\n");
  r = run("verify marked-gb '" + mutated + "' " + data("b3_double.nest"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "witness="));
  r = run("verify marked-gb '" + family + "' " + data("b3_double.nest"), "NESTCONF_BUDGET=1");
  CHECK(r.code == 3);
  // the B3 generator against the plain configuration
  {
    std::ofstream(family) << "z1*z2*z3 - z4*z5*z6\n";
  }
  CHECK(run("verify marked-gb '" + family + "' " + data("b3.cfg")).code == 0);
  {
    std::ofstream(family) << "z1*z2 - z4*z5\n";
  }
  r = run("verify marked-gb '" + family + "' " + data("b3.cfg"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "check=soundness"));
  {
    std::ofstream(family) << "z1*z2 - z7\n";
  }
  CHECK(run("verify marked-gb '" + family + "' " + data("b3.cfg")).code == 2);
  std::filesystem::remove(family);
  std::filesystem::remove(mutated);
}

TEST_CASE("random-check is deterministic") {
  auto a = run("random-check --seed 3 --count 5");
  auto b = run("random-check --seed 3 --count 5");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "maincase pass=5 fail=0"));
  CHECK(run("random-check --suite nope").code == 2);
}

TEST_CASE("help") { CHECK(run("--help").code == 0); }
