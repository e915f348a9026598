#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "demazure/serialize.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DEMAZURE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("dist") {
  const Run r = run("dist --m 1 --n 0 --N 2 --family std0 --format json");
  REQUIRE(r.code == 0);
  const auto parsed = demazure::read_measure_json(r.out);
  CHECK(parsed.measure.support_size() == 4);
  for (const auto& [w, c] : parsed.measure.entries()) CHECK(c == 1);

  const Run trivial = run("dist --m 3 --n 2 --N 0 --format csv");
  CHECK(trivial.code == 0);
  CHECK(trivial.out == "a,b,mult\n0,0,1\n");

  const Run big = run("dist --m 10 --n 0 --N 2 --format csv");
  CHECK(big.code == 0);
  CHECK(count_lines(big.out) == 1 + 121);
}

TEST_CASE("dist output round-trips and is deterministic") {
  const Run a = run("dist --m 2 --n 3 --N 5 --family ext1");
  const Run b = run("dist --m 2 --n 3 --N 5 --family ext1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto parsed = demazure::read_measure_json(a.out);
  CHECK(demazure::write_measure(parsed.measure, parsed.word, demazure::Format::Json) == a.out);
}

TEST_CASE("hist") {
  CHECK(run("hist --m 1 --n 0 --N 3").out == "degree,mult\n0,1\n1,3\n2,2\n3,1\n4,1\n");
  const Run r17 = run("hist --m 1 --n 0 --N 17 --format tsv");
  CHECK(r17.code == 0);
  CHECK(r17.out.find("\n38\t4770\n") != std::string::npos);
  CHECK(run("hist --m 0 --n 0 --N 9").out == "degree,mult\n0,1\n");
  CHECK(run("hist --m 1 --n 0 --N 2 --axis finite").out == "finite_weight,mult\n-1,1\n0,2\n1,1\n");
}

TEST_CASE("stats") {
  const Run r = run("stats --m 1 --n 0 --N 2");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("mass: 4\n") != std::string::npos);
  CHECK(r.out.find("E[a]: 3/4\n") != std::string::npos);
  CHECK(r.out.find("max degree: 1\n") != std::string::npos);

  const Run checked = run("stats --m 10 --n 0 --N 2 --check");
  CHECK(checked.code == 0);
  std::size_t oks = 0;
  for (std::size_t p = checked.out.find(" ok\n"); p != std::string::npos; p = checked.out.find(" ok\n", p + 1)) ++oks;
  CHECK(oks == 6);
  CHECK(checked.out.find("MISMATCH") == std::string::npos);

  for (int N : {0, 4, 7}) {
    const Run t = run("stats --m 0 --n 0 --N " + std::to_string(N) + " --family std1 --check");
    CHECK(t.code == 0);
    CHECK(t.out.find("E[a]: 0\n") != std::string::npos);
    CHECK(t.out.find("Var(a): 0\n") != std::string::npos);
    CHECK(t.out.find("mass: 1\n") != std::string::npos);
  }

  const Run dec = run("stats --m 1 --n 0 --N 6 --decimal");
  CHECK(dec.out.find("limit as N->inf: 1/2 ~ 0.5") != std::string::npos);
}

TEST_CASE("figure") {
  const Run w = run("figure weight2d --m 10 --n 0 --N 1");
  REQUIRE(w.code == 0);
  CHECK(count_lines(w.out) == 1 + 11);
  std::istringstream in(w.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "finite_weight\tdegree\tmult");
  while (std::getline(in, line)) CHECK(line.substr(line.rfind('\t') + 1) == "1");

  const Run d = run("figure degreehist --m 1 --n 0 --N 8");
  CHECK(count_lines(d.out) == 1 + 17);
  CHECK(d.out.find("\n16\t9\n") != std::string::npos);
  CHECK(count_lines(run("figure degreehist --m 4 --n 1 --N 0").out) == 2);
}

TEST_CASE("verify") {
  const Run pass = run("verify --grid \"m<=1,n<=1,N<=4\"");
  CHECK(pass.code == 0);
  CHECK(pass.out.find("status: PASS") != std::string::npos);

  const Run trivial = run("verify --grid \"m<=2,n<=2,N<=0\"");
  CHECK(trivial.code == 0);

  const Run fault = run("verify --grid \"m<=1,n<=1,N<=3\" --inject-fault variance_finite");
  CHECK(fault.code == 1);
  CHECK(fault.out.find("quantity=variance_finite") != std::string::npos);

  CHECK(run("verify --grid \"m<=2,n<=2,N<=5\" --threads 4").out ==
        run("verify --grid \"m<=2,n<=2,N<=5\" --threads 1").out);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "demazure_cli_test_out.csv";
  std::filesystem::remove(path);
  const Run r = run("hist --m 1 --n 0 --N 2 --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(text.str() == "degree,mult\n0,1\n1,3\n");
  std::filesystem::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("dist --m -1").code == 2);
  CHECK(run("dist --family std9").code == 2);
  CHECK(run("hist --axis sideways").code == 2);
  CHECK(run("stats --word \"s0 s1\" --check").code == 2);
  CHECK(run("dist --word \"s0 s7\"").code == 2);
  CHECK(run("verify --grid nonsense").code == 2);
  CHECK(run("verify --inject-fault nothing").code == 2);
  CHECK(run("figure").code == 2);
  CHECK(run("dist --out /nonexistent-dir/x.json").code == 2);
}

TEST_CASE("explicit words") {
  const Run r = run("dist --m 1 --n 0 --word \"sigma s0\" --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "a,b,mult\n0,0,1\n0,1,1\n");
}
