#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the CLI with stderr discarded unless asked for.
Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd =
      std::string(TWOBRIDGE_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("info") {
  const auto r = run("info 4 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"alpha\":[2,2]") != std::string::npos);
  CHECK(r.out.find("\"b\":[2,1,0]") != std::string::npos);
  CHECK(r.out.find("\"sigma\":1") != std::string::npos);
  CHECK(r.out.find("\"l\":2") != std::string::npos);
  CHECK(nlohmann::json::parse(r.out).is_object());

  const auto one = run("info 1 1");
  CHECK(one.code == 0);
  CHECK(one.out.find("\"alpha\":[1]") != std::string::npos);
  CHECK(one.out.find("\"sigma\":0") != std::string::npos);
}

TEST_CASE("info rejects bad arguments") {
  const auto bad = run("info 6 3", true);
  CHECK(bad.code == 2);
  CHECK(bad.out.find("not admissible") != std::string::npos);
  CHECK(run("info 4").code == 2);
  CHECK(run("info x 3").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("decompose") {
  CHECK(run("decompose 4 3").out == "T2 T1\n");
  CHECK(run("decompose 1 1").out == "\n");
  CHECK(run("decompose 5 3").out == "T1 T3 T1\n");
  CHECK(run("decompose 4 2").code == 2);
}

TEST_CASE("verify csv") {
  const auto r = run("verify --max-p 4 --format csv --jobs 2");
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 10);
  CHECK(r.out.rfind("p,q,l,alpha,b,sigma,delta,i0,radius,components,all_checks_pass,"
                    "decomposition\n",
                    0) == 0);
  CHECK(r.out.find("\n4,3,2,2;2,2;1;0,1,2;2,1,1,2,true,T2 T1\n") != std::string::npos);
}

TEST_CASE("verify json lines and summary") {
  const auto path = std::filesystem::temp_directory_path() / "twobridge_cli_verify.jsonl";
  const auto r = run("verify --max-p 6 --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("pairs=") == 0);
  CHECK(r.out.find("t2=proof") != std::string::npos);
  const auto body = slurp(path);
  std::istringstream in(body);
  std::string line;
  std::size_t rows = 0;
  nlohmann::json last;
  while (std::getline(in, line)) {
    last = nlohmann::json::parse(line);
    ++rows;
  }
  CHECK(rows == 18);  // 17 pairs + aggregate
  CHECK(last["aggregate"]["total_pairs"] == 17);
  CHECK(last["aggregate"]["failure_count"] == 0);
  std::filesystem::remove(path);
}

TEST_CASE("verify full-q and audit alias") {
  CHECK(run("verify --max-p 5 --full-q 31 --format csv").code == 0);
  const auto a = run("audit --max-p 10");
  CHECK(a.code == 0);
  CHECK(a.out.find("STRUCT-SIG") != std::string::npos);
  CHECK(a.out.find("\"HM\"") == std::string::npos);
}

TEST_CASE("exhausted time budget exits 1 with an incomplete summary") {
  const auto path = std::filesystem::temp_directory_path() / "twobridge_cli_budget.csv";
  const auto r = run("verify --max-p 40 --time-budget-ms 0 --format csv --out " + path.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("complete=no") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("verify rejects bad arguments") {
  CHECK(run("verify --max-p 0").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify --max-p 3 --format xml").code == 2);
  CHECK(run("verify --max-p 3 --out /nonexistent-dir/x.csv").code == 2);
}

TEST_CASE("svg") {
  const auto r = run("svg 4 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "twobridge_cli.svg";
  CHECK(run("svg 5 3 --out " + path.string()).code == 0);
  CHECK(slurp(path).find("crossing-sign") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run("svg 101 103").code == 2);
  CHECK(run("svg 6 3").code == 2);
}
