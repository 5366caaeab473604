#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;  // stdout, plus stderr unless suppressed
};

Run run(const std::string& args, bool merge_stderr = true) {
  std::string cmd = std::string(GSD_BINARY) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string spec(const std::string& name) { return std::string(GSD_SPEC_DIR) + "/" + name + ".json"; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "gsd_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("classify prints the shape and maps it to the exit code") {
  auto single = run("classify " + spec("single_minor"));
  CHECK(single.status == 0);
  CHECK(single.out == "Block 2x2 rows=[1,2] cols=[1,2]\n");

  auto full = run("classify " + spec("full_2x3"));
  CHECK(full.status == 0);
  CHECK(full.out == "Block 2x3 rows=[1,2] cols=[1,2,3]\n");

  auto two = run("classify " + spec("two_of_three"));
  CHECK(two.status == 1);
  CHECK(two.out == "NotBlock\n");
}

TEST_CASE("input errors exit with status 2") {
  auto dup = run("classify " + spec("duplicate_minor"));
  CHECK(dup.status == 2);
  CHECK(dup.out.find("duplicate minor at index 1") != std::string::npos);

  auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"matrix": {"rows": 2}, "t": 2, "minors": []})";
  auto missing = run("classify " + bad.string());
  CHECK(missing.status == 2);
  CHECK(missing.out.find("matrix.cols") != std::string::npos);

  CHECK(run("classify /nonexistent/spec.json").status == 2);
  CHECK(run("analyze " + spec("single_minor") + " --field fp:32002").status == 2);
  CHECK(run("analyze " + spec("single_minor") + " --max-internal-degree 1").status == 2);
  CHECK(run("verify theorem --jobs 0").status == 2);
  CHECK(run("frobnicate").status == 2);

  auto cap = run("verify theorem --rows 4 --cols 4");
  CHECK(cap.status == 2);
  CHECK(cap.out.find("cap") != std::string::npos);
}

TEST_CASE("analyze writes the structured report") {
  auto path = scratch("full.json");
  auto r = run("analyze " + spec("full_2x3") + " --seed 9 -o " + path.string());
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["meta"]["seed"] == 9);
  CHECK(j["meta"]["D"] == 8);
  CHECK(j["conditions"]["shape"] == "Block 2x3 rows=[1,2] cols=[1,2,3]");
  CHECK(j["conditions"]["linear"] == true);
  CHECK(j["conditions"]["product"] == "Trivial");
  CHECK(j["conditions"]["golod"] == "ConsistentUpTo(8)");
  CHECK(j["betti"] == nlohmann::json::parse("[[0,0,1],[1,2,3],[2,3,2]]"));
  CHECK_FALSE(j.contains("witness"));

  auto pair = run("analyze " + spec("disjoint_pair_2x4") + " --witness -o -", false);
  CHECK(pair.status == 1);
  auto jp = nlohmann::json::parse(pair.out);
  CHECK(jp["conditions"]["shape"] == "NotBlock");
  CHECK(jp["conditions"]["product"] == "Nontrivial");
  CHECK(jp["golod"]["first_gap"] == nlohmann::json::parse(R"({"i":3,"j":4,"size":1})"));
  CHECK(jp["golod"]["fast_path"] == "disjoint-split");
  CHECK(jp["witness"]["verified"] == true);
  CHECK(jp["witness"]["product"].is_string());

  auto qq = run("analyze " + spec("two_of_three") + " --field qq -o -");
  CHECK(qq.status == 1);
  CHECK(qq.out.find("\"field\": \"qq\"") != std::string::npos);
}

TEST_CASE("analyze skips the shape check for 3x3 minors") {
  auto r = run("analyze " + spec("three_maximal_minors_3x4"));
  CHECK(r.out.find("notice: shape check skipped") != std::string::npos);
  CHECK(r.out.find("betti totals: 1 3 3 1") != std::string::npos);
  CHECK(r.out.find("golod:   ConsistentUpTo(8)") != std::string::npos);
  // Nonlinear, hence a negative verdict.
  CHECK(r.status == 1);
}

TEST_CASE("campaign reports are identical across job counts") {
  auto a = scratch("census_j1.json");
  auto b = scratch("census_j3.json");
  auto r1 = run("verify theorem --rows 2 --cols 4 --jobs 1 --witness -o " + a.string());
  auto r3 = run("verify theorem --rows 2 --cols 4 --jobs 3 --witness -o " + b.string());
  CHECK(r1.status == 0);
  CHECK(r3.status == 0);
  CHECK(r1.out.find("nonzero selections: 63") != std::string::npos);
  CHECK(slurp(a) == slurp(b));
  auto j = nlohmann::json::parse(slurp(a));
  CHECK(j["summary"]["all_three"] == 11);
  CHECK(j["meta"]["seed"] == 0);

  auto rr = run("verify restriction --rows 2 --cols 3");
  CHECK(rr.status == 0);
  CHECK(rr.out.find("violations: 0") != std::string::npos);
}
