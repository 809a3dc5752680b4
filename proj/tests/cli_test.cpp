#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

const std::string kCli = PERMKNOT_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI through the shell and captures stdout. Callers append
// "2>/dev/null" or "2>&1" when stderr matters.
RunResult run(const std::string& args) {
  const std::string cmd = "\"" + kCli + "\" " + args;
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("stats prints key=value lines") {
  const RunResult r = run("stats 7563421");
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out) == std::vector<std::string>{
                               "permutation=7,5,6,3,4,2,1",
                               "length=19",
                               "reflection_length=5",
                               "total_displacement=24",
                               "depth=12",
                               "shallow=true",
                           });
}

TEST_CASE("stats of the trivial permutation") {
  const RunResult r = run("stats 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("length=0") != std::string::npos);
  CHECK(r.out.find("shallow=true") != std::string::npos);
}

TEST_CASE("stats emits json on request") {
  const RunResult r = run("stats 7563421 --json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["length"] == 19);
  CHECK(j["reflection_length"] == 5);
  CHECK(j["total_displacement"] == 24);
  CHECK(j["depth"] == 12);
  CHECK(j["shallow"] == true);
  CHECK(j["permutation"] == nlohmann::json::array({7, 5, 6, 3, 4, 2, 1}));
}

TEST_CASE("malformed permutations exit with the parse code") {
  CHECK(run("stats 1,1,2 2>/dev/null").exit_code == 2);
  CHECK(run("check 0 2>/dev/null").exit_code == 2);
  CHECK(run("diagram 12x --out /tmp/x.svg 2>/dev/null").exit_code == 2);
}

TEST_CASE("unknown flags and values exit with the usage code") {
  CHECK(run("count 5 --method bogus 2>/dev/null").exit_code == 2);
  CHECK(run("frobnicate 2>/dev/null").exit_code == 2);
  CHECK(run("stats 2>/dev/null").exit_code == 2);
}

TEST_CASE("check reports each decider and their agreement") {
  const RunResult all = run("check 3412 --method all");
  CHECK(all.exit_code == 0);
  CHECK(lines_of(all.out) == std::vector<std::string>{
                                 "definition=false",
                                 "hm=false",
                                 "cm=false",
                                 "agreement=true",
                             });

  const RunResult one = run("check 123456 --method definition");
  CHECK(one.exit_code == 0);
  CHECK(lines_of(one.out) == std::vector<std::string>{"definition=true"});

  const RunResult js = run("check 7563421 --json");
  const nlohmann::json j = nlohmann::json::parse(js.out);
  CHECK(j["definition"] == true);
  CHECK(j["hm"] == true);
  CHECK(j["cm"] == true);
  CHECK(j["agreement"] == true);
}

TEST_CASE("enumerate lists lexicographically and can filter") {
  const RunResult all = run("enumerate 3");
  CHECK(all.exit_code == 0);
  CHECK(lines_of(all.out) == std::vector<std::string>{"1,2,3", "1,3,2", "2,1,3", "2,3,1",
                                                      "3,1,2", "3,2,1"});

  const RunResult shallow = run("enumerate 4 --shallow-only");
  CHECK(shallow.exit_code == 0);
  const std::vector<std::string> lines = lines_of(shallow.out);
  CHECK(lines.size() == 23);
  CHECK(lines.front() == "1,2,3,4");
  for (const std::string& line : lines) CHECK(line != "3,4,1,2");

  CHECK(run("enumerate 11 2>/dev/null").exit_code == 3);
  CHECK(run("enumerate 0 2>/dev/null").exit_code == 2);
}

TEST_CASE("count agrees across methods") {
  const RunResult a = run("count 6 --method exhaustive");
  const RunResult b = run("count 6 --method generator");
  const RunResult c = run("count 6 --method series");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(c.exit_code == 0);
  CHECK(lines_of(a.out).back() == "count=511");
  CHECK(lines_of(b.out).back() == "count=511");
  CHECK(lines_of(c.out).back() == "count=511");
  // the series route reaches past both enumeration bounds
  CHECK(lines_of(run("count 16 --method series").out).back() == "count=33213428285");
}

TEST_CASE("count enforces method bounds") {
  CHECK(run("count 11 --method exhaustive 2>/dev/null").exit_code == 3);
  CHECK(run("count 14 --method generator 2>/dev/null").exit_code == 3);
  CHECK(run("count 0 --method exhaustive 2>/dev/null").exit_code == 2);
}

TEST_CASE("series output reproduces the fixture file") {
  const std::string fixture = slurp(std::filesystem::path(PERMKNOT_FIXTURE_DIR) / "a301897.txt");
  const RunResult r = run("series --order 16");
  CHECK(r.exit_code == 0);
  CHECK(r.out == fixture);
  // byte-identical across runs
  CHECK(run("series --order 16").out == r.out);
  CHECK(run("series --order -1 2>/dev/null").exit_code == 2);
}

TEST_CASE("diagram writes a figure and reports linking data") {
  const std::filesystem::path svg_path =
      std::filesystem::temp_directory_path() / "permknot_cli_test.svg";
  std::filesystem::remove(svg_path);
  const RunResult r = run("diagram 3412 --format svg --out \"" + svg_path.string() + "\"");
  CHECK(r.exit_code == 0);
  CHECK(lines_of(r.out) == std::vector<std::string>{"components=2", "linking[0,1]=-1"});
  const std::string svg = slurp(svg_path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  std::filesystem::remove(svg_path);

  const std::filesystem::path tikz_path =
      std::filesystem::temp_directory_path() / "permknot_cli_test.tex";
  const RunResult t = run("diagram 1 --format tikz --out \"" + tikz_path.string() + "\"");
  CHECK(t.exit_code == 0);
  CHECK(lines_of(t.out) == std::vector<std::string>{"components=1"});
  const std::string tikz = slurp(tikz_path);
  CHECK(tikz.rfind("\\begin{tikzpicture}", 0) == 0);
  CHECK(tikz.find("circle (0.3)") != std::string::npos);
  std::filesystem::remove(tikz_path);
}

TEST_CASE("diagram reports unwritable paths with the io code") {
  CHECK(run("diagram 3412 --out /nonexistent-dir/x.svg 2>/dev/null").exit_code == 4);
}

TEST_CASE("verify walks the small symmetric groups") {
  const RunResult r = run("verify --max-n 5");
  CHECK(r.exit_code == 0);
  const std::vector<std::string> lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "n=1 count=1");
  CHECK(lines[1] == "n=2 count=2");
  CHECK(lines[2] == "n=3 count=6");
  CHECK(lines[3] == "n=4 count=23");
  CHECK(lines[4] == "n=5 count=103");
  CHECK(lines[5] == "counterexamples=0");
  CHECK(lines[6].rfind("elapsed_ms=", 0) == 0);
}

TEST_CASE("verify refuses to pass its cap") {
  CHECK(run("verify --max-n 11 2>/dev/null").exit_code == 3);
  CHECK(run("verify --max-n 4 --cap 3 2>/dev/null").exit_code == 3);
  // the cap is a flag: raising it explicitly unlocks the run
  const RunResult r = run("verify --max-n 4 --cap 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n=4 count=23") != std::string::npos);
}

TEST_CASE("help is available") {
  const RunResult r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("stats") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}
