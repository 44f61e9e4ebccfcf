#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SYMCAY_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("verify exits zero exactly when all claims hold") {
  auto ok = run("verify example_TA1 --full");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("all claims hold") != std::string::npos);

  auto red = run("verify gamma_p_4_5 --param p=3 --full");
  CHECK(red.exit_code == 1);
  CHECK(red.output.find("FAIL  connected") != std::string::npos);
  CHECK(red.output.find("pass  quotient_isomorphic_K5") != std::string::npos);
}

TEST_CASE("invalid parameters, bounds and io failures get distinct exit codes") {
  auto invalid = run("build gamma_2_p1_p --param p=6");
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.output.find("prime") != std::string::npos);

  CHECK(run("build gamma_2_p1_p --param p=19").exit_code == 3);
  CHECK(run("aut /nonexistent/graph.json").exit_code == 4);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify no_such_entry").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("build, aut, iso and classify round trip through graph JSON") {
  auto dir = std::filesystem::temp_directory_path() / "symcay_cli_test";
  std::filesystem::create_directories(dir);
  auto g1 = (dir / "ta1.json").string();
  auto g2 = (dir / "lex5.json").string();

  CHECK(run("build example_TA1 --out " + g1).exit_code == 0);
  CHECK(run("build gamma_2_d_n --param d=4 --param n=15 --out " + g2).exit_code == 0);

  auto aut = run("aut " + g1);
  CHECK(aut.exit_code == 0);
  CHECK(aut.output.find("|Aut| = 336") != std::string::npos);
  CHECK(aut.output.find("generators:") != std::string::npos);

  auto same = run("iso " + g1 + " " + g1);
  CHECK(same.exit_code == 0);
  CHECK(same.output.find("isomorphic") == 0);

  auto diff = run("iso " + g1 + " " + g2);
  CHECK(diff.exit_code == 1);
  CHECK(diff.output.find("not isomorphic") != std::string::npos);

  auto cls = run("classify " + g1);
  CHECK(cls.exit_code == 0);
  CHECK(cls.output.find("\"classification\": \"arc-transitive\"") != std::string::npos);

  std::filesystem::remove_all(dir);
}

TEST_CASE("verification reports are byte-stable") {
  auto dir = std::filesystem::temp_directory_path() / "symcay_cli_rep";
  std::filesystem::create_directories(dir);
  auto r1 = (dir / "r1.json").string();
  auto r2 = (dir / "r2.json").string();
  CHECK(run("verify gamma_2_p1_p --full --out " + r1).exit_code == 0);
  CHECK(run("verify gamma_2_p1_p --full --out " + r2).exit_code == 0);
  std::string a = slurp(r1), b = slurp(r2);
  CHECK(a == b);
  CHECK(a.find("\"entry\": \"gamma_2_p1_p\"") != std::string::npos);
  CHECK(a.find("\"all_pass\": true") != std::string::npos);
  CHECK(a.find("elapsed") == std::string::npos);  // timing stays on the console
  std::filesystem::remove_all(dir);
}

TEST_CASE("script files bind and echo deterministically") {
  auto dir = std::filesystem::temp_directory_path() / "symcay_cli_scr";
  std::filesystem::create_directories(dir);
  auto scr = dir / "demo.scr";
  std::ofstream(scr) << "# demo\n"
                        "a = (1 2 3)(4 5)\n"
                        "S = {a, (1 2 3)(4 5), (2 4)}\n"
                        "g = gamma_2_d_n(d=4, n=15)\n";
  auto res = run("script " + scr.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("a = (1 2 3)(4 5)  # order 6, degree 5") != std::string::npos);
  CHECK(res.output.find("S = {(1 2 3)(4 5), (2 4)}  # 2 permutations, degree 5") !=
        std::string::npos);
  CHECK(res.output.find("g = gamma_2_d_n(d=4, n=15)  # 240 vertices, 480 edges") !=
        std::string::npos);

  std::ofstream(dir / "bad.scr") << "x = nope(p=1)\n";
  CHECK(run("script " + (dir / "bad.scr").string()).exit_code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("census sweeps a parameter range and reports skips") {
  auto res = run("census gamma_2_d_n --range n=13:15 --param d=4");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("n=13: skipped (hypothesis") != std::string::npos);
  CHECK(res.output.find("n=14: skipped (hypothesis") != std::string::npos);
  CHECK(res.output.find("n=15: pass") != std::string::npos);

  auto red = run("census gamma_2_d_n --range n=3:3");
  CHECK(red.exit_code == 1);
  CHECK(red.output.find("n=3: FAIL") != std::string::npos);

  CHECK(run("census gamma_2_d_n --range n=5").exit_code == 2);
}
