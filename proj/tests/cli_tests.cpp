// End-to-end checks of the ccptool binary: exit codes, RESULT lines and
// artifact files. Takes the tool path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>

#include <sys/wait.h>

#include "ccp/io.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

#define EXPECT(cond)                                                        \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::cerr << "FAILED at " << __FILE__ << ":" << __LINE__ << ": "      \
                << #cond << "\n";                                           \
      ++g_failures;                                                         \
    }                                                                       \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string g_tool;
fs::path g_tmp;

RunResult run(const std::string& args) {
  const std::string out_path = (g_tmp / "cmd_stdout.txt").string();
  const std::string err_path = (g_tmp / "cmd_stderr.txt").string();
  const std::string cmd =
      "'" + g_tool + "' " + args + " >'" + out_path + "' 2>'" + err_path + "'";
  int status = std::system(cmd.c_str());
  RunResult result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  result.out = ccp::read_file(out_path);
  result.err = ccp::read_file(err_path);
  return result;
}

std::string first_line(const std::string& text) {
  auto pos = text.find('\n');
  return pos == std::string::npos ? text : text.substr(0, pos);
}

std::string path(const std::string& name) { return (g_tmp / name).string(); }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <path-to-ccptool>\n";
    return 1;
  }
  g_tool = argv[1];
  std::mt19937 rng(std::random_device{}());
  g_tmp = fs::temp_directory_path() /
          ("ccptool_test_" + std::to_string(rng()));
  fs::create_directories(g_tmp);

  const std::string samples = CCP_SAMPLES_DIR;
  const std::string golden =
      std::string(CCP_TESTS_DIR) + "/golden/bsm_010100_000011.ccp";

  // Unknown flags are usage errors.
  EXPECT(run("--definitely-not-a-flag").exit_code == 2);
  EXPECT(run("reduce --graph nope.vc --k 1 -o x.ccp").exit_code == 2);

  // reduce + check on the single-edge graph.
  {
    auto r = run("reduce --graph '" + samples + "/k2.vc' --k 0 -o '" +
                 path("edge_k0.ccp") + "'");
    EXPECT(r.exit_code == 0);
    EXPECT(first_line(r.out) == "RESULT: OK");
    auto c = run("check '" + path("edge_k0.ccp") + "' --budget-nodes 5000000");
    EXPECT(c.exit_code == 1);
    EXPECT(first_line(c.out) == "RESULT: INCONSISTENT");
  }
  {
    auto r = run("reduce --graph '" + samples + "/k2.vc' --k 1 -o '" +
                 path("edge_k1.ccp") + "'");
    EXPECT(r.exit_code == 0);
    auto c = run("check '" + path("edge_k1.ccp") + "' -o '" +
                 path("edge_k1_witness.cmx") + "'");
    EXPECT(c.exit_code == 0);
    EXPECT(first_line(c.out) == "RESULT: CONSISTENT");
    auto v = run("verify '" + path("edge_k1.ccp") + "' '" +
                 path("edge_k1_witness.cmx") + "'");
    EXPECT(v.exit_code == 0);
    EXPECT(first_line(v.out) == "RESULT: VERIFIED");
    auto e = run("extract-cover --graph '" + samples + "/k2.vc' --k 1 '" +
                 path("edge_k1_witness.cmx") + "'");
    EXPECT(e.exit_code == 0);
    EXPECT(first_line(e.out) == "RESULT: OK");
    EXPECT((e.out.find("cover: 1") != std::string::npos ||
            e.out.find("cover: 2") != std::string::npos));
    // Tiny budget: verdict unknown, exit 3.
    auto u = run("check '" + path("edge_k1.ccp") + "' --budget-nodes 5");
    EXPECT(u.exit_code == 3);
    EXPECT(first_line(u.out) == "RESULT: UNKNOWN");
  }

  // The full 6-vertex pipeline.
  {
    auto r = run("reduce --graph '" + samples + "/demo6.vc' --k 4 -o '" +
                 path("demo6.ccp") + "'");
    EXPECT(r.exit_code == 0);
    auto b = run("build-realization --graph '" + samples +
                 "/demo6.vc' --k 4 --cover 1,3,5,6 -o '" + path("demo6.cmx") +
                 "'");
    EXPECT(b.exit_code == 0);
    EXPECT(first_line(b.out) == "RESULT: OK");
    auto v = run("verify '" + path("demo6.ccp") + "' '" + path("demo6.cmx") + "'");
    EXPECT(v.exit_code == 0);
    EXPECT(first_line(v.out) == "RESULT: VERIFIED");
    auto e = run("extract-cover --graph '" + samples + "/demo6.vc' --k 4 '" +
                 path("demo6.cmx") + "'");
    EXPECT(e.exit_code == 0);
    EXPECT(e.out.find("cover: 1,3,5,6") != std::string::npos);

    // Bad cover: refused with exit 1.
    auto bad = run("build-realization --graph '" + samples +
                   "/demo6.vc' --k 4 --cover 1,2,3,6 -o '" + path("bad.cmx") +
                   "'");
    EXPECT(bad.exit_code == 1);
    EXPECT(first_line(bad.out) == "RESULT: REJECTED");

    // The solver cap refuses L=224 without --force.
    auto refused = run("check '" + path("demo6.ccp") + "'");
    EXPECT(refused.exit_code == 2);

    // Rendering is deterministic.
    auto p1 = run("render '" + path("demo6.cmx") + "' -o '" + path("a.ppm") +
                  "' --scale 2");
    auto p2 = run("render '" + path("demo6.cmx") + "' -o '" + path("b.ppm") +
                  "' --scale 2");
    EXPECT(p1.exit_code == 0);
    EXPECT(p2.exit_code == 0);
    std::string ppm = ccp::read_file(path("a.ppm"));
    EXPECT(ppm == ccp::read_file(path("b.ppm")));
    EXPECT(ppm.substr(0, 3) == "P3\n");
  }

  // Gadget emission matches the golden file byte for byte.
  {
    auto g = run("gadget bsm --alpha 010100 --beta 000011 -o '" +
                 path("bsm.ccp") + "'");
    EXPECT(g.exit_code == 0);
    EXPECT(ccp::read_file(path("bsm.ccp")) == ccp::read_file(golden));
    auto a = run("gadget asm --gamma 010100 --delta 001010 --k 4 -o '" +
                 path("asm.ccp") + "'");
    EXPECT(a.exit_code == 0);
    auto e = run("gadget ev --gamma 010100 --edge 3,5 --k 4 -o '" +
                 path("ev.ccp") + "'");
    EXPECT(e.exit_code == 0);
    auto c = run("check '" + path("ev.ccp") + "'");
    EXPECT(c.exit_code == 0);
  }

  // 1-color reconstruction through the file formats.
  {
    ccp::write_file(path("one.ccp"),
                    "CCP 1\nsize 6\ncolors 1 A\n"
                    "rowsums A 1 1 3 3 5 6\ncolsums A 1 2 3 3 5 5\n");
    auto r = run("reconstruct01 '" + path("one.ccp") + "' -o '" +
                 path("one.cmx") + "'");
    EXPECT(r.exit_code == 0);
    EXPECT(first_line(r.out) == "RESULT: CONSISTENT");
    auto v = run("verify '" + path("one.ccp") + "' '" + path("one.cmx") + "'");
    EXPECT(v.exit_code == 0);

    ccp::write_file(path("bad.ccp"),
                    "CCP 1\nsize 2\ncolors 1 A\n"
                    "rowsums A 2 2\ncolsums A 2 1\n");
    auto bad = run("reconstruct01 '" + path("bad.ccp") + "'");
    EXPECT(bad.exit_code == 1);
    EXPECT(first_line(bad.out) == "RESULT: INCONSISTENT");

    // A 3-color instance is a usage error for reconstruct01.
    auto usage = run("reconstruct01 '" + path("bsm.ccp") + "'");
    EXPECT(usage.exit_code == 2);
  }

  // Malformed instance file: I/O-level error.
  {
    ccp::write_file(path("broken.ccp"), "CCP 1\nsize x\n");
    auto r = run("check '" + path("broken.ccp") + "'");
    EXPECT(r.exit_code == 2);
  }

  fs::remove_all(g_tmp);
  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << g_failures << " check(s) failed\n";
  return 1;
}
