#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

// Golden tests for the CLI: byte-identical output, pinned exit codes.

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(BOTT_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path fixture(const std::string& name, const std::string& body) {
  auto dir = std::filesystem::temp_directory_path() / "bott_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << body;
  return path;
}

const std::string kF2 = "2\n2\n";
const std::string kF4 = "2\n4\n";
const std::string kChain = "3\n2\n2 2\n";
const std::string kFiber = "3\n2\n2 0\n";

std::string file_f2() { return fixture("f2.tower", kF2).string(); }
std::string file_f4() { return fixture("f4.tower", kF4).string(); }
std::string file_chain() { return fixture("chain.tower", kChain).string(); }
std::string file_fiber() { return fixture("fiber.tower", kFiber).string(); }

}  // namespace

TEST_CASE("chern golden outputs") {
  auto r = run("chern " + file_f2());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 4*x1 + 2*x2 + 4*x1x2\n");

  r = run("chern " + file_f4());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 6*x1 + 2*x2 + 4*x1x2\n");

  r = run("chern " + file_chain());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 6*x1 + 4*x2 + 2*x3 + 8*x1x2 + 8*x1x3 + 4*x2x3 + 8*x1x2x3\n");

  r = run("chern " + file_fiber());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 + 6*x1 + 2*x2 + 2*x3 + 8*x1x2 + 8*x1x3 + 4*x2x3 + 8*x1x2x3\n");
}

TEST_CASE("diagram golden outputs") {
  CHECK(run("diagram " + file_f2()).out == "2\n0 1\n0 1\n");
  CHECK(run("diagram " + file_f4()).out == "2\n0 1\n0 2\n");
  CHECK(run("diagram " + file_chain()).out == "3\n0 1 2\n0 1 1\n");
  CHECK(run("diagram " + file_fiber()).out == "3\n0 1 1\n0 1 1\n");

  auto f1 = fixture("f1.tower", "2\n1\n");
  auto r = run("diagram " + f1.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out == "not Z-trivial: j=2 (odd-coefficient)\n");
}

TEST_CASE("iso: exit codes and --chern") {
  auto r = run("iso " + file_f2() + " " + file_f4());
  CHECK(r.exit_code == 1);
  CHECK(r.out == "distinct\n");

  r = run("iso " + file_f2() + " " + file_f2() + " --chern");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "isomorphic\n"
        "1 + 2*z1 + 2*z2 + 4*z1z2\n"
        "1 + 2*z1 + 2*z2 + 4*z1z2\n"
        "chern: equal\n");

  r = run("iso " + file_f2() + " " + file_f4() + " --chern");
  CHECK(r.exit_code == 1);
  CHECK(r.out ==
        "distinct\n"
        "1 + 2*z1 + 2*z2 + 4*z1z2\n"
        "1 + 2*z1 + 2*z2 + 4*z1z2\n"
        "chern: equal\n");
}

TEST_CASE("tower round-trips the diagram subcommand's output") {
  for (const std::string& body : {kF2, kF4, kChain, kFiber}) {
    auto tower = fixture("roundtrip.tower", body);
    auto d = run("diagram " + tower.string());
    REQUIRE(d.exit_code == 0);
    auto forest = fixture("roundtrip.forest", d.out);
    auto t = run("tower " + forest.string());
    CHECK(t.exit_code == 0);
    CHECK(t.out == body);
  }
}

TEST_CASE("deck and reconstruct golden outputs") {
  auto chain_forest = fixture("chain.forest", "3\n0 1 2\n0 1 1\n");
  auto r = run("deck " + chain_forest.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n2\n0 1\n0 1\n");

  auto chain_deck = fixture("chain.deck", r.out);
  r = run("reconstruct " + chain_deck.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n0 1 2\n0 1 1\n");

  r = run("reconstruct " + chain_deck.string() + " --labelled");
  CHECK(r.exit_code == 3);
  CHECK(r.out == "ambiguous\n3\n0 1 2\n0 0 1\nunknown-labels: 2\n");

  auto edgeless_forest = fixture("edgeless.forest", "3\n0 0 0\n0 0 0\n");
  r = run("deck " + edgeless_forest.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n2\n0 0\n0 0\n\n2\n0 0\n0 0\n\n2\n0 0\n0 0\n");
  auto edgeless_deck = fixture("edgeless.deck", r.out);
  r = run("reconstruct " + edgeless_deck.string() + " --labelled");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n0 0 0\n0 0 0\n");

  auto bad_deck = fixture("bad.deck", "2\n1\n0\n0\n\n2\n0 0\n0 0\n");
  r = run("reconstruct " + bad_deck.string());
  CHECK(r.exit_code == 2);
  CHECK(r.out == "invalid deck: card sizes disagree\n");
}

TEST_CASE("enumerate golden output") {
  auto r = run("enumerate 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "3\n0 0 0\n0 0 0\n\n"
        "3\n0 0 1\n0 0 1\n\n"
        "3\n0 1 1\n0 1 1\n\n"
        "3\n0 1 2\n0 1 1\n\n"
        "count=4\n");

  r = run("enumerate 2 --qmax 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "2\n0 0\n0 0\n\n"
        "2\n0 1\n0 1\n\n"
        "2\n0 1\n0 2\n\n"
        "2\n0 1\n0 3\n\n"
        "count=4\n");
}

TEST_CASE("malformed input: one-line diagnostic with line and column, exit 2") {
  auto bad = fixture("bad.tower", "2\nx\n");
  auto r = run("diagram " + bad.string(), /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.out == "parse error: line 2, column 1: expected integer in matrix row\n");

  auto truncated = fixture("short.tower", "3\n2\n");
  r = run("chern " + truncated.string(), /*merge_stderr=*/true);
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("parse error: line 3") == 0);
}

TEST_CASE("determinism: repeated runs are byte-identical") {
  auto a = run("enumerate 4 --qmax 2");
  auto b = run("enumerate 4 --qmax 2");
  CHECK(a.out == b.out);
  CHECK(run("chern " + file_chain()).out == run("chern " + file_chain()).out);
}
