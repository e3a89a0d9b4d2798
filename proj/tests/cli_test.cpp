#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#ifndef DS_CLI_BIN
#error "DS_CLI_BIN must be defined by the build"
#endif
#ifndef DS_FIXTURE_DIR
#error "DS_FIXTURE_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
  int exitCode;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DS_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string fixture(const std::string& name) {
  return std::string(DS_FIXTURE_DIR) + "/" + name + ".spec";
}

}  // namespace

TEST_CASE("solve reports the winner through the exit code") {
  CHECK(run("solve " + fixture("id")).exitCode == 0);
  CHECK(run("solve " + fixture("f1")).exitCode == 0);
  CHECK(run("solve " + fixture("f2")).exitCode == 1);
  CHECK(run("solve " + fixture("fivestate")).exitCode == 1);
}

TEST_CASE("usage and parse failures exit with 2") {
  CHECK(run("solve /nonexistent.spec").exitCode == 2);
  CHECK(run("bogus-subcommand").exitCode == 2);
  CHECK(run("solve").exitCode == 2);
}

TEST_CASE("budget exhaustion exits with 3") {
  CHECK(run("solve --max-vertices 2 " + fixture("id")).exitCode == 3);
}

TEST_CASE("check prints the syntactic class") {
  auto r = run("check " + fixture("r1"));
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("AUT") != std::string::npos);
  CHECK(run("check " + fixture("mixed")).out.find("UNKNOWN") !=
        std::string::npos);
}

TEST_CASE("run evaluates the synthesized program on a lasso") {
  auto r = run("run --input 'ab|ba' " + fixture("id"));
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("|") != std::string::npos);

  auto shifted = run("run --input 'ab|ba' " + fixture("shift"));
  CHECK(shifted.exitCode == 0);
}

TEST_CASE("oracle judges candidate pairs") {
  CHECK(run("oracle --input 'ab|ab' --output 'ab|ab' " + fixture("id"))
            .exitCode == 0);
  CHECK(run("oracle --input 'ab|ab' --output 'ab|ba' " + fixture("id"))
            .exitCode == 1);
}

TEST_CASE("json reports are well formed") {
  auto r = run("solve --json " + fixture("f1"));
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["formatVersion"] == 1);
  CHECK(j["winner"] == "eve");
  CHECK(j["domainClosed"] == false);
  CHECK(j["arenaVertices"].get<int>() > 0);

  auto r2 = run("solve --json " + fixture("f2"));
  CHECK(r2.exitCode == 1);
  CHECK(nlohmann::json::parse(r2.out)["winner"] == "adam");
}

TEST_CASE("gen-pcp emits a parsable spec") {
  std::string tmp = "/tmp/pcp_cli_test.spec";
  auto r = run("gen-pcp a:b -o " + tmp);
  CHECK(r.exitCode == 0);
  CHECK(run("solve " + tmp).exitCode == 0);
  std::remove(tmp.c_str());
}

TEST_CASE("bounded synthesis can emit the extracted transducer") {
  std::string tmp = "/tmp/dft_cli_test.spec";
  auto r = run("synthesize --bounded --emit-dft " + tmp + " " + fixture("shift"));
  CHECK(r.exitCode == 0);
  auto echoed = run("run --input 'ab|ba' " + tmp);
  CHECK(echoed.exitCode == 0);
  std::remove(tmp.c_str());
}
