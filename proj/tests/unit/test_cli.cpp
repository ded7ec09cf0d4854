#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kpg/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = kpg::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("kpgraph_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("invariant of the triangle") {
  const Result r = run({"invariant", "--which", "W", "--graph6", "Bw"});
  CHECK(r.status == 0);
  CHECK(r.out == "q1^3 + 3 q1 q2 + 2 q3\n");
  CHECK(run({"invariant", "--which", "A", "--graph6", "Bw"}).out == "q1^3 + 6 q1 q2 + 9 q3\n");
}

TEST_CASE("invariant over a graph6 file") {
  const std::string path = temp_file("corpus.g6", "A_\n# comment\nBw\n");
  const Result r = run({"invariant", "--input", path});
  CHECK(r.status == 0);
  CHECK(r.out == "A_: q1^2 + q2\nBw: q1^3 + 3 q1 q2 + 2 q3\n");
}

TEST_CASE("constants CSV") {
  const Result r = run({"constants", "--which", "A", "--max-n", "4"});
  CHECK(r.status == 0);
  CHECK(r.out == "n,i_n,lambda_n\n1,1,1\n2,2,1\n3,18,8/9\n4,512,3/4\n");
}

TEST_CASE("kp-check on built-in series") {
  for (const char* s : {"S", "W", "A"}) {
    const Result r = run({"kp-check", "--series", s, "--order", "7"});
    CHECK(r.status == 0);
    CHECK(r.out.find("KP1: 0 through weight 3") != std::string::npos);
    CHECK(r.out.find("KP2: 0 through weight 2") != std::string::npos);
  }
}

TEST_CASE("kp-check flags a non-tau input") {
  // 1 + s2 + s11 = 1 + p1^2
  const std::string path =
      temp_file("bad_tau.json", R"({"variable":"p","order":7,"terms":[)"
                                R"({"exponents":[],"numerator":"1","denominator":"1"},)"
                                R"({"exponents":[2],"numerator":"1","denominator":"1"}]})");
  const Result r = run({"kp-check", "--input", path});
  CHECK(r.status == 1);
  CHECK(r.out.find("KP1: nonzero through weight 3") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"invariant", "--graph6", "B!"}).status == 2);           // malformed graph6
  CHECK(run({"invariant", "--graph6", "Bww"}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);                            // unknown subcommand
  CHECK(run({}).status == 2);
  CHECK(run({"invariant", "--which", "X", "--graph6", "Bw"}).status == 2);
  CHECK(run({"invariant"}).status == 2);                             // no graph given
  CHECK(run({"series", "--order", "9"}).status == 3);                // size cap
  CHECK(run({"series", "--order", "8"}).status == 3);                // needs opt-in
  CHECK(run({"invariant", "--graph6", "D~{", "--order", "4"}).status == 3);
  CHECK(run({"tables", "--max-n", "6"}).status == 3);
  CHECK(run({"series", "--kind", "half"}).status == 2);
  CHECK(run({"series", "--jobs", "0"}).status == 2);
  const std::string q_series = temp_file("q.json", R"({"variable":"q","order":5,"terms":[]})");
  CHECK(run({"kp-check", "--input", q_series}).status == 4);         // wrong variable family
  CHECK(run({"kp-check", "--input", "/nonexistent/file.json"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("order 8 needs the opt-in and warns") {
  const Result r = run({"invariant", "--graph6", "Bw", "--order", "8", "--allow-order-8"});
  CHECK(r.status == 0);
}

TEST_CASE("output is deterministic and independent of jobs") {
  const Result a = run({"series", "--which", "W", "--order", "6", "--jobs", "1"});
  const Result b = run({"series", "--which", "W", "--order", "6", "--jobs", "3", "--isa", "scalar"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run({"series", "--which", "W", "--order", "6"}).out);
}

TEST_CASE("rescale reproduces log of the target series") {
  const Result w = run({"rescale", "--which", "W", "--order", "6"});
  const Result a = run({"rescale", "--which", "A", "--order", "6"});
  CHECK(w.status == 0);
  CHECK(w.out == a.out);
  CHECK(w.out.find("wt 4: ") != std::string::npos);
}

TEST_CASE("rescale of an input series") {
  const std::string path = temp_file(
      "q4.json", R"({"variable":"q","order":4,"terms":[{"exponents":[0,0,0,1],"numerator":"79","denominator":"24"}]})");
  const Result r = run({"rescale", "--which", "W", "--input", path});
  CHECK(r.status == 0);
  CHECK(r.out == "wt 4: 16 p4\n");
}

TEST_CASE("json formats parse") {
  const Result r = run({"invariant", "--graph6", "A_", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"variable\": \"q\"") != std::string::npos);
  CHECK(run({"hopf", "--op", "coproduct", "--graph6", "A_", "--format", "json"}).status == 2);
}
