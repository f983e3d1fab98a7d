#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bruhatcube/permutation.hpp"
#include "cli.hpp"

using bruhatcube::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bit-reversal pair listing") {
  const Result r = call({"gen-xy", "--m", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 8 4 12 2 10 6 14 1 9 5 13 3 11 7 15\n15 7 11 3 13 5 9 1 14 6 10 2 12 4 8 0\n");
}

TEST_CASE("printed permutations parse back") {
  const Result r = call({"gen-xy", "--m", "3"});
  std::istringstream lines(r.out);
  std::string x, y;
  std::getline(lines, x);
  std::getline(lines, y);
  const auto px = bruhatcube::parse_permutation(x);
  const auto py = bruhatcube::parse_permutation(y);
  CHECK(call({"leq", x, y}).code == 0);
  CHECK(bruhatcube::to_string(px) == x);
  CHECK(bruhatcube::compose(px, py) == bruhatcube::longest_element(8));
}

TEST_CASE("d-invariant and comparisons") {
  CHECK(call({"dinv", "0 2 1 3", "3 1 2 0"}).out == "4\n");
  CHECK(call({"len", "2 0 1"}).out == "2\n");
  const Result yes = call({"leq", "0 1 2", "2 1 0"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "true\n");
  const Result no = call({"leq", "2 1 0", "0 1 2"});
  CHECK(no.code == 1);
  CHECK(no.out == "false\n");
  CHECK(call({"dwd", "0 1 2 3"}).code == 1);
  CHECK(call({"dwd", "0 2 1 3"}).code == 0);
}

TEST_CASE("domain errors exit 1 without output") {
  const Result r = call({"dinv", "2 1 0", "0 1 2"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("usage errors exit 2") {
  const Result bad = call({"len", "0 x 1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("invalid token 'x'") != std::string::npos);
  CHECK(call({"len", "0 0 1"}).code == 2);
  CHECK(call({"no-such-command"}).code == 2);
  CHECK(call({"--format", "xml", "len", "0"}).code == 2);
  CHECK(call({"dinv", "0 1", "0 1 2"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("size guards exit 3") {
  const Result r = call({"census", "--n", "8"});
  CHECK(r.code == 3);
  CHECK(r.err.find("refused") != std::string::npos);
  CHECK(call({"maxd", "--n", "8"}).code == 3);
  CHECK(call({"verify-theorem", "--m", "4"}).code == 3);
}

TEST_CASE("census formats") {
  CHECK(call({"--format", "csv", "census", "--n", "3"}).out == "k,total,hypercubes\n1,8,8\n2,4,4\n3,1,0\n");
  const auto j = nlohmann::json::parse(call({"--format", "json", "census", "--n", "3"}).out);
  CHECK(j["n"] == 3);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["hypercubes"] == 0);
  const Result text = call({"census", "--n", "3", "--kmin", "2", "--kmax", "2"});
  CHECK(text.out.find("2\t4\t4") != std::string::npos);
}

TEST_CASE("json schemas") {
  const auto maxd = nlohmann::json::parse(call({"--format", "json", "maxd", "--n", "4"}).out);
  CHECK(maxd["n"] == 4);
  CHECK(maxd["f"] == 4);
  CHECK(maxd["x"] == "0 2 1 3");
  CHECK(maxd["y"] == "3 1 2 0");
  const auto rpoly = nlohmann::json::parse(call({"--format", "json", "rpoly", "0 1 2 3", "3 2 1 0"}).out);
  CHECK(rpoly == nlohmann::json::parse("[1,-3,4,-4,4,-3,1]"));
  const auto theorem = nlohmann::json::parse(call({"--format", "json", "verify-theorem", "--m", "2"}).out);
  CHECK(theorem["passed"] == true);
  CHECK(theorem["rank"] == 4);
  const auto embed = nlohmann::json::parse(call({"--format", "json", "embed-check", "0 1 2", "2 1 0"}).out);
  CHECK(embed["good"] == true);
  CHECK(embed["vertices"].size() == 6);
  const auto cube = nlohmann::json::parse(call({"--format", "json", "phi-encode", "0 2 1 3"}).out);
  CHECK(cube["m"] == 2);
  CHECK(cube["bits"] == "0000");
}

TEST_CASE("dwd cube round trip through the command line") {
  const Result enc = call({"phi-encode", "3 1 2 0"});
  CHECK(enc.out == "1111\n");
  const Result dec = call({"phi-decode", "--m", "2", "1111"});
  CHECK(dec.out == "3 1 2 0\n");
  CHECK(call({"phi-decode", "--m", "2", "111"}).code == 2);
}

TEST_CASE("t-adic commands") {
  CHECK(call({"dwd-t", "4 1 8 2 7 3 0 5 6", "--t", "3", "--m", "2"}).code == 0);
  CHECK(call({"dwd-t", "--count", "--t", "2", "--m", "2"}).out == "16\n");
  CHECK(call({"gen-xy-t", "--t", "3", "--m", "2"}).out == "0 3 6 1 4 7 2 5 8\n8 5 2 7 4 1 6 3 0\n");
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "bruhatcube_cli_out.txt";
  std::filesystem::remove(path);
  const Result r = call({"--out", path.string(), "gen-xy", "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == "0 1\n1 0\n");
  std::filesystem::remove(path);
}

TEST_CASE("net file round trip through the command line") {
  const auto path = std::filesystem::temp_directory_path() / "bruhatcube_cli_net.txt";
  CHECK(call({"--out", path.string(), "net-export", "0 4 2 6 1 5 3 7"}).code == 0);
  CHECK(call({"net-check", path.string()}).code == 0);
  CHECK(call({"--out", path.string(), "net-export", "0 1 2 3 4 5 6 7"}).code == 0);
  CHECK(call({"net-check", path.string()}).code == 1);
  std::filesystem::remove(path);
  CHECK(call({"net-check", path.string()}).code == 2);
}

TEST_CASE("thread count does not change results") {
  for (const std::string cmd : {"census", "maxd"}) {
    const Result one = call({"--threads", "1", "--format", "json", cmd, "--n", "5"});
    const Result four = call({"--threads", "4", "--format", "json", cmd, "--n", "5"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
  }
}

TEST_CASE("seeded search is reproducible") {
  const Result a = call({"--seed", "9", "--budget", "3000", "--format", "json", "search", "--n", "5"});
  const Result b = call({"--seed", "9", "--budget", "3000", "--format", "json", "search", "--n", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
