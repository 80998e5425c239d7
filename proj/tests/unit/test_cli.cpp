#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dcc/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dccheck");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int status = dcc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

const std::string data = DCC_CLI_DATA_DIR;
const std::string corpus = DCC_CORPUS_DIR;

}  // namespace

TEST_CASE("check exit statuses") {
  CHECK(invoke({"check", data + "/inverse.ccc"}).status == 0);
  const Result u = invoke({"check", data + "/unequal.ccc"});
  CHECK(u.status == 1);
  CHECK(u.out.find("UNEQUAL") != std::string::npos);
  const Result m = invoke({"check", data + "/malformed.ccc"});
  CHECK(m.status == 2);
  CHECK(m.err.find("malformed.ccc:2:12:") != std::string::npos);
  CHECK(invoke({"check", data + "/missing.ccc"}).status == 2);
  CHECK(invoke({"check", corpus + "/axioms.ccc"}).status == 0);
}

TEST_CASE("normalize") {
  const Result r = invoke({"normalize", corpus + "/teleportation.ccc", "left"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"schema\": 1") != std::string::npos);
  CHECK(invoke({"normalize", corpus + "/teleportation.ccc", "nosuch"}).status == 2);
}

TEST_CASE("render") {
  const Result a = invoke({"render", corpus + "/axioms.ccc", "twist", "--format", "dot"});
  const Result b = invoke({"render", corpus + "/axioms.ccc", "twist", "--format", "dot"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(invoke({"render", corpus + "/axioms.ccc", "twist", "--format", "png"}).status == 2);
  CHECK(invoke({"render", corpus + "/axioms.ccc", "twist", "--direction", "up"}).status == 0);
  const std::string path = std::string(DCC_BINARY_DIR) + "/twist.dot";
  CHECK(invoke({"render", corpus + "/axioms.ccc", "twist", "--format", "dot", "-o", path}).status == 0);
  std::ifstream in(path);
  std::stringstream written;
  written << in.rdbuf();
  CHECK(written.str() == a.out);
}

TEST_CASE("protocol") {
  const Result all = invoke({"protocol", "all"});
  CHECK(all.status == 0);
  CHECK(all.out.find("UNEQUAL") == std::string::npos);
  const Result t = invoke({"protocol", "teleportation", "--oracle"});
  CHECK(t.status == 0);
  CHECK(t.out.find("numeric agree") != std::string::npos);
  CHECK(invoke({"protocol", "nosuch"}).status == 2);
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
}
