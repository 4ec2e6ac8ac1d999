#include "ltpair/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ltpair");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ltpair::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Set LTPAIR_UPDATE_GOLDEN=1 to rewrite the files.
void golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(LTPAIR_GOLDEN_DIR) + "/" + name + ".json";
  if (std::getenv("LTPAIR_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual;
    return;
  }
  std::ifstream f(path);
  REQUIRE_MESSAGE(f.good(), "missing golden file " << path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(actual == ss.str());
}

void golden_run(const std::string& name, std::vector<std::string> args) {
  auto r = run(std::move(args));
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  golden(name, r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden outputs") {
    unsetenv("LTPAIR_CACHE_DIR");
    golden_run("local_factor_1_1_3", {"local-factor", "--t1", "1", "--t2", "1", "--ell", "3", "--k", "1", "--method", "both"});
    golden_run("local_factor_0_1_3", {"local-factor", "--t1", "0", "--t2", "1", "--ell", "3", "--k", "2", "--method", "both"});
    golden_run("local_factor_1_2_5_direct", {"--workers", "2", "local-factor", "--t1", "1", "--t2", "2", "--ell", "5"});
    golden_run("constant_0_0", {"constant", "--t1", "0", "--t2", "0", "--lmax", "100000"});
    golden_run("constant_universal", {"constant", "--kind", "universal", "--lmax", "10000", "--digits", "20"});
    golden_run("constant_trace", {"constant", "--t1", "1", "--t2", "2", "--lmax", "13", "--trace"});
    golden_run("class_number_-12", {"class-number", "--d", "-12"});
    golden_run("gekeler_1_5", {"gekeler", "--t", "1", "--p", "5", "--lmax", "100000"});
    golden_run("average_ell3", {"average", "--ell", "3", "--x", "10000"});
    golden_run("average_0_0", {"--workers", "1", "average", "--x", "10000", "--checkpoints", "1000,3000"});
    golden_run("curves", {"curves", "--e1", "-1,0", "--e2", "0,1", "--t1", "2", "--t2", "0", "--x", "2000", "--list-primes"});
    golden_run("simulate", {"simulate", "--m", "2", "--n", "5000", "--seed", "7"});
  }

  TEST_CASE("constant value prefix") {
    auto r = run({"constant", "--t1", "0", "--t2", "0", "--lmax", "100000"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["value"].get<std::string>().rfind("0.3645", 0) == 0);
    CHECK(j["reference"] == "35/96");
  }

  TEST_CASE("verify report schema") {
    auto r = run({"verify", "--suite", "arith"});
    CHECK(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["status"] == "pass");
    auto& s = j["suites"][0];
    CHECK(s["suite"] == "arith");
    CHECK(s["environment"].contains("seed"));
    std::set<std::string> ids;
    for (auto& c : s["checks"]) {
      for (auto key : {"id", "status", "kind", "lhs", "rhs", "tolerance", "elapsed"}) CHECK(c.contains(key));
      CHECK(ids.insert(c["id"].get<std::string>()).second);
      c.erase("elapsed");
    }
    golden("verify_arith", s.dump(2) + "\n");
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    auto unknown = run({"constant", "--bogus", "1"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("--bogus") != std::string::npos);
    auto bad_number = run({"gekeler", "--t", "1x", "--p", "5"});
    CHECK(bad_number.code == 2);
    CHECK(bad_number.err.find("--t") != std::string::npos);
    CHECK(run({"local-factor", "--t1", "1", "--t2", "1", "--ell", "4"}).code == 2);
    auto curve = run({"curves", "--e1", "1,z", "--e2", "0,1", "--t1", "0", "--t2", "0"});
    CHECK(curve.code == 2);
    CHECK(curve.err.find("position") != std::string::npos);
    CHECK(run({"class-number", "--d", "-5"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
  }

  TEST_CASE("average csv output") {
    auto path = std::filesystem::temp_directory_path() / "ltpair-unit-average.csv";
    auto r = run({"average", "--x", "3000", "--checkpoints", "1000,2000", "--csv", path.string()});
    CHECK(r.code == 0);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header == "x,loglog_x,partial_sum");
    int rows = 0;
    for (std::string line; std::getline(f, line);) ++rows;
    CHECK(rows == 3);
    std::filesystem::remove(path);
  }
}
