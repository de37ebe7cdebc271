#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "gstark/verify.hpp"

using namespace gstark;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "verify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = verify_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("gstark_test_verify_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream f(p);
  return nlohmann::json::parse(f);
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli({"interp", "--p", "5", "--disc", "-3", "-4"}).code == 0);
  CHECK(cli({"interp"}).code == 2);
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({"lambda", "--p", "9"}).code == 2);
  CHECK(cli({"lambda", "--prec", "1"}).code == 2);
  CHECK(cli({"hecke", "--p", "7", "--qexp-terms", "20"}).code == 2);
  CHECK(cli({"interp", "--disc", "-5"}).code == 2);
  CHECK(cli({"lambda", "--bogus"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  // a non-split instance is an error record, not a usage error
  auto r = cli({"gross-stark", "--p", "5", "--disc", "-4", "-3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("error  gross_stark  p=5 d=-3") != std::string::npos);
}

TEST_CASE("gross-stark examples pass") {
  for (auto [p, d] : std::vector<std::pair<std::string, std::string>>{{"5", "-4"}, {"7", "-3"}}) {
    auto path = scratch("gs.json");
    CHECK(cli({"gross-stark", "--p", p, "--disc", d, "--json", path.string()}).code == 0);
    auto j = read_json(path);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][0]["discrepancy_valuation"].get<long>() >= 12 - 3);
  }
}

TEST_CASE("low precision is inconclusive, not a failure") {
  auto r = cli({"interp", "--p", "5", "--disc", "-4", "--prec", "3"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(r.out.find("inconclusive") != std::string::npos);
  CHECK(r.out.find("pass") == std::string::npos);
}

TEST_CASE("report schema and determinism") {
  auto a = scratch("a.json"), b = scratch("b.json");
  for (const auto& path : {a, b})
    CHECK(cli({"hecke", "--p", "7", "--disc", "-3", "-20", "--qexp-terms", "60", "--json", path.string()}).code == 0);
  auto ja = read_json(a), jb = read_json(b);
  CHECK(ja["version"] == kToolkitVersion);
  CHECK(ja["config"]["p"] == 7);
  CHECK(ja["config"]["discs"] == nlohmann::json::array({-3, -20}));
  for (auto* j : {&ja, &jb})
    for (auto& c : (*j)["checks"]) {
      CHECK(c.contains("id"));
      CHECK(c.contains("instance"));
      CHECK(c.contains("status"));
      CHECK(c.contains("discrepancy_valuation"));
      CHECK(c.contains("ms"));
      c.erase("ms");
    }
  CHECK(ja.dump() == jb.dump());

  RunConfig c;
  c.command = "w-algebra";
  c.trials = 5;
  BernoulliCache cache;
  CHECK(run(c, cache).to_json(false) == run(c, cache).to_json(false));
}

TEST_CASE("warm cache does no Bernoulli work") {
  auto dir = scratch("cache");
  std::filesystem::remove_all(dir);
  RunConfig c;
  c.command = "interp";
  c.p = 7;
  c.discs = {-3, -4, -19};
  c.cache_dir = dir.string();

  BernoulliCache cold;
  auto r1 = run(c, cold);
  CHECK(cold.computed_count() > 0);
  std::filesystem::create_directories(dir);
  cold.save(dir / "bernoulli.json");

  BernoulliCache warm;
  warm.load(dir / "bernoulli.json");
  auto r2 = run(c, warm);
  CHECK(warm.computed_count() == 0);
  CHECK(r1.to_json(false) == r2.to_json(false));

  // the CLI writes the cache it used
  auto cdir = scratch("cli_cache");
  std::filesystem::remove_all(cdir);
  CHECK(cli({"interp", "--p", "7", "--disc", "-4", "--cache", cdir.string()}).code == 0);
  CHECK(std::filesystem::exists(cdir / "bernoulli.json"));
}

TEST_CASE("cache directory resolution") {
  RunConfig c;
  ::unsetenv(kCacheEnvVar);
  CHECK(resolve_cache_dir(c).empty());
  ::setenv(kCacheEnvVar, "/tmp/from_env", 1);
  CHECK(resolve_cache_dir(c) == "/tmp/from_env");
  c.cache_dir = "/tmp/from_flag";
  CHECK(resolve_cache_dir(c) == "/tmp/from_flag");
  ::unsetenv(kCacheEnvVar);
}

TEST_CASE("every command passes on defaults") {
  for (const char* cmd : {"w-algebra", "hecke", "lambda"}) {
    auto r = cli({cmd});
    CHECK_MESSAGE(r.code == 0, cmd, "\n", r.out);
  }
}
