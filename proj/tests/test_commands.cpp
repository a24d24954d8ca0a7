#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hooklab/census_io.hpp"
#include "hooklab/commands.hpp"
#include "hooklab/errors.hpp"
#include "oracle.hpp"

using namespace hooklab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hooklab_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (const char* old = std::getenv("HOOKLAB_CACHE")) saved = old;
    if (value) ::setenv("HOOKLAB_CACHE", value, 1);
    else ::unsetenv("HOOKLAB_CACHE");
  }
  ~EnvGuard() {
    if (saved) ::setenv("HOOKLAB_CACHE", saved->c_str(), 1);
    else ::unsetenv("HOOKLAB_CACHE");
  }
  std::optional<std::string> saved;
};

int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string capture = (fs::temp_directory_path() / ("hooklab_cli_out_" + std::to_string(::getpid()))).string();
  const std::string cmd = std::string(HOOKLAB_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  const int status = std::system(cmd.c_str());
  if (out) *out = slurp(capture);
  fs::remove(capture);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

CensusRequest request(ClassId c, int n, int t, const fs::path& out, std::optional<fs::path> cache = std::nullopt) {
  CensusRequest r;
  r.class_id = c;
  r.n_max = n;
  r.t_max = t;
  r.out = out;
  r.cache_dir = std::move(cache);
  return r;
}

}  // namespace

TEST_CASE("census CSV contents") {
  EnvGuard env(nullptr);
  TempDir dir;
  cmd_census(request(ClassId::R1, 10, 2, dir.path / "r1.csv"));
  const std::string csv = slurp(dir.path / "r1.csv");
  CHECK(csv.starts_with("n,t,count\n"));
  CHECK(csv.find("\n4,1,3\n") != std::string::npos);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');

  cmd_census(request(ClassId::G2, 2, 2, dir.path / "g2.csv"));
  CHECK(slurp(dir.path / "g2.csv").find("\n2,2,1\n") != std::string::npos);

  cmd_census(request(ClassId::R1, 0, 1, dir.path / "zero.csv"));
  CHECK(slurp(dir.path / "zero.csv") == "n,t,count\n0,1,0\n");

  const auto side = nlohmann::json::parse(slurp(dir.path / "r1.json"));
  CHECK(side["class"] == "r1");
  CHECK(side["n_max"] == 10);
  CHECK(side["t_max"] == 2);
  CHECK(side["cardinality"].size() == 11);
  CHECK(side["total_hooks"][4] == 8);
  CHECK(side["generated_by"] == kVersion);
}

TEST_CASE("sidecar paths and large counts") {
  CHECK(sidecar_path("a/b.csv") == fs::path("a/b.json"));
  CHECK(sidecar_path("a/b") == fs::path("a/b.json"));
  HookCensus big;
  big.n_max = 0;
  big.t_max = 1;
  big.rows = {{BigInt("123456789012345678901234567890")}};
  big.cardinality = {BigInt("123456789012345678901234567890")};
  big.total_hooks = {0};
  const auto j = census_sidecar(big);
  CHECK(j["cardinality"][0] == "123456789012345678901234567890");
  CHECK(parse_census(census_csv(big), j) == big);
}

TEST_CASE("malformed inputs are rejected") {
  const auto c = census(ClassId::R1, 3, 1);
  auto side = census_sidecar(c);
  CHECK_THROWS_AS(parse_census("n,t,x\n", side), consistency_error);
  CHECK_THROWS_AS(parse_census("n,t,count\n0,1,0\n", side), consistency_error);
  side["class"] = "q7";
  CHECK_THROWS_AS(parse_census(census_csv(c), side), consistency_error);
}

TEST_CASE("cache round trip and extension") {
  EnvGuard env(nullptr);
  TempDir dir;
  const fs::path cache = dir.path / "cache";
  const auto first = cmd_census(request(ClassId::G1, 30, 3, dir.path / "a.csv", cache));
  CHECK_FALSE(first.cache_used);
  CHECK(fs::exists(cache_path(cache, ClassId::G1)));
  CHECK(read_census(dir.path / "a.csv") == first.census);

  const auto extended = cmd_census(request(ClassId::G1, 40, 3, dir.path / "b.csv", cache));
  CHECK(extended.cache_used);
  CHECK(extended.computed_from == 31);
  CHECK(extended.census == census(ClassId::G1, 40, 3));

  TempDir fresh_dir;
  cmd_census(request(ClassId::G1, 40, 3, fresh_dir.path / "fresh.csv"));
  CHECK(slurp(dir.path / "b.csv") == slurp(fresh_dir.path / "fresh.csv"));
  CHECK(slurp(dir.path / "b.json") == slurp(fresh_dir.path / "fresh.json"));

  const auto hit = cmd_census(request(ClassId::G1, 20, 2, dir.path / "c.csv", cache));
  CHECK(hit.cache_used);
  CHECK(hit.computed_from == 21);
  CHECK(hit.census == census(ClassId::G1, 20, 2));
  CHECK(read_census(cache_path(cache, ClassId::G1)).n_max == 40);

  // more hook lengths than cached: rebuilt at the larger n
  const auto wider = cmd_census(request(ClassId::G1, 10, 5, dir.path / "d.csv", cache));
  CHECK_FALSE(wider.cache_used);
  const auto stored = read_census(cache_path(cache, ClassId::G1));
  CHECK(stored.n_max == 40);
  CHECK(stored.t_max == 5);

  // no temporary files are left behind
  for (const auto& e : fs::directory_iterator(cache)) CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
}

TEST_CASE("HOOKLAB_CACHE overrides the cache flag") {
  TempDir dir;
  const fs::path env_cache = dir.path / "env";
  EnvGuard env(env_cache.c_str());
  cmd_census(request(ClassId::R2, 10, 1, dir.path / "x.csv", dir.path / "flag"));
  CHECK(fs::exists(cache_path(env_cache, ClassId::R2)));
  CHECK_FALSE(fs::exists(dir.path / "flag"));
}

TEST_CASE("corrupt cache entries are recomputed") {
  EnvGuard env(nullptr);
  TempDir dir;
  const fs::path cache = dir.path / "cache";
  fs::create_directories(cache);
  std::ofstream(cache_path(cache, ClassId::R1)) << "garbage\n";
  std::ofstream(sidecar_path(cache_path(cache, ClassId::R1))) << "{}";
  const auto out = cmd_census(request(ClassId::R1, 12, 2, dir.path / "r.csv", cache));
  CHECK_FALSE(out.cache_used);
  CHECK(out.census == census(ClassId::R1, 12, 2));
}

TEST_CASE("verify") {
  const auto clean = cmd_verify(40);
  CHECK(clean.all_passed());
  CHECK(clean.checks.size() == 17);
  CHECK(cmd_verify(0).all_passed());

  VerifyOptions opts;
  opts.corrupt = [](const std::string& name, TruncatedSeries& s) {
    if (name == "H22") s[17] += 1;
  };
  const auto bad = cmd_verify(25, opts);
  CHECK_FALSE(bad.all_passed());
  int failed = 0;
  for (const auto& c : bad.checks)
    if (!c.passed) {
      ++failed;
      CHECK(c.name.starts_with("H22"));
      CHECK(c.detail.find("q^17") != std::string::npos);
    }
  CHECK(failed == 1);
  CHECK_THROWS_AS(cmd_verify(81), usage_error);
}

TEST_CASE("crossover") {
  const auto small = cmd_crossover("r-t1", 4);
  CHECK(small.lhs[4] == 3);
  CHECK(small.rhs[4] == 2);
  REQUIRE(small.first_hold.has_value());
  CHECK(*small.first_hold <= 4);

  for (const char* pair : {"r-t1", "r-t2", "g-t1", "g-t2"}) {
    const auto r = cmd_crossover(pair, 2000);
    INFO(pair);
    REQUIRE(r.first_hold.has_value());
    CHECK(*r.first_hold <= 2000);
    CHECK(recheck_crossover(r));
    for (int v : r.violations) CHECK(v < *r.first_hold);
  }
  CHECK(cmd_crossover("r-t1", 2000).pair == "r11-vs-r21");
  CHECK(cmd_crossover("g-t2", 100).relation == "<");
  CHECK_THROWS_AS(cmd_crossover("x-t1", 10), usage_error);
  CHECK_THROWS_AS(cmd_crossover("r-t1", 5001), usage_error);

  auto tampered = cmd_crossover("g-t1", 300);
  tampered.first_hold = *tampered.first_hold - 1;
  CHECK_FALSE(recheck_crossover(tampered));
}

TEST_CASE("conjecture scan") {
  const auto scans = cmd_conjecture({3, 4}, 50);
  REQUIRE(scans.size() == 4);
  const auto ex = oracle::census_all(50, 4);
  for (const auto& s : scans) {
    CHECK(s.counterexamples_above.empty());
    const auto& one = ex[s.family == "r" ? 0 : 2];
    const auto& two = ex[s.family == "r" ? 1 : 3];
    for (int n = 0; n <= 50; ++n) {
      CHECK(s.class1[n] == one.counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(s.t - 1)]);
      CHECK(s.class2[n] == two.counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(s.t - 1)]);
    }
    if (s.holds_from) {
      for (int n = *s.holds_from; n <= 50; ++n) CHECK(s.class1[n] < s.class2[n]);
      if (*s.holds_from > 0) CHECK_FALSE(s.class1[*s.holds_from - 1] < s.class2[*s.holds_from - 1]);
    }
  }
  CHECK_NOTHROW(cmd_conjecture({3}, 5));
  CHECK_THROWS_AS(cmd_conjecture({2}, 50), usage_error);
  CHECK_THROWS_AS(cmd_conjecture({3}, 121), usage_error);
}

TEST_CASE("ratios") {
  const auto r2 = cmd_ratios("r2-cross", {500, 1000, 2000});
  REQUIRE(r2.rows.size() == 3);
  CHECK(r2.limit == 1.5);
  CHECK(std::abs(r2.rows[2].ratio - 1.5) < std::abs(r2.rows[0].ratio - 1.5));
  CHECK(r2.rows[0].ratio == doctest::Approx(1.4138).epsilon(1e-3));
  const auto g2 = cmd_ratios("g2-cross", {500, 1000, 2000});
  CHECK(std::abs(g2.rows[2].ratio - 0.75) < std::abs(g2.rows[0].ratio - 0.75));
  const auto m = cmd_ratios("r11-model", {2000});
  CHECK(m.rows[0].ratio > 0);
  CHECK(std::isfinite(m.rows[0].ratio));
  CHECK(cmd_ratios("g22", {100}).rows.size() == 1);
  CHECK_THROWS_AS(cmd_ratios("zz", {10}), usage_error);
  CHECK_THROWS_AS(cmd_ratios("r2-cross", {0}), usage_error);
}

TEST_CASE("asym table") {
  for (const char* t : {"S11", "H11"}) {
    const auto table = cmd_asym(t, {0.05, 0.02, 0.01});
    CHECK(table.monotone);
    CHECK(table.rows.size() == 3);
  }
  CHECK_FALSE(cmd_asym("S11", {0.01, 0.05}).monotone);
  CHECK_THROWS_AS(cmd_asym("S11", {}), usage_error);
  CHECK_THROWS_AS(cmd_asym("Q11", {0.1}), usage_error);
}

TEST_CASE("command line exit codes") {
  TempDir dir;
  std::string out;
  CHECK(run_cli("census --class r1 --n-max 10 --t-max 2 --out " + (dir.path / "c.csv").string(), &out) == 0);
  CHECK(slurp(dir.path / "c.csv").find("\n4,1,3\n") != std::string::npos);
  CHECK(run_cli("verify --n-max 12") == 0);
  CHECK(run_cli("verify --n-max 12 --json", &out) == 0);
  CHECK(nlohmann::json::parse(out)["passed"] == true);
  CHECK(run_cli("crossover --pair g-t2 --n-max 300 --json", &out) == 0);
  CHECK(nlohmann::json::parse(out)["pair"] == "g12-vs-g22");
  CHECK(run_cli("conjecture --t 3,4 --n-max 30") == 0);
  CHECK(run_cli("ratios --pair r2-cross --checkpoints 100,200") == 0);
  CHECK(run_cli("asym --target S11 --eps 0.05,0.02") == 0);
  CHECK(run_cli("asym --target S11 --eps 0.02,0.05") == 1);
  CHECK(run_cli("asym --target S11") == 2);
  CHECK(run_cli("census --class r9 --n-max 3 --t-max 1 --out x.csv") == 2);
  CHECK(run_cli("verify --n-max 500") == 2);
  CHECK(run_cli("census --class r2 --n-max 400 --t-max 2 --out " + (dir.path / "big.csv").string()) == 3);
  CHECK_FALSE(fs::exists(dir.path / "big.csv"));
  CHECK(run_cli("bogus") == 2);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("--help") == 0);
}
