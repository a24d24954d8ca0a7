#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hooklab/asym.hpp"
#include "hooklab/hooks.hpp"
#include "hooklab/series.hpp"

namespace hooklab {

/// Bad arguments that should map to the usage exit code.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// census ------------------------------------------------------------------

struct CensusRequest {
  ClassId class_id = ClassId::R1;
  int n_max = 0;
  int t_max = 1;
  std::filesystem::path out;
  std::optional<std::filesystem::path> cache_dir;
  CensusOptions options;
};

struct CensusOutcome {
  HookCensus census;
  std::filesystem::path csv_path;
  std::filesystem::path json_path;
  std::optional<std::filesystem::path> cache_dir;
  bool cache_used = false;   // rows were taken from a cached census
  int computed_from = 0;     // first n that had to be enumerated
};

/// HOOKLAB_CACHE when set, else the flag value.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

CensusOutcome cmd_census(const CensusRequest& request);

// verify ------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  int n_max = 0;
  std::vector<CheckResult> checks;
  [[nodiscard]] bool all_passed() const;
};

struct VerifyOptions {
  int ceiling = 80;
  int unrestricted_limit = 30;  // largest n for checks over all partitions
  /// Test hook: may modify a generated series (named like "S11", "H22")
  /// before it is compared with the census.
  std::function<void(const std::string& name, TruncatedSeries& series)> corrupt;
};

VerifyReport cmd_verify(int n_max, const VerifyOptions& options = {});

// crossover ---------------------------------------------------------------

struct CrossoverReport {
  std::string pair;          // e.g. "r11-vs-r21"
  std::string relation;      // ">" or "<": class 1 versus class 2
  int n_max = 0;
  std::optional<int> first_hold;
  std::vector<int> violations;
  std::vector<BigInt> lhs;   // class-1 coefficients, n = 0..n_max
  std::vector<BigInt> rhs;   // class-2 coefficients
};

inline constexpr int kCrossoverLimit = 5000;

/// pair in {r-t1, r-t2, g-t1, g-t2}.
CrossoverReport cmd_crossover(const std::string& pair, int n_max);

/// Independent pass over the emitted sequences: the relation holds on
/// [first_hold, n_max] and fails at each listed violation.
bool recheck_crossover(const CrossoverReport& report);

// conjecture --------------------------------------------------------------

struct ConjectureScan {
  int t = 3;
  std::string family;  // "r" or "g"
  int n_max = 0;
  std::optional<int> holds_from;
  std::vector<int> counterexamples_above;
  std::vector<BigInt> class1;
  std::vector<BigInt> class2;
};

struct ConjectureOptions {
  int ceiling = 120;
  CensusOptions census;
};

/// One census pass per class at t_max = max(t_list), then per t and family
/// the least N0 with class-1 count < class-2 count on [N0, n_max].
std::vector<ConjectureScan> cmd_conjecture(const std::vector<int>& t_list, int n_max,
                                           const ConjectureOptions& options = {});

// ratios ------------------------------------------------------------------

struct RatioRow {
  int n = 0;
  double ratio = 0;
};

struct RatioTable {
  std::string pair;
  std::string description;
  double limit = 1;
  std::vector<RatioRow> rows;
};

/// pair: a model id ("r11".."g22", optionally suffixed "-model") compared
/// with its asymptotic model, or a cross ratio "r2-cross" (r22/r21),
/// "g2-cross" (g21/g22), "r1-cross" (r11/r21), "g1-cross" (g11/g21).
RatioTable cmd_ratios(const std::string& pair, const std::vector<int>& checkpoints);

// asym --------------------------------------------------------------------

struct AsymTable {
  SaddleTarget target = SaddleTarget::S11;
  std::vector<SaddleProbe> rows;
  bool monotone = true;  // |ratio - 1| strictly decreasing along the list
};

AsymTable cmd_asym(const std::string& target, const std::vector<double>& eps_list);

// rendering ---------------------------------------------------------------

nlohmann::json to_json(const CensusOutcome& o);
nlohmann::json to_json(const VerifyReport& r);
nlohmann::json to_json(const CrossoverReport& r);
nlohmann::json to_json(const std::vector<ConjectureScan>& scans);
nlohmann::json to_json(const RatioTable& t);
nlohmann::json to_json(const AsymTable& t);

std::string to_text(const CensusOutcome& o);
std::string to_text(const VerifyReport& r);
std::string to_text(const CrossoverReport& r);
std::string to_text(const std::vector<ConjectureScan>& scans);
std::string to_text(const RatioTable& t);
std::string to_text(const AsymTable& t);

}  // namespace hooklab
