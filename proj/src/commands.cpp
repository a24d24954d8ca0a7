#include "hooklab/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include "hooklab/census_io.hpp"
#include "hooklab/errors.hpp"
#include "hooklab/generating.hpp"

namespace hooklab {

namespace fs = std::filesystem;

namespace {

double log_big(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::vector<BigInt> coefficients(const TruncatedSeries& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

TruncatedSeries family_series(char family, int j, int t, int N) {
  return family == 'r' ? series_S(j, t, N) : series_H(j, t, N);
}

std::string series_name(char family, int j, int t) {
  return std::string(1, family == 'r' ? 'S' : 'H') + std::to_string(j) + std::to_string(t);
}

std::string discrepancy_text(const Discrepancy& d, const char* lhs, const char* rhs) {
  return "first discrepancy at q^" + std::to_string(d.exponent) + ": " + lhs + "=" + d.lhs.get_str() + " " + rhs +
         "=" + d.rhs.get_str();
}

// Least N0 such that holds(n) for every n in [N0, n_max], scanning down from
// n_max; absent when holds(n_max) is false.
std::optional<int> last_stable_start(int n_max, const std::function<bool(int)>& holds) {
  int n = n_max;
  while (n >= 0 && holds(n)) --n;
  if (n == n_max) return std::nullopt;
  return n + 1;
}

struct PartitionCheck {
  explicit PartitionCheck(std::string label) : name(std::move(label)) {}
  std::string name;
  long failures = 0;
  std::string first;
  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  [[nodiscard]] CheckResult result() const {
    return {name, failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures; first: " + first};
  }
};

void check_universal(const Partition& p, PartitionCheck& involution, PartitionCheck& conservation,
                     PartitionCheck& one_hooks, PartitionCheck& two_hooks) {
  if (conjugate(conjugate(p)) != p) involution.fail(p.to_string());
  long cells = 0;
  const int largest_hook = p.empty() ? 0 : p[0] + p.length() - 1;
  for (int t = 1; t <= largest_hook; ++t) cells += t_hook_count(p, t);
  if (cells != p.size()) conservation.fail(p.to_string());
  const ShortcutStats st = shortcut_stats(p);
  const int h1 = t_hook_count(p, 1);
  const int h2 = t_hook_count(p, 2);
  if (h1 != st.d) one_hooks.fail(p.to_string() + " has " + std::to_string(h1) + " 1-hooks, d=" + std::to_string(st.d));
  if (h2 != st.gap_gt1 + st.m_gt1)
    two_hooks.fail(p.to_string() + " has " + std::to_string(h2) + " 2-hooks, gaps+repeats=" +
                   std::to_string(st.gap_gt1 + st.m_gt1));
}

}  // namespace

std::optional<fs::path> resolve_cache_dir(const std::optional<fs::path>& flag) {
  if (const char* env = std::getenv("HOOKLAB_CACHE"); env != nullptr && *env != '\0') return fs::path(env);
  return flag;
}

// census ------------------------------------------------------------------

CensusOutcome cmd_census(const CensusRequest& request) {
  if (request.n_max < 0) throw usage_error("--n-max must be non-negative");
  if (request.t_max < 1) throw usage_error("--t-max must be at least 1");
  if (request.out.empty()) throw usage_error("--out is required");

  CensusOutcome outcome;
  outcome.cache_dir = resolve_cache_dir(request.cache_dir);
  std::optional<HookCensus> cached;
  if (outcome.cache_dir) cached = load_cached(*outcome.cache_dir, request.class_id);

  HookCensus full;
  bool refresh_cache = true;
  if (cached && cached->t_max >= request.t_max) {
    outcome.cache_used = true;
    if (cached->n_max >= request.n_max) {
      full = *cached;
      outcome.computed_from = request.n_max + 1;
      refresh_cache = false;
    } else {
      full = extend_census(*cached, request.n_max, request.options);
      outcome.computed_from = cached->n_max + 1;
    }
  } else {
    // a cached census with too few t columns is rebuilt at the larger n_max
    const int n_full = cached ? std::max(cached->n_max, request.n_max) : request.n_max;
    full = census(request.class_id, n_full, request.t_max, request.options);
    outcome.computed_from = 0;
  }

  outcome.census = slice_census(full, request.n_max, request.t_max);
  outcome.csv_path = request.out;
  outcome.json_path = sidecar_path(request.out);
  write_census(outcome.census, request.out);
  if (outcome.cache_dir && refresh_cache) store_cached(*outcome.cache_dir, full);
  return outcome;
}

// verify ------------------------------------------------------------------

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport cmd_verify(int n_max, const VerifyOptions& options) {
  if (n_max < 0) throw usage_error("--n-max must be non-negative");
  if (n_max > options.ceiling)
    throw usage_error("--n-max exceeds the enumeration ceiling of " + std::to_string(options.ceiling));
  VerifyReport report;
  report.n_max = n_max;

  for (char family : {'r', 'g'}) {
    for (int j = 1; j <= 2; ++j) {
      const ClassId cls = class_for(family, j);
      const HookCensus counts = census(cls, n_max, 2);
      for (int t = 1; t <= 2; ++t) {
        TruncatedSeries s = family_series(family, j, t, n_max);
        const std::string name = series_name(family, j, t);
        if (options.corrupt) options.corrupt(name, s);
        std::vector<BigInt> expect;
        for (int n = 0; n <= n_max; ++n) expect.push_back(counts.count(n, t));
        const auto d = first_discrepancy(s, TruncatedSeries(n_max, expect));
        CheckResult r{name + " vs " + std::string(to_string(cls)) + " census, t=" + std::to_string(t), !d, ""};
        if (d) r.detail = discrepancy_text(*d, "series", "census");
        report.checks.push_back(r);
      }
    }
  }

  for (auto [which, label] : {std::pair{Identity::RR1, "RR1"}, std::pair{Identity::LG1, "LG1"}}) {
    const IdentityReport id = identity_check_sum_product(which, n_max);
    CheckResult r{std::string(label) + " sum = product", id.holds, ""};
    if (id.first_mismatch) r.detail = discrepancy_text(*id.first_mismatch, "sum", "product");
    report.checks.push_back(r);
  }

  PartitionCheck involution{"conjugation is an involution"};
  PartitionCheck conservation{"hook count equals size"};
  PartitionCheck one_hooks{"1-hooks = distinct parts"};
  PartitionCheck two_hooks{"2-hooks = gaps > 1 + repeated values"};
  const int unrestricted = std::min(n_max, options.unrestricted_limit);
  for (int n = 0; n <= unrestricted; ++n)
    for_each_partition(n, [&](std::span<const int> parts) {
      check_universal(Partition(std::vector<int>(parts.begin(), parts.end())), involution, conservation, one_hooks,
                      two_hooks);
    });

  PartitionCheck gap_one{"R1/G1: 1-hooks = parts"};
  PartitionCheck gap_two{"R1/G1: 2-hooks = parts > 1"};
  PartitionCheck residue_two{"R2: 2-hooks = distinct parts > 1 + repeated values > 1"};
  for (ClassId cls : kAllClasses)
    for (int n = 0; n <= n_max; ++n)
      for_each_member(cls, n, [&](std::span<const int> parts) {
        const Partition p(std::vector<int>(parts.begin(), parts.end()));
        if (n > unrestricted) check_universal(p, involution, conservation, one_hooks, two_hooks);
        const ShortcutStats st = shortcut_stats(p);
        if (is_gap_class(cls)) {
          if (t_hook_count(p, 1) != st.ell) gap_one.fail(p.to_string());
          if (t_hook_count(p, 2) != st.ell_gt1) gap_two.fail(p.to_string());
        }
        if (cls == ClassId::R2 && t_hook_count(p, 2) != st.d_gt1 + st.m_gt1) residue_two.fail(p.to_string());
      });

  for (const auto* c : {&involution, &conservation, &one_hooks, &two_hooks, &gap_one, &gap_two, &residue_two})
    report.checks.push_back(c->result());
  return report;
}

// crossover ---------------------------------------------------------------

CrossoverReport cmd_crossover(const std::string& pair, int n_max) {
  if (pair != "r-t1" && pair != "r-t2" && pair != "g-t1" && pair != "g-t2")
    throw usage_error("--pair must be one of r-t1, r-t2, g-t1, g-t2");
  if (n_max < 0 || n_max > kCrossoverLimit)
    throw usage_error("--n-max must lie in [0, " + std::to_string(kCrossoverLimit) + "]");
  const char family = pair[0];
  const int t = pair[3] - '0';
  CrossoverReport report;
  report.pair = std::string(1, family) + "1" + std::to_string(t) + "-vs-" + family + "2" + std::to_string(t);
  report.relation = t == 1 ? ">" : "<";
  report.n_max = n_max;
  report.lhs = coefficients(family_series(family, 1, t, n_max));
  report.rhs = coefficients(family_series(family, 2, t, n_max));
  auto holds = [&](int n) { return t == 1 ? report.lhs[n] > report.rhs[n] : report.lhs[n] < report.rhs[n]; };
  report.first_hold = last_stable_start(n_max, holds);
  const int upto = report.first_hold.value_or(n_max + 1);
  for (int n = 0; n < upto; ++n)
    if (!holds(n)) report.violations.push_back(n);
  return report;
}

bool recheck_crossover(const CrossoverReport& report) {
  const bool greater = report.relation == ">";
  auto holds = [&](int n) {
    const auto& a = report.lhs.at(static_cast<std::size_t>(n));
    const auto& b = report.rhs.at(static_cast<std::size_t>(n));
    return greater ? a > b : a < b;
  };
  if (report.first_hold) {
    for (int n = *report.first_hold; n <= report.n_max; ++n)
      if (!holds(n)) return false;
    if (*report.first_hold > 0 && holds(*report.first_hold - 1)) return false;
  } else if (report.n_max >= 0 && holds(report.n_max)) {
    return false;
  }
  return std::all_of(report.violations.begin(), report.violations.end(), [&](int n) { return !holds(n); });
}

// conjecture --------------------------------------------------------------

std::vector<ConjectureScan> cmd_conjecture(const std::vector<int>& t_list, int n_max, const ConjectureOptions& options) {
  if (t_list.empty()) throw usage_error("--t needs at least one value");
  for (int t : t_list)
    if (t < 3) throw usage_error("conjecture scan requires t >= 3");
  if (n_max < 0 || n_max > options.ceiling)
    throw usage_error("--n-max must lie in [0, " + std::to_string(options.ceiling) + "]");
  const int t_max = *std::max_element(t_list.begin(), t_list.end());

  std::vector<HookCensus> censuses;
  for (ClassId cls : kAllClasses) censuses.push_back(census(cls, n_max, t_max, options.census));
  auto census_of = [&](ClassId c) -> const HookCensus& { return censuses[static_cast<std::size_t>(c)]; };

  std::vector<ConjectureScan> scans;
  for (int t : t_list) {
    for (char family : {'r', 'g'}) {
      ConjectureScan scan;
      scan.t = t;
      scan.family = std::string(1, family);
      scan.n_max = n_max;
      const HookCensus& one = census_of(class_for(family, 1));
      const HookCensus& two = census_of(class_for(family, 2));
      for (int n = 0; n <= n_max; ++n) {
        scan.class1.push_back(one.count(n, t));
        scan.class2.push_back(two.count(n, t));
      }
      scan.holds_from = last_stable_start(n_max, [&](int n) { return scan.class1[n] < scan.class2[n]; });
      if (scan.holds_from)
        for (int n = *scan.holds_from; n <= n_max; ++n)
          if (!(one.count(n, t) < two.count(n, t))) scan.counterexamples_above.push_back(n);
      scans.push_back(std::move(scan));
    }
  }
  return scans;
}

// ratios ------------------------------------------------------------------

RatioTable cmd_ratios(const std::string& pair, const std::vector<int>& checkpoints) {
  if (checkpoints.empty()) throw usage_error("--checkpoints needs at least one value");
  for (int n : checkpoints)
    if (n < 1 || n > kCrossoverLimit)
      throw usage_error("checkpoints must lie in [1, " + std::to_string(kCrossoverLimit) + "]");
  const int N = *std::max_element(checkpoints.begin(), checkpoints.end());
  RatioTable table;
  table.pair = pair;

  struct Cross {
    const char* id;
    char family;
    int j_num, t_num, j_den, t_den;
    double limit;
  };
  const double log_phi = std::log(std::numbers::phi);
  const double log_silver = std::log(std::numbers::sqrt2 + 1);
  const Cross crosses[] = {
      {"r2-cross", 'r', 2, 2, 2, 1, 1.5},
      {"g2-cross", 'g', 2, 1, 2, 2, 0.75},
      {"r1-cross", 'r', 1, 1, 2, 1, 2.5 * log_phi},
      {"g1-cross", 'g', 1, 1, 2, 1, 4.0 / 3.0 * log_silver},
  };
  for (const auto& c : crosses) {
    if (pair != c.id) continue;
    const TruncatedSeries num = family_series(c.family, c.j_num, c.t_num, N);
    const TruncatedSeries den = family_series(c.family, c.j_den, c.t_den, N);
    table.description = std::string(1, c.family) + std::to_string(c.j_num) + std::to_string(c.t_num) + "/" +
                        c.family + std::to_string(c.j_den) + std::to_string(c.t_den);
    table.limit = c.limit;
    for (int n : checkpoints) table.rows.push_back({n, std::exp(log_big(num[n]) - log_big(den[n]))});
    return table;
  }

  std::string model_id = pair;
  if (model_id.size() > 6 && model_id.ends_with("-model")) model_id.resize(model_id.size() - 6);
  ModelId id;
  try {
    id = parse_model(model_id);
  } catch (const std::invalid_argument&) {
    throw usage_error("unknown ratio pair '" + pair + "'");
  }
  const std::string name = to_string(id);
  const char family = name[0];
  const TruncatedSeries s = family_series(family, name[1] - '0', name[2] - '0', N);
  const AsymModel model = theorem_model(id);
  table.description = name + "(n) / model";
  table.limit = 1;
  for (int n : checkpoints) table.rows.push_back({n, std::exp(log_big(s[n]) - model.log_value(n))});
  return table;
}

// asym --------------------------------------------------------------------

AsymTable cmd_asym(const std::string& target, const std::vector<double>& eps_list) {
  if (eps_list.empty()) throw usage_error("--eps needs at least one value");
  AsymTable table;
  try {
    table.target = parse_saddle_target(target);
  } catch (const std::invalid_argument&) {
    throw usage_error("--target must be S11 or H11");
  }
  if (table.target != SaddleTarget::S11 && table.target != SaddleTarget::H11)
    throw usage_error("--target must be S11 or H11");
  for (double eps : eps_list) table.rows.push_back(saddle_probe(table.target, eps));
  for (std::size_t i = 1; i < table.rows.size(); ++i)
    if (!(std::abs(table.rows[i].ratio - 1) < std::abs(table.rows[i - 1].ratio - 1))) table.monotone = false;
  return table;
}

// rendering ---------------------------------------------------------------

namespace {

nlohmann::json optional_json(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

std::string list_text(const std::vector<int>& v, std::size_t limit = 40) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? ", " : "") << v[i];
  if (v.size() > limit) os << ", ... (" << v.size() << " total)";
  os << "]";
  return os.str();
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << x;
  return os.str();
}

}  // namespace

nlohmann::json to_json(const CensusOutcome& o) {
  nlohmann::json j = census_sidecar(o.census);
  j["csv"] = o.csv_path.string();
  j["sidecar"] = o.json_path.string();
  j["cache_dir"] = o.cache_dir ? nlohmann::json(o.cache_dir->string()) : nlohmann::json(nullptr);
  j["cache_used"] = o.cache_used;
  j["computed_from"] = o.computed_from;
  return j;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["n_max"] = r.n_max;
  j["passed"] = r.all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

nlohmann::json to_json(const CrossoverReport& r) {
  return {{"pair", r.pair}, {"relation", r.relation}, {"n_max", r.n_max}, {"first_hold", optional_json(r.first_hold)},
          {"violations", r.violations}};
}

nlohmann::json to_json(const std::vector<ConjectureScan>& scans) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : scans) {
    nlohmann::json row{{"t", s.t},
                       {"family", s.family},
                       {"n_max", s.n_max},
                       {"holds_from", optional_json(s.holds_from)},
                       {"counterexamples_above", s.counterexamples_above}};
    out.push_back(row);
  }
  return out;
}

nlohmann::json to_json(const RatioTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) rows.push_back({{"n", r.n}, {"ratio", r.ratio}});
  return {{"pair", t.pair}, {"description", t.description}, {"limit", t.limit}, {"rows", rows}};
}

nlohmann::json to_json(const AsymTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& p : t.rows)
    rows.push_back({{"epsilon", p.epsilon},
                    {"direct_value", p.direct_value},
                    {"main_term", p.main_term},
                    {"ratio", p.ratio},
                    {"terms", p.terms}});
  return {{"target", to_string(t.target)}, {"monotone", t.monotone}, {"rows", rows}};
}

std::string to_text(const CensusOutcome& o) {
  std::ostringstream os;
  os << "class " << to_string(o.census.class_id) << ", n <= " << o.census.n_max << ", t <= " << o.census.t_max << "\n";
  os << "wrote " << o.csv_path.string() << " and " << o.json_path.string() << "\n";
  if (o.cache_dir) {
    os << "cache " << o.cache_dir->string() << ": ";
    if (!o.cache_used) os << "miss, computed from n=0\n";
    else if (o.computed_from > o.census.n_max) os << "hit\n";
    else os << "extended from n=" << o.computed_from << "\n";
  }
  return os.str();
}

std::string to_text(const VerifyReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (r.all_passed() ? "all checks passed" : "some checks failed") << " for n <= " << r.n_max << "\n";
  return os.str();
}

std::string to_text(const CrossoverReport& r) {
  std::ostringstream os;
  os << r.pair << " (class 1 " << r.relation << " class 2), n <= " << r.n_max << "\n";
  os << "first_hold: " << optional_text(r.first_hold) << "\n";
  os << "violations: " << list_text(r.violations) << "\n";
  return os.str();
}

std::string to_text(const std::vector<ConjectureScan>& scans) {
  std::ostringstream os;
  for (const auto& s : scans)
    os << "t=" << s.t << " " << s.family << "1 < " << s.family << "2, n <= " << s.n_max
       << ": holds_from=" << optional_text(s.holds_from)
       << " counterexamples_above=" << list_text(s.counterexamples_above) << "\n";
  return os.str();
}

std::string to_text(const RatioTable& t) {
  std::ostringstream os;
  os << t.description << " (limit " << fixed(t.limit, 6) << ")\n";
  os << "n,ratio\n";
  for (const auto& r : t.rows) os << r.n << "," << fixed(r.ratio, 8) << "\n";
  return os.str();
}

std::string to_text(const AsymTable& t) {
  std::ostringstream os;
  os << "epsilon,direct,main,ratio\n";
  for (const auto& p : t.rows) {
    std::ostringstream row;
    row.precision(10);
    row << p.epsilon << "," << p.direct_value << "," << p.main_term << "," << fixed(p.ratio, 12);
    os << row.str() << "\n";
  }
  os << (t.monotone ? "|ratio - 1| strictly decreasing" : "NOT monotone: |ratio - 1| fails to decrease") << "\n";
  return os.str();
}

}  // namespace hooklab
