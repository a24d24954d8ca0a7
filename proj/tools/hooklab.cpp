#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hooklab/commands.hpp"
#include "hooklab/errors.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

template <typename Report>
void emit(const Report& report, bool json) {
  if (json) std::cout << hooklab::to_json(report).dump(2) << "\n";
  else std::cout << hooklab::to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hooklab;
  CLI::App app{"hooklab: t-hook statistics of restricted partition classes"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print results as JSON");

  auto* census_cmd = app.add_subcommand("census", "Count t-hooks over a partition class and write CSV + JSON");
  std::string class_name;
  int census_n = 0, census_t = 1;
  std::string out_path;
  std::string cache_dir;
  census_cmd->add_option("--class", class_name, "r1, r2, g1 or g2")->required()->check(
      CLI::IsMember({"r1", "r2", "g1", "g2"}, CLI::ignore_case));
  census_cmd->add_option("--n-max", census_n, "Largest partition size")->required();
  census_cmd->add_option("--t-max", census_t, "Largest hook length")->required();
  census_cmd->add_option("--out", out_path, "CSV output path")->required();
  census_cmd->add_option("--cache", cache_dir, "Cache directory (HOOKLAB_CACHE takes precedence)");
  census_cmd->add_flag("--json", json);

  auto* verify_cmd = app.add_subcommand("verify", "Check generating functions against enumeration");
  int verify_n = 40;
  verify_cmd->add_option("--n-max", verify_n, "Largest coefficient checked")->capture_default_str();
  verify_cmd->add_flag("--json", json);

  auto* cross_cmd = app.add_subcommand("crossover", "Locate where a class-1 vs class-2 inequality becomes permanent");
  std::string pair;
  int cross_n = 2000;
  cross_cmd->add_option("--pair", pair, "r-t1, r-t2, g-t1 or g-t2")->required();
  cross_cmd->add_option("--n-max", cross_n, "Scan range")->required();
  cross_cmd->add_flag("--json", json);

  auto* conj_cmd = app.add_subcommand("conjecture", "Scan class-1 < class-2 for t >= 3");
  std::vector<int> t_list;
  int conj_n = 0;
  conj_cmd->add_option("--t", t_list, "Hook lengths, comma separated")->required()->delimiter(',');
  conj_cmd->add_option("--n-max", conj_n, "Scan range")->required();
  conj_cmd->add_flag("--json", json);

  auto* ratio_cmd = app.add_subcommand("ratios", "Coefficient ratios against asymptotic models and limits");
  std::string ratio_pair;
  std::vector<int> checkpoints;
  ratio_cmd->add_option("--pair", ratio_pair, "r11..g22 (model) or r1-cross, r2-cross, g1-cross, g2-cross")
      ->required();
  ratio_cmd->add_option("--checkpoints", checkpoints, "Values of n, comma separated")->required()->delimiter(',');
  ratio_cmd->add_flag("--json", json);

  auto* asym_cmd = app.add_subcommand("asym", "Direct q -> 1 evaluation against the saddle-point main term");
  std::string target;
  std::vector<double> eps;
  asym_cmd->add_option("--target", target, "S11 or H11")->required();
  asym_cmd->add_option("--eps", eps, "Values of epsilon, comma separated")->delimiter(',');
  asym_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*census_cmd) {
      CensusRequest req;
      req.class_id = *parse_class(class_name);
      req.n_max = census_n;
      req.t_max = census_t;
      req.out = out_path;
      if (!cache_dir.empty()) req.cache_dir = cache_dir;
      emit(cmd_census(req), json);
      return kOk;
    }
    if (*verify_cmd) {
      const VerifyReport report = cmd_verify(verify_n);
      emit(report, json);
      return report.all_passed() ? kOk : kCheckFailed;
    }
    if (*cross_cmd) {
      const CrossoverReport report = cmd_crossover(pair, cross_n);
      emit(report, json);
      return report.first_hold && recheck_crossover(report) ? kOk : kCheckFailed;
    }
    if (*conj_cmd) {
      const auto scans = cmd_conjecture(t_list, conj_n);
      emit(scans, json);
      for (const auto& s : scans)
        if (!s.counterexamples_above.empty()) return kCheckFailed;
      return kOk;
    }
    if (*ratio_cmd) {
      emit(cmd_ratios(ratio_pair, checkpoints), json);
      return kOk;
    }
    if (*asym_cmd) {
      const AsymTable table = cmd_asym(target, eps);
      emit(table, json);
      return table.monotone ? kOk : kCheckFailed;
    }
  } catch (const budget_error& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const numeric_domain_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
