#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hooklab/classes.hpp"
#include "hooklab/partition.hpp"

namespace hooklab {

/// Partition whose rows are the columns of p.
Partition conjugate(const Partition& p);

/// Hook length of every cell, row by row: h(i,j) = p_i + p'_j - i - j + 1
/// with 1-based (i, j). Row i has p_i entries.
std::vector<std::vector<int>> hook_lengths(const Partition& p);

/// Number of cells whose hook length is exactly t (t >= 1).
int t_hook_count(const Partition& p, int t);

/// Part statistics that the 1- and 2-hook counts reduce to.
struct ShortcutStats {
  int ell = 0;      // number of parts
  int d = 0;        // number of distinct parts
  int ell_gt1 = 0;  // parts greater than 1
  int d_gt1 = 0;    // distinct parts greater than 1
  int m_gt1 = 0;    // part values appearing at least twice
  int gap_gt1 = 0;  // indices i with p_i - p_{i+1} > 1, taking p_{ell+1} = 0

  friend bool operator==(const ShortcutStats&, const ShortcutStats&) = default;
};

ShortcutStats shortcut_stats(const Partition& p);

/// Bins the hook lengths of one partition. bins[t-1] is incremented for
/// every cell of hook length t <= bins.size(); the return value is the
/// total number of cells (all hook lengths, binned or not).
///
/// `column_scratch` is resized as needed; pass the same vector across calls
/// to avoid reallocating.
std::int64_t accumulate_hooks(std::span<const int> parts, std::span<std::int64_t> bins,
                              std::vector<int>& column_scratch);

/// Exact t-hook totals over one class.
///
/// counts(n, t) is the total number of t-hooks over all class members of
/// size n, for 0 <= n <= n_max and 1 <= t <= t_max. cardinality(n) counts
/// the members; total_hooks(n) sums hooks of every length and therefore
/// equals n * cardinality(n).
struct HookCensus {
  ClassId class_id = ClassId::R1;
  int n_max = 0;
  int t_max = 1;
  std::vector<std::vector<BigInt>> rows;  // rows[n][t - 1]
  std::vector<BigInt> cardinality;
  std::vector<BigInt> total_hooks;

  [[nodiscard]] const BigInt& count(int n, int t) const { return rows.at(n).at(t - 1); }

  friend bool operator==(const HookCensus&, const HookCensus&) = default;
};

struct CensusOptions {
  // Ceiling on the total number of partitions enumerated by one census.
  std::uint64_t partition_budget = 100'000'000;
};

/// Parallel census (OpenMP over n). Throws budget_error when the projected
/// number of enumerated partitions exceeds options.partition_budget.
HookCensus census(ClassId c, int n_max, int t_max, const CensusOptions& options = {});

/// Single-threaded reference implementation of census(); same result.
HookCensus census_serial(ClassId c, int n_max, int t_max, const CensusOptions& options = {});

/// Extends an existing census to a larger n_max, enumerating only the new
/// sizes. The t_max of `base` is kept.
HookCensus extend_census(const HookCensus& base, int n_max, const CensusOptions& options = {});

/// Restricts a census to smaller bounds.
HookCensus slice_census(const HookCensus& base, int n_max, int t_max);

/// Total partitions a census up to n_max would enumerate.
BigInt projected_partitions(ClassId c, int n_max);

}  // namespace hooklab
