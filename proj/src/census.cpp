#include <stdexcept>
#include <string>

#include "hooklab/errors.hpp"
#include "hooklab/hooks.hpp"

namespace hooklab {

namespace {

struct RowTally {
  std::vector<std::int64_t> bins;
  std::int64_t members = 0;
  std::int64_t cells = 0;
};

RowTally tally_row(ClassId c, int n, int t_max) {
  RowTally row;
  row.bins.assign(static_cast<std::size_t>(t_max), 0);
  std::vector<int> cols;
  for_each_member(c, n, [&](std::span<const int> parts) {
    ++row.members;
    row.cells += accumulate_hooks(parts, row.bins, cols);
  });
  return row;
}

void store_row(HookCensus& out, int n, const RowTally& row) {
  auto& dst = out.rows[n];
  dst.resize(row.bins.size());
  for (std::size_t t = 0; t < row.bins.size(); ++t) dst[t] = static_cast<long>(row.bins[t]);
  out.cardinality[n] = static_cast<long>(row.members);
  out.total_hooks[n] = static_cast<long>(row.cells);
}

void check_budget(ClassId c, int n_lo, int n_hi, const CensusOptions& options) {
  if (n_hi < n_lo) return;
  const auto table = count_table(c, n_hi);
  BigInt total = 0;
  for (int n = n_lo; n <= n_hi; ++n) total += table[n];
  if (total > BigInt(std::to_string(options.partition_budget)))
    throw budget_error("census of " + std::string(to_string(c)) + " up to n=" + std::to_string(n_hi) +
                       " would enumerate " + total.get_str() + " partitions (budget " +
                       std::to_string(options.partition_budget) + ")");
}

HookCensus make_empty(ClassId c, int n_max, int t_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  if (t_max < 1) throw std::invalid_argument("t_max must be positive");
  HookCensus out;
  out.class_id = c;
  out.n_max = n_max;
  out.t_max = t_max;
  out.rows.resize(static_cast<std::size_t>(n_max) + 1);
  out.cardinality.resize(static_cast<std::size_t>(n_max) + 1);
  out.total_hooks.resize(static_cast<std::size_t>(n_max) + 1);
  return out;
}

// Fills rows [n_lo, n_max] of `out`. Larger n are scheduled first since
// class sizes grow quickly with n.
void fill_parallel(HookCensus& out, int n_lo) {
  const int n_hi = out.n_max;
  const int span = n_hi - n_lo + 1;
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < span; ++k) {
    const int n = n_hi - k;
    const RowTally row = tally_row(out.class_id, n, out.t_max);
    store_row(out, n, row);
  }
}

void fill_serial(HookCensus& out, int n_lo) {
  for (int n = n_lo; n <= out.n_max; ++n) store_row(out, n, tally_row(out.class_id, n, out.t_max));
}

}  // namespace

BigInt projected_partitions(ClassId c, int n_max) {
  BigInt total = 0;
  for (const auto& v : count_table(c, n_max)) total += v;
  return total;
}

HookCensus census(ClassId c, int n_max, int t_max, const CensusOptions& options) {
  HookCensus out = make_empty(c, n_max, t_max);
  check_budget(c, 0, n_max, options);
  fill_parallel(out, 0);
  return out;
}

HookCensus census_serial(ClassId c, int n_max, int t_max, const CensusOptions& options) {
  HookCensus out = make_empty(c, n_max, t_max);
  check_budget(c, 0, n_max, options);
  fill_serial(out, 0);
  return out;
}

HookCensus extend_census(const HookCensus& base, int n_max, const CensusOptions& options) {
  if (n_max <= base.n_max) return slice_census(base, n_max, base.t_max);
  HookCensus out = make_empty(base.class_id, n_max, base.t_max);
  check_budget(base.class_id, base.n_max + 1, n_max, options);
  for (int n = 0; n <= base.n_max; ++n) {
    out.rows[n] = base.rows[n];
    out.cardinality[n] = base.cardinality[n];
    out.total_hooks[n] = base.total_hooks[n];
  }
  fill_parallel(out, base.n_max + 1);
  return out;
}

HookCensus slice_census(const HookCensus& base, int n_max, int t_max) {
  if (n_max > base.n_max || t_max > base.t_max)
    throw std::invalid_argument("slice bounds exceed the census");
  HookCensus out = make_empty(base.class_id, n_max, t_max);
  for (int n = 0; n <= n_max; ++n) {
    out.rows[n].assign(base.rows[n].begin(), base.rows[n].begin() + t_max);
    out.cardinality[n] = base.cardinality[n];
    out.total_hooks[n] = base.total_hooks[n];
  }
  return out;
}

}  // namespace hooklab
