#include "hooklab/hooks.hpp"

#include <stdexcept>

namespace hooklab {

namespace {

// Column lengths of the Young diagram; cols[j] = #{i : parts[i] > j}.
void fill_columns(std::span<const int> parts, std::vector<int>& cols) {
  cols.clear();
  if (parts.empty()) return;
  cols.resize(static_cast<std::size_t>(parts[0]));
  int filled = 0;
  for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
    for (int j = filled; j < parts[i]; ++j) cols[j] = i + 1;
    filled = std::max(filled, parts[i]);
  }
}

}  // namespace

Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  fill_columns(p.parts(), cols);
  return Partition(std::move(cols));
}

std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  std::vector<int> cols;
  fill_columns(p.parts(), cols);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(p.length()));
  for (int i = 0; i < p.length(); ++i) {
    const int row = p[i];
    out[i].resize(static_cast<std::size_t>(row));
    for (int j = 0; j < row; ++j) out[i][j] = row + cols[j] - i - j - 1;
  }
  return out;
}

int t_hook_count(const Partition& p, int t) {
  if (t < 1) throw std::invalid_argument("hook length t must be positive");
  std::vector<int> cols;
  fill_columns(p.parts(), cols);
  int hits = 0;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j)
      if (p[i] + cols[j] - i - j - 1 == t) ++hits;
  return hits;
}

ShortcutStats shortcut_stats(const Partition& p) {
  ShortcutStats s;
  const auto parts = p.parts();
  s.ell = static_cast<int>(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int v = parts[i];
    if (v > 1) ++s.ell_gt1;
    const bool first_of_run = i == 0 || parts[i - 1] != v;
    if (first_of_run) {
      ++s.d;
      if (v > 1) ++s.d_gt1;
      if (i + 1 < parts.size() && parts[i + 1] == v) ++s.m_gt1;
    }
    const int below = i + 1 < parts.size() ? parts[i + 1] : 0;
    if (v - below > 1) ++s.gap_gt1;
  }
  return s;
}

std::int64_t accumulate_hooks(std::span<const int> parts, std::span<std::int64_t> bins,
                              std::vector<int>& column_scratch) {
  fill_columns(parts, column_scratch);
  const int t_max = static_cast<int>(bins.size());
  std::int64_t cells = 0;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    const int row = parts[i];
    cells += row;
    for (int j = 0; j < row; ++j) {
      const int h = row + column_scratch[j] - i - j - 1;
      if (h <= t_max) ++bins[h - 1];
    }
  }
  return cells;
}

}  // namespace hooklab
