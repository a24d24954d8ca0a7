#include "hooklab/classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooklab {

namespace {

bool part_allowed(ClassId c, int p) noexcept {
  switch (c) {
    case ClassId::R2: return p % 5 == 1 || p % 5 == 4;
    case ClassId::G2: return p % 8 == 1 || p % 8 == 5 || p % 8 == 6;
    default: return true;
  }
}

// Largest admissible part directly below a part of size p.
int next_max(ClassId c, int p) noexcept {
  switch (c) {
    case ClassId::R1: return p - 2;
    case ClassId::G1: return (p % 2 == 1) ? p - 3 : p - 2;
    default: return p;
  }
}

void descend(ClassId c, int remaining, int max_part, std::vector<int>& buf,
             const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    visit(buf);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (!part_allowed(c, p)) continue;
    buf.push_back(p);
    descend(c, remaining - p, next_max(c, p), buf, visit);
    buf.pop_back();
  }
}

}  // namespace

std::string_view to_string(ClassId c) noexcept {
  switch (c) {
    case ClassId::R1: return "r1";
    case ClassId::R2: return "r2";
    case ClassId::G1: return "g1";
    case ClassId::G2: return "g2";
  }
  return "?";
}

std::optional<ClassId> parse_class(std::string_view s) noexcept {
  for (ClassId c : kAllClasses) {
    const auto name = to_string(c);
    if (s.size() == name.size() &&
        std::equal(s.begin(), s.end(), name.begin(),
                   [](char a, char b) { return (a | 0x20) == b; }))
      return c;
  }
  return std::nullopt;
}

bool contains(ClassId c, std::span<const int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!part_allowed(c, parts[i])) return false;
    if (i + 1 < parts.size() && parts[i + 1] > next_max(c, parts[i])) return false;
  }
  return true;
}

bool contains(ClassId c, const Partition& p) { return contains(c, p.parts()); }

void for_each_member(ClassId c, int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw std::invalid_argument("partition size must be non-negative");
  std::vector<int> buf;
  descend(c, n, n, buf, visit);
}

std::vector<Partition> enumerate(ClassId c, int n) {
  std::vector<Partition> out;
  for_each_member(c, n, [&](std::span<const int> parts) {
    out.emplace_back(std::vector<int>(parts.begin(), parts.end()));
  });
  return out;
}

std::vector<BigInt> count_table(ClassId c, int n_max) {
  if (n_max < 0) throw std::invalid_argument("partition size must be non-negative");
  const auto N = static_cast<std::size_t>(n_max);
  // ways[r][m]: members of size r whose largest part is at most m.
  std::vector<std::vector<BigInt>> ways(N + 1, std::vector<BigInt>(N + 1));
  auto lookup = [&](int r, int m) -> BigInt {
    if (r == 0) return 1;
    if (m <= 0) return 0;
    return ways[r][std::min(m, r)];
  };
  for (int r = 0; r <= n_max; ++r) {
    for (int m = 0; m <= r; ++m) {
      if (r == 0) { ways[0][0] = 1; continue; }
      BigInt v = m > 0 ? ways[r][m - 1] : BigInt(0);
      if (m >= 1 && part_allowed(c, m)) v += lookup(r - m, next_max(c, m));
      ways[r][m] = v;
    }
  }
  std::vector<BigInt> out(N + 1);
  for (int r = 0; r <= n_max; ++r) out[r] = ways[r][r];
  return out;
}

BigInt count(ClassId c, int n) {
  if (n < 0) throw std::invalid_argument("partition size must be non-negative");
  return count_table(c, n)[n];
}

}  // namespace hooklab
