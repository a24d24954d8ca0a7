#include "hooklab/partition.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hooklab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

namespace {

void descend(int remaining, int max_part, std::vector<int>& buf,
             const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    visit(buf);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    buf.push_back(p);
    descend(remaining - p, p, buf, visit);
    buf.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit) {
  if (n < 0) throw std::invalid_argument("partition size must be non-negative");
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(n));
  descend(n, n, buf, visit);
}

BigInt partition_count(int n) {
  if (n < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      const bool plus = (k % 2) == 1;
      if (plus) acc += p[m - g1]; else acc -= p[m - g1];
      if (g2 <= m) {
        if (plus) acc += p[m - g2]; else acc -= p[m - g2];
      }
    }
    p[m] = acc;
  }
  return p[n];
}

}  // namespace hooklab
