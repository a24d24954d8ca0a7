#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hooklab {

using BigInt = mpz_class;

/// A weakly decreasing sequence of positive integers.
///
/// Construction validates the ordering; the size is cached. The empty
/// partition has size 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }

  /// "(7,4,2,2,1)"; the empty partition prints as "()".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Visits every unrestricted partition of n in descending lexicographic
/// order. The span is only valid for the duration of the callback.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit);

/// Number of unrestricted partitions of n (Euler recurrence).
BigInt partition_count(int n);

}  // namespace hooklab
