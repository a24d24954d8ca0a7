#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hooklab/partition.hpp"

namespace hooklab {

/// The four restricted partition classes.
///
///   R1  adjacent parts differ by at least 2
///   R2  every part is 1 or 4 mod 5
///   G1  adjacent parts differ by at least 2, and by more than 2 when the
///       larger of the pair is odd
///   G2  every part is 1, 5 or 6 mod 8
///
/// R1/R2 are equinumerous at every size (first Rogers-Ramanujan identity),
/// as are G1/G2 (first little Goellnitz identity).
enum class ClassId { R1, R2, G1, G2 };

inline constexpr std::array<ClassId, 4> kAllClasses{ClassId::R1, ClassId::R2, ClassId::G1, ClassId::G2};

std::string_view to_string(ClassId c) noexcept;  // "r1", "r2", "g1", "g2"
std::optional<ClassId> parse_class(std::string_view s) noexcept;

/// True for the gap-condition classes (R1, G1), false for the congruence ones.
constexpr bool is_gap_class(ClassId c) noexcept { return c == ClassId::R1 || c == ClassId::G1; }

/// Membership test. The empty partition belongs to every class.
bool contains(ClassId c, const Partition& p);
bool contains(ClassId c, std::span<const int> parts);

/// All members of the class of size n, each exactly once, in descending
/// lexicographic order. enumerate(c, 0) == {()}.
std::vector<Partition> enumerate(ClassId c, int n);

/// Streaming variant of enumerate: visits the same sequence without
/// materializing it. The span is only valid during the callback.
void for_each_member(ClassId c, int n, const std::function<void(std::span<const int>)>& visit);

/// Number of members of size n.
BigInt count(ClassId c, int n);

/// count(c, m) for every 0 <= m <= n_max, from one table build.
std::vector<BigInt> count_table(ClassId c, int n_max);

}  // namespace hooklab
