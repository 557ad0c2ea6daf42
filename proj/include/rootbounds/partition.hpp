#pragma once

#include <vector>

#include "rootbounds/errors.hpp"

namespace rootbounds {

/// A partition of the coefficient indices {0, ..., n-1} with one designated
/// part. The designated part is the one whose sum enters the partition bound
/// without the +1 term; it must satisfy max(P_1) <= n - t where t is the part
/// count (always achievable by pigeonhole).
struct PartitionSpec {
  std::vector<std::vector<int>> parts;
  int p1_index = 0;

  int part_count() const { return static_cast<int>(parts.size()); }
  const std::vector<int>& designated() const {
    return parts[static_cast<std::size_t>(p1_index)];
  }
};

/// Throws InvalidPartition unless parts are nonempty, pairwise disjoint,
/// cover {0,...,n-1}, and the designated part obeys max(P_1) <= n - t.
void validate_partition(const PartitionSpec& spec, int n);

/// Parts reordered for the constructive companion-matrix placement:
/// the designated part first, the rest by ascending maximum element.
std::vector<std::vector<int>> relabel_parts(const PartitionSpec& spec);

}  // namespace rootbounds
