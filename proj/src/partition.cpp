#include "rootbounds/partition.hpp"

#include <algorithm>

namespace rootbounds {

void validate_partition(const PartitionSpec& spec, int n) {
  const int t = spec.part_count();
  if (t < 1 || t > n) throw InvalidPartition("part count must lie in 1..n");
  if (spec.p1_index < 0 || spec.p1_index >= t) {
    throw InvalidPartition("designated part index out of range");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const auto& part : spec.parts) {
    if (part.empty()) throw InvalidPartition("empty part");
    for (int i : part) {
      if (i < 0 || i >= n) throw InvalidPartition("index outside 0..n-1");
      if (seen[static_cast<std::size_t>(i)]) throw InvalidPartition("index appears twice");
      seen[static_cast<std::size_t>(i)] = 1;
      ++covered;
    }
  }
  if (covered != n) throw InvalidPartition("parts do not cover 0..n-1");
  const auto& p1 = spec.designated();
  if (*std::max_element(p1.begin(), p1.end()) > n - t) {
    throw InvalidPartition("designated part exceeds the row budget max(P_1) <= n-t");
  }
}

std::vector<std::vector<int>> relabel_parts(const PartitionSpec& spec) {
  std::vector<std::vector<int>> rest;
  rest.reserve(spec.parts.size());
  for (int j = 0; j < spec.part_count(); ++j) {
    if (j != spec.p1_index) rest.push_back(spec.parts[static_cast<std::size_t>(j)]);
  }
  // Maxima are distinct integers, so this order is unambiguous.
  std::sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) {
    return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
  });
  std::vector<std::vector<int>> ordered;
  ordered.reserve(spec.parts.size());
  ordered.push_back(spec.designated());
  for (auto& part : rest) ordered.push_back(std::move(part));
  return ordered;
}

}  // namespace rootbounds
