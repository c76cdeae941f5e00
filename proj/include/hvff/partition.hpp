#pragma once

#include <cstddef>
#include <vector>

namespace hvff {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
// Partitions of n with every part at most max_part.
std::vector<Partition> partitions(int n, int max_part);

int partition_sum(const Partition& p);
// Inserts a part keeping the sequence weakly decreasing.
Partition with_part(Partition p, int part);
// Removes one occurrence of part; the part must be present.
Partition without_part(Partition p, int part);
std::size_t multiplicity(const Partition& p, int part);
Partition merge_partitions(const Partition& a, const Partition& b);

}  // namespace hvff
