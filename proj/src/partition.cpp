#include "hvff/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hvff {

std::vector<Partition> partitions(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

std::vector<Partition> partitions(int n) { return partitions(n, n); }

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition with_part(Partition p, int part) {
  auto it = std::upper_bound(p.begin(), p.end(), part, std::greater<>());
  p.insert(it, part);
  return p;
}

Partition without_part(Partition p, int part) {
  auto it = std::find(p.begin(), p.end(), part);
  p.erase(it);
  return p;
}

std::size_t multiplicity(const Partition& p, int part) {
  return static_cast<std::size_t>(std::count(p.begin(), p.end(), part));
}

Partition merge_partitions(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
  return out;
}

}  // namespace hvff
