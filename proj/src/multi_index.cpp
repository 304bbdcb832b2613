#include "cartan/multi_index.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace cartan {

int merge_sign(IndexSet a, IndexSet b) {
  if ((a & b) != 0) return 0;
  // Count pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (IndexSet rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<std::size_t> members(IndexSet s) {
  std::vector<std::size_t> out;
  for (; s != 0; s &= s - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
  return out;
}

const std::vector<IndexSet>& subsets(std::size_t n, std::size_t p) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<IndexSet>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, p});
  if (inserted && p <= n) {
    std::vector<IndexSet>& out = it->second;
    for (IndexSet s = 0; s <= full_set(n); ++s)
      if (static_cast<std::size_t>(set_size(s)) == p) out.push_back(s);
    std::sort(out.begin(), out.end(), LexLess{});
  }
  return it->second;
}

int tuple_sign(const std::vector<std::size_t>& tuple, IndexSet* set_out) {
  IndexSet s = 0;
  int sign = 1;
  for (std::size_t k : tuple) {
    if (s & single(k)) return 0;
    // Moving k past the larger members already placed.
    if (std::popcount(s >> (k + 1)) & 1) sign = -sign;
    s |= single(k);
  }
  if (set_out) *set_out = s;
  return sign;
}

std::string set_to_string(IndexSet s) {
  std::string out = "(";
  bool first = true;
  for (std::size_t k : members(s)) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + ")";
}

}  // namespace cartan
