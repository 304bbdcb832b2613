#ifndef CARTAN_MULTI_INDEX_HPP
#define CARTAN_MULTI_INDEX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cartan {

/// A strictly increasing multi-index, stored as a bitmask (bit k = index k).
using IndexSet = std::uint32_t;

inline int set_size(IndexSet s) { return std::popcount(s); }

inline IndexSet single(std::size_t k) { return IndexSet{1} << k; }

inline IndexSet full_set(std::size_t n) { return n >= 32 ? ~IndexSet{0} : (IndexSet{1} << n) - 1; }

/// Sign of e^A ∧ e^B = sign * e^{A∪B}; 0 when A and B overlap.
int merge_sign(IndexSet a, IndexSet b);

/// Members in increasing order.
std::vector<std::size_t> members(IndexSet s);

/// Position (0-based) of index k inside s; k must be a member.
inline int rank_in(IndexSet s, std::size_t k) { return std::popcount(s & (single(k) - 1)); }

/// All p-element subsets of {0..n-1}, in lexicographic order of their tuples.
const std::vector<IndexSet>& subsets(std::size_t n, std::size_t p);

/// Lexicographic order on the increasing tuples of equal-size sets.
struct LexLess {
  bool operator()(IndexSet a, IndexSet b) const {
    const IndexSet diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & (~diff + 1))) != 0;
  }
};

/// Sign of the permutation sorting the tuple, or 0 if it has repeats.
int tuple_sign(const std::vector<std::size_t>& tuple, IndexSet* set_out = nullptr);

std::string set_to_string(IndexSet s);

}  // namespace cartan

#endif  // CARTAN_MULTI_INDEX_HPP
