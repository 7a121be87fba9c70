#ifndef MOP_DETAIL_PATH_WALK_HPP_
#define MOP_DETAIL_PATH_WALK_HPP_

// Depth-first path walkers shared by the counters and for_each_path.
// Included from graph.hpp; not meant to be used directly.

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mop {
namespace detail {

// Visited set for graphs whose rows fit one word.
struct WordMask {
  std::uint64_t bits = 0;
  bool test(int v) const { return (bits >> v) & 1u; }
  void set(int v) { bits |= std::uint64_t{1} << v; }
  void reset(int v) { bits &= ~(std::uint64_t{1} << v); }
  int unvisited_neighbors(const SimpleGraph& g, int v) const {
    return std::popcount(g.row_word(v) & ~bits);
  }
};

struct ByteMask {
  std::vector<unsigned char> bits;
  explicit ByteMask(int n) : bits(static_cast<std::size_t>(n), 0) {}
  bool test(int v) const { return bits[v] != 0; }
  void set(int v) { bits[v] = 1; }
  void reset(int v) { bits[v] = 0; }
  int unvisited_neighbors(const SimpleGraph& g, int v) const {
    int c = 0;
    for (int w : g.neighbors(v)) c += bits[w] == 0;
    return c;
  }
};

// Counts directed walks on `k` distinct vertices starting at `v`, where the
// first `depth` vertices are already marked in `mask`.
template <typename Mask>
Count count_from(const SimpleGraph& g, int v, int depth, int k, Mask& mask) {
  if (depth == k - 1) return static_cast<Count>(mask.unvisited_neighbors(g, v));
  Count total = 0;
  for (int w : g.neighbors(v)) {
    if (mask.test(w)) continue;
    mask.set(w);
    total += count_from(g, w, depth + 1, k, mask);
    mask.reset(w);
  }
  return total;
}

// Directed P_k walks over all start vertices, never touching `excluded`
// (pass -1 for none).
template <typename Mask>
Count count_directed(const SimpleGraph& g, int k, int excluded, Mask mask) {
  if (excluded >= 0) mask.set(excluded);
  Count total = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (s == excluded) continue;
    mask.set(s);
    total += count_from(g, s, 1, k, mask);
    mask.reset(s);
  }
  return total;
}

template <typename Mask, typename Visitor>
void walk_from(const SimpleGraph& g, int k, std::array<int, PathCopy::kMaxLength>& stack, int depth,
               Mask& mask, Visitor& visit) {
  const int v = stack[depth - 1];
  if (depth == k) {
    if (stack[0] < v) visit(PathCopy(std::span<const int>(stack.data(), static_cast<std::size_t>(k))));
    return;
  }
  for (int w : g.neighbors(v)) {
    if (mask.test(w)) continue;
    mask.set(w);
    stack[depth] = w;
    walk_from(g, k, stack, depth + 1, mask, visit);
    mask.reset(w);
  }
}

template <typename Mask, typename Visitor>
void walk_all(const SimpleGraph& g, int k, Mask mask, Visitor& visit) {
  std::array<int, PathCopy::kMaxLength> stack{};
  for (int s = 0; s < g.vertex_count(); ++s) {
    mask.set(s);
    stack[0] = s;
    walk_from(g, k, stack, 1, mask, visit);
    mask.reset(s);
  }
}

}  // namespace detail

template <typename Visitor>
void for_each_path(const SimpleGraph& g, int k, Visitor&& visit) {
  if (k < 2 || k > PathCopy::kMaxLength) throw std::invalid_argument("for_each_path: k out of range");
  if (g.word_sized()) {
    detail::walk_all(g, k, detail::WordMask{}, visit);
  } else {
    detail::walk_all(g, k, detail::ByteMask(g.vertex_count()), visit);
  }
}

}  // namespace mop

#endif  // MOP_DETAIL_PATH_WALK_HPP_
