#ifndef MOP_GRAPH_HPP_
#define MOP_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mop {

using Count = std::uint64_t;

// Undirected simple graph on vertices 0..n-1.
//
// Adjacency is kept twice: sorted neighbor lists for iteration and a bit
// matrix for O(1) edge tests. Graphs with at most 64 vertices use one word per
// row, which the path counters exploit with a single-word visited mask; larger
// graphs (asymptotic scans) fall back to multi-word rows and a byte mask.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 8192;
  static constexpr int kWordVertices = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  SimpleGraph(int n, std::span<const std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  // Adds {u,v}; returns false if it was already present.
  // Throws std::invalid_argument on self-loops or out-of-range vertices.
  bool add_edge(int u, int v);

  bool has_edge(int u, int v) const {
    return (rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  int min_degree() const;

  // True when every adjacency row fits a single machine word.
  bool word_sized() const { return n_ <= kWordVertices; }
  std::uint64_t row_word(int v) const { return rows_[v]; }

  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;

  // Subgraph induced by `vertices`; vertex vertices[i] becomes i.
  SimpleGraph induced(std::span<const int> vertices) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<int>> adjacency_;
};

// A path on k distinct vertices stored with the smaller endpoint first, so
// each unordered copy has a single representation.
class PathCopy {
 public:
  static constexpr int kMaxLength = 8;

  PathCopy() = default;
  explicit PathCopy(std::span<const int> vertices);

  int size() const { return size_; }
  int operator[](int i) const { return vertices_[i]; }
  int front() const { return vertices_[0]; }
  int back() const { return vertices_[size_ - 1]; }
  std::span<const int> vertices() const { return {vertices_.data(), static_cast<std::size_t>(size_)}; }
  bool contains(int v) const;
  // True when {a,b} joins consecutive path vertices.
  bool uses_edge(int a, int b) const;

  friend bool operator==(const PathCopy& a, const PathCopy& b) {
    return a.size_ == b.size_ && a.vertices_ == b.vertices_;
  }
  friend bool operator<(const PathCopy& a, const PathCopy& b) {
    return a.size_ != b.size_ ? a.size_ < b.size_ : a.vertices_ < b.vertices_;
  }

 private:
  std::array<int, kMaxLength> vertices_{};
  int size_ = 0;
};

// Number of triangles, each counted once.
Count count_triangles(const SimpleGraph& g);

// Number of unordered copies of P_k (k vertices). Throws for k < 2.
Count count_paths(const SimpleGraph& g, int k);

// Number of P_k copies whose vertex set contains v.
Count count_paths_through(const SimpleGraph& g, int v, int k);

// Sum over edges xy of (d(x)-1)(d(y)-1), minus three times the triangle count.
// Equals count_paths(g, 4) on every simple graph.
Count p4_via_formula(const SimpleGraph& g);

// Calls visit(PathCopy) once per unordered P_k copy. k <= PathCopy::kMaxLength.
template <typename Visitor>
void for_each_path(const SimpleGraph& g, int k, Visitor&& visit);

// Graph text format: first line n, then one "u v" pair per line (0-based).
SimpleGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const SimpleGraph& g);
SimpleGraph parse_graph(const std::string& text);

// Common small graphs.
SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph star_graph(int leaves);
// K1 + P_{n-1}; vertex 0 is the apex.
SimpleGraph fan_graph(int n);

}  // namespace mop

#include "mop/detail/path_walk.hpp"

#endif  // MOP_GRAPH_HPP_
