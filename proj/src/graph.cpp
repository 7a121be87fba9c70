#include "mop/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mop {

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("SimpleGraph: vertex count " + std::to_string(n) + " out of range");
  }
  words_ = n <= kWordVertices ? 1 : (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  adjacency_.resize(static_cast<std::size_t>(n));
}

SimpleGraph::SimpleGraph(int n, std::span<const std::pair<int, int>> edges) : SimpleGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("add_edge: vertex out of range (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  if (u == v) throw std::invalid_argument("add_edge: self-loop at " + std::to_string(u));
  if (has_edge(u, v)) return false;
  rows_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  auto insert_sorted = [](std::vector<int>& list, int x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
  ++edge_count_;
  return true;
}

int SimpleGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int SimpleGraph::min_degree() const {
  if (n_ == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
  SimpleGraph sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return sub;
}

PathCopy::PathCopy(std::span<const int> vertices) {
  if (vertices.size() > kMaxLength) throw std::invalid_argument("PathCopy: too many vertices");
  size_ = static_cast<int>(vertices.size());
  std::copy(vertices.begin(), vertices.end(), vertices_.begin());
  if (size_ > 1 && vertices_[0] > vertices_[size_ - 1]) std::reverse(vertices_.begin(), vertices_.begin() + size_);
}

bool PathCopy::contains(int v) const {
  for (int i = 0; i < size_; ++i) {
    if (vertices_[i] == v) return true;
  }
  return false;
}

bool PathCopy::uses_edge(int a, int b) const {
  for (int i = 0; i + 1 < size_; ++i) {
    if ((vertices_[i] == a && vertices_[i + 1] == b) || (vertices_[i] == b && vertices_[i + 1] == a)) return true;
  }
  return false;
}

Count count_triangles(const SimpleGraph& g) {
  Count total = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (nu[i] <= u) continue;
      for (std::size_t j = i + 1; j < nu.size(); ++j) {
        if (g.has_edge(nu[i], nu[j])) ++total;
      }
    }
  }
  return total;
}

namespace {

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("path length k must be at least 2, got " + std::to_string(k));
}

Count directed_paths(const SimpleGraph& g, int k, int excluded) {
  if (k > g.vertex_count()) return 0;
  if (g.word_sized()) return detail::count_directed(g, k, excluded, detail::WordMask{});
  return detail::count_directed(g, k, excluded, detail::ByteMask(g.vertex_count()));
}

}  // namespace

Count count_paths(const SimpleGraph& g, int k) {
  check_k(k);
  return directed_paths(g, k, -1) / 2;
}

Count count_paths_through(const SimpleGraph& g, int v, int k) {
  check_k(k);
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("count_paths_through: vertex " + std::to_string(v) + " out of range");
  }
  // Copies through v = all copies minus those avoiding v.
  return (directed_paths(g, k, -1) - directed_paths(g, k, v)) / 2;
}

Count p4_via_formula(const SimpleGraph& g) {
  Count sum = 0;
  for (auto [x, y] : g.edges()) {
    sum += static_cast<Count>(g.degree(x) - 1) * static_cast<Count>(g.degree(y) - 1);
  }
  return sum - 3 * count_triangles(g);
}

SimpleGraph read_graph(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw std::runtime_error("graph text: missing vertex count");
  SimpleGraph g(n);
  int u = 0;
  int v = 0;
  while (in >> u) {
    if (!(in >> v)) throw std::runtime_error("graph text: dangling endpoint " + std::to_string(u));
    g.add_edge(u, v);
  }
  if (!in.eof()) throw std::runtime_error("graph text: malformed edge line");
  return g;
}

SimpleGraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph star_graph(int leaves) {
  SimpleGraph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

SimpleGraph fan_graph(int n) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  for (int v = 1; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace mop
