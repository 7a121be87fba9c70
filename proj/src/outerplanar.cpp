#include "mop/outerplanar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mop {

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
  std::sort(diagonals_.begin(), diagonals_.end());
}

bool Triangulation::has_diagonal(Diagonal d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

std::string Triangulation::to_text() const {
  std::string out = std::to_string(n_) + ";";
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += std::to_string(diagonals_[i].a) + "-" + std::to_string(diagonals_[i].b);
  }
  return out;
}

Triangulation Triangulation::parse(const std::string& text) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("triangulation text '" + text + "': " + why);
  };
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected integer at offset " + std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  const int n = read_int();
  std::vector<Diagonal> diagonals;
  skip_space();
  if (pos < text.size()) {
    expect(';');
    skip_space();
    while (pos < text.size()) {
      int a = read_int();
      expect('-');
      int b = read_int();
      diagonals.emplace_back(a, b);
      skip_space();
      if (pos < text.size()) expect(',');
    }
  }
  return Triangulation(n, std::move(diagonals));
}

bool diagonals_cross(Diagonal d, Diagonal e) {
  return (d.a < e.a && e.a < d.b && d.b < e.b) || (e.a < d.a && d.a < e.b && e.b < d.b);
}

std::optional<std::string> validate_triangulation(const Triangulation& t) {
  const int n = t.size();
  if (n < 3) return "polygon size " + std::to_string(n) + " is below 3";
  auto diagonals = t.diagonals();
  for (const Diagonal& d : diagonals) {
    const std::string name = std::to_string(d.a) + "-" + std::to_string(d.b);
    if (d.a < 1 || d.b > n) return "diagonal " + name + " has an endpoint outside 1.." + std::to_string(n);
    const int gap = d.b - d.a;
    if (gap == 0 || gap == 1 || gap == n - 1) return "pair " + name + " is not a diagonal";
  }
  for (std::size_t i = 1; i < diagonals.size(); ++i) {
    if (diagonals[i] == diagonals[i - 1]) {
      return "duplicate diagonal " + std::to_string(diagonals[i].a) + "-" + std::to_string(diagonals[i].b);
    }
  }
  if (static_cast<int>(diagonals.size()) != n - 3) {
    return "expected " + std::to_string(n - 3) + " diagonals, found " + std::to_string(diagonals.size());
  }
  // Non-crossing chords are laminar intervals; scan in (a asc, b desc) order.
  std::vector<Diagonal> order(diagonals.begin(), diagonals.end());
  std::sort(order.begin(), order.end(), [](Diagonal x, Diagonal y) { return x.a != y.a ? x.a < y.a : x.b > y.b; });
  std::vector<Diagonal> open;
  for (const Diagonal& d : order) {
    while (!open.empty() && open.back().b <= d.a) open.pop_back();
    if (!open.empty() && d.b > open.back().b) {
      const Diagonal& o = open.back();
      return "diagonals " + std::to_string(o.a) + "-" + std::to_string(o.b) + " and " + std::to_string(d.a) + "-" +
             std::to_string(d.b) + " cross";
    }
    open.push_back(d);
  }
  return std::nullopt;
}

SimpleGraph to_graph(const Triangulation& t) {
  const int n = t.size();
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  for (const Diagonal& d : t.diagonals()) g.add_edge(d.a - 1, d.b - 1);
  return g;
}

const RecognizedMop& Recognition::value() const {
  if (!mop_) throw std::logic_error("recognition rejected: " + rejection_);
  return *mop_;
}

Recognition recognize_mop(const SimpleGraph& g) {
  const int n = g.vertex_count();
  auto reject = [](std::string why) { return Recognition(Rejection{std::move(why)}); };
  if (n < 3) return reject("fewer than 3 vertices");
  if (g.edge_count() != static_cast<std::size_t>(2 * n - 3)) {
    return reject("edge count " + std::to_string(g.edge_count()) + " differs from 2n-3 = " + std::to_string(2 * n - 3));
  }
  if (!g.connected()) return reject("graph is disconnected");

  // Peel ears: a degree-2 vertex whose neighbors are adjacent.
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 2) queue.push_back(v);
  }
  struct Ear {
    int vertex, left, right;
  };
  std::vector<Ear> ears;
  int remaining = n;
  while (remaining > 3) {
    int v = -1;
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      if (!removed[c] && degree[c] == 2) {
        v = c;
        break;
      }
    }
    if (v < 0) return reject("no peelable ear with " + std::to_string(remaining) + " vertices left");
    std::array<int, 2> nb{};
    int found = 0;
    for (int w : g.neighbors(v)) {
      if (!removed[w]) nb[found++] = w;
    }
    if (!g.has_edge(nb[0], nb[1])) {
      return reject("degree-2 vertex " + std::to_string(v) + " has non-adjacent neighbors");
    }
    removed[v] = 1;
    --remaining;
    ears.push_back({v, nb[0], nb[1]});
    for (int w : nb) {
      if (--degree[w] == 2) queue.push_back(w);
    }
  }

  // Rebuild the outer cycle by re-inserting ears onto boundary edges.
  std::vector<int> next(static_cast<std::size_t>(n), -1);
  std::vector<int> prev(static_cast<std::size_t>(n), -1);
  std::vector<int> base;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) base.push_back(v);
  }
  if (!g.has_edge(base[0], base[1]) || !g.has_edge(base[1], base[2]) || !g.has_edge(base[0], base[2])) {
    return reject("final three vertices do not form a triangle");
  }
  for (int i = 0; i < 3; ++i) {
    next[base[i]] = base[(i + 1) % 3];
    prev[base[(i + 1) % 3]] = base[i];
  }
  for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
    int a = it->left;
    int b = it->right;
    if (next[b] == a) std::swap(a, b);
    if (next[a] != b) {
      return reject("edge " + std::to_string(it->left) + "-" + std::to_string(it->right) +
                    " lies on more than two triangles");
    }
    next[a] = it->vertex;
    prev[it->vertex] = a;
    next[it->vertex] = b;
    prev[b] = it->vertex;
  }

  RecognizedMop out;
  const int start = 0;
  const bool forward = next[start] < prev[start];
  out.outer_cycle.reserve(static_cast<std::size_t>(n));
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int v = start, i = 0; i < n; ++i) {
    out.outer_cycle.push_back(v);
    label[v] = i + 1;
    v = forward ? next[v] : prev[v];
  }
  std::vector<Diagonal> diagonals;
  for (auto [u, v] : g.edges()) {
    int gap = std::abs(label[u] - label[v]);
    if (gap != 1 && gap != n - 1) diagonals.emplace_back(label[u], label[v]);
  }
  out.triangulation = Triangulation(n, std::move(diagonals));
  return Recognition(std::move(out));
}

std::vector<int> DualTree::degrees() const {
  std::vector<int> deg(faces.size(), 0);
  for (const Edge& e : edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  return deg;
}

int DualTree::max_degree() const {
  auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool DualTree::is_tree() const {
  const int m = node_count();
  if (m == 0 || static_cast<int>(edges.size()) != m - 1) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int h : adj[f]) {
      if (!seen[h]) {
        seen[h] = 1;
        ++reached;
        stack.push_back(h);
      }
    }
  }
  return reached == m;
}

DualTree dual_tree(const Triangulation& t) {
  const int n = t.size();
  const SimpleGraph g = to_graph(t);
  DualTree tree;
  // Around each vertex a, neighbors in cyclic order pair up into faces; keep a
  // face only at its smallest label.
  for (int a = 1; a <= n; ++a) {
    std::vector<int> around;
    for (int w : g.neighbors(a - 1)) around.push_back(w + 1);
    std::sort(around.begin(), around.end(), [&](int x, int y) { return (x - a + n) % n < (y - a + n) % n; });
    for (std::size_t i = 0; i + 1 < around.size(); ++i) {
      int b = around[i];
      int c = around[i + 1];
      if (a < b && a < c) tree.faces.push_back({a, std::min(b, c), std::max(b, c)});
    }
  }
  std::sort(tree.faces.begin(), tree.faces.end());

  std::map<Diagonal, std::vector<int>> sharing;
  for (int f = 0; f < tree.node_count(); ++f) {
    const auto& [x, y, z] = tree.faces[f];
    for (Diagonal side : {Diagonal(x, y), Diagonal(y, z), Diagonal(x, z)}) {
      if (t.has_diagonal(side)) sharing[side].push_back(f);
    }
  }
  for (const auto& [diagonal, fs] : sharing) {
    if (fs.size() != 2) throw std::logic_error("dual_tree: diagonal not shared by exactly two faces");
    tree.edges.push_back({fs[0], fs[1], diagonal});
  }
  std::sort(tree.edges.begin(), tree.edges.end(), [](const DualTree::Edge& l, const DualTree::Edge& r) {
    return std::pair(l.first, l.second) < std::pair(r.first, r.second);
  });
  return tree;
}

std::vector<int> degree_two_vertices(const Triangulation& t) {
  const int n = t.size();
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (n == 3) {
      out.push_back(v);
      continue;
    }
    int before = v == 1 ? n : v - 1;
    int after = v == n ? 1 : v + 1;
    if (t.has_diagonal(Diagonal(before, after))) out.push_back(v);
  }
  return out;
}

ChordSides chord_sides(const Triangulation& t, Diagonal chord) {
  if (!t.has_diagonal(chord)) {
    throw std::invalid_argument("chord_sides: " + std::to_string(chord.a) + "-" + std::to_string(chord.b) +
                                " is not a diagonal");
  }
  ChordSides sides;
  sides.chord = chord;
  for (int v = chord.a + 1; v < chord.b; ++v) sides.side1.push_back(v);
  for (int v = chord.b + 1; v <= t.size(); ++v) sides.side2.push_back(v);
  for (int v = 1; v < chord.a; ++v) sides.side2.push_back(v);
  return sides;
}

std::pair<int, int> tree_split_edge(int node_count, std::span<const std::pair<int, int>> edges) {
  const int m = node_count;
  if (m < 2) throw std::invalid_argument("tree_split_edge: need at least 2 nodes");
  if (static_cast<int>(edges.size()) != m - 1) throw std::invalid_argument("tree_split_edge: edge count is not m-1");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= m || v >= m || u == v) throw std::invalid_argument("tree_split_edge: bad edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& nb : adj) {
    if (nb.size() > 3) throw std::invalid_argument("tree_split_edge: maximum degree exceeds 3");
  }

  std::vector<int> parent(static_cast<std::size_t>(m), -1);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(m));
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : adj[order[i]]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != m) throw std::invalid_argument("tree_split_edge: graph is not connected");

  std::vector<int> subtree(static_cast<std::size_t>(m), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];
  }
  int best_balance = -1;
  std::pair<int, int> best{};
  for (int c = 1; c < m; ++c) {
    const int balance = std::min(subtree[c], m - subtree[c]);
    const std::pair<int, int> key(std::min(c, parent[c]), std::max(c, parent[c]));
    if (balance > best_balance || (balance == best_balance && key < best)) {
      best_balance = balance;
      best = key;
    }
  }
  if (3 * best_balance < m - 1) throw std::logic_error("tree_split_edge: no balanced edge found");
  return best;
}

Diagonal nice_chord(const Triangulation& t) {
  const int n = t.size();
  if (n < 4) throw std::invalid_argument("nice_chord: a triangle has no chords");
  const DualTree tree = dual_tree(t);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(tree.edges.size());
  for (const auto& e : tree.edges) edges.emplace_back(e.first, e.second);
  const auto split = tree_split_edge(tree.node_count(), edges);
  for (const auto& e : tree.edges) {
    if (std::pair(std::min(e.first, e.second), std::max(e.first, e.second)) == split) {
      const ChordSides sides = chord_sides(t, e.shared);
      if (3 * (std::min(sides.n1(), sides.n2()) + 2) < n) throw std::logic_error("nice_chord: split chord is unbalanced");
      return e.shared;
    }
  }
  throw std::logic_error("nice_chord: split edge missing from dual tree");
}

}  // namespace mop
