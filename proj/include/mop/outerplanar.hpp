#ifndef MOP_OUTERPLANAR_HPP_
#define MOP_OUTERPLANAR_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mop/graph.hpp"

namespace mop {

// Polygon diagonal between outer-cycle labels a < b (1-based).
struct Diagonal {
  int a = 0;
  int b = 0;

  Diagonal() = default;
  // Normalizes endpoint order.
  Diagonal(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// Maximal outerplanar graph given as a triangulated convex polygon whose
// outer cycle is 1, 2, ..., n in counterclockwise order. Diagonals are kept
// normalized and sorted.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int size() const { return n_; }
  std::span<const Diagonal> diagonals() const { return diagonals_; }
  bool has_diagonal(Diagonal d) const;

  // "n; a1-b1, a2-b2, ..." with sorted pairs.
  std::string to_text() const;
  static Triangulation parse(const std::string& text);

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  int n_ = 0;
  std::vector<Diagonal> diagonals_;
};

// True iff diagonals d and e cross in the interior of the convex polygon.
bool diagonals_cross(Diagonal d, Diagonal e);

// Empty when t satisfies every invariant; otherwise the first violation.
std::optional<std::string> validate_triangulation(const Triangulation& t);

// Outer cycle plus diagonals; label i becomes vertex i-1.
SimpleGraph to_graph(const Triangulation& t);

struct RecognizedMop {
  Triangulation triangulation;
  // outer_cycle[i] is the graph vertex carrying label i+1.
  std::vector<int> outer_cycle;
};

struct Rejection {
  std::string reason;
};

// Recognizes maximal outerplanar graphs by peeling ears. The outer cycle is
// reported starting at the smallest vertex, toward its smaller cycle neighbor.
// Holds either a RecognizedMop or a Rejection.
class Recognition {
 public:
  explicit Recognition(RecognizedMop mop) : mop_(std::move(mop)) {}
  explicit Recognition(Rejection r) : rejection_(std::move(r.reason)) {}

  bool accepted() const { return mop_.has_value(); }
  explicit operator bool() const { return accepted(); }
  const RecognizedMop& value() const;
  const std::string& reason() const { return rejection_; }

 private:
  std::optional<RecognizedMop> mop_;
  std::string rejection_;
};

Recognition recognize_mop(const SimpleGraph& g);

// Inner dual: one node per bounded face, adjacent when faces share a diagonal.
struct DualTree {
  struct Edge {
    int first = 0;
    int second = 0;
    Diagonal shared;
  };
  // Face vertex triples (labels, ascending), faces sorted lexicographically.
  std::vector<std::array<int, 3>> faces;
  std::vector<Edge> edges;

  int node_count() const { return static_cast<int>(faces.size()); }
  std::vector<int> degrees() const;
  int max_degree() const;
  bool is_tree() const;
};

DualTree dual_tree(const Triangulation& t);

// Labels whose two cycle neighbors are joined by a diagonal (all labels when
// n = 3), ascending.
std::vector<int> degree_two_vertices(const Triangulation& t);

struct ChordSides {
  Diagonal chord;
  // Interior labels strictly between chord.a and chord.b counterclockwise.
  std::vector<int> side1;
  // Interior labels on the other arc.
  std::vector<int> side2;

  int n1() const { return static_cast<int>(side1.size()); }
  int n2() const { return static_cast<int>(side2.size()); }
};

// Throws std::invalid_argument when chord is not a diagonal of t.
ChordSides chord_sides(const Triangulation& t, Diagonal chord);

// Edge of a tree (Δ <= 3) whose removal leaves two components of at least
// (m-1)/3 nodes each. Picks the most balanced split; ties go to the
// lexicographically smallest (smaller node, larger node) pair. Throws on
// m < 2, Δ > 3, or input that is not a tree.
std::pair<int, int> tree_split_edge(int node_count, std::span<const std::pair<int, int>> edges);

// Chord with at least n/3 vertices, endpoints included, on each side.
// Found through tree_split_edge on the dual tree. Throws for n = 3.
Diagonal nice_chord(const Triangulation& t);

}  // namespace mop

#endif  // MOP_OUTERPLANAR_HPP_
