#ifndef MOP_CROSSING_HPP_
#define MOP_CROSSING_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "mop/graph.hpp"
#include "mop/outerplanar.hpp"

namespace mop {

// Kinds of P5 that use interior vertices from both sides of a chord {x,y}.
//   I    uses the chord edge itself
//   IIA  contains x and y, neither is a terminal vertex
//   IIB  contains x and y, one of them is terminal
//   IIIA contains exactly one of x, y and two interior vertices per side
//   IIIB contains exactly one of x, y and a 1 + 3 interior split
enum class CrossingType { kI = 0, kIIA, kIIB, kIIIA, kIIIB };
inline constexpr int kCrossingTypeCount = 5;

std::string_view crossing_type_name(CrossingType type);

// Side membership of graph vertices (0-based) relative to a chord.
class ChordPartition {
 public:
  enum class Side : unsigned char { kEndpoint, kFirst, kSecond };

  explicit ChordPartition(const ChordSides& sides);

  Side side(int vertex) const { return side_[vertex]; }
  int x() const { return x_; }
  int y() const { return y_; }
  int vertex_count() const { return static_cast<int>(side_.size()); }
  // True when p has interior vertices on both sides.
  bool crosses(const PathCopy& p) const;

 private:
  std::vector<Side> side_;
  int x_;
  int y_;
};

// Type of a crossing P5, or nullopt if p does not cross. Vertices in p are
// graph vertices (label - 1). Throws std::invalid_argument for a path that is
// not five distinct in-range vertices, and std::logic_error if a crossing path
// avoids both chord endpoints or ends in the chord edge.
std::optional<CrossingType> classify_crossing(const PathCopy& p, const ChordPartition& partition);
std::optional<CrossingType> classify_crossing(const PathCopy& p, const ChordSides& sides);

struct CrossingReport {
  Diagonal chord;
  int n1 = 0;
  int n2 = 0;
  std::array<Count, kCrossingTypeCount> by_type{};
  Count total = 0;

  Count count(CrossingType type) const { return by_type[static_cast<int>(type)]; }
  // {"chord":[a,b],"n1":..,"n2":..,"I":..,"IIA":..,"IIB":..,"IIIA":..,"IIIB":..,"total":..}
  std::string to_json() const;
  static CrossingReport from_json(const std::string& text);
};

// Exact per-type tally of crossing P5 copies with respect to `chord`.
CrossingReport count_crossing(const Triangulation& t, Diagonal chord);

struct Decomposition {
  Count side1 = 0;     // N(P_k, G1), G1 induced by side1 + {x,y}
  Count side2 = 0;     // N(P_k, G2)
  Count crossing = 0;  // copies using interior vertices on both sides
  Count total = 0;     // N(P_k, G)
};

// The four counts above; total == side1 + side2 + crossing on every input.
Decomposition decompose_count(const Triangulation& t, Diagonal chord, int k = 5);

}  // namespace mop

#endif  // MOP_CROSSING_HPP_
