#ifndef MOP_CONSTRUCTIONS_HPP_
#define MOP_CONSTRUCTIONS_HPP_

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "mop/outerplanar.hpp"

namespace mop {

// Gaps of a fan on m = 3n/4 vertices that receive one ear each. Gap g sits
// between the g-th and (g+1)-th vertex of the fan's outer cycle, counting
// counterclockwise from the apex, so gaps 0 and m-1 touch the apex.
struct EarPlacement {
  std::set<int> positions;

  // Comma-separated gap indices, e.g. "0,3,7".
  static EarPlacement parse(std::string_view text);
  // n/4 ears spread over the 3n/4 gaps: gap 3i for i = 0..n/4-1.
  static EarPlacement spread(int n);
  std::string to_text() const;
};

// K1 + P_{n-1} with apex 1: diagonals 1-i for 3 <= i <= n-1.
Triangulation fan(int n);

// Quadratic P5 construction on the cycle v1..vn: v1 joined to v_{n/2}..v_n and
// to v3, v5, ..., v_{n/2-2}, plus v_i v_{i+2} for the same odd i. The diagonal
// set closes up exactly when n = 2 (mod 4); for n = 0 (mod 4) the last left
// gap is left earless by adding v1 v_{n/2-1}. Requires even n >= 4.
Triangulation p5_extremal(int n);

// Fan on 3n/4 vertices with an ear glued into each gap listed in `ears`.
// Requires n = 0 (mod 4), n >= 4, and exactly n/4 distinct in-range gaps.
Triangulation eared_fan(int n, const EarPlacement& ears);

// Outer cycle v, e0, w1, e1, ..., w_{n/2-1}, e_{n/2-1} with diagonals v-w_i and
// w_i-w_{i+1}; the n/2 vertices e_i are ears. Requires even n >= 6.
Triangulation p6_extremal(int n);

enum class Family { kFan, kP5, kEaredFan, kP6 };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);

// Builds a member of `family`; eared-fan uses `ears` or EarPlacement::spread.
Triangulation construct(Family family, int n, const std::optional<EarPlacement>& ears = std::nullopt);

}  // namespace mop

#endif  // MOP_CONSTRUCTIONS_HPP_
