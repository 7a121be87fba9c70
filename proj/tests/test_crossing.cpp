#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mop/constructions.hpp"
#include "mop/crossing.hpp"
#include "mop/enumeration.hpp"

using namespace mop;

namespace {

PathCopy labels(std::initializer_list<int> path) {
  std::vector<int> v;
  for (int x : path) v.push_back(x - 1);
  return PathCopy(v);
}

// Reference classifier written from the type definitions on label sets.
std::optional<CrossingType> reference_type(const PathCopy& p, const ChordSides& s) {
  auto in = [](const std::vector<int>& side, int label) { return std::find(side.begin(), side.end(), label) != side.end(); };
  int first = 0, second = 0;
  bool has_x = false, has_y = false;
  for (int v : p.vertices()) {
    const int label = v + 1;
    first += in(s.side1, label);
    second += in(s.side2, label);
    has_x |= label == s.chord.a;
    has_y |= label == s.chord.b;
  }
  if (first == 0 || second == 0) return std::nullopt;
  if (p.uses_edge(s.chord.a - 1, s.chord.b - 1)) return CrossingType::kI;
  const int ends[2] = {p.front() + 1, p.back() + 1};
  auto terminal = [&](int label) { return ends[0] == label || ends[1] == label; };
  if (has_x && has_y) return terminal(s.chord.a) || terminal(s.chord.b) ? CrossingType::kIIB : CrossingType::kIIA;
  return first == 2 && second == 2 ? CrossingType::kIIIA : CrossingType::kIIIB;
}

}  // namespace

TEST_CASE("classification examples") {
  const Triangulation pent = fan(5);
  const ChordSides s = chord_sides(pent, {1, 3});
  CHECK(classify_crossing(labels({2, 1, 3, 4, 5}), s) == CrossingType::kI);
  CHECK(classify_crossing(labels({1, 2, 3, 4, 5}), s) == CrossingType::kIIB);
  const ChordSides f7 = chord_sides(fan(7), {1, 4});
  CHECK(classify_crossing(labels({2, 3, 4, 5, 6}), f7) == CrossingType::kIIIA);
  CHECK_FALSE(classify_crossing(labels({4, 5, 6, 7, 1}), f7));
  CHECK(crossing_type_name(CrossingType::kIIIB) == "IIIB");
}

TEST_CASE("classification errors") {
  const ChordSides s = chord_sides(fan(7), {1, 4});
  CHECK_THROWS_AS(classify_crossing(labels({1, 2, 3}), s), std::invalid_argument);
  CHECK_THROWS_AS(classify_crossing(labels({1, 2, 3, 4, 9}), s), std::invalid_argument);
  // Terminal chord edge: 4-1 at the end of a path crossing both sides.
  CHECK_THROWS_AS(classify_crossing(labels({5, 6, 2, 1, 4}), s), std::logic_error);
  // Crossing without either endpoint (not a path of the graph, but the
  // classifier only sees the vertex sequence).
  CHECK_THROWS_AS(classify_crossing(labels({2, 3, 5, 6, 7}), s), std::logic_error);
}

TEST_CASE("count_crossing examples") {
  const CrossingReport pent = count_crossing(fan(5), {1, 3});
  CHECK(pent.total == 10);
  CHECK(pent.n1 == 1);
  CHECK(pent.n2 == 2);
  CHECK(count_crossing(Triangulation(4, {{1, 3}}), {1, 3}).total == 0);
  CHECK(count_crossing(Triangulation(4, {{2, 4}}), {2, 4}).total == 0);
  const Triangulation f7 = fan(7);
  const CrossingReport r = count_crossing(f7, {1, 4});
  const Decomposition d = decompose_count(f7, {1, 4});
  CHECK(r.total == d.total - d.side1 - d.side2);
  Count sum = 0;
  for (Count c : r.by_type) sum += c;
  CHECK(sum == r.total);
}

TEST_CASE("decomposition examples") {
  const Decomposition pent = decompose_count(fan(5), {1, 3});
  CHECK(pent.side1 == 0);
  CHECK(pent.side2 == 0);
  CHECK(pent.crossing == 10);
  CHECK(pent.total == 10);
  const Decomposition f6 = decompose_count(fan(6), {1, 4}, 5);
  CHECK(f6.total == f6.side1 + f6.side2 + f6.crossing);
  CHECK(f6.total == count_paths(to_graph(fan(6)), 5));
  CHECK_THROWS_AS(decompose_count(fan(6), {2, 4}), std::invalid_argument);
}

TEST_CASE("classifier agrees with the reference on every chord up to n = 10") {
  for (int n = 5; n <= 10; ++n) {
    int mismatches = 0;
    enumerate_labeled(n, [&](const Triangulation& t) {
      const SimpleGraph g = to_graph(t);
      for (const Diagonal& chord : t.diagonals()) {
        const ChordSides s = chord_sides(t, chord);
        const ChordPartition part(s);
        std::array<Count, kCrossingTypeCount> tally{};
        for_each_path(g, 5, [&](const PathCopy& p) {
          const auto got = classify_crossing(p, part);
          if (got != reference_type(p, s)) ++mismatches;
          if (got) ++tally[static_cast<int>(*got)];
        });
        if (count_crossing(t, chord).by_type != tally) ++mismatches;
      }
    });
    CHECK_MESSAGE(mismatches == 0, "n = " << n);
  }
}

TEST_CASE("decomposition identity for k = 3..6") {
  for (int n = 4; n <= 9; ++n)
    enumerate_labeled(n, [&](const Triangulation& t) {
      for (const Diagonal& chord : t.diagonals())
        for (int k = 3; k <= 6; ++k) {
          const Decomposition d = decompose_count(t, chord, k);
          REQUIRE(d.total == d.side1 + d.side2 + d.crossing);
          CHECK(d.total == count_paths(to_graph(t), k));
        }
    });
}

TEST_CASE("report JSON") {
  const CrossingReport r = count_crossing(fan(9), {1, 5});
  const std::string json = r.to_json();
  CHECK(json.rfind("{\"chord\":[1,5],\"n1\":3,\"n2\":4,\"I\":", 0) == 0);
  const CrossingReport back = CrossingReport::from_json(json);
  CHECK(back.chord == r.chord);
  CHECK(back.by_type == r.by_type);
  CHECK(back.total == r.total);
  CHECK_THROWS(CrossingReport::from_json("{\"chord\":[1,5]}"));
}

TEST_CASE("eared fan crossing coefficient") {
  const int n = 400;
  const Triangulation t = eared_fan(n, EarPlacement::spread(n));
  const Diagonal chord = nice_chord(t);
  const CrossingReport r = count_crossing(t, chord);
  const double ratio = static_cast<double>(r.total) / (8.5 * r.n1 * r.n2);
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.1));
  CHECK(3 * (std::min(r.n1, r.n2) + 2) >= n);
}
