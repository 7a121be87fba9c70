#include "mop/crossing.hpp"

#include <stdexcept>

#include "json.hpp"

namespace mop {

std::string_view crossing_type_name(CrossingType type) {
  static constexpr std::array<std::string_view, kCrossingTypeCount> kNames = {"I", "IIA", "IIB", "IIIA", "IIIB"};
  return kNames[static_cast<int>(type)];
}

ChordPartition::ChordPartition(const ChordSides& sides)
    : side_(static_cast<std::size_t>(sides.n1() + sides.n2() + 2), Side::kEndpoint),
      x_(sides.chord.a - 1),
      y_(sides.chord.b - 1) {
  for (int label : sides.side1) side_[label - 1] = Side::kFirst;
  for (int label : sides.side2) side_[label - 1] = Side::kSecond;
}

bool ChordPartition::crosses(const PathCopy& p) const {
  bool first = false;
  bool second = false;
  for (int v : p.vertices()) {
    first |= side_[v] == Side::kFirst;
    second |= side_[v] == Side::kSecond;
  }
  return first && second;
}

std::optional<CrossingType> classify_crossing(const PathCopy& p, const ChordPartition& partition) {
  if (p.size() != 5) throw std::invalid_argument("classify_crossing: path must have 5 vertices");
  for (int i = 0; i < 5; ++i) {
    if (p[i] < 0 || p[i] >= partition.vertex_count()) throw std::invalid_argument("classify_crossing: vertex out of range");
    for (int j = 0; j < i; ++j) {
      if (p[i] == p[j]) throw std::invalid_argument("classify_crossing: repeated vertex");
    }
  }
  if (!partition.crosses(p)) return std::nullopt;

  const int x = partition.x();
  const int y = partition.y();
  const bool has_x = p.contains(x);
  const bool has_y = p.contains(y);
  if (!has_x && !has_y) throw std::logic_error("crossing P5 avoids both chord endpoints");

  if (p.uses_edge(x, y)) {
    if ((p[0] == x || p[0] == y) && (p[1] == x || p[1] == y)) throw std::logic_error("chord is a terminal edge");
    if ((p[3] == x || p[3] == y) && (p[4] == x || p[4] == y)) throw std::logic_error("chord is a terminal edge");
    return CrossingType::kI;
  }
  if (has_x && has_y) {
    const bool terminal = p.front() == x || p.front() == y || p.back() == x || p.back() == y;
    return terminal ? CrossingType::kIIB : CrossingType::kIIA;
  }
  int first = 0;
  for (int v : p.vertices()) first += partition.side(v) == ChordPartition::Side::kFirst;
  return first == 2 ? CrossingType::kIIIA : CrossingType::kIIIB;
}

std::optional<CrossingType> classify_crossing(const PathCopy& p, const ChordSides& sides) {
  return classify_crossing(p, ChordPartition(sides));
}

std::string CrossingReport::to_json() const {
  nlohmann::ordered_json j;
  j["chord"] = {chord.a, chord.b};
  j["n1"] = n1;
  j["n2"] = n2;
  for (int i = 0; i < kCrossingTypeCount; ++i) j[std::string(crossing_type_name(static_cast<CrossingType>(i)))] = by_type[i];
  j["total"] = total;
  return j.dump();
}

CrossingReport CrossingReport::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CrossingReport r;
  r.chord = Diagonal(j.at("chord").at(0).get<int>(), j.at("chord").at(1).get<int>());
  r.n1 = j.at("n1").get<int>();
  r.n2 = j.at("n2").get<int>();
  for (int i = 0; i < kCrossingTypeCount; ++i) {
    r.by_type[i] = j.at(std::string(crossing_type_name(static_cast<CrossingType>(i)))).get<Count>();
  }
  r.total = j.at("total").get<Count>();
  return r;
}

CrossingReport count_crossing(const Triangulation& t, Diagonal chord) {
  const ChordSides sides = chord_sides(t, chord);
  const ChordPartition partition(sides);
  CrossingReport report;
  report.chord = chord;
  report.n1 = sides.n1();
  report.n2 = sides.n2();
  if (t.size() < 5) return report;
  for_each_path(to_graph(t), 5, [&](const PathCopy& p) {
    if (auto type = classify_crossing(p, partition)) {
      ++report.by_type[static_cast<int>(*type)];
      ++report.total;
    }
  });
  return report;
}

Decomposition decompose_count(const Triangulation& t, Diagonal chord, int k) {
  const ChordSides sides = chord_sides(t, chord);
  const ChordPartition partition(sides);
  const SimpleGraph g = to_graph(t);

  auto side_graph = [&](const std::vector<int>& interior) {
    std::vector<int> vertices{chord.a - 1, chord.b - 1};
    for (int label : interior) vertices.push_back(label - 1);
    return g.induced(vertices);
  };
  Decomposition d;
  d.side1 = count_paths(side_graph(sides.side1), k);
  d.side2 = count_paths(side_graph(sides.side2), k);
  d.total = count_paths(g, k);
  if (k <= g.vertex_count()) {
    for_each_path(g, k, [&](const PathCopy& p) { d.crossing += partition.crosses(p); });
  }
  return d;
}

}  // namespace mop
