#include "mop/constructions.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace mop {
namespace {

// Triangulation from an outer cycle given as labels in cyclic order and a list
// of extra edges between those labels; relabels the cycle to 1..n.
Triangulation from_cycle(const std::vector<int>& cycle, const std::vector<std::pair<int, int>>& chords) {
  const int n = static_cast<int>(cycle.size());
  std::vector<int> position(static_cast<std::size_t>(n + 1), 0);
  for (int i = 0; i < n; ++i) position[cycle[i]] = i + 1;
  std::vector<Diagonal> diagonals;
  diagonals.reserve(chords.size());
  for (auto [u, v] : chords) {
    Diagonal d(position[u], position[v]);
    const int gap = d.b - d.a;
    if (gap == 1 || gap == n - 1) continue;
    diagonals.push_back(d);
  }
  Triangulation t(n, std::move(diagonals));
  if (auto violation = validate_triangulation(t)) throw std::logic_error("construction is not a triangulation: " + *violation);
  return t;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

EarPlacement EarPlacement::parse(std::string_view text) {
  EarPlacement placement;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      int gap = 0;
      auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), gap);
      require(ec == std::errc() && end == item.data() + item.size(), "ear list: bad gap index '" + std::string(item) + "'");
      require(gap >= 0, "ear list: negative gap " + std::to_string(gap));
      require(placement.positions.insert(gap).second, "ear list: duplicate gap " + std::to_string(gap));
    }
    pos = comma + 1;
  }
  return placement;
}

EarPlacement EarPlacement::spread(int n) {
  EarPlacement placement;
  for (int i = 0; i < n / 4; ++i) placement.positions.insert(3 * i);
  return placement;
}

std::string EarPlacement::to_text() const {
  std::string out;
  for (int g : positions) {
    if (!out.empty()) out += ',';
    out += std::to_string(g);
  }
  return out;
}

Triangulation fan(int n) {
  require(n >= 3, "fan: n must be at least 3");
  std::vector<Diagonal> diagonals;
  for (int i = 3; i <= n - 1; ++i) diagonals.emplace_back(1, i);
  return Triangulation(n, std::move(diagonals));
}

Triangulation p5_extremal(int n) {
  require(n >= 4 && n % 2 == 0, "p5_extremal: n must be even and at least 4");
  const int half = n / 2;
  std::vector<std::pair<int, int>> chords;
  for (int i = half; i <= n; ++i) chords.emplace_back(1, i);
  for (int i = 3; i <= half - 2; i += 2) {
    chords.emplace_back(1, i);
    chords.emplace_back(i, i + 2);
  }
  if (n % 4 == 0 && half - 1 >= 3) chords.emplace_back(1, half - 1);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[i] = i + 1;
  return from_cycle(cycle, chords);
}

Triangulation eared_fan(int n, const EarPlacement& ears) {
  require(n >= 4 && n % 4 == 0, "eared_fan: n must be a positive multiple of 4");
  const int m = 3 * n / 4;
  require(static_cast<int>(ears.positions.size()) == n / 4,
          "eared_fan: need exactly " + std::to_string(n / 4) + " ears, got " + std::to_string(ears.positions.size()));
  for (int g : ears.positions) require(g >= 0 && g < m, "eared_fan: gap " + std::to_string(g) + " out of range");

  // Fan vertices are 1 (apex) .. m; ear in gap g gets id m + 1 + rank.
  std::vector<int> cycle;
  std::vector<std::pair<int, int>> chords;
  for (int i = 2; i <= m; ++i) chords.emplace_back(1, i);
  for (int i = 2; i < m; ++i) chords.emplace_back(i, i + 1);
  int next_ear = m + 1;
  for (int g = 0; g < m; ++g) {
    cycle.push_back(g + 1);
    if (ears.positions.count(g)) {
      const int left = g + 1;
      const int right = g + 1 == m ? 1 : g + 2;
      chords.emplace_back(left, next_ear);
      chords.emplace_back(next_ear, right);
      cycle.push_back(next_ear++);
    }
  }
  return from_cycle(cycle, chords);
}

Triangulation p6_extremal(int n) {
  require(n >= 6 && n % 2 == 0, "p6_extremal: n must be even and at least 6");
  // Labels: v = 1, e_i = 2i + 2, w_i = 2i + 1.
  const int hubs = n / 2 - 1;
  std::vector<std::pair<int, int>> chords;
  for (int i = 1; i <= hubs; ++i) chords.emplace_back(1, 2 * i + 1);
  for (int i = 1; i < hubs; ++i) chords.emplace_back(2 * i + 1, 2 * i + 3);
  std::vector<int> cycle(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cycle[i] = i + 1;
  return from_cycle(cycle, chords);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "fan") return Family::kFan;
  if (name == "p5") return Family::kP5;
  if (name == "eared-fan") return Family::kEaredFan;
  if (name == "p6") return Family::kP6;
  return std::nullopt;
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kFan:
      return "fan";
    case Family::kP5:
      return "p5";
    case Family::kEaredFan:
      return "eared-fan";
    case Family::kP6:
      return "p6";
  }
  return "unknown";
}

Triangulation construct(Family family, int n, const std::optional<EarPlacement>& ears) {
  switch (family) {
    case Family::kFan:
      return fan(n);
    case Family::kP5:
      return p5_extremal(n);
    case Family::kEaredFan:
      return eared_fan(n, ears ? *ears : EarPlacement::spread(n));
    case Family::kP6:
      return p6_extremal(n);
  }
  throw std::invalid_argument("construct: unknown family");
}

}  // namespace mop
