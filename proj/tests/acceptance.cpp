// Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero if any
// criterion fails, except those listed in kUnattainable, which still print
// FAIL but are known to be false as stated.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mop/constructions.hpp"
#include "mop/crossing.hpp"
#include "mop/enumeration.hpp"
#include "mop/experiments.hpp"
#include "oracles.hpp"

using namespace mop;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> run;
};

// Criterion 3 asks for a unique P3 extremal graph from n = 6 on. At n = 6 the
// snowflake 1-3, 3-5, 5-1 (degrees 4,2,4,2,4,2) has 3*6 + 3*1 = 21 cherries,
// the same as the fan, so the uniqueness part cannot hold there.
const std::map<int, std::string> kUnattainable = {
    {3, "n = 6 has two extremal classes (fan and snowflake, 21 each)"},
};

Count fan_p4(int n) { return static_cast<Count>(2 * n * n - 7 * n + 2); }
Count fan_p3(int n) { return static_cast<Count>((n * n + 3 * n - 12) / 2); }

std::string join(const std::vector<Count>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return s.str();
}

Outcome census() {
  Outcome o;
  const auto classes = enumerate_classes(7);
  std::vector<Count> counts;
  for (const auto& c : classes) counts.push_back(count_paths(to_graph(c.representative), 4));
  std::sort(counts.rbegin(), counts.rend());
  if (classes.size() != 4) o.fail(std::to_string(classes.size()) + " classes");
  if (counts != std::vector<Count>{51, 51, 48, 46}) o.fail("counts " + join(counts));
  const ExtremalResult best = f_op(7, 4);
  if (best.value != 51 || best.witnesses.size() != 2)
    o.fail("f_op(7,4) = " + std::to_string(best.value) + " with " + std::to_string(best.witnesses.size()));
  if (o.pass) o.detail = "4 classes, P4 counts " + join(counts) + ", f_op(7,4) = 51 with 2 witnesses";
  return o;
}

Outcome p4_extremal() {
  Outcome o;
  const CanonicalCode fan_8 = canonical_code(fan(8));
  for (int n = 8; n <= 12; ++n) {
    const ExtremalResult r = f_op(n, 4);
    if (r.value != fan_p4(n)) o.fail("n=" + std::to_string(n) + " value " + std::to_string(r.value));
    if (n == 8 && r.witnesses.size() < 2) o.fail("n=8 has " + std::to_string(r.witnesses.size()) + " witness");
    if (n == 8 && std::find(r.witnesses.begin(), r.witnesses.end(), fan_8) == r.witnesses.end())
      o.fail("n=8 fan not extremal");
    if (n >= 9 && (r.witnesses.size() != 1 || r.witnesses[0] != canonical_code(fan(n))))
      o.fail("n=" + std::to_string(n) + " witness set is not {fan}");
  }
  if (o.pass) o.detail = "2n^2-7n+2 for n=8..12; unique fan for n=9..12; 2 witnesses at n=8";
  return o;
}

Outcome p3_extremal() {
  Outcome o;
  std::string non_unique;
  for (int n = 6; n <= 12; ++n) {
    const ExtremalResult r = f_op(n, 3);
    const CanonicalCode f = canonical_code(fan(n));
    if (r.value != fan_p3(n)) o.fail("n=" + std::to_string(n) + " value " + std::to_string(r.value));
    if (std::find(r.witnesses.begin(), r.witnesses.end(), f) == r.witnesses.end())
      o.fail("n=" + std::to_string(n) + " fan not extremal");
    if (r.witnesses.size() != 1) {
      non_unique += " n=" + std::to_string(n) + ":";
      for (const auto& w : r.witnesses) non_unique += " " + w.hex();
    }
  }
  if (!o.pass) return o;
  if (!non_unique.empty()) {
    o.fail("values and fan witness hold for n=6..12; not unique at" + non_unique);
    return o;
  }
  o.detail = "(n^2+3n-12)/2 for n=6..12, unique fan";
  return o;
}

Outcome p4_formula() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> size(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  int graphs = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = size(rng);
    const SimpleGraph g(n, oracle::random_graph(rng, n, density(rng)));
    if (p4_via_formula(g) != count_paths(g, 4)) o.fail("random graph " + std::to_string(i));
    ++graphs;
  }
  long triangulations = 0;
  for (int n = 3; n <= 12; ++n)
    enumerate_labeled(n, [&](const Triangulation& t) {
      const SimpleGraph g = to_graph(t);
      if (p4_via_formula(g) != count_paths(g, 4)) o.fail(t.to_text());
      ++triangulations;
    });
  if (o.pass)
    o.detail = std::to_string(graphs) + " random graphs and " + std::to_string(triangulations) + " triangulations agree";
  return o;
}

Outcome cardinalities() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    std::uint64_t c = 0;
    enumerate_labeled(n, [&](const Triangulation&) { ++c; });
    if (c != oracle::catalan(n - 2)) o.fail("n=" + std::to_string(n) + " labeled " + std::to_string(c));
  }
  std::vector<Count> classes;
  for (int n = 3; n <= 10; ++n) {
    const auto got = enumerate_classes(n).size();
    classes.push_back(got);
    if (got != oracle::burnside_classes(n)) o.fail("n=" + std::to_string(n) + " classes " + std::to_string(got));
  }
  if (classes[4] != 4) o.fail("n=7 does not give 4 classes");
  if (o.pass) o.detail = "Catalan(n-2) for n=3..12; classes n=3..10: " + join(classes);
  return o;
}

Outcome structure() {
  Outcome o;
  long checked = 0;
  for (int n = 4; n <= 13; ++n)
    enumerate_labeled(n, [&](const Triangulation& t) {
      ++checked;
      const SimpleGraph g = to_graph(t);
      if (g.edge_count() != static_cast<std::size_t>(2 * n - 3)) o.fail("edges " + t.to_text());
      if (degree_two_vertices(t).size() < 2) o.fail("ears " + t.to_text());
      const DualTree d = dual_tree(t);
      if (d.node_count() != n - 2 || d.max_degree() > 3 || !d.is_tree()) o.fail("dual " + t.to_text());
      const ChordSides s = chord_sides(t, nice_chord(t));
      if (3 * (std::min(s.n1(), s.n2()) + 2) < n) o.fail("nice chord " + t.to_text());
    });
  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = std::uniform_int_distribution<int>(2, 200)(rng);
    std::vector<int> degree(m, 0);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < m; ++v) {
      std::vector<int> open;
      for (int u = 0; u < v; ++u)
        if (degree[u] < 3) open.push_back(u);
      const int p = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      ++degree[p];
      ++degree[v];
      edges.emplace_back(p, v);
    }
    const auto cut = tree_split_edge(m, edges);
    // Size of cut.first's side, by flood fill without the cut edge.
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : edges)
      if (std::minmax(a, b) != std::minmax(cut.first, cut.second)) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
    std::vector<bool> seen(m, false);
    std::vector<int> stack = {cut.first};
    seen[cut.first] = true;
    int side = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++side;
      for (int w : adj[v])
        if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
    if (3 * std::min(side, m - side) < m - 1) o.fail("split edge on tree " + std::to_string(trial));
  }
  if (o.pass) o.detail = std::to_string(checked) + " triangulations n=4..13; 1000 random trees";
  return o;
}

Outcome per_vertex() {
  Outcome o;
  std::string worst;
  for (int n = 9; n <= 12; ++n) {
    const CanonicalCode fan_code = canonical_code(fan(n));
    const Count bound = static_cast<Count>(4 * n - 10);
    Count tightest = 0;
    for (const auto& c : enumerate_classes(n)) {
      if (c.code == fan_code) continue;
      const SimpleGraph g = to_graph(c.representative);
      Count best = ~Count{0};
      for (int label : degree_two_vertices(c.representative)) best = std::min(best, count_paths_through(g, label - 1, 4));
      if (best > bound) o.fail("n=" + std::to_string(n) + " class " + c.code.hex());
      tightest = std::max(tightest, best);
    }
    worst += (worst.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(tightest) +
             "<=" + std::to_string(bound);
  }
  if (o.pass) o.detail = "max over classes of min degree-2 count: " + worst;
  return o;
}

Outcome crossing_decomposition() {
  Outcome o;
  long chords = 0;
  long paths = 0;
  for (int n = 4; n <= 11; ++n)
    enumerate_labeled(n, [&](const Triangulation& t) {
      const SimpleGraph g = to_graph(t);
      const Count total = count_paths(g, 5);
      for (const Diagonal& chord : t.diagonals()) {
        ++chords;
        const ChordSides s = chord_sides(t, chord);
        const ChordPartition part(s);
        Count crossing = 0;
        Count classified = 0;
        for_each_path(g, 5, [&](const PathCopy& p) {
          if (!part.crosses(p)) return;
          ++crossing;
          const int x = chord.a - 1, y = chord.b - 1;
          const bool terminal_chord = (std::minmax(p[0], p[1]) == std::minmax(x, y)) ||
                                      (std::minmax(p[3], p[4]) == std::minmax(x, y));
          if (terminal_chord) o.fail("terminal chord in " + t.to_text());
          try {
            if (classify_crossing(p, part)) ++classified;
          } catch (const std::exception& e) {
            o.fail(std::string("classifier: ") + e.what());
          }
        });
        paths += static_cast<long>(crossing);
        if (classified != crossing) o.fail("unclassified path in " + t.to_text());
        const Decomposition d = decompose_count(t, chord, 5);
        if (d.total != total || d.side1 + d.side2 + d.crossing != total || d.crossing != crossing)
          o.fail("identity " + t.to_text());
      }
    });
  if (o.pass)
    o.detail = std::to_string(chords) + " (triangulation, chord) pairs n<=11; " + std::to_string(paths) +
               " crossing P5 classified";
  return o;
}

double p5_count(int n) { return static_cast<double>(count_paths(to_graph(p5_extremal(n)), 5)); }

Outcome p5_asymptotics() {
  Outcome o;
  std::ostringstream detail;
  double previous_error = 1e9;
  for (int n : {102, 202, 402}) {
    const double ratio = p5_count(n) / (4.25 * n * n);
    const double error = std::abs(1.0 - ratio);
    detail << "ratio(" << n << ")=" << ratio << " ";
    if (error >= previous_error) o.fail("ratio not improving at n=" + std::to_string(n));
    previous_error = error;
    if (n == 402 && error > 0.1) o.fail("ratio at 402 outside 0.1");
  }
  for (int n : {402, 802, 1202}) {
    const int s = 4;
    const double second = (p5_count(n + 2 * s) - 2 * p5_count(n + s) + p5_count(n)) / (2.0 * s * s);
    detail << "coef(" << n << ")=" << second << " ";
    if (std::abs(second - 4.25) > 0.02 * 4.25) o.fail("second difference at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome crossing_coefficient() {
  Outcome o;
  std::ostringstream detail;
  std::mt19937 rng(38);
  auto check = [&](int n, const EarPlacement& ears, const std::string& label) {
    const Triangulation t = eared_fan(n, ears);
    const CrossingReport r = count_crossing(t, nice_chord(t));
    const double ratio = static_cast<double>(r.total) / (8.5 * r.n1 * r.n2);
    detail << label << "(" << n << ")=" << ratio << " ";
    if (std::abs(1.0 - ratio) > 0.1) o.fail(label + " at n=" + std::to_string(n));
  };
  for (int n : {400, 800}) {
    check(n, EarPlacement::spread(n), "spread");
    std::vector<int> gaps(3 * n / 4);
    for (std::size_t i = 0; i < gaps.size(); ++i) gaps[i] = static_cast<int>(i);
    std::shuffle(gaps.begin(), gaps.end(), rng);
    EarPlacement random;
    random.positions.insert(gaps.begin(), gaps.begin() + n / 4);
    check(n, random, "random");
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome p6_support() {
  Outcome o;
  std::ostringstream detail;
  const double ratio = static_cast<double>(count_paths(to_graph(p6_extremal(1000)), 6)) / (11.0 * 1000 * 1000);
  detail << "ratio(1000)=" << ratio << "; ";
  if (std::abs(1.0 - ratio) > 0.1) o.fail("ratio at 1000");
  for (int n = 6; n <= 10; n += 2) {
    const Count exhaustive = f_op(n, 6).value;
    const Count construction = count_paths(to_graph(p6_extremal(n)), 6);
    detail << "f(" << n << ")=" << exhaustive << ">=" << construction << " ";
    if (exhaustive < construction) o.fail("n=" + std::to_string(n));
  }
  if (o.pass) o.detail = detail.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "7-vertex census", 1.0, census},
      {2, "P4 extremal value and uniqueness", 120.0, p4_extremal},
      {3, "P3 extremal value and uniqueness", 0.0, p3_extremal},
      {4, "P4 degree formula equals path count", 0.0, p4_formula},
      {5, "enumeration cardinalities", 0.0, cardinalities},
      {6, "structural properties", 60.0, structure},
      {7, "per-vertex P4 bound", 0.0, per_vertex},
      {8, "crossing decomposition", 0.0, crossing_decomposition},
      {9, "P5 asymptotics", 60.0, p5_asymptotics},
      {10, "crossing coefficient 17/2", 0.0, crossing_coefficient},
      {11, "P6 construction support", 300.0, p6_support},
  };
  int failed = 0, documented = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) o.fail("took " + std::to_string(seconds) + " s");
    const auto known = kUnattainable.find(c.id);
    std::printf("%s criterion %2d: %s (%.2f s) %s", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                o.detail.c_str());
    if (!o.pass && known != kUnattainable.end()) {
      std::printf(" [unattainable as stated: %s]", known->second.c_str());
      ++documented;
    } else if (!o.pass) {
      ++failed;
    }
    std::printf("\n");
  }
  std::printf("%zu criteria: %zu pass, %d fail (%d documented as unattainable)\n", criteria.size(),
              criteria.size() - failed - documented, failed + documented, documented);
  return failed == 0 ? 0 : 1;
}
