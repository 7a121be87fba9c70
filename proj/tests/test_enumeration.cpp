#include <algorithm>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mop/constructions.hpp"
#include "mop/enumeration.hpp"
#include "oracles.hpp"

using namespace mop;

namespace {

std::uint64_t count_labeled(int n) {
  std::uint64_t c = 0;
  enumerate_labeled(n, [&](const Triangulation&) { ++c; });
  return c;
}

oracle::Matrix as_matrix(const Triangulation& t) {
  const SimpleGraph g = to_graph(t);
  return oracle::matrix(g.vertex_count(), g.edges());
}

}  // namespace

TEST_CASE("labeled counts follow the Catalan numbers") {
  CHECK(count_labeled(3) == 1);
  CHECK(count_labeled(4) == 2);
  CHECK(count_labeled(7) == 42);
  for (int n = 3; n <= 12; ++n) CHECK(count_labeled(n) == oracle::catalan(n - 2));
}

TEST_CASE("labeled stream matches an independent generator") {
  for (int n = 3; n <= 9; ++n) {
    std::set<oracle::DiagonalSet> expected;
    for (const auto& d : oracle::triangulations(n)) expected.insert(d);
    std::set<oracle::DiagonalSet> produced;
    enumerate_labeled(n, [&](const Triangulation& t) {
      CHECK_FALSE(validate_triangulation(t));
      oracle::DiagonalSet d;
      for (const Diagonal& e : t.diagonals()) d.emplace_back(e.a, e.b);
      produced.insert(d);
    });
    CHECK(produced == expected);
    CHECK(expected.size() == oracle::catalan(n - 2));
  }
}

TEST_CASE("enumerate_labeled range") {
  CHECK_THROWS_AS(enumerate_labeled(2, [](const Triangulation&) {}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_labeled(21, [](const Triangulation&) {}), std::invalid_argument);
  CHECK_THROWS_AS(labeled_triangulations(9, 8), std::invalid_argument);
  CHECK(labeled_triangulations(3).front() == Triangulation(3, {}));
}

TEST_CASE("shards partition the stream") {
  SUBCASE("depth 1 at n = 10") {
    std::uint64_t total = 0;
    for (const Shard& s : shard(10, 1)) s.for_each([&](const Triangulation&) { ++total; });
    CHECK(total == 1430);
  }
  SUBCASE("n = 4") {
    const auto shards = shard(4, 1);
    CHECK(shards.size() == 2);
    std::uint64_t total = 0;
    for (const Shard& s : shards) s.for_each([&](const Triangulation&) { ++total; });
    CHECK(total == 2);
  }
  SUBCASE("depth 0") {
    const auto shards = shard(8, 0);
    REQUIRE(shards.size() == 1);
    std::vector<Triangulation> a;
    shards[0].for_each([&](const Triangulation& t) { a.push_back(t); });
    CHECK(a == labeled_triangulations(8));
  }
  SUBCASE("disjoint and complete at several depths") {
    for (int depth = 1; depth <= 4; ++depth) {
      std::vector<std::string> seen;
      for (const Shard& s : shard(9, depth)) s.for_each([&](const Triangulation& t) { seen.push_back(t.to_text()); });
      std::vector<std::string> sorted = seen;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      CHECK(seen.size() == 429);
    }
  }
  CHECK_THROWS_AS(shard(6, -1), std::invalid_argument);
}

TEST_CASE("canonical codes") {
  CHECK(canonical_code(Triangulation(5, {{1, 3}, {1, 4}})) == canonical_code(Triangulation(5, {{2, 4}, {2, 5}})));
  CHECK(canonical_code(fan(6)) != canonical_code(Triangulation(6, {{1, 3}, {3, 5}, {1, 5}})));
  for (int n = 4; n <= 9; ++n)
    enumerate_labeled(n, [&](const Triangulation& t) {
      const CanonicalCode c = canonical_code(t);
      CHECK(canonical_code(dihedral_image(t, 0, true)) == c);
      for (int shift = 0; shift < n; ++shift) CHECK(canonical_code(dihedral_image(t, shift, shift % 2 == 1)) == c);
      CHECK(canonical_code(c.decode()) == c);
      CHECK(CanonicalCode::from_hex(c.hex()) == c);
    });
}

TEST_CASE("class counts match the Burnside oracle") {
  const std::vector<std::uint64_t> known = {1, 1, 1, 3, 4, 12, 27, 82};
  for (int n = 3; n <= 10; ++n) {
    const auto classes = enumerate_classes(n);
    const auto expected = oracle::burnside_classes(n);
    CHECK_MESSAGE(classes.size() == expected, "n = " << n);
    CHECK(expected == known[n - 3]);
  }
  CHECK(enumerate_classes(7).size() == 4);
}

TEST_CASE("class representatives are pairwise non-isomorphic") {
  for (int n = 4; n <= 9; ++n) {
    const auto classes = enumerate_classes(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      CHECK_FALSE(validate_triangulation(classes[i].representative));
      CHECK(canonical_code(classes[i].representative) == classes[i].code);
      if (i > 0) CHECK(classes[i - 1].code < classes[i].code);
      for (std::size_t j = 0; j < i; ++j)
        CHECK_FALSE(oracle::isomorphic(as_matrix(classes[i].representative), as_matrix(classes[j].representative)));
    }
  }
}

TEST_CASE("class order does not depend on workers or shard depth") {
  const auto reference = enumerate_classes(11);
  for (unsigned workers : {1u, 2u, 4u})
    for (int depth : {0, 1, 3}) {
      ClassEnumerationOptions options;
      options.workers = workers;
      options.shard_depth = depth;
      const auto got = enumerate_classes(11, options);
      REQUIRE(got.size() == reference.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].code == reference[i].code);
    }
}

TEST_CASE("spilled deduplication agrees with the in-memory set") {
  const auto dir = std::filesystem::temp_directory_path() / "mop_spill_test";
  std::filesystem::create_directories(dir);
  for (int n : {9, 11, 12}) {
    ClassEnumerationOptions options;
    options.spill_above = 3;
    options.spill_chunk = 97;
    options.spill_dir = dir;
    options.workers = 2;
    const auto spilled = enumerate_classes(n, options);
    const auto memory = enumerate_classes(n);
    REQUIRE(spilled.size() == memory.size());
    for (std::size_t i = 0; i < spilled.size(); ++i) CHECK(spilled[i].code == memory[i].code);
  }
  CHECK(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("class stream round trip") {
  const auto classes = enumerate_classes(8);
  std::stringstream buffer;
  write_class_stream(buffer, classes);
  const auto back = read_class_stream(buffer);
  REQUIRE(back.size() == classes.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].code == classes[i].code);
    CHECK(back[i].representative == classes[i].representative);
  }
  std::stringstream bad("0501030104 5; 1-3, 2-5\n");
  CHECK_THROWS(read_class_stream(bad));
}
