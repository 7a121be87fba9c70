#ifndef MOP_ENUMERATION_HPP_
#define MOP_ENUMERATION_HPP_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mop/outerplanar.hpp"

namespace mop {

inline constexpr int kMinPolygon = 3;
inline constexpr int kDefaultMaxPolygon = 20;

using TriangulationVisitor = std::function<void(const Triangulation&)>;

// Every triangulation of the labeled convex n-gon, once each, in the
// deterministic order of the ear recursion on side (1, n).
// Throws std::invalid_argument unless 3 <= n <= max_n.
void enumerate_labeled(int n, const TriangulationVisitor& visit, int max_n = kDefaultMaxPolygon);
std::vector<Triangulation> labeled_triangulations(int n, int max_n = kDefaultMaxPolygon);

// A slice of the labeled stream: the triangulations whose first apex choices
// in the ear recursion equal `prefix`.
class Shard {
 public:
  Shard(int n, std::vector<int> prefix) : n_(n), prefix_(std::move(prefix)) {}

  int polygon_size() const { return n_; }
  const std::vector<int>& prefix() const { return prefix_; }
  void for_each(const TriangulationVisitor& visit) const;

 private:
  int n_;
  std::vector<int> prefix_;
};

// Disjoint shards covering enumerate_labeled(n). Depth 0 yields one shard.
std::vector<Shard> shard(int n, int prefix_depth);

// Minimal serialization of a triangulation over the 2n rotations and
// reflections of its outer cycle: byte n followed by the sorted diagonal
// endpoints. Ordered lexicographically as bytes.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  static CanonicalCode from_hex(const std::string& hex);
  // The triangulation spelled by the code (the class's canonical labeling).
  Triangulation decode() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  std::string bytes_;
};

// Requires a valid triangulation with n <= 255.
CanonicalCode canonical_code(const Triangulation& t);

// Image of t under label x -> x + shift (mod n), after x -> n + 1 - x when
// `reflect` is set.
Triangulation dihedral_image(const Triangulation& t, int shift, bool reflect);

struct ClassEnumerationOptions {
  int max_n = kDefaultMaxPolygon;
  // Above this size codes are deduplicated by sorted runs spilled to disk.
  int spill_above = 16;
  std::size_t spill_chunk = std::size_t{1} << 20;
  std::filesystem::path spill_dir = std::filesystem::temp_directory_path();
  unsigned workers = 0;
  int shard_depth = 2;
};

struct TriangulationClass {
  CanonicalCode code;
  Triangulation representative;
};

// One representative per dihedral class, in ascending code order.
std::vector<TriangulationClass> enumerate_classes(int n, const ClassEnumerationOptions& options = {});

// Line-delimited "hex-code triangulation-text" records.
void write_class_stream(std::ostream& out, const std::vector<TriangulationClass>& classes);
std::vector<TriangulationClass> read_class_stream(std::istream& in);

}  // namespace mop

#endif  // MOP_ENUMERATION_HPP_
