#ifndef MOP_EXPERIMENTS_HPP_
#define MOP_EXPERIMENTS_HPP_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mop/constructions.hpp"
#include "mop/enumeration.hpp"
#include "mop/graph.hpp"

namespace mop {

// One checked fact. `pass` is exactly the suite predicate applied to
// `observed`; `expected` states that predicate in words.
struct ExperimentRecord {
  std::string suite;
  std::string check;
  int n = 0;
  int k = 0;
  std::string family;
  std::string observed;
  std::string expected;
  std::vector<std::string> witnesses;  // canonical codes, hex
  bool pass = false;
  double millis = 0.0;
  std::string note;
};

struct ReportOptions {
  // Wall time is the only nondeterministic field; drop it for byte-identical
  // reports.
  bool include_timing = true;
};

std::string to_json_line(const ExperimentRecord& record, const ReportOptions& options = {});
// suite,n,k,observed,expected,pass,witnesses,millis,check
std::string csv_header();
std::string to_csv_row(const ExperimentRecord& record, const ReportOptions& options = {});
void write_json_lines(std::ostream& out, std::span<const ExperimentRecord> records, const ReportOptions& options = {});
void write_csv(std::ostream& out, std::span<const ExperimentRecord> records, const ReportOptions& options = {});
bool all_pass(std::span<const ExperimentRecord> records);

inline constexpr int kDefaultExhaustiveCap = 13;

struct ExhaustiveOptions {
  int max_n = kDefaultExhaustiveCap;
  unsigned workers = 0;
};

struct ExtremalResult {
  Count value = 0;
  std::vector<CanonicalCode> witnesses;  // ascending
};

// Maximum of N(P_k, .) over the given classes with every argmax.
ExtremalResult maximize_paths(std::span<const TriangulationClass> classes, int k, unsigned workers = 0);

// f_OP(n, P_k) by exhaustive search over maximal outerplanar graphs.
// Requires 3 <= n <= options.max_n and 3 <= k <= 6.
ExtremalResult f_op(int n, int k, const ExhaustiveOptions& options = {});

// Value and uniqueness of the P4 extremum; census at n = 7. n_lo..n_hi within [7, 13].
std::vector<ExperimentRecord> verify_p4_suite(int n_lo, int n_hi, const ExhaustiveOptions& options = {});

// Every non-fan class has a degree-2 vertex on at most 4n-10 P4 copies.
// n_lo..n_hi within [9, 12].
std::vector<ExperimentRecord> per_vertex_bound_check(int n_lo, int n_hi, const ExhaustiveOptions& options = {});

// Value of the P3 extremum, fan among witnesses, uniqueness from n = 6.
// n_lo..n_hi within [3, 13].
std::vector<ExperimentRecord> verify_p3_suite(int n_lo, int n_hi, const ExhaustiveOptions& options = {});

struct CrossingSuiteOptions {
  int max_n = 11;
  // Sizes for the eared-fan crossing-coefficient check (multiples of 4).
  std::vector<int> coefficient_sizes = {400};
  double coefficient_band = 0.1;
};

// Decomposition identity, exhaustive classification, and the 17/2 n1 n2
// crossing coefficient on eared fans split by nice_chord.
std::vector<ExperimentRecord> verify_crossing_suite(const CrossingSuiteOptions& options = {});

// Edge counts, ears, dual trees, nice chords for n = 4..max_n; split edges of
// random trees.
std::vector<ExperimentRecord> verify_structure_suite(int max_n = 13, int random_trees = 1000, int max_tree_nodes = 200,
                                                     unsigned seed = 2024);

struct ScanOptions {
  int step = 4;
  double ratio_band = 0.1;
  double coefficient_tolerance = 0.02;
  int max_n = 5000;
};

// Quadratic target and its leading coefficient for a (family, k) pair.
struct ScanTarget {
  double coefficient = 0.0;
  double (*value)(int n) = nullptr;
  std::string description;
};
// Throws std::invalid_argument for unsupported pairs.
ScanTarget scan_target(Family family, int k);

// Exact N(P_k, construction) along n_list (ascending) with ratio to target,
// second-difference estimate of the quadratic coefficient at each n, and a
// closing ratio-band record.
std::vector<ExperimentRecord> asymptotic_scan(Family family, int k, std::span<const int> n_list,
                                              const ScanOptions& options = {});

// Exhaustive f_OP(n, P6) for n_lo..n_hi (<= 11) against the p6 construction,
// plus construction counts at `construction_sizes`.
std::vector<ExperimentRecord> p6_lower_bound_report(int n_lo, int n_hi, std::span<const int> construction_sizes = {},
                                                    const ExhaustiveOptions& options = {});

}  // namespace mop

#endif  // MOP_EXPERIMENTS_HPP_
