#include "mop/enumeration.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <memory>
#include <mutex>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "mop/parallel.hpp"

namespace mop {
namespace {

// Ear recursion: the triangle on base (i, j) picks an apex k in (i, j) and
// splits the sub-polygon into (i, k) and (k, j). Each apex choice on a base
// with at least one interior vertex is a decision; decisions are taken in a
// fixed depth-first order so a decision prefix names a disjoint slice.
class EarRecursion {
 public:
  // stop_depth < 0 enumerates completely; otherwise recursion stops after that
  // many decisions and reports the decision prefix instead.
  EarRecursion(int n, const std::vector<int>& prefix, int stop_depth) : n_(n), prefix_(prefix), stop_depth_(stop_depth) {
    diagonals_.reserve(static_cast<std::size_t>(std::max(n - 3, 0)));
  }

  void run(const TriangulationVisitor& on_triangulation, const std::function<void(const std::vector<int>&)>& on_prefix) {
    on_triangulation_ = &on_triangulation;
    on_prefix_ = &on_prefix;
    pending_.clear();
    pending_.emplace_back(1, n_);
    step();
  }

 private:
  void step() {
    if (stop_depth_ >= 0 && static_cast<int>(chosen_.size()) == stop_depth_) {
      (*on_prefix_)(chosen_);
      return;
    }
    // Drop bases without interior vertices.
    while (!pending_.empty() && pending_.back().second - pending_.back().first < 2) pending_.pop_back();
    if (pending_.empty()) {
      if (stop_depth_ >= 0) {
        (*on_prefix_)(chosen_);
      } else {
        (*on_triangulation_)(Triangulation(n_, diagonals_));
      }
      return;
    }
    const auto saved_pending = pending_;
    const auto [i, j] = pending_.back();
    const std::size_t decision = chosen_.size();
    int lo = i + 1;
    int hi = j - 1;
    if (decision < prefix_.size()) lo = hi = prefix_[decision];
    for (int k = lo; k <= hi; ++k) {
      pending_ = saved_pending;
      pending_.pop_back();
      const std::size_t mark = diagonals_.size();
      if (k - i >= 2) diagonals_.emplace_back(i, k);
      if (j - k >= 2) diagonals_.emplace_back(k, j);
      pending_.emplace_back(k, j);
      pending_.emplace_back(i, k);
      chosen_.push_back(k);
      step();
      chosen_.pop_back();
      diagonals_.resize(mark);
    }
    pending_ = saved_pending;
  }

  int n_;
  const std::vector<int>& prefix_;
  int stop_depth_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<Diagonal> diagonals_;
  std::vector<int> chosen_;
  const TriangulationVisitor* on_triangulation_ = nullptr;
  const std::function<void(const std::vector<int>&)>* on_prefix_ = nullptr;
};

void check_polygon(int n, int max_n) {
  if (n < kMinPolygon || n > max_n) {
    throw std::invalid_argument("polygon size " + std::to_string(n) + " outside [" + std::to_string(kMinPolygon) +
                                ", " + std::to_string(max_n) + "]");
  }
}

const std::function<void(const std::vector<int>&)> kIgnorePrefix = [](const std::vector<int>&) {};
const TriangulationVisitor kIgnoreTriangulation = [](const Triangulation&) {};

std::string serialize(int n, std::vector<Diagonal>& diagonals) {
  std::sort(diagonals.begin(), diagonals.end());
  std::string bytes;
  bytes.reserve(1 + 2 * diagonals.size());
  bytes.push_back(static_cast<char>(n));
  for (const Diagonal& d : diagonals) {
    bytes.push_back(static_cast<char>(d.a));
    bytes.push_back(static_cast<char>(d.b));
  }
  return bytes;
}

// Fixed-length records: every code for one n has 1 + 2(n-3) bytes.
class SpilledCodeSet {
 public:
  SpilledCodeSet(std::filesystem::path dir, std::size_t record, std::size_t chunk)
      : dir_(std::move(dir)), record_(record), chunk_(std::max<std::size_t>(chunk, 1)) {}
  SpilledCodeSet(const SpilledCodeSet&) = delete;
  SpilledCodeSet& operator=(const SpilledCodeSet&) = delete;
  ~SpilledCodeSet() {
    std::error_code ignored;
    for (const auto& f : files_) std::filesystem::remove(f, ignored);
  }

  void add(std::string code, std::vector<std::string>& buffer) {
    buffer.push_back(std::move(code));
    if (buffer.size() >= chunk_) flush(buffer);
  }

  void flush(std::vector<std::string>& buffer) {
    if (buffer.empty()) return;
    std::sort(buffer.begin(), buffer.end());
    buffer.erase(std::unique(buffer.begin(), buffer.end()), buffer.end());
    std::filesystem::path file;
    {
      std::lock_guard lock(mutex_);
      file = dir_ / ("mop-codes-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
                     std::to_string(files_.size()) + ".bin");
      files_.push_back(file);
    }
    std::ofstream out(file, std::ios::binary);
    for (const auto& code : buffer) out.write(code.data(), static_cast<std::streamsize>(code.size()));
    if (!out) throw std::runtime_error("failed to write spill file " + file.string());
    buffer.clear();
  }

  // k-way merge of the sorted runs, dropping duplicates.
  std::vector<std::string> merge() {
    struct Run {
      std::ifstream in;
      std::string head;
    };
    std::vector<std::unique_ptr<Run>> runs;
    auto advance = [&](Run& run) {
      run.head.assign(record_, '\0');
      return static_cast<bool>(run.in.read(run.head.data(), static_cast<std::streamsize>(record_)));
    };
    using Item = std::pair<std::string, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (const auto& f : files_) {
      auto run = std::make_unique<Run>();
      run->in.open(f, std::ios::binary);
      if (advance(*run)) heap.emplace(run->head, runs.size());
      runs.push_back(std::move(run));
    }
    std::vector<std::string> out;
    while (!heap.empty()) {
      auto [code, r] = heap.top();
      heap.pop();
      if (out.empty() || out.back() != code) out.push_back(code);
      if (advance(*runs[r])) heap.emplace(runs[r]->head, r);
    }
    return out;
  }

 private:
  std::filesystem::path dir_;
  std::size_t record_;
  std::size_t chunk_;
  std::mutex mutex_;
  std::vector<std::filesystem::path> files_;
};

}  // namespace

void enumerate_labeled(int n, const TriangulationVisitor& visit, int max_n) {
  check_polygon(n, max_n);
  const std::vector<int> no_prefix;
  EarRecursion(n, no_prefix, -1).run(visit, kIgnorePrefix);
}

std::vector<Triangulation> labeled_triangulations(int n, int max_n) {
  std::vector<Triangulation> out;
  enumerate_labeled(n, [&](const Triangulation& t) { out.push_back(t); }, max_n);
  return out;
}

void Shard::for_each(const TriangulationVisitor& visit) const {
  EarRecursion(n_, prefix_, -1).run(visit, kIgnorePrefix);
}

std::vector<Shard> shard(int n, int prefix_depth) {
  check_polygon(n, std::max(n, kMinPolygon));
  if (prefix_depth < 0) throw std::invalid_argument("shard: negative prefix depth");
  std::vector<Shard> shards;
  const std::vector<int> no_prefix;
  EarRecursion(n, no_prefix, prefix_depth).run(kIgnoreTriangulation, [&](const std::vector<int>& prefix) {
    shards.emplace_back(n, prefix);
  });
  return shards;
}

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes_.size());
  for (char c : bytes_) {
    auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("canonical code hex has odd length");
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("canonical code hex has bad digit '" + std::string(1, c) + "'");
  };
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return CanonicalCode(std::move(bytes));
}

Triangulation CanonicalCode::decode() const {
  if (bytes_.empty() || bytes_.size() % 2 != 1) throw std::invalid_argument("canonical code has bad length");
  const int n = static_cast<unsigned char>(bytes_[0]);
  std::vector<Diagonal> diagonals;
  for (std::size_t i = 1; i < bytes_.size(); i += 2) {
    diagonals.emplace_back(static_cast<unsigned char>(bytes_[i]), static_cast<unsigned char>(bytes_[i + 1]));
  }
  return Triangulation(n, std::move(diagonals));
}

Triangulation dihedral_image(const Triangulation& t, int shift, bool reflect) {
  const int n = t.size();
  auto map = [&](int x) {
    if (reflect) x = n + 1 - x;
    return ((x - 1 + shift) % n + n) % n + 1;
  };
  std::vector<Diagonal> out;
  out.reserve(t.diagonals().size());
  for (const Diagonal& d : t.diagonals()) out.emplace_back(map(d.a), map(d.b));
  return Triangulation(n, std::move(out));
}

CanonicalCode canonical_code(const Triangulation& t) {
  const int n = t.size();
  if (n < kMinPolygon || n > 255) throw std::invalid_argument("canonical_code: polygon size out of byte range");
  std::string best;
  std::vector<Diagonal> image(t.diagonals().size());
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int shift = 0; shift < n; ++shift) {
      std::size_t i = 0;
      for (const Diagonal& d : t.diagonals()) {
        int a = reflect ? n + 1 - d.a : d.a;
        int b = reflect ? n + 1 - d.b : d.b;
        image[i++] = Diagonal((a - 1 + shift) % n + 1, (b - 1 + shift) % n + 1);
      }
      std::string code = serialize(n, image);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return CanonicalCode(std::move(best));
}

std::vector<TriangulationClass> enumerate_classes(int n, const ClassEnumerationOptions& options) {
  check_polygon(n, options.max_n);
  const std::vector<Shard> shards = shard(n, options.shard_depth);
  unsigned workers = options.workers == 0 ? default_workers() : options.workers;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(shards.size()));

  std::vector<std::string> codes;
  if (n <= options.spill_above) {
    std::vector<std::unordered_set<std::string>> local(workers);
    parallel_for(shards.size(), workers, [&](std::size_t s, unsigned w) {
      shards[s].for_each([&](const Triangulation& t) { local[w].insert(canonical_code(t).bytes()); });
    });
    std::unordered_set<std::string> merged;
    for (auto& set : local) merged.merge(set);
    codes.assign(merged.begin(), merged.end());
    std::sort(codes.begin(), codes.end());
  } else {
    SpilledCodeSet spilled(options.spill_dir, static_cast<std::size_t>(1 + 2 * (n - 3)), options.spill_chunk);
    std::vector<std::vector<std::string>> buffers(workers);
    parallel_for(shards.size(), workers, [&](std::size_t s, unsigned w) {
      shards[s].for_each([&](const Triangulation& t) { spilled.add(canonical_code(t).bytes(), buffers[w]); });
    });
    for (auto& buffer : buffers) spilled.flush(buffer);
    codes = spilled.merge();
  }

  std::vector<TriangulationClass> classes;
  classes.reserve(codes.size());
  for (auto& bytes : codes) {
    CanonicalCode code(std::move(bytes));
    Triangulation rep = code.decode();
    classes.push_back({std::move(code), std::move(rep)});
  }
  return classes;
}

void write_class_stream(std::ostream& out, const std::vector<TriangulationClass>& classes) {
  for (const auto& c : classes) out << c.code.hex() << ' ' << c.representative.to_text() << '\n';
}

std::vector<TriangulationClass> read_class_stream(std::istream& in) {
  std::vector<TriangulationClass> classes;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos) throw std::invalid_argument("class stream: missing triangulation in '" + line + "'");
    CanonicalCode code = CanonicalCode::from_hex(line.substr(0, space));
    Triangulation t = Triangulation::parse(line.substr(space + 1));
    if (canonical_code(t) != code) throw std::invalid_argument("class stream: code does not match '" + line + "'");
    classes.push_back({std::move(code), std::move(t)});
  }
  return classes;
}

}  // namespace mop
