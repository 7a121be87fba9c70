#include "mop/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mop/constructions.hpp"
#include "mop/crossing.hpp"
#include "mop/enumeration.hpp"
#include "mop/experiments.hpp"
#include "mop/graph.hpp"
#include "mop/outerplanar.hpp"

namespace mop {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Graph files use the graph text format; a file containing ';' is read as a
// triangulation instead.
struct LoadedInput {
  SimpleGraph graph;
  std::optional<Triangulation> triangulation;
};

LoadedInput load_input(const std::string& path) {
  const std::string text = slurp(path);
  LoadedInput input;
  if (text.find(';') != std::string::npos) {
    std::string line = text.substr(0, text.find('\n'));
    Triangulation t = Triangulation::parse(line);
    if (auto violation = validate_triangulation(t)) throw std::runtime_error("invalid triangulation: " + *violation);
    input.graph = to_graph(t);
    input.triangulation = std::move(t);
  } else {
    input.graph = parse_graph(text);
  }
  return input;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(value);
  }
  return out;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int emit_records(const std::vector<ExperimentRecord>& records, const std::string& json_path, const std::string& csv_path,
                 bool timing, std::ostream& out) {
  const ReportOptions options{timing};
  {
    Output json(json_path, out);
    write_json_lines(json.stream(), records, options);
  }
  if (!csv_path.empty()) {
    Output csv(csv_path, out);
    write_csv(csv.stream(), records, options);
  }
  return all_pass(records) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal outerplanar graph workbench: enumeration, path counts, constructions, verification"};
  app.name("mopbench");
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate labeled triangulations or isomorphism classes");
  int enum_n = 0;
  bool enum_classes = false;
  std::string enum_out;
  int enum_max = kDefaultMaxPolygon;
  enumerate->add_option("--n", enum_n, "Polygon size")->required();
  enumerate->add_flag("--classes", enum_classes, "One representative per class, with canonical codes");
  enumerate->add_option("--out", enum_out, "Output file (default stdout)");
  enumerate->add_option("--max-n", enum_max, "Size cap");

  // count
  auto* count = app.add_subcommand("count", "Count P_k copies in a graph");
  std::string count_graph;
  int count_k = 0;
  std::optional<int> count_through;
  bool count_formula = false;
  count->add_option("--graph", count_graph, "Graph file (graph or triangulation text)")->required();
  count->add_option("--k", count_k, "Path order (vertices)")->required();
  count->add_option("--through", count_through, "Only copies through this vertex (0-based)");
  count->add_flag("--formula", count_formula, "Also evaluate the degree-product P4 formula");

  // extremal
  auto* extremal = app.add_subcommand("extremal", "Exhaustive f_OP(n, P_k)");
  int ext_n = 0;
  int ext_k = 0;
  ExhaustiveOptions ext_options;
  extremal->add_option("--n", ext_n, "Vertex count")->required();
  extremal->add_option("--k", ext_k, "Path order")->required();
  extremal->add_option("--max-n", ext_options.max_n, "Exhaustive cap");
  extremal->add_option("--workers", ext_options.workers, "Worker threads (0 = all cores)");

  // construct
  auto* build = app.add_subcommand("construct", "Build a named construction");
  std::string family_text;
  int build_n = 0;
  std::string build_ears;
  std::string build_out;
  bool build_graph = false;
  build->add_option("family", family_text, "fan | p5 | eared-fan | p6")->required();
  build->add_option("--n", build_n, "Vertex count")->required();
  build->add_option("--ears", build_ears, "Comma-separated gap indices for eared-fan");
  build->add_option("--out", build_out, "Output file (default stdout)");
  build->add_flag("--graph", build_graph, "Write the graph text format instead of triangulation text");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Split P_k counts across a chord");
  std::string dec_graph;
  std::string dec_chord;
  int dec_k = 5;
  decompose->add_option("--graph", dec_graph, "Graph or triangulation file")->required();
  decompose->add_option("--chord", dec_chord, "Chord endpoints A,B (labels for triangulation input, 0-based vertices for graph input)")
      ->required();
  decompose->add_option("--k", dec_k, "Path order");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::string verify_json;
  std::string verify_csv;
  bool verify_no_timing = false;
  std::optional<std::string> sizes;
  verify->add_option("--suite", suite, "p3 | p4 | per-vertex | crossing | structure | p6")
      ->required()
      ->check(CLI::IsMember({"p3", "p4", "per-vertex", "crossing", "structure", "p6"}));
  verify->add_option("--n-min", n_min, "Smallest n");
  verify->add_option("--n-max", n_max, "Largest n");
  verify->add_option("--sizes", sizes, "crossing: eared-fan sizes (default 400); p6: construction sizes");
  verify->add_option("--json", verify_json, "JSON-lines report file (default stdout)");
  verify->add_option("--csv", verify_csv, "CSV report file");
  verify->add_flag("--no-timing", verify_no_timing, "Omit wall time for byte-identical reports");

  // scan
  auto* scan = app.add_subcommand("scan", "Exact counts on a construction family along n");
  std::string scan_family;
  int scan_k = 0;
  std::string scan_list;
  std::string scan_json;
  std::string scan_csv;
  bool scan_no_timing = false;
  ScanOptions scan_options;
  scan->add_option("--family", scan_family, "fan | p5 | eared-fan | p6")->required();
  scan->add_option("--k", scan_k, "Path order")->required();
  scan->add_option("--n-list", scan_list, "Comma-separated ascending sizes")->required();
  scan->add_option("--step", scan_options.step, "Second-difference step (multiple of 4)");
  scan->add_option("--csv", scan_csv, "CSV report file");
  scan->add_option("--json", scan_json, "JSON-lines report file (default stdout)");
  scan->add_flag("--no-timing", scan_no_timing, "Omit wall time");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*enumerate) {
      Output sink(enum_out, out);
      if (enum_classes) {
        ClassEnumerationOptions options;
        options.max_n = enum_max;
        write_class_stream(sink.stream(), enumerate_classes(enum_n, options));
      } else {
        enumerate_labeled(enum_n, [&](const Triangulation& t) { sink.stream() << t.to_text() << '\n'; }, enum_max);
      }
      return 0;
    }
    if (*count) {
      const LoadedInput input = load_input(count_graph);
      if (count_through) {
        out << "paths_through: " << count_paths_through(input.graph, *count_through, count_k) << '\n';
      } else {
        out << "paths: " << count_paths(input.graph, count_k) << '\n';
      }
      if (count_formula) {
        out << "p4_formula: " << p4_via_formula(input.graph) << '\n';
        out << "triangles: " << count_triangles(input.graph) << '\n';
      }
      return 0;
    }
    if (*extremal) {
      const ExtremalResult result = f_op(ext_n, ext_k, ext_options);
      out << "value: " << result.value << '\n';
      out << "witnesses: " << result.witnesses.size() << '\n';
      for (const auto& code : result.witnesses) out << code.hex() << ' ' << code.decode().to_text() << '\n';
      return 0;
    }
    if (*build) {
      const auto family = parse_family(family_text);
      if (!family) throw std::invalid_argument("unknown family '" + family_text + "'");
      std::optional<EarPlacement> ears;
      if (!build_ears.empty()) ears = EarPlacement::parse(build_ears);
      const Triangulation t = construct(*family, build_n, ears);
      Output sink(build_out, out);
      if (build_graph) {
        write_graph(sink.stream(), to_graph(t));
      } else {
        sink.stream() << t.to_text() << '\n';
      }
      return 0;
    }
    if (*decompose) {
      const LoadedInput input = load_input(dec_graph);
      const auto ends = parse_int_list(dec_chord);
      if (ends.size() != 2) throw std::invalid_argument("--chord needs two endpoints");
      Triangulation t;
      Diagonal chord;
      if (input.triangulation) {
        t = *input.triangulation;
        chord = Diagonal(ends[0], ends[1]);
      } else {
        const Recognition rec = recognize_mop(input.graph);
        if (!rec) throw std::runtime_error("graph is not maximal outerplanar: " + rec.reason());
        t = rec.value().triangulation;
        std::vector<int> label(static_cast<std::size_t>(t.size()));
        for (int i = 0; i < t.size(); ++i) label[rec.value().outer_cycle[i]] = i + 1;
        for (int e : ends) {
          if (e < 0 || e >= t.size()) throw std::invalid_argument("chord endpoint out of range");
        }
        chord = Diagonal(label[ends[0]], label[ends[1]]);
      }
      const Decomposition d = decompose_count(t, chord, dec_k);
      nlohmann::ordered_json j;
      j["triangulation"] = t.to_text();
      j["chord"] = {chord.a, chord.b};
      j["k"] = dec_k;
      j["side1"] = d.side1;
      j["side2"] = d.side2;
      j["crossing"] = d.crossing;
      j["total"] = d.total;
      if (dec_k == 5) j["report"] = nlohmann::ordered_json::parse(count_crossing(t, chord).to_json());
      out << j.dump() << '\n';
      return d.total == d.side1 + d.side2 + d.crossing ? 0 : 1;
    }
    if (*verify) {
      std::vector<ExperimentRecord> records;
      if (suite == "p3") {
        records = verify_p3_suite(n_min.value_or(3), n_max.value_or(12));
      } else if (suite == "p4") {
        records = verify_p4_suite(n_min.value_or(7), n_max.value_or(12));
      } else if (suite == "per-vertex") {
        records = per_vertex_bound_check(n_min.value_or(9), n_max.value_or(12));
      } else if (suite == "crossing") {
        CrossingSuiteOptions options;
        options.max_n = n_max.value_or(11);
        options.coefficient_sizes = parse_int_list(sizes.value_or("400"));
        records = verify_crossing_suite(options);
      } else if (suite == "structure") {
        records = verify_structure_suite(n_max.value_or(13));
      } else {
        const auto construction_sizes = parse_int_list(sizes.value_or(""));
        records = p6_lower_bound_report(n_min.value_or(3), n_max.value_or(10), construction_sizes);
      }
      return emit_records(records, verify_json, verify_csv, !verify_no_timing, out);
    }
    if (*scan) {
      const auto family = parse_family(scan_family);
      if (!family) throw std::invalid_argument("unknown family '" + scan_family + "'");
      const auto sizes = parse_int_list(scan_list);
      const auto records = asymptotic_scan(*family, scan_k, sizes, scan_options);
      return emit_records(records, scan_json, scan_csv, !scan_no_timing, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace mop
