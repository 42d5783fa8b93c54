#pragma once

// Command-line front end. run() is the whole program; tools/efl.cpp only
// forwards argv and the standard streams.
//
// Exit codes: 0 success / valid, 1 invalid coloring or unmet expectation,
// 2 usage, parse or library error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efl/classify.hpp"
#include "efl/coloring.hpp"
#include "efl/generators.hpp"
#include "efl/hypergraph.hpp"
#include "efl/io.hpp"
#include "efl/oracle.hpp"

namespace efl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable overriding the default oracle vertex cap.
inline constexpr const char* kCapEnv = "EFL_CHI_CAP";

inline std::string format(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace detail {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool stdin_taken = false;
};

inline std::string read_text(const std::string& path, Streams& io) {
  std::ostringstream buf;
  if (path == "-") {
    if (io.stdin_taken) throw Error(ErrorCode::PreconditionViolated, "standard input used twice");
    io.stdin_taken = true;
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::PreconditionViolated, "cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

inline void write_text(const std::string& path, const std::string& text, Streams& io) {
  if (path.empty() || path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::PreconditionViolated, "cannot write " + path);
  file << text;
}

inline std::string join_labels(const std::vector<VertexId>& ids, const ParsedInstance& inst) {
  std::string s;
  for (VertexId v : ids) s += ' ' + std::to_string(inst.labels[v]);
  return s;
}

inline void print_mapping(const ParsedInstance& inst, std::ostream& out) {
  if (!inst.remapped) return;
  for (VertexId v = 0; v < inst.labels.size(); ++v) out << "c map " << inst.labels[v] << ' ' << v << '\n';
}

/// Writes the verdict line and returns the exit code for it.
inline int report_validation(const Hypergraph& h, const Coloring& coloring, const ParsedInstance& inst,
                             std::ostream& out, std::string_view prefix) {
  if (auto v = coloring.first_uncolored()) {
    out << prefix << "invalid uncolored " << inst.labels[*v] << '\n';
    return kExitInvalid;
  }
  const auto verdict = validate_coloring(h, coloring);
  if (verdict) {
    out << prefix << "valid\n";
    return kExitOk;
  }
  const auto& c = *verdict.conflict;
  out << prefix << "invalid edge " << c.edge << " vertices " << inst.labels[c.first] << ' ' << inst.labels[c.second]
      << '\n';
  return kExitInvalid;
}

struct Options {
  std::string file;
  std::string coloring_file;
  std::optional<std::size_t> n;
  std::optional<std::string> expect;
  std::string algo = "efl";
  std::size_t base_edge = 0;
  std::optional<std::size_t> max_colors;
  std::optional<std::size_t> cap;
  std::string output;
  std::size_t gen_param = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> count;
  bool weakly_dense = false;
};

inline int cmd_classify(const Options& o, Streams& io) {
  const auto inst = parse_instance(read_text(o.file, io));
  const auto& h = inst.graph;
  const std::size_t n = o.n.value_or(h.edge_count());
  auto& out = io.out;
  print_mapping(inst, out);
  out << "vertices " << h.vertex_count() << '\n' << "edges " << h.edge_count() << '\n' << "n " << n << '\n';
  const auto lin = is_linear(h);
  out << "linear " << (lin ? "yes" : "no");
  if (!lin) out << " edges " << lin.witness->first << ' ' << lin.witness->second;
  out << '\n';
  out << "uniform " << (is_uniform(h, n) ? "yes" : "no") << '\n';
  const auto report = density_report(h, n);
  for (const auto& [k, count] : report.degree_histogram) out << "degree " << k << ' ' << count << '\n';
  out << "dense " << (report.dense ? "yes" : "no") << '\n'
      << "slightly_weakly_dense " << (report.slightly_weakly_dense ? "yes" : "no") << '\n'
      << "weakly_dense " << (report.weakly_dense ? "yes" : "no") << '\n'
      << "class " << to_string(report.density_class) << '\n';
  for (const auto& v : report.violations)
    out << "violation " << v.degree << ' ' << v.witnesses.size() << join_labels(v.witnesses, inst) << '\n';
  if (o.expect) {
    const auto expected = density_class_from_string(*o.expect);
    if (!expected) throw Error(ErrorCode::PreconditionViolated, "unknown class '" + *o.expect + "'");
    if (*expected != report.density_class) {
      out << "expectation failed " << *o.expect << '\n';
      return kExitInvalid;
    }
  }
  return kExitOk;
}

inline int cmd_color(const Options& o, Streams& io) {
  const auto inst = parse_instance(read_text(o.file, io));
  const auto& h = inst.graph;
  auto& out = io.out;
  Coloring coloring;
  std::size_t n = o.n.value_or(h.edge_count());
  if (o.algo == "efl") {
    if (o.n && *o.n != h.edge_count())
      throw Error(ErrorCode::PreconditionViolated, "efl uses n = edge count (" + std::to_string(h.edge_count()) + ")");
    coloring = efl_coloring(h).coloring;
  } else if (o.algo == "greedy") {
    coloring = greedy_high_degree(h, n);
  } else {
    coloring = partition_coloring(h, n, o.base_edge).coloring;
  }
  out << "c algo " << o.algo << '\n' << "c n " << n << '\n' << "c colors_used " << coloring.colors_used() << '\n';
  out << serialize_coloring(coloring, inst.labels);
  return report_validation(h, coloring, inst, out, "c ");
}

inline int cmd_chi(const Options& o, Streams& io) {
  const auto inst = parse_instance(read_text(o.file, io));
  const auto& h = inst.graph;
  std::size_t cap = kDefaultDeskCap;
  if (const char* env = std::getenv(kCapEnv)) cap = static_cast<std::size_t>(std::stoull(env));
  if (o.cap) cap = *o.cap;
  const auto result = chromatic_number(h, o.max_colors.value_or(std::max<std::size_t>(h.vertex_count(), 1)), cap);
  io.out << "chi " << result.chi << '\n' << "nodes " << result.nodes_explored << '\n';
  io.out << serialize_coloring(result.witness, inst.labels);
  return report_validation(h, result.witness, inst, io.out, "c ");
}

inline int cmd_check(const Options& o, Streams& io) {
  const auto inst = parse_instance(read_text(o.file, io));
  const auto coloring = parse_coloring(read_text(o.coloring_file, io), inst);
  return report_validation(inst.graph, coloring, inst, io.out, "");
}

inline int cmd_gen(const std::string& kind, const Options& o, Streams& io) {
  std::vector<std::pair<Hypergraph, std::uint64_t>> made;
  if (kind == "dualaffine") {
    made.emplace_back(dual_affine_plane(o.gen_param), 0);
  } else if (kind == "pencil") {
    made.emplace_back(pencil(o.gen_param), 0);
  } else if (o.weakly_dense) {
    auto stream = weakly_dense_stream(o.gen_param, o.seed, o.count.value_or(1));
    for (std::size_t i = 0; i < stream.instances.size(); ++i)
      made.emplace_back(std::move(stream.instances[i]), stream.seeds[i]);
  } else if (!o.count) {
    made.emplace_back(random_linear_uniform(o.gen_param, o.seed), o.seed);
  } else {
    for (std::size_t i = 0; i < *o.count; ++i) {
      const auto s = derived_seed(o.seed, i);
      made.emplace_back(random_linear_uniform(o.gen_param, s), s);
    }
  }

  if (made.size() == 1) {
    write_text(o.output, serialize(made.front().first), io);
    return kExitOk;
  }
  std::string joined;
  for (std::size_t i = 0; i < made.size(); ++i) {
    const auto text = serialize(made[i].first);
    if (o.output.empty() || o.output == "-")
      joined += "c instance " + std::to_string(i) + " seed " + std::to_string(made[i].second) + '\n' + text;
    else
      write_text(o.output + "." + std::to_string(i), text, io);
  }
  if (!joined.empty()) io.out << joined;
  return kExitOk;
}

inline int cmd_trace(const Options& o, Streams& io) {
  const auto inst = parse_instance(read_text(o.file, io));
  const auto& h = inst.graph;
  const auto [coloring, trace] = efl_coloring(h);
  auto& out = io.out;
  print_mapping(inst, out);
  out << "n " << trace.n << '\n';
  out << "v1" << join_labels(trace.v1, inst) << '\n';
  out << "v2" << join_labels(trace.v2, inst) << '\n';
  out << "v3" << join_labels(trace.v3, inst) << '\n';
  out << "phase1 palette_used " << trace.phase1_palette_used << " special "
      << (trace.phase1_special_vertex ? std::to_string(inst.labels[*trace.phase1_special_vertex]) : "none") << '\n';
  out << "c phase2 vertex degree slack colored_neighbors color\n";
  for (std::size_t i = 0; i < trace.phase2_order.size(); ++i) {
    const auto v = trace.phase2_order[i];
    out << "phase2 " << inst.labels[v] << ' ' << h.degree(v) << ' ' << format(trace.phase2_slack[i]) << ' '
        << trace.phase2_colored_neighbors[i] << ' ' << *coloring.color(v) << '\n';
  }
  out << "c phase3 edge k_E uncolored\n";
  for (EdgeId e = 0; e < trace.phase3_kE.size(); ++e)
    out << "phase3 " << e << ' ' << trace.phase3_kE[e] << ' ' << trace.phase3_uncolored[e] << '\n';
  out << serialize_coloring(coloring, inst.labels);
  return report_validation(h, coloring, inst, out, "c ");
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colorings and density checks for linear hypergraphs", "efl"};
  app.require_subcommand(1);
  detail::Options o;
  detail::Streams io{in, out, err};

  auto* classify = app.add_subcommand("classify", "Linearity, uniformity and density class");
  classify->add_option("FILE", o.file, "Instance file ('-' for stdin)")->required();
  classify->add_option("--n", o.n, "Threshold parameter (default: edge count)");
  classify->add_option("--expect", o.expect, "Exit 1 unless the class matches");

  auto* color = app.add_subcommand("color", "Color an instance and validate the result");
  color->add_option("FILE", o.file, "Instance file ('-' for stdin)")->required();
  color->add_option("--algo", o.algo, "Algorithm")->check(CLI::IsMember({"efl", "greedy", "partition"}));
  color->add_option("--n", o.n, "Parameter n (default: edge count)");
  color->add_option("--base-edge", o.base_edge, "Base edge for partition coloring");

  auto* chi = app.add_subcommand("chi", "Exact chromatic number");
  chi->add_option("FILE", o.file, "Instance file ('-' for stdin)")->required();
  chi->add_option("--max-colors", o.max_colors, "Largest palette to try (default: vertex count)");
  chi->add_option("--cap", o.cap, "Maximum vertex count accepted");

  auto* check = app.add_subcommand("check", "Validate a coloring file against an instance");
  check->add_option("FILE", o.file, "Instance file")->required();
  check->add_option("COLORINGFILE", o.coloring_file, "Coloring file")->required();

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->add_option("-o,--output", o.output, "Output file (default: stdout)");
  gen->require_subcommand(1);
  auto* dual = gen->add_subcommand("dualaffine", "Dual affine plane of prime order Q");
  dual->add_option("Q", o.gen_param)->required();
  auto* pen = gen->add_subcommand("pencil", "Pencil of N edges");
  pen->add_option("N", o.gen_param)->required();
  auto* rnd = gen->add_subcommand("random", "Random linear N-uniform instance with N edges");
  rnd->add_option("N", o.gen_param)->required();
  rnd->add_option("--seed", o.seed, "Seed")->required();
  rnd->add_option("--count", o.count, "Number of instances");
  rnd->add_flag("--weakly-dense", o.weakly_dense, "Keep only weakly dense instances");

  auto* trace = app.add_subcommand("trace", "Run the three-phase coloring and print its trace");
  trace->add_option("FILE", o.file, "Instance file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify->parsed()) return detail::cmd_classify(o, io);
    if (color->parsed()) return detail::cmd_color(o, io);
    if (chi->parsed()) return detail::cmd_chi(o, io);
    if (check->parsed()) return detail::cmd_check(o, io);
    if (trace->parsed()) return detail::cmd_trace(o, io);
    for (auto* sub : {dual, pen, rnd})
      if (sub->parsed()) return detail::cmd_gen(sub->get_name(), o, io);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"efl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace efl::cli
