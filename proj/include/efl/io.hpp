#pragma once

// Text formats.
//
// Instance file:
//   c <anything>           comment
//   p hg <vertices> <edges>
//   e <v1> <v2> ... <vk>   one line per edge
// Labels are nonnegative integers. When every label is below <vertices>
// they are used as ids directly; otherwise the distinct labels are sorted and
// renumbered 0..<vertices>-1.
//
// Coloring file:
//   c <anything>
//   s <palette_size>
//   v <label> <color>

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "efl/hypergraph.hpp"

namespace efl {

struct ParsedInstance {
  Hypergraph graph;
  /// labels[id] is the label the file used for vertex id.
  std::vector<std::uint64_t> labels;
  bool remapped = false;

  std::optional<VertexId> id_of(std::uint64_t label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return static_cast<VertexId>(it - labels.begin());
  }
};

namespace detail {

inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_uint(std::string_view token, std::size_t line_no, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(ErrorCode::SyntaxError, line_no,
                     "expected a nonnegative integer for " + std::string(what) + ", got '" + std::string(token) + "'");
  return value;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    auto tokens = tokenize(line);
    if (!tokens.empty() && tokens[0] != "c") fn(line_no, tokens);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

}  // namespace detail

inline ParsedInstance parse_instance(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<std::vector<std::uint64_t>> raw;
  std::vector<std::size_t> edge_lines;

  detail::for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& t) {
    if (t[0] == "p") {
      if (header) throw ParseError(ErrorCode::SyntaxError, line_no, "second header line");
      if (t.size() != 4 || t[1] != "hg")
        throw ParseError(ErrorCode::SyntaxError, line_no, "header must be 'p hg <vertices> <edges>'");
      header = {detail::parse_uint(t[2], line_no, "vertex count"), detail::parse_uint(t[3], line_no, "edge count")};
    } else if (t[0] == "e") {
      if (!header) throw ParseError(ErrorCode::SyntaxError, line_no, "edge line before header");
      if (t.size() == 1) throw ParseError(ErrorCode::EmptyEdge, line_no, "edge has no vertices");
      std::vector<std::uint64_t> edge;
      for (std::size_t i = 1; i < t.size(); ++i) edge.push_back(detail::parse_uint(t[i], line_no, "vertex"));
      auto sorted = edge;
      std::sort(sorted.begin(), sorted.end());
      if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw ParseError(ErrorCode::DuplicateVertexInEdge, line_no, "vertex " + std::to_string(*dup) + " repeated");
      raw.push_back(std::move(edge));
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(ErrorCode::SyntaxError, line_no, "unknown line type '" + std::string(t[0]) + "'");
    }
  });

  if (!header) throw ParseError(ErrorCode::SyntaxError, 0, "missing 'p hg' header");
  const auto [vertex_count, edge_count] = *header;
  if (raw.size() != edge_count)
    throw ParseError(ErrorCode::SyntaxError, 0,
                     "header declares " + std::to_string(edge_count) + " edges, found " + std::to_string(raw.size()));

  ParsedInstance out;
  const bool dense_labels = std::all_of(raw.begin(), raw.end(), [&](const auto& e) {
    return std::all_of(e.begin(), e.end(), [&](std::uint64_t v) { return v < vertex_count; });
  });
  if (dense_labels) {
    out.labels.resize(vertex_count);
    for (std::uint64_t v = 0; v < vertex_count; ++v) out.labels[v] = v;
  } else {
    for (const auto& e : raw) out.labels.insert(out.labels.end(), e.begin(), e.end());
    std::sort(out.labels.begin(), out.labels.end());
    out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
    if (out.labels.size() != vertex_count)
      throw ParseError(ErrorCode::SyntaxError, 0,
                       "header declares " + std::to_string(vertex_count) + " vertices, found " +
                           std::to_string(out.labels.size()) + " distinct labels");
    out.remapped = true;
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    Edge edge;
    for (auto label : e) edge.push_back(dense_labels ? static_cast<VertexId>(label) : *out.id_of(label));
    edges.push_back(std::move(edge));
  }
  out.graph = Hypergraph::build(vertex_count, std::move(edges));
  return out;
}

/// Canonical form: header, then edges in order with ascending ids.
inline std::string serialize(const Hypergraph& h) {
  std::ostringstream os;
  os << "p hg " << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& edge : h.edges()) {
    os << 'e';
    for (VertexId v : edge) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

/// Reads a coloring whose vertex labels refer to `instance`. Vertices with no
/// 'v' line stay uncolored.
inline Coloring parse_coloring(std::string_view text, const ParsedInstance& instance) {
  std::optional<Coloring> coloring;
  detail::for_each_line(text, [&](std::size_t line_no, const std::vector<std::string_view>& t) {
    if (t[0] == "s") {
      if (coloring) throw ParseError(ErrorCode::SyntaxError, line_no, "second palette line");
      if (t.size() != 2) throw ParseError(ErrorCode::SyntaxError, line_no, "palette line must be 's <size>'");
      coloring.emplace(instance.graph.vertex_count(), detail::parse_uint(t[1], line_no, "palette size"));
    } else if (t[0] == "v") {
      if (!coloring) throw ParseError(ErrorCode::SyntaxError, line_no, "vertex line before palette line");
      if (t.size() != 3) throw ParseError(ErrorCode::SyntaxError, line_no, "vertex line must be 'v <id> <color>'");
      const auto label = detail::parse_uint(t[1], line_no, "vertex");
      const auto color = detail::parse_uint(t[2], line_no, "color");
      const auto id = instance.id_of(label);
      if (!id) throw ParseError(ErrorCode::VertexOutOfRange, line_no, "unknown vertex " + std::to_string(label));
      if (coloring->is_colored(*id))
        throw ParseError(ErrorCode::SyntaxError, line_no, "vertex " + std::to_string(label) + " colored twice");
      if (color >= coloring->palette_size())
        throw ParseError(ErrorCode::SyntaxError, line_no,
                         "color " + std::to_string(color) + " outside palette of size " +
                             std::to_string(coloring->palette_size()));
      coloring->assign(*id, static_cast<Color>(color));
    } else {
      throw ParseError(ErrorCode::SyntaxError, line_no, "unknown line type '" + std::string(t[0]) + "'");
    }
  });
  if (!coloring) throw ParseError(ErrorCode::SyntaxError, 0, "missing 's' palette line");
  return *coloring;
}

/// Palette line, then one 'v' line per colored vertex in id order. Labels
/// default to the ids themselves.
inline std::string serialize_coloring(const Coloring& coloring, const std::vector<std::uint64_t>& labels = {}) {
  std::ostringstream os;
  os << "s " << coloring.palette_size() << '\n';
  for (VertexId v = 0; v < coloring.vertex_count(); ++v)
    if (auto c = coloring.color(v)) os << "v " << (labels.empty() ? v : labels.at(v)) << ' ' << *c << '\n';
  return os.str();
}

}  // namespace efl
