#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace selfsim {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Finite directed graph E = (E^0, E^1, r, s). Vertices and edges are interned
// as dense ids in insertion order; names are kept for I/O only.
//
// Paths are read left to right with r(e_{i+1}) = s(e_i), so vE^k is the set
// of length-k paths whose *range* is v.
class Graph {
 public:
  struct EdgeSpec {
    std::string name;
    VertexId range;
    VertexId source;
  };

  Graph() = default;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId range, VertexId source);

  std::size_t num_vertices() const noexcept { return vertex_names_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  VertexId range(EdgeId e) const { return edges_.at(e).range; }
  VertexId source(EdgeId e) const { return edges_.at(e).source; }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edges_.at(e).name; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;

  // vE^1, ascending edge id.
  std::span<const EdgeId> edges_into(VertexId v) const;

  bool has_vertex(VertexId v) const noexcept { return v < vertex_names_.size(); }
  bool has_edge(EdgeId e) const noexcept { return e < edges_.size(); }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::vector<EdgeId>> by_range_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

struct GraphIssue {
  enum class Kind { EmptyGraph, SourceVertex, DanglingEdge };
  Kind kind;
  std::uint32_t id = 0;  // vertex for SourceVertex, edge for DanglingEdge
};

struct GraphReport {
  std::vector<GraphIssue> issues;
  bool ok() const noexcept { return issues.empty(); }
};

GraphReport validate_graph(const Graph& g);

// Throws Error with the first issue's kind if the report is not ok.
void require_valid(const Graph& g);

// A finite path. The range vertex is stored explicitly so that empty paths at
// different vertices are different values.
class Path {
 public:
  Path() = default;

  static Path empty(VertexId v) { return Path(v, v, {}); }
  static Path single(const Graph& g, EdgeId e);
  // Throws NotComposable / UnknownEdge.
  static Path from_edges(const Graph& g, std::vector<EdgeId> edges);

  VertexId range() const noexcept { return range_; }
  VertexId source() const noexcept { return source_; }
  std::size_t length() const noexcept { return edges_.size(); }
  bool is_empty() const noexcept { return edges_.empty(); }
  std::span<const EdgeId> edges() const noexcept { return edges_; }
  EdgeId operator[](std::size_t i) const { return edges_[i]; }

  // Appends one edge; requires r(e) = s(this).
  Path& push_back(const Graph& g, EdgeId e);

  // The first n edges (n <= length()).
  Path prefix(const Graph& g, std::size_t n) const;

  bool starts_with(const Path& beta) const noexcept;

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;

  std::size_t hash() const noexcept;

  friend Path concat(const Path& mu, const Path& nu);
  friend std::optional<Path> strip_prefix(const Path& mu, const Path& beta);

 private:
  Path(VertexId r, VertexId s, std::vector<EdgeId> edges)
      : range_(r), source_(s), edges_(std::move(edges)) {}

  VertexId range_ = 0;
  VertexId source_ = 0;
  std::vector<EdgeId> edges_;
};

// vE^k in lexicographic edge-id order; k = 0 gives the empty path at v.
std::vector<Path> paths_of_length(const Graph& g, VertexId v, std::size_t k);

// All of E^k (every range vertex), lexicographic.
std::vector<Path> all_paths_of_length(const Graph& g, std::size_t k);

// Throws NotComposable unless s(mu) = r(nu).
Path concat(const Path& mu, const Path& nu);

// lambda with mu = beta lambda, if beta is a prefix of mu.
std::optional<Path> strip_prefix(const Path& mu, const Path& beta);

// Edge names separated by spaces; the empty path prints as its vertex name.
std::string format_path(const Graph& g, const Path& p);

// Inverse of format_path. Also accepts '.' as a separator.
Path parse_path(const Graph& g, const std::string& text);

}  // namespace selfsim

template <>
struct std::hash<selfsim::Path> {
  std::size_t operator()(const selfsim::Path& p) const noexcept { return p.hash(); }
};
