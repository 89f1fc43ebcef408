#include "selfsim/graph.hpp"

#include <sstream>

#include "selfsim/error.hpp"
#include "selfsim/hash.hpp"

namespace selfsim {

VertexId Graph::add_vertex(std::string name) {
  auto id = static_cast<VertexId>(vertex_names_.size());
  if (!vertex_index_.emplace(name, id).second)
    throw Error(ErrorKind::DuplicateIdentifier, "vertex '" + name + "'");
  vertex_names_.push_back(std::move(name));
  by_range_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(std::string name, VertexId range, VertexId source) {
  auto id = static_cast<EdgeId>(edges_.size());
  if (!edge_index_.emplace(name, id).second)
    throw Error(ErrorKind::DuplicateIdentifier, "edge '" + name + "'");
  edges_.push_back({std::move(name), range, source});
  if (range < by_range_.size()) by_range_[range].push_back(id);
  return id;
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::span<const EdgeId> Graph::edges_into(VertexId v) const {
  if (v >= by_range_.size())
    throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
  return by_range_[v];
}

GraphReport validate_graph(const Graph& g) {
  GraphReport report;
  if (g.num_vertices() == 0) {
    report.issues.push_back({GraphIssue::Kind::EmptyGraph, 0});
    return report;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!g.has_vertex(g.range(e)) || !g.has_vertex(g.source(e)))
      report.issues.push_back({GraphIssue::Kind::DanglingEdge, e});
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.edges_into(v).empty())
      report.issues.push_back({GraphIssue::Kind::SourceVertex, v});
  }
  return report;
}

void require_valid(const Graph& g) {
  auto report = validate_graph(g);
  if (report.ok()) return;
  const auto& first = report.issues.front();
  switch (first.kind) {
    case GraphIssue::Kind::EmptyGraph:
      throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
    case GraphIssue::Kind::SourceVertex:
      throw Error(ErrorKind::SourceVertex,
                  "vertex " + g.vertex_name(first.id) + " receives no edge");
    case GraphIssue::Kind::DanglingEdge:
      throw Error(ErrorKind::DanglingEdge,
                  "edge " + g.edge_name(first.id) + " references a missing vertex");
  }
}

Path Path::single(const Graph& g, EdgeId e) {
  if (!g.has_edge(e)) throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(e));
  return Path(g.range(e), g.source(e), {e});
}

Path Path::from_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty())
    throw Error(ErrorKind::NotComposable, "from_edges needs at least one edge");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!g.has_edge(edges[i]))
      throw Error(ErrorKind::UnknownEdge, "edge id " + std::to_string(edges[i]));
    if (i > 0 && g.range(edges[i]) != g.source(edges[i - 1]))
      throw Error(ErrorKind::NotComposable,
                  g.edge_name(edges[i - 1]) + " then " + g.edge_name(edges[i]));
  }
  VertexId r = g.range(edges.front());
  VertexId s = g.source(edges.back());
  return Path(r, s, std::move(edges));
}

Path& Path::push_back(const Graph& g, EdgeId e) {
  if (g.range(e) != source_)
    throw Error(ErrorKind::NotComposable, "edge " + g.edge_name(e) + " does not extend path");
  edges_.push_back(e);
  source_ = g.source(e);
  return *this;
}

Path Path::prefix(const Graph& g, std::size_t n) const {
  if (n > edges_.size()) throw Error(ErrorKind::NotAlongPoint, "prefix longer than path");
  if (n == 0) return empty(range_);
  std::vector<EdgeId> head(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(n));
  VertexId s = g.source(head.back());
  return Path(range_, s, std::move(head));
}

bool Path::starts_with(const Path& beta) const noexcept {
  if (beta.range_ != range_ || beta.edges_.size() > edges_.size()) return false;
  for (std::size_t i = 0; i < beta.edges_.size(); ++i)
    if (beta.edges_[i] != edges_[i]) return false;
  return true;
}

std::size_t Path::hash() const noexcept {
  std::size_t h = hash_combine(range_, source_);
  for (EdgeId e : edges_) h = hash_combine(h, e);
  return h;
}

std::vector<Path> paths_of_length(const Graph& g, VertexId v, std::size_t k) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v));
  std::vector<Path> level{Path::empty(v)};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Path> next;
    for (const auto& p : level) {
      for (EdgeId e : g.edges_into(p.source())) {
        Path q = p;
        q.push_back(g, e);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Path> all_paths_of_length(const Graph& g, std::size_t k) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto part = paths_of_length(g, v, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

Path concat(const Path& mu, const Path& nu) {
  if (mu.source() != nu.range())
    throw Error(ErrorKind::NotComposable, "s(mu) != r(nu)");
  std::vector<EdgeId> edges = mu.edges_;
  edges.insert(edges.end(), nu.edges_.begin(), nu.edges_.end());
  return Path(mu.range_, nu.source_, std::move(edges));
}

std::optional<Path> strip_prefix(const Path& mu, const Path& beta) {
  if (!mu.starts_with(beta)) return std::nullopt;
  std::vector<EdgeId> rest(mu.edges_.begin() + static_cast<std::ptrdiff_t>(beta.length()),
                           mu.edges_.end());
  return Path(beta.source_, mu.source_, std::move(rest));
}

std::string format_path(const Graph& g, const Path& p) {
  if (p.is_empty()) return g.vertex_name(p.range());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ' ';
    out += g.edge_name(p[i]);
  }
  return out;
}

Path parse_path(const Graph& g, const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == '.' || c == ',') c = ' ';
  std::istringstream in(cleaned);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw Error(ErrorKind::ParseError, "empty path");
  if (tokens.size() == 1) {
    if (auto v = g.find_vertex(tokens[0])) return Path::empty(*v);
  }
  std::vector<EdgeId> edges;
  for (const auto& tok : tokens) {
    auto e = g.find_edge(tok);
    if (!e) throw Error(ErrorKind::UnknownIdentifier, "no edge or vertex named '" + tok + "'");
    edges.push_back(*e);
  }
  return Path::from_edges(g, std::move(edges));
}

}  // namespace selfsim
