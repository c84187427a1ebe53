#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace lpa {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::string name;
  VertexId source;
  VertexId range;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge declaration by vertex names, as it appears in a graph file.
struct EdgeSpec {
  std::string name;
  std::string source;
  std::string range;
};

/// A finite directed graph. Vertex and edge ids follow declaration order,
/// which also seeds every deterministic ordering in the library.
class Graph {
 public:
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  /// {"vertices": [...], "edges": [{"name", "src", "dst"}]}
  static Graph from_json(const nlohmann::json& doc);
  static Graph load(const std::string& path);
  nlohmann::json to_json() const;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  VertexId vertex_id(const std::string& name) const;  // throws on unknown names
  EdgeId edge_id(const std::string& name) const;

  /// s^{-1}(v) in declaration order.
  std::span<const EdgeId> out_edges(VertexId v) const { return out_.at(v); }
  /// r^{-1}(v) in declaration order.
  std::span<const EdgeId> in_edges(VertexId v) const { return in_.at(v); }
  bool is_sink(VertexId v) const { return out_.at(v).empty(); }
  bool is_source(VertexId v) const { return in_.at(v).empty(); }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// A path: either a vertex (no edges) or a composable edge sequence.
struct Path {
  VertexId source = 0;
  VertexId range = 0;
  std::vector<EdgeId> edges;

  static Path vertex(VertexId v) { return Path{v, v, {}}; }
  static Path of_edge(const Graph& g, EdgeId e);
  /// Validates composability; throws PreconditionError otherwise.
  static Path of_edges(const Graph& g, std::vector<EdgeId> edges);

  std::size_t length() const noexcept { return edges.size(); }
  bool is_vertex() const noexcept { return edges.empty(); }
  bool is_closed() const noexcept { return !edges.empty() && source == range; }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Deterministic path order: length, then edge ids lexicographically,
/// then the base vertex (only matters for vertices).
struct PathOrder {
  bool operator()(const Path& a, const Path& b) const;
};
std::strong_ordering compare_paths(const Path& a, const Path& b);

/// Concatenation; nullopt when r(a) != s(b).
std::optional<Path> concat(const Path& a, const Path& b);
/// Edges [from, to) of p as a path; an empty slice is the vertex at that position.
Path subpath(const Graph& g, const Path& p, std::size_t from, std::size_t to);
bool starts_with(const Path& p, const Path& prefix);
bool ends_with(const Path& p, const Path& suffix);
Path power(const Path& closed, std::size_t k);

/// Parses "e1.e2", "c^3.d" or a vertex name.
Path parse_path(const Graph& g, const std::string& text);
std::string path_to_string(const Graph& g, const Path& p);

struct ClosedPathClass {
  bool closed = false;
  bool simple = false;
  bool basic = false;
  bool cycle = false;
  bool loop = false;
  bool source_cycle = false;
  bool source_loop = false;
  bool maximal_cycle = false;

  friend bool operator==(const ClosedPathClass&, const ClosedPathClass&) = default;
};

nlohmann::json to_json(const ClosedPathClass& flags);

ClosedPathClass classify_closed_path(const Graph& g, const Path& p);
bool is_basic_closed(const Path& p);

/// The n rotations of a closed path, starting with p itself.
std::vector<Path> cyclic_shifts(const Graph& g, const Path& p);
bool is_cyclic_shift_of(const Graph& g, const Path& p, const Path& q);

bool connects_to(const Graph& g, VertexId from, VertexId to);
/// Vertices that connect to v (v included).
std::vector<bool> reverse_reachable(const Graph& g, VertexId v);

/// Strongly connected components of the subgraph induced on `mask`
/// (Tarjan). Component index per vertex; -1 outside the mask.
std::vector<int> strongly_connected_components(const Graph& g, const std::vector<bool>& mask,
                                               int* component_count = nullptr);

/// Maximal-cycle test through SCCs of the reverse-reachable subgraph.
bool is_maximal_cycle(const Graph& g, const Path& c);

/// A_c truncated to length <= max_len, ordered by (length, lex).
std::vector<Path> enumerate_Ac(const Graph& g, const Path& c, std::size_t max_len);

/// Cycles of length <= max_len connecting to v, one per rotation class,
/// represented by the lexicographically least rotation.
std::vector<Path> cycles_connecting_to(const Graph& g, VertexId v, std::size_t max_len);

}  // namespace lpa
