#include "lpa/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <unordered_map>

#include "lpa/errors.hpp"

namespace lpa {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)), out_(vertices_.size()), in_(vertices_.size()) {
  std::unordered_map<std::string, VertexId> vertex_index;
  std::set<std::string> names;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].empty()) throw PreconditionError("empty vertex name");
    if (!names.insert(vertices_[v]).second) {
      throw PreconditionError("duplicate name '" + vertices_[v] + "'");
    }
    vertex_index.emplace(vertices_[v], v);
  }
  edges_.reserve(edges.size());
  for (const auto& spec : edges) {
    if (spec.name.empty()) throw PreconditionError("empty edge name");
    if (!names.insert(spec.name).second) throw PreconditionError("duplicate name '" + spec.name + "'");
    auto src = vertex_index.find(spec.source);
    auto dst = vertex_index.find(spec.range);
    if (src == vertex_index.end() || dst == vertex_index.end()) {
      throw PreconditionError("edge '" + spec.name + "' references an undeclared vertex");
    }
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{spec.name, src->second, dst->second});
    out_[src->second].push_back(id);
    in_[dst->second].push_back(id);
  }
}

Graph Graph::from_json(const nlohmann::json& doc) {
  try {
    std::vector<std::string> vertices = doc.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const auto& e : doc.at("edges")) {
      edges.push_back(EdgeSpec{e.at("name").get<std::string>(), e.at("src").get<std::string>(),
                               e.at("dst").get<std::string>()});
    }
    return Graph(std::move(vertices), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed graph document: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("invalid graph: ") + ex.what());
  }
}

Graph Graph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("graph file '" + path + "' is not valid JSON: " + ex.what());
  }
  return from_json(doc);
}

nlohmann::json Graph::to_json() const {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : edges_) {
    edges.push_back({{"name", e.name}, {"src", vertices_[e.source]}, {"dst", vertices_[e.range]}});
  }
  return {{"vertices", vertices_}, {"edges", edges}};
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.name == name; });
  if (it == edges_.end()) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

VertexId Graph::vertex_id(const std::string& name) const {
  if (auto v = find_vertex(name)) return *v;
  throw PreconditionError("unknown vertex '" + name + "'");
}

EdgeId Graph::edge_id(const std::string& name) const {
  if (auto e = find_edge(name)) return *e;
  throw PreconditionError("unknown edge '" + name + "'");
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

// ---------------------------------------------------------------------------
// Paths

Path Path::of_edge(const Graph& g, EdgeId e) {
  const Edge& edge = g.edge(e);
  return Path{edge.source, edge.range, {e}};
}

Path Path::of_edges(const Graph& g, std::vector<EdgeId> edges) {
  if (edges.empty()) throw PreconditionError("an edge sequence must be nonempty");
  for (EdgeId e : edges) {
    if (e >= g.edge_count()) throw PreconditionError("path references an unknown edge");
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (g.edge(edges[i]).range != g.edge(edges[i + 1]).source) {
      throw PreconditionError("not a path: edge '" + g.edge(edges[i]).name + "' does not compose with '" +
                              g.edge(edges[i + 1]).name + "'");
    }
  }
  const VertexId s = g.edge(edges.front()).source;
  const VertexId r = g.edge(edges.back()).range;
  return Path{s, r, std::move(edges)};
}

std::strong_ordering compare_paths(const Path& a, const Path& b) {
  if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
  if (auto c = a.edges <=> b.edges; c != 0) return c;
  return a.source <=> b.source;
}

bool PathOrder::operator()(const Path& a, const Path& b) const { return compare_paths(a, b) < 0; }

std::optional<Path> concat(const Path& a, const Path& b) {
  if (a.range != b.source) return std::nullopt;
  Path out{a.source, b.range, a.edges};
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

Path subpath(const Graph& g, const Path& p, std::size_t from, std::size_t to) {
  if (from > to || to > p.length()) throw PreconditionError("subpath bounds out of range");
  if (from == to) {
    const VertexId at = from == 0 ? p.source : g.edge(p.edges[from - 1]).range;
    return Path::vertex(at);
  }
  std::vector<EdgeId> edges(p.edges.begin() + static_cast<std::ptrdiff_t>(from),
                            p.edges.begin() + static_cast<std::ptrdiff_t>(to));
  return Path{g.edge(edges.front()).source, g.edge(edges.back()).range, std::move(edges)};
}

bool starts_with(const Path& p, const Path& prefix) {
  if (p.source != prefix.source || prefix.length() > p.length()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

bool ends_with(const Path& p, const Path& suffix) {
  if (p.range != suffix.range || suffix.length() > p.length()) return false;
  return std::equal(suffix.edges.rbegin(), suffix.edges.rend(), p.edges.rbegin());
}

Path power(const Path& closed, std::size_t k) {
  if (k == 0) return Path::vertex(closed.source);
  if (!closed.is_closed()) throw PreconditionError("only closed paths have powers");
  Path out{closed.source, closed.range, {}};
  out.edges.reserve(closed.length() * k);
  for (std::size_t i = 0; i < k; ++i) out.edges.insert(out.edges.end(), closed.edges.begin(), closed.edges.end());
  return out;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Path parse_path(const Graph& g, const std::string& text) {
  const std::string body = trim(text);
  if (body.empty()) throw ParseError("empty path");
  if (auto v = g.find_vertex(body)) return Path::vertex(*v);
  std::vector<EdgeId> edges;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto dot = body.find('.', pos);
    if (dot == std::string::npos) dot = body.size();
    std::string token = trim(body.substr(pos, dot - pos));
    std::size_t repeat = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      const std::string exponent = trim(token.substr(caret + 1));
      if (exponent.empty() || !std::all_of(exponent.begin(), exponent.end(), [](char ch) {
            return std::isdigit(static_cast<unsigned char>(ch));
          }) || exponent.size() > 6) {
        throw ParseError("bad exponent in path '" + text + "'", pos + caret + 1);
      }
      repeat = std::stoul(exponent);
      token = trim(token.substr(0, caret));
    }
    auto e = g.find_edge(token);
    if (!e) throw ParseError("unknown edge '" + token + "' in path", pos);
    for (std::size_t i = 0; i < repeat; ++i) edges.push_back(*e);
    pos = dot + 1;
  }
  if (edges.empty()) throw ParseError("path '" + text + "' has no edges");
  return Path::of_edges(g, std::move(edges));
}

std::string path_to_string(const Graph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size();) {
    std::size_t j = i;
    while (j < p.edges.size() && p.edges[j] == p.edges[i]) ++j;
    if (!out.empty()) out += '.';
    out += g.edge(p.edges[i]).name;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed path taxonomy

nlohmann::json to_json(const ClosedPathClass& f) {
  return {{"closed", f.closed},
          {"simple", f.simple},
          {"basic", f.basic},
          {"cycle", f.cycle},
          {"loop", f.loop},
          {"source_cycle", f.source_cycle},
          {"source_loop", f.source_loop},
          {"maximal_cycle", f.maximal_cycle}};
}

bool is_basic_closed(const Path& p) {
  if (!p.is_closed()) return false;
  const std::size_t n = p.length();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = p.edges[i] == p.edges[i - d];
    if (periodic) return false;
  }
  return true;
}

namespace {

std::vector<VertexId> edge_sources(const Graph& g, const Path& p) {
  std::vector<VertexId> out;
  out.reserve(p.length());
  for (EdgeId e : p.edges) out.push_back(g.edge(e).source);
  return out;
}

bool is_cycle_path(const Graph& g, const Path& p) {
  if (!p.is_closed()) return false;
  auto sources = edge_sources(g, p);
  std::sort(sources.begin(), sources.end());
  return std::adjacent_find(sources.begin(), sources.end()) == sources.end();
}

void validate_path(const Graph& g, const Path& p) {
  for (EdgeId e : p.edges) {
    if (e >= g.edge_count()) throw PreconditionError("path references an unknown edge");
  }
  if (p.is_vertex()) {
    if (p.source >= g.vertex_count() || p.source != p.range) throw PreconditionError("malformed vertex path");
    return;
  }
  Path checked = Path::of_edges(g, p.edges);
  if (checked.source != p.source || checked.range != p.range) {
    throw PreconditionError("path endpoints disagree with its edges");
  }
}

}  // namespace

ClosedPathClass classify_closed_path(const Graph& g, const Path& p) {
  validate_path(g, p);
  if (p.is_vertex()) throw PreconditionError("classification needs a path of length >= 1");
  ClosedPathClass f;
  f.closed = p.is_closed();
  if (!f.closed) return f;
  const auto sources = edge_sources(g, p);
  f.simple = std::find(sources.begin() + 1, sources.end(), sources.front()) == sources.end();
  f.basic = is_basic_closed(p);
  f.cycle = is_cycle_path(g, p);
  f.loop = p.length() == 1;
  if (f.cycle) {
    std::vector<bool> on_cycle(g.vertex_count(), false);
    for (VertexId v : sources) on_cycle[v] = true;
    const std::set<EdgeId> own(p.edges.begin(), p.edges.end());
    f.source_cycle = std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
      auto id = static_cast<EdgeId>(&e - g.edges().data());
      return on_cycle[e.range] && own.count(id) == 0;
    });
    f.source_loop = f.source_cycle && f.loop;
    f.maximal_cycle = is_maximal_cycle(g, p);
  }
  return f;
}

std::vector<Path> cyclic_shifts(const Graph& g, const Path& p) {
  if (!p.is_closed()) throw PreconditionError("cyclic shifts need a closed path");
  std::vector<Path> out;
  const std::size_t n = p.length();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<EdgeId> edges;
    edges.reserve(n);
    for (std::size_t k = 0; k < n; ++k) edges.push_back(p.edges[(i + k) % n]);
    const VertexId s = g.edge(edges.front()).source;
    out.push_back(Path{s, s, std::move(edges)});
  }
  return out;
}

bool is_cyclic_shift_of(const Graph& g, const Path& p, const Path& q) {
  if (!q.is_closed() || p.length() != q.length()) return false;
  for (const auto& s : cyclic_shifts(g, q)) {
    if (s == p) return true;
  }
  return false;
}

std::vector<bool> reverse_reachable(const Graph& g, VertexId v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    const VertexId w = stack.back();
    stack.pop_back();
    for (EdgeId e : g.in_edges(w)) {
      const VertexId u = g.edge(e).source;
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

bool connects_to(const Graph& g, VertexId from, VertexId to) {
  if (from >= g.vertex_count() || to >= g.vertex_count()) throw PreconditionError("unknown vertex");
  return reverse_reachable(g, to)[from];
}

std::vector<int> strongly_connected_components(const Graph& g, const std::vector<bool>& mask,
                                               int* component_count) {
  const std::size_t n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0), component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  int counter = 0;
  int components = 0;

  std::function<void(VertexId)> visit = [&](VertexId v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (EdgeId e : g.out_edges(v)) {
      const VertexId w = g.edge(e).range;
      if (!mask[w]) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      VertexId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component[w] = components;
      } while (w != v);
      ++components;
    }
  };

  for (VertexId v = 0; v < n; ++v) {
    if (mask[v] && index[v] < 0) visit(v);
  }
  if (component_count) *component_count = components;
  return component;
}

bool is_maximal_cycle(const Graph& g, const Path& c) {
  if (!is_cycle_path(g, c)) return false;
  const auto reach = reverse_reachable(g, c.source);
  int count = 0;
  const auto component = strongly_connected_components(g, reach, &count);

  std::vector<std::size_t> size(static_cast<std::size_t>(count), 0);
  std::vector<bool> has_internal_edge(static_cast<std::size_t>(count), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (component[v] >= 0) ++size[static_cast<std::size_t>(component[v])];
  }
  for (const auto& e : g.edges()) {
    if (component[e.source] >= 0 && component[e.source] == component[e.range]) {
      has_internal_edge[static_cast<std::size_t>(component[e.source])] = true;
    }
  }
  int nontrivial = 0;
  for (int k = 0; k < count; ++k) {
    if (has_internal_edge[static_cast<std::size_t>(k)]) ++nontrivial;
  }
  if (nontrivial != 1) return false;

  const int home = component[c.source];
  std::vector<bool> on_cycle(g.vertex_count(), false);
  for (EdgeId e : c.edges) on_cycle[g.edge(e).source] = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if ((component[v] == home) != on_cycle[v]) return false;
  }
  const std::set<EdgeId> own(c.edges.begin(), c.edges.end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (on_cycle[edge.source] && on_cycle[edge.range] && own.count(e) == 0) return false;
  }
  return true;
}

std::vector<Path> enumerate_Ac(const Graph& g, const Path& c, std::size_t max_len) {
  validate_path(g, c);
  if (!is_basic_closed(c)) throw PreconditionError("A_c needs a basic closed path");
  if (max_len < 1) throw PreconditionError("max_len must be at least 1");
  std::vector<Path> out;
  // Grow backwards from s(c); a suffix equal to c survives every extension, so prune it.
  std::vector<Path> frontier{Path::vertex(c.source)};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (EdgeId e : g.in_edges(p.source)) {
        Path q{g.edge(e).source, c.source, {e}};
        q.edges.insert(q.edges.end(), p.edges.begin(), p.edges.end());
        if (ends_with(q, c)) continue;
        if (!starts_with(q, c)) out.push_back(q);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), PathOrder{});
  return out;
}

std::vector<Path> cycles_connecting_to(const Graph& g, VertexId v, std::size_t max_len) {
  if (v >= g.vertex_count()) throw PreconditionError("unknown vertex");
  const auto reach = reverse_reachable(g, v);
  std::set<Path, PathOrder> found;
  std::vector<EdgeId> trail;
  std::vector<bool> visited(g.vertex_count(), false);

  std::function<void(VertexId, VertexId)> extend = [&](VertexId start, VertexId at) {
    if (trail.size() >= max_len) return;
    for (EdgeId e : g.out_edges(at)) {
      const VertexId next = g.edge(e).range;
      trail.push_back(e);
      if (next == start) {
        Path cyc{start, start, trail};
        Path best = cyc;
        for (const auto& s : cyclic_shifts(g, cyc)) {
          if (compare_paths(s, best) < 0) best = s;
        }
        found.insert(best);
      } else if (!visited[next]) {
        visited[next] = true;
        extend(start, next);
        visited[next] = false;
      }
      trail.pop_back();
    }
  };

  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (!reach[s]) continue;
    visited[s] = true;
    extend(s, s);
    visited[s] = false;
  }
  return {found.begin(), found.end()};
}

}  // namespace lpa
