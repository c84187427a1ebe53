#include "lpa/morita.hpp"

#include <algorithm>
#include <set>

#include "lpa/errors.hpp"

namespace lpa {

GeneratorMap::GeneratorMap(AlgebraPtr domain, AlgebraPtr codomain, std::vector<Element> vertex_images,
                           std::vector<Element> edge_images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      vertex_images_(std::move(vertex_images)),
      edge_images_(std::move(edge_images)) {
  if (vertex_images_.size() != domain_->graph().vertex_count() || edge_images_.size() != domain_->graph().edge_count()) {
    throw PreconditionError("generator map must assign every vertex and edge");
  }
  if (!(domain_->field() == codomain_->field())) throw PreconditionError("generator map between different fields");
  for (const auto* images : {&vertex_images_, &edge_images_}) {
    for (const auto& x : *images) {
      if (!x.algebra()->compatible_with(*codomain_)) throw PreconditionError("generator image outside the codomain");
    }
  }
}

GeneratorMap GeneratorMap::identity(const AlgebraPtr& algebra) {
  const Graph& g = algebra->graph();
  std::vector<Element> vertices, edges;
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(Element::vertex(algebra, v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back(Element::edge(algebra, e));
  return GeneratorMap(algebra, algebra, std::move(vertices), std::move(edges));
}

Element GeneratorMap::path_image(const Path& p) const {
  if (p.is_vertex()) return vertex_images_.at(p.source);
  Element out = edge_images_.at(p.edges.front());
  for (std::size_t i = 1; i < p.length(); ++i) out = out * edge_images_.at(p.edges[i]);
  return out;
}

Element GeneratorMap::apply(const Element& x) const {
  if (x.algebra() != domain_ && !x.algebra()->compatible_with(*domain_)) {
    throw PreconditionError("element is not in the domain of the generator map");
  }
  Element out(codomain_);
  for (const auto& [m, k] : x.terms()) {
    Element term = m.ghost.is_vertex() ? path_image(m.real) : path_image(m.real) * path_image(m.ghost).star();
    out += term.scaled(k);
  }
  return out;
}

Element GeneratorMap::unit_image() const {
  Element out(codomain_);
  for (const auto& v : vertex_images_) out += v;
  return out;
}

GeneratorMap GeneratorMap::compose(const GeneratorMap& inner) const {
  if (!inner.codomain()->compatible_with(*domain_)) throw PreconditionError("generator maps do not compose");
  std::vector<Element> vertices, edges;
  for (const auto& x : inner.vertex_images_) vertices.push_back(apply(x));
  for (const auto& x : inner.edge_images_) edges.push_back(apply(x));
  return GeneratorMap(inner.domain_, codomain_, std::move(vertices), std::move(edges));
}

nlohmann::json GeneratorMap::to_json() const {
  const Graph& g = domain_->graph();
  nlohmann::json vertices = nlohmann::json::object(), edges = nlohmann::json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) vertices[g.vertex_name(v)] = to_string(vertex_images_[v]);
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges[g.edge(e).name] = to_string(edge_images_[e]);
  return {{"vertices", vertices}, {"edges", edges}};
}

std::vector<std::pair<std::string, Element>> relation_images(const GeneratorMap& theta) {
  const AlgebraPtr& f = theta.domain();
  const Graph& g = f->graph();
  std::vector<std::pair<std::string, Element>> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      Element rel = theta.vertex_image(v) * theta.vertex_image(w);
      if (v == w) rel -= theta.vertex_image(v);
      out.emplace_back("V " + g.vertex_name(v) + "," + g.vertex_name(w), rel);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    const Element& x = theta.edge_image(e);
    out.emplace_back("E1 " + edge.name, theta.vertex_image(edge.source) * x - x);
    out.emplace_back("E1' " + edge.name, x * theta.vertex_image(edge.range) - x);
    out.emplace_back("E2 " + edge.name, x.star() * theta.vertex_image(edge.source) - x.star());
    out.emplace_back("E2' " + edge.name, theta.vertex_image(edge.range) * x.star() - x.star());
    for (EdgeId h = 0; h < g.edge_count(); ++h) {
      Element rel = x.star() * theta.edge_image(h);
      if (e == h) rel -= theta.vertex_image(edge.range);
      out.emplace_back("CK1 " + edge.name + "," + g.edge(h).name, rel);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_sink(v)) continue;
    Element rel = theta.vertex_image(v);
    for (EdgeId e : g.out_edges(v)) rel -= theta.edge_image(e) * theta.edge_image(e).star();
    out.emplace_back("CK2 " + g.vertex_name(v), rel);
  }
  return out;
}

namespace {

std::string fresh_name(std::string base, std::set<std::string>& used) {
  std::string name = base;
  for (unsigned i = 1; used.count(name); ++i) name = base + "_" + std::to_string(i);
  used.insert(name);
  return name;
}

std::set<std::string> names_of(const Graph& g) {
  std::set<std::string> used;
  for (VertexId v = 0; v < g.vertex_count(); ++v) used.insert(g.vertex_name(v));
  for (const auto& e : g.edges()) used.insert(e.name);
  return used;
}

Path translate(const Graph& from, const Graph& to, const Path& p) {
  std::vector<EdgeId> edges;
  for (EdgeId e : p.edges) edges.push_back(to.edge_id(from.edge(e).name));
  return Path::of_edges(to, std::move(edges));
}

}  // namespace

ReductionStep source_eliminate(const AlgebraPtr& algebra, VertexId z) {
  const Graph& e = algebra->graph();
  if (z >= e.vertex_count()) throw PreconditionError("unknown vertex");
  if (!e.is_source(z)) throw PreconditionError("'" + e.vertex_name(z) + "' is not a source");
  if (e.vertex_count() < 2) throw PreconditionError("cannot eliminate the only vertex");

  std::vector<std::string> vertices;
  for (VertexId v = 0; v < e.vertex_count(); ++v) {
    if (v != z) vertices.push_back(e.vertex_name(v));
  }
  std::vector<EdgeSpec> edges;
  for (const auto& edge : e.edges()) {
    if (edge.source != z) edges.push_back({edge.name, e.vertex_name(edge.source), e.vertex_name(edge.range)});
  }
  auto f = std::make_shared<const Graph>(std::move(vertices), edges);
  AlgebraPtr reduced = Algebra::create(f, algebra->field());

  std::vector<Element> vertex_images, edge_images;
  for (VertexId v = 0; v < f->vertex_count(); ++v) {
    vertex_images.push_back(Element::vertex(algebra, e.vertex_id(f->vertex_name(v))));
  }
  for (const auto& edge : f->edges()) edge_images.push_back(Element::edge(algebra, e.edge_id(edge.name)));
  return ReductionStep{"eliminate", e.vertex_name(z), reduced,
                       GeneratorMap(reduced, algebra, std::move(vertex_images), std::move(edge_images))};
}

std::pair<ReductionStep, Path> collapse_source_cycle(const AlgebraPtr& algebra, const Path& c) {
  const Graph& e = algebra->graph();
  const ClosedPathClass flags = classify_closed_path(e, c);
  if (!flags.source_cycle) throw PreconditionError("'" + path_to_string(e, c) + "' is not a source cycle");
  const std::size_t n = c.length();
  if (n < 2) throw PreconditionError("'" + path_to_string(e, c) + "' is already a loop");

  std::vector<int> position(e.vertex_count(), -1);  // i - 1 for v_i
  for (std::size_t i = 0; i < n; ++i) position[e.edge(c.edges[i]).source] = static_cast<int>(i);
  const VertexId v = c.source;

  std::vector<std::string> vertices;
  for (VertexId w = 0; w < e.vertex_count(); ++w) {
    if (position[w] <= 0) vertices.push_back(e.vertex_name(w));
  }
  std::set<std::string> used = names_of(e);
  std::vector<EdgeSpec> edges;
  std::vector<Element> edge_images;
  for (EdgeId id = 0; id < e.edge_count(); ++id) {
    const Edge& edge = e.edge(id);
    if (position[edge.source] >= 0) continue;
    edges.push_back({edge.name, e.vertex_name(edge.source), e.vertex_name(edge.range)});
    edge_images.push_back(Element::edge(algebra, id));
  }
  const std::string loop_name = fresh_name("d", used);
  edges.push_back({loop_name, e.vertex_name(v), e.vertex_name(v)});
  edge_images.push_back(Element::path(algebra, c));
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId vi = e.edge(c.edges[i]).source;
    for (EdgeId g : e.out_edges(vi)) {
      if (position[e.edge(g).range] >= 0) continue;
      edges.push_back({fresh_name("f_" + e.edge(g).name, used), e.vertex_name(v), e.vertex_name(e.edge(g).range)});
      // θ(f_g) = e_1...e_{i-1} g
      Path image = *concat(subpath(e, c, 0, i), Path::of_edge(e, g));
      edge_images.push_back(Element::path(algebra, image));
    }
  }
  auto f = std::make_shared<const Graph>(std::move(vertices), edges);
  AlgebraPtr reduced = Algebra::create(f, algebra->field());
  std::vector<Element> vertex_images;
  for (VertexId w = 0; w < f->vertex_count(); ++w) {
    vertex_images.push_back(Element::vertex(algebra, e.vertex_id(f->vertex_name(w))));
  }
  Path loop = Path::of_edge(*f, f->edge_id(loop_name));
  return {ReductionStep{"collapse", path_to_string(e, c), reduced,
                        GeneratorMap(reduced, algebra, std::move(vertex_images), std::move(edge_images))},
          loop};
}

ReductionResult reduce_to_source_loop(const AlgebraPtr& algebra, const Path& c) {
  const ClosedPathClass flags = classify_closed_path(algebra->graph(), c);
  if (!flags.maximal_cycle) {
    throw PreconditionError("'" + path_to_string(algebra->graph(), c) + "' is not a maximal cycle");
  }
  ReductionResult result{{}, algebra, c, GeneratorMap::identity(algebra)};
  while (true) {
    const Graph& g = result.algebra->graph();
    const std::vector<bool> reaches = reverse_reachable(g, result.loop.source);
    std::optional<VertexId> pick;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!reaches[v] || !g.is_source(v)) continue;
      if (!pick || g.vertex_name(v) < g.vertex_name(*pick)) pick = v;
    }
    if (!pick) break;
    ReductionStep step = source_eliminate(result.algebra, *pick);
    result.loop = translate(g, step.algebra->graph(), result.loop);
    result.theta = result.theta.compose(step.theta);
    result.algebra = step.algebra;
    result.steps.push_back(std::move(step));
  }
  const ClosedPathClass now = classify_closed_path(result.algebra->graph(), result.loop);
  if (!now.source_cycle) {
    const Graph& g = result.algebra->graph();
    for (const auto& edge : g.edges()) {
      bool on_cycle = false, own = false;
      for (EdgeId id : result.loop.edges) {
        on_cycle = on_cycle || g.edge(id).source == edge.range;
        own = own || g.edge(id) == edge;
      }
      if (on_cycle && !own) {
        throw PreconditionError("no source left to eliminate; vertex '" + g.vertex_name(edge.source) +
                                "' still enters the cycle");
      }
    }
    throw InternalError("cycle is neither a source cycle nor entered");
  }
  if (result.loop.length() >= 2) {
    auto [step, loop] = collapse_source_cycle(result.algebra, result.loop);
    result.loop = loop;
    result.theta = result.theta.compose(step.theta);
    result.algebra = step.algebra;
    result.steps.push_back(std::move(step));
  }
  return result;
}

nlohmann::json to_json(const ReductionResult& result) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : result.steps) {
    steps.push_back({{"operation", step.operation},
                     {"subject", step.subject},
                     {"graph", step.algebra->graph().to_json()},
                     {"generator_map", step.theta.to_json()}});
  }
  return {{"steps", steps},
          {"final_graph", result.algebra->graph().to_json()},
          {"loop", path_to_string(result.algebra->graph(), result.loop)},
          {"generator_map", result.theta.to_json()}};
}

}  // namespace lpa
