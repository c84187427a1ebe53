#include "lpa/element.hpp"

#include <deque>

#include "lpa/errors.hpp"

namespace lpa {

AlgebraPtr Algebra::create(std::shared_ptr<const Graph> graph, Field field,
                           const std::map<std::string, std::string>& special_edges) {
  if (!graph) throw PreconditionError("algebra needs a graph");
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->special_.resize(graph->vertex_count());
  for (VertexId v = 0; v < graph->vertex_count(); ++v) {
    auto out = graph->out_edges(v);
    if (!out.empty()) alg->special_[v] = out.front();
  }
  for (const auto& [vertex_name, edge_name] : special_edges) {
    const VertexId v = graph->vertex_id(vertex_name);
    const EdgeId e = graph->edge_id(edge_name);
    if (graph->edge(e).source != v) {
      throw PreconditionError("special edge '" + edge_name + "' does not start at '" + vertex_name + "'");
    }
    alg->special_[v] = e;
  }
  alg->graph_ = std::move(graph);
  alg->field_ = field;
  return alg;
}

bool Algebra::is_special(EdgeId e) const {
  const auto& s = special_.at(graph_->edge(e).source);
  return s && *s == e;
}

bool Algebra::compatible_with(const Algebra& other) const {
  if (this == &other) return true;
  return field_ == other.field_ && (graph_ == other.graph_ || *graph_ == *other.graph_);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.real.length() != b.real.length()) return a.real.length() < b.real.length();
  if (a.ghost.length() != b.ghost.length()) return a.ghost.length() < b.ghost.length();
  if (a.real.edges != b.real.edges) return a.real.edges < b.real.edges;
  if (a.ghost.edges != b.ghost.edges) return a.ghost.edges < b.ghost.edges;
  if (a.real.source != b.real.source) return a.real.source < b.real.source;
  return a.ghost.source < b.ghost.source;
}

namespace {

// p with its first k edges removed; `at` is the vertex where the remainder starts.
Path drop_prefix(const Path& p, std::size_t k, VertexId at) {
  Path out{at, p.range, {}};
  out.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(k), p.edges.end());
  return out;
}

Path append_edge(const Path& p, EdgeId e, VertexId new_range) {
  Path out = p;
  out.edges.push_back(e);
  out.range = new_range;
  return out;
}

Path drop_last(const Path& p, VertexId new_range) {
  Path out = p;
  out.edges.pop_back();
  out.range = new_range;
  if (out.edges.empty()) out.source = new_range;
  return out;
}

}  // namespace

std::optional<Monomial> multiply_monomials(const Monomial& a, const Monomial& b) {
  // (αβ*)(γδ*)
  const Path& beta = a.ghost;
  const Path& gamma = b.real;
  if (starts_with(gamma, beta)) {
    Path rest = drop_prefix(gamma, beta.length(), beta.range);
    Path real = a.real;
    real.edges.insert(real.edges.end(), rest.edges.begin(), rest.edges.end());
    real.range = rest.range;
    return Monomial{std::move(real), b.ghost};
  }
  if (starts_with(beta, gamma)) {
    Path rest = drop_prefix(beta, gamma.length(), gamma.range);
    Path ghost = b.ghost;
    ghost.edges.insert(ghost.edges.end(), rest.edges.begin(), rest.edges.end());
    ghost.range = rest.range;
    return Monomial{a.real, std::move(ghost)};
  }
  return std::nullopt;
}

void Element::add_reduced(const Monomial& m, const Scalar& k, ReductionOrder order) {
  const Graph& g = algebra_->graph();
  std::deque<std::pair<Monomial, Scalar>> work;
  work.emplace_back(m, k);
  while (!work.empty()) {
    std::pair<Monomial, Scalar> item;
    if (order == ReductionOrder::DepthFirst) {
      item = std::move(work.back());
      work.pop_back();
    } else {
      item = std::move(work.front());
      work.pop_front();
    }
    auto& [mono, coeff] = item;
    if (coeff.is_zero()) continue;
    const bool reducible = !mono.real.is_vertex() && !mono.ghost.is_vertex() &&
                           mono.real.edges.back() == mono.ghost.edges.back() &&
                           algebra_->is_special(mono.real.edges.back());
    if (!reducible) {
      auto [it, inserted] = terms_.try_emplace(mono, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
      }
      continue;
    }
    // (α'f)(β'f)* = α'β'* - Σ_{e ∈ s^{-1}(s(f)), e ≠ f} (α'e)(β'e)*
    const EdgeId f = mono.real.edges.back();
    const VertexId u = g.edge(f).source;
    Path real = drop_last(mono.real, u);
    Path ghost = drop_last(mono.ghost, u);
    for (EdgeId e : g.out_edges(u)) {
      if (e == f) continue;
      const VertexId r = g.edge(e).range;
      work.emplace_back(Monomial{append_edge(real, e, r), append_edge(ghost, e, r)}, -coeff);
    }
    work.emplace_back(Monomial{std::move(real), std::move(ghost)}, coeff);
  }
}

Element Element::one(const AlgebraPtr& algebra) {
  Element x(algebra);
  for (VertexId v = 0; v < algebra->graph().vertex_count(); ++v) {
    x.terms_.emplace(Monomial{Path::vertex(v), Path::vertex(v)}, algebra->field().one());
  }
  return x;
}

Element Element::scalar(const AlgebraPtr& algebra, const Scalar& k) { return one(algebra).scaled(k); }

Element Element::vertex(const AlgebraPtr& algebra, VertexId v) {
  if (v >= algebra->graph().vertex_count()) throw PreconditionError("unknown vertex");
  return monomial(algebra, Monomial{Path::vertex(v), Path::vertex(v)}, algebra->field().one());
}

Element Element::edge(const AlgebraPtr& algebra, EdgeId e) {
  return path(algebra, Path::of_edge(algebra->graph(), e));
}

Element Element::ghost_edge(const AlgebraPtr& algebra, EdgeId e) {
  return ghost_path(algebra, Path::of_edge(algebra->graph(), e));
}

Element Element::path(const AlgebraPtr& algebra, const Path& p) {
  return monomial(algebra, Monomial{p, Path::vertex(p.range)}, algebra->field().one());
}

Element Element::ghost_path(const AlgebraPtr& algebra, const Path& p) {
  return monomial(algebra, Monomial{Path::vertex(p.range), p}, algebra->field().one());
}

Element Element::monomial(const AlgebraPtr& algebra, const Monomial& m, const Scalar& k) {
  if (m.real.range != m.ghost.range) throw PreconditionError("monomial αβ* needs r(α) = r(β)");
  Element x(algebra);
  x.add_reduced(m, k, ReductionOrder::DepthFirst);
  return x;
}

Element Element::from_raw(const AlgebraPtr& algebra, const std::vector<std::pair<Monomial, Scalar>>& raw,
                          ReductionOrder order) {
  Element x(algebra);
  for (const auto& [m, k] : raw) {
    if (m.real.range != m.ghost.range) throw PreconditionError("monomial αβ* needs r(α) = r(β)");
    x.add_reduced(m, k, order);
  }
  return x;
}

Scalar Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? algebra_->field().zero() : it->second;
}

void Element::check_compatible(const Element& other) const {
  if (algebra_ == other.algebra_) return;
  if (!algebra_->compatible_with(*other.algebra_)) throw PreconditionError("elements of different algebras");
  for (VertexId v = 0; v < algebra_->graph().vertex_count(); ++v) {
    if (algebra_->special_edge(v) != other.algebra_->special_edge(v)) {
      throw PreconditionError("elements normalized against different special edges");
    }
  }
}

Element& Element::operator+=(const Element& rhs) {
  check_compatible(rhs);
  for (const auto& [m, k] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, k);
    if (!inserted) {
      it->second += k;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Element& Element::operator-=(const Element& rhs) { return *this += -rhs; }

Element Element::operator-() const {
  Element x = *this;
  for (auto& [m, k] : x.terms_) k = -k;
  return x;
}

Element Element::scaled(const Scalar& k) const {
  Element x(algebra_);
  if (k.is_zero()) return x;
  for (const auto& [m, c] : terms_) x.terms_.emplace(m, c * k);
  return x;
}

Element Element::star() const {
  Element x(algebra_);
  for (const auto& [m, k] : terms_) x.add_reduced(Monomial{m.ghost, m.real}, k, ReductionOrder::DepthFirst);
  return x;
}

Element Element::pow(unsigned n) const {
  Element result = one(algebra_);
  Element base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Element Element::rebased(const AlgebraPtr& target) const {
  if (!algebra_->compatible_with(*target)) throw PreconditionError("rebasing onto a different graph or field");
  Element x(target);
  for (const auto& [m, k] : terms_) x.add_reduced(m, k, ReductionOrder::DepthFirst);
  return x;
}

Element operator*(const Element& a, const Element& b) {
  a.check_compatible(b);
  Element x(a.algebra_);
  for (const auto& [ma, ka] : a.terms_) {
    for (const auto& [mb, kb] : b.terms_) {
      if (auto m = multiply_monomials(ma, mb)) x.add_reduced(*m, ka * kb, ReductionOrder::DepthFirst);
    }
  }
  return x;
}

bool operator==(const Element& a, const Element& b) {
  if (a.algebra_ != b.algebra_) {
    if (!a.algebra_->compatible_with(*b.algebra_)) return false;
    return a.terms_ == b.rebased(a.algebra_).terms_;
  }
  return a.terms_ == b.terms_;
}

}  // namespace lpa
