#include "lpa/chen.hpp"

#include "lpa/errors.hpp"

namespace lpa {

BasicCycle::BasicCycle(AlgebraPtr algebra, Path c)
    : algebra_(std::move(algebra)), path_(std::move(c)), c_(algebra_), c_minus_one_(algebra_), one_(algebra_) {
  if (path_.is_vertex()) throw PreconditionError("a closed path needs at least one edge");
  class_ = classify_closed_path(algebra_->graph(), path_);
  if (!class_.basic) throw PreconditionError("'" + path_to_string(graph(), path_) + "' is not a basic closed path");
  one_ = Element::one(algebra_);
  c_ = Element::path(algebra_, path_);
  c_minus_one_ = c_ - one_;
}

Element BasicCycle::geometric_sum(unsigned count) const {
  std::vector<std::pair<Monomial, Scalar>> raw;
  raw.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    if (i == 0) {
      for (VertexId v = 0; v < graph().vertex_count(); ++v) {
        raw.emplace_back(Monomial{Path::vertex(v), Path::vertex(v)}, field().one());
      }
    } else {
      raw.emplace_back(Monomial{power(path_, i), Path::vertex(base())}, field().one());
    }
  }
  return Element::from_raw(algebra_, raw);
}

bool SigmaPrefixOrder::operator()(const SigmaPrefix& a, const SigmaPrefix& b) const {
  if (a.c_power != b.c_power) return a.c_power < b.c_power;
  return compare_paths(a.tail, b.tail) < 0;
}

SigmaPrefix ChenModule::sigma_normalize(const Path& gamma) const {
  const Path& c = cycle_.path();
  const Graph& g = cycle_.graph();
  const std::size_t n = c.length();
  if (gamma.range != c.source) {
    throw PreconditionError("'" + path_to_string(g, gamma) + "' does not range at s(c)");
  }
  Path rest = gamma;
  while (rest.length() >= n && ends_with(rest, c)) rest = subpath(g, rest, 0, rest.length() - n);
  unsigned power_count = 0;
  while (rest.length() >= n && starts_with(rest, c)) {
    rest = subpath(g, rest, n, rest.length());
    ++power_count;
  }
  return SigmaPrefix{power_count, std::move(rest)};
}

Path ChenModule::prefix_path(const SigmaPrefix& p) const {
  if (p.c_power == 0) return p.tail;
  Path out = power(cycle_.path(), p.c_power);
  return *concat(out, p.tail);
}

ChenVector ChenModule::basis(const SigmaPrefix& p) const {
  ChenVector u(cycle_.field());
  u.add(p, cycle_.field().one());
  return u;
}

ChenVector ChenModule::act_monomial(const Monomial& m, const SigmaPrefix& p) const {
  const Path& c = cycle_.path();
  const Graph& g = cycle_.graph();
  const std::size_t n = c.length();
  const Path head = prefix_path(p);
  ChenVector out(cycle_.field());

  // The infinite path is head·c^∞; the ghost part must be one of its prefixes.
  const Path& ghost = m.ghost;
  if (ghost.source != head.source) return out;
  for (std::size_t k = 0; k < ghost.length(); ++k) {
    const EdgeId at = k < head.length() ? head.edges[k] : c.edges[(k - head.length()) % n];
    if (ghost.edges[k] != at) return out;
  }
  Path rest = Path::vertex(cycle_.base());
  if (ghost.length() <= head.length()) {
    rest = subpath(g, head, ghost.length(), head.length());
  } else if (const std::size_t offset = (ghost.length() - head.length()) % n; offset != 0) {
    rest = subpath(g, c, offset, n);
  }
  auto joined = concat(m.real, rest);
  if (!joined) return out;
  out.add(sigma_normalize(*joined), cycle_.field().one());
  return out;
}

ChenVector ChenModule::act(const Element& x, const ChenVector& u) const {
  if (!x.algebra()->compatible_with(*cycle_.algebra())) throw PreconditionError("element from another algebra");
  ChenVector out(cycle_.field());
  for (const auto& [p, k] : u.terms()) {
    for (const auto& [m, a] : x.terms()) {
      const ChenVector image = act_monomial(m, p);
      for (const auto& [q, b] : image.terms()) out.add(q, k * a * b);
    }
  }
  return out;
}

Element ChenModule::sigma(const ChenVector& u) const {
  GElement g(u.field());
  for (const auto& [p, k] : u.terms()) g.add(p, k);
  return to_element(cycle_, g);
}

GElement ChenModule::sigma_g(const ChenVector& u) const {
  GElement g(u.field());
  for (const auto& [p, k] : u.terms()) g.add(p, k);
  return g;
}

ChenVector ChenModule::from_g(const GElement& g) const {
  ChenVector u(g.field());
  for (const auto& [p, k] : g.terms()) u.add(p, k);
  return u;
}

bool is_in_G_shape(const BasicCycle& cycle, const SigmaPrefix& p) {
  const Path& c = cycle.path();
  if (p.is_identity()) return p.c_power == 0 && p.tail.source == cycle.base();
  if (p.tail.range != cycle.base()) return false;
  if (p.tail.length() >= c.length() && (starts_with(p.tail, c) || ends_with(p.tail, c))) return false;
  return p.c_power == 0 || p.tail.source == cycle.base();
}

Element to_element(const BasicCycle& cycle, const GElement& g) {
  Element x(cycle.algebra());
  std::vector<std::pair<Monomial, Scalar>> raw;
  for (const auto& [p, k] : g.terms()) {
    if (p.is_identity()) {
      x += cycle.one().scaled(k);
      continue;
    }
    Path full = p.c_power == 0 ? p.tail : *concat(power(cycle.path(), p.c_power), p.tail);
    raw.emplace_back(Monomial{full, Path::vertex(full.range)}, k);
  }
  return x + Element::from_raw(cycle.algebra(), raw);
}

std::string to_string(const BasicCycle& cycle, const GElement& x) {
  if (x.is_zero()) return "0";
  const Graph& g = cycle.graph();
  std::string out;
  bool first = true;
  for (const auto& [p, k] : x.terms()) {
    const bool negative = k.is_negative();
    const Scalar magnitude = negative ? -k : k;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (p.is_identity()) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + " ";
    Path full = p.c_power == 0 ? p.tail : *concat(power(cycle.path(), p.c_power), p.tail);
    out += path_to_string(g, full);
  }
  return out;
}

nlohmann::json to_json(const Graph& g, const ChenVector& u) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [p, k] : u.terms()) {
    out.push_back(nlohmann::json::array({p.c_power, p.is_identity() ? std::string("1") : path_to_string(g, p.tail),
                                         k.to_string()}));
  }
  return out;
}

}  // namespace lpa
