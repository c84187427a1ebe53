#include "lpa/division.hpp"

#include <map>

#include "lpa/errors.hpp"

namespace lpa {
namespace {

class QuotientBuilder {
 public:
  QuotientBuilder(const ChenModule& chen) : chen_(chen), cycle_(chen.cycle()), remainder_(cycle_.field()) {}

  void add_monomial(const Monomial& m, const Scalar& k) {
    const Path& c = cycle_.path();
    const std::size_t n = c.length();
    const Path& ghost = m.ghost;

    bool on_orbit = ghost.source == cycle_.base();
    for (std::size_t i = 0; on_orbit && i < ghost.length(); ++i) on_orbit = ghost.edges[i] == c.edges[i % n];

    if (!on_orbit) {
      // m·c^M = 0, so m = -m(1 + c + ... + c^{M-1})(c - 1).
      const unsigned bound = static_cast<unsigned>((ghost.length() + n - 1) / n) + 1;
      for (unsigned power_count = 1; power_count <= bound; ++power_count) {
        if (!multiply_monomials(m, Monomial{power(c, power_count), Path::vertex(cycle_.base())})) {
          add_geometric(m, -k, power_count);
          return;
        }
      }
      throw InternalError("no annihilating power of c for a monomial off the c^∞ orbit");
    }
    if (ghost.is_vertex()) {
      strip_real(m.real, k);
      return;
    }
    // ghost = c^j e_1...e_r: αβ* = α e_{r+1}...e_n - αβ*(1 + ... + c^j)(c - 1).
    const std::size_t j = ghost.length() / n;
    const std::size_t r = ghost.length() % n;
    add_geometric(m, -k, static_cast<unsigned>(j + 1));
    strip_real(*concat(m.real, subpath(cycle_.graph(), c, r, n)), k);
  }

  DivisionResult finish() {
    return DivisionResult{Element::from_raw(cycle_.algebra(), quotient_), std::move(remainder_)};
  }

 private:
  // m·(1 + c + ... + c^{count-1}) times k, added to the quotient.
  void add_geometric(const Monomial& m, const Scalar& k, unsigned count) {
    if (count > 0) quotient_.emplace_back(m, k);
    for (unsigned i = 1; i < count; ++i) {
      auto product = multiply_monomials(m, Monomial{power(cycle_.path(), i), Path::vertex(cycle_.base())});
      if (product) quotient_.emplace_back(std::move(*product), k);
    }
  }

  // A real path ρ = ρ'c^k ranging at s(c): ρ = ρ' + ρ'(1 + ... + c^{k-1})(c - 1).
  void strip_real(Path rho, const Scalar& k) {
    const Path& c = cycle_.path();
    const std::size_t n = c.length();
    unsigned count = 0;
    while (rho.length() >= n && ends_with(rho, c)) {
      rho = subpath(cycle_.graph(), rho, 0, rho.length() - n);
      ++count;
    }
    add_geometric(Monomial{rho, Path::vertex(rho.range)}, k, count);
    if (!rho.is_vertex()) {
      remainder_.add(chen_.sigma_normalize(rho), k);
      return;
    }
    // s(c) = 1 + (1 - s(c))(c - 1)
    remainder_.add(chen_.identity_prefix(), k);
    for (VertexId w = 0; w < cycle_.graph().vertex_count(); ++w) {
      if (w != cycle_.base()) quotient_.emplace_back(Monomial{Path::vertex(w), Path::vertex(w)}, k);
    }
  }

  const ChenModule& chen_;
  const BasicCycle& cycle_;
  std::vector<std::pair<Monomial, Scalar>> quotient_;
  GElement remainder_;
};

}  // namespace

DivisionResult divide(const ChenModule& chen, const Element& beta) {
  const BasicCycle& cycle = chen.cycle();
  if (!beta.algebra()->compatible_with(*cycle.algebra())) throw PreconditionError("element from another algebra");
  const Element dividend = beta.algebra() == cycle.algebra() ? beta : beta.rebased(cycle.algebra());

  QuotientBuilder builder(chen);
  for (const auto& [m, k] : dividend.terms()) builder.add_monomial(m, k);
  DivisionResult result = builder.finish();

  if (!(chen.sigma_g(chen.rho(dividend)) == result.remainder)) {
    throw InternalError("division remainder disagrees with σ(ρ_{c^∞}(β))");
  }
  if (!(result.quotient * cycle.minus_one() + to_element(cycle, result.remainder) == dividend)) {
    throw InternalError("division identity β = q(c - 1) + r failed");
  }
  return result;
}

std::vector<GElement> g_representation(const ChenModule& chen, const Element& x, unsigned n) {
  if (n < 1) throw PreconditionError("G-representation level must be at least 1");
  std::vector<GElement> out;
  out.reserve(n);
  Element y = x;
  for (unsigned t = 0; t < n; ++t) {
    DivisionResult step = divide(chen, y);
    out.push_back(std::move(step.remainder));
    y = std::move(step.quotient);
  }
  return out;
}

Element reconstruct(const BasicCycle& cycle, const std::vector<GElement>& coefficients) {
  Element sum(cycle.algebra());
  Element power_term = cycle.one();
  for (const auto& g : coefficients) {
    sum += to_element(cycle, g) * power_term;
    power_term = power_term * cycle.minus_one();
  }
  return sum;
}

bool in_ideal_power(const ChenModule& chen, const Element& x, unsigned n) {
  for (const auto& g : g_representation(chen, x, n)) {
    if (!g.is_zero()) return false;
  }
  return true;
}

namespace {

void require_source_loop(const BasicCycle& cycle) {
  if (!cycle.is_source_loop()) {
    throw PreconditionError("unsupported configuration: '" + path_to_string(cycle.graph(), cycle.path()) +
                            "' is not a source loop");
  }
}

}  // namespace

bool ann_U_membership(const BasicCycle& cycle, const Element& x) {
  require_source_loop(cycle);
  // Image under L_K(E) -> L_K(E)/⟨E^0 \ {s(c)}⟩ ≅ K[t, t^{-1}]: paths ranging at
  // s(c) are powers of c, so αβ* = c^a (c^b)* maps to t^{a-b} and the rest to 0.
  std::map<long, Scalar> laurent;
  for (const auto& [m, k] : x.terms()) {
    if (m.range() != cycle.base()) continue;
    const long exponent = static_cast<long>(m.real.length()) - static_cast<long>(m.ghost.length());
    auto [it, inserted] = laurent.try_emplace(exponent, k);
    if (!inserted) it->second += k;
  }
  for (const auto& [e, k] : laurent) {
    if (!k.is_zero()) return false;
  }
  return true;
}

unsigned cstar_nilpotence_index(const BasicCycle& cycle, const Element& j) {
  require_source_loop(cycle);
  if (j.is_zero()) return 0;
  if (!ann_U_membership(cycle, j)) throw PreconditionError("element is not in the annihilator of U");

  // Bound from the normal form where c is the special edge at s(c): every
  // monomial αβ* there ranges outside s(c), and (c^{t+1})* kills it when
  // α = c^t η with η not starting with c.
  const Graph& g = cycle.graph();
  std::map<std::string, std::string> special;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (auto e = cycle.algebra()->special_edge(v)) special[g.vertex_name(v)] = g.edge(*e).name;
  }
  special[g.vertex_name(cycle.base())] = g.edge(cycle.path().edges.front()).name;
  const Element canonical = j.rebased(Algebra::create(cycle.algebra()->graph_ptr(), cycle.field(), special));
  unsigned bound = 0;
  for (const auto& [m, k] : canonical.terms()) {
    unsigned t = 0;
    while (t < m.real.length() && m.real.edges[t] == cycle.path().edges.front()) ++t;
    bound = std::max(bound, t + 1);
  }

  const Element cstar = cycle.element().star();
  Element y = j;
  for (unsigned n = 1; n <= bound; ++n) {
    y = cstar * y;
    if (y.is_zero()) return n;
  }
  throw InternalError("(c*)^n j did not vanish within the proof bound");
}

}  // namespace lpa
