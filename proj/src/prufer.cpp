#include "lpa/prufer.hpp"

#include <algorithm>

#include "lpa/errors.hpp"

namespace lpa {

PruferElement::PruferElement(MnElement payload) : payload_(std::move(payload)) {
  if (payload_.level < 1 || payload_.coefficients.size() != payload_.level) {
    throw PreconditionError("M_n element needs exactly n >= 1 coefficients");
  }
  auto& coeffs = payload_.coefficients;
  auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const GElement& g) { return !g.is_zero(); });
  if (first == coeffs.end()) {
    coeffs.erase(coeffs.begin() + 1, coeffs.end());
    zero_ = true;
  } else {
    coeffs.erase(coeffs.begin(), first);
  }
  payload_.level = static_cast<unsigned>(coeffs.size());
}

MnElement PruferModule::make_element(const Element& x, unsigned n) const {
  return MnElement{n, g_representation(chen_, x, n)};
}

MnElement PruferModule::embed(const MnElement& u, unsigned level) const {
  if (level < u.level) throw PreconditionError("cannot embed M_" + std::to_string(u.level) + " into a lower level");
  MnElement out{level, std::vector<GElement>(level - u.level, zero_g())};
  out.coefficients.insert(out.coefficients.end(), u.coefficients.begin(), u.coefficients.end());
  return out;
}

Element PruferModule::representative(const MnElement& u) const { return reconstruct(cycle(), u.coefficients); }

PruferElement PruferModule::zero() const { return PruferElement(MnElement{1, {zero_g()}}); }

PruferElement PruferModule::generator(unsigned i) const {
  if (i < 1) throw PreconditionError("Prüfer generators are indexed from 1");
  MnElement u{i, std::vector<GElement>(i, zero_g())};
  u.coefficients.front().add(chen_.identity_prefix(), cycle().field().one());
  return PruferElement(std::move(u));
}

PruferElement PruferModule::from_element(const Element& x, unsigned n) const {
  return PruferElement(make_element(x, n));
}

PruferElement PruferModule::add(const PruferElement& a, const PruferElement& b) const {
  const unsigned level = std::max(a.payload().level, b.payload().level);
  MnElement sum = embed(a.payload(), level);
  const MnElement rhs = embed(b.payload(), level);
  for (unsigned t = 0; t < level; ++t) sum.coefficients[t] += rhs.coefficients[t];
  return PruferElement(std::move(sum));
}

PruferElement PruferModule::subtract(const PruferElement& a, const PruferElement& b) const {
  return add(a, scale(-cycle().field().one(), b));
}

PruferElement PruferModule::scale(const Scalar& k, const PruferElement& u) const {
  MnElement out = u.payload();
  for (auto& g : out.coefficients) g = g.scaled(k);
  return PruferElement(std::move(out));
}

PruferElement PruferModule::act(const Element& r, const PruferElement& u) const {
  if (u.is_zero()) return zero();
  return from_element(r * representative(u.payload()), u.payload().level);
}

PruferElement PruferModule::quotient_shift(const PruferElement& u, unsigned i) const {
  if (i < 1) throw PreconditionError("quotient shift index must be at least 1");
  if (u.level() <= i) return zero();
  const auto& coeffs = u.coefficients();
  const unsigned level = u.level() - i;
  return PruferElement(MnElement{level, std::vector<GElement>(coeffs.begin(), coeffs.begin() + level)});
}

namespace {

Path rotation(const Graph& g, const Path& c, unsigned shift) {
  // c_ℓ = e_ℓ...e_n e_1...e_{ℓ-1}
  std::vector<EdgeId> edges(c.edges.begin() + (shift - 1), c.edges.end());
  edges.insert(edges.end(), c.edges.begin(), c.edges.begin() + (shift - 1));
  return Path::of_edges(g, std::move(edges));
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

ShiftIsomorphism::ShiftIsomorphism(AlgebraPtr algebra, const Path& c, unsigned shift, unsigned level)
    : level_(level),
      first_(BasicCycle(algebra, c)),
      shifted_(BasicCycle(algebra, shift >= 1 && shift <= c.length() ? rotation(algebra->graph(), c, shift) : c)),
      forward_image_(algebra),
      backward_image_(algebra) {
  const std::size_t n = c.length();
  if (n < 2) throw PreconditionError("cyclic shifts need a closed path of length at least 2");
  if (shift < 1 || shift > n) throw PreconditionError("shift index out of range 1.." + std::to_string(n));
  if (level < 1) throw PreconditionError("level must be at least 1");
  const Graph& g = algebra->graph();
  const Field& field = algebra->field();

  forward_image_ = Element::path(algebra, subpath(g, c, 0, shift - 1));

  Element sum(algebra);
  for (unsigned i = 1; i <= level; ++i) {
    mpz_class k = binomial(level, i);
    if ((level - i) % 2 == 1) k = -k;
    sum += Element::path(algebra, power(c, i - 1)).scaled(field.from_fraction(k, 1));
  }
  Element head = Element::path(algebra, subpath(g, c, shift - 1, n));
  backward_image_ = (head * sum).scaled((level - 1) % 2 == 1 ? -field.one() : field.one());
}

MnElement ShiftIsomorphism::forward(const MnElement& u) const {
  if (u.level != level_) throw PreconditionError("element is not at the isomorphism's level");
  const Element x = reconstruct(first_.cycle(), u.coefficients);
  return MnElement{level_, g_representation(shifted_, x * forward_image_, level_)};
}

MnElement ShiftIsomorphism::backward(const MnElement& u) const {
  if (u.level != level_) throw PreconditionError("element is not at the isomorphism's level");
  const Element x = reconstruct(shifted_.cycle(), u.coefficients);
  return MnElement{level_, g_representation(first_, x * backward_image_, level_)};
}

InjectivityVerdict classify_injectivity(const Graph& g, const Path& c) {
  InjectivityVerdict verdict;
  verdict.flags = classify_closed_path(g, c);
  if (!verdict.flags.basic) throw PreconditionError("'" + path_to_string(g, c) + "' is not a basic closed path");
  verdict.injective = verdict.flags.maximal_cycle;
  if (!verdict.injective) {
    for (const Path& d : cycles_connecting_to(g, c.source, g.vertex_count())) {
      if (!is_cyclic_shift_of(g, d, c)) {
        verdict.witness = d;
        break;
      }
    }
    if (!verdict.witness) throw InternalError("non-maximal cycle without a witness cycle");
  }
  return verdict;
}

TruncatedPowerSeries::TruncatedPowerSeries(Field field, std::vector<Scalar> coefficients)
    : field_(field), coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw PreconditionError("power series order must be at least 1");
  for (const auto& k : coefficients_) {
    if (!(k.field() == field_)) throw PreconditionError("power series coefficient from another field");
  }
}

Scalar TruncatedPowerSeries::h(std::size_t j) const {
  if (j < 1 || j > coefficients_.size()) return field_.zero();
  return coefficients_[j - 1];
}

TruncatedPowerSeries series_mul(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b,
                                std::optional<std::size_t> order) {
  if (!(a.field() == b.field())) throw PreconditionError("power series over different fields");
  const std::size_t m = order.value_or(std::max(a.order(), b.order()));
  if (m < 1) throw PreconditionError("power series order must be at least 1");
  std::vector<Scalar> out(m, a.field().zero());
  for (std::size_t i = 0; i < std::min(m, a.order()); ++i) {
    if (a.coefficients()[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < m && j < b.order(); ++j) out[i + j] += a.coefficients()[i] * b.coefficients()[j];
  }
  return TruncatedPowerSeries(a.field(), std::move(out));
}

TruncatedPowerSeries series_invert(const TruncatedPowerSeries& h, std::size_t order) {
  if (order < 1) throw PreconditionError("power series order must be at least 1");
  if (h.h(1).is_zero()) throw PreconditionError("not invertible: constant term is zero");
  const Scalar lead_inverse = h.h(1).inverse();
  std::vector<Scalar> inv(order, h.field().zero());
  inv[0] = lead_inverse;
  for (std::size_t k = 1; k < order; ++k) {
    Scalar acc = h.field().zero();
    for (std::size_t j = 1; j <= k; ++j) acc += h.h(j + 1) * inv[k - j];
    inv[k] = -(acc * lead_inverse);
  }
  return TruncatedPowerSeries(h.field(), std::move(inv));
}

namespace {

void require_source_loop(const PruferModule& module) {
  if (!module.cycle().is_source_loop()) {
    throw PreconditionError("unsupported configuration: '" +
                            path_to_string(module.cycle().graph(), module.cycle().path()) + "' is not a source loop");
  }
}

}  // namespace

PruferElement endo_apply(const PruferModule& module, const TruncatedPowerSeries& h, const PruferElement& u) {
  require_source_loop(module);
  if (!(h.field() == module.cycle().field())) throw PreconditionError("power series over another field");
  if (u.is_zero()) return u;
  // Right product by Σ h_j (c - 1)^{j-1} convolves the coefficient vector.
  const auto& g = u.coefficients();
  const unsigned level = u.level();
  MnElement out{level, std::vector<GElement>(level, GElement(h.field()))};
  for (unsigned k = 0; k < level; ++k) {
    for (unsigned t = 0; t <= k; ++t) {
      const Scalar hj = h.h(k - t + 1);
      if (!hj.is_zero()) out.coefficients[k] += g[t].scaled(hj);
    }
  }
  return PruferElement(std::move(out));
}

PruferElement solve_divisibility(const PruferModule& module, const Element& ell, const PruferElement& u) {
  require_source_loop(module);
  const BasicCycle& cycle = module.cycle();
  if (ann_U_membership(cycle, ell)) throw NoSolutionError("no solution: element annihilates the Prüfer module");
  if (u.is_zero()) return u;

  // The (c - 1)-adic valuation of ℓ is at most the spread of its Laurent image.
  long low = 0, high = 0;
  bool seen = false;
  for (const auto& [m, k] : ell.terms()) {
    if (m.range() != cycle.base()) continue;
    const long e = static_cast<long>(m.real.length()) - static_cast<long>(m.ghost.length());
    low = seen ? std::min(low, e) : e;
    high = seen ? std::max(high, e) : e;
    seen = true;
  }
  const unsigned probe = static_cast<unsigned>(high - low) + 1;
  const auto scalar_of = [&](const GElement& g) { return g.coefficient(module.chen().identity_prefix()); };
  const std::vector<GElement> head = g_representation(module.chen(), ell, probe);
  unsigned s = 0;
  while (s < probe && head[s].is_zero()) ++s;
  if (s == probe) throw InternalError("valuation of a non-annihilating element exceeded its bound");

  const unsigned n = u.level();
  const std::vector<GElement> hs = g_representation(module.chen(), ell, n + s);
  for (const auto& g : hs) {
    if (g.size() > 1 || (g.size() == 1 && !g.terms().begin()->first.is_identity())) {
      throw InternalError("non-scalar G-coefficient over a source loop");
    }
  }
  // h_{s+1} X_i + h_{s+2} X_{i-1} + ... + h_{s+i} X_1 = k_i
  const Field& field = cycle.field();
  const Scalar pivot_inverse = scalar_of(hs[s]).inverse();
  std::vector<Scalar> x(n, field.zero());
  for (unsigned i = 0; i < n; ++i) {
    Scalar rhs = scalar_of(u.coefficients()[i]);
    for (unsigned t = 0; t < i; ++t) rhs -= scalar_of(hs[s + i - t]) * x[t];
    x[i] = rhs * pivot_inverse;
  }
  MnElement solution{n + s, std::vector<GElement>(n + s, GElement(field))};
  for (unsigned i = 0; i < n; ++i) solution.coefficients[i].add(module.chen().identity_prefix(), x[i]);
  PruferElement result(std::move(solution));
  if (!(module.act(ell, result) == u)) throw InternalError("divisibility solution failed verification");
  return result;
}

}  // namespace lpa
