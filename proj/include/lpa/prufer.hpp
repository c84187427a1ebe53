#pragma once

#include <optional>
#include <vector>

#include "lpa/division.hpp"

namespace lpa {

/// x + L(c - 1)^n stored through the G-representation (g_1, ..., g_n).
struct MnElement {
  unsigned level = 1;
  std::vector<GElement> coefficients;

  friend bool operator==(const MnElement&, const MnElement&) = default;
};

/// An element of U_{E,c-1}: x·α_n for the payload x + L(c - 1)^n.
/// Always canonical: the leading coefficient is nonzero, and the zero
/// element is the level-1 vector (0).
class PruferElement {
 public:
  explicit PruferElement(MnElement payload);

  const MnElement& payload() const noexcept { return payload_; }
  /// 0 for the zero element.
  unsigned level() const noexcept { return zero_ ? 0 : payload_.level; }
  bool is_zero() const noexcept { return zero_; }
  const std::vector<GElement>& coefficients() const noexcept { return payload_.coefficients; }

  friend bool operator==(const PruferElement& a, const PruferElement& b) { return a.payload_ == b.payload_; }

 private:
  MnElement payload_;
  bool zero_ = false;
};

class PruferModule {
 public:
  explicit PruferModule(ChenModule chen) : chen_(std::move(chen)) {}
  explicit PruferModule(BasicCycle cycle) : chen_(std::move(cycle)) {}

  const ChenModule& chen() const noexcept { return chen_; }
  const BasicCycle& cycle() const noexcept { return chen_.cycle(); }

  MnElement make_element(const Element& x, unsigned n) const;
  /// ψ_{n,ℓ}: right multiplication by (c - 1)^{ℓ-n}, a shift of the coefficients.
  MnElement embed(const MnElement& u, unsigned level) const;
  Element representative(const MnElement& u) const;

  PruferElement zero() const;
  /// α_i = ψ_i(1 + L(c - 1)^i), i >= 1.
  PruferElement generator(unsigned i) const;
  /// x·α_n
  PruferElement from_element(const Element& x, unsigned n) const;

  PruferElement add(const PruferElement& a, const PruferElement& b) const;
  PruferElement subtract(const PruferElement& a, const PruferElement& b) const;
  PruferElement scale(const Scalar& k, const PruferElement& u) const;

  PruferElement act(const Element& r, const PruferElement& u) const;
  unsigned submodule_level(const PruferElement& u) const { return u.level(); }
  /// φ_i: α_k ↦ α_{k-i}.
  PruferElement quotient_shift(const PruferElement& u, unsigned i) const;

 private:
  GElement zero_g() const { return GElement(cycle().field()); }

  ChenModule chen_;
};

/// M_m for c_1 = e_1...e_n and M_m for c_ℓ = e_ℓ...e_n e_1...e_{ℓ-1}.
class ShiftIsomorphism {
 public:
  ShiftIsomorphism(AlgebraPtr algebra, const Path& c, unsigned shift, unsigned level);

  const BasicCycle& first() const noexcept { return first_.cycle(); }
  const BasicCycle& shifted() const noexcept { return shifted_.cycle(); }

  /// φ_{1,ℓ}: 1 ↦ e_1...e_{ℓ-1}
  MnElement forward(const MnElement& u) const;
  /// φ_{ℓ,1}: 1 ↦ (-1)^{m-1} e_ℓ...e_n Σ C(m,i)(-1)^{m-i} c_1^{i-1}
  MnElement backward(const MnElement& u) const;

  const Element& forward_image() const noexcept { return forward_image_; }
  const Element& backward_image() const noexcept { return backward_image_; }

 private:
  unsigned level_;
  ChenModule first_;
  ChenModule shifted_;
  Element forward_image_;
  Element backward_image_;
};

struct InjectivityVerdict {
  bool injective = false;
  ClosedPathClass flags;
  /// A cycle connecting to s(c) that is not a rotation of c.
  std::optional<Path> witness;
};

/// U_{E,c-1} is injective iff c is a maximal cycle.
InjectivityVerdict classify_injectivity(const Graph& g, const Path& c);

/// h_1 + h_2 x + ... + h_m x^{m-1}; coefficients beyond the order are zero.
class TruncatedPowerSeries {
 public:
  TruncatedPowerSeries(Field field, std::vector<Scalar> coefficients);

  const Field& field() const noexcept { return field_; }
  std::size_t order() const noexcept { return coefficients_.size(); }
  const std::vector<Scalar>& coefficients() const noexcept { return coefficients_; }
  /// h_j, 1-based; zero beyond the order.
  Scalar h(std::size_t j) const;

  friend bool operator==(const TruncatedPowerSeries&, const TruncatedPowerSeries&) = default;

 private:
  Field field_;
  std::vector<Scalar> coefficients_;
};

/// Cauchy product truncated at `order` (default: the larger input order).
TruncatedPowerSeries series_mul(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b,
                                std::optional<std::size_t> order = std::nullopt);
/// H^{-1} mod x^order; PreconditionError when h_1 = 0.
TruncatedPowerSeries series_invert(const TruncatedPowerSeries& h, std::size_t order);

/// φ_H(α_i) = h_1 α_i + ... + h_i α_1, for a source loop.
PruferElement endo_apply(const PruferModule& module, const TruncatedPowerSeries& h, const PruferElement& u);

/// X with ℓ·X = u, for a source loop; NoSolutionError when ℓ annihilates U.
PruferElement solve_divisibility(const PruferModule& module, const Element& ell, const PruferElement& u);

}  // namespace lpa
