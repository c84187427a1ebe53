#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpa/element.hpp"

namespace lpa {

/// A basic closed path c of L_K(E) with the elements c and c - 1 cached.
class BasicCycle {
 public:
  /// Throws PreconditionError unless c is a basic closed path of the algebra's graph.
  BasicCycle(AlgebraPtr algebra, Path c);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Graph& graph() const noexcept { return algebra_->graph(); }
  const Field& field() const noexcept { return algebra_->field(); }
  const Path& path() const noexcept { return path_; }
  VertexId base() const noexcept { return path_.source; }
  std::size_t length() const noexcept { return path_.length(); }
  const ClosedPathClass& classification() const noexcept { return class_; }
  bool is_source_loop() const noexcept { return class_.source_loop; }

  const Element& element() const noexcept { return c_; }
  const Element& minus_one() const noexcept { return c_minus_one_; }
  const Element& one() const noexcept { return one_; }
  /// 1 + c + ... + c^{count-1}
  Element geometric_sum(unsigned count) const;

 private:
  AlgebraPtr algebra_;
  Path path_;
  ClosedPathClass class_;
  Element c_;
  Element c_minus_one_;
  Element one_;
};

/// σ-normal prefix γ = c^{c_power}·tail of a basis path γc^∞. The tail is
/// either the vertex s(c) (then c_power is 0 and γ = 1) or a path in A_c.
struct SigmaPrefix {
  unsigned c_power = 0;
  Path tail;

  bool is_identity() const noexcept { return tail.is_vertex(); }
  friend bool operator==(const SigmaPrefix&, const SigmaPrefix&) = default;
};

/// (c_power, tail length, tail lex).
struct SigmaPrefixOrder {
  bool operator()(const SigmaPrefix& a, const SigmaPrefix& b) const;
};

/// Finite combination of σ-normal prefixes. The tag keeps Chen vectors and
/// remainder-space elements apart even though they share a representation.
template <class Tag>
class PrefixCombination {
 public:
  using Terms = std::map<SigmaPrefix, Scalar, SigmaPrefixOrder>;

  explicit PrefixCombination(Field field) : field_(field) {}

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const SigmaPrefix& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add(const SigmaPrefix& p, const Scalar& k) {
    if (k.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, k);
    if (!inserted) {
      it->second += k;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PrefixCombination& operator+=(const PrefixCombination& rhs) {
    for (const auto& [p, k] : rhs.terms_) add(p, k);
    return *this;
  }
  PrefixCombination& operator-=(const PrefixCombination& rhs) {
    for (const auto& [p, k] : rhs.terms_) add(p, -k);
    return *this;
  }
  PrefixCombination scaled(const Scalar& k) const {
    PrefixCombination out(field_);
    if (k.is_zero()) return out;
    for (const auto& [p, c] : terms_) out.terms_.emplace(p, c * k);
    return out;
  }
  PrefixCombination operator-() const { return scaled(-field_.one()); }

  friend PrefixCombination operator+(PrefixCombination a, const PrefixCombination& b) { return a += b; }
  friend PrefixCombination operator-(PrefixCombination a, const PrefixCombination& b) { return a -= b; }
  friend bool operator==(const PrefixCombination& a, const PrefixCombination& b) { return a.terms_ == b.terms_; }

 private:
  Field field_;
  Terms terms_;
};

struct ChenTag {};
struct RemainderTag {};

/// A vector of the Chen simple module V_{[c^∞]}; the prefix γ stands for γc^∞.
using ChenVector = PrefixCombination<ChenTag>;
/// An element of G = span(1, A_c, c^i A_c); the identity prefix is the scalar part.
using GElement = PrefixCombination<RemainderTag>;

/// The Chen simple module V_{[c^∞]}, stored through σ-normal prefixes.
class ChenModule {
 public:
  explicit ChenModule(BasicCycle cycle) : cycle_(std::move(cycle)) {}

  const BasicCycle& cycle() const noexcept { return cycle_; }

  /// Strips trailing then leading powers of c. Requires r(γ) = s(c).
  SigmaPrefix sigma_normalize(const Path& gamma) const;
  /// The finite path c^{c_power}·tail (the vertex s(c) for the identity prefix).
  Path prefix_path(const SigmaPrefix& p) const;

  SigmaPrefix identity_prefix() const { return SigmaPrefix{0, Path::vertex(cycle_.base())}; }
  ChenVector basis(const SigmaPrefix& p) const;
  /// The basis vector c^∞.
  ChenVector generator() const { return basis(identity_prefix()); }

  ChenVector act(const Element& x, const ChenVector& u) const;
  /// r ↦ r·c^∞
  ChenVector rho(const Element& x) const { return act(x, generator()); }
  /// Prefix read-back; inverse of rho restricted to G.
  Element sigma(const ChenVector& u) const;
  GElement sigma_g(const ChenVector& u) const;
  ChenVector from_g(const GElement& g) const;

 private:
  ChenVector act_monomial(const Monomial& m, const SigmaPrefix& p) const;

  BasicCycle cycle_;
};

/// The element of L_K(E) represented by g.
Element to_element(const BasicCycle& cycle, const GElement& g);
bool is_in_G_shape(const BasicCycle& cycle, const SigmaPrefix& p);

/// "k", "k c^2.d", ... joined like elements; the identity prefix prints as a bare scalar.
std::string to_string(const BasicCycle& cycle, const GElement& x);
/// [[c_power, "tail", "coefficient"], ...]
nlohmann::json to_json(const Graph& g, const ChenVector& u);

}  // namespace lpa
