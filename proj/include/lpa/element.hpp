#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// The Leavitt path algebra L_K(E) of a finite graph over an exact field,
/// together with the choice of special edge per non-sink vertex that fixes
/// the canonical basis.
class Algebra {
 public:
  /// `special_edges` maps vertex names to edge names; vertices not listed
  /// use the first edge of s^{-1}(v) in declaration order.
  static std::shared_ptr<const Algebra> create(std::shared_ptr<const Graph> graph, Field field = Field::rationals(),
                                               const std::map<std::string, std::string>& special_edges = {});

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const noexcept { return graph_; }
  const Field& field() const noexcept { return field_; }
  /// nullopt for sinks.
  std::optional<EdgeId> special_edge(VertexId v) const { return special_.at(v); }
  bool is_special(EdgeId e) const;

  /// Same graph and field.
  bool compatible_with(const Algebra& other) const;

 private:
  Algebra() = default;
  std::shared_ptr<const Graph> graph_;
  Field field_;
  std::vector<std::optional<EdgeId>> special_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// The monomial αβ* with r(α) = r(β).
struct Monomial {
  Path real;
  Path ghost;

  VertexId range() const noexcept { return real.range; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// (|α|, |β|, α lex, β lex).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Product of two monomials by (CK1); nullopt when it vanishes. The result
/// may still need CK2 reduction.
std::optional<Monomial> multiply_monomials(const Monomial& a, const Monomial& b);

/// How the CK2 rewriting worklist is drained. Both give the same normal form.
enum class ReductionOrder { DepthFirst, BreadthFirst };

/// An element of L_K(E) in canonical normal form: a finite combination of
/// basis monomials with nonzero coefficients.
class Element {
 public:
  using Terms = std::map<Monomial, Scalar, MonomialOrder>;

  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  static Element zero(AlgebraPtr algebra) { return Element(std::move(algebra)); }
  static Element one(const AlgebraPtr& algebra);
  static Element scalar(const AlgebraPtr& algebra, const Scalar& k);
  static Element vertex(const AlgebraPtr& algebra, VertexId v);
  static Element edge(const AlgebraPtr& algebra, EdgeId e);
  static Element ghost_edge(const AlgebraPtr& algebra, EdgeId e);
  /// A real path α, or its ghost α*.
  static Element path(const AlgebraPtr& algebra, const Path& p);
  static Element ghost_path(const AlgebraPtr& algebra, const Path& p);
  static Element monomial(const AlgebraPtr& algebra, const Monomial& m, const Scalar& k);
  /// Normalizes an arbitrary combination of (composable) monomials.
  static Element from_raw(const AlgebraPtr& algebra, const std::vector<std::pair<Monomial, Scalar>>& raw,
                          ReductionOrder order = ReductionOrder::DepthFirst);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Coefficient of a basis monomial (zero when absent).
  Scalar coefficient(const Monomial& m) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element operator-() const;
  Element scaled(const Scalar& k) const;
  Element star() const;
  Element pow(unsigned n) const;
  /// The same element renormalized for another basis choice on the same graph.
  Element rebased(const AlgebraPtr& target) const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& k, const Element& x) { return x.scaled(k); }
  friend bool operator==(const Element& a, const Element& b);

 private:
  void check_compatible(const Element& other) const;
  void add_reduced(const Monomial& m, const Scalar& k, ReductionOrder order);

  AlgebraPtr algebra_;
  Terms terms_;
};

/// Serializes with canonical term order, in the expression grammar.
std::string to_string(const Element& x);
std::string monomial_to_string(const Graph& g, const Monomial& m);

/// Parses the expression grammar:
///   element := ['+'|'-'] term (('+'|'-') term)*
///   term    := rational product? | product
///   product := atom ('.' atom)*
///   atom    := (ident | '1' | '(' element ')') ('^' nat)? ('*')?
Element parse_element(const AlgebraPtr& algebra, const std::string& text);

}  // namespace lpa
