#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lpa/element.hpp"

namespace lpa {

/// A homomorphism θ: L_K(F) → L_K(E) given on the generators of L_K(F).
/// Ghost edges map to the stars of the edge images.
class GeneratorMap {
 public:
  GeneratorMap(AlgebraPtr domain, AlgebraPtr codomain, std::vector<Element> vertex_images,
               std::vector<Element> edge_images);

  /// The identity of L_K(E).
  static GeneratorMap identity(const AlgebraPtr& algebra);

  const AlgebraPtr& domain() const noexcept { return domain_; }
  const AlgebraPtr& codomain() const noexcept { return codomain_; }
  const Element& vertex_image(VertexId v) const { return vertex_images_.at(v); }
  const Element& edge_image(EdgeId e) const { return edge_images_.at(e); }

  Element apply(const Element& x) const;
  /// ε = θ(1_F).
  Element unit_image() const;

  /// this ∘ inner
  GeneratorMap compose(const GeneratorMap& inner) const;

  /// {"vertices": {name: image}, "edges": {name: image}}
  nlohmann::json to_json() const;

 private:
  Element path_image(const Path& p) const;

  AlgebraPtr domain_;
  AlgebraPtr codomain_;
  std::vector<Element> vertex_images_;
  std::vector<Element> edge_images_;
};

/// θ applied to every defining relation of L_K(F) (V, E1, E2, CK1, CK2),
/// labelled; all entries vanish for a homomorphism.
std::vector<std::pair<std::string, Element>> relation_images(const GeneratorMap& theta);

struct ReductionStep {
  std::string operation;  // "eliminate" or "collapse"
  std::string subject;    // the removed source vertex or the collapsed cycle
  AlgebraPtr algebra;     // L_K of the reduced graph
  GeneratorMap theta;     // reduced → previous
};

/// E∖z with the inclusion L_K(E∖z) ≅ (1 - z)L_K(E)(1 - z).
ReductionStep source_eliminate(const AlgebraPtr& algebra, VertexId z);

/// Collapses a source cycle of length >= 2 to a loop d; the second component
/// is d in the reduced graph.
std::pair<ReductionStep, Path> collapse_source_cycle(const AlgebraPtr& algebra, const Path& c);

struct ReductionResult {
  std::vector<ReductionStep> steps;
  AlgebraPtr algebra;   // the final graph's algebra
  Path loop;            // the source loop corresponding to c
  GeneratorMap theta;   // final → original, the composite of the chain
};

/// Source eliminations (least source name first) until c is a source cycle,
/// then a collapse when |c| >= 2. Requires c to be a maximal cycle.
ReductionResult reduce_to_source_loop(const AlgebraPtr& algebra, const Path& c);

nlohmann::json to_json(const ReductionResult& result);

}  // namespace lpa
