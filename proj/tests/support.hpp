#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lpa/chen.hpp"
#include "lpa/division.hpp"
#include "lpa/element.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/morita.hpp"
#include "lpa/prufer.hpp"

namespace testing {

using namespace lpa;

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name + ".json"; }

inline std::shared_ptr<const Graph> load_graph(const std::string& name) {
  return std::make_shared<const Graph>(Graph::load(fixture_path(name)));
}

inline AlgebraPtr load_algebra(const std::string& name, Field field = Field::rationals(),
                               const std::map<std::string, std::string>& special = {}) {
  return Algebra::create(load_graph(name), field, special);
}

inline Element parse(const AlgebraPtr& a, const std::string& text) { return parse_element(a, text); }

inline Path path(const AlgebraPtr& a, const std::string& text) { return parse_path(a->graph(), text); }

/// A fixture together with the closed path the tests study on it.
struct Case {
  std::string name;
  std::string cycle;
};

inline const std::vector<Case>& division_cases() {
  static const std::vector<Case> cases = {{"r1", "c"},      {"r2", "c"},       {"g_e1", "c"},      {"g_s", "c"},
                                          {"g_c2", "e1.e2"}, {"g_c2z", "e1.e2"}, {"g_c2x", "e1.e2"}};
  return cases;
}

class Random {
 public:
  explicit Random(std::uint32_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937& engine() { return gen_; }

  Scalar scalar(const Field& f) {
    Scalar k = f.from_int(uniform(-3, 3));
    if (k.is_zero()) k = f.one();
    if (f.is_rational() && uniform(0, 3) == 0) k = k / f.from_int(uniform(2, 4));
    return k;
  }

  /// A random path of length <= max_len ending at `range`, grown backwards.
  Path path_into(const Graph& g, VertexId range, int max_len) {
    Path p = Path::vertex(range);
    const int len = uniform(0, max_len);
    for (int i = 0; i < len; ++i) {
      auto in = g.in_edges(p.source);
      if (in.empty()) break;
      const EdgeId e = in[static_cast<std::size_t>(uniform(0, static_cast<int>(in.size()) - 1))];
      p.edges.insert(p.edges.begin(), e);
      p.source = g.edge(e).source;
    }
    return p;
  }

  Monomial monomial(const Graph& g, int degree) {
    const auto r = static_cast<VertexId>(uniform(0, static_cast<int>(g.vertex_count()) - 1));
    const int a = uniform(0, degree);
    return Monomial{path_into(g, r, a), path_into(g, r, degree - a)};
  }

  Element element(const AlgebraPtr& alg, int degree = 4, int max_terms = 4) {
    std::vector<std::pair<Monomial, Scalar>> raw;
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) raw.emplace_back(monomial(alg->graph(), degree), scalar(alg->field()));
    return Element::from_raw(alg, raw);
  }

  GElement g_element(const ChenModule& chen, int max_len = 5, int max_terms = 3) {
    const BasicCycle& c = chen.cycle();
    GElement g(c.field());
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) g.add(chen.sigma_normalize(path_into(c.graph(), c.base(), max_len)), scalar(c.field()));
    return g;
  }

  SigmaPrefix chen_prefix(const ChenModule& chen, int max_len = 6) {
    return chen.sigma_normalize(path_into(chen.cycle().graph(), chen.cycle().base(), max_len));
  }

 private:
  std::mt19937 gen_;
};

/// Brute-force cycle oracle: every simple closed walk (no repeated vertex)
/// as the list of its rotations' least representative, found by trying
/// every edge sequence up to the vertex count.
inline std::vector<std::vector<EdgeId>> brute_force_cycles(const Graph& g) {
  std::set<std::vector<EdgeId>> found;
  std::vector<EdgeId> walk;
  std::function<void(VertexId, VertexId, std::vector<bool>&)> extend = [&](VertexId start, VertexId at,
                                                                          std::vector<bool>& seen) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).source != at) continue;
      walk.push_back(e);
      const VertexId next = g.edge(e).range;
      if (next == start) {
        std::vector<EdgeId> best = walk;
        for (std::size_t k = 1; k < walk.size(); ++k) {
          std::vector<EdgeId> rot(walk.begin() + static_cast<std::ptrdiff_t>(k), walk.end());
          rot.insert(rot.end(), walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(k));
          best = std::min(best, rot);
        }
        found.insert(best);
      } else if (!seen[next]) {
        seen[next] = true;
        extend(start, next, seen);
        seen[next] = false;
      }
      walk.pop_back();
    }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> seen(g.vertex_count(), false);
    seen[v] = true;
    extend(v, v, seen);
  }
  return {found.begin(), found.end()};
}

/// Oracle for Def. 6.2 by plain reachability and cycle listing.
inline bool brute_force_maximal(const Graph& g, const Path& c) {
  const auto cycles = brute_force_cycles(g);
  std::vector<EdgeId> mine = c.edges;
  std::vector<EdgeId> best = mine;
  for (std::size_t k = 1; k < mine.size(); ++k) {
    std::vector<EdgeId> rot(mine.begin() + static_cast<std::ptrdiff_t>(k), mine.end());
    rot.insert(rot.end(), mine.begin(), mine.begin() + static_cast<std::ptrdiff_t>(k));
    best = std::min(best, rot);
  }
  if (std::find(cycles.begin(), cycles.end(), best) == cycles.end()) return false;  // not a cycle
  // reach[u][w]: a path from u to w (u = w allowed)
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) reach[u][u] = true;
  for (const auto& e : g.edges()) reach[e.source][e.range] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (const auto& d : cycles) {
    if (d == best) continue;
    if (reach[g.edge(d.front()).source][c.source]) return false;
  }
  return true;
}

/// Explicit-path oracle for the Chen module: γ stands for γc^∞ without any
/// normalization beyond dropping trailing copies of c.
struct InfinitePath {
  std::vector<EdgeId> prefix;
};

inline std::vector<EdgeId> canonical_prefix(const Path& c, std::vector<EdgeId> gamma) {
  const std::size_t n = c.length();
  while (gamma.size() >= n && std::equal(c.edges.begin(), c.edges.end(), gamma.end() - static_cast<std::ptrdiff_t>(n))) {
    gamma.resize(gamma.size() - n);
  }
  return gamma;
}

/// Applies a generator (edge, ghost edge or vertex) to γc^∞; nullopt is 0.
inline std::optional<std::vector<EdgeId>> oracle_edge(const Graph& g, const Path& c, const std::vector<EdgeId>& gamma,
                                                      EdgeId e) {
  const VertexId start = gamma.empty() ? c.source : g.edge(gamma.front()).source;
  if (g.edge(e).range != start) return std::nullopt;
  std::vector<EdgeId> out{e};
  out.insert(out.end(), gamma.begin(), gamma.end());
  return canonical_prefix(c, out);
}

inline std::optional<std::vector<EdgeId>> oracle_ghost(const Path& c, std::vector<EdgeId> gamma, EdgeId e) {
  if (gamma.empty()) gamma = c.edges;
  if (gamma.front() != e) return std::nullopt;
  gamma.erase(gamma.begin());
  return canonical_prefix(c, gamma);
}

inline std::optional<std::vector<EdgeId>> oracle_vertex(const Graph& g, const Path& c, const std::vector<EdgeId>& gamma,
                                                        VertexId v) {
  const VertexId start = gamma.empty() ? c.source : g.edge(gamma.front()).source;
  if (start != v) return std::nullopt;
  return gamma;
}

/// The oracle prefix of a Chen basis vector.
inline std::vector<EdgeId> oracle_of(const ChenModule& chen, const SigmaPrefix& p) {
  return canonical_prefix(chen.cycle().path(), chen.prefix_path(p).edges);
}

/// Maps a Chen vector to {oracle prefix: coefficient}.
inline std::map<std::vector<EdgeId>, std::string> oracle_view(const ChenModule& chen, const ChenVector& u) {
  std::map<std::vector<EdgeId>, std::string> out;
  for (const auto& [p, k] : u.terms()) out[oracle_of(chen, p)] = k.to_string();
  return out;
}

/// Taylor coefficients at x = 1 of the Laurent polynomial Σ a_e x^e, as exact
/// rationals: the G-representation over R_1 ≅ K[x, x^{-1}].
inline std::vector<mpq_class> taylor_at_one(const std::map<long, mpq_class>& laurent, unsigned n) {
  std::vector<mpq_class> out(n, 0);
  for (const auto& [e, a] : laurent) {
    // d^k/dx^k x^e / k! at 1 = e(e-1)...(e-k+1)/k!
    mpq_class falling = 1;
    for (unsigned k = 0; k < n; ++k) {
      out[k] += a * falling;
      falling = falling * mpq_class(e - static_cast<long>(k)) / mpq_class(static_cast<long>(k) + 1);
    }
  }
  return out;
}

}  // namespace testing
