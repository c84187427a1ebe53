#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

void check_relations(const GeneratorMap& theta) {
  for (const auto& [label, value] : relation_images(theta)) {
    INFO(label);
    CHECK(value.is_zero());
  }
}

}  // namespace

TEST_SUITE("morita") {

TEST_CASE("source elimination") {
  auto c2z = load_algebra("g_c2z");
  const ReductionStep step = source_eliminate(c2z, c2z->graph().vertex_id("z"));
  CHECK((step.algebra->graph() == *load_graph("g_c2")));
  CHECK((step.theta.edge_image(0) == parse(c2z, "e1")));
  CHECK((step.theta.unit_image() == parse(c2z, "v1 + v2")));
  check_relations(step.theta);

  auto e1 = load_algebra("g_e1");
  const ReductionStep s2 = source_eliminate(e1, e1->graph().vertex_id("u"));
  CHECK(s2.algebra->graph().vertex_count() == 1);
  CHECK(s2.algebra->graph().edge_count() == 1);
  CHECK(s2.algebra->graph().edge(0).name == "c");

  auto c2 = load_algebra("g_c2");
  CHECK_THROWS_AS(source_eliminate(c2, c2->graph().vertex_id("v1")), PreconditionError);
  auto single = Algebra::create(std::make_shared<const Graph>(std::vector<std::string>{"z"}, std::vector<EdgeSpec>{}));
  CHECK_THROWS_AS(source_eliminate(single, 0), PreconditionError);
}

TEST_CASE("collapsing a source cycle") {
  auto c2 = load_algebra("g_c2");
  auto [step, loop] = collapse_source_cycle(c2, path(c2, "e1.e2"));
  CHECK(step.algebra->graph().vertex_count() == 1);
  CHECK(step.algebra->graph().edge_count() == 1);
  CHECK((step.theta.edge_image(loop.edges[0]) == parse(c2, "e1.e2")));
  check_relations(step.theta);

  auto c2x = load_algebra("g_c2x");
  auto [sx, dx] = collapse_source_cycle(c2x, path(c2x, "e1.e2"));
  const Graph& f = sx.algebra->graph();
  CHECK(f.vertex_count() == 2);
  REQUIRE(f.find_edge("f_g").has_value());
  const Edge& fg = f.edge(*f.find_edge("f_g"));
  CHECK(f.vertex_name(fg.source) == "v1");
  CHECK(f.vertex_name(fg.range) == "w");
  CHECK((sx.theta.edge_image(*f.find_edge("f_g")) == parse(c2x, "e1.g")));
  CHECK((sx.theta.apply(parse(sx.algebra, "d*")) == parse(c2x, "e2*.e1*")));
  CHECK((sx.theta.apply(parse(sx.algebra, "d - 1")) == parse(c2x, "e1.e2 - v1 - w")));
  check_relations(sx.theta);

  auto r1 = load_algebra("r1");
  CHECK_THROWS_AS(collapse_source_cycle(r1, path(r1, "c")), PreconditionError);
  auto c2z = load_algebra("g_c2z");
  CHECK_THROWS_AS(collapse_source_cycle(c2z, path(c2z, "e1.e2")), PreconditionError);
}

TEST_CASE("fresh names avoid collisions") {
  auto g = std::make_shared<const Graph>(
      std::vector<std::string>{"d", "v2", "w"},
      std::vector<EdgeSpec>{{"e1", "d", "v2"}, {"e2", "v2", "d"}, {"g", "v2", "w"}, {"f_g", "w", "w"}});
  auto a = Algebra::create(g);
  auto [step, loop] = collapse_source_cycle(a, path(a, "e1.e2"));
  const Graph& f = step.algebra->graph();
  CHECK(f.edge(loop.edges[0]).name == "d_1");
  CHECK(f.find_edge("f_g_1").has_value());
  check_relations(step.theta);
}

TEST_CASE("reduction pipeline") {
  auto c2z = load_algebra("g_c2z");
  ReductionResult r = reduce_to_source_loop(c2z, path(c2z, "e1.e2"));
  CHECK(r.steps.size() == 2);
  CHECK(r.algebra->graph().vertex_count() == 1);
  CHECK(classify_closed_path(r.algebra->graph(), r.loop).source_loop);

  auto e1 = load_algebra("g_e1");
  r = reduce_to_source_loop(e1, path(e1, "c"));
  CHECK(r.steps.size() == 1);
  CHECK(r.algebra->graph().edge(r.loop.edges[0]).name == "c");

  auto r1 = load_algebra("r1");
  r = reduce_to_source_loop(r1, path(r1, "c"));
  CHECK(r.steps.empty());
  CHECK((r.algebra->graph() == r1->graph()));

  auto r2 = load_algebra("r2");
  CHECK_THROWS_AS(reduce_to_source_loop(r2, path(r2, "c")), PreconditionError);
}

TEST_CASE("reduction preserves the injectivity verdict") {
  Random rnd(97);
  int reduced = 0;
  for (int trial = 0; trial < 300 && reduced < 40; ++trial) {
    const int nv = rnd.uniform(2, 5);
    const int ne = rnd.uniform(2, 7);
    std::vector<std::string> vs;
    for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeSpec> es;
    for (int i = 0; i < ne; ++i) es.push_back({"e" + std::to_string(i), vs[rnd.uniform(0, nv - 1)], vs[rnd.uniform(0, nv - 1)]});
    auto a = Algebra::create(std::make_shared<const Graph>(vs, es));
    for (const auto& cyc : brute_force_cycles(a->graph())) {
      const Path c = Path::of_edges(a->graph(), cyc);
      if (!classify_closed_path(a->graph(), c).maximal_cycle) continue;
      const ReductionResult r = reduce_to_source_loop(a, c);
      CHECK(classify_closed_path(r.algebra->graph(), r.loop).source_loop);
      CHECK(classify_injectivity(r.algebra->graph(), r.loop).injective);
      check_relations(r.theta);
      const Element eps = r.theta.unit_image();
      for (int i = 0; i < 3; ++i) {
        const Element x = r.theta.apply(rnd.element(r.algebra, 3, 3));
        CHECK((eps * x * eps == x));
      }
      ++reduced;
    }
  }
  CHECK(reduced >= 20);
}

TEST_CASE("Prüfer correspondence through θ") {
  Random rnd(101);
  for (const char* name : {"g_c2z", "g_c2x"}) {
    auto e = load_algebra(name);
    const Path c = path(e, "e1.e2");
    const ReductionResult r = reduce_to_source_loop(e, c);
    const Element eps = r.theta.unit_image();
    const Element cm1 = Element::path(e, c) - Element::one(e);
    const Element d = Element::path(r.algebra, r.loop);
    CHECK((r.theta.apply(d) == Element::path(e, c)));
    for (unsigned k = 0; k <= 5; ++k) {
      CHECK((r.theta.apply((d - Element::one(r.algebra)).pow(k)) == eps * cm1.pow(k) * eps));
    }
    const ChenModule ce(BasicCycle(e, c));
    const ChenModule cf(BasicCycle(r.algebra, r.loop));
    for (int i = 0; i < 20; ++i) {
      const Element x = rnd.element(r.algebra, 3, 3);
      const unsigned n = static_cast<unsigned>(rnd.uniform(1, 4));
      const auto gf = g_representation(cf, x, n);
      const auto ge = g_representation(ce, r.theta.apply(x), n);
      for (unsigned t = 0; t < n; ++t) {
        CHECK(to_string(cf.cycle(), gf[t]) == to_string(ce.cycle(), ge[t]));
      }
    }
  }
}

TEST_CASE("generator map json") {
  auto c2 = load_algebra("g_c2");
  auto [step, loop] = collapse_source_cycle(c2, path(c2, "e1.e2"));
  CHECK(step.theta.to_json().dump() == R"({"edges":{"d":"e1.e2"},"vertices":{"v1":"v1"}})");
}

}  // TEST_SUITE
