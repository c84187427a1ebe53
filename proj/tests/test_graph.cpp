#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_SUITE("graph") {

TEST_CASE("graph json round trip and validation") {
  auto g = load_graph("g_c2x");
  CHECK(g->vertex_count() == 3);
  CHECK(g->edge_count() == 3);
  CHECK(Graph::from_json(g->to_json()) == *g);
  CHECK_THROWS_AS(Graph::from_json(nlohmann::json::parse(R"({"vertices":["v","v"],"edges":[]})")), ParseError);
  CHECK_THROWS_AS(Graph::from_json(nlohmann::json::parse(R"({"vertices":["v"],"edges":[{"name":"e","src":"v","dst":"x"}]})")),
                  ParseError);
  CHECK_THROWS_AS(Graph::from_json(nlohmann::json::parse(R"({"vertices":["v"],"edges":[{"name":"v","src":"v","dst":"v"}]})")),
                  ParseError);
  CHECK_THROWS_AS(Graph::load(fixture_path("missing")), ParseError);
}

TEST_CASE("paths compose and parse") {
  auto g = load_graph("r2");
  const Path p = parse_path(*g, "c^2.d");
  CHECK(p.length() == 3);
  CHECK(path_to_string(*g, p) == "c^2.d");
  CHECK(parse_path(*g, "v").is_vertex());
  auto e1 = load_graph("g_e1");
  CHECK_THROWS_AS(parse_path(*e1, "c.e"), PreconditionError);
  CHECK_THROWS_AS(parse_path(*e1, "q"), ParseError);
}

TEST_CASE("closed path classification on fixtures") {
  auto r1 = load_graph("r1");
  const auto all = classify_closed_path(*r1, parse_path(*r1, "c"));
  CHECK(all.closed);
  CHECK(all.simple);
  CHECK(all.basic);
  CHECK(all.cycle);
  CHECK(all.loop);
  CHECK(all.source_cycle);
  CHECK(all.source_loop);
  CHECK(all.maximal_cycle);

  auto r2 = load_graph("r2");
  const auto f = classify_closed_path(*r2, parse_path(*r2, "c"));
  CHECK((f.closed && f.simple && f.basic && f.cycle && f.loop));
  CHECK_FALSE(f.source_cycle);
  CHECK_FALSE(f.source_loop);
  CHECK_FALSE(f.maximal_cycle);

  const auto cc = classify_closed_path(*r1, parse_path(*r1, "c.c"));
  CHECK(cc.closed);
  CHECK_FALSE(cc.basic);

  auto e1 = load_graph("g_e1");
  CHECK(classify_closed_path(*e1, parse_path(*e1, "c")).maximal_cycle);
  CHECK_FALSE(classify_closed_path(*e1, parse_path(*e1, "c")).source_cycle);
  CHECK_FALSE(classify_closed_path(*e1, parse_path(*e1, "e")).closed);
  CHECK_THROWS_AS(classify_closed_path(*e1, parse_path(*e1, "v")), PreconditionError);

  auto c2 = load_graph("g_c2");
  const auto two = classify_closed_path(*c2, parse_path(*c2, "e1.e2"));
  CHECK((two.cycle && two.source_cycle && two.maximal_cycle && !two.loop && !two.source_loop));
  auto c2z = load_graph("g_c2z");
  const auto z = classify_closed_path(*c2z, parse_path(*c2z, "e1.e2"));
  CHECK((z.maximal_cycle && !z.source_cycle));
}

TEST_CASE("cyclic shifts") {
  auto c2 = load_graph("g_c2");
  const auto shifts = cyclic_shifts(*c2, parse_path(*c2, "e1.e2"));
  REQUIRE(shifts.size() == 2);
  CHECK(path_to_string(*c2, shifts[0]) == "e1.e2");
  CHECK(path_to_string(*c2, shifts[1]) == "e2.e1");
  auto r1 = load_graph("r1");
  CHECK(cyclic_shifts(*r1, parse_path(*r1, "c")).size() == 1);
  const auto cc = cyclic_shifts(*r1, parse_path(*r1, "c.c"));
  REQUIRE(cc.size() == 2);
  CHECK(cc[0] == cc[1]);
  auto e1 = load_graph("g_e1");
  CHECK_THROWS_AS(cyclic_shifts(*e1, parse_path(*e1, "e")), PreconditionError);
}

TEST_CASE("connectivity") {
  auto e1 = load_graph("g_e1");
  CHECK(connects_to(*e1, e1->vertex_id("u"), e1->vertex_id("v")));
  CHECK_FALSE(connects_to(*e1, e1->vertex_id("v"), e1->vertex_id("u")));
  auto r1 = load_graph("r1");
  CHECK(connects_to(*r1, 0, 0));
}

TEST_CASE("A_c enumeration") {
  auto e1 = load_graph("g_e1");
  auto ac = enumerate_Ac(*e1, parse_path(*e1, "c"), 5);
  REQUIRE(ac.size() == 1);
  CHECK(path_to_string(*e1, ac[0]) == "e");
  auto r1 = load_graph("r1");
  CHECK(enumerate_Ac(*r1, parse_path(*r1, "c"), 5).empty());
  auto r2 = load_graph("r2");
  ac = enumerate_Ac(*r2, parse_path(*r2, "c"), 2);
  REQUIRE(ac.size() == 2);
  CHECK(path_to_string(*r2, ac[0]) == "d");
  CHECK(path_to_string(*r2, ac[1]) == "d^2");
  CHECK_THROWS_AS(enumerate_Ac(*r1, parse_path(*r1, "c.c"), 3), PreconditionError);

  // members never start or end with c and all range at s(c)
  const Path c = parse_path(*r2, "c");
  for (const Path& p : enumerate_Ac(*r2, c, 6)) {
    CHECK(p.range == c.source);
    CHECK_FALSE(starts_with(p, c));
    CHECK_FALSE(ends_with(p, c));
  }
}

TEST_CASE("cycles connecting to a vertex") {
  auto r2 = load_graph("r2");
  auto cycles = cycles_connecting_to(*r2, 0, 3);
  REQUIRE(cycles.size() == 2);
  CHECK(path_to_string(*r2, cycles[0]) == "c");
  CHECK(path_to_string(*r2, cycles[1]) == "d");
  auto e1 = load_graph("g_e1");
  cycles = cycles_connecting_to(*e1, e1->vertex_id("v"), 3);
  REQUIRE(cycles.size() == 1);
  CHECK(path_to_string(*e1, cycles[0]) == "c");
  Graph dag({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "a", "c"}});
  CHECK(cycles_connecting_to(dag, 2, 5).empty());
}

TEST_CASE("maximal cycle agrees with brute force on all small random graphs") {
  Random rnd(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int nv = rnd.uniform(1, 4);
    const int ne = rnd.uniform(1, 6);
    std::vector<std::string> vs;
    for (int i = 0; i < nv; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeSpec> es;
    for (int i = 0; i < ne; ++i) es.push_back({"e" + std::to_string(i), vs[rnd.uniform(0, nv - 1)], vs[rnd.uniform(0, nv - 1)]});
    Graph g(vs, es);
    for (const auto& cyc : brute_force_cycles(g)) {
      const Path p = Path::of_edges(g, cyc);
      const auto flags = classify_closed_path(g, p);
      CHECK(flags.cycle);
      CHECK(flags.maximal_cycle == brute_force_maximal(g, p));
      // shifts classify alike
      for (const Path& s : cyclic_shifts(g, p)) {
        const auto sf = classify_closed_path(g, s);
        CHECK(sf.closed == flags.closed);
        CHECK(sf.simple == flags.simple);
        CHECK(sf.basic == flags.basic);
        CHECK(sf.cycle == flags.cycle);
      }
      // flag implications
      if (flags.source_cycle) CHECK(flags.maximal_cycle);
      if (flags.source_loop) CHECK((flags.source_cycle && flags.loop));
    }
  }
}

}  // TEST_SUITE
