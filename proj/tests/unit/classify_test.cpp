#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "forcinglab/classify.hpp"
#include "forcinglab/families.hpp"
#include "forcinglab/random_families.hpp"
#include "support/corpus.hpp"
#include "support/named_graphs.hpp"

using namespace forcinglab;

namespace {

// Test-side detector for the classic threshold obstructions: an induced
// P4 (degrees 1,1,2,2), C4 (4 edges, all degrees 2) or 2K2 (2 edges, all
// degrees 1) on some 4 vertices.
bool has_threshold_obstruction(const Graph& g) {
  bool found = false;
  for_each_subset_of_size(g.order(), 4, [&](VertexSet s) {
    if (found) return;
    const Graph h = induced_subgraph(g, s);
    int deg[4];
    for (int v = 0; v < 4; ++v) deg[v] = h.degree(v);
    std::sort(deg, deg + 4);
    const int m = h.edge_count();
    if (m == 2 && deg[0] == 1) found = true;                              // 2K2
    if (m == 3 && deg[0] == 1 && deg[1] == 1 && deg[3] == 2) found = true;  // P4
    if (m == 4 && deg[0] == 2 && deg[3] == 2) found = true;               // C4
  });
  return found;
}

Graph realize_witness(const ConstructionTree& t) {
  return relabel(from_construction_tree(t), leaf_labels(t));
}

}  // namespace

TEST_CASE("component shapes: complete, complete bipartite, other") {
  const Graph g = disjoint_union(disjoint_union(generate(Family::cycle, 4),
                                                generate(Family::complete, 2)),
                                 Graph(1));
  const auto shapes = classify_component_shape(g);
  REQUIRE(shapes.size() == 3);

  CHECK(shapes[0].vertices == VertexSet::of({0, 1, 2, 3}));
  CHECK(shapes[0].tag == ShapeTag::complete_bipartite);
  CHECK_FALSE(shapes[0].is_complete);
  CHECK(shapes[0].is_complete_bipartite);
  CHECK(shapes[0].p == 2);
  CHECK(shapes[0].q == 2);
  CHECK(shapes[0].side_a == VertexSet::of({0, 2}));
  CHECK(shapes[0].side_b == VertexSet::of({1, 3}));

  // K_2 is complete and also K_{1,1}; complete wins the tag.
  CHECK(shapes[1].tag == ShapeTag::complete);
  CHECK(shapes[1].is_complete);
  CHECK(shapes[1].is_complete_bipartite);
  CHECK(shapes[1].p == 1);

  CHECK(shapes[2].tag == ShapeTag::complete);
  CHECK(shapes[2].is_complete);
  CHECK_FALSE(shapes[2].is_complete_bipartite);
}

TEST_CASE("component shapes: near misses stay other") {
  for (const Graph& g : {generate(Family::path, 4), generate(Family::cycle, 5),
                         generate(Family::cycle, 6), testsupport::paw()}) {
    const auto shapes = classify_component_shape(g);
    REQUIRE(shapes.size() == 1);
    CHECK(shapes[0].tag == ShapeTag::other);
  }
  const auto sides = classify_component_shape(generate(Family::complete_bipartite, 3, 2));
  REQUIRE(sides.size() == 1);
  CHECK(sides[0].p == 2);
  CHECK(sides[0].side_a == VertexSet::of({3, 4}));
}

TEST_CASE("complete graphs are fast joins under both rules") {
  for (int n : {2, 3, 5}) {
    const FastJoinVerdict v = fast_join_verdict(generate(Family::complete, n));
    CHECK(v.graph_complete);
    CHECK(v.psd_fast);
    CHECK(v.standard_fast);
    CHECK(v.complement_components.empty());
    CHECK(v.psd_failure.empty());
    CHECK(v.standard_failure.empty());
  }
  CHECK_THROWS_AS(fast_join_verdict(Graph(1)), std::invalid_argument);
  CHECK_THROWS_AS(fast_join_verdict(Graph(0)), std::invalid_argument);
}

TEST_CASE("a universal vertex spoils both fast-join forms") {
  // complement(star) = K_3 + K_1; the K_1 component is the old center.
  const FastJoinVerdict v = fast_join_verdict(generate(Family::star, 4));
  REQUIRE(v.complement_components.size() == 2);
  CHECK_FALSE(v.psd_fast);
  CHECK_FALSE(v.standard_fast);
  CHECK_FALSE(v.psd_failure.empty());
  CHECK_FALSE(v.standard_failure.empty());

  // The wheel is a join with the hub, so it is not a fast join either.
  CHECK_FALSE(is_psd_fast_join(testsupport::wheel5()));
  CHECK_FALSE(is_standard_fast_join(testsupport::wheel5()));
}

TEST_CASE("K_{1,2} complement components separate the two fast-join forms") {
  const Graph g = complement(disjoint_union(generate(Family::path, 3),
                                            generate(Family::complete, 2)));
  const FastJoinVerdict v = fast_join_verdict(g);
  CHECK(v.psd_fast);
  CHECK_FALSE(v.standard_fast);
  CHECK(v.psd_failure.empty());
  CHECK(v.standard_failure.find("complement component") != std::string::npos);
}

TEST_CASE("K_3 complement components separate the forms the other way") {
  const Graph g = complement(disjoint_union(generate(Family::complete, 3),
                                            generate(Family::complete, 2)));
  const FastJoinVerdict v = fast_join_verdict(g);
  CHECK_FALSE(v.psd_fast);
  CHECK(v.standard_fast);
  CHECK(v.standard_failure.empty());
}

TEST_CASE("graphs that are not joins are not fast joins") {
  for (const Graph& g : {generate(Family::path, 4), generate(Family::cycle, 6),
                         sgap_graph(0)}) {
    const FastJoinVerdict v = fast_join_verdict(g);
    CHECK_FALSE(v.psd_fast);
    CHECK_FALSE(v.standard_fast);
  }
  // C4 = 2K1 v 2K1 is a fast join both ways.
  CHECK(is_psd_fast_join(generate(Family::cycle, 4)));
  CHECK(is_standard_fast_join(generate(Family::cycle, 4)));
}

TEST_CASE("threshold recognition produces a verifiable construction") {
  const auto rec = is_threshold(testsupport::threshold_example5());
  REQUIRE(rec.threshold);
  REQUIRE(rec.tree.has_value());
  CHECK(is_threshold_tree(*rec.tree));
  CHECK(realize_witness(*rec.tree) == testsupport::threshold_example5());

  const auto paw_rec = is_threshold(testsupport::paw());
  REQUIRE(paw_rec.threshold);
  CHECK(realize_witness(*paw_rec.tree) == testsupport::paw());

  CHECK(is_threshold(Graph(0)).threshold);
  CHECK(is_threshold(Graph(1)).threshold);
  CHECK(is_threshold(generate(Family::star, 5)).threshold);
  CHECK(is_threshold(generate(Family::complete, 4)).threshold);
}

TEST_CASE("non-threshold graphs are rejected") {
  CHECK_FALSE(is_threshold(generate(Family::path, 4)).threshold);
  CHECK_FALSE(is_threshold(generate(Family::cycle, 4)).threshold);
  CHECK_FALSE(is_threshold(generate(Family::cycle, 5)).threshold);
  CHECK_FALSE(is_threshold(disjoint_union(generate(Family::complete, 2),
                                          generate(Family::complete, 2)))
                  .threshold);
  CHECK_FALSE(is_threshold(testsupport::cograph_example7()).threshold);
}

TEST_CASE("threshold recognition matches the forbidden-subgraph route") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testsupport::all_graphs(n)) {
      const auto rec = is_threshold(g);
      CHECK(rec.threshold == !has_threshold_obstruction(g));
      if (rec.threshold && n >= 1) {
        REQUIRE(rec.tree.has_value());
        CHECK(realize_witness(*rec.tree) == g);
      }
    }
}

TEST_CASE("patterns realize their role adjacencies") {
  CHECK(pattern_graph(Pattern::P4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(pattern_graph(Pattern::P3_plus_K1) == Graph(4, {{0, 1}, {1, 2}}));
  CHECK(pattern_graph(Pattern::K2_plus_2K1) == Graph(4, {{1, 2}}));
  CHECK(pattern_graph(Pattern::paw) == testsupport::paw());
  CHECK(pattern_graph(Pattern::diamond) == testsupport::diamond());
  CHECK(std::string(pattern_name(Pattern::K2_plus_2K1)) == "K2+2K1");
}

TEST_CASE("the forbidden-subgraph scan finds lexicographically first embeddings") {
  const auto in_p5 = forbidden_subgraph_scan(generate(Family::path, 5), {Pattern::P4});
  REQUIRE(in_p5.has_value());
  CHECK(in_p5->pattern == Pattern::P4);
  CHECK(in_p5->vertices == std::array<int, 4>{0, 1, 2, 3});

  const auto p3k1 = forbidden_subgraph_scan(generate(Family::path, 5),
                                            {Pattern::P3_plus_K1});
  REQUIRE(p3k1.has_value());
  CHECK(p3k1->vertices == std::array<int, 4>{0, 1, 2, 4});

  // Patterns are tried in the caller's order for each tuple.
  const auto on_paw = forbidden_subgraph_scan(testsupport::paw(),
                                              {Pattern::diamond, Pattern::paw});
  REQUIRE(on_paw.has_value());
  CHECK(on_paw->pattern == Pattern::paw);
  CHECK(on_paw->vertices == std::array<int, 4>{0, 1, 2, 3});

  CHECK_FALSE(forbidden_subgraph_scan(generate(Family::complete, 6),
                                      {Pattern::P4, Pattern::P3_plus_K1,
                                       Pattern::K2_plus_2K1, Pattern::paw,
                                       Pattern::diamond})
                  .has_value());
  CHECK_FALSE(forbidden_subgraph_scan(generate(Family::path, 3), {Pattern::P4}).has_value());
}

TEST_CASE("connected graphs without P4, paw or diamond are complete or bipartite-complete") {
  const std::vector<Pattern> pats{Pattern::P4, Pattern::paw, Pattern::diamond};
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testsupport::connected_graphs(n)) {
      const bool free = !forbidden_subgraph_scan(g, pats).has_value();
      const ComponentShape s = detail::shape_of_component(g, g.vertices());
      CHECK(free == (s.is_complete || s.is_complete_bipartite));
    }
}

TEST_CASE("twins, universal vertices and leaves") {
  const TwinPairs kb = twins(generate(Family::complete_bipartite, 2, 3));
  CHECK(kb.closed.empty());
  CHECK(kb.independent == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {2, 4}, {3, 4}});

  const TwinPairs k3 = twins(generate(Family::complete, 3));
  CHECK(k3.closed == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(k3.independent.empty());

  const TwinPairs paw = twins(testsupport::paw());
  CHECK(paw.closed == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(paw.independent.empty());

  CHECK(universal_vertices(testsupport::wheel5()) == VertexSet::of({4}));
  CHECK(universal_vertices(generate(Family::complete, 4)) == VertexSet::full(4));
  CHECK(universal_vertices(generate(Family::path, 3)) == VertexSet::of({1}));
  CHECK(leaves(generate(Family::path, 4)) == VertexSet::of({0, 3}));
  CHECK(leaves(generate(Family::star, 5)) == VertexSet::of({0, 1, 2, 3}));
  CHECK(leaves(generate(Family::complete, 3)).empty());
}

TEST_CASE("independence numbers") {
  CHECK(independence_number(generate(Family::cycle, 5)) == 2);
  CHECK(independence_number(generate(Family::path, 5)) == 3);
  CHECK(independence_number(generate(Family::complete, 5)) == 1);
  CHECK(independence_number(generate(Family::star, 5)) == 4);
  CHECK(independence_number(generate(Family::empty, 5)) == 5);
  CHECK(independence_number(sgap_graph(0)) == 7);
  CHECK(independence_number(Graph(0)) == 0);
  CHECK_THROWS_AS(independence_number(generate(Family::path, 8), /*cap=*/7), CapExceededError);

  // Brute-force cross-check on every small graph.
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : testsupport::all_graphs(n)) {
      int best = 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexSet s(mask);
        bool independent = true;
        for (int v : s) independent = independent && !(g.neighbors(v) & s).count();
        if (independent) best = std::max(best, s.count());
      }
      CHECK(independence_number(g) == best);
    }
}

TEST_CASE("a dominated pair leaves a slow two-round forcing set") {
  const auto p3 = dominated_pair_slow_witness(generate(Family::path, 3));
  REQUIRE(p3.has_value());
  CHECK(p3->dominated == 0);
  CHECK(p3->dominating == 1);
  CHECK(p3->slow_set == VertexSet::of({2}));

  const auto paw = dominated_pair_slow_witness(testsupport::paw());
  REQUIRE(paw.has_value());
  CHECK(paw->dominated == 1);
  CHECK(paw->dominating == 0);
  CHECK(paw->slow_set == VertexSet::of({2, 3}));

  CHECK_FALSE(dominated_pair_slow_witness(generate(Family::cycle, 5)).has_value());
  CHECK_FALSE(dominated_pair_slow_witness(generate(Family::complete, 3)).has_value());

  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : testsupport::all_graphs(n))
      if (const auto w = dominated_pair_slow_witness(g)) {
        CHECK(g.has_edge(w->dominated, w->dominating));
        CHECK(propagation_time(g, w->slow_set, Rule::standard) == 2);
        CHECK(propagation_time(g, w->slow_set, Rule::psd) == 2);
      }
}

TEST_CASE("the high forcing number form matches the engine") {
  CHECK(z_at_least_n_minus_2_form(generate(Family::complete, 5)));
  CHECK(z_at_least_n_minus_2_form(generate(Family::cycle, 4)));
  CHECK(z_at_least_n_minus_2_form(generate(Family::path, 3)));
  CHECK(z_at_least_n_minus_2_form(generate(Family::empty, 4)));
  CHECK(z_at_least_n_minus_2_form(generate(Family::star, 5)));
  CHECK_FALSE(z_at_least_n_minus_2_form(generate(Family::path, 4)));
  CHECK_FALSE(z_at_least_n_minus_2_form(generate(Family::cycle, 5)));

  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testsupport::all_graphs(n))
      CHECK(z_at_least_n_minus_2_form(g) ==
            (analyze_rule(g, Rule::standard).forcing_number >= g.order() - 2));
}

TEST_CASE("conjecture check pairs the engine with the structural verdict") {
  const ConjectureCheck w5 = conjecture_check(testsupport::wheel5(), Rule::standard);
  CHECK(w5.pt_bar == 2);
  CHECK_FALSE(w5.premise);
  CHECK_FALSE(w5.fast_join);
  CHECK_FALSE(w5.counterexample);
  CHECK_FALSE(w5.converse_violation);

  const ConjectureCheck c4 = conjecture_check(generate(Family::cycle, 4), Rule::standard);
  CHECK(c4.pt_bar == 1);
  CHECK(c4.premise);
  CHECK(c4.fast_join);
  CHECK_FALSE(c4.counterexample);

  CHECK(conjecture_check(Graph(1), Rule::psd).pt_bar == 0);
  CHECK_THROWS_AS(conjecture_check(generate(Family::empty, 2), Rule::standard),
                  std::invalid_argument);
}

TEST_CASE("neither conjecture fails on small connected graphs") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : testsupport::connected_graphs(n))
      for (Rule rule : {Rule::standard, Rule::psd}) {
        const ConjectureCheck c = conjecture_check(g, rule);
        CHECK_FALSE(c.counterexample);
        CHECK_FALSE(c.converse_violation);
      }
}

TEST_CASE("random generators hit their target classes") {
  std::mt19937_64 rng(20260814);
  for (int i = 0; i < 25; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph t = random_threshold(n, rng);
    const auto rec = is_threshold(t);
    REQUIRE(rec.threshold);
    CHECK(realize_witness(*rec.tree) == t);

    const Graph c = random_cograph(n, rng);
    CHECK_FALSE(forbidden_subgraph_scan(c, {Pattern::P4}).has_value());
  }
  for (int i = 0; i < 25; ++i) {
    const int n = 2 + static_cast<int>(rng() % 12);
    CHECK(is_psd_fast_join(random_psd_fast_join(n, rng)));
    CHECK(is_standard_fast_join(random_standard_fast_join(n, rng)));
  }
  CHECK(random_graph(8, 100, rng).edge_count() == 28);
  CHECK(random_graph(8, 0, rng).edge_count() == 0);

  std::mt19937_64 a(7), b(7);
  CHECK(random_graph(12, 50, a) == random_graph(12, 50, b));
  CHECK(is_threshold_tree(random_threshold_tree(6, a)));
}
