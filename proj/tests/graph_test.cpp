#include <doctest.h>

#include "construction.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "support.hpp"

using namespace tropitev;

namespace {
LinForm y(int i) { return LinForm(y_param(i)); }
LinForm x(int i) { return LinForm(x_param(i)); }

// caterpillar with marks 1..n at the ends
MetricGraph caterpillar(int n) {
  MetricGraph g;
  int prev = g.add_vertex();
  g.add_leg(prev, 1);
  g.add_leg(prev, 2);
  for (int m = 3; m < n - 1; ++m) {
    int v = g.add_vertex();
    g.add_edge(prev, v, x(m));
    g.add_leg(v, m);
    prev = v;
  }
  int v = g.add_vertex();
  g.add_edge(prev, v, x(n));
  g.add_leg(v, n - 1);
  g.add_leg(v, n);
  return g;
}
}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("construction checks") {
    MetricGraph g;
    int a = g.add_vertex(), b = g.add_vertex(2);
    g.add_edge(a, b, y(1));
    g.add_leg(a, 1);
    CHECK_THROWS_AS(g.add_leg(b, 1), Error);
    CHECK_THROWS_AS(g.add_leg(b, 0), Error);
    CHECK_THROWS_AS(g.add_edge(a, 7, y(1)), Error);
    CHECK(g.valence(a) == 2);
    CHECK(g.other_end(0, a) == b);
    CHECK(g.leg_with_mark(1) == 0);
    CHECK_FALSE(g.leg_with_mark(2).has_value());
  }

  TEST_CASE("total genus") {
    MetricGraph one;
    one.add_vertex();
    CHECK(total_genus(one) == 0);
    MetricGraph two;
    int a = two.add_vertex(), b = two.add_vertex();
    two.add_edge(a, b, y(1));
    two.add_edge(a, b, y(2));
    CHECK(total_genus(two) == 1);
    two.set_genus(b, 2);
    CHECK(total_genus(two) == 3);
    MetricGraph split;
    split.add_vertex();
    split.add_vertex();
    CHECK_THROWS_AS(total_genus(split), Error);
    MetricGraph loop;
    int v = loop.add_vertex();
    loop.add_edge(v, v, y(1));
    CHECK(loop.valence(v) == 2);
    CHECK(total_genus(loop) == 1);
  }

  TEST_CASE("stabilize smooths a 2-valent vertex") {
    MetricGraph g;
    int a = g.add_vertex(), m = g.add_vertex(), b = g.add_vertex();
    g.add_edge(a, m, y(1));
    g.add_edge(m, b, y(1));
    g.add_leg(a, 1);
    g.add_leg(a, 2);
    g.add_leg(b, 3);
    g.add_leg(b, 4);
    StableModel s = stabilize(g, {1, 2, 3, 4});
    REQUIRE(s.graph.edge_count() == 1);
    CHECK(s.graph.edge(0).length == y(1) * Rational(2));
    CHECK(s.provenance[0].size() == 2);
  }

  TEST_CASE("stabilize removes unkept legs and pendant trees") {
    MetricGraph g = caterpillar(6);
    int extra = g.add_vertex();
    g.add_edge(0, extra, y(9));
    g.add_leg(extra);
    g.add_leg(extra);
    StableModel s = stabilize(g, {1, 2, 3, 4, 5, 6});
    CHECK(s.graph.vertex_count() == 4);
    CHECK(isomorphic(s.graph, caterpillar(6), true).has_value());
    StableModel cut = stabilize(caterpillar(6), {1, 2, 5, 6});
    CHECK(cut.graph.vertex_count() == 2);
    CHECK(cut.graph.edge(0).length == x(3) + x(4) + x(6));
  }

  TEST_CASE("stable graph is unchanged") {
    MetricGraph g = caterpillar(7);
    StableModel s = stabilize(g, {1, 2, 3, 4, 5, 6, 7});
    CHECK(s.graph.vertex_count() == g.vertex_count());
    for (const auto& p : s.provenance) CHECK(p.size() == 1);
    CHECK(isomorphic(s.graph, g, true).has_value());
  }

  TEST_CASE("unstable inputs") {
    MetricGraph circle;
    int v = circle.add_vertex();
    circle.add_edge(v, v, y(1));
    CHECK_THROWS_AS(stabilize(circle, {}), Error);
    MetricGraph point;
    point.add_vertex();
    point.add_leg(0, 1);
    CHECK_THROWS_AS(stabilize(point, {1}), Error);
    MetricGraph heavy;
    heavy.add_vertex(2);
    CHECK(stabilize(heavy, {}).graph.vertex_count() == 1);
  }

  TEST_CASE("automorphism anchors") {
    CHECK(automorphism_count(caterpillar(6)) == 1);
    MetricGraph par;
    int a = par.add_vertex(), b = par.add_vertex();
    par.add_edge(a, b, y(1));
    par.add_edge(a, b, y(1));
    par.add_leg(a, 1);
    par.add_leg(b, 2);
    CHECK(automorphism_count(par) == 2);
    par.set_length(1, y(2));
    CHECK(automorphism_count(par) == 1);
    MetricGraph legs;
    int c = legs.add_vertex();
    legs.add_leg(c);
    legs.add_leg(c);
    legs.add_leg(c);
    CHECK(automorphism_count(legs) == 6);
  }

  TEST_CASE("reference graphs match the permutation filter") {
    for (int g = 1; g <= 4; ++g) {
      ReferencePoint p = reference_point(g);
      CHECK(automorphism_count(p.gamma_bar) == tt_test::filter_automorphisms(p.gamma_bar));
      CHECK(automorphism_count(p.gamma_bar) == 2);
      CHECK(automorphism_count(p.t_bar) == tt_test::filter_automorphisms(p.t_bar));
    }
  }

  TEST_CASE("random graphs match the permutation filter") {
    std::mt19937 rng(5);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
      MetricGraph g = tt_test::random_graph(rng);
      CHECK(automorphism_count(g) == tt_test::filter_automorphisms(g));
      // erase lengths
      MetricGraph bare = g;
      for (int e = 0; e < bare.edge_count(); ++e) bare.set_length(e, y(1));
      CHECK(automorphism_count(bare) == tt_test::filter_automorphisms(bare));
      ++checked;
    }
    CHECK(checked == 200);
  }

  TEST_CASE("automorphism count divides |V|! |E|! and guard") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
      MetricGraph g = tt_test::random_graph(rng);
      int unmarked = 0;
      for (const auto& l : g.legs()) unmarked += !l.mark;
      BigInt bound = factorial(g.vertex_count()) * factorial(g.edge_count()) * factorial(unmarked);
      // loop flips
      for (const auto& e : g.edges())
        if (e.u == e.v) bound *= 2;
      CHECK(bound % automorphism_count(g) == 0);
    }
    MetricGraph big;
    for (int v = 0; v <= kBruteForceVertexLimit; ++v) big.add_vertex();
    CHECK_THROWS_AS(automorphism_count(big), Error);
  }

  TEST_CASE("isomorphism with and without lengths") {
    ReferencePoint p = reference_point(3);
    // relabel vertices in reverse
    MetricGraph r;
    const MetricGraph& G = p.gamma_bar;
    int n = G.vertex_count();
    for (int v = 0; v < n; ++v) r.add_vertex(G.vertex(n - 1 - v).genus);
    for (int e = G.edge_count() - 1; e >= 0; --e) r.add_edge(n - 1 - G.edge(e).u, n - 1 - G.edge(e).v, G.edge(e).length);
    for (const auto& l : G.legs()) r.add_leg(n - 1 - l.vertex, l.mark);
    auto iso = isomorphic(r, G, true);
    REQUIRE(iso.has_value());
    for (int e = 0; e < r.edge_count(); ++e)
      CHECK(r.edge(e).length == G.edge(iso->edge_map[static_cast<std::size_t>(e)]).length);
    for (int l = 0; l < r.leg_count(); ++l)
      CHECK(r.leg(l).mark == G.leg(iso->leg_map[static_cast<std::size_t>(l)]).mark);
    r.set_length(0, y(1));
    CHECK_FALSE(isomorphic(r, G, true).has_value());
    CHECK(isomorphic(r, G, false).has_value());
    r.set_mark(0, 99);
    CHECK_FALSE(isomorphic(r, G, false).has_value());
  }

  TEST_CASE("dot output") {
    MetricGraph g;
    int a = g.add_vertex();
    int b = g.add_vertex(1);
    g.add_edge(a, b, y(1) * Rational(2));
    g.add_leg(a, 3);
    g.add_leg(b);
    std::string dot = to_dot(g, "T");
    CHECK(dot.find("2*y_1") != std::string::npos);
    CHECK(dot.find("\"3\"") != std::string::npos);
    CHECK(dot.find("·") != std::string::npos);
  }

  TEST_CASE("stabilize on random graphs") {
    std::mt19937 rng(3);
    int done = 0;
    for (int t = 0; t < 400 && done < 100; ++t) {
      MetricGraph g = tt_test::random_graph(rng);
      std::set<int> keep;
      for (const auto& l : g.legs())
        if (l.mark && rng() % 3) keep.insert(*l.mark);
      StableModel s;
      try {
        s = stabilize(g, keep);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unstable);
        continue;
      }
      ++done;
      CHECK(total_genus(s.graph) == total_genus(g));
      for (int e = 0; e < s.graph.edge_count(); ++e) {
        LinForm sum;
        for (int o : s.provenance[static_cast<std::size_t>(e)]) sum += g.edge(o).length;
        CHECK(sum == s.graph.edge(e).length);
      }
      for (int v = 0; v < s.graph.vertex_count(); ++v)
        if (s.graph.vertex(v).genus == 0) CHECK(s.graph.valence(v) >= 3);
      StableModel again = stabilize(s.graph, keep);
      CHECK(isomorphic(again.graph, s.graph, true).has_value());
    }
    CHECK(done == 100);
  }
}
