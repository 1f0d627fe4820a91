#include <doctest.h>

#include "construction.hpp"
#include "cover.hpp"
#include "error.hpp"
#include "support.hpp"

using namespace tropitev;

namespace {

LinForm y(int i) { return LinForm(y_param(i)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// degree-1 cover of a marked caterpillar onto itself
TropicalCover identity_cover() {
  MetricGraph t;
  int a = t.add_vertex(), b = t.add_vertex(), c = t.add_vertex();
  t.add_edge(a, b, y(1));
  t.add_edge(b, c, y(2));
  t.add_leg(a, 1);
  t.add_leg(a, 2);
  t.add_leg(b, 3);
  t.add_leg(c, 4);
  t.add_leg(c, 5);
  TropicalCover cv;
  cv.source = t;
  cv.target = t;
  cv.vertex_map = {0, 1, 2};
  cv.edge_map = {{0, 1}, {1, 1}};
  for (int l = 0; l < 5; ++l) cv.leg_map.push_back({l, 1});
  return cv;
}

// genus 1 double cover of the tree with 4 unmarked ends
TropicalCover loop_cover() {
  TropicalCover c;
  int a = c.target.add_vertex(), b = c.target.add_vertex();
  c.target.add_edge(a, b, y(1));
  for (int k = 0; k < 2; ++k) {
    c.target.add_leg(a);
    c.target.add_leg(b);
  }
  int u = c.source.add_vertex(), v = c.source.add_vertex();
  c.vertex_map = {a, b};
  c.source.add_edge(u, v, y(1));
  c.source.add_edge(u, v, y(1));
  c.edge_map = {{0, 1}, {0, 1}};
  for (int l = 0; l < 4; ++l) {
    c.source.add_leg(l % 2 ? v : u);
    c.leg_map.push_back({l, 2});
  }
  return c;
}

}  // namespace

TEST_SUITE("cover") {
  TEST_CASE("degree one isomorphism") {
    TropicalCover c = identity_cover();
    validate_cover(c);
    auto d = validate_harmonic(c);
    CHECK(std::all_of(d.begin(), d.end(), [](int x) { return x == 1; }));
    CHECK(global_degree(c) == 1);
    CHECK(cover_automorphism_count(c) == 1);
    CHECK(full_cover_automorphism_count(c) == 1);
  }

  TEST_CASE("loop cover of the four-ended tree") {
    TropicalCover c = loop_cover();
    validate_cover(c);
    CHECK(validate_harmonic(c) == std::vector<int>{2, 2});
    CHECK(total_genus(c.source) == 1);
    CHECK(global_degree(c) == 2);
    c.edge_map[0].expansion = 2;
    CHECK(code_of([&] { validate_harmonic(c); }) == ErrorCode::HarmonicityViolation);
  }

  TEST_CASE("local Riemann-Hurwitz arithmetic") {
    CHECK(local_rh_holds(3, 0, 1, 3));
    CHECK(local_rh_holds(4, 0, 2, 3));
    CHECK(local_rh_holds(1, 1, 1, 3));
    CHECK_FALSE(local_rh_holds(1, 1, 2, 3));
    CHECK_FALSE(local_rh_holds(3, 0, 2, 3));
  }

  TEST_CASE("incidence and length violations") {
    TropicalCover c = identity_cover();
    c.vertex_map[0] = 2;
    CHECK(code_of([&] { check_incidence(c); }) == ErrorCode::IncidenceViolation);
    c = identity_cover();
    c.source.set_length(0, y(3));
    CHECK(code_of([&] { check_length_compatibility(c); }) == ErrorCode::LengthMismatch);
    c = identity_cover();
    c.target.add_edge(0, 2, y(4));
    CHECK(code_of([&] { check_incidence(c); }) == ErrorCode::IncidenceViolation);
  }

  TEST_CASE("constructed covers pass every validator") {
    for (int g = 1; g <= 4; ++g)
      for (const auto& idx : enumerate_indices(g)) {
        CAPTURE(idx.label());
        TropicalCover c = build_solution(idx);
        CHECK_NOTHROW(validate_cover(c));
        CHECK_NOTHROW(check_hurwitz_data(c, HurwitzData::for_genus(g)));
        CHECK(global_degree(c) == g + 1);
        CHECK(total_genus(c.source) == g);
        // global degree equals the sum of local degrees over each target vertex
        auto local = validate_harmonic(c);
        std::vector<int> sum(static_cast<std::size_t>(c.target.vertex_count()), 0);
        for (int v = 0; v < c.source.vertex_count(); ++v)
          sum[static_cast<std::size_t>(c.vertex_map[static_cast<std::size_t>(v)])] += local[static_cast<std::size_t>(v)];
        for (int s : sum) CHECK(s == g + 1);
      }
  }

  TEST_CASE("Hurwitz data violations") {
    TropicalCover c = build_solution({2, "U", 2});
    HurwitzData h = HurwitzData::for_genus(2);
    CHECK(h.end_count == 13);
    CHECK(h.profiles[0] == Partition{1, 1, 1});
    CHECK(h.profiles[5] == Partition{2, 1});
    // a second marked preimage over end 1
    TropicalCover dbl = c;
    int t1 = dbl.leg_map[static_cast<std::size_t>(*dbl.source.leg_with_mark(1))].leg;
    for (int s = 0; s < dbl.source.leg_count(); ++s)
      if (!dbl.source.leg(s).mark && dbl.leg_map[static_cast<std::size_t>(s)].leg == t1) {
        dbl.source.set_mark(s, 101);
        break;
      }
    CHECK(code_of([&] { check_hurwitz_data(dbl, h); }) == ErrorCode::ProfileMismatch);
    TropicalCover none = c;
    none.source.set_mark(*none.source.leg_with_mark(3), std::nullopt);
    CHECK(code_of([&] { check_hurwitz_data(none, h); }) == ErrorCode::ProfileMismatch);
    HurwitzData bad = h;
    bad.profiles[6] = {3};
    CHECK(code_of([&] { check_hurwitz_data(c, bad); }) == ErrorCode::ProfileMismatch);
    CHECK(code_of([&] { check_hurwitz_data(c, HurwitzData::for_genus(3)); }) == ErrorCode::ProfileMismatch);
  }

  TEST_CASE("automorphisms of constructed covers") {
    CHECK(cover_automorphism_count(build_solution({1, "", 1})) == 4);
    CHECK(cover_automorphism_count(build_solution({1, "", 2})) == 4);
    for (int g = 1; g <= 4; ++g)
      for (const auto& idx : enumerate_indices(g)) {
        CAPTURE(idx.label());
        TropicalCover c = build_solution(idx);
        BigInt aut = cover_automorphism_count(c);
        CHECK(aut == BigInt(2) * (BigInt(1) << g));
        CHECK(aut % automorphism_count(reference_point(g).gamma_bar) == 0);
      }
  }

  TEST_CASE("pendant quotient agrees with the full count") {
    for (int g = 1; g <= 3; ++g)
      for (const auto& idx : enumerate_indices(g)) {
        CAPTURE(idx.label());
        TropicalCover c = build_solution(idx);
        CHECK(full_cover_automorphism_count(c) == cover_automorphism_count(c) * pendant_symmetry_order(c));
      }
    TropicalCover l = loop_cover();
    CHECK(full_cover_automorphism_count(l) == cover_automorphism_count(l) * pendant_symmetry_order(l));
  }

  TEST_CASE("isomorphism between covers") {
    auto sols = enumerate_indices(2);
    for (std::size_t a = 0; a < sols.size(); ++a)
      for (std::size_t b = 0; b < sols.size(); ++b) {
        bool same = covers_isomorphic(build_solution(sols[a]), build_solution(sols[b]), true);
        CHECK(same == (a == b));
      }
    TropicalCover c = build_solution({1, "", 1});
    TropicalCover d = c;
    d.source.set_length(0, d.source.edge(0).length + LinForm(x_param(2)));
    CHECK_FALSE(covers_isomorphic(c, d, true));
    CHECK(covers_isomorphic(c, d, false));
  }
}
