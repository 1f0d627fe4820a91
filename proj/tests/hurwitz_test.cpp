#include <doctest.h>

#include "error.hpp"
#include "hurwitz.hpp"
#include "support.hpp"

using namespace tropitev;

namespace {
Direction dir(Partition p, std::vector<int> inter = {}, bool branch = false) { return {p, inter, branch}; }
int ramification(const std::vector<Partition>& ps, int d) {
  int r = 0;
  for (const auto& p : ps) r += d - static_cast<int>(p.size());
  return r;
}
}  // namespace

TEST_SUITE("hurwitz") {
  TEST_CASE("partitions") {
    CHECK(normalize_partition({1, 3, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(partition_size({3, 2, 1, 1}) == 7);
    CHECK(partition_aut({2, 1, 1, 1}) == 6);
    CHECK(partition_aut({2, 2, 1, 1}) == 4);
    CHECK(to_string(Partition{2, 1}) == "(2,1)");
  }

  TEST_CASE("anchors") {
    CHECK(triple_hurwitz_marked({4}, {4}, {1, 1, 1, 1}) == 6);
    CHECK(triple_hurwitz_marked({1}, {1}, {1}) == 1);
    CHECK(triple_hurwitz_marked({2}, {2}, {1, 1}) == 1);
    CHECK(triple_hurwitz_marked({2, 1}, {2, 1}, {3}) == 1);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(triple_hurwitz_marked({2}, {3}, {1, 1}), Error);
    try {
      triple_hurwitz_marked({10}, {10}, Partition(10, 1));
      FAIL("expected DegreeTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegreeTooLarge);
    }
    try {
      triple_hurwitz_marked({2}, {2}, {2});
      FAIL("expected GenusMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GenusMismatch);
    }
  }

  TEST_CASE("factorisation counts match brute force over the symmetric group") {
    for (int d = 1; d <= 5; ++d) {
      auto ps = tt_test::partitions(d);
      for (const auto& a : ps)
        for (const auto& b : ps)
          for (const auto& c : ps) {
            if (ramification({a, b, c}, d) != 2 * d - 2) continue;
            CAPTURE(to_string(a));
            CAPTURE(to_string(b));
            CAPTURE(to_string(c));
            CHECK(transitive_factorizations(a, b, c) == tt_test::brute_factorizations(a, b, c));
          }
    }
  }

  TEST_CASE("symmetric in the three profiles") {
    for (int d = 2; d <= 6; ++d) {
      auto ps = tt_test::partitions(d);
      for (const auto& a : ps)
        for (const auto& b : ps)
          for (const auto& c : ps) {
            if (ramification({a, b, c}, d) != 2 * d - 2) continue;
            Rational h = triple_hurwitz_marked(a, b, c);
            CHECK(h == triple_hurwitz_marked(b, a, c));
            CHECK(h == triple_hurwitz_marked(c, b, a));
            CHECK(h == triple_hurwitz_marked(a, c, b));
          }
    }
  }

  TEST_CASE("local numbers with interchangeable branches") {
    LocalVertexProfile fig{4, {dir({4}), dir({4}), dir({1, 1, 1, 1}, {3})}};
    CHECK(local_hurwitz(fig) == 1);
    for (int m = 1; m <= 8; ++m) {
      LocalVertexProfile p{m, {dir({m}), dir({m}), dir(Partition(static_cast<std::size_t>(m), 1), m > 2 ? std::vector<int>{m - 1} : std::vector<int>{})}};
      CAPTURE(m);
      if (m == 2) p.directions[2].interchangeable = {};
      CHECK(local_hurwitz(p) == 1);
      CHECK(classify_vertex(p) == VertexClass::Passthrough);
    }
    LocalVertexProfile both{2, {dir({2}), dir({2}), dir({1, 1}, {2})}};
    CHECK(local_hurwitz(both) == Rational(1, 2));
    CHECK(classify_vertex(both) == VertexClass::Unrecognized);
    CHECK_THROWS_AS(local_hurwitz({2, {dir({2}), dir({2})}}), Error);
    CHECK_THROWS_AS(local_hurwitz({3, {dir({2}), dir({2}), dir({1, 1})}}), Error);
  }

  TEST_CASE("classification") {
    LocalVertexProfile trivial{1, {dir({1}), dir({1}), dir({1})}};
    CHECK(classify_vertex(trivial) == VertexClass::Passthrough);
    // loop-closing vertex: two degree-2 edges, branch end (2)
    LocalVertexProfile closing{2, {dir({2}), dir({1, 1}), dir({2}, {}, true)}};
    CHECK(local_hurwitz(closing) == 1);
    CHECK(classify_vertex(closing) == VertexClass::SimpleTransposition);
    LocalVertexProfile unflagged{2, {dir({2}), dir({1, 1}), dir({2})}};
    CHECK(classify_vertex(unflagged) == VertexClass::Passthrough);
    LocalVertexProfile odd{3, {dir({3}), dir({2, 1}), dir({2, 1})}};
    CHECK(classify_vertex(odd) == VertexClass::Unrecognized);
    CHECK(local_hurwitz(odd) == triple_hurwitz_marked({3}, {2, 1}, {2, 1}));
    LocalVertexProfile simple{3, {dir({3}), dir({2, 1}), dir({2, 1}, {}, true)}};
    CHECK(local_hurwitz(simple) == 1);
    CHECK(classify_vertex(simple) == VertexClass::SimpleTransposition);
    LocalVertexProfile two{4, {dir({3, 1}), dir({4}), dir({2, 1, 1}, {}, true)}};
    CHECK(local_hurwitz(two) == 2);
    CHECK(classify_vertex(two) == VertexClass::Unrecognized);
  }
}
