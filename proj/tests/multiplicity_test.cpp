#include <doctest.h>

#include "error.hpp"
#include "multiplicity.hpp"
#include "support.hpp"

using namespace tropitev;

TEST_SUITE("multiplicity") {
  TEST_CASE("genus one certificates") {
    ReferencePoint p = reference_point(1);
    for (int j = 1; j <= 2; ++j) {
      TropicalCover c = build_solution({1, "", j});
      auto chosen = select_coordinates(c);
      CHECK(chosen.size() == 5);
      MultiplicityCertificate m = local_degree(c, p);
      CHECK(m.aut_reference == 2);
      CHECK(m.aut_cover == 4);
      CHECK(m.aut_ratio == Rational(1, 2));
      CHECK(m.hurwitz_product == 1);
      CHECK(abs(m.dilation_det) == 2);
      CHECK(m.local_degree == 1);
      DilationMatrix d = dilation_matrix(c, p);
      CHECK(d.matrix.rows() == 5);
      CHECK(d.row_labels.front() == "x_1");
      CHECK(d.row_labels.back() == "L_1");
      // the circle row is 2*y on a single column
      int nonzero = 0;
      for (std::size_t k = 0; k < 5; ++k)
        if (d.matrix(0, k) != 0) {
          ++nonzero;
          CHECK(d.matrix(0, k) == 2);
        }
      CHECK(nonzero == 1);
    }
  }

  TEST_CASE("genus two block structure") {
    ReferencePoint p = reference_point(2);
    for (const auto& idx : enumerate_indices(2)) {
      CAPTURE(idx.label());
      DilationMatrix d = dilation_matrix(build_solution(idx), p);
      CHECK(d.matrix.rows() == 10);
      BlockStructure b = block_structure(d, 2);
      CHECK(b.block_diagonal);
      CHECK(b.genus_rows.size() == 4);
      CHECK(b.tree_rows.size() == 6);
      CHECK(abs(b.genus_det) == 4);
      CHECK(abs(b.tree_det) == 1);
      CHECK(abs(determinant(d.matrix)) == 4);
      CHECK(local_degree(build_solution(idx), p).local_degree == 1);
    }
  }

  TEST_CASE("determinant is invariant under row and column permutations") {
    std::mt19937 rng(1);
    ReferencePoint p = reference_point(3);
    for (const auto& idx : enumerate_indices(3)) {
      DilationMatrix d = dilation_matrix(build_solution(idx), p);
      std::vector<std::size_t> rows(d.matrix.rows()), cols(d.matrix.cols());
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      CHECK(abs(determinant(d.matrix.submatrix(rows, cols))) == abs(determinant(d.matrix)));
      CHECK(abs(determinant(d.matrix)) == 8);
    }
  }

  TEST_CASE("condition star") {
    TropicalCover c = build_solution({2, "U", 1});
    // a second preimage of expansion > 1 over a doubled edge
    auto pre = edge_preimages(c);
    bool made = false;
    for (int t = 0; t < c.target.edge_count() && !made; ++t) {
      int big = -1, small = -1;
      for (int e : pre[static_cast<std::size_t>(t)]) {
        if (c.edge_map[static_cast<std::size_t>(e)].expansion > 1) big = e;
        else small = e;
      }
      if (big < 0 || small < 0) continue;
      c.edge_map[static_cast<std::size_t>(small)].expansion = 2;
      made = true;
    }
    REQUIRE(made);
    try {
      select_coordinates(c);
      FAIL("expected StarViolation");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::StarViolation);
    }
  }

  TEST_CASE("vertex profiles of constructed covers") {
    for (int g = 1; g <= 4; ++g)
      for (const auto& idx : enumerate_indices(g)) {
        TropicalCover c = build_solution(idx);
        PendantStructure pend = pendant_structure(c);
        for (int v = 0; v < c.source.vertex_count(); ++v) {
          LocalVertexProfile prof = vertex_profile(c, pend, v);
          CHECK(prof.directions.size() == 3);
          CHECK(classify_vertex(prof) != VertexClass::Unrecognized);
          CHECK(local_hurwitz(prof) == 1);
        }
      }
  }
}
