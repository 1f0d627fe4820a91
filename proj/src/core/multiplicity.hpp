#pragma once

#include <string>
#include <vector>

#include "construction.hpp"
#include "cover.hpp"
#include "hurwitz.hpp"

namespace tropitev {

// target edge -> source edge of maximal expansion (first by id on ties)
std::vector<int> select_coordinates(const TropicalCover& c);

struct DilationMatrix {
  IntMatrix matrix;
  // x_1..x_4g, L_1..L_g
  std::vector<std::string> row_labels;
  // column k is y_(k+1), the coordinate of this target edge
  std::vector<int> column_edges;
  std::vector<int> chosen;
};

DilationMatrix dilation_matrix(const TropicalCover& c, const ReferencePoint& p);
DilationMatrix dilation_matrix(const TropicalCover& c, const ReferencePoint& p, const StabilizationCertificate& cert);

struct BlockStructure {
  bool block_diagonal = false;
  std::vector<std::size_t> genus_rows, genus_cols, tree_rows, tree_cols;
  BigInt genus_det = 0;
  BigInt tree_det = 0;
};

// genus block: rows x_1..x_(3g-2) and the columns they use
BlockStructure block_structure(const DilationMatrix& m, int g);

LocalVertexProfile vertex_profile(const TropicalCover& c, const PendantStructure& pend, int v);

struct MultiplicityCertificate {
  BigInt aut_reference = 1;
  BigInt aut_cover = 1;
  Rational aut_ratio = 1;
  Rational hurwitz_product = 1;
  BigInt dilation_det = 0;
  Rational local_degree = 0;
};

MultiplicityCertificate local_degree(const TropicalCover& c, const ReferencePoint& p,
                                     std::optional<BigInt> base = std::nullopt);

}  // namespace tropitev
