#include "multiplicity.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "error.hpp"

namespace tropitev {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

}  // namespace

std::vector<int> select_coordinates(const TropicalCover& c) {
  check_incidence(c);
  auto pre = edge_preimages(c);
  std::vector<int> chosen(at(c.target.edge_count()), -1);
  for (int t = 0; t < c.target.edge_count(); ++t) {
    int big = 0;
    for (int e : pre[at(t)]) {
      int m = c.edge_map[at(e)].expansion;
      if (m > 1) ++big;
      if (chosen[at(t)] < 0 || m > c.edge_map[at(chosen[at(t)])].expansion) chosen[at(t)] = e;
    }
    if (big > 1)
      fail(ErrorCode::StarViolation, "target edge " + std::to_string(t) + " has " + std::to_string(big) +
                                         " preimages of expansion > 1");
    if (chosen[at(t)] < 0) fail(ErrorCode::IncidenceViolation, "target edge " + std::to_string(t) + " has no preimage");
  }
  return chosen;
}

DilationMatrix dilation_matrix(const TropicalCover& c, const ReferencePoint& p) {
  return dilation_matrix(c, p, verify_solution(c, p));
}

DilationMatrix dilation_matrix(const TropicalCover& c, const ReferencePoint& p, const StabilizationCertificate& cert) {
  const int g = p.genus;
  DilationMatrix out;
  out.chosen = select_coordinates(c);
  const MetricGraph& T = c.target;
  if (T.edge_count() != 5 * g)
    fail(ErrorCode::SizeMismatch, "target has " + std::to_string(T.edge_count()) + " compact edges, expected " +
                                      std::to_string(5 * g));
  // columns: breadth-first from target vertex 0
  Incidence ti(T);
  std::vector<int> column(at(T.edge_count()), -1);
  std::vector<char> seen(at(T.vertex_count()), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int e : ti.edges[at(w)]) {
      if (column[at(e)] < 0) {
        column[at(e)] = static_cast<int>(out.column_edges.size());
        out.column_edges.push_back(e);
      }
      int x = T.other_end(e, w);
      if (!seen[at(x)]) {
        seen[at(x)] = 1;
        queue.push_back(x);
      }
    }
  }
  auto mmax = [&](int t) { return c.edge_map[at(out.chosen[at(t)])].expansion; };
  out.matrix = IntMatrix(at(5 * g), at(5 * g));
  for (int i = 1; i <= 4 * g; ++i) out.row_labels.push_back(to_string(x_param(i)));
  for (int j = 1; j <= g; ++j) out.row_labels.push_back(to_string(l_param(j)));
  std::vector<char> filled(at(5 * g), 0);

  auto row_of = [&](const LinForm& len) {
    if (!len.is_param()) fail(ErrorCode::Internal, "reference edge length " + len.str() + " is not a parameter");
    Param prm = len.terms().begin()->first;
    int r = prm.kind == ParamKind::X ? prm.index - 1 : 4 * g + prm.index - 1;
    if (prm.kind == ParamKind::Y || r < 0 || r >= 5 * g || filled[at(r)])
      fail(ErrorCode::Internal, "bad reference row " + len.str());
    filled[at(r)] = 1;
    return r;
  };
  // y_(col+1) = length(t) / mmax(t)
  auto y_value = [&](int t) { return T.edge(t).length / Rational(mmax(t)); };

  const MetricGraph& S = cert.source_model.graph;
  for (int se = 0; se < S.edge_count(); ++se) {
    const LinForm& ref = p.gamma_bar.edge(cert.source_iso.edge_map[at(se)]).length;
    int r = row_of(ref);
    LinForm check;
    for (int e : cert.source_model.provenance[at(se)]) {
      int t = c.edge_map[at(e)].edge, m = c.edge_map[at(e)].expansion;
      if (mmax(t) % m != 0) fail(ErrorCode::StarViolation, "expansion " + std::to_string(m) + " does not divide " + std::to_string(mmax(t)));
      out.matrix(at(r), at(column[at(t)])) += mmax(t) / m;
      check += y_value(t) * Rational(mmax(t) / m);
    }
    if (check != ref) fail(ErrorCode::Internal, "row " + ref.str() + " evaluates to " + check.str());
  }
  const MetricGraph& ST = cert.target_model.graph;
  for (int te = 0; te < ST.edge_count(); ++te) {
    const LinForm& ref = p.t_bar.edge(cert.target_iso.edge_map[at(te)]).length;
    int r = row_of(ref);
    LinForm check;
    for (int t : cert.target_model.provenance[at(te)]) {
      out.matrix(at(r), at(column[at(t)])) += mmax(t);
      check += T.edge(t).length;
    }
    if (check != ref) fail(ErrorCode::Internal, "row " + ref.str() + " evaluates to " + check.str());
  }
  if (std::count(filled.begin(), filled.end(), 1) != 5 * g) fail(ErrorCode::Internal, "unfilled rows");
  return out;
}

BlockStructure block_structure(const DilationMatrix& m, int g) {
  BlockStructure b;
  const std::size_t n = m.matrix.rows();
  const std::size_t genus_rows = static_cast<std::size_t>(3 * g - 2);
  for (std::size_t r = 0; r < n; ++r) (r < genus_rows ? b.genus_rows : b.tree_rows).push_back(r);
  for (std::size_t c = 0; c < n; ++c) {
    bool used = false;
    for (std::size_t r : b.genus_rows) used = used || m.matrix(r, c) != 0;
    (used ? b.genus_cols : b.tree_cols).push_back(c);
  }
  b.block_diagonal = b.genus_cols.size() == b.genus_rows.size();
  for (std::size_t r : b.tree_rows)
    for (std::size_t c : b.genus_cols) b.block_diagonal = b.block_diagonal && m.matrix(r, c) == 0;
  if (b.block_diagonal) {
    b.genus_det = determinant(m.matrix.submatrix(b.genus_rows, b.genus_cols));
    b.tree_det = determinant(m.matrix.submatrix(b.tree_rows, b.tree_cols));
  }
  return b;
}

LocalVertexProfile vertex_profile(const TropicalCover& c, const PendantStructure& pend, int v) {
  const MetricGraph& S = c.source;
  const MetricGraph& T = c.target;
  const int w = c.vertex_map[at(v)];
  LocalVertexProfile out;
  Incidence si(S);
  std::map<std::pair<int, int>, std::size_t> slot;  // (0, edge) / (1, leg) -> direction
  std::map<std::size_t, std::map<int, int>> classes;
  for (int t = 0; t < T.edge_count(); ++t)
    if (T.edge(t).u == w || T.edge(t).v == w) {
      slot[{0, t}] = out.directions.size();
      out.directions.push_back({});
    }
  for (int l = 0; l < T.leg_count(); ++l)
    if (T.leg(l).vertex == w) {
      slot[{1, l}] = out.directions.size();
      out.directions.push_back({{}, {}, !T.leg(l).mark.has_value()});
    }
  for (int e : si.edges[at(v)]) {
    std::size_t k = slot.at({0, c.edge_map[at(e)].edge});
    out.directions[k].partition.push_back(c.edge_map[at(e)].expansion);
    int q = S.other_end(e, v);
    if (!pend.core[at(q)] && pend.parent_edge[at(q)] == e) ++classes[k][pend.branch_code[at(q)]];
  }
  for (int l : si.legs[at(v)]) {
    std::size_t k = slot.at({1, c.leg_map[at(l)].leg});
    out.directions[k].partition.push_back(c.leg_map[at(l)].expansion);
    if (pend.leg_code[at(l)] >= 0) ++classes[k][pend.leg_code[at(l)]];
  }
  for (auto& dir : out.directions) dir.partition = normalize_partition(dir.partition);
  for (const auto& [k, cls] : classes)
    for (const auto& [code, size] : cls)
      if (size > 1) out.directions[k].interchangeable.push_back(size);
  out.degree = out.directions.empty() ? 0 : partition_size(out.directions.front().partition);
  return out;
}

MultiplicityCertificate local_degree(const TropicalCover& c, const ReferencePoint& p, std::optional<BigInt> base) {
  validate_cover(c);
  check_hurwitz_data(c, HurwitzData::for_genus(p.genus));
  StabilizationCertificate cert = verify_solution(c, p, base);
  MultiplicityCertificate out;
  out.aut_reference = automorphism_count(p.gamma_bar);
  out.aut_cover = cover_automorphism_count(c);
  out.aut_ratio = make_rational(out.aut_reference, out.aut_cover);
  PendantStructure pend = pendant_structure(c);
  for (int v = 0; v < c.source.vertex_count(); ++v) {
    LocalVertexProfile prof = vertex_profile(c, pend, v);
    if (classify_vertex(prof) == VertexClass::Unrecognized) {
      std::string parts;
      for (const auto& d : prof.directions) parts += to_string(d.partition);
      fail(ErrorCode::UnrecognizedVertex, "source vertex " + std::to_string(v) + " with profile " + parts);
    }
    out.hurwitz_product *= local_hurwitz(prof);
  }
  DilationMatrix m = dilation_matrix(c, p, cert);
  out.dilation_det = determinant(m.matrix);
  out.local_degree = out.aut_ratio * out.hurwitz_product * Rational(abs(out.dilation_det));
  return out;
}

}  // namespace tropitev
