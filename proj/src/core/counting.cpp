#include "counting.hpp"

#include "error.hpp"

namespace tropitev {

BigInt PathTally::at_least(int h) const {
  BigInt s = 0;
  for (auto it = by_height.lower_bound(h); it != by_height.end(); ++it) s += it->second;
  return s;
}

PathTally path_counts(int d) {
  if (d < 2) fail(ErrorCode::InvalidArgument, "path count needs d >= 2, got " + std::to_string(d));
  if (d > 64) fail(ErrorCode::TooLarge, "path count limited to d <= 64");
  std::map<int, BigInt> layer{{2, 1}};
  for (int step = 0; step < d - 2; ++step) {
    std::map<int, BigInt> next;
    for (const auto& [h, c] : layer) {
      next[h + 1] += c;
      if (h - 1 >= 1) next[h - 1] += c;
    }
    layer = std::move(next);
  }
  PathTally t;
  t.degree = d;
  t.by_height = std::move(layer);
  for (const auto& [h, c] : t.by_height) t.total += c;
  return t;
}

std::vector<LemmaRow> lemma_check(int d) {
  PathTally t = path_counts(d);
  std::vector<LemmaRow> rows;
  for (int i = 0; 2 * i <= d - 1; ++i) {
    LemmaRow r{i, t.at_least(d - 2 * i), binomial(d - 1, i)};
    if (r.tally != r.binomial)
      fail(ErrorCode::MismatchAt, "d=" + std::to_string(d) + " i=" + std::to_string(i) + ": " + to_string(r.tally) +
                                      " != " + to_string(r.binomial));
    rows.push_back(std::move(r));
  }
  return rows;
}

void recurrence_check(int d) {
  if (d < 3) fail(ErrorCode::InvalidArgument, "recurrence needs d >= 3");
  PathTally cur = path_counts(d), prev = path_counts(d - 1);
  for (int i = 0; 2 * i <= d - 1; ++i) {
    int h = d - 2 * i;
    BigInt lhs = cur.at_least(h), rhs = prev.at_least(h - 1) + prev.at_least(h + 1);
    if (lhs != rhs)
      fail(ErrorCode::MismatchAt, "d=" + std::to_string(d) + " h=" + std::to_string(h) + ": " + to_string(lhs) +
                                      " != " + to_string(rhs));
  }
}

BigInt table_total(int d) {
  PathTally t = path_counts(d);
  BigInt s = 0;
  for (const auto& [h, c] : t.by_height) s += c * h;
  return s;
}

TevelevResult tevelev_degree(int g, std::optional<BigInt> base) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1, got " + std::to_string(g));
  if (g > kMaxGenus) fail(ErrorCode::TooLarge, "genus limited to <= " + std::to_string(kMaxGenus));
  ReferencePoint p = reference_point(g);
  TevelevResult out;
  out.genus = g;
  out.base = base ? *base : default_base(g);
  Rational total = 0;
  for (const SolutionIndex& idx : enumerate_indices(g)) {
    MultiplicityCertificate cert = local_degree(build_solution(idx), p, out.base);
    if (cert.local_degree != 1)
      fail(ErrorCode::NonUnitMultiplicity, idx.label() + " has local degree " + to_string(cert.local_degree));
    total += cert.local_degree;
    out.solutions.push_back({idx, std::move(cert)});
  }
  out.degree = total.get_num();
  return out;
}

}  // namespace tropitev
