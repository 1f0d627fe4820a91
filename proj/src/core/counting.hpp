#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "construction.hpp"
#include "multiplicity.hpp"
#include "numeric.hpp"

namespace tropitev {

inline constexpr int kMaxGenus = 8;

// Words of length d-2 in U, D from height 2 that stay >= 1, by final height.
struct PathTally {
  int degree = 0;
  std::map<int, BigInt> by_height;
  BigInt total = 0;

  BigInt at_least(int h) const;
};

PathTally path_counts(int d);

struct LemmaRow {
  int i = 0;
  BigInt tally = 0;
  BigInt binomial = 0;
};

// A_{d, >= d-2i} == C(d-1, i) for 0 <= 2i <= d-1; MismatchAt otherwise
std::vector<LemmaRow> lemma_check(int d);
// A_{d, >= h} == A_{d-1, >= h-1} + A_{d-1, >= h+1}; MismatchAt otherwise
void recurrence_check(int d);
// sum over final heights h of count(h) * h
BigInt table_total(int d);

struct CertifiedSolution {
  SolutionIndex index;
  MultiplicityCertificate certificate;
};

struct TevelevResult {
  int genus = 0;
  BigInt degree = 0;
  BigInt base = 0;
  std::vector<CertifiedSolution> solutions;
};

TevelevResult tevelev_degree(int g, std::optional<BigInt> base = std::nullopt);

}  // namespace tropitev
