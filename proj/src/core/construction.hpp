#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cover.hpp"
#include "graph.hpp"

namespace tropitev {

struct ReferencePoint {
  int genus = 0;
  MetricGraph gamma_bar;
  MetricGraph t_bar;
  std::string ordering;
};

ReferencePoint reference_point(int g);

// U raises the running degree, D lowers it; start 2, never below 1
bool is_valid_word(std::string_view word);
int word_descents(std::string_view word);
int word_final_degree(std::string_view word);
std::vector<std::string> enumerate_genus_words(int g);

struct SolutionIndex {
  int genus = 1;
  std::string word;
  int j = 1;

  int degree() const { return genus + 1; }
  int descents() const { return word_descents(word); }
  int k() const { return degree() - descents() - j; }
  std::string label() const;
};

// InvalidWord for bad letters or prefixes, IndexOutOfRange otherwise
void check_index(const SolutionIndex& s);
std::vector<SolutionIndex> enumerate_indices(int g);

struct GenusPart {
  TropicalCover cover;
  int active_leg = -1;
  int active_degree = 0;
  int detached = 0;
};

GenusPart build_genus_part(std::string_view word);
TropicalCover build_solution(const SolutionIndex& s);

BigInt default_base(int g);
// x_i = B^i, L_j = B^(4g+j)
Rational instantiate(const LinForm& f, int g, const BigInt& base);

struct StabilizationCertificate {
  StableModel source_model;
  StableModel target_model;
  // length-respecting identifications with the reference point
  GraphIsomorphism source_iso;
  GraphIsomorphism target_iso;
  BigInt base;
};

StabilizationCertificate verify_solution(const TropicalCover& c, const ReferencePoint& p,
                                         std::optional<BigInt> base = std::nullopt);

struct Solution {
  SolutionIndex index;
  TropicalCover cover;
};

std::vector<Solution> enumerate_solutions(int g, std::optional<BigInt> base = std::nullopt);

}  // namespace tropitev
