#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "construction.hpp"
#include "cover.hpp"

namespace tropitev {

// Leaves are nodes 0..leaves-1, internal nodes follow. At 8 leaves,
// leaves 0..3 carry marks 1..4 and 4..7 are the branch slots.
struct TreeTopology {
  int leaves = 0;
  std::vector<std::pair<int, int>> edges;
};

// all (2n-5)!! leaf-labelled trivalent trees
std::vector<TreeTopology> enumerate_labeled_trees(int leaves);
// leaves >= marked are unlabelled in the form
std::string canonical_form(const TreeTopology& t, int marked);
std::vector<TreeTopology> enumerate_tree_topologies();

// unique connected double cover branched at the 4 unmarked leaves;
// target edge k has length y_(k+1); lifts[m-1] = sheet of mark m
TropicalCover double_cover(const TreeTopology& t, const std::vector<int>& lifts = {0, 0, 0, 0});

enum class OracleOutcome { NoCover, Infeasible, Solution };
const char* to_string(OracleOutcome o);

struct TopologyResult {
  std::string canonical;
  OracleOutcome outcome = OracleOutcome::NoCover;
  int solved_lifts = 0;
};

struct OracleResult {
  BigInt base = 0;
  std::size_t labeled_count = 0;
  std::vector<TopologyResult> topologies;
  // linear systems solved
  std::size_t systems = 0;
  // covers with symbolic lengths, deduplicated up to isomorphism
  std::vector<TropicalCover> covers;
  // before deduplication
  std::size_t raw_solutions = 0;
};

OracleResult find_all_preimages_g1(const ReferencePoint& p, std::optional<BigInt> base = std::nullopt);

// index of the matching construction solution for each oracle cover, -1 if none
std::vector<int> match_construction(const OracleResult& r, const std::vector<Solution>& constructed);

}  // namespace tropitev
