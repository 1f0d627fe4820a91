#pragma once

#include <vector>

#include "graph.hpp"
#include "hurwitz.hpp"
#include "numeric.hpp"

namespace tropitev {

struct EdgeImage {
  int edge = 0;
  int expansion = 1;
};

struct LegImage {
  int leg = 0;
  int expansion = 1;
};

struct TropicalCover {
  MetricGraph source;
  MetricGraph target;
  std::vector<int> vertex_map;
  std::vector<EdgeImage> edge_map;
  std::vector<LegImage> leg_map;
};

struct HurwitzData {
  int genus = 0;
  int degree = 0;
  int end_count = 0;
  // profiles[i - 1] belongs to end i
  std::vector<Partition> profiles;

  static HurwitzData for_genus(int g);
};

// Per-vertex incidence lists, loops listed twice.
struct Incidence {
  explicit Incidence(const MetricGraph& g);
  std::vector<std::vector<int>> edges;
  std::vector<std::vector<int>> legs;
  int valence(int v) const {
    return static_cast<int>(edges[static_cast<std::size_t>(v)].size() + legs[static_cast<std::size_t>(v)].size());
  }
};

void check_incidence(const TropicalCover& c);
void check_length_compatibility(const TropicalCover& c);
// local degree d_v per source vertex
std::vector<int> validate_harmonic(const TropicalCover& c);
bool local_rh_holds(int valence, int genus, int local_degree, int target_valence);
void validate_local_rh(const TropicalCover& c);
int global_degree(const TropicalCover& c);
void check_hurwitz_data(const TropicalCover& c, const HurwitzData& h);
// incidence, harmonicity, RH and lengths
void validate_cover(const TropicalCover& c);

std::vector<std::vector<int>> edge_preimages(const TropicalCover& c);
std::vector<std::vector<int>> leg_preimages(const TropicalCover& c);

// Unmarked pendant trees of the source. Peeling stops at the core: cycles,
// marked legs and the paths between them.
struct PendantStructure {
  std::vector<char> core;
  // peeled vertex -> edge towards its parent, -1 on the core
  std::vector<int> parent_edge;
  // peeled vertex -> isomorphism class of the branch it roots
  std::vector<int> branch_code;
  // unmarked leg -> class, -1 for marked legs
  std::vector<int> leg_code;
};

PendantStructure pendant_structure(const TropicalCover& c);
// order of the group permuting interchangeable pendant branches
BigInt pendant_symmetry_order(const TropicalCover& c);

// Automorphisms modulo interchangeable pendant branches.
BigInt cover_automorphism_count(const TropicalCover& c);
// All automorphisms, by refinement on the whole cover. Small covers only.
BigInt full_cover_automorphism_count(const TropicalCover& c);

inline constexpr int kCoverNodeLimit = 4000;

bool covers_isomorphic(const TropicalCover& a, const TropicalCover& b, bool respect_lengths);

}  // namespace tropitev
