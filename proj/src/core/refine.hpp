#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "numeric.hpp"

// Colour refinement with individualisation. Small-graph isomorphism,
// automorphism counting and enumeration on vertex- and arc-coloured graphs.
namespace tropitev::detail {

class Interner {
 public:
  int id(const std::vector<long long>& key);
  std::size_t size() const { return ids_.size(); }

 private:
  std::map<std::vector<long long>, int> ids_;
};

class ColoredGraph {
 public:
  int add_node(int color);
  // undirected
  void add_arc(int u, int v, int color);

  int size() const { return static_cast<int>(color_.size()); }
  const std::vector<int>& colors() const { return color_; }
  const std::vector<std::pair<int, int>>& neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
  std::size_t arc_count() const { return arcs_; }

 private:
  std::vector<int> color_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::size_t arcs_ = 0;
};

// Initial colours of a and b must come from one shared numbering.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b);
BigInt count_automorphisms(const ColoredGraph& g);

struct AutomorphismGroup {
  BigInt order;
  // transversal elements of a stabiliser chain; they generate the group
  std::vector<std::vector<int>> generators;
};
AutomorphismGroup automorphism_group(const ColoredGraph& g);
std::vector<std::vector<int>> enumerate_automorphisms(const ColoredGraph& g, std::size_t limit);

}  // namespace tropitev::detail
