#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "numeric.hpp"

namespace tropitev {

struct Vertex {
  int genus = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  LinForm length;
};

struct Leg {
  int vertex = 0;
  std::optional<int> mark;
};

// Vertices, edges and legs are addressed by dense ids (their index).
class MetricGraph {
 public:
  int add_vertex(int genus = 0);
  int add_edge(int u, int v, LinForm length);
  int add_leg(int vertex, std::optional<int> mark = std::nullopt);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Leg>& legs() const { return legs_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int leg_count() const { return static_cast<int>(legs_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const Leg& leg(int l) const { return legs_.at(static_cast<std::size_t>(l)); }

  void set_genus(int v, int genus);
  void set_length(int e, LinForm length);
  void set_mark(int l, std::optional<int> mark);
  void move_leg(int l, int vertex);

  // edges counted with multiplicity (a loop appears twice)
  std::vector<int> incident_edges(int v) const;
  std::vector<int> incident_legs(int v) const;
  // loops twice, legs once
  int valence(int v) const;
  int other_end(int e, int v) const;
  bool connected() const;
  std::optional<int> leg_with_mark(int mark) const;

 private:
  void check_vertex(int v) const;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Leg> legs_;
};

int total_genus(const MetricGraph& g);

struct StableModel {
  MetricGraph graph;
  // retained edge -> original edges, in path order; lengths sum exactly
  std::vector<std::vector<int>> provenance;
  // retained vertex -> original vertex
  std::vector<int> vertex_origin;
  // retained leg -> original leg
  std::vector<int> leg_origin;
};

StableModel stabilize(const MetricGraph& g, const std::set<int>& keep);

inline constexpr int kBruteForceVertexLimit = 60;

BigInt automorphism_count(const MetricGraph& g);

struct GraphIsomorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<int> leg_map;
};

std::optional<GraphIsomorphism> isomorphic(const MetricGraph& a, const MetricGraph& b, bool respect_lengths);

std::string to_dot(const MetricGraph& g, std::string_view name = "G");

}  // namespace tropitev
