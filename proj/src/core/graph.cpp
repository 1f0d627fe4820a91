#include "graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "error.hpp"
#include "refine.hpp"

namespace tropitev {

int MetricGraph::add_vertex(int genus) {
  if (genus < 0) fail(ErrorCode::InvalidArgument, "negative vertex genus");
  vertices_.push_back({genus});
  return vertex_count() - 1;
}

void MetricGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) fail(ErrorCode::InvalidArgument, "no vertex " + std::to_string(v));
}

int MetricGraph::add_edge(int u, int v, LinForm length) {
  check_vertex(u);
  check_vertex(v);
  edges_.push_back({u, v, std::move(length)});
  return edge_count() - 1;
}

int MetricGraph::add_leg(int vertex, std::optional<int> mark) {
  check_vertex(vertex);
  if (mark) {
    if (*mark < 1) fail(ErrorCode::InvalidArgument, "marks are positive");
    if (leg_with_mark(*mark)) fail(ErrorCode::InvalidArgument, "duplicate mark " + std::to_string(*mark));
  }
  legs_.push_back({vertex, mark});
  return leg_count() - 1;
}

void MetricGraph::set_genus(int v, int genus) {
  check_vertex(v);
  vertices_[static_cast<std::size_t>(v)].genus = genus;
}

void MetricGraph::set_length(int e, LinForm length) { edges_.at(static_cast<std::size_t>(e)).length = std::move(length); }

void MetricGraph::set_mark(int l, std::optional<int> mark) {
  if (mark && leg_with_mark(*mark) && leg_with_mark(*mark) != l)
    fail(ErrorCode::InvalidArgument, "duplicate mark " + std::to_string(*mark));
  legs_.at(static_cast<std::size_t>(l)).mark = mark;
}

void MetricGraph::move_leg(int l, int vertex) {
  check_vertex(vertex);
  legs_.at(static_cast<std::size_t>(l)).vertex = vertex;
}

std::vector<int> MetricGraph::incident_edges(int v) const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e) {
    if (edges_[static_cast<std::size_t>(e)].u == v) out.push_back(e);
    if (edges_[static_cast<std::size_t>(e)].v == v) out.push_back(e);
  }
  return out;
}

std::vector<int> MetricGraph::incident_legs(int v) const {
  std::vector<int> out;
  for (int l = 0; l < leg_count(); ++l)
    if (legs_[static_cast<std::size_t>(l)].vertex == v) out.push_back(l);
  return out;
}

int MetricGraph::valence(int v) const {
  return static_cast<int>(incident_edges(v).size() + incident_legs(v).size());
}

int MetricGraph::other_end(int e, int v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  fail(ErrorCode::InvalidArgument, "edge " + std::to_string(e) + " misses vertex " + std::to_string(v));
}

bool MetricGraph::connected() const {
  if (vertices_.empty()) return false;
  std::vector<std::vector<int>> nb(vertices_.size());
  for (const Edge& e : edges_) {
    nb[static_cast<std::size_t>(e.u)].push_back(e.v);
    nb[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nb[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertices_.size();
}

std::optional<int> MetricGraph::leg_with_mark(int mark) const {
  for (int l = 0; l < leg_count(); ++l)
    if (legs_[static_cast<std::size_t>(l)].mark == mark) return l;
  return std::nullopt;
}

int total_genus(const MetricGraph& g) {
  if (!g.connected()) fail(ErrorCode::Disconnected, "total_genus needs a connected graph");
  int genus = g.edge_count() - g.vertex_count() + 1;
  for (const Vertex& v : g.vertices()) genus += v.genus;
  return genus;
}

namespace {

struct WorkEdge {
  int u, v;
  LinForm length;
  std::vector<int> origin;
  bool alive = true;
};

void erase_one(std::vector<int>& xs, int x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  if (it != xs.end()) xs.erase(it);
}

}  // namespace

StableModel stabilize(const MetricGraph& g, const std::set<int>& keep) {
  if (!g.connected()) fail(ErrorCode::Disconnected, "stabilize needs a connected graph");
  const std::size_t nv = static_cast<std::size_t>(g.vertex_count());

  std::vector<WorkEdge> edges;
  std::vector<std::vector<int>> inc(nv);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    edges.push_back({ed.u, ed.v, ed.length, {e}});
    inc[static_cast<std::size_t>(ed.u)].push_back(e);
    inc[static_cast<std::size_t>(ed.v)].push_back(e);
  }
  std::vector<int> leg_at;  // current base of each kept leg
  std::vector<int> kept_legs;
  std::vector<std::vector<int>> legs_of(nv);
  for (int l = 0; l < g.leg_count(); ++l) {
    const Leg& leg = g.leg(l);
    if (!leg.mark || !keep.count(*leg.mark)) continue;
    legs_of[static_cast<std::size_t>(leg.vertex)].push_back(static_cast<int>(kept_legs.size()));
    kept_legs.push_back(l);
    leg_at.push_back(leg.vertex);
  }
  std::vector<char> alive(nv, 1);
  std::deque<int> work;
  for (std::size_t v = 0; v < nv; ++v) work.push_back(static_cast<int>(v));

  auto other = [&](int e, int v) { return edges[static_cast<std::size_t>(e)].u == v ? edges[static_cast<std::size_t>(e)].v : edges[static_cast<std::size_t>(e)].u; };
  auto unstable = [&](const std::string& why) { fail(ErrorCode::Unstable, why); };

  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    auto sv = static_cast<std::size_t>(v);
    if (!alive[sv] || g.vertex(v).genus > 0) continue;
    auto& ie = inc[sv];
    auto& il = legs_of[sv];
    const std::size_t val = ie.size() + il.size();
    if (val >= 3) continue;
    if (val == 0) unstable("single genus-0 vertex without attachments");
    if (ie.empty()) unstable("single genus-0 vertex with " + std::to_string(il.size()) + " legs");
    if (val == 1) {
      int e = ie[0];
      int w = other(e, v);
      erase_one(inc[static_cast<std::size_t>(w)], e);
      edges[static_cast<std::size_t>(e)].alive = false;
      alive[sv] = 0;
      ie.clear();
      work.push_back(w);
      continue;
    }
    if (ie.size() == 1) {
      // one edge and one leg: slide the leg to the far end
      int e = ie[0];
      int w = other(e, v);
      int l = il[0];
      leg_at[static_cast<std::size_t>(l)] = w;
      legs_of[static_cast<std::size_t>(w)].push_back(l);
      erase_one(inc[static_cast<std::size_t>(w)], e);
      edges[static_cast<std::size_t>(e)].alive = false;
      alive[sv] = 0;
      ie.clear();
      il.clear();
      work.push_back(w);
      continue;
    }
    int e1 = ie[0], e2 = ie[1];
    if (e1 == e2) unstable("cycle of genus-0 two-valent vertices");
    int a = other(e1, v), b = other(e2, v);
    WorkEdge merged{a, b, edges[static_cast<std::size_t>(e1)].length + edges[static_cast<std::size_t>(e2)].length, {}};
    // path order a -> v -> b
    const WorkEdge& w1 = edges[static_cast<std::size_t>(e1)];
    const WorkEdge& w2 = edges[static_cast<std::size_t>(e2)];
    if (w1.v == v) merged.origin.insert(merged.origin.end(), w1.origin.begin(), w1.origin.end());
    else merged.origin.insert(merged.origin.end(), w1.origin.rbegin(), w1.origin.rend());
    if (w2.u == v) merged.origin.insert(merged.origin.end(), w2.origin.begin(), w2.origin.end());
    else merged.origin.insert(merged.origin.end(), w2.origin.rbegin(), w2.origin.rend());
    edges[static_cast<std::size_t>(e1)].alive = false;
    edges[static_cast<std::size_t>(e2)].alive = false;
    erase_one(inc[static_cast<std::size_t>(a)], e1);
    erase_one(inc[static_cast<std::size_t>(b)], e2);
    int ne = static_cast<int>(edges.size());
    edges.push_back(std::move(merged));
    inc[static_cast<std::size_t>(a)].push_back(ne);
    inc[static_cast<std::size_t>(b)].push_back(ne);
    alive[sv] = 0;
    ie.clear();
    work.push_back(a);
    if (b != a) work.push_back(b);
  }

  StableModel out;
  std::vector<int> new_id(nv, -1);
  for (std::size_t v = 0; v < nv; ++v)
    if (alive[v]) {
      new_id[v] = out.graph.add_vertex(g.vertex(static_cast<int>(v)).genus);
      out.vertex_origin.push_back(static_cast<int>(v));
    }
  if (out.graph.vertex_count() == 0) unstable("nothing survives");
  for (const WorkEdge& e : edges) {
    if (!e.alive) continue;
    out.graph.add_edge(new_id[static_cast<std::size_t>(e.u)], new_id[static_cast<std::size_t>(e.v)], e.length);
    out.provenance.push_back(e.origin);
  }
  for (std::size_t k = 0; k < kept_legs.size(); ++k) {
    out.graph.add_leg(new_id[static_cast<std::size_t>(leg_at[k])], g.leg(kept_legs[k]).mark);
    out.leg_origin.push_back(kept_legs[k]);
  }
  return out;
}

namespace {

// Vertex nodes carry genus and marks; each edge becomes two half-edge nodes.
struct Encoding {
  detail::ColoredGraph cg;
  int vertices = 0;
};

Encoding encode(const MetricGraph& g, detail::Interner& keys, std::map<LinForm, int>& lengths, bool respect) {
  Encoding enc;
  enc.vertices = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<long long> key{0, g.vertex(v).genus, 0};
    std::vector<long long> marks;
    for (int l : g.incident_legs(v)) {
      if (g.leg(l).mark) marks.push_back(*g.leg(l).mark);
      else ++key[2];
    }
    std::sort(marks.begin(), marks.end());
    key.insert(key.end(), marks.begin(), marks.end());
    enc.cg.add_node(keys.id(key));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    long long len = 0;
    if (respect) len = lengths.emplace(g.edge(e).length, static_cast<int>(lengths.size()) + 1).first->second;
    int color = keys.id({1, len});
    int h0 = enc.cg.add_node(color);
    int h1 = enc.cg.add_node(color);
    enc.cg.add_arc(g.edge(e).u, h0, 1);
    enc.cg.add_arc(g.edge(e).v, h1, 1);
    enc.cg.add_arc(h0, h1, 2);
  }
  return enc;
}

void guard(const MetricGraph& g) {
  if (g.vertex_count() > kBruteForceVertexLimit)
    fail(ErrorCode::TooLarge, std::to_string(g.vertex_count()) + " vertices exceed the limit of " +
                                  std::to_string(kBruteForceVertexLimit));
}

}  // namespace

BigInt automorphism_count(const MetricGraph& g) {
  guard(g);
  detail::Interner keys;
  std::map<LinForm, int> lengths;
  Encoding enc = encode(g, keys, lengths, true);
  BigInt count = detail::count_automorphisms(enc.cg);
  for (int v = 0; v < g.vertex_count(); ++v) {
    int unmarked = 0;
    for (int l : g.incident_legs(v))
      if (!g.leg(l).mark) ++unmarked;
    count *= factorial(unmarked);
  }
  return count;
}

std::optional<GraphIsomorphism> isomorphic(const MetricGraph& a, const MetricGraph& b, bool respect_lengths) {
  guard(a);
  guard(b);
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || a.leg_count() != b.leg_count())
    return std::nullopt;
  detail::Interner keys;
  std::map<LinForm, int> lengths;
  Encoding ea = encode(a, keys, lengths, respect_lengths);
  Encoding eb = encode(b, keys, lengths, respect_lengths);
  auto pi = detail::find_isomorphism(ea.cg, eb.cg);
  if (!pi) return std::nullopt;
  GraphIsomorphism iso;
  iso.vertex_map.assign(pi->begin(), pi->begin() + a.vertex_count());
  for (int e = 0; e < a.edge_count(); ++e)
    iso.edge_map.push_back(((*pi)[static_cast<std::size_t>(a.vertex_count() + 2 * e)] - b.vertex_count()) / 2);
  iso.leg_map.assign(static_cast<std::size_t>(a.leg_count()), -1);
  std::vector<char> used(static_cast<std::size_t>(b.leg_count()), 0);
  for (int l = 0; l < a.leg_count(); ++l) {
    int target = iso.vertex_map[static_cast<std::size_t>(a.leg(l).vertex)];
    for (int m : b.incident_legs(target))
      if (!used[static_cast<std::size_t>(m)] && b.leg(m).mark == a.leg(l).mark) {
        used[static_cast<std::size_t>(m)] = 1;
        iso.leg_map[static_cast<std::size_t>(l)] = m;
        break;
      }
    if (iso.leg_map[static_cast<std::size_t>(l)] < 0) fail(ErrorCode::Internal, "leg matching failed");
  }
  return iso;
}

std::string to_dot(const MetricGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << " [label=\"" << g.vertex(v).genus << "\"];\n";
  for (int e = 0; e < g.edge_count(); ++e)
    out << "  v" << g.edge(e).u << " -- v" << g.edge(e).v << " [label=\"" << g.edge(e).length.str() << "\"];\n";
  for (int l = 0; l < g.leg_count(); ++l) {
    const Leg& leg = g.leg(l);
    out << "  leg" << l << " [shape=plaintext,label=\"" << (leg.mark ? std::to_string(*leg.mark) : "\xC2\xB7")
        << "\"];\n  v" << leg.vertex << " -- leg" << l << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tropitev
