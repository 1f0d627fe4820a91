#include "cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "error.hpp"
#include "refine.hpp"

namespace tropitev {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

std::string sv(int v) { return "source vertex " + std::to_string(v); }

}  // namespace

HurwitzData HurwitzData::for_genus(int g) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be positive");
  HurwitzData h;
  h.genus = g;
  h.degree = g + 1;
  h.end_count = 5 * g + 3;
  Partition ones(at(h.degree), 1);
  Partition simple(at(h.degree - 1), 1);
  simple[0] = 2;
  for (int i = 1; i <= h.end_count; ++i) h.profiles.push_back(i <= g + 3 ? ones : simple);
  return h;
}

Incidence::Incidence(const MetricGraph& g) : edges(at(g.vertex_count())), legs(at(g.vertex_count())) {
  for (int e = 0; e < g.edge_count(); ++e) {
    edges[at(g.edge(e).u)].push_back(e);
    edges[at(g.edge(e).v)].push_back(e);
  }
  for (int l = 0; l < g.leg_count(); ++l) legs[at(g.leg(l).vertex)].push_back(l);
}

void check_incidence(const TropicalCover& c) {
  const MetricGraph& S = c.source;
  const MetricGraph& T = c.target;
  auto bad = [](const std::string& why) { fail(ErrorCode::IncidenceViolation, why); };
  if (c.vertex_map.size() != at(S.vertex_count()) || c.edge_map.size() != at(S.edge_count()) ||
      c.leg_map.size() != at(S.leg_count()))
    bad("map sizes do not match the source");
  if (!T.connected() || T.edge_count() != T.vertex_count() - 1) bad("target is not a tree");
  for (const Vertex& v : T.vertices())
    if (v.genus != 0) bad("target vertex of positive genus");
  for (int v = 0; v < S.vertex_count(); ++v)
    if (c.vertex_map[at(v)] < 0 || c.vertex_map[at(v)] >= T.vertex_count()) bad(sv(v) + " has no image");
  for (int e = 0; e < S.edge_count(); ++e) {
    const EdgeImage& img = c.edge_map[at(e)];
    if (img.edge < 0 || img.edge >= T.edge_count()) bad("source edge " + std::to_string(e) + " has no image");
    if (img.expansion < 1) bad("source edge " + std::to_string(e) + " has expansion " + std::to_string(img.expansion));
    int a = c.vertex_map[at(S.edge(e).u)], b = c.vertex_map[at(S.edge(e).v)];
    const Edge& t = T.edge(img.edge);
    if (!((a == t.u && b == t.v) || (a == t.v && b == t.u)))
      bad("source edge " + std::to_string(e) + " endpoints do not map onto target edge " + std::to_string(img.edge));
  }
  for (int l = 0; l < S.leg_count(); ++l) {
    const LegImage& img = c.leg_map[at(l)];
    if (img.leg < 0 || img.leg >= T.leg_count()) bad("source leg " + std::to_string(l) + " has no image");
    if (img.expansion < 1) bad("source leg " + std::to_string(l) + " has expansion " + std::to_string(img.expansion));
    if (c.vertex_map[at(S.leg(l).vertex)] != T.leg(img.leg).vertex)
      bad("source leg " + std::to_string(l) + " is not based over target leg " + std::to_string(img.leg));
  }
}

void check_length_compatibility(const TropicalCover& c) {
  for (int e = 0; e < c.source.edge_count(); ++e) {
    const EdgeImage& img = c.edge_map[at(e)];
    const LinForm& target = c.target.edge(img.edge).length;
    LinForm scaled = c.source.edge(e).length * Rational(img.expansion);
    if (target != scaled)
      fail(ErrorCode::LengthMismatch, "source edge " + std::to_string(e) + ": " + std::to_string(img.expansion) + " * (" +
                                          c.source.edge(e).length.str() + ") != " + target.str());
  }
}

std::vector<int> validate_harmonic(const TropicalCover& c) {
  check_incidence(c);
  const MetricGraph& S = c.source;
  const MetricGraph& T = c.target;
  Incidence si(S), ti(T);
  std::vector<int> degree(at(S.vertex_count()), 0);
  for (int v = 0; v < S.vertex_count(); ++v) {
    int w = c.vertex_map[at(v)];
    std::map<std::pair<int, int>, int> sums;  // (0, edge) or (1, leg)
    for (int t : ti.edges[at(w)]) sums[{0, t}] = 0;
    for (int t : ti.legs[at(w)]) sums[{1, t}] = 0;
    for (int e : si.edges[at(v)]) sums[{0, c.edge_map[at(e)].edge}] += c.edge_map[at(e)].expansion;
    for (int l : si.legs[at(v)]) sums[{1, c.leg_map[at(l)].leg}] += c.leg_map[at(l)].expansion;
    auto name = [](const std::pair<int, int>& d) { return (d.first ? "leg " : "edge ") + std::to_string(d.second); };
    const auto& first = *sums.begin();
    for (const auto& entry : sums)
      if (entry.second != first.second)
        fail(ErrorCode::HarmonicityViolation, sv(v) + ": target " + name(first.first) + " receives " +
                                                  std::to_string(first.second) + " but " + name(entry.first) +
                                                  " receives " + std::to_string(entry.second));
    if (first.second < 1) fail(ErrorCode::HarmonicityViolation, sv(v) + " has local degree 0");
    degree[at(v)] = first.second;
  }
  return degree;
}

bool local_rh_holds(int valence, int genus, int local_degree, int target_valence) {
  return valence + 2 * genus - 2 == local_degree * (target_valence - 2);
}

void validate_local_rh(const TropicalCover& c) {
  std::vector<int> degree = validate_harmonic(c);
  Incidence si(c.source), ti(c.target);
  for (int v = 0; v < c.source.vertex_count(); ++v) {
    int w = c.vertex_map[at(v)];
    int val = si.valence(v), g = c.source.vertex(v).genus, tval = ti.valence(w);
    if (!local_rh_holds(val, g, degree[at(v)], tval))
      fail(ErrorCode::RHViolation, sv(v) + ": " + std::to_string(val) + " + 2*" + std::to_string(g) + " - 2 != " +
                                       std::to_string(degree[at(v)]) + " * (" + std::to_string(tval) + " - 2)");
  }
}

int global_degree(const TropicalCover& c) {
  std::vector<int> degree = validate_harmonic(c);
  const MetricGraph& T = c.target;
  std::vector<int> over_edge(at(T.edge_count()), 0), over_leg(at(T.leg_count()), 0), over_vertex(at(T.vertex_count()), 0);
  for (int e = 0; e < c.source.edge_count(); ++e) over_edge[at(c.edge_map[at(e)].edge)] += c.edge_map[at(e)].expansion;
  for (int l = 0; l < c.source.leg_count(); ++l) over_leg[at(c.leg_map[at(l)].leg)] += c.leg_map[at(l)].expansion;
  for (int v = 0; v < c.source.vertex_count(); ++v) over_vertex[at(c.vertex_map[at(v)])] += degree[at(v)];
  int d = over_vertex.empty() ? 0 : over_vertex[0];
  auto check = [&](const std::vector<int>& xs, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (xs[i] != d)
        fail(ErrorCode::HarmonicityViolation, std::string("target ") + what + " " + std::to_string(i) + " has degree " +
                                                  std::to_string(xs[i]) + ", expected " + std::to_string(d));
  };
  check(over_vertex, "vertex");
  check(over_edge, "edge");
  check(over_leg, "leg");
  return d;
}

std::vector<std::vector<int>> edge_preimages(const TropicalCover& c) {
  std::vector<std::vector<int>> out(at(c.target.edge_count()));
  for (int e = 0; e < c.source.edge_count(); ++e) out[at(c.edge_map[at(e)].edge)].push_back(e);
  return out;
}

std::vector<std::vector<int>> leg_preimages(const TropicalCover& c) {
  std::vector<std::vector<int>> out(at(c.target.leg_count()));
  for (int l = 0; l < c.source.leg_count(); ++l) out[at(c.leg_map[at(l)].leg)].push_back(l);
  return out;
}

void check_hurwitz_data(const TropicalCover& c, const HurwitzData& h) {
  auto mismatch = [](int end, const std::string& why) {
    fail(ErrorCode::ProfileMismatch, "end " + std::to_string(end) + ": " + why);
  };
  int d = global_degree(c);
  if (d != h.degree) mismatch(0, "global degree " + std::to_string(d) + ", expected " + std::to_string(h.degree));
  const MetricGraph& T = c.target;
  const int marked_ends = h.genus + 3;
  std::vector<int> unmarked;
  std::set<int> marks;
  for (int l = 0; l < T.leg_count(); ++l) {
    if (auto m = T.leg(l).mark) {
      if (*m > marked_ends) mismatch(*m, "target mark out of range");
      marks.insert(*m);
    } else {
      unmarked.push_back(l);
    }
  }
  if (static_cast<int>(marks.size()) != marked_ends)
    mismatch(0, std::to_string(marks.size()) + " marked target ends, expected " + std::to_string(marked_ends));
  if (static_cast<int>(unmarked.size()) != h.end_count - marked_ends)
    mismatch(0, std::to_string(unmarked.size()) + " unmarked target ends, expected " +
                    std::to_string(h.end_count - marked_ends));
  auto pre = leg_preimages(c);
  auto profile_of = [&](int l) {
    Partition p;
    for (int s : pre[at(l)]) p.push_back(c.leg_map[at(s)].expansion);
    return normalize_partition(p);
  };
  for (int l = 0; l < T.leg_count(); ++l) {
    auto m = T.leg(l).mark;
    if (!m) continue;
    if (profile_of(l) != h.profiles[at(*m - 1)]) mismatch(*m, "profile " + to_string(profile_of(l)));
    int hits = 0;
    for (int s : pre[at(l)]) {
      auto sm = c.source.leg(s).mark;
      if (!sm) continue;
      if (*sm != *m) mismatch(*m, "source mark " + std::to_string(*sm) + " over target mark " + std::to_string(*m));
      ++hits;
    }
    if (hits != 1) mismatch(*m, std::to_string(hits) + " marked preimages");
  }
  for (std::size_t k = 0; k < unmarked.size(); ++k) {
    int l = unmarked[k];
    int end = marked_ends + 1 + static_cast<int>(k);
    if (profile_of(l) != h.profiles[at(end - 1)]) mismatch(end, "profile " + to_string(profile_of(l)));
    for (int s : pre[at(l)])
      if (c.source.leg(s).mark) mismatch(end, "marked preimage over a branch end");
  }
  if (total_genus(c.source) != h.genus)
    fail(ErrorCode::GenusMismatch, "source genus " + std::to_string(total_genus(c.source)) + ", expected " +
                                       std::to_string(h.genus));
}

void validate_cover(const TropicalCover& c) {
  validate_local_rh(c);
  check_length_compatibility(c);
}

namespace {

struct TargetMap {
  std::vector<int> vertex, edge, leg;

  static TargetMap identity(const MetricGraph& T) {
    TargetMap m;
    for (int i = 0; i < T.vertex_count(); ++i) m.vertex.push_back(i);
    for (int i = 0; i < T.edge_count(); ++i) m.edge.push_back(i);
    for (int i = 0; i < T.leg_count(); ++i) m.leg.push_back(i);
    return m;
  }
};

struct Peel {
  std::vector<char> core;
  std::vector<int> parent_edge;
  std::vector<int> order;
};

Peel peel(const MetricGraph& S, const Incidence& si) {
  const std::size_t n = at(S.vertex_count());
  Peel p;
  p.core.assign(n, 1);
  p.parent_edge.assign(n, -1);
  std::vector<int> rem(n);
  std::vector<char> marked(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    rem[v] = static_cast<int>(si.edges[v].size());
    for (int l : si.legs[v])
      if (S.leg(l).mark) marked[v] = 1;
  }
  std::size_t alive = n;
  for (;;) {
    std::vector<int> round;
    for (std::size_t v = 0; v < n; ++v)
      if (p.core[v] && !marked[v] && S.vertex(static_cast<int>(v)).genus == 0 && rem[v] <= 1)
        round.push_back(static_cast<int>(v));
    if (round.empty() || round.size() == alive) break;
    for (int v : round) p.core[at(v)] = 0;
    for (int v : round) {
      for (int e : si.edges[at(v)]) {
        int q = S.other_end(e, v);
        if (!p.core[at(q)]) continue;
        p.parent_edge[at(v)] = e;
        --rem[at(q)];
      }
      p.order.push_back(v);
    }
    alive -= round.size();
  }
  return p;
}

struct Codes {
  std::vector<int> vertex;  // peeled vertices
  std::vector<int> leg;     // unmarked legs
};

Codes branch_codes(const TropicalCover& c, const Incidence& si, const Peel& p, const TargetMap& tau,
                   detail::Interner& in) {
  const MetricGraph& S = c.source;
  Codes out;
  out.vertex.assign(at(S.vertex_count()), -1);
  out.leg.assign(at(S.leg_count()), -1);
  for (int l = 0; l < S.leg_count(); ++l)
    if (!S.leg(l).mark) out.leg[at(l)] = in.id({11, tau.leg[at(c.leg_map[at(l)].leg)], c.leg_map[at(l)].expansion});
  std::vector<long long> key, kids, legs;
  for (int v : p.order) {
    int pe = p.parent_edge[at(v)];
    kids.clear();
    legs.clear();
    for (int e : si.edges[at(v)])
      if (e != pe) kids.push_back(out.vertex[at(S.other_end(e, v))]);
    for (int l : si.legs[at(v)]) legs.push_back(out.leg[at(l)]);
    std::sort(kids.begin(), kids.end());
    std::sort(legs.begin(), legs.end());
    key.assign({10, pe < 0 ? -1 : tau.edge[at(c.edge_map[at(pe)].edge)], pe < 0 ? 0 : c.edge_map[at(pe)].expansion,
                tau.vertex[at(c.vertex_map[at(v)])], S.vertex(v).genus, static_cast<long long>(kids.size())});
    key.insert(key.end(), kids.begin(), kids.end());
    key.insert(key.end(), legs.begin(), legs.end());
    out.vertex[at(v)] = in.id(key);
  }
  return out;
}

// Pendant branch classes hanging at v.
std::vector<int> pendant_items(const MetricGraph& S, const Incidence& si, const Peel& p, const Codes& codes, int v) {
  std::vector<int> items;
  for (int e : si.edges[at(v)]) {
    int q = S.other_end(e, v);
    if (q != v && !p.core[at(q)] && p.parent_edge[at(q)] == e) items.push_back(codes.vertex[at(q)]);
  }
  for (int l : si.legs[at(v)])
    if (codes.leg[at(l)] >= 0) items.push_back(codes.leg[at(l)]);
  std::sort(items.begin(), items.end());
  return items;
}

// Colour-coded node graph of a target tree; node order: vertices, half-edges, legs.
detail::ColoredGraph encode_target(const MetricGraph& T) {
  detail::Interner keys;
  std::map<LinForm, int> lengths;
  detail::ColoredGraph g;
  for (int v = 0; v < T.vertex_count(); ++v) g.add_node(keys.id({0, T.vertex(v).genus}));
  for (int e = 0; e < T.edge_count(); ++e) {
    int len = lengths.emplace(T.edge(e).length, static_cast<int>(lengths.size())).first->second;
    int h0 = g.add_node(keys.id({1, len}));
    int h1 = g.add_node(keys.id({1, len}));
    g.add_arc(T.edge(e).u, h0, 1);
    g.add_arc(T.edge(e).v, h1, 1);
    g.add_arc(h0, h1, 2);
  }
  for (int l = 0; l < T.leg_count(); ++l) {
    int leg = g.add_node(keys.id({2, T.leg(l).mark ? *T.leg(l).mark : -1}));
    g.add_arc(T.leg(l).vertex, leg, 3);
  }
  return g;
}

TargetMap decode_target(const MetricGraph& T, const std::vector<int>& pi) {
  TargetMap m;
  const int V = T.vertex_count(), E = T.edge_count();
  for (int v = 0; v < V; ++v) m.vertex.push_back(pi[at(v)]);
  for (int e = 0; e < E; ++e) m.edge.push_back((pi[at(V + 2 * e)] - V) / 2);
  for (int l = 0; l < T.leg_count(); ++l) m.leg.push_back(pi[at(V + 2 * E + l)] - V - 2 * E);
  return m;
}

class Lifter {
 public:
  explicit Lifter(const TropicalCover& c) : c_(c), si_(c.source), peel_(peel(c.source, si_)) {
    const MetricGraph& S = c.source;
    for (int v = 0; v < S.vertex_count(); ++v)
      if (peel_.core[at(v)]) core_.push_back(v);
    adj_.resize(at(S.vertex_count()));
    for (int v : core_)
      for (int e : si_.edges[at(v)]) {
        int w = S.other_end(e, v);
        if (peel_.core[at(w)]) adj_[at(v)][w].push_back(e);
      }
    // BFS order over the core
    std::vector<char> seen(at(S.vertex_count()), 0);
    parent_.assign(at(S.vertex_count()), -1);
    for (int root : core_) {
      if (seen[at(root)]) continue;
      seen[at(root)] = 1;
      order_.push_back(root);
      for (std::size_t i = order_.size() - 1; i < order_.size(); ++i)
        for (const auto& [w, es] : adj_[at(order_[i])])
          if (!seen[at(w)]) {
            seen[at(w)] = 1;
            parent_[at(w)] = order_[i];
            order_.push_back(w);
          }
    }
    TargetMap id = TargetMap::identity(c.target);
    id_sig_ = signatures(id);
    id_pairs_ = pair_keys(id);
  }

  // number of core vertex maps over tau, stopping early when `first_only`
  long count(const TargetMap& tau, bool first_only) {
    tau_sig_ = signatures(tau);
    tau_pairs_ = pair_keys(tau);
    image_.assign(at(c_.source.vertex_count()), -1);
    used_.assign(at(c_.source.vertex_count()), 0);
    found_ = 0;
    budget_ = 50'000'000;
    first_only_ = first_only;
    search(0);
    return found_;
  }

  BigInt parallel_factor() const {
    BigInt out = 1;
    for (int v : core_)
      for (const auto& [w, es] : adj_[at(v)]) {
        if (w < v) continue;
        std::map<std::pair<int, int>, int> groups;
        for (int e : es) ++groups[{c_.edge_map[at(e)].edge, c_.edge_map[at(e)].expansion}];
        for (const auto& [k, n] : groups) out *= factorial(n);
      }
    return out;
  }

 private:
  using PairKeys = std::vector<std::map<int, std::vector<std::pair<int, int>>>>;

  std::vector<int> signatures(const TargetMap& tau) {
    Codes codes = branch_codes(c_, si_, peel_, tau, in_);
    std::vector<int> sig(at(c_.source.vertex_count()), -1);
    std::vector<long long> key;
    for (int v : core_) {
      key.assign({20, tau.vertex[at(c_.vertex_map[at(v)])], c_.source.vertex(v).genus});
      std::vector<long long> marks;
      for (int l : si_.legs[at(v)])
        if (auto m = c_.source.leg(l).mark) marks.push_back(*m);
      std::sort(marks.begin(), marks.end());
      key.push_back(static_cast<long long>(marks.size()));
      key.insert(key.end(), marks.begin(), marks.end());
      for (int item : pendant_items(c_.source, si_, peel_, codes, v)) key.push_back(item);
      sig[at(v)] = in_.id(key);
    }
    return sig;
  }

  PairKeys pair_keys(const TargetMap& tau) const {
    PairKeys out(at(c_.source.vertex_count()));
    for (int v : core_)
      for (const auto& [w, es] : adj_[at(v)]) {
        auto& k = out[at(v)][w];
        for (int e : es) k.emplace_back(tau.edge[at(c_.edge_map[at(e)].edge)], c_.edge_map[at(e)].expansion);
        std::sort(k.begin(), k.end());
      }
    return out;
  }

  void search(std::size_t i) {
    if (first_only_ && found_ > 0) return;
    if (--budget_ < 0) fail(ErrorCode::TooLarge, "cover automorphism search budget exhausted");
    if (i == order_.size()) {
      ++found_;
      return;
    }
    int v = order_[i];
    auto try_image = [&](int w) {
      if (used_[at(w)] || id_sig_[at(w)] != tau_sig_[at(v)]) return;
      std::size_t assigned = 0;
      for (const auto& [u, es] : adj_[at(v)]) {
        if (image_[at(u)] < 0) continue;
        ++assigned;
        auto it = id_pairs_[at(w)].find(image_[at(u)]);
        if (it == id_pairs_[at(w)].end() || it->second != tau_pairs_[at(v)].at(u)) return;
      }
      std::size_t assigned_w = 0;
      for (const auto& [x, es] : adj_[at(w)])
        if (used_[at(x)]) ++assigned_w;
      if (assigned_w != assigned) return;
      image_[at(v)] = w;
      used_[at(w)] = 1;
      search(i + 1);
      image_[at(v)] = -1;
      used_[at(w)] = 0;
    };
    int p = parent_[at(v)];
    if (p >= 0) {
      for (const auto& [w, es] : adj_[at(image_[at(p)])]) try_image(w);
    } else {
      for (int w : core_) try_image(w);
    }
  }

  const TropicalCover& c_;
  Incidence si_;
  Peel peel_;
  detail::Interner in_;
  std::vector<int> core_, order_, parent_;
  std::vector<std::map<int, std::vector<int>>> adj_;
  std::vector<int> id_sig_, tau_sig_;
  PairKeys id_pairs_, tau_pairs_;
  std::vector<int> image_;
  std::vector<char> used_;
  long found_ = 0;
  long budget_ = 0;
  bool first_only_ = false;
};

}  // namespace

PendantStructure pendant_structure(const TropicalCover& c) {
  check_incidence(c);
  Incidence si(c.source);
  Peel p = peel(c.source, si);
  detail::Interner in;
  Codes codes = branch_codes(c, si, p, TargetMap::identity(c.target), in);
  return {p.core, p.parent_edge, codes.vertex, codes.leg};
}

BigInt pendant_symmetry_order(const TropicalCover& c) {
  check_incidence(c);
  Incidence si(c.source);
  Peel p = peel(c.source, si);
  detail::Interner in;
  Codes codes = branch_codes(c, si, p, TargetMap::identity(c.target), in);
  BigInt out = 1;
  for (int v = 0; v < c.source.vertex_count(); ++v) {
    std::map<int, int> mult;
    for (int item : pendant_items(c.source, si, p, codes, v)) ++mult[item];
    for (const auto& [k, n] : mult) out *= factorial(n);
  }
  return out;
}

BigInt cover_automorphism_count(const TropicalCover& c) {
  check_incidence(c);
  detail::ColoredGraph tg = encode_target(c.target);
  detail::AutomorphismGroup group = detail::automorphism_group(tg);
  Lifter lifter(c);
  BigInt over_identity = BigInt(lifter.count(TargetMap::identity(c.target), false)) * lifter.parallel_factor();
  // liftable target automorphisms form a subgroup
  bool all_lift = true;
  for (const auto& pi : group.generators)
    if (lifter.count(decode_target(c.target, pi), true) == 0) {
      all_lift = false;
      break;
    }
  if (all_lift) return group.order * over_identity;
  if (group.order > 1 << 16) fail(ErrorCode::TooLarge, "target automorphism group of order " + to_string(group.order));
  long liftable = 0;
  for (const auto& pi : detail::enumerate_automorphisms(tg, 1 << 16))
    if (lifter.count(decode_target(c.target, pi), true) > 0) ++liftable;
  return BigInt(liftable) * over_identity;
}

namespace {

detail::ColoredGraph encode_cover(const TropicalCover& c, detail::Interner& keys, std::map<LinForm, int>& lengths,
                                  bool respect) {
  const MetricGraph& S = c.source;
  const MetricGraph& T = c.target;
  auto len = [&](const LinForm& f) -> long long {
    return respect ? lengths.emplace(f, static_cast<int>(lengths.size()) + 1).first->second : 0;
  };
  detail::ColoredGraph g;
  const int TV = T.vertex_count(), TE = T.edge_count();
  for (int v = 0; v < TV; ++v) g.add_node(keys.id({0, T.vertex(v).genus}));
  for (int e = 0; e < TE; ++e) {
    int color = keys.id({1, len(T.edge(e).length)});
    int h0 = g.add_node(color), h1 = g.add_node(color);
    g.add_arc(T.edge(e).u, h0, 1);
    g.add_arc(T.edge(e).v, h1, 1);
    g.add_arc(h0, h1, 2);
  }
  const int tleg0 = g.size();
  for (int l = 0; l < T.leg_count(); ++l) {
    int node = g.add_node(keys.id({2, T.leg(l).mark ? *T.leg(l).mark : -1}));
    g.add_arc(T.leg(l).vertex, node, 3);
  }
  const int sv0 = g.size();
  for (int v = 0; v < S.vertex_count(); ++v) {
    int node = g.add_node(keys.id({3, S.vertex(v).genus}));
    g.add_arc(node, c.vertex_map[at(v)], 7);
  }
  for (int e = 0; e < S.edge_count(); ++e) {
    const EdgeImage& img = c.edge_map[at(e)];
    int color = keys.id({4, img.expansion, len(S.edge(e).length)});
    int h0 = g.add_node(color), h1 = g.add_node(color);
    g.add_arc(sv0 + S.edge(e).u, h0, 4);
    g.add_arc(sv0 + S.edge(e).v, h1, 4);
    g.add_arc(h0, h1, 5);
    int t0 = TV + 2 * img.edge;
    bool straight = T.edge(img.edge).u == c.vertex_map[at(S.edge(e).u)];
    g.add_arc(h0, straight ? t0 : t0 + 1, 8);
    g.add_arc(h1, straight ? t0 + 1 : t0, 8);
  }
  for (int l = 0; l < S.leg_count(); ++l) {
    const LegImage& img = c.leg_map[at(l)];
    int node = g.add_node(keys.id({5, S.leg(l).mark ? *S.leg(l).mark : -1, img.expansion}));
    g.add_arc(sv0 + S.leg(l).vertex, node, 6);
    g.add_arc(node, tleg0 + img.leg, 9);
  }
  if (g.size() > kCoverNodeLimit)
    fail(ErrorCode::TooLarge, "cover encoding has " + std::to_string(g.size()) + " nodes");
  return g;
}

}  // namespace

BigInt full_cover_automorphism_count(const TropicalCover& c) {
  check_incidence(c);
  detail::Interner keys;
  std::map<LinForm, int> lengths;
  return detail::count_automorphisms(encode_cover(c, keys, lengths, true));
}

bool covers_isomorphic(const TropicalCover& a, const TropicalCover& b, bool respect_lengths) {
  check_incidence(a);
  check_incidence(b);
  if (a.source.vertex_count() != b.source.vertex_count() || a.source.edge_count() != b.source.edge_count() ||
      a.source.leg_count() != b.source.leg_count() || a.target.vertex_count() != b.target.vertex_count() ||
      a.target.edge_count() != b.target.edge_count() || a.target.leg_count() != b.target.leg_count())
    return false;
  detail::Interner keys;
  std::map<LinForm, int> lengths;
  auto ga = encode_cover(a, keys, lengths, respect_lengths);
  auto gb = encode_cover(b, keys, lengths, respect_lengths);
  return detail::find_isomorphism(ga, gb).has_value();
}

}  // namespace tropitev
