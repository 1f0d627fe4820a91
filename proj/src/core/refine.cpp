#include "refine.hpp"

#include <algorithm>

#include "error.hpp"

namespace tropitev::detail {

int Interner::id(const std::vector<long long>& key) {
  auto [it, fresh] = ids_.emplace(key, static_cast<int>(ids_.size()));
  return it->second;
}

int ColoredGraph::add_node(int color) {
  color_.push_back(color);
  adj_.emplace_back();
  return size() - 1;
}

void ColoredGraph::add_arc(int u, int v, int color) {
  adj_[static_cast<std::size_t>(u)].emplace_back(v, color);
  adj_[static_cast<std::size_t>(v)].emplace_back(u, color);
  ++arcs_;
}

namespace {

using Coloring = std::vector<int>;

std::size_t distinct(const Coloring& c) {
  Coloring s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

Coloring refine(const ColoredGraph& g, Coloring col, Interner& in) {
  std::size_t cells = distinct(col);
  std::vector<long long> key;
  std::vector<std::pair<int, int>> nb;
  for (;;) {
    Coloring next(col.size());
    for (int u = 0; u < g.size(); ++u) {
      nb.clear();
      for (auto [v, c] : g.neighbors(u)) nb.emplace_back(c, col[static_cast<std::size_t>(v)]);
      std::sort(nb.begin(), nb.end());
      key.assign({0, col[static_cast<std::size_t>(u)]});
      for (auto [c, k] : nb) {
        key.push_back(c);
        key.push_back(k);
      }
      next[static_cast<std::size_t>(u)] = in.id(key);
    }
    std::size_t now = distinct(next);
    col.swap(next);
    if (now == cells) return col;
    cells = now;
  }
}

Coloring sorted(Coloring c) {
  std::sort(c.begin(), c.end());
  return c;
}

// smallest non-singleton cell, ties by colour id; -1 when discrete
int choose_cell(const Coloring& col) {
  std::map<int, int> count;
  for (int c : col) ++count[c];
  int best = -1, best_size = 0;
  for (auto [c, k] : count)
    if (k >= 2 && (best < 0 || k < best_size)) {
      best = c;
      best_size = k;
    }
  return best;
}

bool verify(const ColoredGraph& a, const ColoredGraph& b, const std::vector<int>& pi) {
  if (a.size() != b.size() || a.arc_count() != b.arc_count()) return false;
  std::vector<std::pair<int, int>> lhs, rhs;
  for (int u = 0; u < a.size(); ++u) {
    int pu = pi[static_cast<std::size_t>(u)];
    if (a.colors()[static_cast<std::size_t>(u)] != b.colors()[static_cast<std::size_t>(pu)]) return false;
    lhs.clear();
    for (auto [v, c] : a.neighbors(u)) lhs.emplace_back(pi[static_cast<std::size_t>(v)], c);
    rhs = b.neighbors(pu);
    if (lhs.size() != rhs.size()) return false;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

struct Search {
  const ColoredGraph& a;
  const ColoredGraph& b;
  Interner in;
  std::size_t limit = 1;
  std::vector<std::vector<int>> found;

  // Explores (a, ca) -> (b, cb). Stops once `limit` maps are found.
  void run(Coloring ca, Coloring cb, int depth) {
    ca = refine(a, std::move(ca), in);
    cb = refine(b, std::move(cb), in);
    if (sorted(ca) != sorted(cb)) return;
    int cell = choose_cell(ca);
    if (cell < 0) {
      std::map<int, int> where;
      for (int w = 0; w < b.size(); ++w) where[cb[static_cast<std::size_t>(w)]] = w;
      std::vector<int> pi(static_cast<std::size_t>(a.size()));
      for (int u = 0; u < a.size(); ++u) pi[static_cast<std::size_t>(u)] = where[ca[static_cast<std::size_t>(u)]];
      if (verify(a, b, pi)) found.push_back(std::move(pi));
      return;
    }
    int v = static_cast<int>(std::find(ca.begin(), ca.end(), cell) - ca.begin());
    int mark = in.id({1, depth, cell});
    for (int w = 0; w < b.size() && found.size() < limit; ++w) {
      if (cb[static_cast<std::size_t>(w)] != cell) continue;
      Coloring na = ca, nb = cb;
      na[static_cast<std::size_t>(v)] = mark;
      nb[static_cast<std::size_t>(w)] = mark;
      run(std::move(na), std::move(nb), depth + 1);
    }
  }
};

BigInt count_rec(const ColoredGraph& g, Coloring col, Interner& in, int depth, std::vector<std::vector<int>>* gens) {
  col = refine(g, std::move(col), in);
  int cell = choose_cell(col);
  if (cell < 0) return 1;
  int v = static_cast<int>(std::find(col.begin(), col.end(), cell) - col.begin());
  // one shared mark id so the stabiliser colouring and the orbit probes agree
  int mark = in.id({2, depth, cell});
  Coloring fixed = col;
  fixed[static_cast<std::size_t>(v)] = mark;
  BigInt stab = count_rec(g, fixed, in, depth + 1, gens);
  long orbit = 1;
  for (int w = 0; w < g.size(); ++w) {
    if (w == v || col[static_cast<std::size_t>(w)] != cell) continue;
    Coloring moved = col;
    moved[static_cast<std::size_t>(w)] = mark;
    Search s{g, g, {}, 1, {}};
    s.run(fixed, moved, 0);
    if (s.found.empty()) continue;
    ++orbit;
    if (gens) gens->push_back(std::move(s.found.front()));
  }
  return stab * orbit;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.size() != b.size() || a.arc_count() != b.arc_count()) return std::nullopt;
  Search s{a, b, {}, 1, {}};
  s.run(a.colors(), b.colors(), 0);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

BigInt count_automorphisms(const ColoredGraph& g) {
  Interner in;
  return count_rec(g, g.colors(), in, 0, nullptr);
}

AutomorphismGroup automorphism_group(const ColoredGraph& g) {
  Interner in;
  AutomorphismGroup out;
  out.order = count_rec(g, g.colors(), in, 0, &out.generators);
  return out;
}

std::vector<std::vector<int>> enumerate_automorphisms(const ColoredGraph& g, std::size_t limit) {
  Search s{g, g, {}, limit + 1, {}};
  s.run(g.colors(), g.colors(), 0);
  if (s.found.size() > limit) fail(ErrorCode::TooLarge, "automorphism enumeration exceeded " + std::to_string(limit));
  return std::move(s.found);
}

}  // namespace tropitev::detail
