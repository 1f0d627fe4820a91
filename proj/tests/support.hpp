// Independent reference implementations for the tests.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cover.hpp"
#include "graph.hpp"
#include "numeric.hpp"

namespace tt_test {

using tropitev::BigInt;
using tropitev::IntMatrix;
using tropitev::LinForm;
using tropitev::MetricGraph;

inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    BigInt minor = cofactor_det(m.submatrix(rows, cols));
    s += (c % 2 ? -1 : 1) * m(0, c) * minor;
  }
  return s;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
  return m;
}

// Sum over vertex bijections that preserve genus, valence and marks and carry
// every edge multiset onto its image, weighted by the edge and leg bijections
// each one admits.
inline BigInt filter_automorphisms(const MetricGraph& g) {
  const int n = g.vertex_count();
  using Key = std::tuple<int, int, std::vector<int>, int>;
  std::vector<Key> inv;
  for (int v = 0; v < n; ++v) {
    std::vector<int> marks;
    int unmarked = 0;
    for (int l : g.incident_legs(v)) {
      if (g.leg(l).mark) marks.push_back(*g.leg(l).mark);
      else ++unmarked;
    }
    std::sort(marks.begin(), marks.end());
    inv.emplace_back(g.vertex(v).genus, g.valence(v), marks, unmarked);
  }
  std::map<std::pair<int, int>, std::vector<LinForm>> between;
  for (const auto& e : g.edges()) between[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.length);
  for (auto& [k, v] : between) std::sort(v.begin(), v.end());
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  BigInt total = 0;
  std::function<void(int)> assign = [&](int v) {
    if (v == n) {
      BigInt weight = 1;
      for (const auto& [k, lens] : between) {
        int a = perm[static_cast<std::size_t>(k.first)], b = perm[static_cast<std::size_t>(k.second)];
        auto it = between.find({std::min(a, b), std::max(a, b)});
        if (it == between.end() || it->second != lens) return;
        for (std::size_t i = 0; i < lens.size();) {
          std::size_t j = i;
          while (j < lens.size() && lens[j] == lens[i]) ++j;
          weight *= tropitev::factorial(static_cast<int>(j - i));
          i = j;
        }
        if (k.first == k.second)
          for (std::size_t i = 0; i < lens.size(); ++i) weight *= 2;
      }
      for (int u = 0; u < n; ++u) weight *= tropitev::factorial(std::get<3>(inv[static_cast<std::size_t>(u)]));
      total += weight;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || inv[static_cast<std::size_t>(w)] != inv[static_cast<std::size_t>(v)])
        continue;
      used[static_cast<std::size_t>(w)] = 1;
      perm[static_cast<std::size_t>(v)] = w;
      assign(v + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  assign(0);
  return total;
}

using Perm = std::vector<int>;

inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// all pairs (s1, s2) over the full symmetric group
inline BigInt brute_factorizations(std::vector<int> a, std::vector<int> b, std::vector<int> c) {
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  std::sort(c.rbegin(), c.rend());
  const int d = std::accumulate(a.begin(), a.end(), 0);
  std::vector<Perm> all;
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  long hits = 0;
  for (const Perm& s1 : all) {
    if (cycle_type(s1) != a) continue;
    for (const Perm& s2 : all) {
      if (cycle_type(s2) != b) continue;
      Perm s3(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) s3[static_cast<std::size_t>(s1[static_cast<std::size_t>(s2[static_cast<std::size_t>(i)])])] = i;
      if (cycle_type(s3) != c) continue;
      std::vector<int> comp(static_cast<std::size_t>(d));
      std::iota(comp.begin(), comp.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]);
      };
      for (int i = 0; i < d; ++i) {
        comp[static_cast<std::size_t>(find(i))] = find(s1[static_cast<std::size_t>(i)]);
        comp[static_cast<std::size_t>(find(i))] = find(s2[static_cast<std::size_t>(i)]);
      }
      int roots = 0;
      for (int i = 0; i < d; ++i) roots += find(i) == i;
      if (roots == 1) ++hits;
    }
  }
  return hits;
}

inline std::vector<std::vector<int>> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(rest);
    }
  return out;
}

// every string over {U, D} of length len, no pruning
inline std::vector<std::string> all_words(int len) {
  std::vector<std::string> out{""};
  for (int i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out) {
      next.push_back(w + "U");
      next.push_back(w + "D");
    }
    out = std::move(next);
  }
  return out;
}

// Pascal's triangle
inline BigInt binomial_ref(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<BigInt> row{1};
  for (int r = 1; r <= n; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r + 1), 1);
    for (int i = 1; i < r; ++i) next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)] + row[static_cast<std::size_t>(i)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

inline bool stays_positive(const std::string& w) {
  int h = 2;
  for (char ch : w) {
    h += ch == 'U' ? 1 : -1;
    if (h < 1) return false;
  }
  return true;
}

inline int final_height(const std::string& w) {
  int h = 2;
  for (char ch : w) h += ch == 'U' ? 1 : -1;
  return h;
}

// Random connected graph with loops, parallel edges, legs and genera.
inline MetricGraph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> nv(1, 7), coin(0, 3), coeff(1, 3);
  MetricGraph g;
  const int n = nv(rng);
  for (int v = 0; v < n; ++v) g.add_vertex(coin(rng) == 0 ? 1 : 0);
  int y = 0;
  auto length = [&] {
    LinForm f(tropitev::y_param(++y), coeff(rng));
    if (coin(rng) == 0) f += LinForm(tropitev::y_param(1), 1);
    return f;
  };
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v, length());
  }
  std::uniform_int_distribution<int> extra(0, 3), any(0, n - 1);
  for (int k = extra(rng); k > 0; --k) g.add_edge(any(rng), any(rng), length());
  std::uniform_int_distribution<int> legs(1, 6);
  int mark = 0;
  for (int k = legs(rng); k > 0; --k) {
    if (coin(rng) == 0) g.add_leg(any(rng));
    else g.add_leg(any(rng), ++mark);
  }
  return g;
}

// move mark m to another preimage of its target leg
inline bool move_mark(tropitev::TropicalCover& c, int m, int choice = 0) {
  auto l = c.source.leg_with_mark(m);
  if (!l) return false;
  int t = c.leg_map[static_cast<std::size_t>(*l)].leg;
  int seen = 0;
  for (int s = 0; s < c.source.leg_count(); ++s) {
    if (s == *l || c.leg_map[static_cast<std::size_t>(s)].leg != t || c.source.leg(s).mark) continue;
    if (seen++ != choice) continue;
    c.source.set_mark(*l, std::nullopt);
    c.source.set_mark(s, m);
    return true;
  }
  return false;
}

}  // namespace tt_test
