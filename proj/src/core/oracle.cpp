#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "error.hpp"
#include "sheets.hpp"

namespace tropitev {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

constexpr int kLeaves = 8;
constexpr int kMarks = 4;

std::vector<std::vector<int>> adjacency(const TreeTopology& t) {
  std::vector<std::vector<int>> adj(at(2 * t.leaves - 2));
  for (auto [u, v] : t.edges) {
    adj[at(u)].push_back(v);
    adj[at(v)].push_back(u);
  }
  return adj;
}

void insert_leaves(TreeTopology& t, int next, int leaves, std::vector<TreeTopology>& out) {
  if (next == leaves) {
    out.push_back(t);
    return;
  }
  const int w = leaves + next - 2;
  const std::size_t count = t.edges.size();
  for (std::size_t i = 0; i < count; ++i) {
    auto [u, v] = t.edges[i];
    t.edges[i] = {u, w};
    t.edges.push_back({w, v});
    t.edges.push_back({w, next});
    insert_leaves(t, next + 1, leaves, out);
    t.edges.pop_back();
    t.edges.pop_back();
    t.edges[i] = {u, v};
  }
}

// reduced row echelon on [A | rhs]; false when singular
template <class Rhs>
bool solve(std::vector<std::vector<Rational>> a, std::vector<Rhs>& rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    rhs[col] = rhs[col] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] = rhs[r] - rhs[col] * f;
    }
  }
  return true;
}

LinForm substitute(const LinForm& f, const std::vector<LinForm>& ys) {
  LinForm out(f.constant());
  for (const auto& [prm, c] : f.terms()) {
    if (prm.kind != ParamKind::Y) fail(ErrorCode::Internal, "unexpected parameter in " + f.str());
    out += ys[at(prm.index - 1)] * c;
  }
  return out;
}

// coefficient row of sum(lengths) over y_1..y_n
std::vector<Rational> coefficients(const MetricGraph& G, const std::vector<int>& edges, int n) {
  std::vector<Rational> row(at(n), 0);
  for (int e : edges)
    for (const auto& [prm, c] : G.edge(e).length.terms()) row[at(prm.index - 1)] += c;
  return row;
}

}  // namespace

std::vector<TreeTopology> enumerate_labeled_trees(int leaves) {
  if (leaves < 3) fail(ErrorCode::InvalidArgument, "trivalent trees need at least 3 leaves");
  if (leaves > 10) fail(ErrorCode::TooLarge, "tree enumeration limited to 10 leaves");
  TreeTopology t;
  t.leaves = leaves;
  t.edges = {{leaves, 0}, {leaves, 1}, {leaves, 2}};
  std::vector<TreeTopology> out;
  insert_leaves(t, 3, leaves, out);
  return out;
}

std::string canonical_form(const TreeTopology& t, int marked) {
  auto adj = adjacency(t);
  std::function<std::string(int, int)> form = [&](int node, int parent) -> std::string {
    if (node < t.leaves) return node < marked ? std::to_string(node + 1) : "b";
    std::vector<std::string> kids;
    for (int x : adj[at(node)])
      if (x != parent) kids.push_back(form(x, node));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? "," : "") + kids[i];
    return s + ")";
  };
  return "1" + form(adj[0][0], 0);
}

std::vector<TreeTopology> enumerate_tree_topologies() {
  std::vector<TreeTopology> out;
  std::set<std::string> seen;
  for (TreeTopology& t : enumerate_labeled_trees(kLeaves))
    if (seen.insert(canonical_form(t, kMarks)).second) out.push_back(std::move(t));
  return out;
}

TropicalCover double_cover(const TreeTopology& t, const std::vector<int>& lifts) {
  if (t.leaves != kLeaves) fail(ErrorCode::InvalidArgument, "double cover needs 8 leaves");
  if (lifts.size() != kMarks) fail(ErrorCode::InvalidArgument, "need one lift per mark");
  auto adj = adjacency(t);
  std::function<int(int, int)> branches = [&](int node, int parent) {
    if (node < t.leaves) return node >= kMarks ? 1 : 0;
    int s = 0;
    for (int x : adj[at(node)])
      if (x != parent) s += branches(x, node);
    return s;
  };
  detail::SheetBuilder b(2);
  for (int w = t.leaves; w < 2 * t.leaves - 2; ++w) b.vertex();
  int y = 0;
  for (auto [u, v] : t.edges) {
    if (u < t.leaves || v < t.leaves) continue;
    detail::Blocks blocks;
    if (branches(v, u) % 2) blocks = {{0, 1}};
    b.edge(u - t.leaves, v - t.leaves, LinForm(y_param(++y)), blocks);
  }
  for (int leaf = 0; leaf < t.leaves; ++leaf) {
    int w = adj[at(leaf)][0] - t.leaves;
    if (leaf < kMarks) b.leg(w, leaf + 1, {}, lifts[at(leaf)]);
    else b.leg(w, std::nullopt, {{0, 1}});
  }
  TropicalCover c = b.build();
  if (!c.source.connected()) fail(ErrorCode::DisconnectedCover, "double cover is disconnected");
  if (total_genus(c.source) != 1) fail(ErrorCode::Internal, "double cover does not have genus 1");
  return c;
}

const char* to_string(OracleOutcome o) {
  switch (o) {
    case OracleOutcome::NoCover: return "no-cover";
    case OracleOutcome::Infeasible: return "infeasible";
    case OracleOutcome::Solution: return "solution";
  }
  return "?";
}

OracleResult find_all_preimages_g1(const ReferencePoint& p, std::optional<BigInt> base) {
  if (p.genus != 1) fail(ErrorCode::InvalidArgument, "the oracle runs at genus 1 only");
  const int g = 1;
  OracleResult out;
  out.base = base ? *base : default_base(g);
  if (out.base <= BigInt((g + 3) * (g + 1))) fail(ErrorCode::InvalidArgument, "base too small");
  const std::set<int> keep{1, 2, 3, 4};
  const int unknowns = 5 * g;
  std::vector<TreeTopology> trees = enumerate_labeled_trees(kLeaves);
  out.labeled_count = trees.size();
  std::set<std::string> seen;
  for (const TreeTopology& t : trees) {
    std::string canon = canonical_form(t, kMarks);
    if (!seen.insert(canon).second) continue;
    TopologyResult res{canon, OracleOutcome::NoCover, 0};
    TropicalCover base_cover = double_cover(t);
    StableModel tm = stabilize(base_cover.target, keep);
    auto ti = isomorphic(tm.graph, p.t_bar, false);
    if (ti) {
      // mark 1 stays on sheet 0: the deck involution swaps the rest
      for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> lifts{0, mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
        TropicalCover c = double_cover(t, lifts);
        StableModel sm = stabilize(c.source, keep);
        auto si = isomorphic(sm.graph, p.gamma_bar, false);
        if (!si) continue;
        if (res.outcome == OracleOutcome::NoCover) res.outcome = OracleOutcome::Infeasible;
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> rhs_num;
        std::vector<LinForm> rhs_sym;
        auto add_rows = [&](const StableModel& m, const MetricGraph& ref, const std::vector<int>& edge_map,
                            const MetricGraph& orig) {
          for (int e = 0; e < m.graph.edge_count(); ++e) {
            a.push_back(coefficients(orig, m.provenance[at(e)], unknowns));
            const LinForm& len = ref.edge(edge_map[at(e)]).length;
            rhs_num.push_back(instantiate(len, g, out.base));
            rhs_sym.push_back(len);
          }
        };
        add_rows(sm, p.gamma_bar, si->edge_map, c.source);
        add_rows(tm, p.t_bar, ti->edge_map, c.target);
        if (a.size() != static_cast<std::size_t>(unknowns)) fail(ErrorCode::Internal, "oracle system is not square");
        ++out.systems;
        if (!solve(a, rhs_num)) continue;
        if (!std::all_of(rhs_num.begin(), rhs_num.end(), [](const Rational& v) { return v > 0; })) continue;
        solve(a, rhs_sym);
        for (int e = 0; e < c.target.edge_count(); ++e) c.target.set_length(e, substitute(c.target.edge(e).length, rhs_sym));
        for (int e = 0; e < c.source.edge_count(); ++e) c.source.set_length(e, substitute(c.source.edge(e).length, rhs_sym));
        verify_solution(c, p, out.base);
        res.outcome = OracleOutcome::Solution;
        ++res.solved_lifts;
        ++out.raw_solutions;
        bool dup = std::any_of(out.covers.begin(), out.covers.end(),
                               [&](const TropicalCover& o) { return covers_isomorphic(o, c, true); });
        if (!dup) out.covers.push_back(std::move(c));
      }
    }
    out.topologies.push_back(std::move(res));
  }
  return out;
}

std::vector<int> match_construction(const OracleResult& r, const std::vector<Solution>& constructed) {
  std::vector<int> out;
  for (const TropicalCover& c : r.covers) {
    int hit = -1;
    for (std::size_t i = 0; i < constructed.size() && hit < 0; ++i)
      if (covers_isomorphic(c, constructed[i].cover, true)) hit = static_cast<int>(i);
    out.push_back(hit);
  }
  return out;
}

}  // namespace tropitev
