#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "cover.hpp"
#include "error.hpp"

namespace tropitev::detail {

inline std::size_t sat(int i) { return static_cast<std::size_t>(i); }

using Blocks = std::vector<std::vector<int>>;

// Target tree whose edges and legs carry set partitions of the sheets
// {0..d-1}. Source vertices over w are the classes of the join of the
// partitions at w; source edges and legs are blocks.
class SheetBuilder {
 public:
  explicit SheetBuilder(int d) : d_(d) {}

  int vertex() { return target_.add_vertex(); }

  int edge(int a, int b, LinForm length, const Blocks& blocks) {
    edge_blocks_.push_back(labels(blocks));
    return target_.add_edge(a, b, std::move(length));
  }

  int leg(int a, std::optional<int> mark, const Blocks& blocks, int marked_sheet = -1) {
    leg_blocks_.push_back(labels(blocks));
    mark_sheet_.push_back(marked_sheet);
    return target_.add_leg(a, mark);
  }

  TropicalCover build() const {
    TropicalCover c;
    c.target = target_;
    const MetricGraph& T = target_;
    Incidence ti(T);
    std::vector<std::vector<int>> over(sat(T.vertex_count()), std::vector<int>(sat(d_), -1));
    for (int w = 0; w < T.vertex_count(); ++w) {
      std::vector<int> parent(sat(d_));
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[sat(x)] != x) x = parent[sat(x)];
        return x;
      };
      auto merge = [&](const std::vector<int>& lab) {
        for (int s = 0; s < d_; ++s) {
          int a = find(s), b = find(lab[sat(s)]);
          if (a != b) parent[sat(std::max(a, b))] = std::min(a, b);
        }
      };
      for (int e : ti.edges[sat(w)]) merge(edge_blocks_[sat(e)]);
      for (int l : ti.legs[sat(w)]) merge(leg_blocks_[sat(l)]);
      for (int s = 0; s < d_; ++s) {
        int root = find(s);
        if (over[sat(w)][sat(root)] < 0) {
          over[sat(w)][sat(root)] = c.source.add_vertex();
          c.vertex_map.push_back(w);
        }
        over[sat(w)][sat(s)] = over[sat(w)][sat(root)];
      }
    }
    for (int e = 0; e < T.edge_count(); ++e) {
      const auto& lab = edge_blocks_[sat(e)];
      for (int s = 0; s < d_; ++s) {
        if (lab[sat(s)] != s) continue;
        int m = static_cast<int>(std::count(lab.begin(), lab.end(), s));
        c.source.add_edge(over[sat(T.edge(e).u)][sat(s)], over[sat(T.edge(e).v)][sat(s)], T.edge(e).length / Rational(m));
        c.edge_map.push_back({e, m});
      }
    }
    for (int l = 0; l < T.leg_count(); ++l) {
      const auto& lab = leg_blocks_[sat(l)];
      int marked = mark_sheet_[sat(l)];
      for (int s = 0; s < d_; ++s) {
        if (lab[sat(s)] != s) continue;
        int m = static_cast<int>(std::count(lab.begin(), lab.end(), s));
        std::optional<int> mark;
        if (marked >= 0 && lab[sat(marked)] == s) mark = T.leg(l).mark;
        c.source.add_leg(over[sat(T.leg(l).vertex)][sat(s)], mark);
        c.leg_map.push_back({l, m});
      }
    }
    return c;
  }

 private:
  // block label = smallest sheet of the block
  std::vector<int> labels(const Blocks& blocks) const {
    std::vector<int> lab(sat(d_));
    std::iota(lab.begin(), lab.end(), 0);
    for (const auto& b : blocks) {
      int low = *std::min_element(b.begin(), b.end());
      for (int s : b) {
        if (s < 0 || s >= d_) fail(ErrorCode::Internal, "sheet out of range");
        lab[sat(s)] = low;
      }
    }
    return lab;
  }

  int d_;
  MetricGraph target_;
  std::vector<std::vector<int>> edge_blocks_, leg_blocks_;
  std::vector<int> mark_sheet_;
};

}  // namespace tropitev::detail
