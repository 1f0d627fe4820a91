#include "construction.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"
#include "sheets.hpp"

namespace tropitev {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

LinForm X(int i) { return LinForm(x_param(i)); }
LinForm L(int i) { return LinForm(l_param(i)); }

}  // namespace

ReferencePoint reference_point(int g) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be at least 1");
  const int n = g + 3;
  ReferencePoint p;
  p.genus = g;
  MetricGraph& G = p.gamma_bar;
  int prev = G.add_vertex();
  G.add_edge(prev, prev, X(1));
  int next_edge = 2;  // index of the bridge leaving the current loop
  for (int m = 1; m <= g - 1; ++m) {
    int in = G.add_vertex(), out = G.add_vertex();
    G.add_edge(prev, in, X(next_edge));
    G.add_edge(in, out, X(3 * m));
    G.add_edge(in, out, X(3 * m + 1));
    prev = out;
    next_edge = 3 * m + 2;
  }
  // caterpillar: marks n, n-1, ..., 3, then the fork {1, 2}
  for (int s = 1; s <= g + 2; ++s) {
    int v = G.add_vertex();
    G.add_edge(prev, v, X(3 * g - 2 + s));
    if (s <= g + 1) {
      G.add_leg(v, n + 1 - s);
    } else {
      G.add_leg(v, 1);
      G.add_leg(v, 2);
    }
    prev = v;
  }
  MetricGraph& T = p.t_bar;
  int w = T.add_vertex();
  T.add_leg(w, n);
  T.add_leg(w, n - 1);
  for (int k = 1; k <= g; ++k) {
    int v = T.add_vertex();
    T.add_edge(w, v, L(k));
    if (k < g) {
      T.add_leg(v, n - 1 - k);
    } else {
      T.add_leg(v, 1);
      T.add_leg(v, 2);
    }
    w = v;
  }
  p.ordering = "x_1 << x_2 << ... << x_" + std::to_string(4 * g) + " << L_1 << ... << L_" + std::to_string(g);
  return p;
}

bool is_valid_word(std::string_view word) {
  int h = 2;
  for (char ch : word) {
    if (ch == 'U') ++h;
    else if (ch == 'D') --h;
    else return false;
    if (h < 1) return false;
  }
  return true;
}

int word_descents(std::string_view word) { return static_cast<int>(std::count(word.begin(), word.end(), 'D')); }

int word_final_degree(std::string_view word) {
  return 2 + static_cast<int>(word.size()) - 2 * word_descents(word);
}

std::vector<std::string> enumerate_genus_words(int g) {
  if (g < 1) fail(ErrorCode::InvalidArgument, "genus must be at least 1");
  const int len = g - 1;
  if (len > 30) fail(ErrorCode::TooLarge, "genus too large for word enumeration");
  std::vector<std::string> out;
  for (long mask = 0; mask < (1L << len); ++mask) {
    std::string w;
    // bit set = D; U sorts first
    for (int i = len - 1; i >= 0; --i) w += (mask >> i) & 1 ? 'D' : 'U';
    if (is_valid_word(w)) out.push_back(w);
  }
  return out;
}

std::string SolutionIndex::label() const {
  return "g" + std::to_string(genus) + "_w" + word + "_j" + std::to_string(j);
}

void check_index(const SolutionIndex& s) {
  if (s.genus < 1) fail(ErrorCode::IndexOutOfRange, "genus must be at least 1");
  for (char ch : s.word)
    if (ch != 'U' && ch != 'D') fail(ErrorCode::InvalidWord, "letter '" + std::string(1, ch) + "' in '" + s.word + "'");
  if (static_cast<int>(s.word.size()) != s.genus - 1)
    fail(ErrorCode::IndexOutOfRange, "word '" + s.word + "' has length " + std::to_string(s.word.size()) +
                                         ", genus " + std::to_string(s.genus) + " needs " + std::to_string(s.genus - 1));
  if (!is_valid_word(s.word)) fail(ErrorCode::InvalidWord, "word '" + s.word + "' drops below degree 1");
  const int i = s.descents();
  if (s.j < i + 1 || s.j > s.degree() - i)
    fail(ErrorCode::IndexOutOfRange, "j = " + std::to_string(s.j) + " outside [" + std::to_string(i + 1) + ", " +
                                         std::to_string(s.degree() - i) + "]");
}

std::vector<SolutionIndex> enumerate_indices(int g) {
  std::vector<std::string> words = enumerate_genus_words(g);
  // rows by nonincreasing active degree, then lexicographic
  std::stable_sort(words.begin(), words.end(),
                   [](const std::string& a, const std::string& b) { return word_final_degree(a) > word_final_degree(b); });
  std::vector<SolutionIndex> out;
  for (const std::string& w : words) {
    int i = word_descents(w);
    for (int j = i + 1; j <= g + 1 - i; ++j) out.push_back({g, w, j});
  }
  return out;
}

namespace {

using detail::Blocks;
using detail::SheetBuilder;

struct Assembly {
  int g = 1;
  int d = 2;
  SheetBuilder b{2};
  std::vector<int> active;
  std::vector<int> detached;  // in order of use
  int cur = -1;
};

Assembly genus_part(std::string_view word, int g) {
  Assembly a;
  a.g = g;
  a.d = g + 1;
  a.b = SheetBuilder(a.d);
  SheetBuilder& b = a.b;
  int w1 = b.vertex(), w2 = b.vertex();
  b.edge(w1, w2, X(1) / Rational(2), {});
  b.leg(w1, std::nullopt, {{0, 1}});
  b.leg(w1, std::nullopt, {{0, 1}});
  b.leg(w2, std::nullopt, {{0, 1}});
  a.active = {0, 1};
  for (int s = 2; s < a.d; ++s) a.detached.push_back(s);
  a.cur = w2;
  int m = 2;
  for (char letter : word) {
    const int deg = static_cast<int>(a.active.size());
    const Rational rd(deg);
    if (letter == 'U') {
      int t = b.vertex();
      b.edge(a.cur, t, X(3 * m - 4) * rd, {a.active});
      int s = b.vertex();
      b.edge(t, s, (X(3 * m - 2) - X(3 * m - 3) * rd) / Rational(2), {});
      int p = a.active.back();
      int q = a.detached.front();
      a.detached.erase(a.detached.begin());
      b.leg(s, std::nullopt, {{p, q}});
      b.leg(s, std::nullopt, {{p, q}});
      int u = b.vertex();
      b.edge(t, u, X(3 * m - 3) * rd, {a.active});
      b.leg(u, std::nullopt, {{a.active.front(), q}});
      a.active.push_back(q);
      a.cur = u;
    } else {
      int u = b.vertex();
      b.edge(a.cur, u, X(3 * m - 4) * rd, {a.active});
      int p = a.active.back();
      b.leg(u, std::nullopt, {{p, a.active.front()}});
      a.active.pop_back();
      const Rational rl(deg - 1);
      int t = b.vertex();
      b.edge(u, t, X(3 * m - 3) * rl, {a.active});
      int s = b.vertex();
      b.edge(t, s, (X(3 * m - 2) - X(3 * m - 3) * rl) / Rational(2), {});
      b.leg(s, std::nullopt, {{p, a.active.front()}});
      b.leg(s, std::nullopt, {{p, a.active.front()}});
      a.cur = t;
    }
    ++m;
  }
  return a;
}

}  // namespace

GenusPart build_genus_part(std::string_view word) {
  if (!is_valid_word(word)) fail(ErrorCode::InvalidWord, "'" + std::string(word) + "'");
  const int g = static_cast<int>(word.size()) + 1;
  Assembly a = genus_part(word, g);
  GenusPart out;
  out.active_degree = static_cast<int>(a.active.size());
  out.detached = static_cast<int>(a.detached.size());
  out.active_leg = a.b.leg(a.cur, std::nullopt, {a.active});
  out.cover = a.b.build();
  return out;
}

TropicalCover build_solution(const SolutionIndex& s) {
  check_index(s);
  const int g = s.genus, d = s.degree(), n = g + 3;
  const int i = s.descents(), j = s.j, k = s.k();
  Assembly a = genus_part(s.word, g);
  SheetBuilder& b = a.b;

  int segment = 0;
  std::vector<LinForm> seg_len(at(g + 3));
  auto point = [&]() {
    ++segment;
    int v = b.vertex();
    LinForm len = X(3 * g - 2 + segment) * Rational(static_cast<long>(a.active.size()));
    seg_len[at(segment)] = len;
    b.edge(a.cur, v, len, {a.active});
    a.cur = v;
    return v;
  };
  auto cut = [&]() {
    int v = point();
    int p = a.active.back();
    b.leg(v, std::nullopt, {{p, a.active.front()}});
    a.active.pop_back();
    return p;
  };
  auto horizontal = [&](int from, int to) {
    LinForm h;
    for (int t = from; t <= to; ++t) h += seg_len[at(t)];
    return h;
  };
  // W_idx carries mark n-1-idx, W_0 carries n and n-1, W_g carries 1 and 2
  auto w_marks = [&](int idx) -> std::vector<int> {
    if (idx == 0) return {n, n - 1};
    if (idx == g) return {2, 1};
    return {n - 1 - idx};
  };

  if (i == 0 && j == 1) {
    std::vector<int> cuts;
    for (int t = 0; t < g - 1; ++t) cuts.push_back(cut());
    int q = point();
    b.leg(q, std::nullopt, {a.active});
    auto sheet_of = [&](int mark) {
      if (mark >= 5) return cuts[at(n - mark)];
      return mark == 4 ? a.active[0] : a.active[1];
    };
    auto add_marks = [&](int v, int idx) {
      for (int m : w_marks(idx)) b.leg(v, m, {}, sheet_of(m));
    };
    int f = b.vertex();
    b.edge(q, f, X(4 * g - 1), {});
    int wg = b.vertex();
    b.edge(f, wg, X(4 * g), {});
    add_marks(wg, g);
    int prev = b.vertex();
    b.edge(f, prev, L(g) - X(4 * g), {});
    add_marks(prev, g - 1);
    for (int idx = g - 2; idx >= 0; --idx) {
      int v = b.vertex();
      b.edge(prev, v, L(idx + 1), {});
      add_marks(v, idx);
      prev = v;
    }
    return b.build();
  }

  std::vector<int> first_cuts, joined, last_cuts;
  for (int t = 0; t < k; ++t) first_cuts.push_back(cut());
  int qp = point();
  const int qp_segment = segment;
  const int qp_sheet = a.active.front();
  for (int t = 0; t < i; ++t) {
    int v = point();
    int q = a.detached.front();
    a.detached.erase(a.detached.begin());
    b.leg(v, std::nullopt, {{a.active.front(), q}});
    a.active.push_back(q);
    joined.push_back(q);
  }
  int q0 = point();
  const int q0_segment = segment;
  b.leg(q0, j + 1, {}, a.active.front());
  for (int t = 0; t < j - 2; ++t) last_cuts.push_back(cut());
  int qm = point();
  b.leg(qm, std::nullopt, {a.active});
  if (segment != g + 2 || a.active.size() != 2) fail(ErrorCode::Internal, "active path bookkeeping");

  // upper fragment: marks n .. j+2 on first cuts, the active sheet, then joins
  std::vector<int> upper = first_cuts;
  upper.push_back(qp_sheet);
  upper.insert(upper.end(), joined.begin(), joined.end());
  auto upper_sheet = [&](int mark) { return upper.at(at(n - mark)); };
  if (j == g + 1) {
    b.leg(qp, n, {}, upper_sheet(n));
  } else {
    int prev = b.vertex();
    b.edge(qp, prev, L(g + 1 - j) - horizontal(qp_segment + 1, q0_segment), {});
    for (int idx = g - j;; --idx) {
      for (int m : w_marks(idx)) b.leg(prev, m, {}, upper_sheet(m));
      if (idx == 0) break;
      int v = b.vertex();
      b.edge(prev, v, L(idx), {});
      prev = v;
    }
  }
  // lower fragment: marks j .. 3 on the last cuts, 2 and 1 on the active pair
  auto lower_sheet = [&](int mark) {
    if (mark >= 3) return last_cuts.at(at(j - mark));
    return mark == 2 ? a.active[0] : a.active[1];
  };
  int prev = b.vertex();
  b.edge(qm, prev, L(g + 2 - j) - horizontal(q0_segment + 1, g + 2), {});
  for (int idx = g + 2 - j;; ++idx) {
    for (int m : w_marks(idx)) b.leg(prev, m, {}, lower_sheet(m));
    if (idx == g) break;
    int v = b.vertex();
    b.edge(prev, v, L(idx + 1), {});
    prev = v;
  }
  (void)d;
  return b.build();
}

BigInt default_base(int g) { return BigInt(1000) * (g + 2); }

Rational instantiate(const LinForm& f, int g, const BigInt& base) {
  return f.evaluate([&](Param p) -> Rational {
    BigInt v;
    switch (p.kind) {
      case ParamKind::X: mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(p.index)); break;
      case ParamKind::L:
        mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(4 * g + p.index));
        break;
      case ParamKind::Y: fail(ErrorCode::InvalidArgument, "coordinates y have no fixed instantiation");
    }
    return Rational(v);
  });
}

StabilizationCertificate verify_solution(const TropicalCover& c, const ReferencePoint& p, std::optional<BigInt> base) {
  const int g = p.genus;
  BigInt B = base ? *base : default_base(g);
  if (B <= BigInt((g + 3) * (g + 1)))
    fail(ErrorCode::InvalidArgument, "base " + to_string(B) + " must exceed " + std::to_string((g + 3) * (g + 1)));
  std::set<int> keep;
  for (int m = 1; m <= g + 3; ++m) keep.insert(m);
  StabilizationCertificate cert;
  cert.base = B;
  cert.source_model = stabilize(c.source, keep);
  cert.target_model = stabilize(c.target, keep);
  if (!isomorphic(cert.source_model.graph, p.gamma_bar, false))
    fail(ErrorCode::StabilizationMismatch, "stabilized source has the wrong topology");
  if (!isomorphic(cert.target_model.graph, p.t_bar, false))
    fail(ErrorCode::StabilizationMismatch, "stabilized target has the wrong topology");
  auto positive = [&](const MetricGraph& G, const char* what) {
    for (int e = 0; e < G.edge_count(); ++e)
      if (instantiate(G.edge(e).length, g, B) <= 0)
        fail(ErrorCode::InfeasibleLengths, std::string(what) + " edge " + std::to_string(e) + " has length " +
                                               G.edge(e).length.str() + " <= 0 at base " + to_string(B));
  };
  positive(c.source, "source");
  positive(c.target, "target");
  auto si = isomorphic(cert.source_model.graph, p.gamma_bar, true);
  if (!si) fail(ErrorCode::StabilizationMismatch, "stabilized source lengths differ from the reference point");
  auto ti = isomorphic(cert.target_model.graph, p.t_bar, true);
  if (!ti) fail(ErrorCode::StabilizationMismatch, "stabilized target lengths differ from the reference point");
  cert.source_iso = std::move(*si);
  cert.target_iso = std::move(*ti);
  return cert;
}

std::vector<Solution> enumerate_solutions(int g, std::optional<BigInt> base) {
  ReferencePoint p = reference_point(g);
  std::vector<Solution> out;
  for (const SolutionIndex& s : enumerate_indices(g)) {
    TropicalCover c = build_solution(s);
    verify_solution(c, p, base);
    out.push_back({s, std::move(c)});
  }
  return out;
}

}  // namespace tropitev
