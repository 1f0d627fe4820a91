// Acceptance checks AC1..AC10. One line per criterion; exit status 1 on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "counting.hpp"
#include "error.hpp"
#include "hurwitz.hpp"
#include "multiplicity.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace tropitev;
using Clock = std::chrono::steady_clock;

namespace {

// tolerances: all values are exact; only wall-clock budgets are bounded
constexpr double kDegreeBudgetSeconds = 60.0;
constexpr double kOracleBudgetSeconds = 300.0;
constexpr int kRandomGraphs = 100;
constexpr unsigned kRandomSeed = 20240601;

int failures = 0;

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

void run(const char* id, const char* title, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  auto start = Clock::now();
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.require(false, e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!c.ok) ++failures;
  std::printf("[%s] %s %s: %s (%.2fs)\n", c.ok ? "PASS" : "FAIL", id, title, c.ok ? detail.c_str() : c.why.c_str(), secs);
  std::fflush(stdout);
}

bool rejected(const TropicalCover& c, const ReferencePoint& p, int g) {
  try {
    validate_cover(c);
    check_hurwitz_data(c, HurwitzData::for_genus(g));
    verify_solution(c, p);
    select_coordinates(c);
  } catch (const Error&) {
    return true;
  }
  return false;
}

std::string lbl(const SolutionIndex& s) { return s.label(); }

}  // namespace

int main() {
  run("AC1", "degree reproduction g=1..8", [](Check& c) {
    auto start = Clock::now();
    for (int g = 1; g <= kMaxGenus; ++g) {
      TevelevResult r = tevelev_degree(g);
      c.require(r.degree == BigInt(1) << g, "Tev_" + std::to_string(g) + " = " + to_string(r.degree));
      c.require(r.solutions.size() == (std::size_t{1} << g), "solution count at g=" + std::to_string(g));
      for (const auto& s : r.solutions) c.require(s.certificate.local_degree == 1, "local degree at " + lbl(s.index));
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    c.require(secs < kDegreeBudgetSeconds, "runtime " + std::to_string(secs) + "s over budget");
    return "Tev_g = 2^g for g <= 8, all certificates 1, budget 60s";
  });

  run("AC2", "g=1 worked example", [](Check& c) {
    TevelevResult r = tevelev_degree(1);
    c.require(r.solutions.size() == 2, "expected 2 solutions");
    for (const auto& s : r.solutions) {
      const auto& m = s.certificate;
      c.require(abs(m.dilation_det) == 2, "|det| at " + lbl(s.index));
      c.require(m.aut_ratio == Rational(1, 2), "aut ratio at " + lbl(s.index));
      c.require(m.hurwitz_product == 1, "Hurwitz product at " + lbl(s.index));
      c.require(m.aut_ratio * m.hurwitz_product * Rational(abs(m.dilation_det)) == 1, "product at " + lbl(s.index));
    }
    return "2 solutions, (1/2)*1*2 = 1";
  });

  run("AC3", "g=2 worked example", [](Check& c) {
    ReferencePoint p = reference_point(2);
    auto sols = enumerate_solutions(2);
    c.require(sols.size() == 4, "expected 4 solutions");
    for (const auto& s : sols) {
      DilationMatrix d = dilation_matrix(s.cover, p);
      BlockStructure b = block_structure(d, 2);
      c.require(abs(determinant(d.matrix)) == 4, "|det| at " + lbl(s.index));
      c.require(b.block_diagonal, "not block diagonal at " + lbl(s.index));
      c.require(b.genus_rows.size() == 4 && b.genus_cols.size() == 4, "genus block size at " + lbl(s.index));
      c.require(b.tree_rows.size() == 6 && b.tree_cols.size() == 6, "tree block size at " + lbl(s.index));
    }
    return "4 solutions, |det| = 4, blocks 4 + 6";
  });

  run("AC4", "g=3 worked example", [](Check& c) {
    auto sols = enumerate_solutions(3);
    c.require(sols.size() == 8, "expected 8 solutions, got " + std::to_string(sols.size()));
    ReferencePoint p = reference_point(3);
    for (const auto& s : sols) c.require(local_degree(s.cover, p).local_degree == 1, "local degree at " + lbl(s.index));
    return "8 solutions";
  });

  run("AC5", "block determinants g<=6", [](Check& c) {
    std::size_t n = 0;
    for (int g = 1; g <= 6; ++g) {
      ReferencePoint p = reference_point(g);
      for (const auto& s : enumerate_solutions(g)) {
        BlockStructure b = block_structure(dilation_matrix(s.cover, p), g);
        c.require(b.block_diagonal, "not block diagonal at " + lbl(s.index));
        c.require(abs(b.tree_det) == 1, "tree block at " + lbl(s.index));
        c.require(abs(b.genus_det) == BigInt(1) << g, "genus block at " + lbl(s.index));
        ++n;
      }
    }
    return std::to_string(n) + " solutions, |tree| = 1, |genus| = 2^g";
  });

  run("AC6", "path tallies d<=12", [](Check& c) {
    for (int d = 2; d <= 12; ++d) {
      std::map<int, BigInt> brute;
      for (const auto& w : tt_test::all_words(d - 2))
        if (tt_test::stays_positive(w)) brute[tt_test::final_height(w)] += 1;
      auto at_least = [&](const std::map<int, BigInt>& m, int h) {
        BigInt s = 0;
        for (const auto& [k, v] : m)
          if (k >= h) s += v;
        return s;
      };
      for (int i = 0; 2 * i <= d - 1; ++i) {
        c.require(at_least(brute, d - 2 * i) == tt_test::binomial_ref(d - 1, i),
                  "lemma d=" + std::to_string(d) + " i=" + std::to_string(i));
        c.require(path_counts(d).at_least(d - 2 * i) == at_least(brute, d - 2 * i), "library tally d=" + std::to_string(d));
      }
      if (d >= 3) {
        std::map<int, BigInt> prev;
        for (const auto& w : tt_test::all_words(d - 3))
          if (tt_test::stays_positive(w)) prev[tt_test::final_height(w)] += 1;
        for (int i = 0; 2 * i <= d - 1; ++i) {
          int h = d - 2 * i;
          c.require(at_least(brute, h) == at_least(prev, h - 1) + at_least(prev, h + 1),
                    "recurrence d=" + std::to_string(d) + " i=" + std::to_string(i));
        }
        recurrence_check(d);
      }
      lemma_check(d);
    }
    return "brute force agrees with C(d-1, i) and the recurrence";
  });

  run("AC7", "Hurwitz anchor and vertex values", [](Check& c) {
    c.require(triple_hurwitz_marked({4}, {4}, {1, 1, 1, 1}) == 6, "H((4),(4),(1,1,1,1))");
    LocalVertexProfile anchor;
    anchor.degree = 4;
    anchor.directions = {{{4}, {}, false}, {{4}, {}, false}, {{1, 1, 1, 1}, {3}, false}};
    c.require(local_hurwitz(anchor) == 1, "adjusted anchor");
    std::size_t vertices = 0;
    for (int g = 1; g <= 6; ++g)
      for (const auto& idx : enumerate_indices(g)) {
        TropicalCover cov = build_solution(idx);
        PendantStructure pend = pendant_structure(cov);
        for (int v = 0; v < cov.source.vertex_count(); ++v, ++vertices)
          c.require(local_hurwitz(vertex_profile(cov, pend, v)) == 1, "vertex " + std::to_string(v) + " of " + lbl(idx));
      }
    return "H = 6, adjusted 1, " + std::to_string(vertices) + " vertices equal 1";
  });

  run("AC8", "validators and mutations g<=6", [](Check& c) {
    std::size_t covers = 0, mutants = 0, relabelled = 0;
    for (int g = 1; g <= 6; ++g) {
      ReferencePoint p = reference_point(g);
      for (const auto& s : enumerate_solutions(g)) {
        ++covers;
        c.require(!rejected(s.cover, p, g), "constructed cover rejected at " + lbl(s.index));
        for (std::size_t e = 0; e < s.cover.edge_map.size(); e += 3) {
          TropicalCover m = s.cover;
          m.edge_map[e].expansion += 1;
          c.require(rejected(m, p, g), "expansion mutant accepted at " + lbl(s.index));
          ++mutants;
        }
        for (int mark = 1; mark <= g + 3; ++mark) {
          // moving a mark to another sheet over the same end
          for (int choice = 0;; ++choice) {
            TropicalCover m = s.cover;
            if (!tt_test::move_mark(m, mark, choice)) break;
            if (rejected(m, p, g)) {
              ++mutants;
            } else {
              c.require(covers_isomorphic(m, s.cover, true), "mark mutant accepted at " + lbl(s.index));
              ++relabelled;
            }
          }
          // exchanging two marks
          if (mark < g + 3) {
            TropicalCover m = s.cover;
            auto a = m.source.leg_with_mark(mark), b = m.source.leg_with_mark(mark + 1);
            m.source.set_mark(*a, std::nullopt);
            m.source.set_mark(*b, mark);
            m.source.set_mark(*a, mark + 1);
            c.require(rejected(m, p, g), "mark swap accepted at " + lbl(s.index));
            ++mutants;
          }
        }
      }
    }
    return std::to_string(covers) + " covers pass, " + std::to_string(mutants) + " mutants rejected, " + std::to_string(relabelled) +
           " sheet relabellings isomorphic to the original";
  });

  run("AC9", "oracle equivalence g=1", [](Check& c) {
    auto start = Clock::now();
    ReferencePoint p = reference_point(1);
    OracleResult r = find_all_preimages_g1(p);
    c.require(r.labeled_count == 10395, "labelled tree count");
    c.require(r.covers.size() == 2, "oracle found " + std::to_string(r.covers.size()) + " covers");
    auto match = match_construction(r, enumerate_solutions(1));
    c.require(std::set<int>(match.begin(), match.end()) == std::set<int>{0, 1}, "covers do not match the construction");
    for (const auto& t : r.topologies)
      c.require(t.outcome != OracleOutcome::Solution || t.solved_lifts >= 1, "solution without lift");
    for (const auto& cov : r.covers) c.require(local_degree(cov, p).local_degree == 1, "oracle cover local degree");
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    c.require(secs < kOracleBudgetSeconds, "runtime over budget");
    return std::to_string(r.topologies.size()) + " topologies, " + std::to_string(r.systems) + " systems, 2 covers, budget 300s";
  });

  run("AC10", "stabilization contract", [](Check& c) {
    std::mt19937 rng(kRandomSeed);
    int done = 0, attempts = 0;
    while (done < kRandomGraphs && attempts < 20 * kRandomGraphs) {
      ++attempts;
      MetricGraph g = tt_test::random_graph(rng);
      std::set<int> keep;
      for (const auto& l : g.legs())
        if (l.mark) keep.insert(*l.mark);
      StableModel s;
      try {
        s = stabilize(g, keep);
      } catch (const Error& e) {
        c.require(e.code() == ErrorCode::Unstable, "unexpected error " + std::string(e.what()));
        continue;
      }
      ++done;
      c.require(total_genus(s.graph) == total_genus(g), "genus changed");
      for (int e = 0; e < s.graph.edge_count(); ++e) {
        LinForm sum;
        for (int o : s.provenance[static_cast<std::size_t>(e)]) sum += g.edge(o).length;
        c.require(sum == s.graph.edge(e).length, "provenance length");
      }
      StableModel again = stabilize(s.graph, keep);
      c.require(again.graph.vertex_count() == s.graph.vertex_count() && again.graph.edge_count() == s.graph.edge_count(),
                "not idempotent");
      c.require(isomorphic(again.graph, s.graph, true).has_value(), "not idempotent up to isomorphism");
      for (const auto& prov : again.provenance) c.require(prov.size() == 1, "second pass merged edges");
    }
    c.require(done == kRandomGraphs, "only " + std::to_string(done) + " stable graphs");
    return std::to_string(done) + " random graphs, seed " + std::to_string(kRandomSeed);
  });

  std::printf("%s: %d failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
