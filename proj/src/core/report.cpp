#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "error.hpp"

namespace tropitev {

using nlohmann::json;

namespace {

void unsupported(Format f, const char* what) {
  fail(ErrorCode::InvalidArgument, std::string("format ") + to_string(f) + " is not available for " + what);
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

// left-aligned columns
std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

BigInt pow2(int g) {
  BigInt v = 1;
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(g));
  return v;
}

std::string word_text(const std::string& w) { return w.empty() ? "-" : w; }

template <class F>
VerifyItem attempt(std::string name, F&& f) {
  VerifyItem item{std::move(name), false, ""};
  try {
    item.detail = f();
    item.passed = true;
  } catch (const Error& e) {
    item.detail = e.what();
  } catch (const std::exception& e) {
    item.detail = e.what();
  }
  return item;
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "dot") return Format::Dot;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(s) + "'");
}

const char* to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Dot: return "dot";
  }
  return "?";
}

std::string solution_table(int g, Format f) {
  std::vector<SolutionIndex> idx = enumerate_indices(g);
  const int d = g + 1;
  if (f == Format::Csv) {
    std::string s = csv_line({"label", "word", "active_degree", "descents", "j", "k"});
    for (const auto& i : idx)
      s += csv_line({i.label(), i.word, std::to_string(word_final_degree(i.word)), std::to_string(i.descents()),
                     std::to_string(i.j), std::to_string(i.k())});
    return s;
  }
  if (f == Format::Json) {
    json rows = json::array();
    for (const auto& i : idx)
      rows.push_back({{"label", i.label()}, {"word", i.word}, {"active_degree", word_final_degree(i.word)},
                      {"descents", i.descents()}, {"j", i.j}, {"k", i.k()}});
    return json{{"genus", g}, {"solutions", rows}}.dump(2) + "\n";
  }
  if (f != Format::Text) unsupported(f, "the solution table");
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"word", "degree"};
  for (int j = 1; j <= d; ++j) head.push_back("j=" + std::to_string(j));
  rows.push_back(head);
  for (const std::string& w : [&] {
         std::vector<std::string> ws;
         for (const auto& i : idx)
           if (ws.empty() || ws.back() != i.word) ws.push_back(i.word);
         return ws;
       }()) {
    std::vector<std::string> r{word_text(w), std::to_string(word_final_degree(w))};
    int i = word_descents(w);
    for (int j = 1; j <= d; ++j) r.push_back(j >= i + 1 && j <= d - i ? "*" : ".");
    rows.push_back(r);
  }
  return grid(rows);
}

std::string tev_report(const TevelevResult& r, Format f) {
  if (f == Format::Json) {
    json sols = json::array();
    for (const auto& s : r.solutions) {
      const auto& c = s.certificate;
      sols.push_back({{"label", s.index.label()},
                      {"word", s.index.word},
                      {"j", s.index.j},
                      {"aut_reference", to_string(c.aut_reference)},
                      {"aut_cover", to_string(c.aut_cover)},
                      {"aut_ratio", to_string(c.aut_ratio)},
                      {"hurwitz_product", to_string(c.hurwitz_product)},
                      {"dilation_det", to_string(c.dilation_det)},
                      {"local_degree", to_string(c.local_degree)}});
    }
    return json{{"genus", r.genus}, {"degree", to_string(r.degree)}, {"base", to_string(r.base)},
                {"expected", to_string(pow2(r.genus))}, {"solutions", sols}}
               .dump(2) +
           "\n";
  }
  if (f == Format::Csv) {
    std::string s = csv_line({"label", "word", "j", "aut_ratio", "hurwitz_product", "dilation_det", "local_degree"});
    for (const auto& x : r.solutions) {
      const auto& c = x.certificate;
      s += csv_line({x.index.label(), x.index.word, std::to_string(x.index.j), to_string(c.aut_ratio),
                     to_string(c.hurwitz_product), to_string(c.dilation_det), to_string(c.local_degree)});
    }
    return s;
  }
  if (f != Format::Text) unsupported(f, "tev");
  std::ostringstream out;
  out << "genus " << r.genus << ", degree " << r.genus + 1 << ", base " << to_string(r.base) << "\n\n";
  out << solution_table(r.genus, Format::Text) << "\n";
  std::vector<std::vector<std::string>> rows{{"solution", "aut ratio", "hurwitz", "det", "local degree"}};
  for (const auto& x : r.solutions) {
    const auto& c = x.certificate;
    rows.push_back({x.index.label(), to_string(c.aut_ratio), to_string(c.hurwitz_product), to_string(c.dilation_det),
                    to_string(c.local_degree)});
  }
  out << grid(rows) << "\nTev_" << r.genus << " = " << to_string(r.degree) << "\n";
  return out.str();
}

bool VerifyReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const VerifyItem& i) { return i.passed; });
}

VerifyReport run_verify(int g, std::optional<BigInt> base, bool inject_fault) {
  if (g < 1 || g > kMaxGenus)
    fail(ErrorCode::InvalidArgument, "genus must lie in [1, " + std::to_string(kMaxGenus) + "]");
  VerifyReport rep;
  rep.genus = g;
  ReferencePoint p = reference_point(g);
  const BigInt B = base ? *base : default_base(g);
  const BigInt two_g = pow2(g);
  Rational total = 0;
  bool first = true;
  for (const SolutionIndex& idx : enumerate_indices(g)) {
    TropicalCover c = build_solution(idx);
    if (inject_fault && first && !c.edge_map.empty()) c.edge_map[0].expansion += 1;
    first = false;
    const std::string l = idx.label();
    rep.items.push_back(attempt(l + " validators", [&] {
      validate_cover(c);
      check_hurwitz_data(c, HurwitzData::for_genus(g));
      return std::string("harmonic, local RH, lengths, Hurwitz data");
    }));
    rep.items.push_back(attempt(l + " star", [&] {
      select_coordinates(c);
      return std::string("one preimage of expansion > 1 per edge");
    }));
    std::optional<StabilizationCertificate> cert;
    rep.items.push_back(attempt(l + " stabilization", [&] {
      cert = verify_solution(c, p, B);
      return std::string("matches the reference point");
    }));
    rep.items.push_back(attempt(l + " blocks", [&] {
      if (!cert) fail(ErrorCode::StabilizationMismatch, "no stabilization certificate");
      BlockStructure b = block_structure(dilation_matrix(c, p, *cert), g);
      if (!b.block_diagonal) fail(ErrorCode::MismatchAt, "matrix is not block diagonal");
      if (abs(b.genus_det) != two_g) fail(ErrorCode::MismatchAt, "genus block det " + to_string(b.genus_det));
      if (abs(b.tree_det) != 1) fail(ErrorCode::MismatchAt, "tree block det " + to_string(b.tree_det));
      return "genus " + std::to_string(b.genus_rows.size()) + " det " + to_string(b.genus_det) + ", tree " +
             std::to_string(b.tree_rows.size()) + " det " + to_string(b.tree_det);
    }));
    std::optional<MultiplicityCertificate> m;
    rep.items.push_back(attempt(l + " certificate", [&] {
      m = local_degree(c, p, B);
      if (m->local_degree != 1) fail(ErrorCode::NonUnitMultiplicity, "local degree " + to_string(m->local_degree));
      ++rep.certificates;
      total += m->local_degree;
      return to_string(m->aut_ratio) + " * " + to_string(m->hurwitz_product) + " * " + to_string(BigInt(abs(m->dilation_det))) +
             " = 1";
    }));
    rep.items.push_back(attempt(l + " aut ratio", [&] {
      if (!m) fail(ErrorCode::MismatchAt, "no certificate");
      if (m->aut_ratio != Rational(1, 1) / Rational(two_g))
        fail(ErrorCode::MismatchAt, "ratio " + to_string(m->aut_ratio));
      return to_string(m->aut_reference) + " / " + to_string(m->aut_cover);
    }));
    rep.items.push_back(attempt(l + " hurwitz", [&] {
      if (!m) fail(ErrorCode::MismatchAt, "no certificate");
      if (m->hurwitz_product != 1) fail(ErrorCode::MismatchAt, "product " + to_string(m->hurwitz_product));
      return std::string("every vertex 1");
    }));
  }
  rep.items.push_back(attempt("degree", [&] {
    if (total != Rational(two_g)) fail(ErrorCode::MismatchAt, "sum " + to_string(total) + " != " + to_string(two_g));
    return "Tev_" + std::to_string(g) + " = " + to_string(two_g);
  }));
  for (int d = 2; d <= g + 1; ++d) {
    rep.items.push_back(attempt("lemma d=" + std::to_string(d), [&] {
      auto rows = lemma_check(d);
      return std::to_string(rows.size()) + " binomial identities";
    }));
    if (d >= 3)
      rep.items.push_back(attempt("recurrence d=" + std::to_string(d), [&] {
        recurrence_check(d);
        return std::string("holds");
      }));
    rep.items.push_back(attempt("table total d=" + std::to_string(d), [&] {
      BigInt t = table_total(d);
      if (t != pow2(d - 1)) fail(ErrorCode::MismatchAt, to_string(t));
      return to_string(t);
    }));
  }
  if (g == 1)
    rep.items.push_back(attempt("oracle", [&] {
      OracleSummary s = run_oracle(B);
      if (!s.equivalent())
        fail(ErrorCode::MismatchAt, std::to_string(s.result.covers.size()) + " oracle covers, " +
                                        std::to_string(s.constructed) + " constructed");
      return std::to_string(s.result.topologies.size()) + " topologies, " + std::to_string(s.result.covers.size()) +
             " covers, all constructed";
    }));
  return rep;
}

std::string verify_report(const VerifyReport& r, Format f) {
  std::size_t ok = static_cast<std::size_t>(
      std::count_if(r.items.begin(), r.items.end(), [](const VerifyItem& i) { return i.passed; }));
  if (f == Format::Json) {
    json items = json::array();
    for (const auto& i : r.items) items.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}});
    return json{{"genus", r.genus}, {"passed", r.passed()}, {"certificates", r.certificates}, {"items", items}}.dump(2) +
           "\n";
  }
  if (f == Format::Csv) {
    std::string s = csv_line({"item", "passed", "detail"});
    for (const auto& i : r.items) s += csv_line({i.name, i.passed ? "1" : "0", "\"" + i.detail + "\""});
    return s;
  }
  if (f != Format::Text) unsupported(f, "verify");
  std::ostringstream out;
  for (const auto& i : r.items) out << (i.passed ? "[PASS] " : "[FAIL] ") << i.name << ": " << i.detail << "\n";
  out << "verify " << r.genus << ": " << ok << "/" << r.items.size() << " passed, " << r.certificates
      << " certificates\n";
  return out.str();
}

std::string paths_report(int d, Format f) {
  PathTally t = path_counts(d);
  std::vector<LemmaRow> lemma = lemma_check(d);
  bool rec = d >= 3;
  if (rec) recurrence_check(d);
  BigInt total = table_total(d);
  if (f == Format::Json) {
    json heights = json::array(), rows = json::array();
    for (auto it = t.by_height.rbegin(); it != t.by_height.rend(); ++it)
      heights.push_back({{"height", it->first}, {"count", to_string(it->second)}, {"at_least", to_string(t.at_least(it->first))}});
    for (const auto& r : lemma)
      rows.push_back({{"i", r.i}, {"tally", to_string(r.tally)}, {"binomial", to_string(r.binomial)}});
    return json{{"d", d}, {"words", to_string(t.total)}, {"heights", heights}, {"lemma", rows},
                {"recurrence", rec ? json(true) : json(nullptr)}, {"table_total", to_string(total)}}
               .dump(2) +
           "\n";
  }
  if (f == Format::Csv) {
    std::string s = csv_line({"height", "count", "at_least"});
    for (auto it = t.by_height.rbegin(); it != t.by_height.rend(); ++it)
      s += csv_line({std::to_string(it->first), to_string(it->second), to_string(t.at_least(it->first))});
    return s;
  }
  if (f != Format::Text) unsupported(f, "paths");
  std::ostringstream out;
  out << "d = " << d << ": " << to_string(t.total) << " words of length " << d - 2 << "\n\n";
  std::vector<std::vector<std::string>> rows{{"height", "count", "at least"}};
  for (auto it = t.by_height.rbegin(); it != t.by_height.rend(); ++it)
    rows.push_back({std::to_string(it->first), to_string(it->second), to_string(t.at_least(it->first))});
  out << grid(rows) << "\n";
  for (const auto& r : lemma)
    out << "A(" << d << ", >=" << d - 2 * r.i << ") = " << to_string(r.tally) << " = C(" << d - 1 << ", " << r.i
        << ")\n";
  if (rec) out << "recurrence holds\n";
  out << "table total " << to_string(total) << " = 2^" << d - 1 << "\n";
  return out.str();
}

std::string matrix_report(const SolutionIndex& s, Format f, std::optional<BigInt> base) {
  check_index(s);
  const int g = s.genus;
  ReferencePoint p = reference_point(g);
  TropicalCover c = build_solution(s);
  StabilizationCertificate cert = verify_solution(c, p, base);
  DilationMatrix m = dilation_matrix(c, p, cert);
  BlockStructure b = block_structure(m, g);
  BigInt det = determinant(m.matrix);
  const std::size_t n = m.matrix.rows();
  auto col_name = [](std::size_t k) { return "y_" + std::to_string(k + 1); };
  if (f == Format::Json) {
    json rows = json::array();
    for (std::size_t r = 0; r < n; ++r) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k) row.push_back(m.matrix(r, k).get_si());
      rows.push_back(row);
    }
    json cols = json::array(), edges = json::array();
    for (std::size_t k = 0; k < n; ++k) cols.push_back(col_name(k));
    for (int e : m.column_edges) edges.push_back(e);
    return json{{"label", s.label()},
                {"rows", m.row_labels},
                {"columns", cols},
                {"column_target_edges", edges},
                {"matrix", rows},
                {"block_diagonal", b.block_diagonal},
                {"genus_block", {{"rows", b.genus_rows}, {"cols", b.genus_cols}, {"det", to_string(b.genus_det)}}},
                {"tree_block", {{"rows", b.tree_rows}, {"cols", b.tree_cols}, {"det", to_string(b.tree_det)}}},
                {"det", to_string(det)},
                {"abs_det", to_string(BigInt(abs(det)))}}
               .dump(2) +
           "\n";
  }
  if (f == Format::Csv) {
    std::vector<std::string> head{"row"};
    for (std::size_t k = 0; k < n; ++k) head.push_back(col_name(k));
    std::string out = csv_line(head);
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::string> line{m.row_labels[r]};
      for (std::size_t k = 0; k < n; ++k) line.push_back(to_string(m.matrix(r, k)));
      out += csv_line(line);
    }
    return out;
  }
  if (f != Format::Text) unsupported(f, "matrix");
  std::vector<std::size_t> order = b.genus_cols;
  order.insert(order.end(), b.tree_cols.begin(), b.tree_cols.end());
  if (!b.block_diagonal) {
    order.resize(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
  }
  const std::size_t split_col = b.block_diagonal ? b.genus_cols.size() : n;
  const std::size_t split_row = b.block_diagonal ? b.genus_rows.size() : n;
  std::vector<std::vector<std::string>> rows;
  auto with_bar = [&](std::vector<std::string> cells) {
    if (split_col < n) cells.insert(cells.begin() + static_cast<long>(split_col) + 1, "|");
    return cells;
  };
  std::vector<std::string> head{""};
  for (std::size_t k : order) head.push_back(col_name(k));
  rows.push_back(with_bar(head));
  for (std::size_t r = 0; r < n; ++r) {
    if (r == split_row && split_row < n) {
      std::vector<std::string> sep{"--"};
      for (std::size_t k = 0; k < n; ++k) sep.push_back("--");
      rows.push_back(with_bar(sep));
    }
    std::vector<std::string> line{m.row_labels[r]};
    for (std::size_t k : order) line.push_back(to_string(m.matrix(r, k)));
    rows.push_back(with_bar(line));
  }
  std::ostringstream out;
  out << s.label() << ": " << n << "x" << n << " dilation matrix\n\n" << grid(rows) << "\n";
  if (b.block_diagonal)
    out << "genus block " << b.genus_rows.size() << "x" << b.genus_cols.size() << ", det " << to_string(b.genus_det)
        << "\ntree block " << b.tree_rows.size() << "x" << b.tree_cols.size() << ", det " << to_string(b.tree_det)
        << "\n";
  else
    out << "not block diagonal\n";
  out << "|det| = " << to_string(BigInt(abs(det))) << "\n";
  return out.str();
}

bool OracleSummary::equivalent() const {
  if (result.covers.size() != constructed) return false;
  std::vector<int> sorted = matches;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) return false;
  return true;
}

OracleSummary run_oracle(std::optional<BigInt> base) {
  ReferencePoint p = reference_point(1);
  OracleSummary s;
  s.result = find_all_preimages_g1(p, base);
  std::vector<Solution> built = enumerate_solutions(1, base);
  s.constructed = built.size();
  s.matches = match_construction(s.result, built);
  return s;
}

std::string oracle_report(const OracleSummary& s, Format f) {
  const OracleResult& r = s.result;
  std::map<std::string, std::size_t> outcomes{{"no-cover", 0}, {"infeasible", 0}, {"solution", 0}};
  for (const auto& t : r.topologies) ++outcomes[to_string(t.outcome)];
  if (f == Format::Json) {
    json tops = json::array();
    for (const auto& t : r.topologies)
      tops.push_back({{"canonical", t.canonical}, {"outcome", to_string(t.outcome)}, {"solved_lifts", t.solved_lifts}});
    return json{{"genus", 1},
                {"base", to_string(r.base)},
                {"labeled_topologies", r.labeled_count},
                {"distinct_topologies", r.topologies.size()},
                {"systems", r.systems},
                {"outcomes", outcomes},
                {"raw_solutions", r.raw_solutions},
                {"solutions", r.covers.size()},
                {"constructed", s.constructed},
                {"matches", s.matches},
                {"equivalent", s.equivalent()},
                {"topologies", tops}}
               .dump(2) +
           "\n";
  }
  if (f == Format::Csv) {
    std::string out = csv_line({"canonical", "outcome", "solved_lifts"});
    for (const auto& t : r.topologies)
      out += csv_line({"\"" + t.canonical + "\"", to_string(t.outcome), std::to_string(t.solved_lifts)});
    return out;
  }
  if (f != Format::Text) unsupported(f, "oracle");
  std::ostringstream out;
  out << "labeled trees      " << r.labeled_count << "\n"
      << "distinct topologies " << r.topologies.size() << "\n"
      << "linear systems     " << r.systems << "\n";
  for (const auto& [k, v] : outcomes) out << "  " << std::left << std::setw(11) << k << v << "\n";
  out << "covers found       " << r.covers.size() << " (" << r.raw_solutions << " before deduplication)\n"
      << "constructed        " << s.constructed << "\n"
      << (s.equivalent() ? "oracle and construction agree\n" : "oracle and construction DISAGREE\n");
  return out.str();
}

}  // namespace tropitev
