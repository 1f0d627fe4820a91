#include "tropitev/tropitev.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "error.hpp"
#include "report.hpp"
#include "serialize.hpp"

using namespace tropitev;

struct tt_tevelev {
  TevelevResult result;
};

struct tt_indices {
  std::vector<SolutionIndex> items;
  std::vector<std::string> labels;
};

struct tt_cover {
  TropicalCover cover;
  std::optional<SolutionIndex> index;
};

struct tt_verify {
  VerifyReport report;
};

struct tt_oracle {
  OracleSummary summary;
};

namespace {

thread_local std::string last_error;

template <class F>
tt_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return TT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<tt_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TT_ERR_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TT_ERR_INTERNAL;
  }
}

tt_status null_pointer(const char* what) {
  last_error = std::string(what) + " is null";
  return TT_ERR_NULL_POINTER;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::optional<BigInt> parse_base(const char* base) {
  if (!base || !*base) return std::nullopt;
  BigInt b;
  if (b.set_str(base, 10) != 0) fail(ErrorCode::InvalidArgument, std::string("base '") + base + "' is not an integer");
  return b;
}

Format format_of(tt_format f) {
  switch (f) {
    case TT_FORMAT_TEXT: return Format::Text;
    case TT_FORMAT_JSON: return Format::Json;
    case TT_FORMAT_CSV: return Format::Csv;
    case TT_FORMAT_DOT: return Format::Dot;
  }
  fail(ErrorCode::InvalidArgument, "unknown format");
}

}  // namespace

extern "C" {

const char* tt_version(void) { return "1.0.0"; }

const char* tt_status_name(tt_status s) {
  switch (s) {
    case TT_OK: return "Ok";
    case TT_ERR_NULL_POINTER: return "NullPointer";
    case TT_ERR_OUT_OF_MEMORY: return "OutOfMemory";
    default:
      if (s >= TT_ERR_INVALID_ARGUMENT && s <= TT_ERR_INTERNAL) return error_code_name(static_cast<ErrorCode>(s));
      return "Unknown";
  }
}

const char* tt_last_error_message(void) { return last_error.c_str(); }

void tt_string_free(char* s) { std::free(s); }

tt_status tt_parse_format(const char* name, tt_format* out) {
  if (!name) return null_pointer("name");
  if (!out) return null_pointer("out");
  return guard([&] {
    switch (parse_format(name)) {
      case Format::Text: *out = TT_FORMAT_TEXT; break;
      case Format::Json: *out = TT_FORMAT_JSON; break;
      case Format::Csv: *out = TT_FORMAT_CSV; break;
      case Format::Dot: *out = TT_FORMAT_DOT; break;
    }
  });
}

tt_status tt_tevelev_compute(int genus, const char* base, tt_tevelev** out) {
  if (!out) return null_pointer("out");
  *out = nullptr;
  return guard([&] { *out = new tt_tevelev{tevelev_degree(genus, parse_base(base))}; });
}

void tt_tevelev_free(tt_tevelev* t) { delete t; }

tt_status tt_tevelev_degree(const tt_tevelev* t, char** out) {
  if (!t) return null_pointer("result");
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(to_string(t->result.degree)); });
}

size_t tt_tevelev_solution_count(const tt_tevelev* t) { return t ? t->result.solutions.size() : 0; }

tt_status tt_tevelev_solution_label(const tt_tevelev* t, size_t i, char** out) {
  if (!t) return null_pointer("result");
  if (!out) return null_pointer("out");
  return guard([&] {
    if (i >= t->result.solutions.size()) fail(ErrorCode::IndexOutOfRange, "solution " + std::to_string(i));
    *out = dup(t->result.solutions[i].index.label());
  });
}

tt_status tt_tevelev_local_degree(const tt_tevelev* t, size_t i, char** out) {
  if (!t) return null_pointer("result");
  if (!out) return null_pointer("out");
  return guard([&] {
    if (i >= t->result.solutions.size()) fail(ErrorCode::IndexOutOfRange, "solution " + std::to_string(i));
    *out = dup(to_string(t->result.solutions[i].certificate.local_degree));
  });
}

tt_status tt_tevelev_report(const tt_tevelev* t, tt_format f, char** out) {
  if (!t) return null_pointer("result");
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(tev_report(t->result, format_of(f))); });
}

tt_status tt_solution_table(int genus, tt_format f, char** out) {
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(solution_table(genus, format_of(f))); });
}

tt_status tt_indices_enumerate(int genus, tt_indices** out) {
  if (!out) return null_pointer("out");
  *out = nullptr;
  return guard([&] {
    auto x = new tt_indices{enumerate_indices(genus), {}};
    for (const auto& s : x->items) x->labels.push_back(s.label());
    *out = x;
  });
}

void tt_indices_free(tt_indices* x) { delete x; }

size_t tt_indices_count(const tt_indices* x) { return x ? x->items.size() : 0; }

tt_status tt_indices_at(const tt_indices* x, size_t i, const char** word, int* j, const char** label) {
  if (!x) return null_pointer("indices");
  return guard([&] {
    if (i >= x->items.size()) fail(ErrorCode::IndexOutOfRange, "index " + std::to_string(i));
    if (word) *word = x->items[i].word.c_str();
    if (j) *j = x->items[i].j;
    if (label) *label = x->labels[i].c_str();
  });
}

tt_status tt_cover_build(int genus, const char* word, int j, tt_cover** out) {
  if (!word) return null_pointer("word");
  if (!out) return null_pointer("out");
  *out = nullptr;
  return guard([&] {
    SolutionIndex s{genus, word, j};
    *out = new tt_cover{build_solution(s), s};
  });
}

tt_status tt_cover_from_json(const char* json, tt_cover** out) {
  if (!json) return null_pointer("json");
  if (!out) return null_pointer("out");
  *out = nullptr;
  return guard([&] { *out = new tt_cover{cover_from_json(json), std::nullopt}; });
}

void tt_cover_free(tt_cover* c) { delete c; }

tt_status tt_cover_to_json(const tt_cover* c, char** out) {
  if (!c) return null_pointer("cover");
  if (!out) return null_pointer("out");
  return guard([&] {
    *out = dup(c->index ? solution_to_json({*c->index, c->cover}) : cover_to_json(c->cover));
  });
}

tt_status tt_cover_to_dot(const tt_cover* c, const char* name, char** out) {
  if (!c) return null_pointer("cover");
  if (!out) return null_pointer("out");
  return guard([&] {
    std::string n = name ? name : (c->index ? c->index->label() : "cover");
    *out = dup(cover_to_dot(c->cover, n));
  });
}

tt_status tt_cover_validate(const tt_cover* c, int genus, const char* base) {
  if (!c) return null_pointer("cover");
  return guard([&] {
    validate_cover(c->cover);
    check_hurwitz_data(c->cover, HurwitzData::for_genus(genus));
    select_coordinates(c->cover);
    verify_solution(c->cover, reference_point(genus), parse_base(base));
  });
}

tt_status tt_cover_local_degree(const tt_cover* c, int genus, const char* base, char** out) {
  if (!c) return null_pointer("cover");
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(to_string(local_degree(c->cover, reference_point(genus), parse_base(base)).local_degree)); });
}

tt_status tt_cover_isomorphic(const tt_cover* a, const tt_cover* b, int respect_lengths, int* out) {
  if (!a || !b) return null_pointer("cover");
  if (!out) return null_pointer("out");
  return guard([&] { *out = covers_isomorphic(a->cover, b->cover, respect_lengths != 0) ? 1 : 0; });
}

tt_status tt_cover_set_expansion(tt_cover* c, size_t source_edge, int expansion) {
  if (!c) return null_pointer("cover");
  return guard([&] {
    if (source_edge >= c->cover.edge_map.size()) fail(ErrorCode::IndexOutOfRange, "source edge " + std::to_string(source_edge));
    if (expansion < 1) fail(ErrorCode::InvalidArgument, "expansion must be positive");
    c->cover.edge_map[source_edge].expansion = expansion;
  });
}

tt_status tt_verify_run(int genus, const char* base, int inject_fault, tt_verify** out) {
  if (!out) return null_pointer("out");
  *out = nullptr;
  return guard([&] { *out = new tt_verify{run_verify(genus, parse_base(base), inject_fault != 0)}; });
}

void tt_verify_free(tt_verify* v) { delete v; }

int tt_verify_passed(const tt_verify* v) { return v && v->report.passed() ? 1 : 0; }

size_t tt_verify_item_count(const tt_verify* v) { return v ? v->report.items.size() : 0; }

size_t tt_verify_certificates(const tt_verify* v) { return v ? v->report.certificates : 0; }

tt_status tt_verify_item(const tt_verify* v, size_t i, const char** name, int* passed, const char** detail) {
  if (!v) return null_pointer("report");
  return guard([&] {
    if (i >= v->report.items.size()) fail(ErrorCode::IndexOutOfRange, "item " + std::to_string(i));
    const VerifyItem& it = v->report.items[i];
    if (name) *name = it.name.c_str();
    if (passed) *passed = it.passed ? 1 : 0;
    if (detail) *detail = it.detail.c_str();
  });
}

tt_status tt_verify_report(const tt_verify* v, tt_format f, char** out) {
  if (!v) return null_pointer("report");
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(verify_report(v->report, format_of(f))); });
}

tt_status tt_paths_report(int d, tt_format f, char** out) {
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(paths_report(d, format_of(f))); });
}

tt_status tt_matrix_report(int genus, const char* word, int j, const char* base, tt_format f, char** out) {
  if (!word) return null_pointer("word");
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(matrix_report({genus, word, j}, format_of(f), parse_base(base))); });
}

tt_status tt_oracle_run(const char* base, tt_oracle** out) {
  if (!out) return null_pointer("out");
  *out = nullptr;
  return guard([&] { *out = new tt_oracle{run_oracle(parse_base(base))}; });
}

void tt_oracle_free(tt_oracle* o) { delete o; }

int tt_oracle_equivalent(const tt_oracle* o) { return o && o->summary.equivalent() ? 1 : 0; }

size_t tt_oracle_cover_count(const tt_oracle* o) { return o ? o->summary.result.covers.size() : 0; }

size_t tt_oracle_topology_count(const tt_oracle* o) { return o ? o->summary.result.topologies.size() : 0; }

tt_status tt_oracle_report(const tt_oracle* o, tt_format f, char** out) {
  if (!o) return null_pointer("oracle");
  if (!out) return null_pointer("out");
  return guard([&] { *out = dup(oracle_report(o->summary, format_of(f))); });
}

}  // extern "C"

static_assert(static_cast<int>(ErrorCode::InvalidArgument) == TT_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(ErrorCode::Internal) == TT_ERR_INTERNAL);
