// tropitev command line.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "tropitev/tropitev.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct Options {
  std::string format;
  std::string out;
  std::string base;
};

struct Failure {
  int code;
  std::string message;
};

void check(tt_status s) {
  if (s == TT_OK) return;
  int code = s == TT_ERR_IO ? kIo
             : (s == TT_ERR_INVALID_ARGUMENT || s == TT_ERR_INVALID_WORD || s == TT_ERR_INDEX_OUT_OF_RANGE ||
                s == TT_ERR_PARSE)
                 ? kUsage
                 : kFailed;
  std::string msg = tt_last_error_message();
  throw Failure{code, msg.empty() ? tt_status_name(s) : msg};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  tt_string_free(s);
  return out;
}

tt_format format_of(const Options& o) {
  tt_format f;
  check(tt_parse_format(o.format.c_str(), &f));
  return f;
}

const char* base_of(const Options& o) { return o.base.empty() ? nullptr : o.base.c_str(); }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Failure{kIo, "cannot open " + path.string()};
  f << text;
  if (!f) throw Failure{kIo, "cannot write " + path.string()};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path p(o.out);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  write_file(p, text);
}

std::string pow2(int g) {
  unsigned long long v = 1ULL << g;
  return std::to_string(v);
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

int cmd_tev(int g, const Options& o) {
  Handle<tt_tevelev, tt_tevelev_free> t;
  check(tt_tevelev_compute(g, base_of(o), &t.p));
  char* s = nullptr;
  check(tt_tevelev_report(t.p, format_of(o), &s));
  emit(o, take(s));
  check(tt_tevelev_degree(t.p, &s));
  std::string degree = take(s);
  if (degree != pow2(g)) {
    std::cerr << "degree " << degree << " differs from " << pow2(g) << "\n";
    return kFailed;
  }
  return kOk;
}

int cmd_solutions(int g, Options o) {
  if (o.format == "text" || o.format == "csv") {
    char* s = nullptr;
    check(tt_solution_table(g, format_of(o), &s));
    emit(o, take(s));
    return kOk;
  }
  if (o.format != "json" && o.format != "dot") throw Failure{kUsage, "solutions writes json or dot files"};
  std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Failure{kIo, "cannot create " + dir.string() + ": " + ec.message()};
  Handle<tt_indices, tt_indices_free> idx;
  check(tt_indices_enumerate(g, &idx.p));
  for (size_t i = 0; i < tt_indices_count(idx.p); ++i) {
    const char* word = nullptr;
    const char* label = nullptr;
    int j = 0;
    check(tt_indices_at(idx.p, i, &word, &j, &label));
    Handle<tt_cover, tt_cover_free> c;
    check(tt_cover_build(g, word, j, &c.p));
    check(tt_cover_validate(c.p, g, base_of(o)));
    char* s = nullptr;
    std::string name = std::string("tev_") + label;
    if (o.format == "json") check(tt_cover_to_json(c.p, &s));
    else check(tt_cover_to_dot(c.p, name.c_str(), &s));
    std::filesystem::path file = dir / (name + "." + o.format);
    write_file(file, take(s));
    std::cout << file.string() << "\n";
  }
  return kOk;
}

int cmd_verify(int g, bool inject, const Options& o) {
  Handle<tt_verify, tt_verify_free> v;
  check(tt_verify_run(g, base_of(o), inject ? 1 : 0, &v.p));
  char* s = nullptr;
  check(tt_verify_report(v.p, format_of(o), &s));
  emit(o, take(s));
  return tt_verify_passed(v.p) ? kOk : kFailed;
}

int cmd_paths(int d, const Options& o) {
  char* s = nullptr;
  check(tt_paths_report(d, format_of(o), &s));
  emit(o, take(s));
  return kOk;
}

int cmd_matrix(int g, const std::string& word, int j, const Options& o) {
  char* s = nullptr;
  check(tt_matrix_report(g, word == "-" ? "" : word.c_str(), j, base_of(o), format_of(o), &s));
  emit(o, take(s));
  return kOk;
}

int cmd_oracle(const Options& o) {
  Handle<tt_oracle, tt_oracle_free> r;
  check(tt_oracle_run(base_of(o), &r.p));
  char* s = nullptr;
  check(tt_oracle_report(r.p, format_of(o), &s));
  emit(o, take(s));
  return tt_oracle_equivalent(r.p) ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical Tevelev degrees in exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tt_version()));
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text, json, csv or dot (solutions: json)")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    c->add_option("--out", o.out, "output file (directory for solutions)");
    c->add_option("--base", o.base, "feasibility base B, lengths x_i = B^i")->check(CLI::Number);
  };
  int genus = 0, d = 0, j = 0;
  std::string word;
  bool inject = false;

  auto* tev = app.add_subcommand("tev", "certify Tev_g = 2^g");
  tev->add_option("g", genus, "genus, 1..8")->required()->check(CLI::Range(1, 8));
  common(tev);
  auto* sol = app.add_subcommand("solutions", "write every solution cover");
  sol->add_option("g", genus, "genus, 1..8")->required()->check(CLI::Range(1, 8));
  common(sol);
  auto* ver = app.add_subcommand("verify", "run every invariant check");
  ver->add_option("g", genus, "genus, 1..8")->required()->check(CLI::Range(1, 8));
  ver->add_flag("--inject-fault", inject, "corrupt one expansion factor before checking");
  common(ver);
  auto* pth = app.add_subcommand("paths", "lattice path tallies for degree d");
  pth->add_option("d", d, "degree, 2..64")->required()->check(CLI::Range(2, 64));
  common(pth);
  auto* mat = app.add_subcommand("matrix", "dilation matrix of one solution");
  mat->add_option("g", genus, "genus")->required()->check(CLI::PositiveNumber);
  mat->add_option("word", word, "word over U, D (empty or - at genus 1)")->required();
  mat->add_option("j", j, "fragment index")->required();
  common(mat);
  auto* orc = app.add_subcommand("oracle", "exhaustive genus 1 enumeration");
  common(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  if (o.format.empty()) o.format = *sol ? "json" : "text";
  try {
    if (*tev) return cmd_tev(genus, o);
    if (*sol) return cmd_solutions(genus, o);
    if (*ver) return cmd_verify(genus, inject, o);
    if (*pth) return cmd_paths(d, o);
    if (*mat) return cmd_matrix(genus, word, j, o);
    if (*orc) return cmd_oracle(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
