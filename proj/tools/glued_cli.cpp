// Command-line front end for the semigroup gluing library. All computation
// goes through the C API in glued/glued.h; this file only handles argument
// parsing, file I/O and exit codes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "glued/glued.h"

namespace {

struct OwnedString {
  char* value = nullptr;
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { glued_string_free(value); }
};

struct OwnedSemigroup {
  glued_semigroup* value = nullptr;
  OwnedSemigroup() = default;
  OwnedSemigroup(const OwnedSemigroup&) = delete;
  OwnedSemigroup& operator=(const OwnedSemigroup&) = delete;
  ~OwnedSemigroup() { glued_free(value); }
};

// Exit codes: 0 ok / glued / complete intersection, 1 not glued (is-ci: not a
// complete intersection), 2 parse error, 3 not reduced, 4 malformed split,
// 5 invalid input (bad argument, dimension mismatch, not minimal, not
// affine), 6 search budget exhausted, 7 degree not in the semigroup,
// 9 internal error.
int exit_code_for(glued_status st) {
  switch (st) {
    case GLUED_OK: return 0;
    case GLUED_NOT_GLUED: return 1;
    case GLUED_PARSE_ERROR: return 2;
    case GLUED_NOT_REDUCED: return 3;
    case GLUED_BAD_SPLIT: return 4;
    case GLUED_BAD_INPUT:
    case GLUED_TOO_MANY_GENERATORS:
    case GLUED_DIMENSION_MISMATCH:
    case GLUED_BAD_ARGUMENT:
    case GLUED_NOT_MINIMAL:
    case GLUED_NOT_AFFINE: return 5;
    case GLUED_EXHAUSTED: return 6;
    case GLUED_DEGREE_NOT_IN_SEMIGROUP: return 7;
    case GLUED_INTERNAL: return 9;
  }
  return 9;
}

void print_error(glued_status st, const OwnedString& err) {
  if (st == GLUED_OK || st == GLUED_NOT_GLUED) return;
  std::cerr << "error: "
            << (err.value && err.value[0] ? err.value : "operation failed") << '\n';
}

void print_text(const char* text) {
  if (!text || !*text) return;
  std::string_view sv(text);
  std::cout << sv;
  if (sv.back() != '\n') std::cout << '\n';
}

bool load(const std::string& path, OwnedSemigroup& h, int& rc) {
  OwnedString err;
  glued_status st = glued_read_file(path.c_str(), &h.value, &err.value);
  if (st != GLUED_OK) {
    print_error(st, err);
    rc = exit_code_for(st);
    return false;
  }
  return true;
}

int report_command(const std::string& path,
                   glued_status (*fn)(const glued_semigroup*, char**, char**)) {
  int rc = 0;
  OwnedSemigroup h;
  if (!load(path, h, rc)) return rc;
  OwnedString out;
  OwnedString err;
  glued_status st = fn(h.value, &out.value, &err.value);
  print_text(out.value);
  print_error(st, err);
  return exit_code_for(st);
}

int seeded_report_command(const std::string& path, std::uint64_t seed,
                          glued_status (*fn)(const glued_semigroup*, uint64_t,
                                             char**, char**)) {
  int rc = 0;
  OwnedSemigroup h;
  if (!load(path, h, rc)) return rc;
  OwnedString out;
  OwnedString err;
  glued_status st = fn(h.value, seed, &out.value, &err.value);
  print_text(out.value);
  print_error(st, err);
  return exit_code_for(st);
}

// Prints the constructed document and, when requested, writes it to a file.
int emit_document(const char* doc, const std::string& out_path) {
  print_text(doc);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (file) file << (doc ? doc : "");
    if (!file || !file.good()) {
      std::cerr << "error: cannot write output file: " << out_path << '\n';
      return 9;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact analysis of finitely generated commutative reduced semigroups: "
      "Betti degrees, minimal presentations, indispensable binomials, gluing "
      "detection with certificates, and construction of glued semigroups"};
  app.require_subcommand(1);

  std::string path;
  std::string path2;
  std::string split;
  std::string degree;
  std::string gamma_x;
  std::string gamma_y;
  std::string out_path;
  std::string format = "dot";
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;

  CLI::App* analyze = app.add_subcommand(
      "analyze",
      "Full report: generators, grading, Betti degrees, minimal presentation, "
      "indispensable binomials, uniqueness and complete-intersection flags");
  analyze->add_option("file", path, "semigroup document")->required();
  analyze->add_option("--seed", seed,
                      "tie-break seed for presentation representatives");

  CLI::App* betti = app.add_subcommand(
      "betti", "Betti degrees with fiber sizes and component counts");
  betti->add_option("file", path, "semigroup document")->required();

  CLI::App* present =
      app.add_subcommand("present", "Minimal presentation of the defining ideal");
  present->add_option("file", path, "semigroup document")->required();
  present->add_option("--seed", seed,
                      "tie-break seed for presentation representatives");

  CLI::App* indispensable =
      app.add_subcommand("indispensable", "Indispensable binomials");
  indispensable->add_option("file", path, "semigroup document")->required();

  CLI::App* is_glued = app.add_subcommand(
      "is-glued", "Check whether a generator bipartition is a gluing");
  is_glued->add_option("file", path, "semigroup document")->required();
  is_glued
      ->add_option("--split", split,
                   "bipartition: \"1-4|5-8\", \"1,2|3\" (1-based), or a named "
                   "split from the document")
      ->required();

  CLI::App* gluings =
      app.add_subcommand("gluings", "List all bipartitions that are gluings");
  gluings->add_option("file", path, "semigroup document")->required();

  CLI::App* glue = app.add_subcommand(
      "glue", "Construct the gluing of two semigroups along gamma degrees");
  glue->add_option("file1", path, "first semigroup document")->required();
  glue->add_option("file2", path2, "second semigroup document")->required();
  glue->add_option("gamma_x", gamma_x,
                   "coefficients over the first generator set, e.g. \"2,0,2,0\"")
      ->required();
  glue->add_option("gamma_y", gamma_y,
                   "coefficients over the second generator set, e.g. \"1,2,1\"")
      ->required();
  glue->add_option("-o,--output", out_path, "also write the document to this file");

  CLI::App* glue_affine = app.add_subcommand(
      "glue-affine",
      "Search gamma pairs until the glued semigroup is affine, minimal and glued");
  glue_affine->add_option("file1", path, "first semigroup document")->required();
  glue_affine->add_option("file2", path2, "second semigroup document")->required();
  glue_affine->add_option("--budget", budget,
                          "maximum candidate pairs to examine (default 100000)");
  glue_affine->add_option("-o,--output", out_path,
                          "also write the document to this file");

  CLI::App* is_ci = app.add_subcommand(
      "is-ci", "Report whether the semigroup is a complete intersection");
  is_ci->add_option("file", path, "semigroup document")->required();

  CLI::App* export_dot = app.add_subcommand(
      "export-dot", "Fiber graph of one degree (DOT or text)");
  export_dot->add_option("file", path, "semigroup document")->required();
  export_dot
      ->add_option("degree", degree,
                   "degree, e.g. \"(13,13)\" or \"13,13\"; torsion coordinates "
                   "before ';'")
      ->required();
  export_dot->add_option("--format", format, "output format (dot or text)")
      ->check(CLI::IsMember({"dot", "text"}));

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) return seeded_report_command(path, seed, glued_analyze_report);
  if (betti->parsed()) return report_command(path, glued_betti_report);
  if (present->parsed()) return seeded_report_command(path, seed, glued_present_report);
  if (indispensable->parsed())
    return report_command(path, glued_indispensable_report);
  if (gluings->parsed()) return report_command(path, glued_gluings_report);

  if (is_glued->parsed()) {
    int rc = 0;
    OwnedSemigroup h;
    if (!load(path, h, rc)) return rc;
    OwnedString out;
    OwnedString err;
    glued_status st =
        glued_is_glued_report(h.value, split.c_str(), &out.value, &err.value);
    print_text(out.value);
    print_error(st, err);
    return exit_code_for(st);
  }

  if (glue->parsed()) {
    int rc = 0;
    OwnedSemigroup h1;
    OwnedSemigroup h2;
    if (!load(path, h1, rc) || !load(path2, h2, rc)) return rc;
    OwnedString out;
    OwnedString err;
    glued_status st = glued_glue(h1.value, h2.value, gamma_x.c_str(),
                                 gamma_y.c_str(), &out.value, &err.value);
    if (st != GLUED_OK) {
      print_error(st, err);
      return exit_code_for(st);
    }
    return emit_document(out.value, out_path);
  }

  if (glue_affine->parsed()) {
    int rc = 0;
    OwnedSemigroup h1;
    OwnedSemigroup h2;
    if (!load(path, h1, rc) || !load(path2, h2, rc)) return rc;
    OwnedString out;
    OwnedString err;
    glued_status st =
        glued_glue_affine(h1.value, h2.value, budget, &out.value, &err.value);
    if (st != GLUED_OK) {
      print_error(st, err);
      return exit_code_for(st);
    }
    return emit_document(out.value, out_path);
  }

  if (is_ci->parsed()) {
    int rc = 0;
    OwnedSemigroup h;
    if (!load(path, h, rc)) return rc;
    OwnedString err;
    int ci = 0;
    glued_status st = glued_is_ci(h.value, &ci, &err.value);
    if (st != GLUED_OK) {
      print_error(st, err);
      return exit_code_for(st);
    }
    std::cout << (ci ? "yes" : "no") << '\n';
    return ci ? 0 : 1;
  }

  if (export_dot->parsed()) {
    int rc = 0;
    OwnedSemigroup h;
    if (!load(path, h, rc)) return rc;
    OwnedString out;
    OwnedString err;
    glued_status st = glued_export_fiber(h.value, degree.c_str(), format.c_str(),
                                         &out.value, &err.value);
    print_text(out.value);
    print_error(st, err);
    return exit_code_for(st);
  }

  return 9;
}
