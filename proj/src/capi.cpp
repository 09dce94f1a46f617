#include "glued/glued.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "error.hpp"
#include "report.hpp"

struct glued_semigroup {
  glued::SemigroupFile file;
  glued::Semigroup s;
};

namespace {

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error) *error = dup_string(message);
}

glued_status status_of(const glued::Error& e) {
  return static_cast<glued_status>(static_cast<int>(e.status()));
}

// Runs fn inside the library's exception boundary.
template <typename Fn>
glued_status guarded(char** error, Fn&& fn) {
  try {
    return fn();
  } catch (const glued::Error& e) {
    set_error(error, e.what());
    return status_of(e);
  } catch (const std::bad_alloc&) {
    set_error(error, "out of memory");
    return GLUED_INTERNAL;
  } catch (const std::exception& e) {
    set_error(error, std::string("unexpected error: ") + e.what());
    return GLUED_INTERNAL;
  }
}

glued_status finish_parse(glued::SemigroupFile file, glued_semigroup** out) {
  glued::Semigroup s = file.semigroup();
  *out = new glued_semigroup{std::move(file), std::move(s)};
  return GLUED_OK;
}

std::string glue_document(const glued::GlueResult& result, const std::string& extra) {
  std::vector<std::size_t> left(result.b1.size());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = i;
  glued::SemigroupFile file =
      glued::file_from_semigroup(result.s, {glued::NamedSplit{"glue", std::move(left)}});
  return glued::serialize_semigroup_file(file) + extra + glued::glue_report(result);
}

}  // namespace

extern "C" {

void glued_free(glued_semigroup* s) { delete s; }

void glued_string_free(char* s) { std::free(s); }

glued_status glued_parse(const char* text, glued_semigroup** out, char** error) {
  if (!text || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error,
                 [&] { return finish_parse(glued::parse_semigroup_file(text), out); });
}

glued_status glued_read_file(const char* path, glued_semigroup** out, char** error) {
  if (!path || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error,
                 [&] { return finish_parse(glued::read_semigroup_file(path), out); });
}

glued_status glued_serialize(const glued_semigroup* s, char** out) {
  if (!s || !out) return GLUED_BAD_ARGUMENT;
  return guarded(nullptr, [&] {
    *out = dup_string(glued::serialize_semigroup_file(s->file));
    return *out ? GLUED_OK : GLUED_INTERNAL;
  });
}

size_t glued_generator_count(const glued_semigroup* s) {
  return s ? s->s.generator_count() : 0;
}

size_t glued_free_rank(const glued_semigroup* s) {
  return s ? s->s.group().free_rank() : 0;
}

size_t glued_torsion_rank(const glued_semigroup* s) {
  return s ? s->s.group().torsion_rank() : 0;
}

glued_status glued_analyze_report(const glued_semigroup* s, uint64_t seed, char** out,
                                  char** error) {
  if (!s || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    *out = dup_string(glued::analyze_report(glued::analyze_ideal(s->s, seed)));
    return GLUED_OK;
  });
}

glued_status glued_betti_report(const glued_semigroup* s, char** out, char** error) {
  if (!s || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    *out = dup_string(glued::betti_report(glued::analyze_ideal(s->s)));
    return GLUED_OK;
  });
}

glued_status glued_present_report(const glued_semigroup* s, uint64_t seed, char** out,
                                  char** error) {
  if (!s || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    *out = dup_string(glued::presentation_report(glued::analyze_ideal(s->s, seed)));
    return GLUED_OK;
  });
}

glued_status glued_indispensable_report(const glued_semigroup* s, char** out,
                                        char** error) {
  if (!s || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    *out = dup_string(glued::indispensable_report(glued::analyze_ideal(s->s)));
    return GLUED_OK;
  });
}

glued_status glued_is_ci(const glued_semigroup* s, int* ci, char** error) {
  if (!s || !ci) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    *ci = glued::is_complete_intersection(s->s) ? 1 : 0;
    return GLUED_OK;
  });
}

glued_status glued_is_glued_report(const glued_semigroup* s, const char* split,
                                   char** out, char** error) {
  if (!s || !split || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    glued::SplitSpec sp =
        glued::parse_split_arg(split, s->s.generator_count(), s->file.splits);
    glued::GluingCheck check = glued::check_gluing(s->s, sp);
    *out = dup_string(glued::gluing_report(s->s, sp, check));
    return check.glued() ? GLUED_OK : GLUED_NOT_GLUED;
  });
}

glued_status glued_gluings_report(const glued_semigroup* s, char** out, char** error) {
  if (!s || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    auto found = glued::enumerate_gluings(s->s);
    *out = dup_string(glued::gluings_report(found));
    return found.empty() ? GLUED_NOT_GLUED : GLUED_OK;
  });
}

glued_status glued_glue(const glued_semigroup* t1, const glued_semigroup* t2,
                        const char* gamma_x, const char* gamma_y, char** out_doc,
                        char** error) {
  if (!t1 || !t2 || !gamma_x || !gamma_y || !out_doc) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    glued::GlueRecipe recipe{t1->s, t2->s, glued::parse_int_list(gamma_x),
                             glued::parse_int_list(gamma_y)};
    glued::GlueResult result = glued::glue(recipe);
    *out_doc = dup_string(glue_document(result, ""));
    return GLUED_OK;
  });
}

glued_status glued_glue_affine(const glued_semigroup* t1, const glued_semigroup* t2,
                               uint64_t budget, char** out_doc, char** error) {
  if (!t1 || !t2 || !out_doc) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    glued::AffineSearchOutcome outcome = glued::affine_gamma_search(t1->s, t2->s, budget);
    std::string extra = "# gamma_x: " + glued::vec_to_string(outcome.recipe.gamma_x, " ") +
                        "\n# gamma_y: " + glued::vec_to_string(outcome.recipe.gamma_y, " ") +
                        "\n# candidates examined: " + std::to_string(outcome.examined) +
                        "\n";
    *out_doc = dup_string(glue_document(outcome.result, extra));
    return GLUED_OK;
  });
}

glued_status glued_export_fiber(const glued_semigroup* s, const char* degree,
                                const char* format, char** out, char** error) {
  if (!s || !degree || !out) {
    set_error(error, "null argument");
    return GLUED_BAD_ARGUMENT;
  }
  return guarded(error, [&] {
    glued::GroupElement m = glued::parse_degree_arg(degree, s->s.group());
    if (!glued::is_member(s->s, m))
      glued::fail(glued::Status::DegreeNotInSemigroup,
                  "degree " + glued::element_string(m) + " is not in the semigroup");
    glued::NablaComplex nabla = glued::build_nabla(glued::enumerate_fiber(s->s, m));
    std::vector<std::string> labels = glued::variable_labels(s->s.generator_count());
    std::string fmt = format ? format : "dot";
    if (fmt == "dot") {
      *out = dup_string(glued::dot_export(nabla, labels));
    } else if (fmt == "text") {
      *out = dup_string(glued::fiber_text_report(nabla, labels));
    } else {
      glued::fail(glued::Status::BadArgument, "unknown format '" + fmt + "'");
    }
    return GLUED_OK;
  });
}

}  // extern "C"
