#ifndef GLUED_GLUED_H
#define GLUED_GLUED_H

/* C interface to the semigroup gluing library.
 *
 * Conventions:
 *  - every function returns a glued_status; 0 means success
 *  - output strings are heap-allocated, release them with glued_string_free
 *  - on failure *error (when present) receives a message, also heap-allocated
 *  - handles are released with glued_free
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum glued_status {
  GLUED_OK = 0,
  GLUED_NOT_GLUED = 1,
  GLUED_PARSE_ERROR = 2,
  GLUED_NOT_REDUCED = 3,
  GLUED_BAD_SPLIT = 4,
  GLUED_BAD_INPUT = 5,
  GLUED_EXHAUSTED = 6,
  GLUED_DEGREE_NOT_IN_SEMIGROUP = 7,
  GLUED_TOO_MANY_GENERATORS = 8,
  GLUED_DIMENSION_MISMATCH = 9,
  GLUED_BAD_ARGUMENT = 10,
  GLUED_INTERNAL = 11,
  GLUED_NOT_MINIMAL = 12,
  GLUED_NOT_AFFINE = 13
} glued_status;

/* A parsed semigroup document: the semigroup itself plus its named splits. */
typedef struct glued_semigroup glued_semigroup;

void glued_free(glued_semigroup* s);
void glued_string_free(char* s);

/* Parse a document (see README for the format). */
glued_status glued_parse(const char* text, glued_semigroup** out, char** error);
glued_status glued_read_file(const char* path, glued_semigroup** out, char** error);
/* Canonical serialization; round-trips through glued_parse. */
glued_status glued_serialize(const glued_semigroup* s, char** out);

size_t glued_generator_count(const glued_semigroup* s);
size_t glued_free_rank(const glued_semigroup* s);
size_t glued_torsion_rank(const glued_semigroup* s);

/* Full analysis: generators, grading, Betti degrees with fiber data, minimal
 * presentation, indispensable binomials, uniqueness and complete-intersection
 * flags. seed permutes representative choices in the presentation (0 =
 * canonical). */
glued_status glued_analyze_report(const glued_semigroup* s, uint64_t seed, char** out,
                                  char** error);
glued_status glued_betti_report(const glued_semigroup* s, char** out, char** error);
glued_status glued_present_report(const glued_semigroup* s, uint64_t seed, char** out,
                                  char** error);
glued_status glued_indispensable_report(const glued_semigroup* s, char** out,
                                        char** error);

/* *ci receives 1 or 0. */
glued_status glued_is_ci(const glued_semigroup* s, int* ci, char** error);

/* split: "1-4|5-8", "1,2|3" (1-based) or a split name from the document.
 * Returns GLUED_OK with a certificate report when glued, GLUED_NOT_GLUED with
 * a reason report otherwise. */
glued_status glued_is_glued_report(const glued_semigroup* s, const char* split,
                                   char** out, char** error);
/* All gluing bipartitions; GLUED_NOT_GLUED when there are none. */
glued_status glued_gluings_report(const glued_semigroup* s, char** out, char** error);

/* gamma_x / gamma_y: comma- or space-separated natural numbers, one per
 * generator of the respective input. out_doc receives the constructed
 * semigroup document followed by a verification comment block. */
glued_status glued_glue(const glued_semigroup* t1, const glued_semigroup* t2,
                        const char* gamma_x, const char* gamma_y, char** out_doc,
                        char** error);
/* Searches gamma pairs (total sum ascending, lexicographic within) until the
 * glue output is affine, minimal and glued; at most budget candidates. */
glued_status glued_glue_affine(const glued_semigroup* t1, const glued_semigroup* t2,
                               uint64_t budget, char** out_doc, char** error);

/* Fiber complex of one degree. degree: "(13,13)" or "13,13", with torsion
 * coordinates before ';'. format: "dot" or "text". */
glued_status glued_export_fiber(const glued_semigroup* s, const char* degree,
                                const char* format, char** out, char** error);

#ifdef __cplusplus
}
#endif

#endif /* GLUED_GLUED_H */
