/* tropitev: tropical Tevelev degrees in exact arithmetic. */
#ifndef TROPITEV_TROPITEV_H
#define TROPITEV_TROPITEV_H

#include <stddef.h>

#if defined(TROPITEV_BUILDING)
#define TT_API __attribute__((visibility("default")))
#else
#define TT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tt_status {
  TT_OK = 0,
  TT_ERR_INVALID_ARGUMENT = 1,
  TT_ERR_NON_SQUARE,
  TT_ERR_DISCONNECTED,
  TT_ERR_UNSTABLE,
  TT_ERR_TOO_LARGE,
  TT_ERR_INCIDENCE,
  TT_ERR_HARMONICITY,
  TT_ERR_RIEMANN_HURWITZ,
  TT_ERR_LENGTH_MISMATCH,
  TT_ERR_PROFILE_MISMATCH,
  TT_ERR_STAR_VIOLATION,
  TT_ERR_DEGREE_TOO_LARGE,
  TT_ERR_SIZE_MISMATCH,
  TT_ERR_GENUS_MISMATCH,
  TT_ERR_INVALID_WORD,
  TT_ERR_INDEX_OUT_OF_RANGE,
  TT_ERR_STABILIZATION_MISMATCH,
  TT_ERR_INFEASIBLE_LENGTHS,
  TT_ERR_UNRECOGNIZED_VERTEX,
  TT_ERR_NON_UNIT_MULTIPLICITY,
  TT_ERR_MISMATCH,
  TT_ERR_DISCONNECTED_COVER,
  TT_ERR_PARSE,
  TT_ERR_IO,
  TT_ERR_INTERNAL,
  TT_ERR_NULL_POINTER = 100,
  TT_ERR_OUT_OF_MEMORY
} tt_status;

typedef enum tt_format { TT_FORMAT_TEXT = 0, TT_FORMAT_JSON, TT_FORMAT_CSV, TT_FORMAT_DOT } tt_format;

typedef struct tt_tevelev tt_tevelev;
typedef struct tt_indices tt_indices;
typedef struct tt_cover tt_cover;
typedef struct tt_verify tt_verify;
typedef struct tt_oracle tt_oracle;

TT_API const char* tt_version(void);
TT_API const char* tt_status_name(tt_status s);
/* message of the last failure on this thread, "" if none */
TT_API const char* tt_last_error_message(void);
/* strings returned through char** are owned by the caller */
TT_API void tt_string_free(char* s);
TT_API tt_status tt_parse_format(const char* name, tt_format* out);

/* base: decimal string or NULL for the default 1000*(g+2) */
TT_API tt_status tt_tevelev_compute(int genus, const char* base, tt_tevelev** out);
TT_API void tt_tevelev_free(tt_tevelev* t);
TT_API tt_status tt_tevelev_degree(const tt_tevelev* t, char** out);
TT_API size_t tt_tevelev_solution_count(const tt_tevelev* t);
TT_API tt_status tt_tevelev_solution_label(const tt_tevelev* t, size_t i, char** out);
TT_API tt_status tt_tevelev_local_degree(const tt_tevelev* t, size_t i, char** out);
TT_API tt_status tt_tevelev_report(const tt_tevelev* t, tt_format f, char** out);

TT_API tt_status tt_solution_table(int genus, tt_format f, char** out);

TT_API tt_status tt_indices_enumerate(int genus, tt_indices** out);
TT_API void tt_indices_free(tt_indices* x);
TT_API size_t tt_indices_count(const tt_indices* x);
/* borrowed pointers, valid until tt_indices_free */
TT_API tt_status tt_indices_at(const tt_indices* x, size_t i, const char** word, int* j, const char** label);

/* word over {U, D}, "" at genus 1 */
TT_API tt_status tt_cover_build(int genus, const char* word, int j, tt_cover** out);
TT_API tt_status tt_cover_from_json(const char* json, tt_cover** out);
TT_API void tt_cover_free(tt_cover* c);
/* includes the solution index when the cover was built from one */
TT_API tt_status tt_cover_to_json(const tt_cover* c, char** out);
TT_API tt_status tt_cover_to_dot(const tt_cover* c, const char* name, char** out);
/* harmonicity, local RH, lengths, Hurwitz data and the reference-point check */
TT_API tt_status tt_cover_validate(const tt_cover* c, int genus, const char* base);
TT_API tt_status tt_cover_local_degree(const tt_cover* c, int genus, const char* base, char** out);
TT_API tt_status tt_cover_isomorphic(const tt_cover* a, const tt_cover* b, int respect_lengths, int* out);
TT_API tt_status tt_cover_set_expansion(tt_cover* c, size_t source_edge, int expansion);

TT_API tt_status tt_verify_run(int genus, const char* base, int inject_fault, tt_verify** out);
TT_API void tt_verify_free(tt_verify* v);
TT_API int tt_verify_passed(const tt_verify* v);
TT_API size_t tt_verify_item_count(const tt_verify* v);
TT_API size_t tt_verify_certificates(const tt_verify* v);
TT_API tt_status tt_verify_item(const tt_verify* v, size_t i, const char** name, int* passed, const char** detail);
TT_API tt_status tt_verify_report(const tt_verify* v, tt_format f, char** out);

TT_API tt_status tt_paths_report(int d, tt_format f, char** out);
TT_API tt_status tt_matrix_report(int genus, const char* word, int j, const char* base, tt_format f, char** out);

TT_API tt_status tt_oracle_run(const char* base, tt_oracle** out);
TT_API void tt_oracle_free(tt_oracle* o);
TT_API int tt_oracle_equivalent(const tt_oracle* o);
TT_API size_t tt_oracle_cover_count(const tt_oracle* o);
TT_API size_t tt_oracle_topology_count(const tt_oracle* o);
TT_API tt_status tt_oracle_report(const tt_oracle* o, tt_format f, char** out);

#ifdef __cplusplus
}
#endif

#endif
