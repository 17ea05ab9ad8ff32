/*
 * C interface to the eaqecc library.
 *
 * Objects are opaque handles created by *_create functions and released by
 * the matching *_destroy. Every fallible call returns an eaqecc_status; on
 * failure eaqecc_last_error() describes the problem (per thread, valid until
 * the next failing call on that thread). Handles are immutable after
 * creation and may be shared across threads.
 */
#ifndef EAQECC_EAQECC_H
#define EAQECC_EAQECC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EAQECC_BUILDING_LIBRARY)
#    define EAQECC_API __declspec(dllexport)
#  else
#    define EAQECC_API __declspec(dllimport)
#  endif
#else
#  define EAQECC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eaqecc_status {
    EAQECC_OK = 0,
    EAQECC_ERR_INVALID_ARGUMENT = 1,
    EAQECC_ERR_OUT_OF_RANGE = 2,
    EAQECC_ERR_UNAVAILABLE = 3,
    EAQECC_ERR_BUDGET_EXCEEDED = 4,
    EAQECC_ERR_FORMULA_MISMATCH = 5,
    EAQECC_ERR_NULL_ARGUMENT = 6,
    EAQECC_ERR_BUFFER_TOO_SMALL = 7,
    EAQECC_ERR_IO = 8,
    EAQECC_ERR_INTERNAL = 9
} eaqecc_status;

typedef enum eaqecc_metric { EAQECC_EUCLIDEAN = 0, EAQECC_HERMITIAN = 1 } eaqecc_metric;

typedef enum eaqecc_family {
    EAQECC_FAMILY_RS_HERMITIAN = 0,
    EAQECC_FAMILY_BCH_EUCLIDEAN = 1,
    EAQECC_FAMILY_BCH_HERMITIAN = 2,
    EAQECC_FAMILY_NONE = -1
} eaqecc_family;

typedef enum eaqecc_c_source {
    EAQECC_SOURCE_FORMULA = 0,
    EAQECC_SOURCE_COSET = 1,
    EAQECC_SOURCE_MATRIX = 2
} eaqecc_c_source;

typedef enum eaqecc_coset_kind {
    EAQECC_SYMMETRIC = 0,
    EAQECC_FR_ASYMMETRIC = 1,
    EAQECC_SR_ASYMMETRIC = 2
} eaqecc_coset_kind;

typedef struct eaqecc_setting eaqecc_setting;
typedef struct eaqecc_report eaqecc_report;

typedef struct eaqecc_setting_info {
    uint64_t p;
    uint32_t r;
    uint32_t extension_degree;
    eaqecc_metric metric;
    int eval_at_zero;
    uint64_t n;               /* p^(r * extension_degree) - 1 */
    uint64_t length;          /* n, or n + 1 when evaluating at zero */
    uint64_t multiplier;      /* p^r mod n */
    uint64_t quantum_alphabet;
    uint64_t coset_count;     /* z + 1 */
    eaqecc_family family;
} eaqecc_setting_info;

typedef struct eaqecc_coset_info {
    uint64_t min_rep;
    uint64_t size;
    eaqecc_coset_kind kind;
    uint64_t partner;         /* min rep of the reciprocal coset */
} eaqecc_coset_info;

typedef struct eaqecc_params {
    uint64_t q;
    uint64_t n;
    int64_t k;
    uint64_t d_lower;
    uint64_t c;
    int catalytic;
    int valid;
    uint64_t t;
    uint64_t m_t;
} eaqecc_params;

typedef struct eaqecc_record {
    uint64_t t;
    uint64_t m_t;
    int has_formula;
    uint64_t c_formula;
    uint64_t c_coset;
    int has_matrix;
    uint64_t c_matrix;
    int agrees;
} eaqecc_record;

typedef struct eaqecc_table_row {
    uint64_t q;
    uint64_t n;
    int64_t k;
    uint64_t d;
    uint64_t c;
    int matched;
    eaqecc_params match;      /* valid when matched */
    int has_nearest;
    eaqecc_params nearest;    /* closest row with equal (n, c) */
} eaqecc_table_row;

EAQECC_API const char* eaqecc_version(void);
EAQECC_API const char* eaqecc_last_error(void);
EAQECC_API const char* eaqecc_status_string(eaqecc_status status);

EAQECC_API eaqecc_status eaqecc_setting_create(uint64_t p, uint32_t r, uint32_t extension_degree,
                                               eaqecc_metric metric, int eval_at_zero,
                                               eaqecc_setting** out);
EAQECC_API eaqecc_status eaqecc_setting_create_family(eaqecc_family family, uint64_t q,
                                                      int eval_at_zero, eaqecc_setting** out);
EAQECC_API void eaqecc_setting_destroy(eaqecc_setting* setting);
EAQECC_API eaqecc_status eaqecc_setting_get_info(const eaqecc_setting* setting,
                                                 eaqecc_setting_info* out);

/* Coset `index` (0 <= index <= z). If `elements` is non-null, up to `capacity`
 * elements are written and *written receives the coset size; a smaller
 * capacity yields EAQECC_ERR_BUFFER_TOO_SMALL. */
EAQECC_API eaqecc_status eaqecc_coset_get(const eaqecc_setting* setting, size_t index,
                                          eaqecc_coset_info* info, uint64_t* elements,
                                          size_t capacity, size_t* written);
EAQECC_API eaqecc_status eaqecc_index_of_rep(const eaqecc_setting* setting, uint64_t rep,
                                             size_t* index);

EAQECC_API eaqecc_status eaqecc_compute_params(const eaqecc_setting* setting, size_t t,
                                               eaqecc_c_source source, eaqecc_params* out);
/* Fills one row per t; capacity must be at least coset_count. threads == 0
 * uses the hardware concurrency. */
EAQECC_API eaqecc_status eaqecc_sweep(const eaqecc_setting* setting, eaqecc_c_source source,
                                      unsigned threads, eaqecc_params* rows, size_t capacity,
                                      size_t* written);
EAQECC_API eaqecc_status eaqecc_closed_form_c(eaqecc_family family, uint64_t q, uint64_t m_t,
                                              int extended, uint64_t* c);

EAQECC_API eaqecc_status eaqecc_verify(const eaqecc_setting* setting, int use_matrix,
                                       unsigned threads, eaqecc_report** out);
EAQECC_API void eaqecc_report_destroy(eaqecc_report* report);
EAQECC_API size_t eaqecc_report_size(const eaqecc_report* report);
EAQECC_API size_t eaqecc_report_mismatch_count(const eaqecc_report* report);
EAQECC_API eaqecc_status eaqecc_report_get(const eaqecc_report* report, size_t index,
                                           eaqecc_record* out);

/* Writes the subfield code E_Delta(t) and its dual as exponent grids
 * (NUL-terminated) into buffer. *needed receives the required size including
 * the terminator. */
EAQECC_API eaqecc_status eaqecc_dump_matrices(const eaqecc_setting* setting, size_t t,
                                              char* buffer, size_t capacity, size_t* needed);

/* Loads a table fixture and matches it against the sweep of `setting`
 * (coset source). With rows == NULL only *count is filled. */
EAQECC_API eaqecc_status eaqecc_match_table(const eaqecc_setting* setting, const char* fixture_path,
                                            eaqecc_table_row* rows, size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* EAQECC_EAQECC_H */
