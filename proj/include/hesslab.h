#ifndef HESSLAB_H
#define HESSLAB_H

/* C interface to the hesslab core: exact symbolic computation around
 * polynomial Hessian determinants (anti-triangularization, weighted leading
 * parts, gradient-map inversion, isotropy certificates).
 *
 * All functions return a status code; HESSLAB_OK means success and
 * HESSLAB_NEGATIVE means a mathematically negative but verified outcome
 * (e.g. an anisotropy obstruction).  Everything else is an error; the
 * thread-local message from hesslab_last_error() describes it.
 *
 * Strings returned through out-parameters are heap-allocated; release them
 * with hesslab_free_string.  Polynomial handles are opaque; release them
 * with hesslab_poly_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hesslab_status {
    HESSLAB_OK = 0,
    HESSLAB_NEGATIVE = 1,

    HESSLAB_ERR_SYNTAX = 100,
    HESSLAB_ERR_UNKNOWN_VARIABLE = 101,
    HESSLAB_ERR_DIMENSION_MISMATCH = 102,
    HESSLAB_ERR_INDEX_OUT_OF_RANGE = 103,
    HESSLAB_ERR_ZERO_POLYNOMIAL = 104,
    HESSLAB_ERR_SIZE_LIMIT_EXCEEDED = 105,
    HESSLAB_ERR_SINGULAR = 106,
    HESSLAB_ERR_NOT_SYMMETRIC = 107,
    HESSLAB_ERR_NOT_ANTI_TRIANGULAR = 108,
    HESSLAB_ERR_MIDDLE_ENTRY_NOT_SQUARE = 109,
    HESSLAB_ERR_SQUARE_ROOT_UNAVAILABLE = 110,
    HESSLAB_ERR_RANK_DEFICIENT = 111,
    HESSLAB_ERR_INVALID_ARGUMENT = 112,
    HESSLAB_ERR_PRECONDITION_UNMET = 113,
    HESSLAB_ERR_NOT_ZERO_HESSIAN = 114,
    HESSLAB_ERR_NEEDS_EXTENSION = 115,
    HESSLAB_ERR_UNSUPPORTED_DIMENSION = 116,
    HESSLAB_ERR_EMPTY_KERNEL = 117,
    HESSLAB_ERR_BUDGET_EXCEEDED = 118,
    HESSLAB_ERR_ZERO_HESSIAN_DETERMINANT = 119,
    HESSLAB_ERR_NON_CONSTANT_DETERMINANT = 120,
    HESSLAB_ERR_HYPOTHESES_UNMET = 121,
    HESSLAB_ERR_ISOTROPY_UNDECIDED = 122,
    HESSLAB_ERR_NON_CONSTANT_ANTI_DIAGONAL = 123,
    HESSLAB_ERR_DEGREE_GUARD_EXCEEDED = 124,
    HESSLAB_ERR_MALFORMED_CERTIFICATE = 125,
    HESSLAB_ERR_UNKNOWN_FIXTURE = 126,
    HESSLAB_ERR_VERIFY_FAILED = 127,
    HESSLAB_ERR_INTERNAL = 199
} hesslab_status;

typedef struct hesslab_poly hesslab_poly;

/* Thread-local message for the most recent failure on this thread. */
const char* hesslab_last_error(void);

void hesslab_free_string(char* s);

/* Parse polynomial text over x1..xn.  field is "Q" or "Qi"; params is a
 * comma-separated list of parameter names or NULL. */
hesslab_status hesslab_parse(const char* text, int nvars, const char* field,
                             const char* params, hesslab_poly** out);
void hesslab_poly_free(hesslab_poly* p);
hesslab_status hesslab_poly_format(const hesslab_poly* p, char** out);

/* Hessian matrix: canonical rows as text, or a JSON record with as_json. */
hesslab_status hesslab_hessian(const hesslab_poly* p, int as_json, char** out);
/* Hessian determinant via fraction-free elimination. */
hesslab_status hesslab_hessian_det(const hesslab_poly* p, char** out);
/* w-leading part; weights is a comma-separated list of rationals. */
hesslab_status hesslab_lead_part(const hesslab_poly* p, const char* weights, int as_json,
                                 char** out);
/* Zero-Hessian classification (n <= 3). */
hesslab_status hesslab_classify(const hesslab_poly* p, int as_json, char** out);
/* Full anti-triangularization pipeline.  Returns HESSLAB_NEGATIVE with an
 * obstruction record when the quadratic part is certified anisotropic. */
hesslab_status hesslab_antitri(const hesslab_poly* p, int budget, long height, int as_json,
                               char** out);
/* Invert an anti-triangular map given by component texts. */
hesslab_status hesslab_invert(const char* const* components, size_t count, int nvars,
                              const char* field, const char* params, int as_json, char** out);
/* Isotropy of the quadratic part of p.  HESSLAB_OK with a witness or unknown
 * outcome; HESSLAB_NEGATIVE with a replayed certificate when anisotropic. */
hesslab_status hesslab_isotropy(const hesslab_poly* p, long height, int as_json, char** out);
/* Replay the named fixture end to end; report is a PASS/FAIL text.
 * n selects the dimension for "gn-counterexample" (ignored otherwise). */
hesslab_status hesslab_verify_fixture(const char* name, int n, char** report);

unsigned hesslab_abi_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HESSLAB_H */
