#ifndef SHINTANI_SHINTANI_H
#define SHINTANI_SHINTANI_H

/*
 * C interface to the exact special-value library.
 *
 * A session holds the field, conductor, fan, character and seed; results are
 * owned by the caller and freed with shz_result_free. Strings returned by the
 * library stay valid until the owning object is freed or the next call on it.
 * Sessions are not thread-safe; distinct sessions may be used concurrently.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SHZ_API __attribute__((visibility("default")))
#else
#define SHZ_API
#endif

typedef enum shz_status {
    SHZ_OK = 0,
    SHZ_E_INVALID_ARGUMENT = 1,
    SHZ_E_UNSUPPORTED_DEGREE = 2,
    SHZ_E_UNSUPPORTED_FIELD = 3,
    SHZ_E_POLE = 4,
    SHZ_E_NOT_IN_SUBFIELD = 5,
    SHZ_E_DIVISION_BY_ZERO = 6,
    SHZ_E_PARSE = 7,
    SHZ_E_OVERFLOW = 8,
    SHZ_E_VERIFICATION_FAILED = 9,
    SHZ_E_INTERNAL = 10
} shz_status;

typedef struct shz_session shz_session;
typedef struct shz_result shz_result;

SHZ_API const char* shz_version(void);
SHZ_API const char* shz_status_name(shz_status status);

SHZ_API shz_status shz_session_new(shz_session** out);
SHZ_API void shz_session_free(shz_session* s);
/* Message of the last failing call on this session, "" if none. */
SHZ_API const char* shz_last_error(const shz_session* s);

/* Field: F = Q, or Q(sqrt m) given by its fundamental discriminant. Changing
 * the field clears the fan and character. Default: Q. */
SHZ_API shz_status shz_set_rational(shz_session* s);
SHZ_API shz_status shz_set_disc(shz_session* s, int64_t disc);
/* 1 or 2. */
SHZ_API int shz_degree(const shz_session* s);
SHZ_API shz_status shz_set_swap_embeddings(shz_session* s, int swap);

/* "7", "2+w" (a generator; w = (1+sqrt m)/2 or sqrt m) or "[[a,b],[c,d]]". */
SHZ_API shz_status shz_set_conductor(shz_session* s, const char* text);
/* JSON fan document; NULL restores the standard fan. */
SHZ_API shz_status shz_set_fan_json(shz_session* s, const char* json);
SHZ_API shz_status shz_set_character_json(shz_session* s, const char* json);
/* chi_1 o Norm with chi_1 the j-th power of the generator character mod the prime q. */
SHZ_API shz_status shz_set_character_norm(shz_session* s, int64_t q, int64_t j);
SHZ_API shz_status shz_set_seed(shz_session* s, uint64_t seed);

/* Lerch value at the torsion point with exponents (e1, e2) on (1, w) at level
 * exponent(O / conductor). */
SHZ_API shz_status shz_lerch(shz_session* s, int64_t e1, int64_t e2, int k, shz_result** out);
SHZ_API shz_status shz_hecke(shz_session* s, int k, shz_result** out);
/* Single-cone values d^k G_sigma(xi) for every cone of the fan (adapted to xi
 * first when `adapt` is nonzero); kvec has one entry per embedding. */
SHZ_API shz_status shz_shintani(shz_session* s, int64_t e1, int64_t e2, const int* kvec, size_t klen, int adapt,
                                shz_result** out);
/* check: "cocycle", "homology", "coboundary", "fan-independence",
 * "equivariance", "character" or "fourier-inversion". k applies to coboundary, the k list
 * {0..k} to fan-independence and equivariance. trials applies to cocycle and
 * coboundary. A failed verification still returns SHZ_OK; see shz_result_passed. */
SHZ_API shz_status shz_verify(shz_session* s, const char* check, int k, size_t trials, shz_result** out);
SHZ_API shz_status shz_selfcheck(shz_session* s, shz_result** out);

SHZ_API const char* shz_result_json(const shz_result* r);
SHZ_API const char* shz_result_text(const shz_result* r);
/* 1 for computed values and passing reports, 0 for failing reports. */
SHZ_API int shz_result_passed(const shz_result* r);
SHZ_API void shz_result_free(shz_result* r);

#ifdef __cplusplus
}
#endif

#endif
