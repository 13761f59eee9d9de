#ifndef MAXGENUS_H
#define MAXGENUS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define MG_OK 0

/**
 * A required pointer argument was null.
 */
#define MG_ERR_NULL -1

/**
 * Invalid argument: bad parse, bad field, violated precondition.
 */
#define MG_ERR_INVALID -2

/**
 * Internal computation failure or invariant violation.
 */
#define MG_ERR_COMPUTE -3

/**
 * Argument string was not valid UTF-8.
 */
#define MG_ERR_UTF8 -4

/**
 * A panic was caught at the boundary.
 */
#define MG_ERR_PANIC -5

/**
 * Opaque polynomial handle.
 */
typedef struct MgPoly MgPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a polynomial in the text grammar over F_prime (prime = 0 selects
 * the rationals). On success stores a new handle in `out`; free it with
 * `mg_poly_free`.
 */
int mg_poly_parse(const char *text, uint64_t prime, struct MgPoly **out);

/**
 * Seeded random weight-3m polynomial, monic in z^m (see the library docs
 * for the support contract). prime = 0 selects the rationals.
 */
int mg_random_g(uint32_t m, uint64_t prime, uint64_t seed, struct MgPoly **out);

/**
 * Renders the polynomial; free the returned string with `mg_string_free`.
 * Returns null on null input.
 */
char *mg_poly_to_string(const struct MgPoly *p);

void mg_string_free(char *s);

void mg_poly_free(struct MgPoly *p);

/**
 * Block-by-block isomorphism check; `*out_good = 1` iff every graded block
 * is invertible.
 */
int mg_phi_verdict(const struct MgPoly *p, uint32_t m, int *out_good);

/**
 * Linear-algebra membership check; `*out_good = 1` iff the ideal contains
 * no member of standard degree <= l-1.
 */
int mg_direct_verdict(const struct MgPoly *p, uint32_t m, int *out_good);

/**
 * Weight-truncated initial-ideal check under graded lex.
 */
int mg_groebner_verdict(const struct MgPoly *p, uint32_t m, int *out_good);

/**
 * Runs the constructive lift on the polynomial for shift `a` and certifies
 * the factorization congruence; `*out_ok = 1` on success.
 */
int mg_lift_check(const struct MgPoly *p, uint32_t m, uint32_t a, int *out_ok);

/**
 * The bound P(d,s); requires d >= s >= 1.
 */
int mg_max_genus_bound(int64_t d, int64_t s, int64_t *out);

/**
 * Genus of a primitive d-line of type e.
 */
int64_t mg_primitive_genus(int64_t d, int64_t e);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MAXGENUS_H */
