#ifndef JACKPOLY_H
#define JACKPOLY_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum JpStatus {
  JP_STATUS_OK = 0,
  JP_STATUS_NULL_POINTER = 1,
  JP_STATUS_INVALID_UTF8 = 2,
  JP_STATUS_DOMAIN = 3,
  JP_STATUS_CONSISTENCY = 4,
  JP_STATUS_RANGE = 5,
  JP_STATUS_PARSE = 6,
  JP_STATUS_PANIC = 7,
} JpStatus;

// Opaque polynomial with exact rational coefficients.
typedef struct JpPolynomial JpPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. Valid until
// the next failing call on the same thread; do not free.
const char *jp_last_error(void);

// Library version as a static string; do not free.
const char *jp_version(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed already.
void jp_string_free(char *s);

// Builds the Jack polynomial `P_μ(x_1..x_n; θ)`.
//
// # Safety
// `mu` points to `mu_len` parts, `theta` is a C string, `out` is writable.
enum JpStatus jp_jack_new(const size_t *mu,
                          size_t mu_len,
                          size_t n,
                          const char *theta,
                          struct JpPolynomial **out);

// Builds the shifted Jack polynomial `P*_μ(x_1..x_n; θ)`.
//
// # Safety
// As for [`jp_jack_new`].
enum JpStatus jp_shifted_jack_new(const size_t *mu,
                                  size_t mu_len,
                                  size_t n,
                                  const char *theta,
                                  struct JpPolynomial **out);

// # Safety
// `p` must come from a constructor here and not have been freed. Null is ignored.
void jp_poly_free(struct JpPolynomial *p);

// Number of variables, or 0 for a null handle.
//
// # Safety
// `p` is null or a live handle.
size_t jp_poly_num_vars(const struct JpPolynomial *p);

// Number of nonzero terms, or 0 for a null handle.
//
// # Safety
// `p` is null or a live handle.
size_t jp_poly_num_terms(const struct JpPolynomial *p);

// Human-readable form such as `x1^2 + 1/2*x1*x2`.
//
// # Safety
// `p` is a live handle and `out` is writable.
enum JpStatus jp_poly_to_string(const struct JpPolynomial *p, char **out);

// JSON form `{"n": .., "terms": [{"exponents": [..], "coeff": "p/q"}, ..]}`.
//
// # Safety
// `p` is a live handle and `out` is writable.
enum JpStatus jp_poly_to_json(const struct JpPolynomial *p, char **out);

// Exact value at a point given as `len` rational strings.
//
// # Safety
// `point` holds `len` C strings; `p` is a live handle; `out` is writable.
enum JpStatus jp_poly_evaluate(const struct JpPolynomial *p,
                               const char *const *point,
                               size_t len,
                               char **out);

// Floating-point value at a point of `len` doubles.
//
// # Safety
// `point` holds `len` doubles; `p` is a live handle; `out` is writable.
enum JpStatus jp_poly_evaluate_f64(const struct JpPolynomial *p,
                                   const double *point,
                                   size_t len,
                                   double *out);

// `P*_μ(λ; θ)` in `max(length μ, length λ)` variables, as a rational string.
//
// # Safety
// Array arguments hold the stated number of parts; `theta` is a C string;
// `out` is writable.
enum JpStatus jp_shifted_eval(const size_t *mu,
                              size_t mu_len,
                              const size_t *lambda,
                              size_t lambda_len,
                              const char *theta,
                              char **out);

// Generalized binomial coefficient `P*_μ(λ)/H(μ)` as a rational string.
//
// # Safety
// As for [`jp_shifted_eval`].
enum JpStatus jp_binomial_coefficient(const size_t *lambda,
                                      size_t lambda_len,
                                      const size_t *mu,
                                      size_t mu_len,
                                      const char *theta,
                                      char **out);

// θ-dimension of `λ/μ` as a rational string; pass `mu_len = 0` for a
// straight shape.
//
// # Safety
// As for [`jp_shifted_eval`].
enum JpStatus jp_thetadim(const size_t *lambda,
                          size_t lambda_len,
                          const size_t *mu,
                          size_t mu_len,
                          const char *theta,
                          char **out);

// Truncated Bessel series at `l`, `x` of length `n`.
//
// # Safety
// `l` and `x` hold `n` doubles; `theta` is a C string; outputs are writable.
enum JpStatus jp_bessel_series(const double *l,
                               const double *x,
                               size_t n,
                               const char *theta,
                               size_t degree_cut,
                               double *value,
                               double *tail_estimate);

// Relative error of the quadrature of the integral representation at real
// `λ` of length `n`, with the default rule for `θ`.
//
// # Safety
// `mu` holds `mu_len` parts, `lambda` holds `n` doubles; `rel_err` is writable.
enum JpStatus jp_integral_rel_err(const size_t *mu,
                                  size_t mu_len,
                                  const double *lambda,
                                  size_t n,
                                  const char *theta,
                                  size_t nodes_per_dim,
                                  double *rel_err);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* JACKPOLY_H */
