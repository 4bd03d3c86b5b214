/*
 * zcz -- ZCZ sequence construction and verification library.
 *
 * C API over the C++ core: opaque handles, status-code returns, and
 * per-thread error messages. Every object returned through an out-pointer
 * is owned by the caller and released with the matching *_free function.
 * All functions are safe to call from multiple threads as long as no two
 * threads touch the same handle.
 */

#ifndef ZCZ_ZCZ_H
#define ZCZ_ZCZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define ZCZ_API __declspec(dllexport)
#else
#  define ZCZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zcz_status {
    ZCZ_OK = 0,
    ZCZ_ERROR_INVALID_ARGUMENT = 1, /* precondition violated */
    ZCZ_ERROR_SIZE_LIMIT = 2,       /* parameter exceeds exact 64-bit range */
    ZCZ_ERROR_MISMATCH = 3,         /* sequences differ in period or modulus */
    ZCZ_ERROR_PARSE = 4,            /* malformed sequence file */
    ZCZ_ERROR_IO = 5,               /* unreadable or unwritable path */
    ZCZ_ERROR_INTERNAL = 6
} zcz_status;

typedef enum zcz_rounding {
    ZCZ_ROUND_FLOOR = 0,
    ZCZ_ROUND_CEILING = 1
} zcz_rounding;

typedef enum zcz_method {
    ZCZ_METHOD_DIRECT = 0,   /* quadratic shift-and-sum reference */
    ZCZ_METHOD_TRANSFORM = 1 /* DFT power-spectrum round trip */
} zcz_method;

typedef enum zcz_format {
    ZCZ_FORMAT_JSON = 0,
    ZCZ_FORMAT_CSV = 1
} zcz_format;

/* A periodic sequence over roots of unity (exact exponent representation). */
typedef struct zcz_sequence zcz_sequence;
/* A full correlation profile: one complex value per shift, plus the
 * zero-classification tolerance that produced it. */
typedef struct zcz_profile zcz_profile;

/* Static name of a status code ("ok", "invalid_argument", ...). */
ZCZ_API const char* zcz_status_name(zcz_status status);

/* Message describing the most recent failure on the calling thread.
 * Valid until the next zcz_* call on the same thread. Never NULL. */
ZCZ_API const char* zcz_last_error(void);

/* --- construction ------------------------------------------------------ */

/* ZCZ sequence of period 24(2n+1) over the 6(2n+1)-th roots of unity.
 * Off-peak autocorrelation is zero except at shifts 6(2n+1) and 18(2n+1). */
ZCZ_API zcz_status zcz_sequence_build_zcz(int64_t n, zcz_rounding variant, zcz_sequence** out);

/* Frank sequence of period d*d over the d-th roots of unity (perfect). */
ZCZ_API zcz_status zcz_sequence_build_frank(int64_t d, zcz_sequence** out);

/* Sequence from explicit exponents; every value must lie in [0, modulus). */
ZCZ_API zcz_status zcz_sequence_create(const int64_t* exponents, size_t length,
                                       int64_t modulus, zcz_sequence** out);

ZCZ_API void zcz_sequence_free(zcz_sequence* seq);

ZCZ_API int64_t zcz_sequence_period(const zcz_sequence* seq);
ZCZ_API int64_t zcz_sequence_modulus(const zcz_sequence* seq);

/* Copies all exponents into buffer (capacity elements). */
ZCZ_API zcz_status zcz_sequence_exponents(const zcz_sequence* seq, int64_t* buffer,
                                          size_t capacity);

/* --- sequence files ----------------------------------------------------- */

/* JSON: {"modulus": N, "exponents": [...], "meta": {...}}.
 * CSV: "# key=value" comments, then "index,exponent" rows.
 * Bytes are deterministic for fixed inputs. */
ZCZ_API zcz_status zcz_sequence_save(const zcz_sequence* seq, const char* path,
                                     zcz_format format);
ZCZ_API zcz_status zcz_sequence_load(const char* path, zcz_format format, zcz_sequence** out);

/* --- correlation -------------------------------------------------------- */

/* Single-shift periodic cross-correlation sum_i a_i conj(b_{i+shift}). */
ZCZ_API zcz_status zcz_cross_correlation(const zcz_sequence* a, const zcz_sequence* b,
                                         int64_t shift, double* re, double* im);

/* Full autocorrelation profile. tolerance <= 0 selects 1e-9 * period. */
ZCZ_API zcz_status zcz_autocorrelation(const zcz_sequence* seq, zcz_method method,
                                       double tolerance, zcz_profile** out);

/* Full cross-correlation profile of a against b. */
ZCZ_API zcz_status zcz_cross_profile(const zcz_sequence* a, const zcz_sequence* b,
                                     zcz_method method, double tolerance, zcz_profile** out);

ZCZ_API void zcz_profile_free(zcz_profile* profile);

ZCZ_API int64_t zcz_profile_period(const zcz_profile* profile);
ZCZ_API double zcz_profile_tolerance(const zcz_profile* profile);
ZCZ_API zcz_status zcz_profile_value(const zcz_profile* profile, int64_t shift,
                                     double* re, double* im);
/* 1 if |value(shift)| < tolerance, else 0; -1 on bad arguments. */
ZCZ_API int zcz_profile_is_zero(const zcz_profile* profile, int64_t shift);

/* CSV with header "shift,re,im,abs,is_zero". */
ZCZ_API zcz_status zcz_profile_save_csv(const zcz_profile* profile, const char* path);

/* --- analysis ----------------------------------------------------------- */

/* (-1)^{n+1} * 12(2n+1) * sin(pi/(6(2n+1))); NaN for n < 0. */
ZCZ_API double zcz_closed_form_offpeak(int64_t n);

/* Array orthogonality check of seq at the given divisor, as a JSON document
 * (condition-1 violations, condition-2 exceptions, tolerance). tolerance <= 0
 * selects 1e-9 * (period/divisor). Free *json_out with zcz_string_free. */
ZCZ_API zcz_status zcz_aop_report(const zcz_sequence* seq, int64_t divisor, double tolerance,
                                  char** json_out);

/* Verifies the advertised ZCZ structure for every n in [n_min, n_max]:
 * non-zero shift set, equal real values, closed-form match (gated for the
 * floor variant), and both AOP conditions at divisor 2. Writes a JSON report
 * to *report_out (free with zcz_string_free) and sets *all_passed_out to
 * 1 only if every gated assertion holds for every n. */
ZCZ_API zcz_status zcz_verify_range(int64_t n_min, int64_t n_max, zcz_rounding variant,
                                    double tolerance, char** report_out, int* all_passed_out);

/* Frees strings returned through char** out-parameters. */
ZCZ_API void zcz_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* ZCZ_ZCZ_H */
