/*
 * quotdigits -- exact digit statistics of integer quotients.
 *
 * C interface to the counting library. All functions return a qd_status;
 * results come back through out-parameters. Handles (qd_prime_table,
 * qd_histogram, qd_sweep, qd_boundary_report) are opaque; free them with the
 * matching _free function. On failure qd_last_error() carries a message for
 * the calling thread.
 */
#ifndef QUOTDIGITS_H
#define QUOTDIGITS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qd_status {
    QD_OK = 0,
    QD_ERR_PARAM = 1,   /* invalid argument, or exact arithmetic out of range */
    QD_ERR_GUARD = 2,   /* a resource guard refused the computation */
    QD_ERR_IO = 3,      /* writing an output file failed */
    QD_ERR_RANGE = 4,   /* exact result does not fit the output type */
    QD_ERR_INTERNAL = 5
} qd_status;

const char* qd_status_name(qd_status status);
const char* qd_last_error(void);
const char* qd_version(void);

/* Process-wide knobs, mirrored by the CLI flags. threads = 0 means "use all
 * hardware threads"; results never depend on the thread count. */
void qd_set_threads(unsigned threads);
unsigned qd_threads(void);
void qd_set_brute_force_cap(int64_t cap);
int64_t qd_brute_force_cap(void);
void qd_set_sieve_guard(int64_t guard);
int64_t qd_sieve_guard(void);

/* ---- exact kernels ---------------------------------------------------- */

/* i-th base-b digit of n/m to the right of the radix point. */
qd_status qd_digit_of_quotient(int64_t n, int64_t m, int64_t base, int64_t pos, int32_t* digit);
/* 1 iff the base-b expansion of n/m terminates at or before position pos. */
qd_status qd_is_digit_boundary(int64_t n, int64_t m, int64_t base, int64_t pos, int32_t* flag);
/* sum_{j=0}^{count-1} floor((mul*j + add)/modulus), exact. */
qd_status qd_floor_sum(int64_t count, int64_t modulus, int64_t mul, int64_t add, int64_t* sum);

/* ---- limiting constants ------------------------------------------------ */

qd_status qd_digamma(double x, double* value);
qd_status qd_digit_constant(int64_t base, int64_t digit, int64_t pos, double* value);
qd_status qd_digit_constant_series(int64_t base, int64_t digit, int64_t pos, int64_t cutoff,
                                   double* value, double* tail_bound);
qd_status qd_coprime_constant(int64_t base, int64_t digit, int64_t pos, double* value);

/* ---- exact lattice counts ---------------------------------------------- */

qd_status qd_k_max(int64_t base, int64_t digit, int64_t pos, int64_t bound, int64_t* k);
qd_status qd_count_triangle(int64_t k, int64_t base, int64_t digit, int64_t pos, int64_t bound,
                            int64_t* count);
qd_status qd_count_pairs(int64_t base, int64_t digit, int64_t pos, int64_t bound, int64_t* count);
qd_status qd_count_pairs_bruteforce(int64_t base, int64_t digit, int64_t pos, int64_t bound,
                                    int64_t* count);
qd_status qd_count_coprime_pairs(int64_t base, int64_t digit, int64_t pos, int64_t bound,
                                 int64_t* count);
/* half_units must hold `base` entries; entry r receives 2*w(r). */
qd_status qd_count_half_weight(int64_t base, int64_t pos, int64_t bound, int64_t* half_units);
/* gcd_class = 0 counts every pair; d >= 1 restricts to gcd(n,m) = d. */
qd_status qd_count_boundary(int64_t base, int64_t digit, int64_t pos, int64_t bound,
                            int64_t gcd_class, int64_t* count);

/* ---- primes ------------------------------------------------------------ */

typedef struct qd_prime_table qd_prime_table;

qd_status qd_prime_table_new(int64_t limit, qd_prime_table** table);
void qd_prime_table_free(qd_prime_table* table);
int64_t qd_prime_table_limit(const qd_prime_table* table);
int64_t qd_prime_table_pi(const qd_prime_table* table);
qd_status qd_prime_table_theta(const qd_prime_table* table, double* theta);

/* sum of log(p)*log(q) over prime pairs with digit r in p/q. */
qd_status qd_theta_weighted_count(const qd_prime_table* table, int64_t base, int64_t digit,
                                  int64_t pos, int64_t bound, int exclude_diagonal,
                                  double* total);
qd_status qd_prime_pair_count(const qd_prime_table* table, int64_t base, int64_t digit,
                              int64_t pos, int64_t bound, int exclude_diagonal, int64_t* count);

/* principal-value logarithmic integral, x >= 2. */
qd_status qd_li(double x, double* value);
/* sup_{2<=x<=X} |pi(x) - li(x)| and the x attaining it. */
qd_status qd_error_envelope(int64_t x_limit, double* value, double* argmax);

/* ---- experiment artifacts ---------------------------------------------- */

typedef enum qd_scheme {
    QD_SCHEME_ALL_PAIRS = 0,
    QD_SCHEME_COPRIME = 1,
    QD_SCHEME_HALF_WEIGHT = 2,
    QD_SCHEME_PRIME_COUNT = 3,
    QD_SCHEME_PRIME_WEIGHTED = 4,
    QD_SCHEME_PRIME_HALF = 5
} qd_scheme;

typedef enum qd_format {
    QD_FORMAT_CSV = 0,
    QD_FORMAT_JSON = 1,
    QD_FORMAT_SVG = 2
} qd_format;

typedef struct qd_histogram qd_histogram;

qd_status qd_histogram_new(int64_t bound, int64_t base, int64_t pos, qd_scheme scheme,
                           int exclude_diagonal, qd_histogram** hist);
void qd_histogram_free(qd_histogram* hist);
int64_t qd_histogram_bins(const qd_histogram* hist);
qd_status qd_histogram_bin(const qd_histogram* hist, int64_t digit, double* count,
                           double* normalized, double* constant);
qd_status qd_histogram_emit(const qd_histogram* hist, qd_format format, const char* path);

typedef struct qd_sweep qd_sweep;

qd_status qd_sweep_new(int64_t base, int64_t digit, int64_t pos, const int64_t* grid,
                       size_t grid_len, qd_sweep** sweep);
void qd_sweep_free(qd_sweep* sweep);
size_t qd_sweep_rows(const qd_sweep* sweep);
qd_status qd_sweep_row(const qd_sweep* sweep, size_t index, int64_t* bound, int64_t* phi,
                       double* c_t2, double* residual, double* scaled_residual);
qd_status qd_sweep_emit(const qd_sweep* sweep, qd_format format, const char* path);

typedef struct qd_boundary_report qd_boundary_report;

qd_status qd_boundary_report_new(int64_t base, int64_t digit, const int64_t* grid,
                                 size_t grid_len, qd_boundary_report** report);
void qd_boundary_report_free(qd_boundary_report* report);
size_t qd_boundary_report_rows(const qd_boundary_report* report);
qd_status qd_boundary_report_row(const qd_boundary_report* report, size_t index, int64_t* bound,
                                 int64_t* count, double* ratio);
qd_status qd_boundary_report_emit(const qd_boundary_report* report, qd_format format,
                                  const char* path);

#ifdef __cplusplus
}
#endif

#endif /* QUOTDIGITS_H */
