#include "quotdigits.h"

#include <atomic>
#include <limits>
#include <string>

#include "core/constants.hpp"
#include "core/experiments.hpp"

namespace {

thread_local std::string g_last_error;

std::atomic<unsigned> g_threads{0}; // 0 = auto
std::atomic<int64_t> g_brute_cap{qd::kDefaultBruteCap};
std::atomic<int64_t> g_sieve_guard{qd::kDefaultSieveGuard};

void set_error(const char* what) { g_last_error = what; }

struct RangeFailure {};

int64_t narrow(qd::WideInt v) {
    if (v > qd::WideInt(std::numeric_limits<int64_t>::max()) ||
        v < qd::WideInt(std::numeric_limits<int64_t>::min()))
        throw RangeFailure{};
    return (int64_t)v;
}

template <typename Fn>
qd_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return QD_OK;
    } catch (const qd::ParamError& e) {
        set_error(e.what());
        return QD_ERR_PARAM;
    } catch (const qd::GuardError& e) {
        set_error(e.what());
        return QD_ERR_GUARD;
    } catch (const qd::IoError& e) {
        set_error(e.what());
        return QD_ERR_IO;
    } catch (const RangeFailure&) {
        set_error("exact result does not fit int64");
        return QD_ERR_RANGE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return QD_ERR_INTERNAL;
    } catch (...) {
        set_error("unknown failure");
        return QD_ERR_INTERNAL;
    }
}

qd_status require(bool ok, const char* message) {
    if (ok) return QD_OK;
    set_error(message);
    return QD_ERR_PARAM;
}

qd::RunLimits run_limits() {
    return qd::RunLimits{g_brute_cap.load(), g_sieve_guard.load(), g_threads.load()};
}

qd::WeightScheme to_scheme(qd_scheme scheme, int exclude_diagonal, bool& ok) {
    ok = true;
    qd::WeightScheme s;
    s.exclude_diagonal = exclude_diagonal != 0;
    switch (scheme) {
        case QD_SCHEME_ALL_PAIRS: s.tag = qd::WeightTag::all_pairs; break;
        case QD_SCHEME_COPRIME: s.tag = qd::WeightTag::coprime; break;
        case QD_SCHEME_HALF_WEIGHT: s.tag = qd::WeightTag::half_boundary; break;
        case QD_SCHEME_PRIME_COUNT: s.tag = qd::WeightTag::prime_count; break;
        case QD_SCHEME_PRIME_WEIGHTED: s.tag = qd::WeightTag::prime_log_weights; break;
        case QD_SCHEME_PRIME_HALF: s.tag = qd::WeightTag::prime_half; break;
        default: ok = false;
    }
    return s;
}

bool to_format(qd_format format, qd::EmitFormat& out) {
    switch (format) {
        case QD_FORMAT_CSV: out = qd::EmitFormat::csv; return true;
        case QD_FORMAT_JSON: out = qd::EmitFormat::json; return true;
        case QD_FORMAT_SVG: out = qd::EmitFormat::svg; return true;
    }
    return false;
}

} // namespace

extern "C" {

struct qd_prime_table {
    qd::PrimeTable table;
};

struct qd_histogram {
    qd::Histogram hist;
};

struct qd_sweep {
    qd::SweepReport report;
};

struct qd_boundary_report {
    qd::BoundaryReport report;
};

const char* qd_status_name(qd_status status) {
    switch (status) {
        case QD_OK: return "ok";
        case QD_ERR_PARAM: return "invalid-parameter";
        case QD_ERR_GUARD: return "guard-refused";
        case QD_ERR_IO: return "io-error";
        case QD_ERR_RANGE: return "result-out-of-range";
        case QD_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* qd_last_error(void) { return g_last_error.c_str(); }

const char* qd_version(void) { return "0.1.0"; }

void qd_set_threads(unsigned threads) { g_threads.store(threads); }
unsigned qd_threads(void) { return g_threads.load(); }
void qd_set_brute_force_cap(int64_t cap) { g_brute_cap.store(cap); }
int64_t qd_brute_force_cap(void) { return g_brute_cap.load(); }
void qd_set_sieve_guard(int64_t guard) { g_sieve_guard.store(guard); }
int64_t qd_sieve_guard(void) { return g_sieve_guard.load(); }

qd_status qd_digit_of_quotient(int64_t n, int64_t m, int64_t base, int64_t pos, int32_t* digit) {
    if (qd_status s = require(digit != nullptr, "digit output is null")) return s;
    return wrap([&] { *digit = (int32_t)qd::digit_of_quotient(n, m, base, pos); });
}

qd_status qd_is_digit_boundary(int64_t n, int64_t m, int64_t base, int64_t pos, int32_t* flag) {
    if (qd_status s = require(flag != nullptr, "flag output is null")) return s;
    return wrap([&] { *flag = qd::is_digit_boundary(n, m, base, pos) ? 1 : 0; });
}

qd_status qd_floor_sum(int64_t count, int64_t modulus, int64_t mul, int64_t add, int64_t* sum) {
    if (qd_status s = require(sum != nullptr, "sum output is null")) return s;
    return wrap([&] { *sum = narrow(qd::floor_sum(count, modulus, mul, add)); });
}

qd_status qd_digamma(double x, double* value) {
    if (qd_status s = require(value != nullptr, "value output is null")) return s;
    return wrap([&] { *value = qd::digamma(x); });
}

qd_status qd_digit_constant(int64_t base, int64_t digit, int64_t pos, double* value) {
    if (qd_status s = require(value != nullptr, "value output is null")) return s;
    return wrap([&] { *value = qd::digit_constant(base, digit, pos).value; });
}

qd_status qd_digit_constant_series(int64_t base, int64_t digit, int64_t pos, int64_t cutoff,
                                   double* value, double* tail_bound) {
    if (qd_status s = require(value != nullptr && tail_bound != nullptr, "output is null"))
        return s;
    return wrap([&] {
        auto c = qd::digit_constant_series(base, digit, pos, cutoff);
        *value = c.value;
        *tail_bound = c.tail_bound;
    });
}

qd_status qd_coprime_constant(int64_t base, int64_t digit, int64_t pos, double* value) {
    if (qd_status s = require(value != nullptr, "value output is null")) return s;
    return wrap([&] { *value = qd::coprime_constant(base, digit, pos); });
}

qd_status qd_k_max(int64_t base, int64_t digit, int64_t pos, int64_t bound, int64_t* k) {
    if (qd_status s = require(k != nullptr, "k output is null")) return s;
    return wrap([&] { *k = qd::k_max(qd::Params::make(base, digit, pos, bound)); });
}

qd_status qd_count_triangle(int64_t k, int64_t base, int64_t digit, int64_t pos, int64_t bound,
                            int64_t* count) {
    if (qd_status s = require(count != nullptr, "count output is null")) return s;
    return wrap([&] {
        *count = narrow(qd::count_triangle(k, qd::Params::make(base, digit, pos, bound)));
    });
}

qd_status qd_count_pairs(int64_t base, int64_t digit, int64_t pos, int64_t bound, int64_t* count) {
    if (qd_status s = require(count != nullptr, "count output is null")) return s;
    return wrap([&] {
        auto params = qd::Params::make(base, digit, pos, bound);
        *count = narrow(qd::count_pairs(params, g_threads.load()).value);
    });
}

qd_status qd_count_pairs_bruteforce(int64_t base, int64_t digit, int64_t pos, int64_t bound,
                                    int64_t* count) {
    if (qd_status s = require(count != nullptr, "count output is null")) return s;
    return wrap([&] {
        auto params = qd::Params::make(base, digit, pos, bound);
        *count = narrow(qd::count_pairs_bruteforce(params, g_brute_cap.load()).value);
    });
}

qd_status qd_count_coprime_pairs(int64_t base, int64_t digit, int64_t pos, int64_t bound,
                                 int64_t* count) {
    if (qd_status s = require(count != nullptr, "count output is null")) return s;
    return wrap([&] {
        auto params = qd::Params::make(base, digit, pos, bound);
        *count = narrow(qd::count_coprime_pairs(params, g_threads.load()).value);
    });
}

qd_status qd_count_half_weight(int64_t base, int64_t pos, int64_t bound, int64_t* half_units) {
    if (qd_status s = require(half_units != nullptr, "half_units output is null")) return s;
    return wrap([&] {
        auto units = qd::count_pairs_half_weight(base, pos, bound, g_brute_cap.load());
        for (size_t r = 0; r < units.size(); ++r) half_units[r] = narrow(units[r]);
    });
}

qd_status qd_count_boundary(int64_t base, int64_t digit, int64_t pos, int64_t bound,
                            int64_t gcd_class, int64_t* count) {
    if (qd_status s = require(count != nullptr, "count output is null")) return s;
    return wrap([&] {
        std::optional<long long> klass;
        if (gcd_class != 0) klass = gcd_class;
        *count = narrow(qd::count_boundary(base, digit, pos, bound, klass));
    });
}

qd_status qd_prime_table_new(int64_t limit, qd_prime_table** table) {
    if (qd_status s = require(table != nullptr, "table output is null")) return s;
    return wrap([&] {
        *table = new qd_prime_table{qd::PrimeTable::build(limit, g_sieve_guard.load())};
    });
}

void qd_prime_table_free(qd_prime_table* table) { delete table; }

int64_t qd_prime_table_limit(const qd_prime_table* table) {
    return table ? table->table.limit() : 0;
}

int64_t qd_prime_table_pi(const qd_prime_table* table) { return table ? table->table.pi() : 0; }

qd_status qd_prime_table_theta(const qd_prime_table* table, double* theta) {
    if (qd_status s = require(table != nullptr && theta != nullptr, "argument is null")) return s;
    return wrap([&] { *theta = table->table.theta(); });
}

qd_status qd_theta_weighted_count(const qd_prime_table* table, int64_t base, int64_t digit,
                                  int64_t pos, int64_t bound, int exclude_diagonal,
                                  double* total) {
    if (qd_status s = require(table != nullptr && total != nullptr, "argument is null")) return s;
    return wrap([&] {
        auto params = qd::Params::make(base, digit, pos, bound);
        *total = qd::theta_weighted_count(table->table, params, exclude_diagonal != 0).weighted;
    });
}

qd_status qd_prime_pair_count(const qd_prime_table* table, int64_t base, int64_t digit,
                              int64_t pos, int64_t bound, int exclude_diagonal, int64_t* count) {
    if (qd_status s = require(table != nullptr && count != nullptr, "argument is null")) return s;
    return wrap([&] {
        auto params = qd::Params::make(base, digit, pos, bound);
        *count = narrow(qd::prime_pair_count(table->table, params, exclude_diagonal != 0).value);
    });
}

qd_status qd_li(double x, double* value) {
    if (qd_status s = require(value != nullptr, "value output is null")) return s;
    return wrap([&] { *value = qd::li(x); });
}

qd_status qd_error_envelope(int64_t x_limit, double* value, double* argmax) {
    if (qd_status s = require(value != nullptr, "value output is null")) return s;
    return wrap([&] {
        auto env = qd::empirical_error_envelope(x_limit, g_sieve_guard.load());
        *value = env.value;
        if (argmax) *argmax = env.argmax_x;
    });
}

qd_status qd_histogram_new(int64_t bound, int64_t base, int64_t pos, qd_scheme scheme,
                           int exclude_diagonal, qd_histogram** hist) {
    if (qd_status s = require(hist != nullptr, "histogram output is null")) return s;
    bool ok = false;
    qd::WeightScheme ws = to_scheme(scheme, exclude_diagonal, ok);
    if (qd_status s = require(ok, "unknown scheme")) return s;
    return wrap([&] {
        *hist = new qd_histogram{qd::make_histogram(bound, base, pos, ws, run_limits())};
    });
}

void qd_histogram_free(qd_histogram* hist) { delete hist; }

int64_t qd_histogram_bins(const qd_histogram* hist) {
    return hist ? (int64_t)hist->hist.bins.size() : 0;
}

qd_status qd_histogram_bin(const qd_histogram* hist, int64_t digit, double* count,
                           double* normalized, double* constant) {
    if (qd_status s = require(hist != nullptr, "histogram is null")) return s;
    if (qd_status s = require(digit >= 0 && digit < (int64_t)hist->hist.bins.size(),
                              "digit out of range"))
        return s;
    if (count) *count = hist->hist.bins[(size_t)digit];
    if (normalized) *normalized = hist->hist.normalized[(size_t)digit];
    if (constant) *constant = hist->hist.overlay[(size_t)digit];
    return QD_OK;
}

qd_status qd_histogram_emit(const qd_histogram* hist, qd_format format, const char* path) {
    if (qd_status s = require(hist != nullptr && path != nullptr, "argument is null")) return s;
    qd::EmitFormat f;
    if (qd_status s = require(to_format(format, f), "unknown format")) return s;
    return wrap([&] { qd::emit(hist->hist, f, std::filesystem::path(path)); });
}

qd_status qd_sweep_new(int64_t base, int64_t digit, int64_t pos, const int64_t* grid,
                       size_t grid_len, qd_sweep** sweep) {
    if (qd_status s = require(sweep != nullptr && (grid != nullptr || grid_len == 0),
                              "argument is null"))
        return s;
    return wrap([&] {
        std::vector<long long> bounds(grid, grid + grid_len);
        *sweep = new qd_sweep{qd::error_sweep(base, digit, pos,
                                              std::span<const long long>(bounds),
                                              g_threads.load())};
    });
}

void qd_sweep_free(qd_sweep* sweep) { delete sweep; }

size_t qd_sweep_rows(const qd_sweep* sweep) { return sweep ? sweep->report.rows.size() : 0; }

qd_status qd_sweep_row(const qd_sweep* sweep, size_t index, int64_t* bound, int64_t* phi,
                       double* c_t2, double* residual, double* scaled_residual) {
    if (qd_status s = require(sweep != nullptr, "sweep is null")) return s;
    if (qd_status s = require(index < sweep->report.rows.size(), "row index out of range"))
        return s;
    const auto& row = sweep->report.rows[index];
    return wrap([&] {
        if (bound) *bound = row.bound;
        if (phi) *phi = narrow(row.phi);
        if (c_t2) *c_t2 = row.c_t2;
        if (residual) *residual = row.residual;
        if (scaled_residual) *scaled_residual = row.scaled_residual;
    });
}

qd_status qd_sweep_emit(const qd_sweep* sweep, qd_format format, const char* path) {
    if (qd_status s = require(sweep != nullptr && path != nullptr, "argument is null")) return s;
    qd::EmitFormat f;
    if (qd_status s = require(to_format(format, f), "unknown format")) return s;
    return wrap([&] { qd::emit(sweep->report, f, std::filesystem::path(path)); });
}

qd_status qd_boundary_report_new(int64_t base, int64_t digit, const int64_t* grid,
                                 size_t grid_len, qd_boundary_report** report) {
    if (qd_status s = require(report != nullptr && (grid != nullptr || grid_len == 0),
                              "argument is null"))
        return s;
    return wrap([&] {
        std::vector<long long> bounds(grid, grid + grid_len);
        *report = new qd_boundary_report{
            qd::boundary_growth_report(base, digit, std::span<const long long>(bounds))};
    });
}

void qd_boundary_report_free(qd_boundary_report* report) { delete report; }

size_t qd_boundary_report_rows(const qd_boundary_report* report) {
    return report ? report->report.rows.size() : 0;
}

qd_status qd_boundary_report_row(const qd_boundary_report* report, size_t index, int64_t* bound,
                                 int64_t* count, double* ratio) {
    if (qd_status s = require(report != nullptr, "report is null")) return s;
    if (qd_status s = require(index < report->report.rows.size(), "row index out of range"))
        return s;
    const auto& row = report->report.rows[index];
    return wrap([&] {
        if (bound) *bound = row.bound;
        if (count) *count = narrow(row.count);
        if (ratio) *ratio = row.ratio;
    });
}

qd_status qd_boundary_report_emit(const qd_boundary_report* report, qd_format format,
                                  const char* path) {
    if (qd_status s = require(report != nullptr && path != nullptr, "argument is null")) return s;
    qd::EmitFormat f;
    if (qd_status s = require(to_format(format, f), "unknown format")) return s;
    return wrap([&] { qd::emit(report->report, f, std::filesystem::path(path)); });
}

} // extern "C"
