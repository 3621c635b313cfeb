#include "prime_variant.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "constants.hpp"

namespace qd {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ns() const {
        return std::chrono::duration_cast<std::chrono::nanoseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double term) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

void check_table_bound(const PrimeTable& table, const Params& p) {
    if (p.bound > table.limit())
        throw ParamError("bound exceeds the prime table limit");
}

} // namespace

PrimeTable PrimeTable::build(long long limit, long long guard) {
    if (limit < 2) throw ParamError("prime table limit must be >= 2");
    if (limit > guard)
        throw GuardError("prime table limit " + std::to_string(limit) +
                         " exceeds the sieve guard " + std::to_string(guard));
    PrimeTable t;
    t.limit_ = limit;
    std::vector<bool> composite(size_t(limit) + 1, false);
    for (long long v = 2; v * v <= limit; ++v)
        if (!composite[v])
            for (long long w = v * v; w <= limit; w += v) composite[w] = true;
    for (long long v = 2; v <= limit; ++v)
        if (!composite[v]) t.primes_.push_back(v);

    t.log_primes_.reserve(t.primes_.size());
    t.theta_prefix_.reserve(t.primes_.size() + 1);
    t.log_sq_prefix_.reserve(t.primes_.size() + 1);
    t.theta_prefix_.push_back(0.0);
    t.log_sq_prefix_.push_back(0.0);
    for (long long p : t.primes_) {
        double lg = std::log(double(p));
        t.log_primes_.push_back(lg);
        t.theta_prefix_.push_back(t.theta_prefix_.back() + lg);
        t.log_sq_prefix_.push_back(t.log_sq_prefix_.back() + lg * lg);
    }
    return t;
}

long long PrimeTable::count_leq(long long x) const {
    if (x < 2) return 0;
    return std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin();
}

double PrimeTable::theta_leq(long long x) const {
    return theta_prefix_[size_t(count_leq(x))];
}

double PrimeTable::log_square_sum_leq(long long x) const {
    return log_sq_prefix_[size_t(count_leq(x))];
}

// For a fixed prime denominator q, the numerators n with digit r in n/q form
// one integer interval per triangle index k:
//   [ ceil(q*(kb+r)/b^i), ceil(q*(kb+r+1)/b^i) - 1 ]  clipped to [1, T],
// and k runs while the interval start stays <= T. Both counting variants
// walk these strips and read prefix sums off the prime table.

CountResult theta_weighted_count(const PrimeTable& table, const Params& p,
                                 bool exclude_diagonal) {
    check_table_bound(table, p);
    Stopwatch clock;
    const long long T = p.bound;
    const long long B = p.scale;
    const size_t q_count = size_t(table.count_leq(T));
    Kahan total;
    for (size_t qi = 0; qi < q_count; ++qi) {
        const long long q = table.primes()[qi];
        const long long k_hi = (B * T - p.digit * q) / (p.base * q);
        double strip = 0.0;
        for (long long k = 0; k <= k_hi; ++k) {
            const long long lo_num = q * (k * p.base + p.digit);
            const long long p_lo = (lo_num + B - 1) / B;
            long long p_hi = (lo_num + q - 1) / B;
            if (p_hi > T) p_hi = T;
            if (p_hi < p_lo) continue;
            strip += table.theta_leq(p_hi) - table.theta_leq(p_lo - 1);
        }
        total.add(strip * table.log_primes()[qi]);
    }
    if (exclude_diagonal && p.digit == 0) {
        // Every diagonal pair (p,p) has quotient 1 and digit 0.
        total.add(-table.log_square_sum_leq(T));
    }
    CountResult r;
    r.params = p;
    r.variant = {WeightTag::prime_log_weights, exclude_diagonal};
    r.weighted = total.sum;
    r.k_max_used = k_max(p);
    r.elapsed_ns = clock.ns();
    return r;
}

CountResult prime_pair_count(const PrimeTable& table, const Params& p,
                             bool exclude_diagonal) {
    check_table_bound(table, p);
    Stopwatch clock;
    const long long T = p.bound;
    const long long B = p.scale;
    const size_t q_count = size_t(table.count_leq(T));
    WideInt total = 0;
    for (size_t qi = 0; qi < q_count; ++qi) {
        const long long q = table.primes()[qi];
        const long long k_hi = (B * T - p.digit * q) / (p.base * q);
        for (long long k = 0; k <= k_hi; ++k) {
            const long long lo_num = q * (k * p.base + p.digit);
            const long long p_lo = (lo_num + B - 1) / B;
            long long p_hi = (lo_num + q - 1) / B;
            if (p_hi > T) p_hi = T;
            if (p_hi < p_lo) continue;
            total += table.count_leq(p_hi) - table.count_leq(p_lo - 1);
        }
    }
    if (exclude_diagonal && p.digit == 0) total -= table.count_leq(T);
    CountResult r;
    r.params = p;
    r.variant = {WeightTag::prime_count, exclude_diagonal};
    r.value = total;
    r.k_max_used = k_max(p);
    r.elapsed_ns = clock.ns();
    return r;
}

CountResult theta_weighted_count(const Params& p, bool exclude_diagonal, long long guard) {
    return theta_weighted_count(PrimeTable::build(std::max(p.bound, 2LL), guard), p,
                                exclude_diagonal);
}

CountResult prime_pair_count(const Params& p, bool exclude_diagonal, long long guard) {
    return prime_pair_count(PrimeTable::build(std::max(p.bound, 2LL), guard), p,
                            exclude_diagonal);
}

std::vector<WideInt> prime_half_weight(const PrimeTable& table, long long base, long long pos,
                                       long long bound, bool exclude_diagonal) {
    Params p = Params::make(base, 0, pos, bound);
    if (bound > table.limit()) throw ParamError("bound exceeds the prime table limit");
    std::vector<WideInt> half_units(size_t(base), 0);
    const size_t q_count = size_t(table.count_leq(bound));
    const unsigned long long scale = (unsigned long long)p.scale;
    for (size_t ni = 0; ni < q_count; ++ni) {
        const unsigned long long scaled = scale * (unsigned long long)table.primes()[ni];
        for (size_t mi = 0; mi < q_count; ++mi) {
            if (exclude_diagonal && ni == mi) continue;
            const unsigned long long m = (unsigned long long)table.primes()[mi];
            const unsigned long long q = scaled / m;
            const long long digit = (long long)(q % (unsigned long long)base);
            if (q * m == scaled) {
                half_units[size_t(digit)] += 1;
                half_units[size_t((digit + base - 1) % base)] += 1;
            } else {
                half_units[size_t(digit)] += 2;
            }
        }
    }
    return half_units;
}

double li(double x) {
    if (!(x >= 2.0)) throw ParamError("li: argument must be >= 2");
    // li(x) = gamma + ln(ln x) + sum_{n>=1} (ln x)^n / (n * n!)
    const double lx = std::log(x);
    double sum = 0.0, term = 1.0;
    for (int n = 1; n < 400; ++n) {
        term *= lx / n;
        double delta = term / n;
        sum += delta;
        if (delta < sum * 1e-18) break;
    }
    return kEulerGamma + std::log(lx) + sum;
}

ErrorEnvelope empirical_error_envelope(long long x_limit, long long guard) {
    if (x_limit < 2) throw ParamError("envelope limit must be >= 2");
    PrimeTable table = PrimeTable::build(x_limit, guard);
    ErrorEnvelope env;
    env.x_max = double(x_limit);
    // pi is a step function and li is increasing, so the supremum is attained
    // at a prime (from either side of the jump) or at the right endpoint.
    long long seen = 0;
    for (long long q : table.primes()) {
        const double li_q = li(double(q));
        // The left limit at q = 2 sits outside the domain [2, X].
        const double below = q == 2 ? 0.0 : std::fabs(double(seen) - li_q);
        ++seen;
        const double at = std::fabs(double(seen) - li_q);
        const double best = std::max(below, at);
        if (best > env.value) {
            env.value = best;
            env.argmax_x = double(q);
        }
    }
    const double at_end = std::fabs(double(seen) - li(double(x_limit)));
    if (at_end > env.value) {
        env.value = at_end;
        env.argmax_x = double(x_limit);
    }
    return env;
}

} // namespace qd
