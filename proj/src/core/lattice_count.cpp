#include "lattice_count.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <thread>

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

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// sum_{n=1}^{T} min(T, floor(n*num/den)) for a slope num/den > 0.
WideInt clipped_slope_sum(long long T, long long num, long long den) {
    // floor(n*num/den) <= T  <=>  n <= ((T+1)*den - 1) / num
    WideInt fits = ((WideInt(T) + 1) * den - 1) / num;
    long long n_on = fits > T ? T : (long long)fits;
    WideInt below = floor_sum(n_on + 1, den, num, 0); // j=0 term vanishes
    return below + WideInt(T - n_on) * T;
}

WideInt count_triangle_unchecked(long long k, const Params& p) {
    const long long T = p.bound;
    WideInt upper;
    if (k == 0 && p.digit == 0) {
        // Unbounded upper slope: every row clips at T.
        upper = WideInt(T) * T;
    } else {
        upper = clipped_slope_sum(T, p.scale, p.base * k + p.digit);
    }
    WideInt lower = clipped_slope_sum(T, p.scale, p.base * k + p.digit + 1);
    return upper - lower;
}

} // namespace

const char* to_string(WeightTag tag) {
    switch (tag) {
        case WeightTag::all_pairs: return "all-pairs";
        case WeightTag::prime_log_weights: return "prime-weighted";
        case WeightTag::prime_count: return "prime-count";
        case WeightTag::coprime: return "coprime";
        case WeightTag::half_boundary: return "half-weight";
        case WeightTag::prime_half: return "prime-half";
    }
    return "unknown";
}

SlopePair slopes(long long k, long long base, long long digit, long long pos) {
    if (k < 0) throw ParamError("triangle index must be >= 0");
    if (base < 2) throw ParamError("base must be >= 2");
    if (digit < 0 || digit >= base) throw ParamError("digit must lie in [0, base-1]");
    long long scale = pow_checked(base, pos);
    if (k > (kWideWindow - base) / base)
        throw ParamError("triangle index reaches the 62-bit window");
    return SlopePair{k, scale, base * k + digit + 1, scale, base * k + digit};
}

long long k_max(const Params& p) {
    return (p.scale * p.bound - p.digit) / p.base;
}

WideInt count_triangle(long long k, const Params& p) {
    if (k < 0) throw ParamError("triangle index must be >= 0");
    if (k > k_max(p)) return 0;
    return count_triangle_unchecked(k, p);
}

CountResult count_pairs(const Params& p, unsigned threads) {
    Stopwatch clock;
    const long long last = k_max(p);
    unsigned workers = resolve_threads(threads);
    if (workers > 1 && last >= 4096) {
        std::vector<WideInt> partial(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                WideInt acc = 0;
                for (long long k = w; k <= last; k += workers)
                    acc += count_triangle_unchecked(k, p);
                partial[w] = acc;
            });
        }
        for (auto& t : pool) t.join();
        WideInt total = std::accumulate(partial.begin(), partial.end(), WideInt(0));
        return CountResult{p, {WeightTag::all_pairs}, total, 0.0, last, clock.ns()};
    }
    WideInt total = 0;
    for (long long k = 0; k <= last; ++k) total += count_triangle_unchecked(k, p);
    return CountResult{p, {WeightTag::all_pairs}, total, 0.0, last, clock.ns()};
}

CountResult count_pairs_bruteforce(const Params& p, long long cap) {
    if (p.bound > cap)
        throw GuardError("bound " + std::to_string(p.bound) +
                         " exceeds the brute-force cap " + std::to_string(cap));
    Stopwatch clock;
    const unsigned long long scale = (unsigned long long)p.scale;
    const unsigned long long base = (unsigned long long)p.base;
    const unsigned long long digit = (unsigned long long)p.digit;
    WideInt total = 0;
    for (long long n = 1; n <= p.bound; ++n) {
        const unsigned long long scaled = scale * (unsigned long long)n;
        for (long long m = 1; m <= p.bound; ++m)
            if ((scaled / (unsigned long long)m) % base == digit) ++total;
    }
    return CountResult{p, {WeightTag::all_pairs}, total, 0.0, 0, clock.ns()};
}

CountResult count_coprime_pairs(const Params& p, unsigned threads) {
    Stopwatch clock;
    auto mu = mobius_sieve(p.bound);
    WideInt total = 0;
    long long d = 1;
    while (d <= p.bound) {
        const long long scaled_bound = p.bound / d;
        const long long d_hi = p.bound / scaled_bound;
        long long coeff = 0;
        for (long long t = d; t <= d_hi; ++t) coeff += mu[t];
        if (coeff != 0) {
            Params q = p;
            q.bound = scaled_bound;
            total += WideInt(coeff) * count_pairs(q, threads).value;
        }
        d = d_hi + 1;
    }
    return CountResult{p, {WeightTag::coprime}, total, 0.0, k_max(p), clock.ns()};
}

std::vector<signed char> mobius_sieve(long long n, long long cap) {
    if (n < 1) throw ParamError("mobius_sieve: n must be >= 1");
    if (n > cap)
        throw GuardError("mobius_sieve: n " + std::to_string(n) +
                         " exceeds the memory guard " + std::to_string(cap));
    std::vector<signed char> mu(size_t(n) + 1, 0);
    std::vector<long long> primes;
    std::vector<bool> composite(size_t(n) + 1, false);
    mu[1] = 1;
    for (long long v = 2; v <= n; ++v) {
        if (!composite[v]) {
            primes.push_back(v);
            mu[v] = -1;
        }
        for (long long q : primes) {
            if (q > n / v) break;
            composite[q * v] = true;
            if (v % q == 0) {
                mu[q * v] = 0;
                break;
            }
            mu[q * v] = -mu[v];
        }
    }
    return mu;
}

std::vector<WideInt> count_pairs_half_weight(long long base, long long pos, long long bound,
                                             long long cap) {
    Params p = Params::make(base, 0, pos, bound);
    if (bound > cap)
        throw GuardError("bound " + std::to_string(bound) +
                         " exceeds the brute-force cap " + std::to_string(cap));
    std::vector<WideInt> half_units(size_t(base), 0);
    const unsigned long long scale = (unsigned long long)p.scale;
    for (long long n = 1; n <= bound; ++n) {
        const unsigned long long scaled = scale * (unsigned long long)n;
        for (long long m = 1; m <= bound; ++m) {
            const unsigned long long q = scaled / (unsigned long long)m;
            const long long digit = (long long)(q % (unsigned long long)base);
            if (q * (unsigned long long)m == scaled) {
                // Terminating expansion: split between r and (r-1) mod b.
                half_units[size_t(digit)] += 1;
                half_units[size_t((digit + base - 1) % base)] += 1;
            } else {
                half_units[size_t(digit)] += 2;
            }
        }
    }
    return half_units;
}

WideInt count_boundary(long long base, long long digit, long long pos, long long bound,
                       std::optional<long long> gcd_class) {
    if (base < 2) throw ParamError("base must be >= 2");
    if (pos != 1) throw ParamError("boundary counts support position 1 only");
    if (digit < 1 || digit >= base)
        throw ParamError("boundary digit must lie in [1, base-1]");
    if (bound < 1) throw ParamError("bound must be >= 1");
    const long long g = std::gcd(base, digit);
    const long long den = base / g;   // reduced denominator: the only admissible m per class
    const long long res = digit / g;  // required residue of n mod den
    auto coprime_class = [&](long long scaled_bound) -> WideInt {
        if (den > scaled_bound) return 0;
        return (scaled_bound - res) / den + 1;
    };
    if (gcd_class) {
        if (*gcd_class < 1) throw ParamError("gcd class must be >= 1");
        return coprime_class(bound / *gcd_class);
    }
    WideInt total = 0;
    for (long long c = 1; c <= bound / den; ++c) total += coprime_class(bound / c);
    return total;
}

} // namespace qd
