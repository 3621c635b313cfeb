#pragma once

#include <optional>
#include <vector>

#include "exact_arith.hpp"

namespace qd {

/// Exact rational slopes of triangle k: x = b^i/(bk+r+1), y = b^i/(bk+r),
/// kept unreduced. y_den == 0 flags the k=0, r=0 triangle whose upper slope
/// is unbounded (quotients in [0, 1/b^i)).
struct SlopePair {
    long long k = 0;
    long long x_num = 0;
    long long x_den = 0;
    long long y_num = 0;
    long long y_den = 0;
};

enum class WeightTag {
    all_pairs,
    prime_log_weights,
    prime_count,
    coprime,
    half_boundary,
    prime_half,
};

const char* to_string(WeightTag tag);

struct WeightScheme {
    WeightTag tag = WeightTag::all_pairs;
    bool exclude_diagonal = false; // meaningful for the prime variants only
};

/// An exact count plus run metadata. `value` carries the integer result
/// (half-units for half_boundary); the prime log-weight variant reports its
/// real-valued sum in `weighted` instead.
struct CountResult {
    Params params;
    WeightScheme variant;
    WideInt value = 0;
    double weighted = 0.0;
    long long k_max_used = 0;
    long long elapsed_ns = 0;
};

inline constexpr long long kDefaultBruteCap = 5000;
inline constexpr long long kDefaultSieveGuard = 100'000'000;

SlopePair slopes(long long k, long long base, long long digit, long long pos);

/// Largest k for which triangle k can contain a pair: floor((b^i*T - r)/b).
long long k_max(const Params& params);

/// |A_k(T)|, the pairs (n,m) in [1,T]^2 with m in (n*x_k, n*y_k], via two
/// clipped floor sums. Indices beyond k_max yield 0.
WideInt count_triangle(long long k, const Params& params);

/// Phi(T;b,r;i): exact count of pairs whose quotient has digit r, summed
/// over all triangles. Exact-integer reduction, so the result is identical
/// for any thread count (0 = all hardware threads).
CountResult count_pairs(const Params& params, unsigned threads = 1);

/// O(T^2) enumeration applying the digit formula to every pair; the oracle
/// for count_pairs. Refuses bounds above `cap`.
CountResult count_pairs_bruteforce(const Params& params, long long cap = kDefaultBruteCap);

/// Pairs with gcd(n,m) = 1 and digit r, by Mobius inversion over scaled
/// bounds: sum_d mu(d) * count_pairs(floor(T/d)).
CountResult count_coprime_pairs(const Params& params, unsigned threads = 1);

/// mu(0..N); mu[0] is 0. Linear sieve, guarded against absurd allocations.
std::vector<signed char> mobius_sieve(long long n, long long cap = kDefaultSieveGuard);

/// Per-digit weights in half-units (value*2): a pair normally contributes 2
/// to its digit, but when b^i*n/m is an integer the quotient has a second
/// representation and digits r and (r-1) mod b get 1 each.
/// Enumeration-based; refuses bounds above `cap`.
std::vector<WideInt> count_pairs_half_weight(long long base, long long pos, long long bound,
                                             long long cap = kDefaultBruteCap);

/// Pairs (n,m) in [1,T]^2 with b*{n/m} = r exactly (lattice points on the
/// triangle boundaries). Position 1 only; r >= 1. With gcd_class = d, only
/// pairs with gcd(n,m) = d are counted.
WideInt count_boundary(long long base, long long digit, long long pos, long long bound,
                       std::optional<long long> gcd_class = {});

} // namespace qd
