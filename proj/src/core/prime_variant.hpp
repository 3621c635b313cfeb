#pragma once

#include <vector>

#include "lattice_count.hpp"

namespace qd {

/// Primes up to a limit with their natural-log weights and cumulative
/// Chebyshev theta prefix sums. Built once, read-only afterwards.
class PrimeTable {
public:
    static PrimeTable build(long long limit, long long guard = kDefaultSieveGuard);

    long long limit() const { return limit_; }
    const std::vector<long long>& primes() const { return primes_; }
    const std::vector<double>& log_primes() const { return log_primes_; }
    long long pi() const { return (long long)primes_.size(); }
    double theta() const { return theta_prefix_.back(); }

    /// pi(x): primes <= x.
    long long count_leq(long long x) const;
    /// theta(x): sum of log p over primes <= x.
    double theta_leq(long long x) const;
    /// sum of (log p)^2 over primes <= x (diagonal removal).
    double log_square_sum_leq(long long x) const;

private:
    long long limit_ = 0;
    std::vector<long long> primes_;
    std::vector<double> log_primes_;
    std::vector<double> theta_prefix_;      // theta_prefix_[j] = sum of first j logs
    std::vector<double> log_sq_prefix_;
};

/// Theta-weighted digit count: sum of log(p)*log(q) over prime pairs (p,q)
/// in [1,T]^2 with digit r in the quotient p/q. Deterministic summation
/// order (compensated), independent of thread settings.
CountResult theta_weighted_count(const PrimeTable& table, const Params& params,
                                 bool exclude_diagonal);

/// Unweighted count of prime pairs with digit r.
CountResult prime_pair_count(const PrimeTable& table, const Params& params,
                             bool exclude_diagonal);

/// Convenience overloads that build the sieve internally.
CountResult theta_weighted_count(const Params& params, bool exclude_diagonal,
                                 long long guard = kDefaultSieveGuard);
CountResult prime_pair_count(const Params& params, bool exclude_diagonal,
                             long long guard = kDefaultSieveGuard);

/// Per-digit half-units over prime pairs, with the same boundary split as
/// count_pairs_half_weight. Enumeration over the prime table.
std::vector<WideInt> prime_half_weight(const PrimeTable& table, long long base, long long pos,
                                       long long bound, bool exclude_diagonal);

/// Principal-value logarithmic integral, x >= 2.
double li(double x);

/// sup_{2 <= x <= X} |pi(x) - li(x)| and where it is attained.
struct ErrorEnvelope {
    double x_max = 0.0;
    double value = 0.0;
    double argmax_x = 0.0;
};

ErrorEnvelope empirical_error_envelope(long long x_limit, long long guard = kDefaultSieveGuard);

} // namespace qd
