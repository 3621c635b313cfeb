#pragma once

#include "exact_arith.hpp"

namespace qd {

// Euler-Mascheroni constant, 20 significant digits.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0, accurate to 1e-12 relative.
/// Upward recurrence to x >= 10, then the asymptotic expansion through B14.
double digamma(double x);

/// psi(x + step) - psi(x) for x > 0, 0 < step <= 1, computed without the
/// cancellation a direct difference of two digamma values would suffer.
double digamma_diff(double x, double step);

enum class ConstantMethod { closed_form, truncated_series };

/// Limiting density of digit r at position i in base b.
struct DigitConstant {
    long long base = 0;
    long long digit = 0;
    long long pos = 0;
    double value = 0.0;
    ConstantMethod method = ConstantMethod::closed_form;
    double tail_bound = 0.0; // 0 for the closed form
};

/// Closed form: 1/(2b) + (b^(i-1)/2) * (psi((b^i+r+1)/b) - psi((b^i+r)/b)).
DigitConstant digit_constant(long long base, long long digit, long long pos);

/// Truncated series 1/(2b) + (b^(i-1)/2) * sum_{k=b^(i-1)}^{K} b/((bk+r)(bk+r+1))
/// with certified tail bound (b^(i-1)/2)/K. Requires K >= b^(i-1).
DigitConstant digit_constant_series(long long base, long long digit, long long pos, long long cutoff);

/// digit_constant / zeta(2): the density among coprime (visible) pairs.
double coprime_constant(long long base, long long digit, long long pos);

/// Closed-form density evaluated at a real digit value; used to draw the
/// continuous overlay curve on histograms.
double digit_density_real(long long base, double digit, long long pos);

} // namespace qd
