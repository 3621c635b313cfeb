#include "constants.hpp"

#include <cmath>
#include <numbers>

namespace qd {

namespace {

// B_{2n}/(2n) for the asymptotic tail, n = 1..7.
constexpr double kAsympCoeff[] = {
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
};

constexpr double kShiftThreshold = 10.0;

// psi(x) for x >= kShiftThreshold.
double digamma_asymptotic(double x) {
    double inv2 = 1.0 / (x * x);
    double tail = 0.0, power = inv2;
    for (double c : kAsympCoeff) {
        tail += c * power;
        power *= inv2;
    }
    return std::log(x) - 0.5 / x - tail;
}

void check_triple(long long base, long long digit, long long pos) {
    if (base < 2) throw ParamError("base must be >= 2");
    if (digit < 0 || digit >= base) throw ParamError("digit must lie in [0, base-1]");
    if (pos < 1) throw ParamError("position must be >= 1");
}

} // namespace

double digamma(double x) {
    if (!(x > 0.0)) throw ParamError("digamma: argument must be positive");
    double shift = 0.0;
    double comp = 0.0; // Kahan carry for the recurrence sum
    while (x < kShiftThreshold) {
        double term = 1.0 / x - comp;
        double next = shift + term;
        comp = (next - shift) - term;
        shift = next;
        x += 1.0;
    }
    return digamma_asymptotic(x) - shift;
}

double digamma_diff(double x, double step) {
    if (!(x > 0.0)) throw ParamError("digamma_diff: argument must be positive");
    if (!(step > 0.0 && step <= 1.0)) throw ParamError("digamma_diff: step must lie in (0, 1]");
    // Shift both arguments together; each recurrence term is
    // 1/x - 1/(x+step) = step/(x(x+step)), positive, no cancellation.
    double shift = 0.0;
    while (x < kShiftThreshold) {
        shift += step / (x * (x + step));
        x += 1.0;
    }
    // Leading terms of the asymptotic difference, again in subtraction-free
    // form; the Bernoulli corrections are tiny here (x >= 10) and safe to
    // subtract directly.
    double diff = std::log1p(step / x) + 0.5 * step / (x * (x + step));
    double inv2a = 1.0 / ((x + step) * (x + step));
    double inv2b = 1.0 / (x * x);
    double pa = inv2a, pb = inv2b;
    for (double c : kAsympCoeff) {
        diff -= c * (pa - pb);
        pa *= inv2a;
        pb *= inv2b;
    }
    return diff + shift;
}

DigitConstant digit_constant(long long base, long long digit, long long pos) {
    check_triple(base, digit, pos);
    long long scale = pow_checked(base, pos);
    double half_lead = 0.5 * double(scale / base); // b^(i-1)/2
    double x = double(scale + digit) / double(base);
    double value = 0.5 / double(base) + half_lead * digamma_diff(x, 1.0 / double(base));
    return DigitConstant{base, digit, pos, value, ConstantMethod::closed_form, 0.0};
}

DigitConstant digit_constant_series(long long base, long long digit, long long pos, long long cutoff) {
    check_triple(base, digit, pos);
    long long scale = pow_checked(base, pos);
    long long k_start = scale / base; // b^(i-1)
    if (cutoff < k_start) throw ParamError("series cutoff must be >= b^(pos-1)");
    // Sum ascending terms in reverse so the small ones accumulate first.
    double sum = 0.0;
    for (long long k = cutoff; k >= k_start; --k) {
        double lo = double(base) * double(k) + double(digit);
        sum += double(base) / (lo * (lo + 1.0));
    }
    double half_lead = 0.5 * double(k_start);
    double value = 0.5 / double(base) + half_lead * sum;
    double tail = half_lead / double(cutoff);
    return DigitConstant{base, digit, pos, value, ConstantMethod::truncated_series, tail};
}

double coprime_constant(long long base, long long digit, long long pos) {
    constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    return digit_constant(base, digit, pos).value / zeta2;
}

double digit_density_real(long long base, double digit, long long pos) {
    if (base < 2) throw ParamError("base must be >= 2");
    if (pos < 1) throw ParamError("position must be >= 1");
    if (digit < 0.0 || digit > double(base - 1)) throw ParamError("digit out of range");
    long long scale = pow_checked(base, pos);
    double x = (double(scale) + digit) / double(base);
    return 0.5 / double(base) + 0.5 * double(scale / base) * digamma_diff(x, 1.0 / double(base));
}

} // namespace qd
