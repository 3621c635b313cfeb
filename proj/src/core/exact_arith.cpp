#include "exact_arith.hpp"

#include <utility>

namespace qd {

namespace {

using UWide = unsigned __int128;

[[noreturn]] void overflow(const char* where) {
    throw ParamError(std::string(where) + ": exact result overflows the wide-integer range");
}

UWide add_u(UWide a, UWide b, const char* where) {
    UWide r;
    if (__builtin_add_overflow(a, b, &r)) overflow(where);
    return r;
}

UWide mul_u(UWide a, UWide b, const char* where) {
    UWide r;
    if (__builtin_mul_overflow(a, b, &r)) overflow(where);
    return r;
}

} // namespace

std::string to_string(WideInt value) {
    if (value == 0) return "0";
    bool neg = value < 0;
    UWide v = neg ? UWide(-(value + 1)) + 1 : UWide(value);
    char buf[48];
    int p = sizeof buf;
    while (v) {
        buf[--p] = char('0' + int(v % 10));
        v /= 10;
    }
    std::string out = neg ? "-" : "";
    out.append(buf + p, buf + sizeof buf);
    return out;
}

WideInt checked_add(WideInt a, WideInt b) {
    WideInt r;
    if (__builtin_add_overflow(a, b, &r)) overflow("checked_add");
    return r;
}

WideInt checked_mul(WideInt a, WideInt b) {
    WideInt r;
    if (__builtin_mul_overflow(a, b, &r)) overflow("checked_mul");
    return r;
}

long long pow_checked(long long base, long long pos) {
    if (base < 2) throw ParamError("base must be >= 2");
    if (pos < 0) throw ParamError("position must be >= 0");
    long long result = 1;
    for (long long e = 0; e < pos; ++e) {
        if (result >= kWideWindow / base + 1 || result * base >= kWideWindow)
            throw ParamError("base^pos reaches the 62-bit window");
        result *= base;
    }
    return result;
}

Params Params::make(long long base, long long digit, long long pos, long long bound) {
    if (base < 2) throw ParamError("base must be >= 2");
    if (digit < 0 || digit >= base) throw ParamError("digit must lie in [0, base-1]");
    if (pos < 1) throw ParamError("position must be >= 1");
    if (bound < 1) throw ParamError("bound must be >= 1");
    long long scale = pow_checked(base, pos);
    if (bound > (kWideWindow - 1) / scale)
        throw ParamError("base^pos * bound reaches the 62-bit window; shrink bound or position");
    return Params{base, digit, pos, bound, scale};
}

namespace {

// Shared validation for the raw-argument digit kernels.
long long scaled_numerator(long long n, long long m, long long base, long long pos) {
    if (n < 1 || m < 1) throw ParamError("numerator and denominator must be >= 1");
    if (pos < 1) throw ParamError("position must be >= 1");
    long long scale = pow_checked(base, pos);
    if (n > (kWideWindow - 1) / scale)
        throw ParamError("base^pos * n reaches the 62-bit window");
    return scale * n;
}

} // namespace

int digit_of_quotient(long long n, long long m, long long base, long long pos) {
    // floor(b^i x) - b*floor(b^(i-1) x) == floor(b^i x) mod b for x = n/m.
    unsigned long long t = (unsigned long long)scaled_numerator(n, m, base, pos);
    return int((t / (unsigned long long)m) % (unsigned long long)base);
}

bool is_digit_boundary(long long n, long long m, long long base, long long pos) {
    unsigned long long t = (unsigned long long)scaled_numerator(n, m, base, pos);
    return t % (unsigned long long)m == 0;
}

WideInt floor_sum(long long count, long long modulus, long long mul, long long add) {
    if (count < 0 || mul < 0 || add < 0) throw ParamError("floor_sum: arguments must be nonnegative");
    if (modulus < 1) throw ParamError("floor_sum: modulus must be >= 1");

    UWide n = UWide(count), m = UWide(modulus), a = UWide(mul), b = UWide(add);
    UWide acc = 0;
    // Euclidean reduction: strip whole multiples of m out of a and b, then
    // swap the roles of slope and modulus, exactly as in the gcd algorithm.
    while (n > 0) {
        if (a >= m) {
            UWide tri = (n % 2 == 0) ? n / 2 * (n - 1) : n * ((n - 1) / 2);
            acc = add_u(acc, mul_u(tri, a / m, "floor_sum"), "floor_sum");
            a %= m;
        }
        if (b >= m) {
            acc = add_u(acc, mul_u(n, b / m, "floor_sum"), "floor_sum");
            b %= m;
        }
        UWide y_max = add_u(mul_u(a, n, "floor_sum"), b, "floor_sum");
        if (y_max < m) break;
        n = y_max / m;
        b = y_max % m;
        std::swap(m, a);
    }
    if (acc >> 127) overflow("floor_sum");
    return WideInt(acc);
}

} // namespace qd
