#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace qd {

// Signed integer wide enough for every intermediate the counting kernels
// produce: with b^i * T kept below 2^62, products such as (T+1) * (b^i * T)
// stay below 2^125.
using WideInt = __int128;

std::string to_string(WideInt value);

WideInt checked_add(WideInt a, WideInt b);
WideInt checked_mul(WideInt a, WideInt b);

// Every scaled numerator b^i * n must stay below this window so that the
// floor-sum kernel never overflows 128 bits.
inline constexpr long long kWideWindow = 1LL << 62;

// b^pos; throws ParamError once the result reaches 2^62.
long long pow_checked(long long base, long long pos);

/// The problem tuple (b, r, i, T). Use make() so the invariants hold:
/// b >= 2, 0 <= r < b, i >= 1, T >= 1 and b^i * T < 2^62.
struct Params {
    long long base = 10;
    long long digit = 0;
    long long pos = 1;
    long long bound = 1;
    long long scale = 10; // b^pos, cached by make()

    static Params make(long long base, long long digit, long long pos, long long bound);
};

/// i-th base-b digit to the right of the radix point of n/m, computed as
/// floor(b^i*n/m) - b*floor(b^(i-1)*n/m) in integer arithmetic.
int digit_of_quotient(long long n, long long m, long long base, long long pos);

/// True iff m divides b^pos * n, i.e. the base-b expansion of n/m terminates
/// at or before position pos (so a second representation with trailing
/// (b-1)s exists).
bool is_digit_boundary(long long n, long long m, long long base, long long pos);

/// Exact sum_{j=0}^{count-1} floor((mul*j + add) / modulus), evaluated in
/// O(log max(mul, modulus)) by the Euclidean reduction. All arguments
/// nonnegative, modulus >= 1.
WideInt floor_sum(long long count, long long modulus, long long mul, long long add);

} // namespace qd
