#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "prime_variant.hpp"

namespace qd {

/// Per-digit counts with normalization and the limiting-constant overlay.
struct Histogram {
    long long base = 0;
    long long pos = 0;
    long long bound = 0;
    WeightScheme scheme;
    std::vector<double> bins;       // exact counts; half-integers for the half-weight schemes
    std::vector<double> normalized; // bins / sum(bins)
    std::vector<double> overlay;    // c(b, r; i) per digit
};

struct RunLimits {
    long long brute_cap = kDefaultBruteCap;
    long long sieve_guard = kDefaultSieveGuard;
    unsigned threads = 1;
};

Histogram make_histogram(long long bound, long long base, long long pos, WeightScheme scheme,
                         const RunLimits& limits = {});

/// One row of an error-term sweep.
struct SweepRow {
    long long bound = 0;
    WideInt phi = 0;
    double c_t2 = 0.0;            // c(b,r;i) * T^2
    double residual = 0.0;        // phi - c_t2
    double scaled_residual = 0.0; // residual / (T ln T)
};

struct SweepReport {
    long long base = 0;
    long long digit = 0;
    long long pos = 0;
    std::vector<SweepRow> rows;
};

SweepReport error_sweep(long long base, long long digit, long long pos,
                        std::span<const long long> grid, unsigned threads = 1);

struct BoundaryRow {
    long long bound = 0;
    WideInt count = 0;
    double ratio = 0.0; // count / (((b,r)/b) * T * ln T)
};

struct BoundaryReport {
    long long base = 0;
    long long digit = 0;
    std::vector<BoundaryRow> rows;
};

BoundaryReport boundary_growth_report(long long base, long long digit,
                                      std::span<const long long> grid);

enum class EmitFormat { csv, json, svg };

/// Deterministic byte output for csv/json; svg is available for histograms.
void emit(const Histogram& hist, EmitFormat format, const std::filesystem::path& path);
void emit(const SweepReport& report, EmitFormat format, const std::filesystem::path& path);
void emit(const BoundaryReport& report, EmitFormat format, const std::filesystem::path& path);

} // namespace qd
