#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "constants.hpp"

namespace qd {

namespace {

// Largest integer magnitude a double (and a JSON number) carries exactly.
constexpr double kExactDoubleLimit = 9007199254740992.0; // 2^53

double to_exact_double(WideInt v, const char* what) {
    if (v > WideInt(kExactDoubleLimit) || v < -WideInt(kExactDoubleLimit))
        throw ParamError(std::string(what) + " exceeds the 2^53 exact-integer window");
    return double(v);
}

// Shortest-round-trip-ish formatting: 17 significant digits.
std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << body;
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

std::string scheme_json(const WeightScheme& s) {
    std::string j = "{\"tag\":\"";
    j += to_string(s.tag);
    j += "\",\"exclude_diagonal\":";
    j += s.exclude_diagonal ? "true" : "false";
    j += "}";
    return j;
}

} // namespace

Histogram make_histogram(long long bound, long long base, long long pos, WeightScheme scheme,
                         const RunLimits& limits) {
    Params probe = Params::make(base, 0, pos, bound); // validates the tuple
    Histogram h;
    h.base = base;
    h.pos = pos;
    h.bound = bound;
    h.scheme = scheme;
    h.bins.resize(size_t(base), 0.0);

    switch (scheme.tag) {
        case WeightTag::all_pairs:
            for (long long r = 0; r < base; ++r) {
                Params p = probe;
                p.digit = r;
                h.bins[size_t(r)] = to_exact_double(count_pairs(p, limits.threads).value,
                                                    "histogram bin");
            }
            break;
        case WeightTag::coprime:
            for (long long r = 0; r < base; ++r) {
                Params p = probe;
                p.digit = r;
                h.bins[size_t(r)] =
                    to_exact_double(count_coprime_pairs(p, limits.threads).value, "histogram bin");
            }
            break;
        case WeightTag::half_boundary: {
            auto half = count_pairs_half_weight(base, pos, bound, limits.brute_cap);
            for (long long r = 0; r < base; ++r)
                h.bins[size_t(r)] = 0.5 * to_exact_double(half[size_t(r)], "histogram bin");
            break;
        }
        case WeightTag::prime_count: {
            auto table = PrimeTable::build(std::max(bound, 2LL), limits.sieve_guard);
            for (long long r = 0; r < base; ++r) {
                Params p = probe;
                p.digit = r;
                h.bins[size_t(r)] = to_exact_double(
                    prime_pair_count(table, p, scheme.exclude_diagonal).value, "histogram bin");
            }
            break;
        }
        case WeightTag::prime_log_weights: {
            auto table = PrimeTable::build(std::max(bound, 2LL), limits.sieve_guard);
            for (long long r = 0; r < base; ++r) {
                Params p = probe;
                p.digit = r;
                h.bins[size_t(r)] = theta_weighted_count(table, p, scheme.exclude_diagonal).weighted;
            }
            break;
        }
        case WeightTag::prime_half: {
            if (bound > limits.brute_cap)
                throw GuardError("bound " + std::to_string(bound) +
                                 " exceeds the brute-force cap " + std::to_string(limits.brute_cap));
            auto table = PrimeTable::build(std::max(bound, 2LL), limits.sieve_guard);
            auto half = prime_half_weight(table, base, pos, bound, scheme.exclude_diagonal);
            for (long long r = 0; r < base; ++r)
                h.bins[size_t(r)] = 0.5 * to_exact_double(half[size_t(r)], "histogram bin");
            break;
        }
    }

    double sum = std::accumulate(h.bins.begin(), h.bins.end(), 0.0);
    h.normalized.resize(size_t(base), 0.0);
    if (sum > 0.0)
        for (size_t r = 0; r < h.bins.size(); ++r) h.normalized[r] = h.bins[r] / sum;
    h.overlay.resize(size_t(base), 0.0);
    for (long long r = 0; r < base; ++r)
        h.overlay[size_t(r)] = digit_constant(base, r, pos).value;
    return h;
}

SweepReport error_sweep(long long base, long long digit, long long pos,
                        std::span<const long long> grid, unsigned threads) {
    SweepReport report;
    report.base = base;
    report.digit = digit;
    report.pos = pos;
    long long prev = 0;
    const double c = digit_constant(base, digit, pos).value;
    for (long long bound : grid) {
        if (bound <= prev) throw ParamError("sweep grid must be strictly ascending");
        prev = bound;
        Params p = Params::make(base, digit, pos, bound);
        SweepRow row;
        row.bound = bound;
        row.phi = count_pairs(p, threads).value;
        row.c_t2 = c * double(bound) * double(bound);
        row.residual = to_exact_double(row.phi, "sweep count") - row.c_t2;
        row.scaled_residual =
            bound == 1 ? row.residual : row.residual / (double(bound) * std::log(double(bound)));
        report.rows.push_back(row);
    }
    return report;
}

BoundaryReport boundary_growth_report(long long base, long long digit,
                                      std::span<const long long> grid) {
    BoundaryReport report;
    report.base = base;
    report.digit = digit;
    long long prev = 0;
    const double class_density = double(std::gcd(base, digit)) / double(base);
    for (long long bound : grid) {
        if (bound <= prev) throw ParamError("report grid must be strictly ascending");
        prev = bound;
        BoundaryRow row;
        row.bound = bound;
        row.count = count_boundary(base, digit, 1, bound);
        const double expected = class_density * double(bound) * std::log(double(bound));
        row.ratio = expected > 0.0 ? to_exact_double(row.count, "boundary count") / expected : 0.0;
        report.rows.push_back(row);
    }
    return report;
}

namespace {

std::string histogram_csv(const Histogram& h) {
    std::string out = "digit,count,normalized,constant\n";
    for (size_t r = 0; r < h.bins.size(); ++r) {
        out += std::to_string(r);
        out += ',';
        out += fmt_real(h.bins[r]);
        out += ',';
        out += fmt_real(h.normalized[r]);
        out += ',';
        out += fmt_real(h.overlay[r]);
        out += '\n';
    }
    return out;
}

std::string histogram_json(const Histogram& h) {
    std::string out = "{\"params\":{\"base\":" + std::to_string(h.base) +
                      ",\"pos\":" + std::to_string(h.pos) +
                      ",\"bound\":" + std::to_string(h.bound) + "},\"scheme\":" +
                      scheme_json(h.scheme) + ",\"bins\":[";
    for (size_t r = 0; r < h.bins.size(); ++r) {
        if (r) out += ',';
        out += "{\"digit\":" + std::to_string(r) + ",\"count\":" + fmt_real(h.bins[r]) +
               ",\"normalized\":" + fmt_real(h.normalized[r]) +
               ",\"constant\":" + fmt_real(h.overlay[r]) + "}";
    }
    out += "]}\n";
    return out;
}

// Minimal standalone bar chart: normalized bins as bars, the continuous
// density curve as a polyline with dots at the integer digits.
std::string histogram_svg(const Histogram& h) {
    const double width = 640.0, height = 400.0;
    const double ml = 50.0, mr = 15.0, mt = 15.0, mb = 35.0;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;
    const size_t bins = h.bins.size();

    double y_top = 0.0;
    for (double v : h.normalized) y_top = std::max(y_top, v);
    for (double v : h.overlay) y_top = std::max(y_top, v);
    y_top = y_top > 0.0 ? 1.15 * y_top : 1.0;

    auto x_of = [&](double digit) { return ml + (digit + 0.5) * plot_w / double(bins); };
    auto y_of = [&](double v) { return mt + plot_h * (1.0 - v / y_top); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    const double bar_w = 0.8 * plot_w / double(bins);
    for (size_t r = 0; r < bins; ++r) {
        double x = x_of(double(r)) - bar_w / 2.0;
        double y = y_of(h.normalized[r]);
        svg << "<rect x=\"" << fmt_fixed(x, 2) << "\" y=\"" << fmt_fixed(y, 2) << "\" width=\""
            << fmt_fixed(bar_w, 2) << "\" height=\"" << fmt_fixed(mt + plot_h - y, 2)
            << "\" fill=\"#7aa6d6\" stroke=\"#3d6ca6\"/>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"#c03b2b\" stroke-width=\"1.5\" points=\"";
    const int curve_samples = 8 * int(bins - 1) + 1;
    for (int s = 0; s < curve_samples; ++s) {
        double digit = double(bins - 1) * s / double(curve_samples - 1);
        double v = digit_density_real(h.base, digit, h.pos);
        if (s) svg << " ";
        svg << fmt_fixed(x_of(digit), 2) << "," << fmt_fixed(y_of(v), 2);
    }
    svg << "\"/>\n";
    for (size_t r = 0; r < bins; ++r)
        svg << "<circle cx=\"" << fmt_fixed(x_of(double(r)), 2) << "\" cy=\""
            << fmt_fixed(y_of(h.overlay[r]), 2) << "\" r=\"3\" fill=\"#c03b2b\"/>\n";
    // axes and digit labels
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + plot_h << "\" x2=\"" << ml + plot_w
        << "\" y2=\"" << mt + plot_h << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + plot_h << "\" stroke=\"black\"/>\n";
    const size_t label_step = bins > 20 ? (bins + 19) / 20 : 1;
    for (size_t r = 0; r < bins; r += label_step)
        svg << "<text x=\"" << fmt_fixed(x_of(double(r)), 2) << "\" y=\"" << height - 12.0
            << "\" font-size=\"11\" text-anchor=\"middle\">" << r << "</text>\n";
    svg << "<text x=\"" << ml - 8.0 << "\" y=\"" << mt + 4.0
        << "\" font-size=\"11\" text-anchor=\"end\">" << fmt_fixed(y_top, 3) << "</text>\n"
        << "<text x=\"" << ml - 8.0 << "\" y=\"" << mt + plot_h
        << "\" font-size=\"11\" text-anchor=\"end\">0</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string sweep_csv(const SweepReport& rep) {
    std::string out = "T,phi,c_T2,residual,scaled_residual\n";
    for (const auto& row : rep.rows) {
        out += std::to_string(row.bound);
        out += ',';
        out += qd::to_string(row.phi);
        out += ',';
        out += fmt_real(row.c_t2);
        out += ',';
        out += fmt_real(row.residual);
        out += ',';
        out += fmt_real(row.scaled_residual);
        out += '\n';
    }
    return out;
}

std::string sweep_json(const SweepReport& rep) {
    std::string out = "{\"params\":{\"base\":" + std::to_string(rep.base) +
                      ",\"digit\":" + std::to_string(rep.digit) +
                      ",\"pos\":" + std::to_string(rep.pos) + "},\"rows\":[";
    bool first = true;
    for (const auto& row : rep.rows) {
        if (!first) out += ',';
        first = false;
        to_exact_double(row.phi, "sweep count"); // keep JSON numbers exact
        out += "{\"T\":" + std::to_string(row.bound) + ",\"phi\":" + qd::to_string(row.phi) +
               ",\"c_T2\":" + fmt_real(row.c_t2) + ",\"residual\":" + fmt_real(row.residual) +
               ",\"scaled_residual\":" + fmt_real(row.scaled_residual) + "}";
    }
    out += "]}\n";
    return out;
}

std::string boundary_csv(const BoundaryReport& rep) {
    std::string out = "T,count,ratio\n";
    for (const auto& row : rep.rows) {
        out += std::to_string(row.bound);
        out += ',';
        out += qd::to_string(row.count);
        out += ',';
        out += fmt_real(row.ratio);
        out += '\n';
    }
    return out;
}

std::string boundary_json(const BoundaryReport& rep) {
    std::string out = "{\"params\":{\"base\":" + std::to_string(rep.base) +
                      ",\"digit\":" + std::to_string(rep.digit) + "},\"rows\":[";
    bool first = true;
    for (const auto& row : rep.rows) {
        if (!first) out += ',';
        first = false;
        to_exact_double(row.count, "boundary count");
        out += "{\"T\":" + std::to_string(row.bound) + ",\"count\":" + qd::to_string(row.count) +
               ",\"ratio\":" + fmt_real(row.ratio) + "}";
    }
    out += "]}\n";
    return out;
}

} // namespace

void emit(const Histogram& hist, EmitFormat format, const std::filesystem::path& path) {
    switch (format) {
        case EmitFormat::csv: write_file(path, histogram_csv(hist)); return;
        case EmitFormat::json: write_file(path, histogram_json(hist)); return;
        case EmitFormat::svg: write_file(path, histogram_svg(hist)); return;
    }
    throw ParamError("unknown emit format");
}

void emit(const SweepReport& report, EmitFormat format, const std::filesystem::path& path) {
    switch (format) {
        case EmitFormat::csv: write_file(path, sweep_csv(report)); return;
        case EmitFormat::json: write_file(path, sweep_json(report)); return;
        case EmitFormat::svg: throw ParamError("svg output is only available for histograms");
    }
    throw ParamError("unknown emit format");
}

void emit(const BoundaryReport& report, EmitFormat format, const std::filesystem::path& path) {
    switch (format) {
        case EmitFormat::csv: write_file(path, boundary_csv(report)); return;
        case EmitFormat::json: write_file(path, boundary_json(report)); return;
        case EmitFormat::svg: throw ParamError("svg output is only available for histograms");
    }
    throw ParamError("unknown emit format");
}

} // namespace qd
