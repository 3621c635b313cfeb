// qd -- command-line frontend for the quotdigits library.
//
// Exit codes: 0 success, 2 invalid parameters or usage, 3 resource-guard
// refusal, 1 anything else.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quotdigits.h"

namespace {

int status_to_exit(qd_status status) {
    switch (status) {
        case QD_OK: return 0;
        case QD_ERR_PARAM: return 2;
        case QD_ERR_RANGE: return 2;
        case QD_ERR_GUARD: return 3;
        default: return 1;
    }
}

[[noreturn]] void fail(qd_status status) {
    std::fprintf(stderr, "qd: %s: %s\n", qd_status_name(status), qd_last_error());
    std::exit(status_to_exit(status));
}

void check(qd_status status) {
    if (status != QD_OK) fail(status);
}

struct OutputOptions {
    std::string path;
    std::string dir;
    std::string format = "csv";
};

qd_format parse_format(const std::string& name) {
    if (name == "csv") return QD_FORMAT_CSV;
    if (name == "json") return QD_FORMAT_JSON;
    if (name == "svg") return QD_FORMAT_SVG;
    std::fprintf(stderr, "qd: unknown format '%s' (csv, json, svg)\n", name.c_str());
    std::exit(2);
}

std::string resolve_output(const OutputOptions& out, const std::string& stem) {
    if (!out.path.empty()) return out.path;
    std::string dir = out.dir;
    if (dir.empty()) {
        const char* env = std::getenv("QD_OUT_DIR");
        dir = env ? env : ".";
    }
    return dir + "/" + stem + "." + out.format;
}

std::string scheme_stem(const std::string& scheme) {
    std::string stem = scheme;
    for (char& c : stem)
        if (c == '-') c = '_';
    return stem;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact digit statistics of integer quotients n/m"};
    app.set_config("--config", "", "read default flag values from a key=value file");

    unsigned threads = 0;
    int64_t brute_cap = qd_brute_force_cap();
    int64_t sieve_guard = qd_sieve_guard();
    app.add_option("--threads", threads, "worker threads (0 = all hardware threads)")
        ->capture_default_str();
    app.add_option("--brute-cap", brute_cap, "largest bound the enumeration paths accept")
        ->capture_default_str();
    app.add_option("--sieve-guard", sieve_guard, "largest prime-sieve limit")
        ->capture_default_str();

    app.require_subcommand(1);
    app.fallthrough(); // let global flags appear after the subcommand

    // ---- constant ----------------------------------------------------------
    auto* cmd_constant = app.add_subcommand("constant", "limiting digit densities c(b,r;i)");
    cmd_constant->fallthrough();
    int64_t base = 10, digit = -1, pos = 1;
    cmd_constant->add_option("-b,--base", base, "number base")->required();
    cmd_constant->add_option("-r,--digit", digit, "digit (default: all digits)");
    cmd_constant->add_option("-i,--pos", pos, "digit position, 1-based")->capture_default_str();

    // ---- count -------------------------------------------------------------
    auto* cmd_count = app.add_subcommand("count", "exact pair counts");
    cmd_count->fallthrough();
    cmd_count->require_subcommand(1);
    struct CountArgs {
        int64_t base = 10, digit = 0, pos = 1, bound = 1, gcd_class = 0;
        bool no_diagonal = false;
    } count_args;
    auto add_count_variant = [&](const char* name, const char* help, bool needs_digit) {
        auto* sub = cmd_count->add_subcommand(name, help);
        sub->fallthrough();
        sub->add_option("-b,--base", count_args.base, "number base")->required();
        if (needs_digit)
            sub->add_option("-r,--digit", count_args.digit, "digit")->required();
        sub->add_option("-i,--pos", count_args.pos, "digit position")->capture_default_str();
        sub->add_option("-T,--bound", count_args.bound, "count pairs in [1,T]^2")->required();
        return sub;
    };
    auto* count_pairs_cmd = add_count_variant("pairs", "all integer pairs", true);
    auto* count_coprime_cmd = add_count_variant("coprime", "pairs with gcd(n,m)=1", true);
    auto* count_theta_cmd =
        add_count_variant("prime-weighted", "log-weighted prime pairs", true);
    auto* count_prime_cmd = add_count_variant("prime-count", "unweighted prime pairs", true);
    auto* count_boundary_cmd =
        add_count_variant("boundary", "pairs with b*{n/m} = r exactly", true);
    auto* count_half_cmd =
        add_count_variant("half-weight", "per-digit weights with boundary splitting", false);
    count_theta_cmd->add_flag("--no-diagonal", count_args.no_diagonal, "ignore pairs p = q");
    count_prime_cmd->add_flag("--no-diagonal", count_args.no_diagonal, "ignore pairs p = q");
    count_boundary_cmd->add_option("--gcd-class", count_args.gcd_class,
                                   "restrict to pairs with gcd(n,m) = d");

    // ---- histogram ----------------------------------------------------------
    auto* cmd_hist = app.add_subcommand("histogram", "per-digit histogram with c(b,r;i) overlay");
    cmd_hist->fallthrough();
    struct HistArgs {
        int64_t base = 10, pos = 1, bound = 100;
        std::string scheme = "all";
        bool no_diagonal = false;
    } hist_args;
    OutputOptions hist_out;
    cmd_hist->add_option("-b,--base", hist_args.base, "number base")->required();
    cmd_hist->add_option("-T,--bound", hist_args.bound, "pairs in [1,T]^2")->required();
    cmd_hist->add_option("-i,--pos", hist_args.pos, "digit position")->capture_default_str();
    cmd_hist
        ->add_option("--scheme", hist_args.scheme,
                     "all | coprime | half | prime-count | prime-weighted | prime-half")
        ->capture_default_str();
    cmd_hist->add_flag("--no-diagonal", hist_args.no_diagonal, "ignore pairs p = q");
    cmd_hist->add_option("-o,--output", hist_out.path, "output file");
    cmd_hist->add_option("--out-dir", hist_out.dir, "output directory (env QD_OUT_DIR)");
    cmd_hist->add_option("--format", hist_out.format, "csv | json | svg")->capture_default_str();

    // ---- sweep --------------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand("sweep", "error-term sweep over a grid of bounds");
    cmd_sweep->fallthrough();
    struct SweepArgs {
        int64_t base = 10, digit = 0, pos = 1;
        std::vector<int64_t> grid;
    } sweep_args;
    OutputOptions sweep_out;
    cmd_sweep->add_option("-b,--base", sweep_args.base, "number base")->required();
    cmd_sweep->add_option("-r,--digit", sweep_args.digit, "digit")->required();
    cmd_sweep->add_option("-i,--pos", sweep_args.pos, "digit position")->capture_default_str();
    cmd_sweep->add_option("--grid", sweep_args.grid, "ascending bounds (comma separated)")
        ->required()
        ->delimiter(',');
    cmd_sweep->add_option("-o,--output", sweep_out.path, "output file");
    cmd_sweep->add_option("--out-dir", sweep_out.dir, "output directory (env QD_OUT_DIR)");
    cmd_sweep->add_option("--format", sweep_out.format, "csv | json")->capture_default_str();

    // ---- boundary-report ------------------------------------------------------
    auto* cmd_boundary =
        app.add_subcommand("boundary-report", "growth of boundary lattice-point counts");
    cmd_boundary->fallthrough();
    struct BoundaryArgs {
        int64_t base = 10, digit = 1;
        std::vector<int64_t> grid;
    } boundary_args;
    OutputOptions boundary_out;
    cmd_boundary->add_option("-b,--base", boundary_args.base, "number base")->required();
    cmd_boundary->add_option("-r,--digit", boundary_args.digit, "digit, r >= 1")->required();
    cmd_boundary->add_option("--grid", boundary_args.grid, "ascending bounds")
        ->required()
        ->delimiter(',');
    cmd_boundary->add_option("-o,--output", boundary_out.path, "output file");
    cmd_boundary->add_option("--out-dir", boundary_out.dir, "output directory (env QD_OUT_DIR)");
    cmd_boundary->add_option("--format", boundary_out.format, "csv | json")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::exit(app.exit(e));
    } catch (const CLI::CallForAllHelp& e) {
        std::exit(app.exit(e));
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::exit(2);
    }

    qd_set_threads(threads);
    qd_set_brute_force_cap(brute_cap);
    qd_set_sieve_guard(sieve_guard);

    if (cmd_constant->parsed()) {
        if (digit >= 0) {
            double value = 0.0;
            check(qd_digit_constant(base, digit, pos, &value));
            std::printf("%.15g\n", value);
        } else {
            double sum = 0.0;
            for (int64_t r = 0; r < base; ++r) {
                double value = 0.0;
                check(qd_digit_constant(base, r, pos, &value));
                sum += value;
                std::printf("%" PRId64 " %.15g\n", r, value);
            }
            std::printf("sum %.12f\n", sum);
        }
        return 0;
    }

    if (cmd_count->parsed()) {
        const auto& a = count_args;
        if (count_pairs_cmd->parsed()) {
            int64_t count = 0;
            check(qd_count_pairs(a.base, a.digit, a.pos, a.bound, &count));
            std::printf("%" PRId64 "\n", count);
        } else if (count_coprime_cmd->parsed()) {
            int64_t count = 0;
            check(qd_count_coprime_pairs(a.base, a.digit, a.pos, a.bound, &count));
            std::printf("%" PRId64 "\n", count);
        } else if (count_theta_cmd->parsed()) {
            qd_prime_table* table = nullptr;
            check(qd_prime_table_new(a.bound < 2 ? 2 : a.bound, &table));
            double total = 0.0;
            qd_status s = qd_theta_weighted_count(table, a.base, a.digit, a.pos, a.bound,
                                                  a.no_diagonal ? 1 : 0, &total);
            qd_prime_table_free(table);
            check(s);
            std::printf("%.17g\n", total);
        } else if (count_prime_cmd->parsed()) {
            qd_prime_table* table = nullptr;
            check(qd_prime_table_new(a.bound < 2 ? 2 : a.bound, &table));
            int64_t count = 0;
            qd_status s = qd_prime_pair_count(table, a.base, a.digit, a.pos, a.bound,
                                              a.no_diagonal ? 1 : 0, &count);
            qd_prime_table_free(table);
            check(s);
            std::printf("%" PRId64 "\n", count);
        } else if (count_boundary_cmd->parsed()) {
            int64_t count = 0;
            check(qd_count_boundary(a.base, a.digit, a.pos, a.bound, a.gcd_class, &count));
            std::printf("%" PRId64 "\n", count);
        } else if (count_half_cmd->parsed()) {
            std::vector<int64_t> half_units((size_t)a.base, 0);
            check(qd_count_half_weight(a.base, a.pos, a.bound, half_units.data()));
            for (int64_t r = 0; r < a.base; ++r) {
                int64_t u = half_units[(size_t)r];
                std::printf("%" PRId64 " %" PRId64 "%s\n", r, u / 2, u % 2 ? ".5" : "");
            }
        }
        return 0;
    }

    if (cmd_hist->parsed()) {
        qd_scheme scheme;
        const std::string& name = hist_args.scheme;
        if (name == "all") scheme = QD_SCHEME_ALL_PAIRS;
        else if (name == "coprime") scheme = QD_SCHEME_COPRIME;
        else if (name == "half") scheme = QD_SCHEME_HALF_WEIGHT;
        else if (name == "prime-count") scheme = QD_SCHEME_PRIME_COUNT;
        else if (name == "prime-weighted") scheme = QD_SCHEME_PRIME_WEIGHTED;
        else if (name == "prime-half") scheme = QD_SCHEME_PRIME_HALF;
        else {
            std::fprintf(stderr, "qd: unknown scheme '%s'\n", name.c_str());
            return 2;
        }
        qd_format format = parse_format(hist_out.format);
        qd_histogram* hist = nullptr;
        check(qd_histogram_new(hist_args.bound, hist_args.base, hist_args.pos, scheme,
                               hist_args.no_diagonal ? 1 : 0, &hist));
        std::string stem = "hist_b" + std::to_string(hist_args.base) + "_T" +
                           std::to_string(hist_args.bound) + "_" + scheme_stem(name);
        std::string path = resolve_output(hist_out, stem);
        qd_status s = qd_histogram_emit(hist, format, path.c_str());
        qd_histogram_free(hist);
        check(s);
        std::printf("%s\n", path.c_str());
        return 0;
    }

    if (cmd_sweep->parsed()) {
        qd_format format = parse_format(sweep_out.format);
        qd_sweep* sweep = nullptr;
        check(qd_sweep_new(sweep_args.base, sweep_args.digit, sweep_args.pos,
                           sweep_args.grid.data(), sweep_args.grid.size(), &sweep));
        std::string stem = "sweep_b" + std::to_string(sweep_args.base) + "_r" +
                           std::to_string(sweep_args.digit) + "_i" +
                           std::to_string(sweep_args.pos);
        std::string path = resolve_output(sweep_out, stem);
        qd_status s = qd_sweep_emit(sweep, format, path.c_str());
        qd_sweep_free(sweep);
        check(s);
        std::printf("%s\n", path.c_str());
        return 0;
    }

    if (cmd_boundary->parsed()) {
        qd_format format = parse_format(boundary_out.format);
        qd_boundary_report* report = nullptr;
        check(qd_boundary_report_new(boundary_args.base, boundary_args.digit,
                                     boundary_args.grid.data(), boundary_args.grid.size(),
                                     &report));
        std::string stem = "boundary_b" + std::to_string(boundary_args.base) + "_r" +
                           std::to_string(boundary_args.digit);
        std::string path = resolve_output(boundary_out, stem);
        qd_status s = qd_boundary_report_emit(report, format, path.c_str());
        qd_boundary_report_free(report);
        check(s);
        std::printf("%s\n", path.c_str());
        return 0;
    }

    return 0;
}
