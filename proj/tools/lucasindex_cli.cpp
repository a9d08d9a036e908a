// Command-line surface: batch subcommands over the library.
//
// Exit codes: 0 success, 1 unexpected error, 2 zero coefficient,
// 3 square discriminant, 4 degenerate sequence, 5 unsupported field,
// 6 resource limit, 7 bad usage/contract.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "lucasindex/density.hpp"
#include "lucasindex/empirical.hpp"
#include "lucasindex/io.hpp"

using namespace lucasindex;

namespace {

struct Options {
    long long a1 = 0;
    long long a2 = 0;
    uint64_t t_max = 40;
    uint64_t t = 1;
    uint64_t terms = 1000;
    uint64_t primes = 100000;
    unsigned workers = std::thread::hardware_concurrency();
    std::string format = "text";
    std::string out;
};

void write_output(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + opt.out);
    f << payload;
}

uint64_t sieve_limit_for(uint64_t n_primes) {
    if (const char* env = std::getenv("LUCAS_SIEVE_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return v;
        throw ContractViolation("LUCAS_SIEVE_LIMIT must be a positive integer");
    }
    return nth_prime_upper_bound(n_primes) + 2;
}

int exit_code_for(const ValidationError& e) {
    switch (e.reason) {
        case ValidationError::Reason::ZeroCoefficient: return 2;
        case ValidationError::Reason::SquareDiscriminant: return 3;
        case ValidationError::Reason::Degenerate: return 4;
        case ValidationError::Reason::UnsupportedField: return 5;
    }
    return 1;
}

void add_common(CLI::App* cmd, Options& opt, bool with_tmax = false) {
    cmd->add_option("--a1", opt.a1, "first coefficient")->required();
    cmd->add_option("--a2", opt.a2, "second coefficient")->required();
    cmd->add_option("--format", opt.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", opt.out, "write output to a file");
    if (with_tmax) cmd->add_option("--t-max", opt.t_max, "largest index t");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"density of the index of appearance in Lucas sequences"};
    app.require_subcommand(1);
    Options opt;

    auto* cmd_decompose = app.add_subcommand(
        "decompose", "power-free decomposition of the root ratio and chi terms");
    add_common(cmd_decompose, opt);

    auto* cmd_gtable =
        app.add_subcommand("gtable", "minimal-period table of G_u");
    add_common(cmd_gtable, opt);

    auto* cmd_conditions = app.add_subcommand(
        "conditions", "diagnostic table of (n, case, #C_n, #C_n/[K_n:Q])");
    add_common(cmd_conditions, opt, true);

    auto* cmd_density =
        app.add_subcommand("density", "closed-form delta table for t = 1..t-max");
    add_common(cmd_density, opt, true);

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "truncated-series evaluation of delta(t)");
    add_common(cmd_oracle, opt);
    cmd_oracle->add_option("--t", opt.t, "index t");
    cmd_oracle->add_option("--terms", opt.terms, "number of series terms");

    auto* cmd_compare = app.add_subcommand(
        "compare", "closed form vs empirical scan over the first primes");
    add_common(cmd_compare, opt, true);
    cmd_compare->add_option("--primes", opt.primes, "number of primes to scan");
    cmd_compare->add_option("--workers", opt.workers, "scan worker threads");

    auto* cmd_scan =
        app.add_subcommand("scan", "raw tally of the index of appearance");
    add_common(cmd_scan, opt);
    cmd_scan->add_option("--primes", opt.primes, "number of primes to scan");
    cmd_scan->add_option("--workers", opt.workers, "scan worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        auto prm = LucasParams::analyze(opt.a1, opt.a2);
        OutputFormat fmt = parse_format(opt.format);
        std::string payload;

        if (cmd_decompose->parsed()) {
            auto prof = DensityProfile::build(prm);
            payload = fmt == OutputFormat::Json  ? decompose_json(prof)
                      : fmt == OutputFormat::Csv ? decompose_csv(prof)
                                                 : decompose_text(prof);
        } else if (cmd_gtable->parsed()) {
            auto prof = DensityProfile::build(prm);
            payload = fmt == OutputFormat::Json  ? gtable_json(prof)
                      : fmt == OutputFormat::Csv ? gtable_csv(prof)
                                                 : gtable_text(prof);
        } else if (cmd_conditions->parsed()) {
            prm.validate();
            auto ctx =
                ConditionContext::build(gamma_decompose(prm.gamma()), prm.field());
            uint64_t n_max = cmd_conditions->count("--t-max")
                                 ? opt.t_max
                                 : ctx.chi_period_bound();
            payload = conditions_csv(ctx, n_max);
        } else if (cmd_density->parsed()) {
            auto prof = DensityProfile::build(prm);
            payload = fmt == OutputFormat::Json  ? density_json(prof, opt.t_max)
                      : fmt == OutputFormat::Csv ? density_csv(prof, opt.t_max)
                                                 : density_text(prof, opt.t_max);
        } else if (cmd_oracle->parsed()) {
            prm.validate();
            auto ctx =
                ConditionContext::build(gamma_decompose(prm.gamma()), prm.field());
            auto sv = delta_series(opt.t, opt.terms, ctx);
            auto prof = DensityProfile::build(prm);
            payload = "t = " + std::to_string(opt.t) +
                      ", series value = " + format_fixed(sv.value, 6) +
                      " +- " + format_fixed(sv.remainder_bound, 6) +
                      " (closed form " +
                      format_fixed(prof.delta(opt.t).value, 6) + ")\n";
        } else if (cmd_compare->parsed()) {
            auto prof = DensityProfile::build(prm);
            SpfTable table(sieve_limit_for(opt.primes));
            auto emp = scan(prm, opt.primes, opt.workers, table);
            auto rows = compare(prof, emp, opt.t_max);
            payload = fmt == OutputFormat::Json  ? compare_json(rows, emp)
                      : fmt == OutputFormat::Csv ? compare_csv(rows)
                                                 : compare_text(rows, emp);
        } else if (cmd_scan->parsed()) {
            prm.validate();
            SpfTable table(sieve_limit_for(opt.primes));
            auto emp = scan(prm, opt.primes, opt.workers, table);
            payload = fmt == OutputFormat::Json  ? empirical_json(emp)
                      : fmt == OutputFormat::Csv ? empirical_csv(emp)
                                                 : empirical_text(emp);
        }

        write_output(opt, payload);
        return 0;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    } catch (const ResourceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 6;
    } catch (const ContractViolation& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 7;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
